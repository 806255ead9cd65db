#pragma once

// Highest-weight crystals realized inside the semi-infinite tensor model:
// an element is the coordinate string (a_1..a_N) of its image under the
// word-driven embedding, acted on by the Kashiwara operators through the
// tensor rule against the one-element weight crystal.
//
// Indexing convention used throughout: the tail-model index k runs opposite
// to the embedding order, position m of (a_1..a_N) sits at tail index
// N - m + 1, and a fixed-length all-zero buffer extends the tail. A runtime
// assertion fires if an operator ever touches a buffer coordinate; for
// elements of the embedded image this is impossible.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nz/rootdata.hpp"

namespace nz {

using ElementVec = std::vector<int>;  // embedding order, length N

struct CapExceededError : std::runtime_error {
    Z estimate;
    explicit CapExceededError(const std::string& msg, Z est)
        : std::runtime_error(msg), estimate(std::move(est)) {}
};

struct CrystalContext {
    RootDatum datum;
    std::vector<int> word;  // 1-based colors, length N
    Weight lambda;
    WordIndexing idx;
    int N = 0;
    int buffer_len = 0;                // 2 * rank
    std::vector<int> z_colors;         // color at tail index t+1, t = 0..N+buffer-1

    CrystalContext(RootDatum d, std::vector<int> w, Weight lam);

    int n_colors() const { return datum.rank; }

    // sigma at tail index t (1-based, 1..N+buffer).
    long sigma_tail(const ElementVec& a, int t) const;
    // sigma addressed by embedding position m (converted internally); buffer
    // positions N+1..N+buffer are accepted and evaluate on zero coordinates.
    long sigma(const ElementVec& a, int m) const;

    // max of sigma over tail slots of color i (always >= 0 thanks to the buffer).
    long sigma_max(const ElementVec& a, int i) const;

    Weight weight_of_string(const ElementVec& a) const;  // -sum a_m alpha_{i_m}
    Weight weight(const ElementVec& a) const;            // lambda + weight_of_string

    long epsilon(const ElementVec& a, int i) const;
    long phi(const ElementVec& a, int i) const;

    std::optional<ElementVec> e_tilde(const ElementVec& a, int i) const;
    std::optional<ElementVec> f_tilde(const ElementVec& a, int i) const;
};

struct CrystalGraph {
    CrystalContext ctx;
    std::vector<ElementVec> elements;           // sorted lexicographically
    std::vector<std::vector<int>> f_edge;       // f_edge[e][i-1] = target index or -1
    std::vector<std::vector<int>> e_edge;       // inverse edges
    int highest = -1;                           // index of the zero string
    std::vector<long> x_vector;                 // extremal coordinate string of w_0

    int index_of(const ElementVec& a) const;

    explicit CrystalGraph(CrystalContext c) : ctx(std::move(c)) {}

private:
    friend CrystalGraph generate_crystal(const RootDatum&, const std::vector<int>&,
                                         const Weight&, long);
    std::unordered_map<ElementVec, int, VecHash> index_;
};

// BFS closure of the highest element under the lowering operators.
// Preconditions: longest word, dominant lambda. The Weyl dimension estimate is
// checked against the cap before any enumeration starts.
CrystalGraph generate_crystal(const RootDatum& datum, const std::vector<int>& word,
                              const Weight& lambda, long cap = 200000);

// Coordinate string of the extremal element of weight w_{>=k} lambda:
// zero before position k, x_l = -<w_{>=l} lambda, h_{i_l}> from k on.
std::vector<long> extremal_string(const RootDatum& datum, const std::vector<int>& word,
                                  const Weight& lambda, int k);

// Indices of the opposite Demazure subset at stage k (coordinates pinned to the
// extremal string from position k on). k = 1 gives the lowest element alone,
// k = N + 1 the whole crystal.
std::vector<int> opposite_demazure(const CrystalGraph& graph, int k);

// Indices of the Demazure subset generated from the highest element by the
// lowering monomials along the given reduced prefix.
std::vector<int> demazure_crystal(const CrystalGraph& graph, const std::vector<int>& prefix);

// Formal character: weight -> multiplicity.
using CharacterPolynomial = std::map<Weight, long long>;

CharacterPolynomial character(const CrystalGraph& graph, const std::vector<int>& indices);
CharacterPolynomial character_all(const CrystalGraph& graph);

// One divided-difference step, expanded monomial-by-monomial from the defining
// fraction (e^mu - e^{s_i(mu)+alpha_i}) / (1 - e^{alpha_i}):
//   <mu,h_i> <= 0 : the raising string e^mu + e^{mu+alpha_i} + ... + e^{s_i(mu)}
//   <mu,h_i> == 1 : zero
//   <mu,h_i> >= 2 : minus the interior string e^{mu-alpha_i} + ... + e^{s_i(mu)+alpha_i}
CharacterPolynomial char_demazure(const CharacterPolynomial& chi, const RootDatum& datum,
                                  int i);

// Grouping of a crystal by the coordinates away from one color.
struct CrystalFiber {
    std::vector<int> base;      // values at positions of other colors, in position order
    std::vector<int> indices;   // member element indices
    std::vector<long> mu, nu;   // componentwise bounds of the color-i block
    bool is_box = false;        // true iff the members fill the integer box exactly
};

std::vector<CrystalFiber> crystal_fibers(const CrystalGraph& graph, int i);

// Checks that one fiber is an integer box and that the map reading off the
// color-i coordinates intertwines the color-i operators with the box tensor
// of strings (lengths nu_l - mu_l). Returns an empty string on success and a
// diagnostic otherwise.
std::string check_fiber_string_iso(const CrystalGraph& graph, int i, const CrystalFiber& fiber);

}  // namespace nz
