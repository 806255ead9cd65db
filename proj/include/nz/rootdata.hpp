#pragma once

// Finite-type root data: Cartan matrices, Weyl group action on weights,
// reduced-word validation, per-color indexing of words, and the Weyl
// dimension formula (used throughout as an independent cardinality oracle).

#include <optional>
#include <string>
#include <vector>

#include "nz/rational.hpp"

namespace nz {

enum class LieType { A, B, C, D, E, F, G };

char lie_type_char(LieType t);

// Weights are stored in fundamental-weight coordinates: lambda[i] = <lambda, h_{i+1}>.
using Weight = std::vector<long>;

struct RootDatum {
    LieType type;
    int rank;
    // cartan[i][j] = <alpha_{j+1}, h_{i+1}>; alpha_j in fundamental-weight
    // coordinates is the j-th column.
    std::vector<std::vector<long>> cartan;
    // Minimal positive symmetrizers: d[i] * cartan[i][j] == d[j] * cartan[j][i].
    std::vector<long> symmetrizer;
    // Positive roots / coroots in simple (co)root coordinates.
    std::vector<std::vector<long>> positive_roots;
    std::vector<std::vector<long>> positive_coroots;
    bool g2_swapped = false;

    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
};

// Builds the datum. Valid ranks: A n>=1, B n>=2, C n>=2, D n>=3, E 6..8, F 4, G 2.
// g2_swapped transposes the off-diagonal Cartan pair of G2.
RootDatum make_root_datum(LieType type, int rank, bool g2_swapped = false);

// Parses "A2", "G2", ... Throws std::invalid_argument on bad input.
std::pair<LieType, int> parse_type_string(const std::string& s);

bool is_dominant(const Weight& w);
bool is_regular_dominant(const Weight& w);
Weight rho(const RootDatum& datum);

Weight add(const Weight& a, const Weight& b);
Weight scale(long c, const Weight& a);

// s_i(lambda), 1-based color i.
Weight simple_reflection(const RootDatum& datum, int i, const Weight& lambda);

// Applies the letters as reflections with the rightmost letter acting first:
// weyl_act(datum, (i_1..i_m), lambda) = s_{i_1} ... s_{i_m} (lambda).
Weight weyl_act(const RootDatum& datum, const std::vector<int>& letters, const Weight& lambda);

// True iff the word (1-based letters) is reduced: no prefix may shorten, i.e.
// w_{k-1}(alpha_{i_k}) must stay positive at every step.
bool is_reduced_word(const RootDatum& datum, const std::vector<int>& word);

// Reduced and of length |Phi^+|, hence a word for the longest element.
bool is_longest_word(const RootDatum& datum, const std::vector<int>& word);

// Per-color occurrence bookkeeping of a word.
struct WordIndexing {
    int n = 0;                                   // number of colors
    std::vector<int> d;                          // d[i-1] = #occurrences of color i
    std::vector<std::vector<int>> positions;     // positions[i-1] = 1-based positions of color i, increasing
    std::vector<int> m_of;                       // m_of[k-1] = occurrence rank of position k within its color
};

WordIndexing word_indexing(const std::vector<int>& word, int n);

// dim V(lambda) by the Weyl dimension formula (exact). Requires dominant lambda.
Z weyl_dim(const RootDatum& datum, const Weight& lambda);

}  // namespace nz
