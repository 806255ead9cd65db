#pragma once

// Exact rational polytopes with both representations: irredundant vertex list
// and facet halfspaces (plus explicit affine-hull equations when the polytope
// is lower-dimensional). Halfspace convention: <normal, x> >= -offset with a
// primitive integer normal; equations read <normal, x> = -offset.

#include <optional>
#include <string>
#include <vector>

#include "nz/rational.hpp"
#include "nz/rootdata.hpp"

namespace nz {

struct Halfspace {
    ZVec normal;
    Q offset;
};

struct RationalPolytope {
    int ambient_dim = 0;
    int affine_dim = 0;
    std::vector<QVec> vertices;       // lexicographically sorted
    std::vector<Halfspace> facets;    // sorted by (normal, offset)
    std::vector<Halfspace> equations; // canonical reduced basis, sorted

    bool contains(const QVec& x) const;
};

// Hull of a finite point set; throws on an empty input.
RationalPolytope convex_hull(const std::vector<QVec>& points);
RationalPolytope convex_hull_lattice(const std::vector<std::vector<long long>>& points);

// Equality as convex bodies (vertex sets are canonical).
bool equal_polytopes(const RationalPolytope& a, const RationalPolytope& b);

RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b);

// Scales by c >= 0 about the origin.
RationalPolytope dilate(const RationalPolytope& p, const Q& c);

// The reflected translate -P + t.
RationalPolytope reflect_translate(const RationalPolytope& p, const QVec& t);

std::vector<ZVec> lattice_points(const RationalPolytope& p);
std::vector<ZVec> interior_lattice_points(const RationalPolytope& p);

bool is_lattice_polytope(const RationalPolytope& p);

struct ReflexiveReport {
    bool reflexive = false;
    std::string diagnostic;
    ZVec interior_point;
};

// Requires a full-dimensional lattice polytope (project first if degenerate).
ReflexiveReport is_reflexive(const RationalPolytope& p);

// Re-coordinatizes a degenerate lattice polytope onto Z^{affine_dim} by a
// lattice-preserving affine map (kernel-basis columns of a unimodular
// transform). Full-dimensional input is returned unchanged.
RationalPolytope project_to_affine_hull(const RationalPolytope& p);

// True iff the complete fans of facet-normal cones agree. Requires both
// polytopes full-dimensional in the same ambient space.
bool normal_fan_equal(const RationalPolytope& a, const RationalPolytope& b);

// --- fibering along the slots of one color of a word ---

struct LatticeFiber {
    std::vector<long long> base;          // complement coordinates, position order
    std::vector<long long> mu, nu;        // componentwise block bounds
    long long count = 0;                  // members seen
    bool is_box = false;                  // count fills the box exactly
    std::vector<std::vector<long long>> members_block;  // kept only for failures
};

struct FiberExtraction {
    bool all_boxes = true;
    std::vector<LatticeFiber> fibers;     // sorted by base
    int witness = -1;                     // index of first non-box fiber
};

// Groups integer points by the coordinates away from color i and checks each
// group against its bounding box.
FiberExtraction extract_fibers(const std::vector<std::vector<long long>>& points,
                               const std::vector<int>& word, int color);

// Polytope variant at an integer resolution: fibers of the lattice points of
// dilate(p, resolution), reported in the scaled coordinates.
FiberExtraction extract_fibers(const RationalPolytope& p, const std::vector<int>& word,
                               int color, long resolution);

struct ParapolytopeCheck {
    bool consistent = true;   // no refutation up to max_scale
    long failing_scale = 0;
    int failing_color = 0;
    std::optional<LatticeFiber> witness;
};

// Refutation-only test: scans lattice fibers of dilations m = 1..max_scale for
// every color. A failure disproves the box-fiber property; success is
// evidence, not proof.
ParapolytopeCheck check_parapolytope(const RationalPolytope& p, const std::vector<int>& word,
                                     long max_scale = 4);

// --- the embedded-crystal hull and its scaling certificate ---

struct NzPolytopeResult {
    RationalPolytope polytope;
    bool stabilized = true;   // P_1 == (1/m) P_m for all checked m
    int checked_m = 1;
};

// Hull of the embedded crystal of lambda; for m = 2..stabilization_m the hull
// of the embedded crystal of m*lambda is compared against the dilation. If a
// comparison fails, the largest-scale hull is returned flagged approximation.
NzPolytopeResult nz_polytope(const RootDatum& datum, const std::vector<int>& word,
                             const Weight& lambda, int stabilization_m = 2,
                             long cap = 200000);

// Vertex enumeration for a bounded inequality system <n_r, x> >= -o_r.
// Throws std::domain_error on unbounded or empty systems.
RationalPolytope polytope_from_inequalities(const std::vector<Halfspace>& ineqs, int dim);

}  // namespace nz
