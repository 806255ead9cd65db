#pragma once

// Convex-geometric Demazure chains. A chain processes the letters of a word
// left to right; at step k the tracked point set is fibered along the color
// i_k, every fiber must be an integer box, and the box is stretched in the
// coordinate of position k by a per-fiber amount determined by the linear
// functional l_i and the box bounds. Two coordinate models are provided:
//
//  * the crystal model tracks embedding coordinates (integers >= 0, expansion
//    downward), starting from the extremal string of a dominant weight;
//  * the scaled model tracks an arbitrary rational start vector at the least
//    common denominator scale (expansion upward), matching the orientation in
//    which chain data is usually quoted.

#include <optional>
#include <string>
#include <vector>

#include "nz/polytope.hpp"
#include "nz/rootdata.hpp"

namespace nz {

struct LambdaData {
    Weight lambda;
    QVec lambda_hat;             // lambda = sum_i lambda_hat[i] * d_i * alpha_i, re-verified
    std::vector<long> x_vector;  // embedding string of the lowest element
    QVec hat_by_pos;             // lambda_hat of the color at each position
    QVec a_lambda;               // -x_vector + hat_by_pos, the chain's starting point
};

LambdaData lambda_data(const RootDatum& datum, const std::vector<int>& word,
                       const Weight& lambda);

// l_i(a) = -sum over positions s of other colors of c_{i, i_s} a_s.
Q l_functional(const RootDatum& datum, const std::vector<int>& word, int color, const QVec& a);
long long l_functional(const RootDatum& datum, const std::vector<int>& word, int color,
                       const std::vector<long long>& a);

struct ChainStep {
    int k = 0;      // 1-based position just processed
    int color = 0;
    long long fibers_processed = 0;
    long long bound_min = 0;         // smallest fiber expansion amount
    long long points_before = 0;
    long long points_after = 0;
    bool box_identities_ok = true;   // post-step fiber bounds match the formula
    bool convex_on_grid = true;      // hull holds no lattice points beyond the set
    RationalPolytope hull;           // hull of the tracked set, model coordinates
    std::vector<std::vector<long long>> points;  // tracked set after the step
};

struct ChainResult {
    bool completed = false;
    int halt_step = 0;                    // 1-based failing step, 0 when completed
    std::string halt_reason;              // "non-box fiber" or "virtual"
    std::optional<LatticeFiber> witness;  // offending fiber
    long long witness_bound = 0;          // its expansion amount when virtual
    long scale = 1;                       // tracked coordinates are scale * model
    std::vector<ChainStep> steps;         // one entry per completed step
    std::vector<LatticeFiber> final_fibers;  // box decomposition of the final set
                                             // along the last color, filled only
                                             // with store_points off
};

// Crystal-coordinate chain for a dominant weight. The reported polytope of
// step k is reflect_translate(steps[k-1].hull, hat_by_pos). With
// per_step_hulls off the steps keep empty hulls and skip the grid-convexity
// check; callers that can reconstruct the hulls more cheaply do so. With
// store_points off the steps keep only counts and flags, the last step is
// never materialized point by point, and the final set is reported as its
// fiber boxes instead; the box bookkeeping runs from streamed rows either way.
ChainResult run_chain_crystal_model(const RootDatum& datum, const std::vector<int>& word,
                                    const Weight& lambda, bool per_step_hulls = true,
                                    bool store_points = true);

// Rational-start chain in the quoted orientation, tracked at the least common
// denominator of the start vector.
ChainResult run_chain_scaled(const RootDatum& datum, const std::vector<int>& word,
                             const QVec& a_start, bool per_step_hulls = true,
                             bool store_points = true);

}  // namespace nz
