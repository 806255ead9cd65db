#include <algorithm>

#include "doctest.h"
#include "nz/crystal.hpp"
#include "nz/demazure.hpp"
#include "nz/oracles.hpp"

using namespace nz;

namespace {

QVec qv3(const Q& a, const Q& b, const Q& c) { return {a, b, c}; }

}  // namespace

TEST_CASE("lambda data on a rank-2 word") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    std::vector<int> word = {1, 2, 1};
    LambdaData ld = lambda_data(a2, word, {1, 1});
    CHECK(ld.lambda == Weight{1, 1});
    // lambda = sum_i lambda_hat[i] d_i alpha_i: (1/2)*2*a1 + 1*1*a2 = (1,1).
    CHECK(ld.lambda_hat == QVec{Q(1, 2), Q(1)});
    CHECK(ld.x_vector == std::vector<long>{1, 2, 1});
    CHECK(ld.hat_by_pos == qv3(Q(1, 2), Q(1), Q(1, 2)));
    CHECK(ld.a_lambda == qv3(Q(-1, 2), Q(-1), Q(-1, 2)));

    LambdaData l20 = lambda_data(a2, word, {2, 0});
    CHECK(l20.x_vector == std::vector<long>{0, 2, 2});
    CHECK(l20.lambda_hat == QVec{Q(2, 3), Q(2, 3)});
}

TEST_CASE("l functionals drop the acting color") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    std::vector<int> word = {1, 2, 1};
    // l_1(a) = -c_{1,2} a_2 = a_2; l_2(a) = -c_{2,1}(a_1 + a_3) = a_1 + a_3.
    CHECK(l_functional(a2, word, 1, qv3(Q(5), Q(7), Q(11))) == Q(7));
    CHECK(l_functional(a2, word, 2, qv3(Q(5), Q(7), Q(11))) == Q(16));
    std::vector<long long> a = {5, 7, 11};
    CHECK(l_functional(a2, word, 1, a) == 7);
    CHECK(l_functional(a2, word, 2, a) == 16);
}

TEST_CASE("crystal-model chain on a rank-2 regular weight") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    std::vector<int> word = {1, 2, 1};
    ChainResult r = run_chain_crystal_model(a2, word, {1, 1});
    REQUIRE(r.completed);
    CHECK(r.scale == 1);
    REQUIRE(r.steps.size() == 3);
    CHECK(r.steps[0].points_after == 2);
    CHECK(r.steps[1].points_after == 5);
    CHECK(r.steps[2].points_after == 8);
    for (const ChainStep& s : r.steps) {
        CHECK(s.box_identities_ok);
        CHECK(s.convex_on_grid);
        CHECK(s.points_after == static_cast<long long>(s.points.size()));
    }
    CHECK(r.steps[0].bound_min == 1);

    // The final set is exactly the embedded crystal of (1,1).
    CrystalGraph g = generate_crystal(a2, word, {1, 1});
    REQUIRE(g.elements.size() == 8);
    std::vector<std::vector<long long>> want;
    for (const auto& el : g.elements)
        want.emplace_back(el.begin(), el.end());
    std::sort(want.begin(), want.end());
    std::vector<std::vector<long long>> got = r.steps[2].points;
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    CHECK(equal_polytopes(r.steps[2].hull, convex_hull_lattice(want)));
}

TEST_CASE("scaled chain over a half-integral start") {
    RootDatum a1 = make_root_datum(LieType::A, 1);
    ChainResult r = run_chain_scaled(a1, {1}, {Q(-3, 2)});
    REQUIRE(r.completed);
    CHECK(r.scale == 2);
    REQUIRE(r.steps.size() == 1);
    // l_1 vanishes (no other colors), so the expansion is -(mu+nu) = 6 in
    // scale-2 coordinates: the tracked interval becomes [-3, 3].
    CHECK(r.steps[0].points_after == 7);
    std::vector<std::vector<long long>> want;
    for (long long v = -3; v <= 3; ++v) want.push_back({v});
    CHECK(r.steps[0].points == want);
    CHECK(r.steps[0].bound_min == 6);
}

TEST_CASE("scaled chain halts on a virtual step") {
    RootDatum a1 = make_root_datum(LieType::A, 1);
    ChainResult r = run_chain_scaled(a1, {1}, {Q(1, 2)});
    CHECK(!r.completed);
    CHECK(r.halt_step == 1);
    CHECK(r.halt_reason == "virtual");
    CHECK(r.scale == 2);
    CHECK(r.witness_bound == -2);
    CHECK(r.steps.empty());
}

TEST_CASE("main identity chain equals the reflected translated crystal chain") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    std::vector<int> word = {1, 2, 1};
    for (Weight lam : {Weight{1, 1}, Weight{2, 1}, Weight{0, 2}}) {
        LambdaData ld = lambda_data(a2, word, lam);
        ChainResult cm = run_chain_crystal_model(a2, word, lam);
        ChainResult sc = run_chain_scaled(a2, word, ld.a_lambda);
        REQUIRE(cm.completed);
        REQUIRE(sc.completed);
        REQUIRE(cm.steps.size() == sc.steps.size());
        for (size_t k = 0; k < cm.steps.size(); ++k) {
            RationalPolytope moved =
                dilate(reflect_translate(cm.steps[k].hull, ld.hat_by_pos), Q(sc.scale));
            std::vector<ZVec> zp = lattice_points(moved);
            REQUIRE(zp.size() == sc.steps[k].points.size());
            std::vector<std::vector<long long>> zs;
            for (const ZVec& z : zp) {
                std::vector<long long> row(z.size());
                for (size_t t = 0; t < z.size(); ++t) row[t] = z[t].get_si();
                zs.push_back(row);
            }
            std::sort(zs.begin(), zs.end());
            std::vector<std::vector<long long>> got = sc.steps[k].points;
            std::sort(got.begin(), got.end());
            CHECK(zs == got);
        }
    }
}

TEST_CASE("streamed final step reports the same set as stored points") {
    RootDatum b2 = make_root_datum(LieType::B, 2);
    std::vector<int> word = {2, 1, 2, 1};
    LambdaData ld = lambda_data(b2, word, {2, 1});
    ChainResult full = run_chain_scaled(b2, word, ld.a_lambda);
    ChainResult slim = run_chain_scaled(b2, word, ld.a_lambda,
                                        /*per_step_hulls=*/false, /*store_points=*/false);
    REQUIRE(full.completed);
    REQUIRE(slim.completed);
    CHECK(slim.steps.back().points.empty());
    CHECK(slim.steps.back().points_after == full.steps.back().points_after);
    REQUIRE(!slim.final_fibers.empty());

    // Unfold the box decomposition back into rows; the last color of the word
    // owns the block coordinates.
    std::vector<int> color_pos, other_pos;
    for (size_t s = 0; s < word.size(); ++s)
        (word[s] == word.back() ? color_pos : other_pos).push_back(static_cast<int>(s));
    std::vector<std::vector<long long>> unfolded;
    for (const LatticeFiber& fib : slim.final_fibers) {
        REQUIRE(fib.is_box);
        std::vector<long long> row(word.size());
        for (size_t t = 0; t < other_pos.size(); ++t) row[other_pos[t]] = fib.base[t];
        std::vector<long long> blk = fib.mu;
        for (;;) {
            for (size_t t = 0; t < color_pos.size(); ++t) row[color_pos[t]] = blk[t];
            unfolded.push_back(row);
            size_t t = 0;
            while (t < blk.size() && blk[t] == fib.nu[t]) blk[t] = fib.mu[t], ++t;
            if (t == blk.size()) break;
            ++blk[t];
        }
    }
    std::sort(unfolded.begin(), unfolded.end());
    std::vector<std::vector<long long>> want = full.steps.back().points;
    std::sort(want.begin(), want.end());
    CHECK(unfolded == want);
}

TEST_CASE("the rank-3 chain halts where scripted") {
    CounterexampleData ce = counterexample_a3();
    RootDatum a3 = make_root_datum(ce.type, ce.rank);
    ChainResult r = run_chain_scaled(a3, ce.word, ce.a_low);
    CHECK(!r.completed);
    CHECK(r.halt_step == ce.halt_step);
    CHECK(r.halt_reason == ce.halt_reason);
    CHECK(r.scale == ce.scale);
    REQUIRE(r.steps.size() == 4);
    REQUIRE(r.witness.has_value());
    CHECK(!r.witness->is_box);
    // The scripted rows carry one redundancy; as regions they match the hull.
    std::vector<Halfspace> rows = ce.step4_inequalities;
    for (const Halfspace& eq : ce.step4_equations) {
        Halfspace flip = eq;
        for (Z& z : flip.normal) z = -z;
        flip.offset = -flip.offset;
        rows.push_back(eq);
        rows.push_back(flip);
    }
    CHECK(equal_polytopes(polytope_from_inequalities(rows, 6), r.steps[3].hull));
    CHECK(r.steps[3].hull.equations.size() == ce.step4_equations.size());
}
