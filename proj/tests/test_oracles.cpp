#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "nz/crystal.hpp"
#include "nz/demazure.hpp"
#include "nz/oracles.hpp"

using namespace nz;

namespace {

std::vector<std::vector<long long>> embedded_points(const CrystalGraph& g) {
    std::vector<std::vector<long long>> out;
    for (const auto& el : g.elements)
        out.emplace_back(el.begin(), el.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long long>> system_points(const InequalitySystem& sys) {
    RationalPolytope p = polytope_from_inequalities(sys.inequalities, sys.dim);
    std::vector<std::vector<long long>> out;
    for (const ZVec& z : lattice_points(p)) {
        std::vector<long long> row(z.size());
        for (size_t t = 0; t < z.size(); ++t) row[t] = z[t].get_si();
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Direct recursive enumeration of integral interlacing patterns under a fixed
// top row, mapped into the slot coordinates of gz_system: the entry in row i
// (1-based, below the top) at column j lands in slot b(b-1)/2 + (b-i+1) with
// b = n-j+1.
std::vector<std::vector<long long>> enumerate_patterns(int n, const Weight& top) {
    int slots = n * (n + 1) / 2;
    std::vector<std::vector<long long>> out;
    std::vector<std::vector<long>> rows(n + 1);
    rows[0] = std::vector<long>(top.begin(), top.end());
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            std::vector<long long> v(slots);
            for (int ii = 1; ii <= n; ++ii)
                for (int j = 1; j <= n - ii + 1; ++j) {
                    int b = n - j + 1;
                    int p = b * (b - 1) / 2 + (b - ii + 1);
                    v[p - 1] = rows[ii][j - 1];
                }
            out.push_back(std::move(v));
            return;
        }
        const std::vector<long>& prev = rows[i - 1];
        int len = static_cast<int>(prev.size()) - 1;
        rows[i].assign(len, 0);
        std::function<void(int)> fill = [&](int j) {
            if (j == len) {
                rec(i + 1);
                return;
            }
            for (long v = prev[j + 1]; v <= prev[j]; ++v) {
                rows[i][j] = v;
                fill(j + 1);
            }
        };
        fill(0);
        rows[i].clear();
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("interlacing systems match direct pattern enumeration") {
    struct Case {
        int n;
        Weight top;
    };
    for (const Case& c : {Case{2, {2, 1, 0}}, Case{2, {3, 1, 0}}, Case{3, {3, 2, 2, 0}},
                          Case{3, {2, 1, 1, 0}}}) {
        InequalitySystem sys = interlacing_system(c.n, c.top);
        CHECK(system_points(sys) == enumerate_patterns(c.n, c.top));
    }
    CHECK(system_points(interlacing_system(2, {2, 1, 0})).size() == 8);
}

TEST_CASE("pattern systems cut out the embedded image") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    GzData gd = gz_system(2, {1, 0});
    CHECK(gd.word == std::vector<int>{1, 2, 1});
    std::vector<std::vector<long long>> pts = system_points(gd.system);
    std::vector<std::vector<long long>> want = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}};
    CHECK(pts == want);
    CHECK(pts == embedded_points(generate_crystal(a2, gd.word, {1, 0})));

    GzData g11 = gz_system(2, {1, 1});
    CHECK(system_points(g11.system).size() == 8);
    CHECK(g11.top_row == Weight{2, 1, 0});
    CHECK(system_points(g11.system) ==
          embedded_points(generate_crystal(a2, g11.word, {1, 1})));

    RootDatum a3 = make_root_datum(LieType::A, 3);
    GzData g3 = gz_system(3, {1, 0, 2});
    CHECK(g3.word == std::vector<int>{1, 2, 1, 3, 2, 1});
    CHECK(g3.top_row == Weight{3, 2, 2, 0});
    std::vector<std::vector<long long>> image = system_points(g3.system);
    CHECK(image == embedded_points(generate_crystal(a3, g3.word, {1, 0, 2})));
    CHECK(static_cast<long long>(image.size()) ==
          weyl_dim(a3, {1, 0, 2}).get_si());

    // Translating the image by the integral shift gives the pattern points.
    std::vector<long long> shift(g3.translation.size());
    for (size_t t = 0; t < shift.size(); ++t) {
        REQUIRE(g3.translation[t].get_den() == 1);
        shift[t] = g3.translation[t].get_num().get_si();
    }
    std::vector<std::vector<long long>> shifted = image;
    for (auto& row : shifted)
        for (size_t t = 0; t < row.size(); ++t) row[t] += shift[t];
    std::sort(shifted.begin(), shifted.end());
    CHECK(shifted == enumerate_patterns(3, g3.top_row));
}

TEST_CASE("column-word systems cut out the embedded image") {
    struct Case {
        LieType type;
        int n;
        Weight lambda;
    };
    std::vector<Case> cases = {
        {LieType::B, 2, {0, 1}}, {LieType::B, 2, {1, 0}}, {LieType::B, 2, {1, 1}},
        {LieType::C, 2, {1, 0}}, {LieType::C, 2, {0, 1}}, {LieType::C, 2, {1, 1}},
        {LieType::C, 3, {1, 0, 0}}, {LieType::D, 3, {1, 0, 0}},
        {LieType::D, 3, {1, 1, 1}}, {LieType::D, 4, {1, 0, 0, 0}},
        {LieType::D, 4, {0, 0, 0, 1}},
    };
    for (const Case& c : cases) {
        RootDatum datum = make_root_datum(c.type, c.n);
        HoshinoData hd = hoshino_system(c.type, c.n, c.lambda);
        int blocks = c.type == LieType::D ? c.n - 1 : c.n;
        CHECK(static_cast<int>(hd.word.size()) == blocks * c.n);
        CHECK(hd.system.dim == static_cast<int>(hd.word.size()));
        CHECK(is_longest_word(datum, hd.word));
        std::vector<std::vector<long long>> pts = system_points(hd.system);
        CHECK(pts == embedded_points(generate_crystal(datum, hd.word, c.lambda)));
    }
    CHECK(system_points(hoshino_system(LieType::B, 2, {1, 1}).system).size() == 16);
    CHECK(system_points(hoshino_system(LieType::C, 2, {1, 1}).system).size() == 16);
}

TEST_CASE("scripted chain data is internally consistent") {
    CounterexampleData ce = counterexample_a3();
    CHECK(ce.word == std::vector<int>{2, 1, 2, 3, 2, 1});
    CHECK(ce.scale == 12);
    CHECK(lcm_denominators(ce.a_low) == 12);

    long long box = 1;
    REQUIRE(ce.witness_mu.size() == ce.witness_nu.size());
    for (size_t t = 0; t < ce.witness_mu.size(); ++t)
        box *= ce.witness_nu[t] - ce.witness_mu[t] + 1;
    CHECK(box == ce.witness_box);
    CHECK(ce.witness_box == 169);

    long long members = 0;
    for (long long u = ce.witness_mu[0]; u <= ce.witness_nu[0]; ++u)
        for (long long v = ce.witness_mu[1]; v <= ce.witness_nu[1]; ++v)
            if (u + v >= ce.witness_min_sum) ++members;
    CHECK(members == ce.witness_members);
    CHECK(ce.witness_members == 91);

    RootDatum a3 = make_root_datum(ce.type, ce.rank);
    CHECK(is_longest_word(a3, ce.word));
    REQUIRE(ce.l_at_start.size() == 3);
    for (int i = 1; i <= 3; ++i)
        CHECK(l_functional(a3, ce.word, i, ce.a_low) == ce.l_at_start[i - 1]);

    // Constraint data is at the tracked scale: every normal is primitive.
    for (const Halfspace& h : ce.step4_inequalities) {
        ZVec n = h.normal;
        make_primitive(n);
        CHECK(n == h.normal);
    }
}
