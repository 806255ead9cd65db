#include <algorithm>
#include <set>

#include "doctest.h"
#include "nz/crystal.hpp"

using namespace nz;

namespace {

// Walk distance to the end of the color-i string through e, along the edges.
int edge_distance(const std::vector<std::vector<int>>& edges, int e, int i) {
    int steps = 0;
    while (edges[e][i - 1] >= 0) {
        e = edges[e][i - 1];
        ++steps;
    }
    return steps;
}

// Raising saturation E_{j_m}(...E_{j_1}({lowest})), first letter innermost;
// an independent construction of the opposite Demazure subsets, which grow by
// one saturation per word position.
std::vector<int> raise_fold(const CrystalGraph& g, const std::vector<int>& letters) {
    ElementVec low(g.x_vector.begin(), g.x_vector.end());
    std::vector<char> in(g.elements.size(), 0);
    in[g.index_of(low)] = 1;
    for (int letter : letters) {
        for (size_t e = 0; e < in.size(); ++e) {
            if (!in[e]) continue;
            int cur = static_cast<int>(e);
            while (g.e_edge[cur][letter - 1] >= 0) {
                cur = g.e_edge[cur][letter - 1];
                in[cur] = 1;
            }
        }
    }
    std::vector<int> out;
    for (size_t e = 0; e < in.size(); ++e)
        if (in[e]) out.push_back(static_cast<int>(e));
    return out;
}

void check_graph_consistency(const CrystalGraph& g) {
    const RootDatum& datum = g.ctx.datum;
    int high_count = 0;
    for (size_t e = 0; e < g.elements.size(); ++e) {
        bool is_high = true;
        for (int i = 1; i <= datum.rank; ++i) {
            int t = g.f_edge[e][i - 1];
            if (t >= 0) {
                CHECK(g.e_edge[t][i - 1] == static_cast<int>(e));
                Weight wt = g.ctx.weight(g.elements[e]);
                Weight wd = g.ctx.weight(g.elements[t]);
                for (int r = 1; r <= datum.rank; ++r)
                    CHECK(wd[r - 1] == wt[r - 1] - datum.cartan[r - 1][i - 1]);
            }
            if (g.e_edge[e][i - 1] >= 0) is_high = false;
            // Operator counts from the formulas equal graph distances.
            CHECK(g.ctx.epsilon(g.elements[e], i) ==
                  edge_distance(g.e_edge, static_cast<int>(e), i));
            CHECK(g.ctx.phi(g.elements[e], i) ==
                  edge_distance(g.f_edge, static_cast<int>(e), i));
        }
        if (is_high) {
            ++high_count;
            CHECK(static_cast<int>(e) == g.highest);
        }
    }
    CHECK(high_count == 1);
    CHECK(g.ctx.weight(g.elements[g.highest]) == g.ctx.lambda);
}

}  // namespace

TEST_CASE("A1 chain crystal") {
    RootDatum a1 = make_root_datum(LieType::A, 1);
    CrystalGraph g = generate_crystal(a1, {1}, {2});
    REQUIRE(g.elements.size() == 3);
    CHECK(g.elements[0] == ElementVec{0});
    CHECK(g.elements[1] == ElementVec{1});
    CHECK(g.elements[2] == ElementVec{2});
    CHECK(g.f_edge[0][0] == 1);
    CHECK(g.f_edge[1][0] == 2);
    CHECK(g.f_edge[2][0] == -1);
    CHECK(g.x_vector == std::vector<long>{2});
    check_graph_consistency(g);
}

TEST_CASE("A2 fundamental crystal elements") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    CrystalGraph g = generate_crystal(a2, {1, 2, 1}, {1, 0});
    REQUIRE(g.elements.size() == 3);
    CHECK(g.elements[0] == ElementVec{0, 0, 0});
    CHECK(g.elements[1] == ElementVec{0, 0, 1});
    CHECK(g.elements[2] == ElementVec{0, 1, 1});
    // (000) -f1-> (001) -f2-> (011)
    CHECK(g.f_edge[0][0] == 1);
    CHECK(g.f_edge[1][1] == 2);
    check_graph_consistency(g);
}

TEST_CASE("C2 and B2 fundamental crystals") {
    RootDatum c2 = make_root_datum(LieType::C, 2);
    CrystalGraph gc = generate_crystal(c2, {2, 1, 2, 1}, {1, 0});
    REQUIRE(gc.elements.size() == 4);
    CHECK(gc.elements[0] == ElementVec{0, 0, 0, 0});
    CHECK(gc.elements[1] == ElementVec{0, 0, 0, 1});
    CHECK(gc.elements[2] == ElementVec{0, 0, 1, 1});
    CHECK(gc.elements[3] == ElementVec{0, 1, 1, 1});
    check_graph_consistency(gc);

    RootDatum b2 = make_root_datum(LieType::B, 2);
    CrystalGraph gb = generate_crystal(b2, {2, 1, 2, 1}, {0, 1});
    REQUIRE(gb.elements.size() == 4);
    std::set<ElementVec> got(gb.elements.begin(), gb.elements.end());
    std::set<ElementVec> want = {
        {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}};
    CHECK(got == want);
    check_graph_consistency(gb);
}

TEST_CASE("crystal sizes match the dimension formula") {
    struct Case {
        LieType t;
        int rank;
        std::vector<int> word;
        Weight lambda;
    };
    const std::vector<Case> cases = {
        {LieType::A, 2, {1, 2, 1}, {1, 1}},
        {LieType::A, 2, {1, 2, 1}, {2, 1}},
        {LieType::A, 3, {1, 2, 1, 3, 2, 1}, {1, 1, 1}},
        {LieType::B, 2, {2, 1, 2, 1}, {1, 1}},
        {LieType::C, 2, {2, 1, 2, 1}, {1, 1}},
        {LieType::G, 2, {1, 2, 1, 2, 1, 2}, {1, 0}},
        {LieType::G, 2, {1, 2, 1, 2, 1, 2}, {0, 1}},
        {LieType::G, 2, {2, 1, 2, 1, 2, 1}, {1, 1}},
        {LieType::D, 3, {3, 2, 1, 3, 2, 1}, {1, 1, 1}},
    };
    for (const Case& c : cases) {
        RootDatum d = make_root_datum(c.t, c.rank);
        CrystalGraph g = generate_crystal(d, c.word, c.lambda);
        CHECK(Z(static_cast<long>(g.elements.size())) == weyl_dim(d, c.lambda));
        check_graph_consistency(g);
    }
}

TEST_CASE("generation preconditions") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    CHECK_THROWS_AS(generate_crystal(a2, {1, 1, 2}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate_crystal(a2, {1, 2}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate_crystal(a2, {1, 2, 1}, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate_crystal(a2, {1, 2, 1}, {2, 2}, 5), CapExceededError);
}

TEST_CASE("extremal strings") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    Weight lam = {2, 1};
    CHECK(extremal_string(a2, {1, 2, 1}, lam, 1) == std::vector<long>({1, 3, 2}));
    CHECK(extremal_string(a2, {1, 2, 1}, lam, 2) == std::vector<long>({0, 3, 2}));
    CHECK(extremal_string(a2, {1, 2, 1}, lam, 3) == std::vector<long>({0, 0, 2}));
    CHECK(extremal_string(a2, {1, 2, 1}, lam, 4) == std::vector<long>({0, 0, 0}));
    CrystalGraph g = generate_crystal(a2, {1, 2, 1}, lam);
    CHECK(g.x_vector == std::vector<long>({1, 3, 2}));
    // The lowest element carries weight w0(lambda).
    ElementVec low(g.x_vector.begin(), g.x_vector.end());
    CHECK(g.ctx.weight(low) == weyl_act(a2, {1, 2, 1}, lam));
}

TEST_CASE("opposite Demazure stages equal raising saturations") {
    struct Case {
        LieType t;
        int rank;
        std::vector<int> word;
        Weight lambda;
    };
    const std::vector<Case> cases = {
        {LieType::A, 2, {1, 2, 1}, {1, 1}},
        {LieType::C, 2, {2, 1, 2, 1}, {1, 1}},
        {LieType::B, 2, {2, 1, 2, 1}, {0, 1}},
    };
    for (const Case& c : cases) {
        RootDatum d = make_root_datum(c.t, c.rank);
        CrystalGraph g = generate_crystal(d, c.word, c.lambda);
        int N = static_cast<int>(c.word.size());
        for (int k = 1; k <= N + 1; ++k) {
            std::vector<int> prefix(c.word.begin(), c.word.begin() + (k - 1));
            std::vector<int> stage = opposite_demazure(g, k);
            std::sort(stage.begin(), stage.end());
            CHECK(stage == raise_fold(g, prefix));
        }
        CHECK(opposite_demazure(g, 1).size() == 1);
        CHECK(opposite_demazure(g, N + 1).size() == g.elements.size());
    }
}

TEST_CASE("characters: Weyl symmetry and the Demazure fold") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    CrystalGraph g = generate_crystal(a2, {1, 2, 1}, {1, 1});
    CharacterPolynomial chi = character_all(g);

    // W-invariance of the full character.
    for (int i = 1; i <= 2; ++i) {
        CharacterPolynomial reflected;
        for (const auto& [mu, mult] : chi) reflected[simple_reflection(a2, i, mu)] += mult;
        CHECK(reflected == chi);
    }

    // Divided differences over the longest word, first letter innermost,
    // rebuild the character from the lowest weight, one opposite Demazure
    // stage per step.
    const std::vector<int> w0 = {1, 2, 1};
    CharacterPolynomial folded;
    folded[weyl_act(a2, w0, {1, 1})] = 1;
    for (size_t k = 0; k < w0.size(); ++k) {
        folded = char_demazure(folded, a2, w0[k]);
        CHECK(folded == character(g, opposite_demazure(g, static_cast<int>(k) + 2)));
    }
    CHECK(folded == chi);
}

TEST_CASE("fibers partition the crystal and pass the string isomorphism") {
    RootDatum b2 = make_root_datum(LieType::B, 2);
    CrystalGraph g = generate_crystal(b2, {2, 1, 2, 1}, {0, 1});
    for (int i = 1; i <= 2; ++i) {
        size_t covered = 0;
        for (const CrystalFiber& f : crystal_fibers(g, i)) {
            covered += f.indices.size();
            CHECK(check_fiber_string_iso(g, i, f).empty());
        }
        CHECK(covered == g.elements.size());
    }
}
