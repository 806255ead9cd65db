#include "doctest.h"
#include "nz/rootdata.hpp"

using namespace nz;

TEST_CASE("cartan matrices and symmetrizers") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    CHECK(a2.cartan[0][1] == -1);
    CHECK(a2.cartan[1][0] == -1);

    RootDatum b2 = make_root_datum(LieType::B, 2);
    CHECK(b2.cartan[0][1] == -1);
    CHECK(b2.cartan[1][0] == -2);

    RootDatum c2 = make_root_datum(LieType::C, 2);
    CHECK(c2.cartan[0][1] == -2);
    CHECK(c2.cartan[1][0] == -1);

    RootDatum g2 = make_root_datum(LieType::G, 2);
    CHECK(g2.cartan[0][1] == -3);
    CHECK(g2.cartan[1][0] == -1);
    RootDatum g2s = make_root_datum(LieType::G, 2, true);
    CHECK(g2s.cartan[0][1] == -1);
    CHECK(g2s.cartan[1][0] == -3);

    RootDatum d4 = make_root_datum(LieType::D, 4);
    CHECK(d4.cartan[1][2] == -1);
    CHECK(d4.cartan[1][3] == -1);
    CHECK(d4.cartan[2][3] == 0);

    for (const RootDatum& d :
         {a2, b2, c2, g2, g2s, d4, make_root_datum(LieType::C, 3)}) {
        for (int i = 0; i < d.rank; ++i) {
            CHECK(d.cartan[i][i] == 2);
            for (int j = 0; j < d.rank; ++j)
                CHECK(d.symmetrizer[i] * d.cartan[i][j] ==
                      d.symmetrizer[j] * d.cartan[j][i]);
        }
    }
}

TEST_CASE("type parsing") {
    auto [t, r] = parse_type_string("C3");
    CHECK(t == LieType::C);
    CHECK(r == 3);
    CHECK(lie_type_char(LieType::G) == 'G');
    CHECK_THROWS_AS(parse_type_string("H4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_string("A"), std::invalid_argument);
    CHECK_THROWS_AS(make_root_datum(LieType::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_root_datum(LieType::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_root_datum(LieType::G, 3), std::invalid_argument);
}

TEST_CASE("reflections and Weyl action") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    Weight lam = {3, -1};
    CHECK(simple_reflection(a2, 1, simple_reflection(a2, 1, lam)) == lam);
    CHECK(weyl_act(a2, {1, 2, 1}, lam) == weyl_act(a2, {2, 1, 2}, lam));

    RootDatum b2 = make_root_datum(LieType::B, 2);
    CHECK(weyl_act(b2, {1, 2, 1, 2}, lam) == weyl_act(b2, {2, 1, 2, 1}, lam));

    RootDatum g2 = make_root_datum(LieType::G, 2);
    CHECK(weyl_act(g2, {1, 2, 1, 2, 1, 2}, lam) == weyl_act(g2, {2, 1, 2, 1, 2, 1}, lam));

    // The longest element sends rho to -rho.
    for (auto [d, w0] : {std::pair<RootDatum, std::vector<int>>{a2, {1, 2, 1}},
                         {b2, {2, 1, 2, 1}},
                         {g2, {1, 2, 1, 2, 1, 2}},
                         {make_root_datum(LieType::A, 3), {1, 2, 1, 3, 2, 1}}}) {
        Weight r = rho(d);
        Weight img = weyl_act(d, w0, r);
        CHECK(img == scale(-1, r));
    }
}

TEST_CASE("reduced and longest words") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    CHECK(is_reduced_word(a2, {1, 2, 1}));
    CHECK(!is_reduced_word(a2, {1, 1, 2}));
    CHECK(!is_reduced_word(a2, {1, 2, 1, 2}));
    CHECK(is_longest_word(a2, {1, 2, 1}));
    CHECK(is_longest_word(a2, {2, 1, 2}));
    CHECK(!is_longest_word(a2, {1, 2}));

    RootDatum b2 = make_root_datum(LieType::B, 2);
    CHECK(is_reduced_word(b2, {1, 2, 1, 2}));
    CHECK(is_longest_word(b2, {2, 1, 2, 1}));

    RootDatum g2 = make_root_datum(LieType::G, 2);
    CHECK(is_longest_word(g2, {1, 2, 1, 2, 1, 2}));
    CHECK(is_longest_word(g2, {2, 1, 2, 1, 2, 1}));
    CHECK(!is_longest_word(g2, {1, 2, 1, 2, 1}));

    RootDatum d3 = make_root_datum(LieType::D, 3);
    CHECK(is_longest_word(d3, {3, 2, 1, 3, 2, 1}));
    RootDatum d4 = make_root_datum(LieType::D, 4);
    CHECK(is_longest_word(d4, {4, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 1}));
}

TEST_CASE("weight predicates") {
    CHECK(is_dominant({0, 0}));
    CHECK(is_dominant({2, 1}));
    CHECK(!is_dominant({-1, 3}));
    CHECK(is_regular_dominant({1, 1}));
    CHECK(!is_regular_dominant({1, 0}));
    RootDatum a3 = make_root_datum(LieType::A, 3);
    CHECK(rho(a3) == Weight{1, 1, 1});
    CHECK(add({1, 2}, {3, -1}) == Weight{4, 1});
    CHECK(scale(3, {1, -2}) == Weight{3, -6});
}

TEST_CASE("Weyl dimension formula against hand values") {
    RootDatum a2 = make_root_datum(LieType::A, 2);
    CHECK(weyl_dim(a2, {1, 0}) == 3);
    CHECK(weyl_dim(a2, {1, 1}) == 8);
    CHECK(weyl_dim(a2, {2, 1}) == 15);
    CHECK(weyl_dim(a2, {2, 2}) == 27);

    RootDatum a3 = make_root_datum(LieType::A, 3);
    CHECK(weyl_dim(a3, {1, 0, 0}) == 4);
    CHECK(weyl_dim(a3, {0, 1, 0}) == 6);
    CHECK(weyl_dim(a3, {1, 1, 1}) == 64);
    CHECK(weyl_dim(a3, {2, 2, 2}) == 729);

    // alpha_1 long in this B2 convention: w1 is the vector, w2 the spinor.
    RootDatum b2 = make_root_datum(LieType::B, 2);
    CHECK(weyl_dim(b2, {1, 0}) == 5);
    CHECK(weyl_dim(b2, {0, 1}) == 4);
    CHECK(weyl_dim(b2, {0, 2}) == 10);
    CHECK(weyl_dim(b2, {2, 0}) == 14);
    CHECK(weyl_dim(b2, {1, 1}) == 16);

    RootDatum c2 = make_root_datum(LieType::C, 2);
    CHECK(weyl_dim(c2, {1, 0}) == 4);
    CHECK(weyl_dim(c2, {0, 1}) == 5);
    CHECK(weyl_dim(c2, {2, 0}) == 10);
    CHECK(weyl_dim(c2, {1, 1}) == 16);

    RootDatum g2 = make_root_datum(LieType::G, 2);
    CHECK(weyl_dim(g2, {1, 0}) == 7);
    CHECK(weyl_dim(g2, {0, 1}) == 14);
    CHECK(weyl_dim(g2, {1, 1}) == 64);
    CHECK(weyl_dim(g2, {2, 2}) == 729);
    CHECK(weyl_dim(make_root_datum(LieType::G, 2, true), {1, 0}) == 14);

    RootDatum d3 = make_root_datum(LieType::D, 3);
    CHECK(weyl_dim(d3, {1, 0, 0}) == 6);
    CHECK(weyl_dim(d3, {0, 1, 0}) == 4);
    CHECK(weyl_dim(d3, {0, 0, 1}) == 4);

    RootDatum d4 = make_root_datum(LieType::D, 4);
    CHECK(weyl_dim(d4, {1, 0, 0, 0}) == 8);
    CHECK(weyl_dim(d4, {0, 0, 0, 1}) == 8);

    // dim V_rho = 2^(number of positive roots), uniformly.
    for (const RootDatum& d : {a2, a3, b2, c2, g2, d4, make_root_datum(LieType::C, 3)}) {
        Z want = 1;
        for (size_t t = 0; t < d.num_positive_roots(); ++t) want *= 2;
        CHECK(weyl_dim(d, rho(d)) == want);
    }
}

TEST_CASE("word indexing") {
    WordIndexing idx = word_indexing({2, 1, 2, 3, 2, 1}, 3);
    CHECK(idx.d[0] == 2);
    CHECK(idx.d[1] == 3);
    CHECK(idx.d[2] == 1);
    CHECK(idx.positions[0] == std::vector<int>{2, 6});
    CHECK(idx.positions[1] == std::vector<int>{1, 3, 5});
    CHECK(idx.positions[2] == std::vector<int>{4});
    CHECK(idx.m_of[0] == 1);  // position 1 is the first color-2 slot
    CHECK(idx.m_of[4] == 3);  // position 5 is the third color-2 slot
    CHECK(idx.m_of[5] == 2);  // position 6 is the second color-1 slot
}
