#pragma once

// Independent inequality descriptions of embedded-crystal images, available
// for words of a favorable shape, plus one scripted chain scenario with
// hand-computed reference data. These are the cross-checks the test suite
// holds the generic machinery against: the systems below are transcribed
// combinatorics, free of any crystal or hull code.

#include <string>
#include <vector>

#include "nz/polytope.hpp"
#include "nz/rational.hpp"
#include "nz/rootdata.hpp"

namespace nz {

struct InequalitySystem {
    int dim = 0;
    std::vector<Halfspace> inequalities;  // <normal, x> >= -offset
};

// Pattern data for type A_n with the word (1, 2,1, 3,2,1, ..., n,...,1).
struct GzData {
    std::vector<int> word;
    InequalitySystem system;  // cut out the embedded image directly
    QVec translation;         // image + translation = classical pattern polytope
    Weight top_row;           // fixed boundary row of the patterns, length n + 1
};

GzData gz_system(int n, const Weight& lambda);

// Interlacing patterns with the given fixed top row, in the same coordinate
// slots as gz_system. Built independently of GzData::system so the two can be
// played against each other through the translation vector.
InequalitySystem interlacing_system(int n, const Weight& top_row);

// Inequality description for types B_n / C_n (word (n,...,1) repeated n
// times) and D_n (repeated n - 1 times).
struct HoshinoData {
    std::vector<int> word;
    InequalitySystem system;
};

HoshinoData hoshino_system(LieType type, int n, const Weight& lambda);

// Scripted A_3 chain from a rational start point whose fifth step meets a
// fiber that is not a box. All reference values are hand-computed at the
// common-denominator scale of the start vector.
struct CounterexampleData {
    LieType type = LieType::A;
    int rank = 3;
    std::vector<int> word;
    QVec a_low;                            // start point, position order
    long scale = 12;                       // lcm of the start denominators
    // Inequality description of the step-4 polytope in scaled coordinates, as
    // scripted: per-variable range conditions, so one row (the lower bound of
    // the second coordinate) is redundant for the facet representation.
    std::vector<Halfspace> step4_inequalities;
    std::vector<Halfspace> step4_equations;
    int halt_step = 5;
    std::string halt_reason = "non-box fiber";
    std::vector<long long> witness_base;   // base of one scripted non-box fiber (not
                                           // necessarily the first in base order)
    std::vector<long long> witness_mu, witness_nu;  // its bounding box
    long long witness_members = 0;         // points actually present
    long long witness_box = 0;             // full box count
    long long witness_min_sum = 0;         // members satisfy block_1 + block_2 >= this
    QVec l_at_start;                       // l_i evaluated at a_low, i = 1..rank
};

CounterexampleData counterexample_a3();

}  // namespace nz
