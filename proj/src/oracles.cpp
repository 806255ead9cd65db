#include "nz/oracles.hpp"

#include <stdexcept>
#include <utility>

namespace nz {

namespace {

// Accumulates inequalities given as sparse integer combinations of the
// coordinates; a term at position 0 stands for a pinned zero slot and is
// dropped. Terms and bound are oriented as  sum >= bound.
struct Builder {
    InequalitySystem sys;

    explicit Builder(int dim) { sys.dim = dim; }

    void ge(const std::vector<std::pair<int, long>>& terms, long bound) {
        ZVec u(sys.dim, Z(0));
        for (const auto& t : terms)
            if (t.first >= 1) u[t.first - 1] += t.second;
        sys.inequalities.push_back(Halfspace{std::move(u), Q(-bound)});
    }

    // chain a_1 >= a_2 >= ... over sparse single-coordinate terms
    void descending(const std::vector<int>& positions) {
        for (size_t t = 0; t + 1 < positions.size(); ++t)
            ge({{positions[t], 1}, {positions[t + 1], -1}}, 0);
    }

    void nonneg() {
        for (int p = 1; p <= sys.dim; ++p) ge({{p, 1}}, 0);
    }
};

// Strictly decreasing sequences with values in [lo, hi], emitted descending.
std::vector<std::vector<int>> decreasing_sequences(int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (lo > hi) return out;
    int w = hi - lo + 1;
    for (unsigned mask = 1; mask < (1u << w); ++mask) {
        std::vector<int> seq;
        for (int v = hi; v >= lo; --v)
            if (mask & (1u << (v - lo))) seq.push_back(v);
        out.push_back(std::move(seq));
    }
    return out;
}

ZVec unit_combo(int dim, const std::vector<std::pair<int, long>>& terms) {
    ZVec u(dim, Z(0));
    for (const auto& t : terms) u[t.first - 1] += t.second;
    return u;
}

}  // namespace

GzData gz_system(int n, const Weight& lambda) {
    if (n < 1) throw std::invalid_argument("gz_system: rank must be positive");
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("gz_system: weight size mismatch");
    const int N = n * (n + 1) / 2;

    // a_j^{(i)} sits in the block of length n - j + 1; the word descends
    // within each block.
    auto pos = [n](int i, int j) {
        int b = n - j + 1;
        return b * (b - 1) / 2 + (b - i + 1);
    };

    GzData out;
    for (int b = 1; b <= n; ++b)
        for (int c = b; c >= 1; --c) out.word.push_back(c);

    Builder bl(N);
    for (int j = 1; j <= n; ++j) {
        bl.ge({{pos(1, j), 1}}, 0);
        bl.ge({{pos(1, j), -1}}, -lambda[j - 1]);
    }
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            bl.ge({{pos(i, j), 1}, {pos(i - 1, j + 1), -1}}, 0);
            bl.ge({{pos(i - 1, j), 1}, {pos(i, j), -1}}, -lambda[i + j - 2]);
        }
    out.system = std::move(bl.sys);

    // Tail sums of lambda: translation slot for a_j^{(i)} is the sum from
    // index i + j on, and the fixed pattern row lists all tail sums.
    std::vector<long> tail(n + 2, 0);
    for (int k = n; k >= 1; --k) tail[k] = tail[k + 1] + lambda[k - 1];
    out.translation.assign(N, Q(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j)
            out.translation[pos(i, j) - 1] = Q(i + j <= n ? tail[i + j] : 0);
    out.top_row.resize(n + 1);
    for (int k = 1; k <= n + 1; ++k) out.top_row[k - 1] = tail[k];
    return out;
}

InequalitySystem interlacing_system(int n, const Weight& top_row) {
    if (static_cast<int>(top_row.size()) != n + 1)
        throw std::invalid_argument("interlacing_system: top row size mismatch");
    const int N = n * (n + 1) / 2;
    auto pos = [n](int i, int j) {
        int b = n - j + 1;
        return b * (b - 1) / 2 + (b - i + 1);
    };
    Builder bl(N);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            if (i == 1) {
                bl.ge({{pos(1, j), -1}}, -top_row[j - 1]);
                bl.ge({{pos(1, j), 1}}, top_row[j]);
            } else {
                bl.ge({{pos(i - 1, j), 1}, {pos(i, j), -1}}, 0);
                bl.ge({{pos(i, j), 1}, {pos(i - 1, j + 1), -1}}, 0);
            }
        }
    return std::move(bl.sys);
}

HoshinoData hoshino_system(LieType type, int n, const Weight& lambda) {
    if (type != LieType::B && type != LieType::C && type != LieType::D)
        throw std::invalid_argument("hoshino_system: type must be B, C, or D");
    const int min_rank = type == LieType::D ? 3 : 2;
    if (n < min_rank) throw std::invalid_argument("hoshino_system: rank too small");
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("hoshino_system: weight size mismatch");

    const int blocks = type == LieType::D ? n - 1 : n;
    const int N = blocks * n;
    // Subscripts count blocks from the end of the word.
    auto pos = [n, blocks](int i, int j) { return (blocks - j) * n + (n - i + 1); };

    HoshinoData out;
    for (int b = 0; b < blocks; ++b)
        for (int c = n; c >= 1; --c) out.word.push_back(c);

    Builder bl(N);
    bl.nonneg();

    if (type == LieType::B || type == LieType::C) {
        for (int i = 2; i <= n - 1; ++i) {
            std::vector<int> chain;
            for (int k = 1; k <= i; ++k) chain.push_back(pos(i - k + 1, k));
            bl.descending(chain);
        }
        for (int j = 1; j <= n - 1; ++j) {
            long head = type == LieType::C ? 2 : 1;
            bl.ge({{pos(n, j), head}, {pos(n - 1, j + 1), -1}}, 0);
            std::vector<int> chain;
            for (int t = 1; t <= n - j; ++t) chain.push_back(pos(n - t, j + t));
            bl.descending(chain);
        }
        for (int j = 2; j <= n; ++j) {
            std::vector<int> chain;
            for (int i = n - j + 1; i <= n - 1; ++i) chain.push_back(pos(i, j));
            bl.descending(chain);
            long last = type == LieType::C ? 2 : 1;
            bl.ge({{pos(n - 1, j), 1}, {pos(n, j), -last}}, 0);
        }
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= i; ++j)
                bl.ge({{pos(i - j + 1, j), -1}, {i - j >= 1 ? pos(i - j, j) : 0, 1}},
                      -lambda[i - 1]);
        const long c2 = type == LieType::B ? 2 : 1;
        for (const auto& mu : decreasing_sequences(1, n)) {
            const int l = static_cast<int>(mu.size());
            std::vector<std::pair<int, long>> terms;  // negated expression
            int cut = mu.back() == 1 ? l - 1 : l;
            for (int k = 1; k <= cut; ++k) {
                terms.push_back({pos(n - mu[k - 1] + 1, mu[k - 1] + k - 1), -c2});
                int lower = n - mu[k - 1];
                terms.push_back({lower >= 1 ? pos(lower, mu[k - 1] + k - 1) : 0, c2});
            }
            if (mu.back() == 1) {
                terms.push_back({pos(n, l), -1});
                terms.push_back({pos(n - 1, l), c2});
            } else {
                terms.push_back({pos(n, l), 1});
            }
            bl.ge(terms, -lambda[n - 1]);
        }
    } else {
        for (int i = 2; i <= n - 2; ++i) {
            std::vector<int> chain;
            for (int k = 1; k <= i; ++k) chain.push_back(pos(i - k + 1, k));
            bl.descending(chain);
        }
        for (int j = 1; j <= n - 2; ++j) {
            bl.ge({{pos(n - 1, j), 1}, {pos(n, j), 1}, {pos(n - 2, j + 1), -1}}, 0);
            std::vector<int> chain;
            for (int t = 1; t <= n - 1 - j; ++t) chain.push_back(pos(n - 1 - t, j + t));
            bl.descending(chain);
        }
        for (int j = 2; j <= n - 1; ++j) {
            std::vector<int> chain;
            for (int i = n - j; i <= n - 2; ++i) chain.push_back(pos(i, j));
            bl.descending(chain);
            bl.ge({{pos(n - 2, j), 1}, {pos(n - 1, j), -1}, {pos(n, j), -1}}, 0);
        }
        for (int start : {n - 1, n}) {
            std::vector<int> chain;
            for (int k = 1; k <= n - 1; ++k)
                chain.push_back(pos(k % 2 == 1 ? start : 2 * n - 1 - start, k));
            bl.descending(chain);
        }
        for (int i = 1; i <= n - 2; ++i)
            for (int j = 1; j <= i; ++j)
                bl.ge({{pos(i - j + 1, j), -1}, {i - j >= 1 ? pos(i - j, j) : 0, 1}},
                      -lambda[i - 1]);
        bl.ge({{pos(n - 1, 1), -1}, {pos(n - 2, 1), 1}}, -lambda[n - 2]);
        bl.ge({{pos(n, 1), -1}, {pos(n - 2, 1), 1}}, -lambda[n - 1]);
        for (const auto& mu : decreasing_sequences(2, n - 1)) {
            const int len = static_cast<int>(mu.size());
            std::vector<std::pair<int, long>> diffs;  // negated sum terms
            for (int k = 1; k <= len; ++k) {
                diffs.push_back({pos(n - mu[k - 1], mu[k - 1] + k - 1), -1});
                int lower = n - mu[k - 1] - 1;
                diffs.push_back({lower >= 1 ? pos(lower, mu[k - 1] + k - 1) : 0, 1});
            }
            // For odd lengths the lambda_{n-1} row reads the last-color slots
            // and the lambda_n row the other spin color; even lengths swap.
            for (int which : {0, 1}) {  // 0 -> lambda_{n-1}, 1 -> lambda_n
                int sup = (len % 2 == 1) == (which == 0) ? n : n - 1;
                long rhs = -lambda[n - 2 + which];
                std::vector<std::pair<int, long>> t1 = diffs;
                t1.push_back({pos(sup, len), 1});
                bl.ge(t1, rhs);
                std::vector<std::pair<int, long>> t2 = diffs;
                t2.push_back({pos(sup, len + 1), -1});
                t2.push_back({pos(n - 2, len + 1), 1});
                bl.ge(t2, rhs);
            }
        }
    }
    out.system = std::move(bl.sys);
    return out;
}

CounterexampleData counterexample_a3() {
    CounterexampleData d;
    d.word = {2, 1, 2, 3, 2, 1};
    d.a_low = {make_q(-1, 3), make_q(-5, 4), make_q(-1, 3),
               make_q(-3, 2), make_q(-4, 3), make_q(-1, 4)};
    d.scale = 12;
    const int dim = 6;
    auto hs = [dim](const std::vector<std::pair<int, long>>& terms, long off) {
        return Halfspace{unit_combo(dim, terms), Q(off)};
    };
    d.step4_inequalities = {
        hs({{1, 1}}, 4),          hs({{1, -1}}, 8),
        hs({{2, 1}}, 15),         hs({{1, 1}, {2, -1}}, 1),
        hs({{3, 1}}, 4),          hs({{2, 1}, {3, -1}}, 11),
        hs({{3, -1}}, 8),         hs({{4, 1}}, 18),
        hs({{1, 1}, {3, 1}, {4, -1}}, 2),
    };
    d.step4_equations = {hs({{5, 1}}, 16), hs({{6, 1}}, 3)};
    d.witness_base = {-3, 6, -3};
    d.witness_mu = {-4, -4, -16};
    d.witness_nu = {8, 8, -16};
    d.witness_members = 91;
    d.witness_box = 169;
    d.witness_min_sum = 4;
    d.l_at_start = {Q(-2), Q(-3), Q(-2)};
    return d;
}

}  // namespace nz
