#include "nz/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace nz {

char lie_type_char(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
        case LieType::E: return 'E';
        case LieType::F: return 'F';
        case LieType::G: return 'G';
    }
    return '?';
}

namespace {

std::vector<std::vector<long>> cartan_matrix(LieType type, int n, bool g2_swapped) {
    auto chain = [&](int m) {
        std::vector<std::vector<long>> c(m, std::vector<long>(m, 0));
        for (int i = 0; i < m; ++i) c[i][i] = 2;
        for (int i = 0; i + 1 < m; ++i) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
        return c;
    };
    switch (type) {
        case LieType::A: {
            if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
            return chain(n);
        }
        case LieType::B: {
            if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
            auto c = chain(n);
            // alpha_n short: <alpha_{n-1}, h_n> = -2.
            c[n - 1][n - 2] = -2;
            return c;
        }
        case LieType::C: {
            if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
            auto c = chain(n);
            // alpha_n long: <alpha_n, h_{n-1}> = -2.
            c[n - 2][n - 1] = -2;
            return c;
        }
        case LieType::D: {
            if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
            auto c = chain(n);
            // Fork: nodes n-1 and n both attach to n-2 and not to each other.
            c[n - 1][n - 2] = 0;
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 3] = -1;
            c[n - 3][n - 1] = -1;
            return c;
        }
        case LieType::E: {
            if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6..8");
            // Bourbaki: node 2 attaches to node 4; nodes 1,3,4,...,n form a chain.
            std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
            for (int i = 0; i < n; ++i) c[i][i] = 2;
            auto link = [&](int a, int b) {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < n; ++i) link(i, i + 1);
            return c;
        }
        case LieType::F: {
            if (n != 4) throw std::invalid_argument("type F needs rank 4");
            auto c = chain(4);
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short: <alpha_3, h_2> = -2.
            c[1][2] = -2;
            return c;
        }
        case LieType::G: {
            if (n != 2) throw std::invalid_argument("type G needs rank 2");
            std::vector<std::vector<long>> c{{2, -3}, {-1, 2}};
            if (g2_swapped) {
                c[0][1] = -1;
                c[1][0] = -3;
            }
            return c;
        }
    }
    throw std::invalid_argument("unknown type");
}

std::vector<long> symmetrizer_of(const std::vector<std::vector<long>>& c) {
    int n = static_cast<int>(c.size());
    // Propagate d_j * c_{j,i} = d_i * c_{i,j} along the (connected) diagram,
    // then normalize to minimal positive integers.
    std::vector<Q> d(n, 0);
    d[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < n; ++j) {
            if (i == j || c[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * Q(c[i][j]) / Q(c[j][i]);
            todo.push_back(j);
        }
    }
    QVec dq(d.begin(), d.end());
    ZVec prim = primitive_integer(dq);
    std::vector<long> out(n);
    for (int i = 0; i < n; ++i) {
        if (prim[i] <= 0) throw std::logic_error("symmetrizer: diagram not connected?");
        out[i] = prim[i].get_si();
    }
    return out;
}

// Reflection closure of the simple roots, tracking coroot coordinates of each
// root in parallel (the coroot of s_i(beta) is s_i^dual(beta^vee)).
void generate_positive_roots(RootDatum& datum) {
    int n = datum.rank;
    std::set<std::vector<long>> seen;
    std::vector<std::pair<std::vector<long>, std::vector<long>>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long> r(n, 0), rv(n, 0);
        r[i] = 1;
        rv[i] = 1;
        seen.insert(r);
        queue.push_back({r, rv});
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [r, rv] = queue[head];
        for (int i = 0; i < n; ++i) {
            long pair_r = 0, pair_rv = 0;
            for (int j = 0; j < n; ++j) {
                pair_r += datum.cartan[i][j] * r[j];   // <beta, h_i> via columns
                pair_rv += datum.cartan[j][i] * rv[j]; // dual pairing for coroots
            }
            std::vector<long> s = r, sv = rv;
            s[i] -= pair_r;
            sv[i] -= pair_rv;
            bool positive = true;
            for (long x : s)
                if (x < 0) positive = false;
            if (!positive) continue;
            if (seen.insert(s).second) queue.push_back({s, sv});
        }
    }
    std::sort(queue.begin(), queue.end());
    for (auto& [r, rv] : queue) {
        datum.positive_roots.push_back(r);
        datum.positive_coroots.push_back(rv);
    }
}

}  // namespace

RootDatum make_root_datum(LieType type, int rank, bool g2_swapped) {
    RootDatum datum;
    datum.type = type;
    datum.rank = rank;
    datum.g2_swapped = (type == LieType::G) && g2_swapped;
    datum.cartan = cartan_matrix(type, rank, g2_swapped);
    datum.symmetrizer = symmetrizer_of(datum.cartan);
    generate_positive_roots(datum);
    return datum;
}

std::pair<LieType, int> parse_type_string(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("type descriptor too short: " + s);
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    LieType type;
    switch (t) {
        case 'A': type = LieType::A; break;
        case 'B': type = LieType::B; break;
        case 'C': type = LieType::C; break;
        case 'D': type = LieType::D; break;
        case 'E': type = LieType::E; break;
        case 'F': type = LieType::F; break;
        case 'G': type = LieType::G; break;
        default: throw std::invalid_argument("unknown type letter in: " + s);
    }
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad rank in type descriptor: " + s);
    int rank = std::stoi(s.substr(1));
    return {type, rank};
}

bool is_dominant(const Weight& w) {
    for (long x : w)
        if (x < 0) return false;
    return true;
}

bool is_regular_dominant(const Weight& w) {
    for (long x : w)
        if (x <= 0) return false;
    return true;
}

Weight rho(const RootDatum& datum) { return Weight(datum.rank, 1); }

Weight add(const Weight& a, const Weight& b) {
    Weight out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Weight scale(long c, const Weight& a) {
    Weight out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

Weight simple_reflection(const RootDatum& datum, int i, const Weight& lambda) {
    if (i < 1 || i > datum.rank) throw std::invalid_argument("color out of range");
    Weight out = lambda;
    long pairing = lambda[i - 1];
    for (int r = 0; r < datum.rank; ++r) out[r] -= pairing * datum.cartan[r][i - 1];
    return out;
}

Weight weyl_act(const RootDatum& datum, const std::vector<int>& letters, const Weight& lambda) {
    Weight cur = lambda;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        cur = simple_reflection(datum, *it, cur);
    return cur;
}

bool is_reduced_word(const RootDatum& datum, const std::vector<int>& word) {
    int n = datum.rank;
    // imgs[j] = w_{k-1}(alpha_{j+1}) in simple-root coordinates.
    std::vector<std::vector<long>> imgs(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) imgs[j][j] = 1;
    for (int letter : word) {
        if (letter < 1 || letter > n) throw std::invalid_argument("letter out of range");
        int i = letter - 1;
        // Roots have uniformly signed coordinates; any nonzero entry decides.
        bool positive = true;
        for (long x : imgs[i])
            if (x < 0) { positive = false; break; }
        if (!positive) return false;
        // w_k = w_{k-1} s_i: imgs'[j] = imgs[j] - c[i][j] * imgs[i].
        std::vector<long> base = imgs[i];
        for (int j = 0; j < n; ++j) {
            long f = datum.cartan[i][j];
            if (f == 0) continue;
            for (int t = 0; t < n; ++t) imgs[j][t] -= f * base[t];
        }
    }
    return true;
}

bool is_longest_word(const RootDatum& datum, const std::vector<int>& word) {
    return static_cast<int>(word.size()) == datum.num_positive_roots() &&
           is_reduced_word(datum, word);
}

WordIndexing word_indexing(const std::vector<int>& word, int n) {
    WordIndexing idx;
    idx.n = n;
    idx.d.assign(n, 0);
    idx.positions.assign(n, {});
    idx.m_of.resize(word.size());
    for (size_t k = 0; k < word.size(); ++k) {
        int i = word[k];
        if (i < 1 || i > n) throw std::invalid_argument("letter out of range");
        ++idx.d[i - 1];
        idx.positions[i - 1].push_back(static_cast<int>(k + 1));
        idx.m_of[k] = idx.d[i - 1];
    }
    return idx;
}

Z weyl_dim(const RootDatum& datum, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != datum.rank)
        throw std::invalid_argument("weight rank mismatch");
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dim needs dominant weight");
    Q result = 1;
    for (const auto& coroot : datum.positive_coroots) {
        long num = 0, den = 0;
        for (int j = 0; j < datum.rank; ++j) {
            num += (lambda[j] + 1) * coroot[j];
            den += coroot[j];
        }
        result *= Q(num, den);
    }
    result.canonicalize();
    if (result.get_den() != 1) throw std::logic_error("weyl_dim: non-integer result");
    return result.get_num();
}

}  // namespace nz
