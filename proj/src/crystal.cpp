#include "nz/crystal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace nz {

CrystalContext::CrystalContext(RootDatum d, std::vector<int> w, Weight lam)
    : datum(std::move(d)), word(std::move(w)), lambda(std::move(lam)) {
    N = static_cast<int>(word.size());
    if (static_cast<int>(lambda.size()) != datum.rank)
        throw std::invalid_argument("lambda rank mismatch");
    idx = word_indexing(word, datum.rank);
    buffer_len = 2 * datum.rank;
    z_colors.resize(N + buffer_len);
    for (int t = 0; t < N; ++t) z_colors[t] = word[N - 1 - t];
    // Buffer colors continue cyclically so that consecutive tail colors differ
    // and every color keeps occurring; buffer coordinates are identically zero.
    int n = datum.rank;
    int start = word.empty() ? 1 : word.front();
    for (int u = 1; u <= buffer_len; ++u)
        z_colors[N + u - 1] = (start - 1 + u) % n + 1;
}

long CrystalContext::sigma_tail(const ElementVec& a, int t) const {
    if (t < 1 || t > N + buffer_len) throw std::invalid_argument("sigma index out of range");
    if (t > N) return 0;  // buffer coordinate and everything above it is zero
    int color = z_colors[t - 1];
    long s = a[N - t];
    for (int l = t + 1; l <= N; ++l)
        s += datum.cartan[color - 1][z_colors[l - 1] - 1] * a[N - l];
    return s;
}

long CrystalContext::sigma(const ElementVec& a, int m) const {
    if (m < 1 || m > N + buffer_len) throw std::invalid_argument("sigma index out of range");
    if (m > N) return 0;
    return sigma_tail(a, N - m + 1);
}

long CrystalContext::sigma_max(const ElementVec& a, int i) const {
    long best = 0;  // attained by buffer slots of color i
    for (int p : idx.positions[i - 1]) {
        long s = sigma_tail(a, N - p + 1);
        if (s > best) best = s;
    }
    return best;
}

Weight CrystalContext::weight_of_string(const ElementVec& a) const {
    Weight w(datum.rank, 0);
    for (int m = 0; m < N; ++m) {
        if (a[m] == 0) continue;
        int col = word[m] - 1;
        for (int r = 0; r < datum.rank; ++r) w[r] -= a[m] * datum.cartan[r][col];
    }
    return w;
}

Weight CrystalContext::weight(const ElementVec& a) const {
    Weight w = weight_of_string(a);
    for (int r = 0; r < datum.rank; ++r) w[r] += lambda[r];
    return w;
}

long CrystalContext::epsilon(const ElementVec& a, int i) const {
    long s = sigma_max(a, i);
    long wt_h = weight_of_string(a)[i - 1];
    long other = -lambda[i - 1] - wt_h;
    return std::max(s, other);
}

long CrystalContext::phi(const ElementVec& a, int i) const {
    return epsilon(a, i) + weight(a)[i - 1];
}

std::optional<ElementVec> CrystalContext::e_tilde(const ElementVec& a, int i) const {
    long s = sigma_max(a, i);
    long phi_string = s + weight_of_string(a)[i - 1];
    // Tensor rule: the raising operator stays on the string factor when its
    // phi dominates the weight factor's epsilon = -<lambda,h_i>.
    if (phi_string >= -lambda[i - 1]) {
        if (s == 0) return std::nullopt;  // raising kills the string factor
        // Largest tail slot of color i attaining sigma_max.
        int chosen = -1;
        for (int p : idx.positions[i - 1]) {
            int t = N - p + 1;
            if (sigma_tail(a, t) == s && t > chosen) chosen = t;
        }
        ElementVec out = a;
        out[N - chosen] -= 1;
        return out;
    }
    return std::nullopt;  // would act on the weight factor, which it kills
}

std::optional<ElementVec> CrystalContext::f_tilde(const ElementVec& a, int i) const {
    long s = sigma_max(a, i);
    long phi_string = s + weight_of_string(a)[i - 1];
    if (phi_string > -lambda[i - 1]) {
        // Smallest tail slot of color i attaining sigma_max.
        int chosen = N + buffer_len + 1;
        for (int p : idx.positions[i - 1]) {
            int t = N - p + 1;
            if (sigma_tail(a, t) == s && t < chosen) chosen = t;
        }
        if (s == 0) {
            // Buffer slots also attain 0 but sit above every real slot, so a
            // real slot wins whenever one attains the max; if none does, the
            // operator would leave the embedded image.
            if (chosen > N + buffer_len)
                throw std::logic_error("lowering operator touched the buffer");
        }
        if (chosen > N)
            throw std::logic_error("lowering operator touched the buffer");
        ElementVec out = a;
        out[N - chosen] += 1;
        return out;
    }
    return std::nullopt;  // acts on the weight factor, which it kills
}

int CrystalGraph::index_of(const ElementVec& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? -1 : it->second;
}

CrystalGraph generate_crystal(const RootDatum& datum, const std::vector<int>& word,
                              const Weight& lambda, long cap) {
    if (!is_longest_word(datum, word))
        throw std::invalid_argument("word is not a reduced word for the longest element");
    if (!is_dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
    Z dim = weyl_dim(datum, lambda);
    if (dim > cap)
        throw CapExceededError(
            "crystal cardinality estimate " + dim.get_str() + " exceeds cap " + std::to_string(cap),
            dim);

    CrystalContext ctx(datum, word, lambda);
    int N = ctx.N;
    int n = datum.rank;

    std::vector<ElementVec> elems;
    std::unordered_map<ElementVec, int, VecHash> seen;
    std::deque<int> queue;
    ElementVec zero(N, 0);
    elems.push_back(zero);
    seen[zero] = 0;
    queue.push_back(0);
    std::vector<std::array<int, 2>> edge_list;  // flattened (from, to) per color
    std::vector<std::vector<int>> fe;           // parallel to elems
    fe.push_back(std::vector<int>(n, -1));

    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            ElementVec a = elems[cur];  // copy: elems may reallocate below
            auto next = ctx.f_tilde(a, i);
            if (!next) continue;
            for (int v : *next)
                if (v < 0) throw std::logic_error("negative coordinate generated");
            auto [it, inserted] = seen.try_emplace(*next, static_cast<int>(elems.size()));
            if (inserted) {
                elems.push_back(*next);
                fe.push_back(std::vector<int>(n, -1));
                if (static_cast<long>(elems.size()) > cap)
                    throw CapExceededError("enumeration exceeded cap", dim);
                queue.push_back(it->second);
            }
            fe[cur][i - 1] = it->second;
        }
    }

    // Canonical element order.
    std::vector<int> order(elems.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return elems[a] < elems[b]; });
    std::vector<int> where(elems.size());
    for (size_t r = 0; r < order.size(); ++r) where[order[r]] = static_cast<int>(r);

    CrystalGraph graph(std::move(ctx));
    graph.elements.resize(elems.size());
    graph.f_edge.assign(elems.size(), std::vector<int>(n, -1));
    graph.e_edge.assign(elems.size(), std::vector<int>(n, -1));
    for (size_t old = 0; old < elems.size(); ++old) {
        graph.elements[where[old]] = elems[old];
        for (int i = 0; i < n; ++i) {
            int tgt = fe[old][i];
            if (tgt >= 0) graph.f_edge[where[old]][i] = where[tgt];
        }
    }
    for (size_t e = 0; e < graph.elements.size(); ++e)
        for (int i = 0; i < n; ++i) {
            int tgt = graph.f_edge[e][i];
            if (tgt >= 0) graph.e_edge[tgt][i] = static_cast<int>(e);
        }
    for (size_t e = 0; e < graph.elements.size(); ++e)
        graph.index_[graph.elements[e]] = static_cast<int>(e);
    graph.highest = graph.index_of(zero);

    std::vector<long> x = extremal_string(datum, word, lambda, 1);
    graph.x_vector = x;
    return graph;
}

std::vector<long> extremal_string(const RootDatum& datum, const std::vector<int>& word,
                                  const Weight& lambda, int k) {
    int N = static_cast<int>(word.size());
    if (k < 1 || k > N + 1) throw std::invalid_argument("stage out of range");
    std::vector<long> x(N, 0);
    Weight cur = lambda;  // w_{>=l+1} lambda, starting at l = N
    for (int l = N; l >= k; --l) {
        cur = simple_reflection(datum, word[l - 1], cur);
        x[l - 1] = -cur[word[l - 1] - 1];
    }
    return x;
}

std::vector<int> opposite_demazure(const CrystalGraph& graph, int k) {
    int N = graph.ctx.N;
    if (k < 1 || k > N + 1) throw std::invalid_argument("stage out of range");
    std::vector<int> out;
    for (size_t e = 0; e < graph.elements.size(); ++e) {
        bool match = true;
        for (int l = k; l <= N && match; ++l)
            if (graph.elements[e][l - 1] != graph.x_vector[l - 1]) match = false;
        if (match) out.push_back(static_cast<int>(e));
    }
    return out;
}

std::vector<int> demazure_crystal(const CrystalGraph& graph, const std::vector<int>& prefix) {
    if (!is_reduced_word(graph.ctx.datum, prefix))
        throw std::invalid_argument("prefix is not reduced");
    std::vector<char> in(graph.elements.size(), 0);
    std::vector<int> cur{graph.highest};
    in[graph.highest] = 1;
    // Innermost monomial factor first: saturate letters right to left.
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        int i = *it;
        std::vector<int> frontier = cur;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int e : frontier) {
                int tgt = graph.f_edge[e][i - 1];
                if (tgt >= 0 && !in[tgt]) {
                    in[tgt] = 1;
                    cur.push_back(tgt);
                    next.push_back(tgt);
                }
            }
            frontier = std::move(next);
        }
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

CharacterPolynomial character(const CrystalGraph& graph, const std::vector<int>& indices) {
    CharacterPolynomial chi;
    for (int e : indices) ++chi[graph.ctx.weight(graph.elements[e])];
    return chi;
}

CharacterPolynomial character_all(const CrystalGraph& graph) {
    std::vector<int> all(graph.elements.size());
    std::iota(all.begin(), all.end(), 0);
    return character(graph, all);
}

CharacterPolynomial char_demazure(const CharacterPolynomial& chi, const RootDatum& datum,
                                  int i) {
    if (i < 1 || i > datum.rank) throw std::invalid_argument("color out of range");
    CharacterPolynomial out;
    auto add_term = [&](Weight w, long long c) {
        auto it = out.find(w);
        if (it == out.end()) {
            if (c != 0) out.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    auto shift = [&](const Weight& w, long t) {
        Weight s = w;
        for (int r = 0; r < datum.rank; ++r) s[r] += t * datum.cartan[r][i - 1];
        return s;
    };
    for (const auto& [mu, coef] : chi) {
        long m = mu[i - 1];
        if (m <= 0) {
            for (long t = 0; t <= -m; ++t) add_term(shift(mu, t), coef);
        } else if (m >= 2) {
            for (long t = 1; t <= m - 1; ++t) add_term(shift(mu, -t), -coef);
        }
        // m == 1 contributes nothing: the fraction's numerator vanishes.
    }
    return out;
}

std::vector<CrystalFiber> crystal_fibers(const CrystalGraph& graph, int i) {
    const auto& pos = graph.ctx.idx.positions[i - 1];
    int N = graph.ctx.N;
    std::vector<int> others;
    for (int p = 1; p <= N; ++p)
        if (graph.ctx.word[p - 1] != i) others.push_back(p);

    std::map<std::vector<int>, std::vector<int>> groups;
    for (size_t e = 0; e < graph.elements.size(); ++e) {
        std::vector<int> key(others.size());
        for (size_t t = 0; t < others.size(); ++t) key[t] = graph.elements[e][others[t] - 1];
        groups[key].push_back(static_cast<int>(e));
    }

    std::vector<CrystalFiber> out;
    for (auto& [key, members] : groups) {
        CrystalFiber f;
        f.base = key;
        f.indices = members;
        size_t d = pos.size();
        f.mu.assign(d, 0);
        f.nu.assign(d, 0);
        for (size_t l = 0; l < d; ++l) {
            long lo = graph.elements[members[0]][pos[l] - 1];
            long hi = lo;
            for (int e : members) {
                long v = graph.elements[e][pos[l] - 1];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            f.mu[l] = lo;
            f.nu[l] = hi;
        }
        long long volume = 1;
        for (size_t l = 0; l < d; ++l) volume *= (f.nu[l] - f.mu[l] + 1);
        f.is_box = (volume == static_cast<long long>(members.size()));
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

// One sl2 string factor of length len: positions 0..len with eps = p, phi = len - p.
struct StringTensor {
    std::vector<long> len;

    // Left fold over factors maintaining (eps, phi) of the processed prefix.
    // The lowering operator stays in the prefix iff phi(prefix) > eps(next);
    // the raising operator iff phi(prefix) >= eps(next).
    int fold_slot(const std::vector<long>& p, bool raising) const {
        int slot = -1;
        long eps = 0, phi = 0;
        for (size_t l = 0; l < len.size(); ++l) {
            long e2 = p[l], f2 = len[l] - p[l];
            if (slot < 0) {
                slot = static_cast<int>(l);
            } else {
                bool stay = raising ? (phi >= e2) : (phi > e2);
                if (!stay) slot = static_cast<int>(l);
                long wt1 = phi - eps, wt2 = f2 - e2;
                long eps_new = std::max(eps, e2 - wt1);
                long phi_new = std::max(f2, phi + wt2);
                eps = eps_new;
                phi = phi_new;
                continue;
            }
            eps = e2;
            phi = f2;
        }
        return slot;
    }

    // Where the lowering operator acts on p; -1 if it dies.
    int f_slot(const std::vector<long>& p) const {
        int slot = fold_slot(p, false);
        if (slot < 0) return -1;
        return (p[slot] < len[slot]) ? slot : -1;
    }

    int e_slot(const std::vector<long>& p) const {
        int slot = fold_slot(p, true);
        if (slot < 0) return -1;
        return (p[slot] > 0) ? slot : -1;
    }
};

}  // namespace

std::string check_fiber_string_iso(const CrystalGraph& graph, int i,
                                   const CrystalFiber& fiber) {
    if (!fiber.is_box) return "fiber is not an integer box";
    const auto& pos = graph.ctx.idx.positions[i - 1];
    size_t d = pos.size();
    StringTensor tensor;
    tensor.len.resize(d);
    for (size_t l = 0; l < d; ++l) tensor.len[l] = fiber.nu[l] - fiber.mu[l];

    auto tensor_pos = [&](int e) {
        std::vector<long> p(d);
        for (size_t l = 0; l < d; ++l)
            p[l] = graph.elements[e][pos[l] - 1] - fiber.mu[l];
        return p;
    };
    auto member_with = [&](std::vector<long> p) -> int {
        // Reconstruct the element and look it up.
        ElementVec a = graph.elements[fiber.indices[0]];
        for (size_t l = 0; l < d; ++l)
            a[pos[l] - 1] = static_cast<int>(p[l] + fiber.mu[l]);
        return graph.index_of(a);
    };

    for (int e : fiber.indices) {
        std::vector<long> p = tensor_pos(e);

        int fs = tensor.f_slot(p);
        int f_graph = graph.f_edge[e][i - 1];
        if (fs < 0) {
            if (f_graph >= 0) return "lowering differs: tensor dies, crystal moves";
        } else {
            std::vector<long> q = p;
            ++q[fs];
            int expect = member_with(q);
            if (expect < 0) return "lowering differs: tensor image outside fiber";
            if (f_graph != expect) return "lowering differs: slots disagree";
        }

        int es = tensor.e_slot(p);
        int e_graph = graph.e_edge[e][i - 1];
        if (es < 0) {
            if (e_graph >= 0) return "raising differs: tensor dies, crystal moves";
        } else {
            std::vector<long> q = p;
            --q[es];
            int expect = member_with(q);
            if (expect < 0) return "raising differs: tensor image outside fiber";
            if (e_graph != expect) return "raising differs: slots disagree";
        }
    }
    return {};
}

}  // namespace nz
