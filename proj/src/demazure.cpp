#include "nz/demazure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "nz/crystal.hpp"

namespace nz {

LambdaData lambda_data(const RootDatum& datum, const std::vector<int>& word,
                       const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("lambda_data: weight not dominant");
    const int n = datum.rank;
    WordIndexing idx = word_indexing(word, n);

    // y = coordinates of lambda in simple roots: C y = lambda.
    QMat c(n, QVec(n));
    QVec rhs(n);
    for (int r = 0; r < n; ++r) {
        rhs[r] = Q(lambda[r]);
        for (int j = 0; j < n; ++j) c[r][j] = Q(datum.cartan[r][j]);
    }
    QVec y = solve_linear(std::move(c), std::move(rhs));

    LambdaData out;
    out.lambda = lambda;
    out.lambda_hat.resize(n);
    for (int i = 0; i < n; ++i) {
        if (idx.d[i] == 0) {
            if (y[i] != 0)
                throw std::invalid_argument("lambda_data: color missing from the word");
            out.lambda_hat[i] = 0;
        } else {
            out.lambda_hat[i] = y[i] / Q(static_cast<long>(idx.d[i]));
        }
    }
    for (int r = 0; r < n; ++r) {
        Q back = 0;
        for (int i = 0; i < n; ++i)
            back += out.lambda_hat[i] * Q(static_cast<long>(idx.d[i])) *
                    Q(datum.cartan[r][i]);
        if (back != Q(lambda[r]))
            throw std::logic_error("lambda_data: decomposition does not reproduce lambda");
    }
    out.x_vector = extremal_string(datum, word, lambda, 1);
    out.hat_by_pos.resize(word.size());
    out.a_lambda.resize(word.size());
    for (size_t l = 0; l < word.size(); ++l) {
        out.hat_by_pos[l] = out.lambda_hat[word[l] - 1];
        out.a_lambda[l] = out.hat_by_pos[l] - Q(out.x_vector[l]);
    }
    return out;
}

Q l_functional(const RootDatum& datum, const std::vector<int>& word, int color, const QVec& a) {
    if (a.size() != word.size()) throw std::invalid_argument("l_functional: size mismatch");
    Q s = 0;
    for (size_t k = 0; k < word.size(); ++k)
        if (word[k] != color) s -= Q(datum.cartan[color - 1][word[k] - 1]) * a[k];
    return s;
}

long long l_functional(const RootDatum& datum, const std::vector<int>& word, int color,
                       const std::vector<long long>& a) {
    if (a.size() != word.size()) throw std::invalid_argument("l_functional: size mismatch");
    long long s = 0;
    for (size_t k = 0; k < word.size(); ++k)
        if (word[k] != color) s -= datum.cartan[color - 1][word[k] - 1] * a[k];
    return s;
}

namespace {

// The tracked set is stored flat (row-major, one row per point) so that a
// step over millions of points costs no per-point heap traffic. Fibers are
// grouped by packing the base coordinates (positions of the other colors)
// into one 64-bit key; fields are laid out most significant first, so key
// order is lexicographic base order and min-key selection reproduces the
// sorted-map iteration the halt witnesses are defined by.
struct FiberKeySpec {
    std::vector<int> pos;       // base positions, ascending
    std::vector<long long> lo;  // per-position minimum over the tracked set
    std::vector<int> bits;      // field widths

    uint64_t key_of(const long long* row) const {
        uint64_t k = 0;
        for (size_t t = 0; t < pos.size(); ++t)
            k = (k << bits[t]) | static_cast<uint64_t>(row[pos[t]] - lo[t]);
        return k;
    }

    std::vector<long long> decode(uint64_t k) const {
        std::vector<long long> base(pos.size());
        for (size_t t = pos.size(); t-- > 0;) {
            base[t] = lo[t] +
                      static_cast<long long>(k & ((uint64_t{1} << bits[t]) - 1));
            k >>= bits[t];
        }
        return base;
    }
};

FiberKeySpec make_key_spec(const std::vector<long long>& flat, int dim,
                           const std::vector<int>& base_pos) {
    FiberKeySpec spec;
    spec.pos = base_pos;
    spec.lo.assign(base_pos.size(), 0);
    spec.bits.assign(base_pos.size(), 1);
    if (base_pos.empty()) return spec;
    std::vector<long long> hi(base_pos.size());
    for (size_t t = 0; t < base_pos.size(); ++t) spec.lo[t] = hi[t] = flat[base_pos[t]];
    for (size_t r = dim; r < flat.size(); r += static_cast<size_t>(dim))
        for (size_t t = 0; t < base_pos.size(); ++t) {
            long long v = flat[r + base_pos[t]];
            spec.lo[t] = std::min(spec.lo[t], v);
            hi[t] = std::max(hi[t], v);
        }
    int total = 0;
    for (size_t t = 0; t < base_pos.size(); ++t) {
        spec.bits[t] = std::max(
            1, static_cast<int>(
                   std::bit_width(static_cast<unsigned long long>(hi[t] - spec.lo[t]))));
        total += spec.bits[t];
    }
    // A set wide enough to overflow the key would be far too large to expand
    // point by point anyway; fail loudly rather than degrade.
    if (total > 63) throw std::overflow_error("chain: fiber key exceeds 63 bits");
    return spec;
}

// Componentwise block bounds and member count per base, discovery-ordered.
struct FiberTable {
    int block = 0;                  // slots per fiber
    std::vector<uint64_t> keys;
    std::vector<long long> mu, nu;  // fiber-major, stride = block
    std::vector<long long> count;
    std::unordered_map<uint64_t, uint32_t> index;

    uint32_t size() const { return static_cast<uint32_t>(keys.size()); }

    uint32_t add(const long long* row, const FiberKeySpec& spec,
                 const std::vector<int>& color_pos) {
        uint64_t key = spec.key_of(row);
        auto [it, inserted] = index.try_emplace(key, size());
        uint32_t f = it->second;
        if (inserted) {
            keys.push_back(key);
            for (int t = 0; t < block; ++t) {
                mu.push_back(row[color_pos[t]]);
                nu.push_back(row[color_pos[t]]);
            }
            count.push_back(1);
        } else {
            long long* m = &mu[static_cast<size_t>(f) * block];
            long long* x = &nu[static_cast<size_t>(f) * block];
            for (int t = 0; t < block; ++t) {
                long long v = row[color_pos[t]];
                m[t] = std::min(m[t], v);
                x[t] = std::max(x[t], v);
            }
            ++count[f];
        }
        return f;
    }
};

FiberTable group_fibers(const std::vector<long long>& flat, int dim,
                        const FiberKeySpec& spec, const std::vector<int>& color_pos,
                        std::vector<uint32_t>* row_fiber = nullptr) {
    FiberTable tab;
    tab.block = static_cast<int>(color_pos.size());
    const size_t rows = flat.size() / dim;
    tab.index.reserve(rows / 4 + 16);
    if (row_fiber) {
        row_fiber->clear();
        row_fiber->reserve(rows);
    }
    for (size_t r = 0; r < flat.size(); r += static_cast<size_t>(dim)) {
        uint32_t f = tab.add(&flat[r], spec, color_pos);
        if (row_fiber) row_fiber->push_back(f);
    }
    return tab;
}

// Clamped so the comparison against a member count stays exact: a real count
// is bounded by the tracked set size, far below the clamp.
long long box_volume_clamped(const long long* mu, const long long* nu, int block) {
    const long long cap = std::numeric_limits<long long>::max() / 2;
    long long vol = 1;
    for (int t = 0; t < block; ++t) {
        long long range = nu[t] - mu[t] + 1;
        if (vol > cap / range) return cap;
        vol *= range;
    }
    return vol;
}

LatticeFiber fiber_of(const std::vector<long long>& flat, int dim, const FiberKeySpec& spec,
                      const std::vector<int>& color_pos, const FiberTable& tab, uint32_t f,
                      bool collect_members) {
    LatticeFiber fib;
    fib.base = spec.decode(tab.keys[f]);
    const long long* m = &tab.mu[static_cast<size_t>(f) * tab.block];
    const long long* x = &tab.nu[static_cast<size_t>(f) * tab.block];
    fib.mu.assign(m, m + tab.block);
    fib.nu.assign(x, x + tab.block);
    fib.count = tab.count[f];
    fib.is_box = box_volume_clamped(m, x, tab.block) == fib.count;
    if (collect_members && !fib.is_box) {
        for (size_t r = 0; r < flat.size(); r += static_cast<size_t>(dim)) {
            if (spec.key_of(&flat[r]) != tab.keys[f]) continue;
            std::vector<long long> block(color_pos.size());
            for (size_t t = 0; t < color_pos.size(); ++t) block[t] = flat[r + color_pos[t]];
            fib.members_block.push_back(std::move(block));
        }
        std::sort(fib.members_block.begin(), fib.members_block.end());
    }
    return fib;
}

// Shared chain driver. The expansion amount of a fiber is
//   crystal model: -<lambda, h_i> + sum_l (mu_l + nu_l) + sum_{other s} c_{i, i_s} base_s,
//                  stretching position k downward from its pinned value;
//   scaled model:  l_i(base) - sum_l (mu_l + nu_l), stretching upward.
// Both are the same operator in reflected coordinates.
ChainResult run_chain(const RootDatum& datum, const std::vector<int>& word,
                      std::vector<long long> start, const Weight* lambda, bool downward,
                      long scale, bool per_step_hulls, bool store_points) {
    const int dim = static_cast<int>(word.size());
    WordIndexing idx = word_indexing(word, datum.rank);

    ChainResult result;
    result.scale = scale;
    const std::vector<long long> pinned = start;
    std::vector<long long> flat = std::move(start);

    for (int k = 1; k <= dim; ++k) {
        const int i = word[k - 1];
        for (size_t r = 0; r < flat.size(); r += static_cast<size_t>(dim))
            if (flat[r + k - 1] != pinned[k - 1])
                throw std::logic_error("chain: coordinate not constant before its step");

        std::vector<int> color_pos, other_pos;
        for (int s = 0; s < dim; ++s)
            (word[s] == i ? color_pos : other_pos).push_back(s);

        FiberKeySpec spec = make_key_spec(flat, dim, other_pos);
        std::vector<uint32_t> row_fiber;
        FiberTable pre = group_fibers(flat, dim, spec, color_pos, &row_fiber);

        uint32_t bad = UINT32_MAX;
        for (uint32_t f = 0; f < pre.size(); ++f) {
            const size_t at = static_cast<size_t>(f) * pre.block;
            if (box_volume_clamped(&pre.mu[at], &pre.nu[at], pre.block) != pre.count[f] &&
                (bad == UINT32_MAX || pre.keys[f] < pre.keys[bad]))
                bad = f;
        }
        if (bad != UINT32_MAX) {
            result.halt_step = k;
            result.halt_reason = "non-box fiber";
            result.witness = fiber_of(flat, dim, spec, color_pos, pre, bad, true);
            return result;
        }

        std::vector<long long> bound(pre.size());
        long long bound_min = std::numeric_limits<long long>::max();
        uint32_t neg = UINT32_MAX;
        for (uint32_t f = 0; f < pre.size(); ++f) {
            std::vector<long long> base = spec.decode(pre.keys[f]);
            long long sum_mn = 0;
            for (int t = 0; t < pre.block; ++t) {
                const size_t at = static_cast<size_t>(f) * pre.block + t;
                sum_mn += pre.mu[at] + pre.nu[at];
            }
            long long b;
            if (downward) {
                b = -(*lambda)[i - 1] + sum_mn;
                for (size_t t = 0; t < other_pos.size(); ++t)
                    b += datum.cartan[i - 1][word[other_pos[t]] - 1] * base[t];
            } else {
                long long lval = 0;
                for (size_t t = 0; t < other_pos.size(); ++t)
                    lval -= datum.cartan[i - 1][word[other_pos[t]] - 1] * base[t];
                b = lval - sum_mn;
            }
            bound[f] = b;
            bound_min = std::min(bound_min, b);
            if (b < 0 && (neg == UINT32_MAX || pre.keys[f] < pre.keys[neg])) neg = f;
        }
        if (neg != UINT32_MAX) {
            result.halt_step = k;
            result.halt_reason = "virtual";
            result.witness = fiber_of(flat, dim, spec, color_pos, pre, neg, false);
            result.witness_bound = bound[neg];
            return result;
        }

        ChainStep step;
        step.k = k;
        step.color = i;
        step.fibers_processed = static_cast<long long>(pre.size());
        step.bound_min = bound_min;
        step.points_before = static_cast<long long>(flat.size() / dim);

        unsigned long long grow = 0;
        for (uint32_t f = 0; f < pre.size(); ++f)
            grow += static_cast<unsigned long long>(bound[f]) *
                    static_cast<unsigned long long>(pre.count[f]);

        // Without point storage the last step is streamed: rows feed the
        // post-step bookkeeping as they are produced and are then dropped.
        const bool stream = !store_points && k == dim;

        // Every tracked point lies on an expansion segment, so the hull input
        // can be thinned to the segment endpoints.
        std::vector<std::vector<long long>> hull_in;
        if (per_step_hulls) hull_in.reserve(2 * (flat.size() / dim));
        if (!stream) flat.reserve(flat.size() + static_cast<size_t>(grow) * dim);

        FiberTable post;
        post.block = static_cast<int>(color_pos.size());
        post.index.reserve(pre.index.size() * 2 + 16);
        std::vector<long long> rowbuf(dim);
        const size_t old_size = flat.size();
        for (size_t r = 0, ri = 0; r < old_size; r += static_cast<size_t>(dim), ++ri) {
            long long b = bound[row_fiber[ri]];
            std::copy(flat.begin() + r, flat.begin() + r + dim, rowbuf.begin());
            post.add(rowbuf.data(), spec, color_pos);
            if (per_step_hulls) hull_in.push_back(rowbuf);
            for (long long t = 1; t <= b; ++t) {
                rowbuf[k - 1] = pinned[k - 1] + (downward ? -t : t);
                post.add(rowbuf.data(), spec, color_pos);
                if (!stream) flat.insert(flat.end(), rowbuf.begin(), rowbuf.end());
                if (per_step_hulls && t == b) hull_in.push_back(rowbuf);
            }
        }
        step.points_after =
            static_cast<long long>(old_size / dim) + static_cast<long long>(grow);

        // The stretched fibers must again be boxes whose bounds in the slot of
        // position k are the pinned value and its translate by the amount.
        bool ok = post.size() == pre.size();
        const int mk = idx.m_of[k - 1] - 1;
        for (uint32_t f = 0; ok && f < post.size(); ++f) {
            auto it = pre.index.find(post.keys[f]);
            if (it == pre.index.end()) {
                ok = false;
                break;
            }
            long long b = bound[it->second];
            long long lo = downward ? pinned[k - 1] - b : pinned[k - 1];
            long long hi = downward ? pinned[k - 1] : pinned[k - 1] + b;
            const size_t at = static_cast<size_t>(f) * post.block;
            ok = box_volume_clamped(&post.mu[at], &post.nu[at], post.block) == post.count[f] &&
                 post.mu[at + mk] == lo && post.nu[at + mk] == hi;
        }
        step.box_identities_ok = ok;

        if (per_step_hulls) {
            step.hull = convex_hull_lattice(hull_in);
            step.convex_on_grid =
                lattice_points(step.hull).size() ==
                static_cast<size_t>(step.points_after);
        }
        if (store_points) {
            std::vector<std::vector<long long>> pts;
            pts.reserve(flat.size() / dim);
            for (size_t r = 0; r < flat.size(); r += static_cast<size_t>(dim))
                pts.emplace_back(flat.begin() + r, flat.begin() + r + dim);
            std::sort(pts.begin(), pts.end());
            step.points = std::move(pts);
        }
        if (stream) {
            std::vector<uint32_t> order(post.size());
            for (uint32_t f = 0; f < post.size(); ++f) order[f] = f;
            std::sort(order.begin(), order.end(), [&post](uint32_t a, uint32_t b) {
                return post.keys[a] < post.keys[b];
            });
            result.final_fibers.reserve(post.size());
            for (uint32_t f : order) {
                LatticeFiber fib;
                fib.base = spec.decode(post.keys[f]);
                const long long* m = &post.mu[static_cast<size_t>(f) * post.block];
                const long long* x = &post.nu[static_cast<size_t>(f) * post.block];
                fib.mu.assign(m, m + post.block);
                fib.nu.assign(x, x + post.block);
                fib.count = post.count[f];
                fib.is_box = box_volume_clamped(m, x, post.block) == fib.count;
                result.final_fibers.push_back(std::move(fib));
            }
        }
        result.steps.push_back(std::move(step));
    }
    result.completed = true;
    return result;
}

}  // namespace

ChainResult run_chain_crystal_model(const RootDatum& datum, const std::vector<int>& word,
                                    const Weight& lambda, bool per_step_hulls,
                                    bool store_points) {
    if (!is_reduced_word(datum, word))
        throw std::invalid_argument("chain: word is not reduced");
    if (!is_dominant(lambda)) throw std::invalid_argument("chain: weight not dominant");
    std::vector<long> x = extremal_string(datum, word, lambda, 1);
    std::vector<long long> start(x.begin(), x.end());
    return run_chain(datum, word, std::move(start), &lambda, true, 1, per_step_hulls,
                     store_points);
}

ChainResult run_chain_scaled(const RootDatum& datum, const std::vector<int>& word,
                             const QVec& a_start, bool per_step_hulls, bool store_points) {
    if (!is_reduced_word(datum, word))
        throw std::invalid_argument("chain: word is not reduced");
    if (a_start.size() != word.size())
        throw std::invalid_argument("chain: start vector size mismatch");
    Z denom = lcm_denominators(a_start);
    if (!denom.fits_slong_p()) throw std::overflow_error("chain: scale too large");
    long scale = denom.get_si();
    std::vector<long long> start(a_start.size());
    for (size_t j = 0; j < a_start.size(); ++j) {
        Q scaled = a_start[j] * Q(denom);
        scaled.canonicalize();
        if (!Z(scaled.get_num()).fits_slong_p())
            throw std::overflow_error("chain: start coordinate too large");
        start[j] = scaled.get_num().get_si();
    }
    return run_chain(datum, word, std::move(start), nullptr, false, scale, per_step_hulls,
                     store_points);
}

}  // namespace nz
