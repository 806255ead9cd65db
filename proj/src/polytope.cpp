#include "nz/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "nz/crystal.hpp"
#include "nz/dd.hpp"

namespace nz {
namespace {

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

bool is_integral(const QVec& v) {
    for (const auto& c : v)
        if (c.get_den() != 1) return false;
    return true;
}

Z floor_q(const Q& q) {
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Z ceil_q(const Q& q) {
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long long to_ll(const Z& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("coordinate exceeds machine range");
    return z.get_si();
}

}  // namespace

bool RationalPolytope::contains(const QVec& x) const {
    if (static_cast<int>(x.size()) != ambient_dim) return false;
    for (const auto& eq : equations)
        if (dot_zq(eq.normal, x) != -eq.offset) return false;
    for (const auto& f : facets)
        if (dot_zq(f.normal, x) < -f.offset) return false;
    return true;
}

RationalPolytope convex_hull(const std::vector<QVec>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    const int dim = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("convex_hull: mixed dimensions");

    std::vector<QVec> pts = points;
    std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    RationalPolytope poly;
    poly.ambient_dim = dim;

    // Affine hull via the RREF of the difference matrix; the pivot columns J
    // give injective coordinates y = x_J on the hull, each non-pivot column
    // one equation.
    QMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec d(dim);
        for (int j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    std::vector<int> piv = rref(diffs);
    const int d = static_cast<int>(piv.size());
    poly.affine_dim = d;

    std::vector<char> is_piv(dim, 0);
    for (int j : piv) is_piv[j] = 1;
    for (int k = 0; k < dim; ++k) {
        if (is_piv[k]) continue;
        QVec u(dim, Q(0));
        u[k] = 1;
        for (int r = 0; r < d; ++r) u[piv[r]] = -diffs[r][k];
        ZVec un = primitive_integer(u);
        Q off = -dot_zq(un, pts[0]);
        poly.equations.push_back({std::move(un), off});
    }
    std::sort(poly.equations.begin(), poly.equations.end(), halfspace_less);

    if (d == 0) {
        poly.vertices.push_back(pts[0]);
        return poly;
    }

    // Midpoint prune on large integral inputs: a point with both axis
    // neighbours present is interior to a segment, hence never a vertex.
    std::vector<const QVec*> cand;
    bool integral = true;
    for (const auto& p : pts)
        if (!is_integral(p)) {
            integral = false;
            break;
        }
    if (integral && pts.size() > 64) {
        std::unordered_set<std::vector<long long>, VecHash> have;
        std::vector<std::vector<long long>> keys(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<long long> key(dim);
            for (int j = 0; j < dim; ++j) key[j] = to_ll(Z(pts[i][j].get_num()));
            have.insert(key);
            keys[i] = std::move(key);
        }
        for (size_t i = 0; i < pts.size(); ++i) {
            bool interior = false;
            std::vector<long long> probe = keys[i];
            for (int j = 0; j < dim && !interior; ++j) {
                probe[j] -= 1;
                bool lo = have.count(probe) > 0;
                probe[j] += 2;
                bool hi = have.count(probe) > 0;
                probe[j] -= 1;
                interior = lo && hi;
            }
            if (!interior) cand.push_back(&pts[i]);
        }
    } else {
        for (const auto& p : pts) cand.push_back(&p);
    }

    // Valid-inequality cone over (c0, c): c0 + <c, y_p> >= 0 for every point.
    // Its extreme rays are exactly the facets of the hull.
    std::vector<ZVec> rows;
    rows.reserve(cand.size());
    for (const QVec* p : cand) {
        QVec row(d + 1);
        row[0] = 1;
        for (int t = 0; t < d; ++t) row[t + 1] = (*p)[piv[t]];
        rows.push_back(primitive_integer(row));
    }
    std::vector<DDRay> rays = dual_description(rows, d + 1);

    for (const auto& ray : rays) {
        ZVec c(ray.v.begin() + 1, ray.v.end());
        Z g = gcd_all(c);
        if (g == 0) throw std::logic_error("convex_hull: trivial inequality ray");
        ZVec u(dim, Z(0));
        for (int t = 0; t < d; ++t) u[piv[t]] = c[t] / g;
        Q off(ray.v[0], g);
        off.canonicalize();
        poly.facets.push_back({std::move(u), off});
    }
    std::sort(poly.facets.begin(), poly.facets.end(), halfspace_less);

    // A point is a vertex iff its tight facet normals span the projected space.
    for (size_t idx = 0; idx < cand.size(); ++idx) {
        QMat tight;
        for (const auto& ray : rays)
            if (ray.tight.test(idx))
                tight.push_back(QVec(to_qvec(ZVec(ray.v.begin() + 1, ray.v.end()))));
        if (static_cast<int>(rank_of(std::move(tight))) == d)
            poly.vertices.push_back(*cand[idx]);
    }
    std::sort(poly.vertices.begin(), poly.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    if (poly.vertices.empty()) throw std::logic_error("convex_hull: no vertices found");
    return poly;
}

RationalPolytope convex_hull_lattice(const std::vector<std::vector<long long>>& points) {
    std::vector<QVec> qpts;
    qpts.reserve(points.size());
    for (const auto& p : points) {
        QVec q(p.size());
        for (size_t j = 0; j < p.size(); ++j) q[j] = Q(static_cast<long>(p[j]));
        qpts.push_back(std::move(q));
    }
    return convex_hull(qpts);
}

bool equal_polytopes(const RationalPolytope& a, const RationalPolytope& b) {
    return a.ambient_dim == b.ambient_dim && a.vertices == b.vertices;
}

RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<QVec> sums;
    sums.reserve(a.vertices.size() * b.vertices.size());
    for (const auto& u : a.vertices)
        for (const auto& v : b.vertices) {
            QVec s(a.ambient_dim);
            for (int j = 0; j < a.ambient_dim; ++j) s[j] = u[j] + v[j];
            sums.push_back(std::move(s));
        }
    return convex_hull(sums);
}

RationalPolytope dilate(const RationalPolytope& p, const Q& c) {
    if (c < 0) throw std::invalid_argument("dilate: negative factor");
    if (c == 0) return convex_hull({QVec(p.ambient_dim, Q(0))});
    RationalPolytope out = p;
    for (auto& v : out.vertices)
        for (auto& x : v) x *= c;
    for (auto& f : out.facets) f.offset *= c;
    for (auto& e : out.equations) e.offset *= c;
    return out;
}

RationalPolytope reflect_translate(const RationalPolytope& p, const QVec& t) {
    if (static_cast<int>(t.size()) != p.ambient_dim)
        throw std::invalid_argument("reflect_translate: dimension mismatch");
    RationalPolytope out;
    out.ambient_dim = p.ambient_dim;
    out.affine_dim = p.affine_dim;
    for (const auto& v : p.vertices) {
        QVec w(t.size());
        for (size_t j = 0; j < t.size(); ++j) w[j] = t[j] - v[j];
        out.vertices.push_back(std::move(w));
    }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    auto flip = [&](const Halfspace& h) {
        ZVec n(h.normal.size());
        for (size_t j = 0; j < n.size(); ++j) n[j] = -h.normal[j];
        return Halfspace{std::move(n), h.offset + dot_zq(h.normal, t)};
    };
    for (const auto& f : p.facets) out.facets.push_back(flip(f));
    for (const auto& e : p.equations) out.equations.push_back(flip(e));
    std::sort(out.facets.begin(), out.facets.end(), halfspace_less);
    std::sort(out.equations.begin(), out.equations.end(), halfspace_less);
    return out;
}

namespace {

// Depth-first box scan with per-constraint suffix bounds; I is long long when
// the magnitudes allow it and Z otherwise.
template <typename I>
struct ScanConstraint {
    std::vector<I> a;
    I b;  // sum a_j x_j >= b (or == b)
    bool equality = false;
    bool strict = false;
    std::vector<I> sufmax, sufmin;  // over coordinates j >= t
};

inline void assign_from_z(long long& dst, const Z& z) { dst = to_ll(z); }
inline void assign_from_z(Z& dst, const Z& z) { dst = z; }

inline Z to_z(const Z& v) { return v; }
inline Z to_z(long long v) { return Z(static_cast<long>(v)); }

template <typename I>
void scan_rec(int t, int dim, const std::vector<I>& lo, const std::vector<I>& hi,
              std::vector<ScanConstraint<I>>& cons, std::vector<I>& partial, std::vector<I>& x,
              std::vector<ZVec>& out) {
    if (t == dim) {
        ZVec pt(dim);
        for (int j = 0; j < dim; ++j) pt[j] = to_z(x[j]);
        out.push_back(std::move(pt));
        return;
    }
    for (I v = lo[t]; v <= hi[t]; ++v) {
        bool ok = true;
        for (size_t ci = 0; ci < cons.size() && ok; ++ci) {
            auto& c = cons[ci];
            I p = partial[ci] + c.a[t] * v;
            I up = p + c.sufmax[t + 1];
            I dn = p + c.sufmin[t + 1];
            if (c.equality) {
                ok = dn <= c.b && c.b <= up;
            } else if (c.strict) {
                ok = up > c.b;
            } else {
                ok = up >= c.b;
            }
        }
        if (!ok) continue;
        std::vector<I> saved = partial;
        for (size_t ci = 0; ci < cons.size(); ++ci) partial[ci] += cons[ci].a[t] * v;
        x[t] = v;
        scan_rec(t + 1, dim, lo, hi, cons, partial, x, out);
        partial = std::move(saved);
    }
}

template <typename I>
std::vector<ZVec> scan_box(const std::vector<Z>& lo_z, const std::vector<Z>& hi_z,
                           const std::vector<ScanConstraint<Z>>& cons_z) {
    const int dim = static_cast<int>(lo_z.size());
    std::vector<I> lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
        assign_from_z(lo[j], lo_z[j]);
        assign_from_z(hi[j], hi_z[j]);
    }
    std::vector<ScanConstraint<I>> cons;
    for (const auto& cz : cons_z) {
        ScanConstraint<I> c;
        assign_from_z(c.b, cz.b);
        c.equality = cz.equality;
        c.strict = cz.strict;
        c.a.resize(dim);
        for (int j = 0; j < dim; ++j) assign_from_z(c.a[j], cz.a[j]);
        c.sufmax.assign(dim + 1, I(0));
        c.sufmin.assign(dim + 1, I(0));
        for (int j = dim - 1; j >= 0; --j) {
            I vlo = c.a[j] * lo[j], vhi = c.a[j] * hi[j];
            c.sufmax[j] = c.sufmax[j + 1] + std::max(vlo, vhi);
            c.sufmin[j] = c.sufmin[j + 1] + std::min(vlo, vhi);
        }
        cons.push_back(std::move(c));
    }
    std::vector<I> partial(cons.size(), I(0)), x(dim, I(0));
    std::vector<ZVec> out;
    scan_rec<I>(0, dim, lo, hi, cons, partial, x, out);
    return out;
}

std::vector<ZVec> lattice_scan(const RationalPolytope& p, bool strict_facets) {
    if (p.vertices.empty()) throw std::logic_error("lattice scan on empty polytope");
    if (strict_facets && !p.equations.empty()) return {};  // no interior off full dimension
    const int dim = p.ambient_dim;
    std::vector<Z> lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
        Q mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            if (v[j] < mn) mn = v[j];
            if (v[j] > mx) mx = v[j];
        }
        lo[j] = ceil_q(mn);
        hi[j] = floor_q(mx);
        if (lo[j] > hi[j]) return {};
    }
    std::vector<ScanConstraint<Z>> cons;
    auto add = [&](const Halfspace& h, bool equality) {
        ScanConstraint<Z> c;
        Z den = h.offset.get_den();  // > 0
        c.a.resize(dim);
        for (int j = 0; j < dim; ++j) c.a[j] = h.normal[j] * den;
        c.b = -Z(h.offset.get_num());
        c.equality = equality;
        c.strict = strict_facets && !equality;
        cons.push_back(std::move(c));
    };
    for (const auto& f : p.facets) add(f, false);
    for (const auto& e : p.equations) add(e, true);

    // Machine integers when every partial sum provably fits.
    Z worst = 0;
    for (int j = 0; j < dim; ++j) {
        Z m = abs(lo[j]) > abs(hi[j]) ? abs(lo[j]) : abs(hi[j]);
        if (m > worst) worst = m;
    }
    Z budget = 0;
    for (const auto& c : cons) {
        Z s = abs(c.b);
        for (const auto& a : c.a) s += abs(a) * worst;
        if (s > budget) budget = s;
    }
    if (budget < Z("4611686018427387904"))  // 2^62
        return scan_box<long long>(lo, hi, cons);
    return scan_box<Z>(lo, hi, cons);
}

}  // namespace

std::vector<ZVec> lattice_points(const RationalPolytope& p) { return lattice_scan(p, false); }

std::vector<ZVec> interior_lattice_points(const RationalPolytope& p) {
    return lattice_scan(p, true);
}

bool is_lattice_polytope(const RationalPolytope& p) {
    for (const auto& v : p.vertices)
        if (!is_integral(v)) return false;
    return true;
}

ReflexiveReport is_reflexive(const RationalPolytope& p) {
    if (!is_lattice_polytope(p)) throw std::invalid_argument("is_reflexive: not a lattice polytope");
    if (!p.equations.empty())
        throw std::invalid_argument("is_reflexive: not full-dimensional (project first)");
    ReflexiveReport rep;
    std::vector<ZVec> interior = interior_lattice_points(p);
    if (interior.size() != 1) {
        rep.reflexive = false;
        rep.diagnostic = "interior lattice point count is " + std::to_string(interior.size());
        return rep;
    }
    rep.interior_point = interior[0];
    QVec pq = to_qvec(rep.interior_point);
    for (const auto& f : p.facets) {
        Q dist = dot_zq(f.normal, pq) + f.offset;
        if (dist != 1) {
            rep.reflexive = false;
            rep.diagnostic = "facet at lattice distance " + rational_str(dist);
            return rep;
        }
    }
    rep.reflexive = true;
    return rep;
}

RationalPolytope project_to_affine_hull(const RationalPolytope& p) {
    if (p.equations.empty()) return p;
    const int dim = p.ambient_dim;
    const int d = p.affine_dim;

    // Column elimination with a unimodular transform U: E U = [L | 0]; the
    // trailing columns of U are a basis of the saturated kernel lattice, so
    // the re-coordinatization preserves lattice points.
    std::vector<ZVec> m, u(dim, ZVec(dim, Z(0)));
    for (const auto& e : p.equations) m.push_back(e.normal);
    for (int j = 0; j < dim; ++j) u[j][j] = 1;
    auto col_sub = [&](int dst, int src, const Z& q) {
        for (auto& row : m) row[dst] -= q * row[src];
        for (auto& row : u) row[dst] -= q * row[src];
    };
    auto col_swap = [&](int a, int b) {
        for (auto& row : m) std::swap(row[a], row[b]);
        for (auto& row : u) std::swap(row[a], row[b]);
    };
    auto col_neg = [&](int a) {
        for (auto& row : m) row[a] = -row[a];
        for (auto& row : u) row[a] = -row[a];
    };
    int r = 0;
    for (size_t i = 0; i < m.size() && r < dim; ++i) {
        for (;;) {
            int nonzero = -1, count = 0;
            for (int j = r; j < dim; ++j)
                if (m[i][j] != 0) {
                    ++count;
                    if (nonzero < 0 || abs(m[i][j]) < abs(m[i][nonzero])) nonzero = j;
                }
            if (count == 0) break;
            if (count == 1) {
                if (nonzero != r) col_swap(r, nonzero);
                if (m[i][r] < 0) col_neg(r);
                ++r;
                break;
            }
            for (int j = r; j < dim; ++j) {
                if (j == nonzero || m[i][j] == 0) continue;
                Z q;
                mpz_tdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[i][nonzero].get_mpz_t());
                if (q != 0) col_sub(j, nonzero, q);
            }
        }
    }
    if (dim - r != d) throw std::logic_error("project_to_affine_hull: kernel rank mismatch");

    const QVec* base = nullptr;
    for (const auto& v : p.vertices)
        if (is_integral(v)) {
            base = &v;
            break;
        }
    if (!base) throw std::invalid_argument("project_to_affine_hull: needs a lattice vertex");

    // Kernel basis K (columns r..dim-1 of U); solve K y = v - v0 through d
    // independent rows, then verify the remaining rows.
    QMat ktrans(d, QVec(dim));
    for (int t = 0; t < d; ++t)
        for (int j = 0; j < dim; ++j) ktrans[t][j] = Q(u[j][r + t]);
    QMat probe = ktrans;
    std::vector<int> rows_used = rref(probe);
    if (static_cast<int>(rows_used.size()) != d)
        throw std::logic_error("project_to_affine_hull: kernel basis degenerate");

    std::vector<QVec> projected;
    for (const auto& v : p.vertices) {
        QMat a(d, QVec(d));
        QVec b(d);
        for (int s = 0; s < d; ++s) {
            int row = rows_used[s];
            for (int t = 0; t < d; ++t) a[s][t] = Q(u[row][r + t]);
            b[s] = v[row] - (*base)[row];
        }
        QVec y = solve_linear(std::move(a), std::move(b));
        for (int j = 0; j < dim; ++j) {
            Q lhs = 0;
            for (int t = 0; t < d; ++t) lhs += Q(u[j][r + t]) * y[t];
            if (lhs != v[j] - (*base)[j])
                throw std::logic_error("project_to_affine_hull: vertex off the hull");
        }
        projected.push_back(std::move(y));
    }
    return convex_hull(projected);
}

bool normal_fan_equal(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("normal_fan_equal: dimension mismatch");
    if (!a.equations.empty() || !b.equations.empty())
        throw std::invalid_argument("normal_fan_equal: requires full-dimensional polytopes");
    auto vertex_cones = [](const RationalPolytope& p) {
        std::set<std::vector<ZVec>> cones;
        for (const auto& v : p.vertices) {
            std::vector<ZVec> normals;
            for (const auto& f : p.facets)
                if (dot_zq(f.normal, v) == -f.offset) normals.push_back(f.normal);
            std::sort(normals.begin(), normals.end(),
                      [](const ZVec& x, const ZVec& y) { return lex_less(x, y); });
            cones.insert(std::move(normals));
        }
        return cones;
    };
    return vertex_cones(a) == vertex_cones(b);
}

FiberExtraction extract_fibers(const std::vector<std::vector<long long>>& points,
                               const std::vector<int>& word, int color) {
    const int dim = static_cast<int>(word.size());
    int n = 0;
    for (int c : word) n = std::max(n, c);
    if (color < 1 || color > n) throw std::invalid_argument("extract_fibers: bad color");
    std::vector<int> color_pos, other_pos;
    for (int k = 0; k < dim; ++k)
        (word[k] == color ? color_pos : other_pos).push_back(k);

    std::map<std::vector<long long>, std::vector<std::vector<long long>>> groups;
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != dim)
            throw std::invalid_argument("extract_fibers: dimension mismatch");
        std::vector<long long> base(other_pos.size()), block(color_pos.size());
        for (size_t t = 0; t < other_pos.size(); ++t) base[t] = pt[other_pos[t]];
        for (size_t t = 0; t < color_pos.size(); ++t) block[t] = pt[color_pos[t]];
        groups[std::move(base)].push_back(std::move(block));
    }

    FiberExtraction out;
    for (auto& [base, blocks] : groups) {
        LatticeFiber fib;
        fib.base = base;
        fib.count = static_cast<long long>(blocks.size());
        fib.mu.assign(color_pos.size(), 0);
        fib.nu.assign(color_pos.size(), 0);
        for (size_t t = 0; t < color_pos.size(); ++t) {
            long long mn = blocks[0][t], mx = blocks[0][t];
            for (const auto& blk : blocks) {
                mn = std::min(mn, blk[t]);
                mx = std::max(mx, blk[t]);
            }
            fib.mu[t] = mn;
            fib.nu[t] = mx;
        }
        Z volume = 1;
        for (size_t t = 0; t < color_pos.size(); ++t)
            volume *= Z(static_cast<long>(fib.nu[t] - fib.mu[t] + 1));
        fib.is_box = (volume == Z(static_cast<long>(fib.count)));
        if (!fib.is_box) {
            std::sort(blocks.begin(), blocks.end());
            fib.members_block = blocks;
            if (out.witness < 0) out.witness = static_cast<int>(out.fibers.size());
            out.all_boxes = false;
        }
        out.fibers.push_back(std::move(fib));
    }
    return out;
}

FiberExtraction extract_fibers(const RationalPolytope& p, const std::vector<int>& word, int color,
                               long resolution) {
    if (resolution < 1) throw std::invalid_argument("extract_fibers: resolution must be positive");
    std::vector<ZVec> pts = lattice_points(dilate(p, Q(resolution)));
    std::vector<std::vector<long long>> pll;
    pll.reserve(pts.size());
    for (const auto& pt : pts) {
        std::vector<long long> v(pt.size());
        for (size_t j = 0; j < pt.size(); ++j) v[j] = to_ll(pt[j]);
        pll.push_back(std::move(v));
    }
    return extract_fibers(pll, word, color);
}

ParapolytopeCheck check_parapolytope(const RationalPolytope& p, const std::vector<int>& word,
                                     long max_scale) {
    std::set<int> colors(word.begin(), word.end());
    ParapolytopeCheck out;
    for (long m = 1; m <= max_scale; ++m) {
        std::vector<ZVec> pts = lattice_points(dilate(p, Q(m)));
        std::vector<std::vector<long long>> pll;
        pll.reserve(pts.size());
        for (const auto& pt : pts) {
            std::vector<long long> v(pt.size());
            for (size_t j = 0; j < pt.size(); ++j) v[j] = to_ll(pt[j]);
            pll.push_back(std::move(v));
        }
        for (int i : colors) {
            FiberExtraction fx = extract_fibers(pll, word, i);
            if (!fx.all_boxes) {
                out.consistent = false;
                out.failing_scale = m;
                out.failing_color = i;
                out.witness = fx.fibers[fx.witness];
                return out;
            }
        }
    }
    return out;
}

NzPolytopeResult nz_polytope(const RootDatum& datum, const std::vector<int>& word,
                             const Weight& lambda, int stabilization_m, long cap) {
    auto hull_of = [&](const Weight& lam) {
        CrystalGraph graph = generate_crystal(datum, word, lam, cap);
        std::vector<QVec> pts;
        pts.reserve(graph.elements.size());
        for (const auto& el : graph.elements) {
            QVec q(el.size());
            for (size_t j = 0; j < el.size(); ++j) q[j] = Q(el[j]);
            pts.push_back(std::move(q));
        }
        return convex_hull(pts);
    };
    NzPolytopeResult result;
    result.polytope = hull_of(lambda);
    for (int m = 2; m <= stabilization_m; ++m) {
        RationalPolytope pm = dilate(hull_of(scale(m, lambda)), make_q(1, m));
        result.checked_m = m;
        if (!equal_polytopes(result.polytope, pm)) {
            result.stabilized = false;
            result.polytope = pm;  // largest scale wins when unstabilized
        }
    }
    return result;
}

RationalPolytope polytope_from_inequalities(const std::vector<Halfspace>& ineqs, int dim) {
    std::vector<ZVec> rows;
    for (const auto& h : ineqs) {
        if (static_cast<int>(h.normal.size()) != dim)
            throw std::invalid_argument("polytope_from_inequalities: dimension mismatch");
        ZVec row(dim + 1);
        Z den = h.offset.get_den();
        row[0] = h.offset.get_num();
        for (int j = 0; j < dim; ++j) row[j + 1] = h.normal[j] * den;
        make_primitive(row);
        rows.push_back(std::move(row));
    }
    ZVec top(dim + 1, Z(0));
    top[0] = 1;
    rows.push_back(std::move(top));

    std::vector<DDRay> rays;
    try {
        rays = dual_description(rows, dim + 1);
    } catch (const std::domain_error&) {
        throw std::domain_error("inequality system is not a bounded polytope");
    }
    std::vector<QVec> verts;
    for (const auto& ray : rays) {
        if (ray.v[0] == 0) throw std::domain_error("unbounded inequality system");
        QVec v(dim);
        for (int j = 0; j < dim; ++j) {
            v[j] = Q(ray.v[j + 1], ray.v[0]);
            v[j].canonicalize();
        }
        verts.push_back(std::move(v));
    }
    if (verts.empty()) throw std::domain_error("empty inequality system");
    return convex_hull(verts);
}

}  // namespace nz
