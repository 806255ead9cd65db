#pragma once

// Exact rational arithmetic helpers shared by all modules.
// All geometry in this library is carried out over Q via GMP's mpq_class;
// integer lattice data uses mpz_class or plain machine integers where the
// desk-scale bounds make overflow impossible.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nz {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using ZVec = std::vector<Z>;

inline Q make_q(long num, long den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Q parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// Canonical decimal-free rendering: "p" or "p/q" with q > 0, gcd(p,q) = 1.
inline std::string rational_str(const Q& q) { return q.get_str(); }

inline Z lcm_denominators(const QVec& v) {
    Z l = 1;
    for (const Q& q : v) {
        Z d = q.get_den();
        Z g = gcd(l, d);
        l = l / g * d;
    }
    return l;
}

inline Z gcd_all(const ZVec& v) {
    Z g = 0;
    for (const Z& z : v) g = gcd(g, z);
    return g;
}

// Divides out the gcd; the zero vector is returned unchanged.
inline void make_primitive(ZVec& v) {
    Z g = gcd_all(v);
    if (g == 0 || g == 1) return;
    for (Z& z : v) z /= g;
}

// Scales a rational vector to a primitive integer vector pointing the same way.
inline ZVec primitive_integer(const QVec& v) {
    Z l = lcm_denominators(v);
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Q scaled = v[i] * Q(l);
        scaled.canonicalize();
        out[i] = scaled.get_num();
    }
    make_primitive(out);
    return out;
}

inline QVec to_qvec(const std::vector<long>& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Q(v[i]);
    return out;
}

inline QVec to_qvec(const ZVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Q(v[i]);
    return out;
}

inline Q dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::logic_error("dot: size mismatch");
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Z dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::logic_error("dot: size mismatch");
    Z s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Q dot_zq(const ZVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::logic_error("dot: size mismatch");
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Q(a[i]) * b[i];
    return s;
}

// Lexicographic compare for rational vectors (used for canonical orderings).
inline bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline bool lex_less(const ZVec& a, const ZVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

// --- Dense exact linear algebra (tiny dimensions, Gaussian elimination) ---

using QMat = std::vector<QVec>;

// Reduced row echelon form in place; returns the pivot column of each row kept.
inline std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Q inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

inline size_t rank_of(QMat m) { return rref(m).size(); }

// Solves A x = b for square nonsingular A. Throws std::domain_error if singular.
inline QVec solve_linear(QMat a, QVec b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::logic_error("solve_linear: not square");
        a[i].push_back(b[i]);
    }
    std::vector<int> piv = rref(a);
    if (piv.size() != n || (!piv.empty() && piv.back() >= static_cast<int>(n)))
        throw std::domain_error("solve_linear: singular matrix");
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[piv[i]] = a[i][n];
    return x;
}

// FNV-style hash for integer coordinate vectors used as hash-map keys.
struct VecHash {
    template <typename T>
    size_t operator()(const std::vector<T>& v) const {
        size_t h = 1469598103934665603ull;
        for (const T& x : v) {
            h ^= static_cast<size_t>(static_cast<long long>(x)) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace nz
