#include "nz/dd.hpp"

#include <algorithm>
#include <stdexcept>

namespace nz {

namespace {

// Indices of a row subset with full rank dim, chosen greedily in order.
std::vector<int> independent_subset(const std::vector<ZVec>& rows, int dim) {
    std::vector<int> chosen;
    QMat reduced;  // row-reduced copies of the chosen rows
    for (size_t r = 0; r < rows.size() && static_cast<int>(chosen.size()) < dim; ++r) {
        QVec cand = to_qvec(rows[r]);
        // Reduce against current basis.
        for (const QVec& b : reduced) {
            // b is normalized with leading 1 at its pivot.
            size_t piv = 0;
            while (piv < b.size() && b[piv] == 0) ++piv;
            if (piv < b.size() && cand[piv] != 0) {
                Q f = cand[piv];
                for (size_t j = piv; j < cand.size(); ++j) cand[j] -= f * b[j];
            }
        }
        size_t piv = 0;
        while (piv < cand.size() && cand[piv] == 0) ++piv;
        if (piv == cand.size()) continue;
        Q lead = cand[piv];
        for (size_t j = piv; j < cand.size(); ++j) cand[j] /= lead;
        // Back-substitute to keep reduced rows clean.
        for (QVec& b : reduced) {
            if (b[piv] != 0) {
                Q f = b[piv];
                for (size_t j = piv; j < b.size(); ++j) b[j] -= f * cand[j];
            }
        }
        reduced.push_back(cand);
        chosen.push_back(static_cast<int>(r));
        // Keep reduced sorted by pivot for the elimination above to stay valid.
        std::sort(reduced.begin(), reduced.end(), [](const QVec& a, const QVec& b) {
            size_t pa = 0, pb = 0;
            while (pa < a.size() && a[pa] == 0) ++pa;
            while (pb < b.size() && b[pb] == 0) ++pb;
            return pa < pb;
        });
    }
    return chosen;
}

ZVec primitive(ZVec v) {
    make_primitive(v);
    return v;
}

}  // namespace

std::vector<DDRay> dual_description(const std::vector<ZVec>& rows, int dim) {
    size_t m = rows.size();
    std::vector<int> init = independent_subset(rows, dim);
    if (static_cast<int>(init.size()) != dim)
        throw std::domain_error("dual_description: cone is not pointed");

    // Initial simplicial cone from the chosen rows: rays are the columns of
    // the inverse, each saturating every chosen row but its own.
    QMat a0(dim, QVec(dim));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a0[r][c] = Q(rows[init[r]][c]);
    // Invert by solving against unit vectors.
    std::vector<DDRay> rays;
    for (int c = 0; c < dim; ++c) {
        QVec unit(dim, 0);
        unit[c] = 1;
        QVec col = solve_linear(a0, unit);
        DDRay ray;
        ray.v = primitive_integer(col);
        ray.tight = Bitset(m);
        for (int r = 0; r < dim; ++r)
            if (r != c) ray.tight.set(static_cast<size_t>(init[r]));
        rays.push_back(std::move(ray));
    }

    std::vector<char> processed(m, 0);
    for (int r : init) processed[r] = 1;

    for (size_t row = 0; row < m; ++row) {
        if (processed[row]) continue;
        processed[row] = 1;
        std::vector<Z> val(rays.size());
        bool any_neg = false;
        for (size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(rows[row], rays[r].v);
            if (val[r] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) rays[r].tight.set(row);
            continue;
        }

        std::vector<DDRay> next;
        std::vector<size_t> plus, minus;
        for (size_t r = 0; r < rays.size(); ++r) {
            if (val[r] > 0) plus.push_back(r);
            else if (val[r] < 0) minus.push_back(r);
            else {
                rays[r].tight.set(row);
                next.push_back(rays[r]);
            }
        }
        for (size_t r : plus) next.push_back(rays[r]);

        // Combinatorial adjacency: r+ and r- are adjacent iff no third ray
        // saturates everything they both saturate.
        for (size_t p : plus) {
            for (size_t q : minus) {
                Bitset common = Bitset::intersect(rays[p].tight, rays[q].tight);
                bool adjacent = true;
                for (size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (rays[r].tight.contains(common)) adjacent = false;
                }
                if (!adjacent) continue;
                DDRay nr;
                nr.v.resize(rays[p].v.size());
                for (size_t j = 0; j < nr.v.size(); ++j)
                    nr.v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
                nr.v = primitive(std::move(nr.v));
                // Exact tight set: re-evaluate all processed rows.
                nr.tight = Bitset(m);
                for (size_t rr = 0; rr < m; ++rr)
                    if (processed[rr] && dot(rows[rr], nr.v) == 0) nr.tight.set(rr);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

}  // namespace nz
