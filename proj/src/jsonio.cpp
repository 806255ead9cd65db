#include "nz/jsonio.hpp"

#include <algorithm>

namespace nz {

namespace {

Json z_str(const Z& z) { return z.get_str(); }

Json edges_json(const CrystalGraph& g) {
    Json out = Json::array();
    for (size_t e = 0; e < g.elements.size(); ++e)
        for (int i = 1; i <= g.ctx.n_colors(); ++i) {
            int tgt = g.f_edge[e][i - 1];
            if (tgt >= 0) out.push_back({static_cast<int>(e), i, tgt});
        }
    return out;
}

}  // namespace

Json weight_json(const Weight& w) {
    Json out = Json::array();
    for (long v : w) out.push_back(v);
    return out;
}

Json qvec_json(const QVec& v) {
    Json out = Json::array();
    for (const Q& q : v) out.push_back(rational_str(q));
    return out;
}

Json zvec_json(const ZVec& v) {
    Json out = Json::array();
    for (const Z& z : v) out.push_back(z_str(z));
    return out;
}

Json llvec_json(const std::vector<long long>& v) {
    Json out = Json::array();
    for (long long x : v) out.push_back(x);
    return out;
}

Json halfspace_json(const Halfspace& h) {
    return Json{{"normal", zvec_json(h.normal)}, {"offset", rational_str(h.offset)}};
}

Json polytope_json(const RationalPolytope& p) {
    Json verts = Json::array();
    for (const QVec& v : p.vertices) verts.push_back(qvec_json(v));
    Json facets = Json::array();
    for (const Halfspace& h : p.facets) facets.push_back(halfspace_json(h));
    Json eqs = Json::array();
    for (const Halfspace& h : p.equations) eqs.push_back(halfspace_json(h));
    return Json{{"ambient_dim", p.ambient_dim},
                {"affine_dim", p.affine_dim},
                {"vertices", verts},
                {"facets", facets},
                {"equations", eqs}};
}

Json crystal_json(const CrystalGraph& g) {
    Json elems = Json::array();
    for (const ElementVec& a : g.elements) {
        Json row = Json::array();
        for (int x : a) row.push_back(x);
        elems.push_back(row);
    }
    Json word = Json::array();
    for (int c : g.ctx.word) word.push_back(c);
    return Json{{"word", word},
                {"lambda", weight_json(g.ctx.lambda)},
                {"elements", elems},
                {"edges", edges_json(g)},
                {"highest", g.highest}};
}

Json fiber_json(const LatticeFiber& f) {
    return Json{{"base", llvec_json(f.base)},
                {"mu", llvec_json(f.mu)},
                {"nu", llvec_json(f.nu)},
                {"count", f.count},
                {"is_box", f.is_box}};
}

Json chain_json(const ChainResult& r) {
    Json steps = Json::array();
    for (const ChainStep& s : r.steps)
        steps.push_back(Json{{"k", s.k},
                             {"color", s.color},
                             {"fibers_processed", s.fibers_processed},
                             {"min_L", s.bound_min},
                             {"points_before", s.points_before},
                             {"points_after", s.points_after},
                             {"box_identities_ok", s.box_identities_ok},
                             {"convex_on_grid", s.convex_on_grid},
                             {"polytope", polytope_json(s.hull)}});
    Json out{{"completed", r.completed},
             {"scale", r.scale},
             {"steps", steps}};
    if (!r.completed) {
        out["halt_step"] = r.halt_step;
        out["halt_reason"] = r.halt_reason;
        if (r.witness) out["witness"] = fiber_json(*r.witness);
        if (r.halt_reason == "virtual") out["witness_bound"] = r.witness_bound;
    }
    return out;
}

Json system_json(const InequalitySystem& s) {
    Json rows = Json::array();
    for (const Halfspace& h : s.inequalities) rows.push_back(halfspace_json(h));
    return Json{{"dim", s.dim}, {"inequalities", rows}};
}

Json gz_json(const GzData& g) {
    Json word = Json::array();
    for (int c : g.word) word.push_back(c);
    return Json{{"word", word},
                {"system", system_json(g.system)},
                {"translation", qvec_json(g.translation)},
                {"top_row", weight_json(g.top_row)}};
}

Json hoshino_json(const HoshinoData& h) {
    Json word = Json::array();
    for (int c : h.word) word.push_back(c);
    return Json{{"word", word}, {"system", system_json(h.system)}};
}

Json counterexample_json(const CounterexampleData& d) {
    Json word = Json::array();
    for (int c : d.word) word.push_back(c);
    Json facets = Json::array();
    for (const Halfspace& h : d.step4_inequalities) facets.push_back(halfspace_json(h));
    Json eqs = Json::array();
    for (const Halfspace& h : d.step4_equations) eqs.push_back(halfspace_json(h));
    return Json{{"type", std::string(1, lie_type_char(d.type)) + std::to_string(d.rank)},
                {"word", word},
                {"a_low", qvec_json(d.a_low)},
                {"scale", static_cast<long long>(d.scale)},
                {"step4_inequalities", facets},
                {"step4_equations", eqs},
                {"halt_step", d.halt_step},
                {"halt_reason", d.halt_reason},
                {"witness_base", llvec_json(d.witness_base)},
                {"witness_members", d.witness_members},
                {"witness_box", d.witness_box}};
}

Json report_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
        Json row{{"group", c.group}, {"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        checks.push_back(row);
    }
    Json out{{"scenario", r.scenario}, {"pass", r.pass}, {"checks", checks}};
    if (!r.timings_ms.empty()) {
        Json t = Json::object();
        for (const auto& [k, v] : r.timings_ms) t[k] = v;
        out["timings_ms"] = t;
    }
    return out;
}

}  // namespace nz
