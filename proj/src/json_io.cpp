#include "nefres/json_io.hpp"

#include "nefres/errors.hpp"

namespace nefres {

Json to_json(const PicClass& p) {
    if (p.size() == 1) return p[0];
    return Json(p.coords());
}

PicClass pic_from_json(const Json& j) {
    if (j.is_number_integer()) return PicClass(j.get<Int>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return PicClass(j[0].get<Int>(), j[1].get<Int>());
    throw InvalidInput("expected an integer or an integer pair, got " + j.dump());
}

Json to_json(const BundleSym& b) {
    return {{"flavor", flavor_name(b.flavor)}, {"twist", to_json(b.twist)}, {"name", b.str()}};
}

Json to_json(const ExcCollection& c) {
    Json gens = Json::array();
    for (const auto& g : c.gens()) gens.push_back({{"flavor", flavor_name(g.flavor)}, {"twist", to_json(g.twist)}});
    return {{"variety", c.variety().name()}, {"generators", gens}, {"hom", c.hom()}};
}

Json to_json(const ValidationReport& r) {
    auto list = [](const std::vector<ExtFailure>& fs) {
        Json a = Json::array();
        for (const auto& f : fs) a.push_back({{"j", f.j}, {"k", f.k}, {"q", f.q}, {"dim", f.dim}});
        return a;
    };
    return {{"ok", r.ok}, {"failures", list(r.failures)}, {"unverifiable", list(r.unverifiable)}};
}

Json to_json(const ExponentTable& t) {
    Json j = {{"e", t.e}};
    j["dmin"] = t.dmin ? to_json(*t.dmin) : Json(nullptr);
    return j;
}

ExponentTable table_from_json(const Json& j) {
    ExponentTable t;
    const Json& m = j.is_object() ? j.at("e") : j;
    if (!m.is_array() || m.empty()) throw InvalidInput("exponent table must be a nonempty square integer matrix");
    for (const auto& row : m) {
        if (!row.is_array() || row.size() != m.size())
            throw InvalidInput("exponent table must be a square integer matrix");
        std::vector<Int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw InvalidInput("exponent table entries must be integers");
            r.push_back(x.get<Int>());
        }
        t.e.push_back(std::move(r));
    }
    if (j.is_object() && j.contains("dmin") && !j["dmin"].is_null()) t.dmin = pic_from_json(j["dmin"]);
    return t;
}

Json to_json(const Term& t) {
    return {{"degree", t.degree}, {"bundle", t.bundle.str()}, {"flavor", flavor_name(t.bundle.flavor)},
            {"twist", to_json(t.bundle.twist)}, {"mult", t.mult}};
}

Json to_json(const std::vector<Term>& ts) {
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(to_json(t));
    return a;
}

Json to_json(const ChernData& c) {
    return {{"rank", c.rank}, {"c1", to_json(c.c1)}, {"higher", c.higher}};
}

Json to_json(const Check& c) {
    return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}};
}

Json checks_json(const VerifyReport& r) {
    Json j = {{"rank", to_json(r.rank)}, {"det", to_json(r.det)}};
    j["chi"] = r.chi ? to_json(*r.chi) : Json(nullptr);
    return j;
}

Json to_json(const LinExpr& x) {
    if (auto v = x.as_integer()) return *v;
    return x.str();
}

namespace {

Json opt_pic(const std::optional<PicClass>& p) { return p ? to_json(*p) : Json(nullptr); }

}  // namespace

Json to_json(const ResolutionCandidate& c) {
    auto rep = verify_candidate(c);
    return {{"case", c.name},
            {"citation", c.citation},
            {"statement", c.statement},
            {"note", c.note},
            {"variety", c.variety.name()},
            {"n", c.variety.dim()},
            {"r", c.rank},
            {"dmin", opt_pic(c.dmin)},
            {"terms", to_json(c.terms)},
            {"target", to_json(c.target)},
            {"checks", checks_json(rep)},
            {"ok", rep.ok()}};
}

Json to_json(const CaseCheck& c) {
    return {{"case", c.name},         {"variety", c.variety},
            {"n", Variety::parse(c.variety).dim()},
            {"r", c.rank},            {"checks", checks_json(c.report)},
            {"dmin_in_bounds", c.dmin_in_bounds},
            {"ok", c.ok},             {"citation", c.citation}};
}

Json to_json(const SolverCheck& c) {
    return {{"check", c.name}, {"variety", c.variety}, {"r", c.rank}, {"ok", c.ok}, {"detail", c.detail}};
}

Json to_json(const TablesReport& r) {
    Json cases = Json::array(), solver = Json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    for (const auto& c : r.solver) solver.push_back(to_json(c));
    return {{"cases", cases}, {"solver", solver}, {"ok", r.ok()}};
}

Json to_json(const SolveResult& r) {
    Json table = Json::array();
    for (const auto& row : r.table) {
        Json jr = Json::array();
        for (const auto& x : row) jr.push_back(to_json(x));
        table.push_back(jr);
    }
    Json pivots = Json::object();
    for (const auto& [v, x] : r.solution.pivots) pivots[v] = to_json(x);
    return {{"status", status_name(r.status)},
            {"reason", r.reason},
            {"dmin", to_json(r.dmin)},
            {"slots", r.slot_reasons},
            {"table", table},
            {"equations", r.equations},
            {"solution", pivots},
            {"free", r.solution.free_vars}};
}

Json to_json(const SectionBound& b) {
    return {{"lhs", b.lhs.str()},
            {"rhs", b.rhs.str()},
            {"coefficient", b.coefficient},
            {"bound", rational_str(b.bound)},
            {"e", b.e},
            {"satisfied", b.satisfied},
            {"boundary", b.boundary}};
}

Json to_json(const TwoStepResult& r) {
    return {{"status", status_name(r.status)}, {"reason", r.reason}, {"f00", r.f00}, {"f01", r.f01},
            {"f10", r.f10}, {"hom01", r.hom01}, {"terms", to_json(r.reduced_terms)}};
}

Json to_json(const Conclusion& c) {
    return {{"rule", c.rule}, {"conclusion", c.conclusion}, {"citation", c.citation}, {"inconsistent", c.inconsistent}};
}

Json to_json(const DminBounds& b) {
    return {{"lower", opt_pic(b.lower)}, {"upper", to_json(b.upper)}};
}

}  // namespace nefres
