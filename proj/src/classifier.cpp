#include "nefres/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "nefres/errors.hpp"

namespace nefres {

std::string Affine::str() const {
    std::string s;
    auto add = [&](Int c, const std::string& v) {
        if (c == 0) return;
        if (!s.empty()) s += c < 0 ? "-" : "+";
        else if (c < 0) s += "-";
        Int a = c < 0 ? -c : c;
        if (v.empty() || a != 1) s += std::to_string(a);
        s += v;
    };
    add(cr, "r");
    add(cn, "n");
    add(c0, "");
    return s.empty() ? "0" : s;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::PnDegree1: return "P^n, c1 = 1";
        case Family::PnDegree2: return "P^n, c1 = 2";
        case Family::Q2Diagonal: return "Q^2, c1 = (1,1)";
        case Family::QnDegree1: return "Q^n (n >= 3), c1 = 1";
        case Family::Auxiliary: return "auxiliary";
    }
    return "?";
}

namespace {

using TS = CaseSpec::TermSpec;

Affine A(Int c0, Int cr = 0, Int cn = 0) { return {c0, cr, cn}; }
TS line(int deg, Int k, Affine m) { return {deg, false, PicClass(k), m}; }
TS line2(int deg, Int a, Int b, Affine m) { return {deg, false, PicClass(a, b), m}; }
TS spin(int deg, Affine m) { return {deg, true, PicClass(0), m}; }

std::vector<CaseSpec> build_table() {
    const std::string p1 = "nef, det O(1) on P^n: E is O(1)+O^{r-1} or T(-1)+O^{r-n}";
    const std::string p2 = "nef, det O(2) on P^n: E satisfies one of six cases";
    const std::string q2 = "nef, det O(1,1) on Q^2: E satisfies one of three cases";
    const std::string qn = "nef, det O(1) on Q^n (n >= 3): E satisfies one of three cases";
    const std::string prior =
        "an earlier classification lists the restriction of a spinor bundle from Q^3 instead of the "
        "O(-1) -> O^{r+1} case; that restriction is O(1,0)+O(0,1), which has dmin = 0";

    std::vector<CaseSpec> t;
    auto add = [&](CaseSpec c) { t.push_back(std::move(c)); };

    // P^n, c1 = 1
    add({"pn_d1_split", Family::PnDegree1, "E = O(1) + O^{r-1}", p1, "", {line(0, 1, A(1)), line(0, 0, A(-1, 1))}, {}, {},
         PicClass(0), std::pair{1, PicClass(-1)}, {}, {}});
    add({"pn_d1_tangent", Family::PnDegree1, "0 -> O(-1) -> O^{r+1} -> E -> 0, E = T(-1) + O^{r-n}", p1, "",
         {line(0, 0, A(1, 1)), line(1, -1, A(1))}, {A(0, 1, -1)}, {}, PicClass(1), {}, {}, {}});

    // P^n, c1 = 2
    add({"pn_d2_split_o2", Family::PnDegree2, "E = O(2) + O^{r-1}", p2, "", {line(0, 2, A(1)), line(0, 0, A(-1, 1))}, {},
         {}, PicClass(0), std::pair{1, PicClass(-2)}, {}, {}});
    add({"pn_d2_split_o1o1", Family::PnDegree2, "E = O(1)^2 + O^{r-2}", p2, "",
         {line(0, 1, A(2)), line(0, 0, A(-2, 1))}, {}, {}, PicClass(0), std::pair{2, PicClass(-1)}, {}, {}});
    add({"pn_d2_o1_extension", Family::PnDegree2, "0 -> O(-1) -> O(1) + O^r -> E -> 0", p2,
         "dmin = 1 read off from H^{n-1}(E(-n)) = H^n(O(-n-1))",
         {line(0, 1, A(1)), line(0, 0, A(0, 1)), line(1, -1, A(1))}, {}, {}, PicClass(1), {}, {}, {}});
    add({"pn_d2_two_om1", Family::PnDegree2, "0 -> O(-1)^2 -> O^{r+2} -> E -> 0", p2, "",
         {line(0, 0, A(2, 1)), line(1, -1, A(2))}, {}, {}, PicClass(1), {}, {}, {}});
    add({"pn_d2_om2", Family::PnDegree2, "0 -> O(-2) -> O^{r+1} -> E -> 0", p2, "",
         {line(0, 0, A(1, 1)), line(1, -2, A(1))}, {}, {}, PicClass(2), {}, {}, {}});
    add({"pn_d2_p3_three_step", Family::PnDegree2, "n = 3, 0 -> O(-2) -> O(-1)^4 -> O^{r+3} -> E -> 0", p2, "",
         {line(0, 0, A(3, 1)), line(1, -1, A(4)), line(2, -2, A(1))}, {}, {3}, PicClass(2), {}, {}, {}});

    // Q^2, c1 = (1,1)
    add({"q2_split_o11", Family::Q2Diagonal, "E = O(1,1) + O^{r-1}", q2, "",
         {line2(0, 1, 1, A(1)), line2(0, 0, 0, A(-1, 1))}, {}, {}, PicClass(0, 0), std::pair{1, PicClass(-1, -1)}, {}, {}});
    add({"q2_split_rulings", Family::Q2Diagonal, "E = O(1,0) + O(0,1) + O^{r-2}", q2, prior,
         {line2(0, 1, 0, A(1)), line2(0, 0, 1, A(1)), line2(0, 0, 0, A(-2, 1))}, {}, {}, PicClass(0, 0), {}, {}, {}});
    add({"q2_om1", Family::Q2Diagonal, "0 -> O(-1,-1) -> O^{r+1} -> E -> 0", q2, prior,
         {line2(0, 0, 0, A(1, 1)), line2(1, -1, -1, A(1))}, {}, {}, PicClass(1, 1), {}, {}, {}});

    // Q^n, c1 = 1
    add({"qn_d1_split", Family::QnDegree1, "E = O(1) + O^{r-1}", qn, "", {line(0, 1, A(1)), line(0, 0, A(-1, 1))}, {}, {},
         PicClass(0), std::pair{1, PicClass(-1)}, {}, {}});
    add({"qn_d1_spinor", Family::QnDegree1, "n = 3 or 4, E = S + O^{r-2}", qn,
         "on Q^4 either half-spinor bundle occurs; S+ is listed", {spin(0, A(1)), line(0, 0, A(-2, 1))}, {}, {3, 4},
         PicClass(0), {}, {}, {}});
    add({"qn_d1_om1", Family::QnDegree1, "0 -> O(-1) -> O^{r+1} -> E -> 0", qn, "",
         {line(0, 0, A(1, 1)), line(1, -1, A(1))}, {}, {}, PicClass(1), {}, {}, {}});

    // Not counted by classify: the cotangent resolution and the composite it produces.
    add({"omega_p3_twist2", Family::Auxiliary, "0 -> O(-2) -> O(-1)^4 -> O^6 -> Omega(2) -> 0 on P^3",
         "Omega_{P^3}(2) has the resolution 0 -> O(-2) -> O(-1)^4 -> O^6", "",
         {line(0, 0, A(6)), line(1, -1, A(4)), line(2, -2, A(1))}, {}, {3}, {}, {}, 3, PicClass(2)});
    add({"p3_omega_composite", Family::Auxiliary,
         "0 -> O(-2) -> O(-1)^4 + O -> O^{r+4} -> E -> 0 from 0 -> O -> Omega(2) + O^{r-2} -> E -> 0",
         "E fitting 0 -> O -> Omega_{P^3}(2) + O^{r-2} -> E -> 0 also fits the three-step resolution",
         "must agree with pn_d2_p3_three_step in K-theory",
         {line(0, 0, A(4, 1)), line(1, -1, A(4)), line(1, 0, A(1)), line(2, -2, A(1))}, {A(-2, 1)}, {3}, {}, {}, {},
         PicClass(2)});
    return t;
}

bool family_hosts(Family f, const Variety& v) {
    switch (f) {
        case Family::PnDegree1:
        case Family::PnDegree2:
        case Family::Auxiliary: return v.is_projective_space();
        case Family::Q2Diagonal: return v.is_quadric_surface();
        case Family::QnDegree1: return v.is_quadric() && v.dim() >= 3;
    }
    return false;
}

PicClass family_c1(Family f) {
    switch (f) {
        case Family::PnDegree2: return PicClass(2);
        case Family::Q2Diagonal: return PicClass(1, 1);
        default: return PicClass(1);
    }
}

}  // namespace

const std::vector<CaseSpec>& case_table() {
    static const std::vector<CaseSpec> table = build_table();
    return table;
}

const CaseSpec& find_case(const std::string& name) {
    for (const auto& c : case_table())
        if (c.name == name) return c;
    throw InvalidInput("no case named '" + name + "'");
}

std::optional<ResolutionCandidate> instantiate(const CaseSpec& spec, const Variety& v, int r) {
    if (!family_hosts(spec.family, v)) return std::nullopt;
    if (!spec.dims.empty() && !spec.dims.count(v.dim())) return std::nullopt;
    if (spec.fixed_rank && *spec.fixed_rank != r) return std::nullopt;
    if (r < 1) return std::nullopt;
    Int n = v.dim();
    for (const auto& cond : spec.extra_conditions)
        if (cond.eval(r, n) < 0) return std::nullopt;
    ResolutionCandidate c{spec.name, spec.citation, spec.note, spec.statement, v, r, {}, spec.dmin, {}};
    for (const auto& ts : spec.terms) {
        Int m = ts.mult.eval(r, n);
        if (m < 0) return std::nullopt;
        if (m == 0) continue;
        BundleSym b = ts.spinor ? BundleSym::spinor(v.is_odd_quadric() ? Flavor::Spinor : Flavor::SpinorPlus, ts.twist[0])
                                : BundleSym::line(ts.twist);
        c.terms.push_back({ts.degree, b, m});
    }
    if (spec.dmin_at_rank && spec.dmin_at_rank->first == r) c.dmin = spec.dmin_at_rank->second;
    c.target.rank = r;
    c.target.c1 = spec.fixed_c1 ? *spec.fixed_c1 : family_c1(spec.family);
    if (auto ch = chern_from_line_terms(v, c.terms)) c.target.higher = ch->higher;
    return c;
}

Family family_for(const NefProblem& p) {
    p.check();
    const Variety& v = p.variety;
    if (v.is_projective_space() && p.c1[0] == 1) return Family::PnDegree1;
    if (v.is_projective_space() && p.c1[0] == 2) return Family::PnDegree2;
    if (v.is_quadric_surface() && p.c1 == PicClass(1, 1)) return Family::Q2Diagonal;
    if (v.is_quadric() && v.dim() >= 3 && p.c1[0] == 1) return Family::QnDegree1;
    throw NotClassified("c1 = " + p.c1.str() + " on " + v.name() + " is outside the classified range");
}

std::vector<ResolutionCandidate> classify(const NefProblem& p) {
    Family f = family_for(p);
    std::vector<ResolutionCandidate> out;
    for (const auto& spec : case_table())
        if (spec.family == f)
            if (auto c = instantiate(spec, p.variety, p.rank)) out.push_back(std::move(*c));
    return out;
}

VerifyReport verify_candidate(const ResolutionCandidate& c) {
    return verify_terms(c.variety, c.terms, c.target);
}

std::vector<Perturbation> perturbations(const ResolutionCandidate& c) {
    std::vector<Perturbation> out;
    for (std::size_t i = 0; i < c.terms.size(); ++i)
        for (Int delta : {Int{-1}, Int{1}}) {
            if (c.terms[i].mult + delta < 0) continue;
            Perturbation p{i, delta, c.terms};
            p.terms[i].mult += delta;
            out.push_back(std::move(p));
        }
    return out;
}

// ---- exponent systems ----

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Determined: return "determined";
        case SolveStatus::Underdetermined: return "underdetermined";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "?";
}

LinExpr LinearSolution::eval(const LinExpr& x) const {
    LinExpr y = x;
    for (const auto& [v, val] : pivots) y = y.substitute(v, val);
    return y;
}

LinearSolution solve_linear(const std::vector<LinExpr>& eqs, const std::set<std::string>& late) {
    LinearSolution sol;
    std::set<std::string> vars;
    for (const auto& e : eqs)
        for (const auto& [v, c] : e.coeffs()) vars.insert(v);
    for (const auto& eq : eqs) {
        LinExpr x = sol.eval(eq);
        if (x.is_constant()) {
            if (x.constant() != Rational(0)) sol.consistent = false;
            continue;
        }
        std::string pivot;
        for (const auto& [v, c] : x.coeffs())
            if (!late.count(v)) {
                pivot = v;
                break;
            }
        if (pivot.empty()) pivot = x.coeffs().begin()->first;
        Rational a = x.coeff(pivot);
        LinExpr rest = x - LinExpr::var(pivot, a);
        LinExpr value = Rational(-1) / a * rest;
        for (auto& [v, val] : sol.pivots) val = val.substitute(pivot, value);
        sol.pivots[pivot] = value;
    }
    for (const auto& v : vars)
        if (!sol.pivots.count(v)) sol.free_vars.push_back(v);
    return sol;
}

std::optional<ExponentTable> SolveResult::numeric() const {
    ExponentTable t;
    t.dmin = dmin;
    for (const auto& row : table) {
        std::vector<Int> r;
        for (const auto& x : row) {
            auto v = x.as_integer();
            if (!v || *v < 0) return std::nullopt;
            r.push_back(*v);
        }
        t.e.push_back(std::move(r));
    }
    return t;
}

namespace {

BundleSym untwist(const BundleSym& b, const PicClass& dmin) {
    return b.is_line() ? b.twisted(-dmin) : b.twisted(PicClass(-dmin.degree()));
}

std::string slot_name(int j) { return "e0" + std::to_string(j); }

}  // namespace

SolveResult solve_exponent_system(const NefProblem& p, const PicClass& dmin, const std::map<std::string, Int>& params) {
    family_for(p);
    const Variety& v = p.variety;
    dmin.check(v);
    for (const auto& [name, value] : params) {
        if (name != "e") throw InvalidInput("unknown parameter '" + name + "', only 'e' is free");
        if (value < 0) throw InvalidInput("e = dim Hom(O,E) must be >= 0");
    }
    auto coll = standard_collection(v);
    int m = coll.m();
    auto mask = vanishing_mask(p, dmin, {true});

    SolveResult res;
    res.dmin = dmin;
    res.table.assign(m + 1, std::vector<LinExpr>(m + 1));
    for (int j = 0; j <= m; ++j) {
        BundleSym g = untwist(coll.gens()[j], dmin);
        if (mask.count(j)) {
            res.slot_reasons.push_back("mask");
        } else if (g.is_line() && g.twist.effective() && !g.twist.is_zero()) {
            res.slot_reasons.push_back("residual");
        } else if (g.is_spinor() && g.twist[0] >= 0) {
            res.slot_reasons.push_back("residual");
        } else if (g.is_line() && g.twist.is_zero()) {
            res.slot_reasons.push_back("sections");
            auto it = params.find("e");
            res.table[0][j] = it != params.end() ? LinExpr(it->second) : LinExpr::var("e");
        } else {
            res.slot_reasons.push_back("unknown");
            res.table[0][j] = LinExpr::var(slot_name(j));
        }
    }
    for (int l = 1; l <= m; ++l)
        for (int j = 0; j <= m - l; ++j) {
            LinExpr s;
            for (int k = j + 1; k <= m - l + 1; ++k) s += coll.hom()[j][k] * res.table[l - 1][k];
            res.table[l][j] = s;
        }

    LinExpr rank;
    std::vector<LinExpr> det(v.picard_rank());
    for (int l = 0; l <= m; ++l)
        for (int j = 0; j <= m - l; ++j) {
            Int sign = l % 2 ? -1 : 1;
            rank += (sign * coll.gens()[j].rank(v)) * res.table[l][j];
            PicClass c = coll.gens()[j].c1(v);
            for (int i = 0; i < v.picard_rank(); ++i) det[i] += (sign * c[i]) * res.table[l][j];
        }
    PicClass want = p.c1 + Int{p.rank} * dmin;
    std::vector<LinExpr> eqs = {rank - LinExpr(Int{p.rank})};
    res.equations.push_back("rank: " + rank.str() + " = " + std::to_string(p.rank));
    for (int i = 0; i < v.picard_rank(); ++i) {
        eqs.push_back(det[i] - LinExpr(want[i]));
        res.equations.push_back("det[" + std::to_string(i) + "]: " + det[i].str() + " = " + std::to_string(want[i]));
    }

    res.solution = solve_linear(eqs, {"e"});
    for (auto& row : res.table)
        for (auto& x : row) x = res.solution.eval(x);
    if (!res.solution.consistent) {
        res.status = SolveStatus::Infeasible;
        res.reason = "rank and determinant equations are inconsistent";
        return res;
    }
    for (int l = 0; l <= m; ++l)
        for (int j = 0; j <= m; ++j) {
            const LinExpr& x = res.table[l][j];
            if (!x.is_constant()) continue;
            std::string where = "e" + std::to_string(l) + std::to_string(j) + " = " + x.str();
            if (x.constant().denominator() != 1) {
                res.status = SolveStatus::Infeasible;
                res.reason = where + " is not an integer";
                return res;
            }
            if (x.constant() < Rational(0)) {
                res.status = SolveStatus::Infeasible;
                res.reason = where + " is negative";
                return res;
            }
        }
    res.status = res.solution.free_vars.empty() ? SolveStatus::Determined : SolveStatus::Underdetermined;
    if (res.status == SolveStatus::Underdetermined) {
        res.reason = "free:";
        for (const auto& f : res.solution.free_vars) res.reason += " " + f;
    }
    return res;
}

SectionBound section_bound_inequality(const NefProblem& p, Int e) {
    const Variety& v = p.variety;
    if (!v.is_quadric() || v.dim() < 3 || p.c1 != PicClass(1))
        throw InvalidInput("section bound needs Q^n (n >= 3) with c1 = 1, got " + v.name() + " c1 = " + p.c1.str());
    auto res = solve_exponent_system(p, PicClass(1), {});
    std::vector<int> spinor_slots = v.is_odd_quadric() ? std::vector<int>{1} : std::vector<int>{1, 2};
    SectionBound sb;
    for (int j : spinor_slots) {
        sb.lhs += res.at(1, j);
        sb.rhs += res.at(0, j);
    }
    for (const auto* x : {&sb.lhs, &sb.rhs})
        for (const auto& [name, c] : x->coeffs())
            if (name != "e") throw Error("spinor slots depend on " + name + ", expected e only");
    Rational lead = sb.lhs.coeff("e");
    if (lead.denominator() != 1) throw Error("non-integral section coefficient");
    sb.coefficient = lead.numerator();
    Rational slope = lead - sb.rhs.coeff("e");
    if (slope <= Rational(0)) throw Error("section inequality does not bound e");
    sb.bound = (sb.rhs.constant() - sb.lhs.constant()) / slope;
    sb.e = e;
    sb.satisfied = Rational(e) <= sb.bound;
    sb.boundary = Rational(e) == sb.bound;
    return sb;
}

TwoStepResult solve_two_step(const NefProblem& p, int correction_degree) {
    if (family_for(p) != Family::PnDegree2) throw InvalidInput("two-step system is for P^n with c1 = 2");
    if (correction_degree != 1 && correction_degree != 2) throw InvalidInput("correction degree must be 1 or 2");
    const Variety& v = p.variety;
    auto coll = standard_collection(v);
    TwoStepResult out;
    out.hom01 = coll.hom()[0][1];
    LinExpr f00 = LinExpr::var("f00"), f01 = LinExpr::var("f01"), f10 = LinExpr::var("f10");
    Int sign = correction_degree % 2 ? -1 : 1;
    // E(1) = O^f00 + O(1)^f01 - O^f10 + sign * O(-1)
    std::vector<LinExpr> eqs = {
        f10 - out.hom01 * f01,
        f00 + f01 - f10 + LinExpr(sign) - LinExpr(Int{p.rank}),
        f01 + LinExpr(-sign) - LinExpr(p.c1[0] + p.rank),
    };
    auto sol = solve_linear(eqs);
    if (!sol.consistent || !sol.free_vars.empty()) {
        out.reason = !sol.consistent ? "inconsistent" : "underdetermined";
        out.status = !sol.consistent ? SolveStatus::Infeasible : SolveStatus::Underdetermined;
        return out;
    }
    auto get = [&](const LinExpr& x) { return sol.eval(x).as_integer(); };
    auto a = get(f00), b = get(f01), c = get(f10);
    if (!a || !b || !c || *a < 0 || *b < 0 || *c < *a) {
        out.reason = "non-integral or negative exponents";
        return out;
    }
    out.status = SolveStatus::Determined;
    out.f00 = *a;
    out.f01 = *b;
    out.f10 = *c;
    std::vector<Term> reduced = {{0, BundleSym::line(PicClass(1)), out.f01},
                                 {1, BundleSym::line(PicClass(0)), out.f10 - out.f00},
                                 {correction_degree, BundleSym::line(PicClass(-1)), 1}};
    out.reduced_terms = normalize_terms(twist_terms(reduced, PicClass(-1)));
    return out;
}

// ---- decision rules ----

namespace {

std::string trim(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    return s;
}

HomFact hom_from(const std::string& op, Int value, const std::string& fact) {
    if (op == "=" || op == "==") return value == 0 ? HomFact::Zero : value == 1 ? HomFact::NonZero : HomFact::AtLeastTwo;
    if (op == "!=" && value == 0) return HomFact::NonZero;
    if (op == ">=" && value == 1) return HomFact::NonZero;
    if (op == ">=" && value == 2) return HomFact::AtLeastTwo;
    throw InvalidInput("unsupported Hom fact '" + fact + "'");
}

bool nonzero(std::optional<HomFact> h) { return h && *h != HomFact::Zero; }
bool zero(std::optional<HomFact> h) { return h && *h == HomFact::Zero; }

}  // namespace

void FactSet::add(const std::string& raw) {
    std::string fact = trim(raw);
    static const std::regex re(R"(^([A-Za-z_]+|hom\([^)]*\)?\)?,E\))(==|!=|>=|=)([A-Za-z0-9_+-]+)$)");
    std::smatch m;
    if (!std::regex_match(fact, m, re)) throw InvalidInput("cannot parse fact '" + raw + "'");
    std::string name = m[1], op = m[2], value = m[3];
    auto integer = [&]() -> Int {
        try {
            std::size_t pos = 0;
            Int x = std::stoll(value, &pos);
            if (pos != value.size()) throw InvalidInput("");
            return x;
        } catch (const std::exception&) {
            throw InvalidInput("fact '" + raw + "' needs an integer value");
        }
    };
    if (name == "variety") {
        if (op != "=") throw InvalidInput("variety facts use '='");
        variety = Variety::parse(value);
        return;
    }
    if (name == "d" || name == "n" || name == "r" || name == "dmin") {
        if (op != "=" && op != "==") throw InvalidInput("numeric facts use '=': " + raw);
        Int x = integer();
        (name == "d" ? d : name == "n" ? n : name == "r" ? r : dmin) = x;
        return;
    }
    static const std::regex hom_re(R"(^hom\((S|O\((d|d[+-]\d+|-?\d+)\)),E\)$)");
    std::smatch hm;
    if (!std::regex_match(name, hm, hom_re)) throw InvalidInput("unknown fact name in '" + raw + "'");
    HomFact h = hom_from(op, integer(), raw);
    if (hm[1] == "S") {
        hom_spinor = h;
        return;
    }
    std::string k = hm[2];
    if (k[0] == 'd') hom_rel_d[k.size() == 1 ? 0 : std::stoll(k.substr(1))] = h;
    else hom_abs[std::stoll(k)] = h;
}

FactSet FactSet::parse(const std::vector<std::string>& facts) {
    FactSet f;
    for (const auto& x : facts) f.add(x);
    return f;
}

std::optional<Int> FactSet::dim() const {
    if (variety) return variety->dim();
    return n;
}

std::optional<HomFact> FactSet::hom_d(Int k) const {
    if (auto it = hom_rel_d.find(k); it != hom_rel_d.end()) return it->second;
    if (d)
        if (auto it = hom_abs.find(*d + k); it != hom_abs.end()) return it->second;
    return std::nullopt;
}

std::optional<HomFact> FactSet::hom_at(Int k) const {
    if (auto it = hom_abs.find(k); it != hom_abs.end()) return it->second;
    if (d)
        if (auto it = hom_rel_d.find(k - *d); it != hom_rel_d.end()) return it->second;
    return std::nullopt;
}

std::vector<Conclusion> apply_decision_rules(const FactSet& f) {
    std::vector<Conclusion> out;
    bool is_p = f.variety && f.variety->is_projective_space();
    bool is_q = f.variety ? f.variety->is_quadric() && f.variety->dim() >= 3 : false;
    auto n = f.dim();

    if (nonzero(f.hom_d(0)))
        out.push_back({"det_section_splits", "E = O(d) + O^{r-1}",
                       "Hom(det E, E) != 0 implies E = O^{r-1} + det E", false});

    if (f.d && *f.d == 2 && zero(f.hom_d(0)) && f.hom_d(-1) == HomFact::AtLeastTwo)
        out.push_back({"two_sections_degree_two", "E = O(1)^2 + O^{r-2}",
                       "d = 2, Hom(O(2),E) = 0, dim Hom(O(1),E) >= 2 imply E = O(1)^2 + O^{r-2}", false});

    if (f.d && *f.d >= 3 && zero(f.hom_d(0)) && f.hom_d(-1) == HomFact::AtLeastTwo)
        out.push_back({"two_sections_bound", "inconsistent with nefness: d must be <= 2",
                       "Hom(O(d),E) = 0 and dim Hom(O(d-1),E) >= 2 imply d <= 2", true});

    if (is_p && zero(f.hom_d(0)) && nonzero(f.hom_d(-1)))
        out.push_back({"one_section_projective",
                       "E = O(d-1) + O(1) + O^{r-2}, or 0 -> O(-1) -> O(d-1) + O^r -> E -> 0",
                       "on P^n, Hom(O(d),E) = 0 and Hom(O(d-1),E) != 0 give one of these two forms", false});

    if (is_q && f.d && *f.d == 1 && zero(f.hom_at(1)) && nonzero(f.hom_spinor)) {
        if (*n == 3 || *n == 4)
            out.push_back({"spinor_section", "E = S + O^{r-2}",
                           "d = 1, Hom(O(1),E) = 0, Hom(S,E) != 0 imply n = 3 or 4 and E = S + O^{r-2}", false});
        else
            out.push_back({"spinor_section", "inconsistent with nefness: n must be 3 or 4",
                           "d = 1, Hom(O(1),E) = 0, Hom(S,E) != 0 imply n = 3 or 4", true});
    }

    bool residual = zero(f.hom_at(1)) && (!is_q || zero(f.hom_spinor));
    if ((is_p || is_q) && f.d && *f.d >= 1 && f.dmin && *f.dmin == 0 && residual)
        out.push_back({"trivial_at_dmin_zero", "inconsistent: the standard resolution forces E = O^r",
                       "dmin = 0 with no maps from O(1) (or S) gives E = O^r, contradicting d >= 1", true});

    if ((is_p || is_q) && f.d && *f.d == 1 && f.dmin && *f.dmin == 1 && residual)
        out.push_back({"residual_degree_one", "0 -> O(-1) -> O^{r+1} -> E -> 0",
                       "d = 1, dmin = 1, no maps from O(1) (or S): e = h^0(E) = r+1", false});
    return out;
}

// ---- grid verification ----

bool TablesReport::ok() const {
    return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.ok; }) &&
           std::all_of(solver.begin(), solver.end(), [](const auto& c) { return c.ok; });
}

namespace {

std::vector<Variety> grid_varieties(Family f) {
    std::vector<Variety> out;
    if (f == Family::Q2Diagonal) return {Variety::quadric(2)};
    for (int n = 2; n <= 6; ++n) {
        if (f == Family::QnDegree1) {
            if (n >= 3) out.push_back(Variety::quadric(n));
        } else {
            out.push_back(Variety::projective_space(n));
        }
    }
    return out;
}

bool in_bounds(const ResolutionCandidate& c) {
    if (!c.dmin) return true;
    NefProblem p(c.variety, c.rank, c.target.c1);
    if (static_cast<int>(c.target.higher.size()) >= c.variety.dim() - 1) p.higher_chern = c.target.higher;
    return dmin_bounds(p).contains(*c.dmin);
}

std::string terms_str(const std::vector<Term>& ts) {
    std::string s;
    for (const auto& t : ts)
        s += (s.empty() ? "" : " ") + std::string("[") + std::to_string(t.degree) + "]" + t.bundle.str() + "^" +
             std::to_string(t.mult);
    return s;
}

SolverCheck match_terms(const std::string& name, const NefProblem& p, const PicClass& dmin, const ResolutionCandidate& c) {
    SolverCheck chk{name, p.variety.name(), p.rank, false, ""};
    auto res = solve_exponent_system(p, dmin, {});
    auto t = res.numeric();
    if (res.status != SolveStatus::Determined || !t) {
        chk.detail = "solver: " + status_name(res.status) + " " + res.reason;
        return chk;
    }
    auto coll = standard_collection(p.variety);
    auto got = normalize_terms(twist_terms(terms_from_table(coll, reduce_no_trivial_quotient(*t)), -dmin));
    auto want = normalize_terms(c.terms);
    chk.ok = got == want;
    chk.detail = "solver " + terms_str(got) + " vs case " + terms_str(want);
    return chk;
}

LinExpr fix_free(const LinExpr& x, const std::vector<std::string>& free_vars) {
    LinExpr y = x;
    for (const auto& f : free_vars) y = y.substitute(f, LinExpr(0));
    return y;
}

}  // namespace

TablesReport verify_case_tables() {
    TablesReport rep;
    for (const auto& spec : case_table()) {
        for (const auto& v : grid_varieties(spec.family))
            for (int r = 1; r <= 8; ++r) {
                auto c = instantiate(spec, v, r);
                if (!c) continue;
                CaseCheck chk{spec.name, v.name(), r, verify_candidate(*c), in_bounds(*c), false, spec.citation};
                chk.ok = chk.report.ok() && chk.dmin_in_bounds;
                rep.cases.push_back(std::move(chk));
            }
    }

    for (int n = 2; n <= 6; ++n) {
        auto v = Variety::projective_space(n);
        for (int r = 1; r <= 8; ++r) {
            NefProblem p1(v, r, PicClass(1)), p2(v, r, PicClass(2));
            if (auto c = instantiate(find_case("pn_d1_tangent"), v, r))
                rep.solver.push_back(match_terms("pn_d1_tangent_terms", p1, PicClass(1), *c));
            if (auto c = instantiate(find_case("pn_d2_two_om1"), v, r))
                rep.solver.push_back(match_terms("pn_d2_two_om1_terms", p2, PicClass(1), *c));

            auto zero = solve_exponent_system(p1, PicClass(0), {});
            rep.solver.push_back({"pn_d1_dmin0_infeasible", v.name(), r, zero.status == SolveStatus::Infeasible,
                                  status_name(zero.status)});
            auto two = solve_exponent_system(p2, PicClass(2), {});
            rep.solver.push_back({"pn_d2_dmin2_underdetermined", v.name(), r,
                                  two.status == SolveStatus::Underdetermined, status_name(two.status)});

            auto ts = solve_two_step(p2, 1);
            if (auto c = instantiate(find_case("pn_d2_om2"), v, r)) {
                bool ok = ts.status == SolveStatus::Determined && ts.reduced_terms == normalize_terms(c->terms) &&
                          ts.f10 == (n + 1) * ts.f01;
                rep.solver.push_back({"pn_d2_om2_two_step", v.name(), r, ok, terms_str(ts.reduced_terms)});
            }
            if (auto c = instantiate(find_case("pn_d2_p3_three_step"), v, r)) {
                auto t3 = solve_two_step(p2, 2);
                bool ok = t3.status == SolveStatus::Determined && t3.reduced_terms == normalize_terms(c->terms) &&
                          t3.f10 == 4 * t3.f01;
                rep.solver.push_back({"pn_d2_p3_three_step_two_step", v.name(), r, ok, terms_str(t3.reduced_terms)});
            }
        }
    }

    for (int n = 3; n <= 6; ++n) {
        auto v = Variety::quadric(n);
        auto coll = standard_collection(v);
        for (int r = 1; r <= 8; ++r) {
            NefProblem p(v, r, PicClass(1));
            auto res = solve_exponent_system(p, PicClass(1), {{"e", r + 1}});
            ChernData target{r, PicClass(1 + r), {}};
            SolverCheck chk{"qn_d1_om1_kclass", v.name(), r, false, status_name(res.status) + " " + res.reason};
            if (res.status != SolveStatus::Infeasible) {
                ExponentTable t;
                t.dmin = PicClass(1);
                bool integral = true;
                for (const auto& row : res.table) {
                    std::vector<Int> out;
                    for (const auto& x : row) {
                        auto y = fix_free(x, res.solution.free_vars).as_integer();
                        integral = integral && y && *y >= 0;
                        out.push_back(y.value_or(0));
                    }
                    t.e.push_back(out);
                }
                auto c = instantiate(find_case("qn_d1_om1"), v, r);
                chk.ok = integral && verify_resolution(coll, t, target).ok() &&
                         verify_terms(v, twist_terms(c->terms, PicClass(1)), target).ok();
            }
            rep.solver.push_back(chk);
        }
    }

    auto q2 = Variety::quadric(2);
    auto q2coll = standard_collection(q2);
    for (int r = 1; r <= 8; ++r) {
        NefProblem p(q2, r, PicClass(1, 1));
        auto res = solve_exponent_system(p, PicClass(1, 1), {{"e", r + 1}});
        auto c = instantiate(find_case("q2_om1"), q2, r);
        SolverCheck chk{"q2_om1_kclass", q2.name(), r, false, status_name(res.status) + " " + res.reason};
        if (auto t = res.numeric(); t && res.status == SolveStatus::Determined) {
            auto target = twist_chern(q2, c->target, PicClass(1, 1));
            chk.ok = verify_resolution(q2coll, *t, target).ok();
        }
        rep.solver.push_back(chk);
    }
    return rep;
}

}  // namespace nefres
