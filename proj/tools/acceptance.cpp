#include <iostream>
#include <random>
#include <sstream>

#include "nefres/classifier.hpp"

using namespace nefres;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << what;
    if (!ok && !detail.empty()) std::cout << " :: " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

Int pow2(Int k) { return Int{1} << k; }

std::vector<Variety> registered() {
    std::vector<Variety> vs;
    for (int n = 1; n <= 6; ++n) vs.push_back(Variety::projective_space(n));
    for (int n = 2; n <= 6; ++n) vs.push_back(Variety::quadric(n));
    return vs;
}

void criterion1() {
    auto v = Variety::quadric(3);
    auto c = standard_collection(v);
    std::vector<Int> want = {0, 1, 4, 16};
    bool ok = c.hom()[1] == want && c.hom()[1][2] == spinor_sections(v) && spinor_sections(v) == pow2(spinor_s(v) + 1);
    std::ostringstream d;
    for (auto x : c.hom()[1]) d << x << " ";
    report(1, ok, "Q3 hom row of S is (0,1,4,16)", d.str());
}

void criterion2() {
    bool ok = true;
    std::string detail;
    for (int n : {3, 5}) {
        auto v = Variety::quadric(n);
        Int s = (n - 1) / 2;
        for (int r = 2; r <= 6; ++r) {
            Int e = r + 1;
            NefProblem p(v, r, PicClass(1));
            auto res = solve_exponent_system(p, PicClass(1), {{"e", e}});
            auto t = res.numeric();
            if (res.status != SolveStatus::Determined || !t) {
                ok = false;
                detail += v.name() + " r=" + std::to_string(r) + " " + status_name(res.status) + "; ";
                continue;
            }
            Rational e01 = Rational(2, pow2(s)) * Rational(1 + r + (pow2(n - 1) - 1) * e);
            bool row = Rational(t->at(0, 1)) == e01 && t->at(1, 1) == pow2(s + 1) * e && t->at(2, 0) == pow2(n + 1) * e &&
                       t->at(1, 0) - t->at(0, 0) == r + 2 + (pow2(n + 1) - 1) * e;
            bool ver = verify_resolution(standard_collection(v), *t, ChernData{r, PicClass(1 + r), {}}).ok();
            if (!row || !ver) {
                ok = false;
                detail += v.name() + " r=" + std::to_string(r) + (row ? "" : " formulas") + (ver ? "" : " verify") + "; ";
            }
        }
    }
    report(2, ok, "odd quadric exponent formulas at e = r+1", detail);
}

void criterion3() {
    bool ok = true;
    std::string detail;
    for (int n : {4, 6}) {
        auto v = Variety::quadric(n);
        Int s = (n - 1) / 2;
        for (int r = 2; r <= 6; ++r) {
            NefProblem p(v, r, PicClass(1));
            auto res = solve_exponent_system(p, PicClass(1), {});
            LinExpr want = Rational(2, pow2(s)) * (LinExpr(Int{1 + r}) + (pow2(n - 1) - 1) * LinExpr::var("e"));
            LinExpr got = res.at(0, 1) + res.at(0, 2);
            auto sb = section_bound_inequality(p, r + 1);
            bool good = got == want && sb.coefficient == pow2(s + 2) && sb.bound == Rational(r + 1) && sb.boundary &&
                        !section_bound_inequality(p, r + 2).satisfied;
            if (!good) {
                ok = false;
                detail += v.name() + " r=" + std::to_string(r) + " got " + got.str() + " bound " + rational_str(sb.bound) + "; ";
            }
        }
    }
    report(3, ok, "even quadric combined constraint and e <= r+1", detail);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    auto expect = [&](const Variety& v, int r, PicClass c1, std::size_t n) {
        auto got = classify(NefProblem(v, r, c1)).size();
        if (got != n) {
            ok = false;
            detail += v.name() + " r=" + std::to_string(r) + " c1=" + c1.str() + " got " + std::to_string(got) + "; ";
        }
    };
    for (int n = 2; n <= 6; ++n) {
        auto pn = Variety::projective_space(n);
        expect(pn, 8, PicClass(1), 2);
        expect(pn, 8, PicClass(2), n == 3 ? 6 : 5);
    }
    expect(Variety::quadric(2), 8, PicClass(1, 1), 3);
    for (int n = 3; n <= 6; ++n) expect(Variety::quadric(n), 8, PicClass(1), n <= 4 ? 3 : 2);
    expect(Variety::projective_space(3), 3, PicClass(1), 2);
    expect(Variety::quadric(5), 2, PicClass(1), 2);
    expect(Variety::quadric(2), 2, PicClass(1, 1), 3);
    expect(Variety::projective_space(4), 2, PicClass(2), 5);
    auto rep = verify_case_tables();
    if (!rep.ok()) {
        ok = false;
        detail += "verify_case_tables failed";
    }
    report(4, ok, "classification case counts and full grid verification", detail);
}

void criterion5() {
    bool ok = true;
    auto p2 = Variety::projective_space(2), q2 = Variety::quadric(2);
    for (int r = 1; r <= 8; ++r) {
        for (Int c2 = 0; c2 <= 4; ++c2)
            ok = ok && euler_char_surface(p2, ChernData{r, PicClass(2), {c2}}) == r + 5 - c2;
        for (Int c2 = 0; c2 <= 2; ++c2)
            ok = ok && euler_char_surface(q2, ChernData{r, PicClass(1, 1), {c2}}) == r + 3 - c2;
    }
    report(5, ok, "Riemann-Roch on P2 (d=2) and Q2 ((1,1))", "");
}

void criterion6() {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<Int> dist(0, 9);
    bool ok = true;
    for (const auto& v : registered()) {
        auto c = standard_collection(v);
        for (int trial = 0; trial < 200; ++trial) {
            DimVector e0(c.size());
            for (auto& x : e0) x = dist(rng);
            auto t = resolution_exponents(c, e0);
            DimVector row = e0;
            for (int l = 0; l <= c.m(); ++l) {
                ok = ok && t.e[l] == row;
                row = kernel_dims(c, row);
            }
        }
    }
    report(6, ok, "recursion equals iterated kernel dimensions (200 random vectors per collection)", "");
}

void criterion7() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> dist(0, 5);
    for (const auto& v : registered()) {
        auto c = standard_collection(v);
        for (int trial = 0; trial < 50; ++trial) {
            DimVector e0(c.size());
            for (auto& x : e0) x = dist(rng);
            auto t = resolution_exponents(c, e0);
            if (!staircase_violations(t).empty()) {
                ok = false;
                detail += "staircase " + v.name() + "; ";
            }
            if (v.is_even_quadric() && !spinor_propagation(NefProblem(v, 1, PicClass::hyperplane(v, 1)), t).empty()) {
                ok = false;
                detail += "propagation " + v.name() + "; ";
            }
        }
    }
    for (int n = 3; n <= 6; ++n) {
        auto v = Variety::quadric(n);
        for (int r = 1; r <= 8; ++r) {
            NefProblem p(v, r, PicClass(1));
            auto res = solve_exponent_system(p, PicClass(1), {{"e", r + 1}});
            auto free = res.solution.free_vars;
            ExponentTable t;
            for (const auto& row : res.table) {
                std::vector<Int> out;
                for (auto x : row) {
                    for (const auto& f : free) x = x.substitute(f, LinExpr(0));
                    out.push_back(x.as_integer().value_or(-1));
                }
                t.e.push_back(out);
            }
            if (!staircase_violations(t).empty() || (v.is_even_quadric() && !spinor_propagation(p, t).empty())) {
                ok = false;
                detail += "solver " + v.name() + "; ";
            }
            DimVector e0 = t.e[0];
            if (resolution_exponents(standard_collection(v), e0).e != t.e) {
                ok = false;
                detail += "feedback " + v.name() + "; ";
            }
        }
    }
    auto rep = verify_case_tables();
    for (const auto& cc : rep.cases)
        if (!cc.dmin_in_bounds) {
            ok = false;
            detail += "dmin " + cc.name + " " + cc.variety + "; ";
        }
    report(7, ok, "staircase, even-quadric propagation and dmin bounds", detail);
}

void criterion8() {
    bool ok = true;
    std::string detail;
    auto p1 = Variety::projective_space(1);
    auto a = validate_strong_exceptional(p1, {BundleSym::line(PicClass(0)), BundleSym::line(PicClass(2))});
    bool p1_ok = !a.ok && std::find(a.failures.begin(), a.failures.end(), ExtFailure{1, 0, 1, 1}) != a.failures.end();
    if (!p1_ok) {
        ok = false;
        detail += "(O,O(2)) on P1 not rejected at (1,0,1); ";
    }
    auto q2 = Variety::quadric(2);
    auto b = validate_strong_exceptional(q2, {BundleSym::line(PicClass(0, 0)), BundleSym::line(PicClass(1, 1))});
    bool q2_ok = !b.ok && std::find(b.failures.begin(), b.failures.end(), ExtFailure{1, 0, 1, 1}) != b.failures.end();
    if (!q2_ok) {
        ok = false;
        auto h = line_cohomology(q2, PicClass(-1, -1));
        std::string hs;
        for (auto x : h) hs += std::to_string(x) + " ";
        detail += "(O,O(1,1)) on Q2 accepted: H^*(O(-1,-1)) = ( " + hs + ") so Ext^1(O(1,1),O) = 0; ";
    }
    for (auto v : {Variety::projective_space(3), Variety::quadric(2), Variety::quadric(3), Variety::quadric(4)}) {
        if (!validate_strong_exceptional(standard_collection(v)).ok) {
            ok = false;
            detail += "standard collection on " + v.name() + " rejected; ";
        }
    }
    report(8, ok, "validator negative controls and standard collections", detail);
}

void criterion9() {
    bool ok = true;
    std::string detail;
    std::size_t count = 0;
    for (const auto& spec : case_table())
        for (const auto& v : registered())
            for (int r = 1; r <= 8; ++r) {
                if (v.dim() < 2) continue;
                auto c = instantiate(spec, v, r);
                if (!c) continue;
                for (const auto& pt : perturbations(*c)) {
                    ++count;
                    if (verify_terms(v, pt.terms, c->target).ok()) {
                        ok = false;
                        detail += c->name + " " + v.name() + " r=" + std::to_string(r) + "; ";
                    }
                }
            }
    report(9, ok && count > 0, "every single-multiplicity perturbation is detected (" + std::to_string(count) + ")", detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    return failures == 0 ? 0 : 1;
}
