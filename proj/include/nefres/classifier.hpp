#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nefres/linexpr.hpp"
#include "nefres/nefbounds.hpp"

namespace nefres {

/// c0 + cr*r + cn*n.
struct Affine {
    Int c0 = 0;
    Int cr = 0;
    Int cn = 0;

    Int eval(Int r, Int n) const { return c0 + cr * r + cn * n; }
    std::string str() const;
};

enum class Family { PnDegree1, PnDegree2, Q2Diagonal, QnDegree1, Auxiliary };

std::string family_name(Family f);

/// Table entry: one case of a classification, with multiplicities in (r, n).
struct CaseSpec {
    struct TermSpec {
        int degree;
        bool spinor;       // the spinor S (odd n) or S+ (even n)
        PicClass twist;    // line twist, or the spinor's extra twist
        Affine mult;
    };

    std::string name;
    Family family;
    std::string statement;
    std::string citation;
    std::string note;
    std::vector<TermSpec> terms;
    std::vector<Affine> extra_conditions;  // each must be >= 0
    std::set<int> dims;                    // admissible n; empty means all
    std::optional<PicClass> dmin;
    std::optional<std::pair<int, PicClass>> dmin_at_rank;  // (r, dmin) override
    std::optional<int> fixed_rank;
    std::optional<PicClass> fixed_c1;
};

const std::vector<CaseSpec>& case_table();
const CaseSpec& find_case(const std::string& name);

/// A case instantiated on a concrete variety and rank.
struct ResolutionCandidate {
    std::string name;
    std::string citation;
    std::string note;
    std::string statement;
    Variety variety;
    int rank;
    std::vector<Term> terms;
    std::optional<PicClass> dmin;
    ChernData target;
};

/// nullopt when (v, r) violates the side conditions of the case.
std::optional<ResolutionCandidate> instantiate(const CaseSpec& spec, const Variety& v, int r);

Family family_for(const NefProblem& p);

/// Case list for (variety, c1), filtered by side conditions; throws NotClassified.
std::vector<ResolutionCandidate> classify(const NefProblem& p);

VerifyReport verify_candidate(const ResolutionCandidate& c);

struct Perturbation {
    std::size_t term;
    Int delta;
    std::vector<Term> terms;
};

/// Every +-1 change of a single multiplicity that keeps it nonnegative.
std::vector<Perturbation> perturbations(const ResolutionCandidate& c);

// ---- exponent systems ----

enum class SolveStatus { Determined, Underdetermined, Infeasible };
std::string status_name(SolveStatus s);

struct LinearSolution {
    bool consistent = true;
    std::map<std::string, LinExpr> pivots;
    std::vector<std::string> free_vars;

    LinExpr eval(const LinExpr& x) const;
};

/// Gaussian elimination over Q; equations are LinExprs meant to equal 0.
/// Variables named in `late` are chosen as pivots only after all others.
LinearSolution solve_linear(const std::vector<LinExpr>& eqs, const std::set<std::string>& late = {});

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::string reason;
    PicClass dmin;
    std::vector<std::string> slot_reasons;  // per row-0 slot: mask, residual, sections, unknown
    std::vector<std::vector<LinExpr>> table;
    std::vector<std::string> equations;
    LinearSolution solution;

    LinExpr at(int l, int j) const { return table.at(l).at(j); }
    /// Integer table when every entry is a nonnegative integer constant.
    std::optional<ExponentTable> numeric() const;
};

/// Solves the rank and determinant equations of the standard resolution of E(dmin)
/// under the residual hypotheses Hom(O(k),E) = 0 (k > 0) and Hom(S,E) = 0.
/// `params` may fix "e" = dim Hom(O, E).
SolveResult solve_exponent_system(const NefProblem& p, const PicClass& dmin, const std::map<std::string, Int>& params);

struct SectionBound {
    LinExpr lhs;  // row-1 spinor slots, in e
    LinExpr rhs;  // row-0 spinor slots, in e
    Int coefficient;
    Rational bound;
    Int e;
    bool satisfied;
    bool boundary;
};

/// Injectivity of the row-1 spinor part into the row-0 spinor part, reduced to e <= bound.
SectionBound section_bound_inequality(const NefProblem& p, Int e);

/// The two-step resolution of E(1) for dmin = 2 on P^n with d = 2:
/// 0 -> O(-1)[correction_degree] + O^f10 -> O^f00 + O(1)^f01 -> E(1).
struct TwoStepResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::string reason;
    Int f00 = 0, f01 = 0, f10 = 0;
    Int hom01 = 0;
    std::vector<Term> reduced_terms;  // after dropping O^f00, twisted back to E
};

TwoStepResult solve_two_step(const NefProblem& p, int correction_degree);

// ---- decision rules ----

enum class HomFact { Zero, NonZero, AtLeastTwo };

struct FactSet {
    std::optional<Variety> variety;
    std::optional<Int> d, n, r, dmin;
    std::map<Int, HomFact> hom_abs;     // Hom(O(k),E)
    std::map<Int, HomFact> hom_rel_d;   // Hom(O(d+k),E)
    std::optional<HomFact> hom_spinor;  // Hom(S,E)

    /// Parses facts such as "d=2", "hom(O(1),E)>=2", "hom(O(d),E)!=0", "hom(S,E)=0".
    void add(const std::string& fact);
    static FactSet parse(const std::vector<std::string>& facts);

    std::optional<Int> dim() const;
    /// Hom(O(d+k),E), looking at both absolute and d-relative entries.
    std::optional<HomFact> hom_d(Int k) const;
    std::optional<HomFact> hom_at(Int k) const;
};

struct Conclusion {
    std::string rule;
    std::string conclusion;
    std::string citation;
    bool inconsistent = false;
};

std::vector<Conclusion> apply_decision_rules(const FactSet& f);

// ---- grid verification ----

struct CaseCheck {
    std::string name;
    std::string variety;
    int rank;
    VerifyReport report;
    bool dmin_in_bounds = true;
    bool ok = false;
    std::string citation;
};

struct SolverCheck {
    std::string name;
    std::string variety;
    int rank;
    bool ok = false;
    std::string detail;
};

struct TablesReport {
    std::vector<CaseCheck> cases;
    std::vector<SolverCheck> solver;

    bool ok() const;
};

TablesReport verify_case_tables();

}  // namespace nefres
