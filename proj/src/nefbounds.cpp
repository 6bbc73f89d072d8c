#include "nefres/nefbounds.hpp"

#include <algorithm>

#include "nefres/errors.hpp"

namespace nefres {

void NefProblem::check() const {
    if (rank < 1) throw InvalidInput("rank must be >= 1");
    c1.check(variety);
    if (!c1.effective()) throw InvalidInput("det of a nef bundle is nef, got c1 = " + c1.str());
}

std::optional<Int> NefProblem::c2() const {
    if (higher_chern.empty()) return std::nullopt;
    return higher_chern[0];
}

ChernData NefProblem::chern() const {
    return {rank, c1, higher_chern};
}

std::optional<bool> NefProblem::bigness() const {
    std::optional<bool> derived;
    if (static_cast<int>(higher_chern.size()) >= variety.dim() - 1) derived = segre_top(variety, chern()) > 0;
    if (derived && big && *derived != *big)
        throw InvalidInput("bigness flag contradicts the top Segre number of the given Chern classes");
    return derived ? derived : big;
}

bool DminBounds::contains(const PicClass& dmin) const {
    if (!dmin.dominated_by(upper)) return false;
    return !lower || lower->dominated_by(dmin);
}

DminBounds dmin_bounds(const NefProblem& p) {
    p.check();
    const Variety& v = p.variety;
    DminBounds b;
    b.upper = p.c1;
    bool tightens = v.is_projective_space() || v.is_quadric_surface() || v.dim() >= 4;
    if (tightens && p.bigness().value_or(false)) b.upper = p.c1 - PicClass::hyperplane(v, 1);
    Int smallest = *std::min_element(p.c1.coords().begin(), p.c1.coords().end());
    if (smallest < p.rank) b.lower = PicClass::zero(v);
    return b;
}

namespace {

int mask_offset(const Variety& v) {
    if (v.is_projective_space()) return 0;
    return v.is_odd_quadric() ? 1 : 2;
}

}  // namespace

std::set<int> vanishing_mask(const NefProblem& p, const PicClass& dmin, MaskOptions opt) {
    p.check();
    dmin.check(p.variety);
    const Variety& v = p.variety;
    auto coll = standard_collection(v);
    std::set<int> out;
    if (v.is_quadric_surface()) {
        Int xa = p.c1[0] + dmin[0], yb = p.c1[1] + dmin[1];
        for (int j = 0; j <= coll.m(); ++j) {
            const PicClass& t = coll.gens()[j].twist;
            if (t[0] > xa || t[1] > yb) out.insert(j);
            if (opt.no_map_from_det && t[0] >= xa && t[1] >= yb) out.insert(j);
        }
        return out;
    }
    Int bound = p.c1[0] + dmin[0] + mask_offset(v);
    for (int j = 0; j <= coll.m(); ++j) {
        if (j > bound) out.insert(j);
        if (opt.no_map_from_det && coll.gens()[j].is_line() && j >= bound) out.insert(j);
    }
    return out;
}

std::vector<PropagationViolation> spinor_propagation(const NefProblem& p, const ExponentTable& t) {
    const Variety& v = p.variety;
    if (!v.is_even_quadric()) throw InvalidInput("spinor propagation applies to even quadrics, got " + v.name());
    int m = standard_collection(v).m();
    if (t.m() != m) throw InvalidInput("table size does not match the collection on " + v.name());
    std::vector<PropagationViolation> out;
    auto seen = [&](int l, int k) {
        return std::any_of(out.begin(), out.end(), [&](const auto& x) { return x.l == l && x.k == k; });
    };
    for (int l = 0; l < m; ++l) {
        bool tail_zero = true;
        for (int k = 3; k <= m - l; ++k) tail_zero = tail_zero && t.e[l][k] == 0;
        if (!tail_zero) continue;
        for (int k = 1; k <= m - l - 1; ++k)
            if (t.e[l + 1][k] != 0) out.push_back({l + 1, k, "row vanishes beyond 2 but next row is nonzero beyond 0"});
    }
    int n = v.dim();
    if (n <= m && t.e[n][1] != 0 && !seen(n, 1)) out.push_back({n, 1, "e_{n,1} must vanish"});
    if (n + 1 <= m && t.e[n + 1][0] != 0 && !seen(n + 1, 0)) out.push_back({n + 1, 0, "e_{n+1,0} must vanish"});
    return out;
}

}  // namespace nefres
