#include "nefres/homalg.hpp"

#include <algorithm>
#include <map>

#include "nefres/errors.hpp"

namespace nefres {

DimVector kernel_dims(const ExcCollection& c, const DimVector& v) {
    if (v.size() != c.size())
        throw InvalidInput("dimension vector of length " + std::to_string(v.size()) + " for a collection of length " +
                           std::to_string(c.size()));
    DimVector w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) w[i] += v[j] * c.hom()[i][j];
    return w;
}

ExponentTable resolution_exponents(const ExcCollection& c, const DimVector& e0, std::optional<PicClass> dmin) {
    if (e0.size() != c.size())
        throw InvalidInput("e0 of length " + std::to_string(e0.size()) + " for a collection of length " +
                           std::to_string(c.size()));
    for (Int x : e0)
        if (x < 0) throw InvalidInput("negative exponent in e0");
    int m = c.m();
    ExponentTable t;
    t.dmin = std::move(dmin);
    t.e.assign(m + 1, std::vector<Int>(m + 1, 0));
    t.e[0] = e0;
    for (int l = 1; l <= m; ++l)
        for (int j = 0; j <= m - l; ++j) {
            Int s = 0;
            for (int k = j + 1; k <= m - l + 1; ++k) s += t.e[l - 1][k] * c.hom()[j][k];
            t.e[l][j] = s;
        }
    return t;
}

std::vector<std::pair<int, int>> staircase_violations(const ExponentTable& t) {
    std::vector<std::pair<int, int>> bad;
    int m = t.m();
    for (int l = 0; l < m; ++l)
        for (int j = 0; j <= m - l; ++j) {
            bool tail_zero = true;
            for (int k = j + 1; k <= m - l; ++k) tail_zero = tail_zero && t.e[l][k] == 0;
            if (!tail_zero) continue;
            for (int k = std::max(j, 0); k <= m - l - 1; ++k)
                if (t.e[l + 1][k] != 0) {
                    bad.emplace_back(l, j);
                    break;
                }
        }
    return bad;
}

ExponentTable reduce_no_trivial_quotient(const ExponentTable& t) {
    if (t.m() < 1) throw InvalidInput("table too short to reduce");
    if (t.e[1][0] < t.e[0][0])
        throw InvalidInput("e10 = " + std::to_string(t.e[1][0]) + " < e00 = " + std::to_string(t.e[0][0]) +
                           ": the bundle would have G_0 as a quotient");
    ExponentTable r = t;
    r.e[1][0] -= r.e[0][0];
    r.e[0][0] = 0;
    return r;
}

std::vector<Term> terms_from_table(const ExcCollection& c, const ExponentTable& t) {
    if (t.m() != c.m()) throw InvalidInput("table size does not match the collection");
    std::vector<Term> out;
    for (int l = 0; l <= t.m(); ++l)
        for (int j = 0; j <= t.m(); ++j)
            if (t.e[l][j] != 0) out.push_back({l, c.gens()[j], t.e[l][j]});
    return out;
}

std::vector<Term> twist_terms(const std::vector<Term>& terms, const PicClass& t) {
    std::vector<Term> out;
    for (const auto& x : terms) {
        Term y = x;
        y.bundle = x.bundle.is_line() ? x.bundle.twisted(t) : x.bundle.twisted(PicClass(t.degree()));
        out.push_back(y);
    }
    return out;
}

std::vector<Term> normalize_terms(std::vector<Term> terms) {
    std::map<std::pair<int, BundleSym>, Int> acc;
    for (const auto& t : terms) acc[{t.degree, t.bundle}] += t.mult;
    std::vector<Term> out;
    for (const auto& [key, mult] : acc)
        if (mult != 0) out.push_back({key.first, key.second, mult});
    return out;
}

namespace {

Check make_check(std::vector<Int> lhs, std::vector<Int> rhs) {
    Check c;
    c.ok = lhs == rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

}  // namespace

VerifyReport verify_terms(const Variety& v, const std::vector<Term>& terms, const ChernData& target) {
    target.c1.check(v);
    Int rank = 0;
    PicClass det = PicClass::zero(v);
    Int chi = 0;
    bool lines_only = true;
    for (const auto& t : terms) {
        Int sign = t.degree % 2 ? -1 : 1;
        rank += sign * t.mult * t.bundle.rank(v);
        det += (sign * t.mult) * t.bundle.c1(v);
        if (t.bundle.is_line())
            chi += sign * t.mult * euler_characteristic(line_cohomology(v, t.bundle.twist));
        else
            lines_only = false;
    }
    VerifyReport rep;
    rep.rank = make_check({rank}, {target.rank});
    rep.det = make_check(det.coords(), target.c1.coords());
    if (v.is_surface() && target.c2()) {
        if (!lines_only) throw Unverifiable("Euler characteristic of a spinor term on a surface");
        rep.chi = make_check({chi}, {euler_char_surface(v, target)});
    }
    return rep;
}

VerifyReport verify_resolution(const ExcCollection& c, const ExponentTable& t, const ChernData& target) {
    return verify_terms(c.variety(), terms_from_table(c, t), target);
}

ChernData twist_chern(const Variety& v, const ChernData& cd, const PicClass& t) {
    cd.c1.check(v);
    t.check(v);
    ChernData out;
    out.rank = cd.rank;
    out.c1 = cd.c1 + Int{cd.rank} * t;
    if (cd.higher.empty()) return out;
    if (v.is_quadric_surface()) {
        Int r = cd.rank;
        out.higher = {cd.higher[0] + (r - 1) * intersect(v, cd.c1, t) + binomial(r, 2) * intersect(v, t, t)};
        return out;
    }
    // c_k(E(t)) = sum_i C(r-i, k-i) c_i t^{k-i}, classes as coefficients of h^k
    std::vector<Int> c = {1, cd.c1[0]};
    c.insert(c.end(), cd.higher.begin(), cd.higher.end());
    Int r = cd.rank;
    Int x = t[0];
    for (std::size_t k = 2; k < c.size(); ++k) {
        Int s = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            Int p = 1;
            for (std::size_t q = 0; q < k - i; ++q) p *= x;
            s += binomial(r - static_cast<Int>(i), static_cast<Int>(k - i)) * c[i] * p;
        }
        out.higher.push_back(s);
    }
    return out;
}

std::optional<ChernData> chern_from_line_terms(const Variety& v, const std::vector<Term>& terms) {
    Int rank = 0;
    PicClass c1 = PicClass::zero(v);
    for (const auto& t : terms) {
        if (!t.bundle.is_line()) return std::nullopt;
        Int sign = t.degree % 2 ? -1 : 1;
        rank += sign * t.mult;
        c1 += (sign * t.mult) * t.bundle.twist;
    }
    if (rank < 1) throw InvalidInput("alternating sum has rank " + std::to_string(rank));
    ChernData cd;
    cd.rank = static_cast<int>(rank);
    cd.c1 = c1;
    if (v.is_quadric_surface()) {
        // ch_2 = (c1^2 - 2 c2) / 2 is additive and equals t^2/2 on O(t).
        Int twice_ch2 = 0;
        for (const auto& t : terms) twice_ch2 += (t.degree % 2 ? -1 : 1) * t.mult * intersect(v, t.bundle.twist, t.bundle.twist);
        Int num = intersect(v, c1, c1) - twice_ch2;
        if (num % 2 != 0) throw InvalidInput("non-integral c2 from line terms");
        cd.higher = {num / 2};
        return cd;
    }
    // Total Chern class in Z[h]/(h^{n+1}); each O(t) contributes (1 + t h)^{+-1}.
    int n = v.dim();
    std::vector<Int> c(n + 1, 0);
    c[0] = 1;
    for (const auto& t : terms) {
        Int x = t.bundle.twist[0];
        bool inverse = t.degree % 2 == 1;
        for (Int rep = 0; rep < t.mult; ++rep) {
            if (!inverse) {
                for (int k = n; k >= 1; --k) c[k] += x * c[k - 1];
            } else {
                // multiply by 1 - x h + x^2 h^2 - ...
                for (int k = 1; k <= n; ++k) c[k] -= x * c[k - 1];
            }
        }
    }
    cd.higher.assign(c.begin() + 2, c.end());
    return cd;
}

}  // namespace nefres
