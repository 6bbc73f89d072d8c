#include "nefres/collections.hpp"

#include "nefres/errors.hpp"

namespace nefres {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Line: return "line";
        case Flavor::Spinor: return "spinor";
        case Flavor::SpinorPlus: return "spinor+";
        case Flavor::SpinorMinus: return "spinor-";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "line") return Flavor::Line;
    if (s == "spinor") return Flavor::Spinor;
    if (s == "spinor+") return Flavor::SpinorPlus;
    if (s == "spinor-") return Flavor::SpinorMinus;
    throw InvalidInput("unknown flavor '" + s + "'");
}

int spinor_s(const Variety& v) {
    if (!v.is_quadric() || v.dim() < 3) throw InvalidInput("no spinor bundles registered on " + v.name());
    return (v.dim() - 1) / 2;
}

Int spinor_rank(const Variety& v) { return Int{1} << spinor_s(v); }
Int spinor_sections(const Variety& v) { return Int{1} << (spinor_s(v) + 1); }

void BundleSym::check(const Variety& v) const {
    if (is_line()) {
        twist.check(v);
        return;
    }
    if (twist.size() != 1) throw InvalidInput("spinor twist must be an integer");
    bool ok = flavor == Flavor::Spinor ? v.is_odd_quadric() && v.dim() >= 3
                                       : v.is_even_quadric() && v.dim() >= 4;
    if (!ok) throw InvalidInput(flavor_name(flavor) + " bundle does not exist on " + v.name());
}

Int BundleSym::rank(const Variety& v) const {
    check(v);
    return is_line() ? 1 : spinor_rank(v);
}

PicClass BundleSym::c1(const Variety& v) const {
    check(v);
    if (is_line()) return twist;
    int s = spinor_s(v);
    return PicClass((Int{1} << (s - 1)) + (Int{1} << s) * twist[0]);
}

BundleSym BundleSym::twisted(const PicClass& t) const {
    return {flavor, twist + t};
}

std::string BundleSym::str() const {
    std::string base = is_line() ? "O" : flavor == Flavor::Spinor ? "S" : flavor == Flavor::SpinorPlus ? "S+" : "S-";
    if (is_line()) return base + (twist.size() == 1 ? "(" + twist.str() + ")" : twist.str());
    if (twist[0] == 0) return base;
    return base + "(" + twist.str() + ")";
}

Flavor dual_spinor(const Variety& v, Flavor f) {
    if (f == Flavor::Line) throw InvalidInput("not a spinor flavor");
    if (f == Flavor::Spinor) return f;
    if (spinor_s(v) % 2 == 1) return f;
    return f == Flavor::SpinorPlus ? Flavor::SpinorMinus : Flavor::SpinorPlus;
}

namespace {

Flavor swap_parity(Flavor f) {
    if (f == Flavor::SpinorPlus) return Flavor::SpinorMinus;
    if (f == Flavor::SpinorMinus) return Flavor::SpinorPlus;
    return f;
}

// 0 -> S'(t-1) -> O(t)^{2^{s+1}} -> S(t) -> 0 with S' = S (odd) or the other half-spinor (even).
Int sections_rec(const Variety& v, Flavor f, Int t) {
    if (t == -1) return 0;
    Int h0 = line_cohomology(v, PicClass(t))[0];
    return spinor_sections(v) * h0 - sections_rec(v, swap_parity(f), t - 1);
}

// H^q(S(t)) for t >= -(n-1): h^0 from the recursion (zero below -1), nothing in positive degree.
std::optional<std::vector<Int>> spinor_cohomology(const Variety& v, Flavor f, Int t) {
    int n = v.dim();
    if (t < -(n - 1)) return std::nullopt;
    std::vector<Int> h(n + 1, 0);
    h[0] = t >= -1 ? sections_rec(v, f, t) : 0;
    return h;
}

std::vector<Int> unit(int n, int q, Int value) {
    std::vector<Int> h(n + 1, 0);
    h[q] = value;
    return h;
}

}  // namespace

Int spinor_twisted_sections(const Variety& v, Flavor f, Int t) {
    BundleSym{f, PicClass(t)}.check(v);
    if (t < -1) throw InvalidInput("spinor sections only tabulated for twists >= -1");
    return sections_rec(v, f, t);
}

std::optional<std::vector<Int>> ext_dims(const Variety& v, const BundleSym& a, const BundleSym& b) {
    a.check(v);
    b.check(v);
    int n = v.dim();
    if (a.is_line() && b.is_line()) return line_cohomology(v, b.twist - a.twist);
    if (a.is_line()) return spinor_cohomology(v, b.flavor, b.twist[0] - a.twist[0]);
    if (b.is_line()) {
        // Ext^q(S(x), O(y)) = H^q(S^v(y-x)) = H^q(S'(y-x-1))
        return spinor_cohomology(v, dual_spinor(v, a.flavor), b.twist[0] - a.twist[0] - 1);
    }
    Int shift = a.twist[0] - b.twist[0];
    if (shift == 0) {
        if (a.flavor == b.flavor) return unit(n, 0, 1);
        return unit(n, 0, 0);
    }
    if (shift == 1) {
        if (a.flavor == Flavor::Spinor) return unit(n, 1, 1);
        if (a.flavor == b.flavor) return unit(n, 0, 0);
        return unit(n, 1, 1);
    }
    return std::nullopt;
}

std::string ext_justification(const Variety& v, const BundleSym& a, const BundleSym& b) {
    if (!ext_dims(v, a, b)) return "unverifiable";
    if (a.is_line() && b.is_line()) return "line bundle cohomology";
    if (a.is_line() || b.is_line()) return "spinor sections recursion, no higher spinor cohomology above twist -(n-1)";
    Int shift = a.twist[0] - b.twist[0];
    if (shift == 0) return a.flavor == b.flavor ? "exceptional object" : "RHom(S+,S-) = 0";
    if (a.flavor == Flavor::Spinor) return "RHom(S(1),S) = K[-1]";
    return a.flavor == b.flavor ? "RHom(S+(1),S+) = 0" : "RHom(S+(1),S-) = K[-1]";
}

ExcCollection::ExcCollection(Variety v, std::vector<BundleSym> gens)
    : variety_(v), gens_(std::move(gens)) {
    std::size_t m = gens_.size();
    hom_.assign(m, std::vector<Int>(m, 0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            auto e = ext_dims(variety_, gens_[j], gens_[k]);
            if (!e)
                throw Unverifiable("no trusted Hom(" + gens_[j].str() + "," + gens_[k].str() + ") on " + variety_.name());
            hom_[j][k] = (*e)[0];
        }
}

Int ExcCollection::hom_dim(int j, int k) const {
    if (j < 0 || k < 0 || j > m() || k > m())
        throw InvalidInput("index out of range for a collection of length " + std::to_string(size()));
    return hom_[j][k];
}

ExcCollection standard_collection(const Variety& v) {
    std::vector<BundleSym> g;
    int n = v.dim();
    if (v.is_projective_space()) {
        for (int k = 0; k <= n; ++k) g.push_back(BundleSym::line(PicClass(k)));
    } else if (v.is_quadric_surface()) {
        g = {BundleSym::line(PicClass(0, 0)), BundleSym::line(PicClass(1, 0)), BundleSym::line(PicClass(0, 1)),
             BundleSym::line(PicClass(1, 1))};
    } else {
        g.push_back(BundleSym::line(PicClass(0)));
        if (v.is_odd_quadric()) {
            g.push_back(BundleSym::spinor(Flavor::Spinor));
        } else {
            g.push_back(BundleSym::spinor(Flavor::SpinorPlus));
            g.push_back(BundleSym::spinor(Flavor::SpinorMinus));
        }
        for (int k = 1; k <= n - 1; ++k) g.push_back(BundleSym::line(PicClass(k)));
    }
    return ExcCollection(v, std::move(g));
}

ExcCollection twist_collection(const ExcCollection& c, const PicClass& t) {
    PicClass neg = -t;
    std::vector<BundleSym> g;
    for (const auto& b : c.gens()) {
        if (b.is_line()) {
            t.check(c.variety());
            g.push_back(b.twisted(neg));
        } else {
            g.push_back(b.twisted(PicClass(neg.degree())));
        }
    }
    return ExcCollection(c.variety(), std::move(g));
}

ValidationReport validate_strong_exceptional(const Variety& v, const std::vector<BundleSym>& gens) {
    ValidationReport rep;
    int m = static_cast<int>(gens.size());
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            auto e = ext_dims(v, gens[j], gens[k]);
            if (!e) {
                rep.unverifiable.push_back({j, k, -1, -1});
                continue;
            }
            for (int q = 0; q <= v.dim(); ++q) {
                Int want = -1;
                if (j == k) want = q == 0 ? 1 : 0;
                else if (j > k || q > 0) want = 0;
                if (want >= 0 && (*e)[q] != want) rep.failures.push_back({j, k, q, (*e)[q]});
            }
        }
    rep.ok = rep.failures.empty() && rep.unverifiable.empty();
    return rep;
}

ValidationReport validate_strong_exceptional(const ExcCollection& c) {
    return validate_strong_exceptional(c.variety(), c.gens());
}

}  // namespace nefres
