#include "nefres/geometry.hpp"

#include <charconv>
#include <sstream>

#include "nefres/errors.hpp"

namespace nefres {

Variety Variety::projective_space(int n) {
    if (n < 1) throw InvalidInput("projective space needs dimension >= 1, got " + std::to_string(n));
    return Variety(VarietyKind::ProjSpace, n);
}

Variety Variety::quadric(int n) {
    if (n < 2) throw InvalidInput("quadric needs dimension >= 2, got " + std::to_string(n));
    return Variety(VarietyKind::Quadric, n);
}

Variety Variety::parse(std::string_view spec) {
    if (spec.size() < 2) throw InvalidInput("bad variety '" + std::string(spec) + "'");
    char kind = spec[0];
    int n = 0;
    auto digits = spec.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw InvalidInput("bad variety '" + std::string(spec) + "'");
    if (kind == 'P' || kind == 'p') return projective_space(n);
    if (kind == 'Q' || kind == 'q') return quadric(n);
    throw InvalidInput("bad variety '" + std::string(spec) + "', expected P<n> or Q<n>");
}

std::string Variety::name() const {
    return (is_quadric() ? "Q" : "P") + std::to_string(dim_);
}

PicClass PicClass::zero(const Variety& v) {
    return v.picard_rank() == 2 ? PicClass(0, 0) : PicClass(0);
}

PicClass PicClass::hyperplane(const Variety& v, Int k) {
    return v.picard_rank() == 2 ? PicClass(k, k) : PicClass(k);
}

Int PicClass::degree() const {
    if (coords_.size() != 1) throw InvalidInput("class " + str() + " has no single degree");
    return coords_[0];
}

bool PicClass::is_zero() const {
    for (Int c : coords_)
        if (c != 0) return false;
    return true;
}

bool PicClass::effective() const {
    for (Int c : coords_)
        if (c < 0) return false;
    return true;
}

bool PicClass::dominated_by(const PicClass& other) const {
    if (size() != other.size()) throw InvalidInput("Picard rank mismatch: " + str() + " vs " + other.str());
    for (std::size_t i = 0; i < size(); ++i)
        if (coords_[i] > other.coords_[i]) return false;
    return true;
}

void PicClass::check(const Variety& v) const {
    if (static_cast<int>(coords_.size()) != v.picard_rank())
        throw InvalidInput("class " + str() + " does not live on " + v.name());
}

PicClass PicClass::operator-() const {
    PicClass r = *this;
    for (Int& c : r.coords_) c = -c;
    return r;
}

PicClass& PicClass::operator+=(const PicClass& o) {
    if (size() != o.size()) throw InvalidInput("Picard rank mismatch: " + str() + " vs " + o.str());
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

PicClass& PicClass::operator-=(const PicClass& o) {
    return *this += -o;
}

PicClass operator*(Int k, PicClass a) {
    for (Int& c : a.coords_) c *= k;
    return a;
}

std::string PicClass::str() const {
    if (coords_.size() == 1) return std::to_string(coords_[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ')';
    return os.str();
}

Int intersect(const Variety& v, const PicClass& x, const PicClass& y) {
    x.check(v);
    y.check(v);
    if (v.is_quadric_surface()) return x[0] * y[1] + x[1] * y[0];
    if (v.dim() != 2) throw InvalidInput("intersection of divisors needs a surface, got " + v.name());
    return x[0] * y[0] * v.top_degree();
}

Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// Bott values on P^n.
CohomologyVector proj_line(int n, Int k) {
    CohomologyVector h(n + 1, 0);
    if (k >= 0) h[0] = binomial(n + k, n);
    if (k <= -n - 1) h[n] = binomial(-k - 1, n);
    return h;
}

CohomologyVector quadric_line(int n, Int k) {
    // 0 -> O_P(k-2) -> O_P(k) -> O_Q(k) -> 0 on P^{n+1}; the maps have maximal rank.
    auto a = proj_line(n + 1, k - 2);
    auto b = proj_line(n + 1, k);
    CohomologyVector h(n + 1, 0);
    for (int q = 0; q <= n; ++q) {
        Int coker = b[q] - std::min(a[q], b[q]);
        Int ker = a[q + 1] - std::min(a[q + 1], b[q + 1]);
        h[q] = coker + ker;
    }
    return h;
}

}  // namespace

CohomologyVector line_cohomology(const Variety& v, const PicClass& t) {
    t.check(v);
    if (v.is_projective_space()) return proj_line(v.dim(), t[0]);
    if (!v.is_quadric_surface()) return quadric_line(v.dim(), t[0]);
    auto x = proj_line(1, t[0]);
    auto y = proj_line(1, t[1]);
    CohomologyVector h(3, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h[i + j] += x[i] * y[j];
    return h;
}

Int euler_characteristic(const CohomologyVector& h) {
    Int chi = 0;
    for (std::size_t q = 0; q < h.size(); ++q) chi += (q % 2 ? -1 : 1) * h[q];
    return chi;
}

std::optional<Int> ChernData::c2() const {
    if (higher.empty()) return std::nullopt;
    return higher[0];
}

Int euler_char_surface(const Variety& v, const ChernData& cd) {
    if (!v.is_surface()) throw InvalidInput("Riemann-Roch here is for P2 and Q2, got " + v.name());
    cd.c1.check(v);
    auto c2 = cd.c2();
    if (!c2) throw InvalidInput("Riemann-Roch on a surface needs c2");
    if (v.is_quadric_surface()) {
        Int a = cd.c1[0], b = cd.c1[1];
        return a * b - *c2 + a + b + cd.rank;
    }
    Int d = cd.c1[0];
    return cd.rank + d * (d + 3) / 2 - *c2;
}

Int segre_top(const Variety& v, const ChernData& cd) {
    cd.c1.check(v);
    int n = v.dim();
    if (static_cast<int>(cd.higher.size()) < n - 1)
        throw InvalidInput("top Segre class on " + v.name() + " needs c1..c" + std::to_string(n));
    if (v.is_quadric_surface()) return intersect(v, cd.c1, cd.c1) - cd.higher[0];

    // c_k as coefficients of h^k; invert 1 + c_1 + ... + c_n term by term.
    std::vector<Int> c(n + 1, 0);
    c[0] = 1;
    c[1] = cd.c1[0];
    for (int k = 2; k <= n; ++k) c[k] = cd.higher[k - 2];
    std::vector<Int> inv(n + 1, 0);
    inv[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Int s = 0;
        for (int i = 1; i <= k; ++i) s -= c[i] * inv[k - i];
        inv[k] = s;
    }
    Int sn = (n % 2 ? -1 : 1) * inv[n];
    return sn * v.top_degree();
}

PicClass anticanonical_class(const Variety& v) {
    if (v.is_quadric_surface()) return PicClass(2, 2);
    if (v.is_projective_space()) return PicClass(v.dim() + 1);
    return PicClass(v.dim());
}

}  // namespace nefres
