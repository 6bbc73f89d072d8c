#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nefres/errors.hpp"
#include "nefres/geometry.hpp"

using namespace nefres;

namespace {

// Monomials of degree k in `vars` variables, by enumeration.
Int count_monomials(int vars, Int k) {
    if (k < 0) return 0;
    if (vars == 1) return 1;
    Int total = 0;
    for (Int first = 0; first <= k; ++first) total += count_monomials(vars - 1, k - first);
    return total;
}

// x(x-1)...(x-m+1)/m! for any integer x.
Int binom_poly(Int x, Int m) {
    Int num = 1, den = 1;
    for (Int i = 0; i < m; ++i) {
        num *= x - i;
        den *= i + 1;
    }
    return num / den;
}

std::vector<Variety> all_varieties() {
    std::vector<Variety> vs;
    for (int n = 1; n <= 6; ++n) vs.push_back(Variety::projective_space(n));
    for (int n = 2; n <= 6; ++n) vs.push_back(Variety::quadric(n));
    return vs;
}

}  // namespace

TEST_CASE("variety parsing and invariants") {
    CHECK(Variety::parse("P3") == Variety::projective_space(3));
    CHECK(Variety::parse("Q2").is_quadric_surface());
    CHECK(Variety::parse("Q2").picard_rank() == 2);
    CHECK(Variety::parse("Q5").picard_rank() == 1);
    CHECK(Variety::parse("Q4").name() == "Q4");
    CHECK_THROWS_AS(Variety::parse("Q1"), InvalidInput);
    CHECK_THROWS_AS(Variety::parse("P0"), InvalidInput);
    CHECK_THROWS_AS(Variety::parse("X3"), InvalidInput);
    CHECK_THROWS_AS(Variety::parse("P3x"), InvalidInput);
    CHECK_THROWS_AS(Variety::parse(""), InvalidInput);
}

TEST_CASE("pic class arithmetic and checks") {
    auto q2 = Variety::quadric(2);
    PicClass a(1, 0), b(0, 1);
    CHECK(a + b == PicClass(1, 1));
    CHECK(-(a - b) == PicClass(-1, 1));
    CHECK(Int{3} * a == PicClass(3, 0));
    CHECK(PicClass(1, 1).effective());
    CHECK_FALSE(PicClass(1, -1).effective());
    CHECK(PicClass(0, 1).dominated_by(PicClass(1, 1)));
    CHECK_FALSE(PicClass(2, 0).dominated_by(PicClass(1, 1)));
    CHECK_THROWS_AS(PicClass(1).check(q2), InvalidInput);
    CHECK_THROWS_AS(PicClass(1, 1).check(Variety::quadric(3)), InvalidInput);
    CHECK_THROWS_AS(PicClass(1) + PicClass(1, 1), InvalidInput);
    CHECK(PicClass::hyperplane(q2, 2) == PicClass(2, 2));
}

TEST_CASE("line cohomology examples") {
    CHECK(line_cohomology(Variety::projective_space(2), PicClass(0)) == CohomologyVector{1, 0, 0});
    CHECK(line_cohomology(Variety::quadric(3), PicClass(1)) == CohomologyVector{5, 0, 0, 0});
    CHECK(line_cohomology(Variety::quadric(2), PicClass(-1, 1)) == CohomologyVector{0, 0, 0});
    CHECK(line_cohomology(Variety::quadric(2), PicClass(-2, 1)) == CohomologyVector{0, 2, 0});
    CHECK(line_cohomology(Variety::projective_space(1), PicClass(-2)) == CohomologyVector{0, 1});
    CHECK_THROWS_AS(line_cohomology(Variety::quadric(2), PicClass(1)), InvalidInput);
}

TEST_CASE("projective space cohomology matches monomial counts") {
    for (int n = 1; n <= 6; ++n) {
        auto v = Variety::projective_space(n);
        for (Int k = -12; k <= 8; ++k) {
            auto h = line_cohomology(v, PicClass(k));
            REQUIRE(h.size() == static_cast<std::size_t>(n + 1));
            CHECK(h[0] == count_monomials(n + 1, k));
            CHECK(h[n] == count_monomials(n + 1, -k - n - 1));
            for (int q = 1; q < n; ++q) CHECK(h[q] == 0);
        }
    }
}

TEST_CASE("quadric sections are monomials modulo the quadric") {
    for (int n = 3; n <= 6; ++n) {
        auto v = Variety::quadric(n);
        for (Int k = 0; k <= 6; ++k)
            CHECK(line_cohomology(v, PicClass(k))[0] == count_monomials(n + 2, k) - count_monomials(n + 2, k - 2));
    }
}

TEST_CASE("quadric surface is P1 x P1") {
    auto q2 = Variety::quadric(2);
    auto p1 = [](Int k) { return CohomologyVector{count_monomials(2, k), count_monomials(2, -k - 2)}; };
    for (Int a = -5; a <= 5; ++a)
        for (Int b = -5; b <= 5; ++b) {
            auto x = p1(a), y = p1(b);
            CohomologyVector want{x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[1] * y[1]};
            CHECK(line_cohomology(q2, PicClass(a, b)) == want);
        }
}

TEST_CASE("Serre duality on every registered variety") {
    for (const auto& v : all_varieties()) {
        auto k = anticanonical_class(v);
        int n = v.dim();
        for (Int t = -2 * n - 2; t <= 2 * n + 2; ++t) {
            PicClass pt = PicClass::hyperplane(v, t);
            std::vector<PicClass> twists = {pt};
            if (v.is_quadric_surface()) twists = {PicClass(t, 0), PicClass(t, -1), PicClass(t, 2), PicClass(t, t + 1)};
            for (const auto& x : twists) {
                auto h = line_cohomology(v, x);
                auto d = line_cohomology(v, -k - x);
                for (int q = 0; q <= n; ++q) CHECK(h[q] == d[n - q]);
            }
        }
    }
}

TEST_CASE("intermediate vanishing on quadrics") {
    for (int n = 3; n <= 6; ++n) {
        auto v = Variety::quadric(n);
        for (Int t = -2 * n; t <= 2 * n; ++t) {
            auto h = line_cohomology(v, PicClass(t));
            for (int q = 1; q < n; ++q) CHECK(h[q] == 0);
        }
    }
}

TEST_CASE("Euler characteristic follows the Hilbert polynomial") {
    for (int n = 1; n <= 6; ++n)
        for (Int k = -15; k <= 10; ++k)
            CHECK(euler_characteristic(line_cohomology(Variety::projective_space(n), PicClass(k))) == binom_poly(k + n, n));
    for (int n = 2; n <= 6; ++n)
        for (Int k = -15; k <= 10; ++k) {
            Int chi = binom_poly(k + n + 1, n + 1) - binom_poly(k + n - 1, n + 1);
            CHECK(euler_characteristic(line_cohomology(Variety::quadric(n), PicClass::hyperplane(Variety::quadric(n), k))) == chi);
        }
}

TEST_CASE("Riemann-Roch on surfaces") {
    auto p2 = Variety::projective_space(2), q2 = Variety::quadric(2);
    CHECK(euler_char_surface(p2, {2, PicClass(2), {4}}) == 3);
    CHECK(euler_char_surface(q2, {2, PicClass(1, 1), {2}}) == 3);
    CHECK(euler_char_surface(p2, {1, PicClass(0), {0}}) == 1);
    for (Int t = -10; t <= 10; ++t)
        CHECK(euler_char_surface(p2, {1, PicClass(t), {0}}) == euler_characteristic(line_cohomology(p2, PicClass(t))));
    // split bundles: chi is additive and c2 is the product of the summands
    for (Int a = -4; a <= 4; ++a)
        for (Int b = -4; b <= 4; ++b) {
            Int chi = euler_characteristic(line_cohomology(p2, PicClass(a))) +
                      euler_characteristic(line_cohomology(p2, PicClass(b)));
            CHECK(euler_char_surface(p2, {2, PicClass(a + b), {a * b}}) == chi);
            PicClass x(a, b), y(b, -a);
            Int c2 = intersect(q2, x, y);
            Int chi_q = euler_characteristic(line_cohomology(q2, x)) + euler_characteristic(line_cohomology(q2, y));
            CHECK(euler_char_surface(q2, {2, x + y, {c2}}) == chi_q);
        }
    CHECK_THROWS_AS(euler_char_surface(Variety::projective_space(3), {1, PicClass(0), {0}}), InvalidInput);
    CHECK_THROWS_AS(euler_char_surface(p2, {1, PicClass(0), {}}), InvalidInput);
}

TEST_CASE("top Segre degree") {
    auto p2 = Variety::projective_space(2), q2 = Variety::quadric(2);
    CHECK(segre_top(p2, {2, PicClass(2), {4}}) == 0);
    CHECK(segre_top(p2, {3, PicClass(0), {0}}) == 0);
    // c1^3 - 2 c1 c2 + c3 = -1
    CHECK(segre_top(Variety::projective_space(3), {2, PicClass(1), {1, 0}}) == -1);
    for (Int c1 = 0; c1 <= 4; ++c1)
        for (Int c2 = -3; c2 <= 8; ++c2) CHECK(segre_top(p2, {2, PicClass(c1), {c2}}) == c1 * c1 - c2);
    for (Int a = 0; a <= 3; ++a)
        for (Int b = 0; b <= 3; ++b)
            for (Int c2 = 0; c2 <= 6; ++c2) CHECK(segre_top(q2, {2, PicClass(a, b), {c2}}) == 2 * a * b - c2);
    // O(1)^r on P^n: s(E) = (1+h)^{-r}, s_n = (-1)^n C(-r, n) = C(r+n-1, n)
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 4; ++r) {
            std::vector<Int> higher;
            for (int k = 2; k <= n; ++k) higher.push_back(binom_poly(r, k));
            CHECK(segre_top(Variety::projective_space(n), {r, PicClass(r), higher}) == binom_poly(r + n - 1, n));
        }
    CHECK_THROWS_AS(segre_top(Variety::projective_space(3), {2, PicClass(1), {1}}), InvalidInput);
}

TEST_CASE("anticanonical classes") {
    CHECK(anticanonical_class(Variety::projective_space(3)) == PicClass(4));
    CHECK(anticanonical_class(Variety::quadric(4)) == PicClass(4));
    CHECK(anticanonical_class(Variety::quadric(2)) == PicClass(2, 2));
}
