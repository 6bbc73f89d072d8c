#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nefres/collections.hpp"
#include "nefres/errors.hpp"

using namespace nefres;

namespace {

Int count_monomials(int vars, Int k) {
    if (k < 0) return 0;
    if (vars == 1) return 1;
    Int total = 0;
    for (Int first = 0; first <= k; ++first) total += count_monomials(vars - 1, k - first);
    return total;
}

std::vector<Variety> all_varieties() {
    std::vector<Variety> vs;
    for (int n = 1; n <= 6; ++n) vs.push_back(Variety::projective_space(n));
    for (int n = 2; n <= 6; ++n) vs.push_back(Variety::quadric(n));
    return vs;
}

BundleSym L(Int k) { return BundleSym::line(PicClass(k)); }
BundleSym L2(Int a, Int b) { return BundleSym::line(PicClass(a, b)); }

}  // namespace

TEST_CASE("standard collections") {
    auto p3 = standard_collection(Variety::projective_space(3));
    CHECK(p3.gens() == std::vector<BundleSym>{L(0), L(1), L(2), L(3)});
    auto q3 = standard_collection(Variety::quadric(3));
    CHECK(q3.gens() == std::vector<BundleSym>{L(0), BundleSym::spinor(Flavor::Spinor), L(1), L(2)});
    auto q4 = standard_collection(Variety::quadric(4));
    CHECK(q4.size() == 6);
    CHECK(q4.gens()[1].flavor == Flavor::SpinorPlus);
    CHECK(q4.gens()[2].flavor == Flavor::SpinorMinus);
    auto q2 = standard_collection(Variety::quadric(2));
    CHECK(q2.gens() == std::vector<BundleSym>{L2(0, 0), L2(1, 0), L2(0, 1), L2(1, 1)});
}

TEST_CASE("hom matrices are unit upper triangular") {
    for (const auto& v : all_varieties()) {
        auto c = standard_collection(v);
        for (int j = 0; j <= c.m(); ++j)
            for (int k = 0; k <= c.m(); ++k) {
                if (j == k) CHECK(c.hom_dim(j, k) == 1);
                if (k < j) CHECK(c.hom_dim(j, k) == 0);
            }
    }
}

TEST_CASE("projective space hom matrix counts monomials") {
    for (int n = 1; n <= 6; ++n) {
        auto c = standard_collection(Variety::projective_space(n));
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) CHECK(c.hom_dim(j, k) == count_monomials(n + 1, k - j));
        CHECK(c.hom_dim(0, 1) == n + 1);
    }
}

TEST_CASE("quadric surface hom matrix") {
    auto c = standard_collection(Variety::quadric(2));
    std::vector<std::vector<Int>> want = {{1, 2, 2, 4}, {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}};
    CHECK(c.hom() == want);
}

TEST_CASE("spinor hom entries") {
    CHECK(standard_collection(Variety::quadric(5)).hom_dim(0, 1) == 8);
    CHECK(standard_collection(Variety::quadric(4)).hom_dim(1, 2) == 0);
    CHECK(standard_collection(Variety::quadric(4)).hom_dim(2, 1) == 0);
    CHECK(standard_collection(Variety::quadric(3)).hom_dim(1, 2) == 4);
    CHECK(standard_collection(Variety::quadric(3)).hom()[1] == std::vector<Int>{0, 1, 4, 16});
    for (int n = 3; n <= 6; ++n) {
        auto v = Variety::quadric(n);
        auto c = standard_collection(v);
        CHECK(c.hom_dim(0, 1) == spinor_sections(v));
        // Hom(S, O(1)) = H^0(S^v(1)) = H^0(S') for the dual flavor
        CHECK(c.hom_dim(1, v.is_odd_quadric() ? 2 : 3) == spinor_sections(v));
    }
    CHECK_THROWS_AS(standard_collection(Variety::quadric(3)).hom_dim(0, 4), InvalidInput);
    CHECK_THROWS_AS(standard_collection(Variety::quadric(3)).hom_dim(-1, 0), InvalidInput);
}

TEST_CASE("spinor ranks, determinants and sections") {
    for (int n = 3; n <= 8; ++n) {
        auto v = Variety::quadric(n);
        int s = (n - 1) / 2;
        Flavor f = v.is_odd_quadric() ? Flavor::Spinor : Flavor::SpinorPlus;
        auto b = BundleSym::spinor(f);
        CHECK(b.rank(v) == (Int{1} << s));
        CHECK(b.c1(v) == PicClass(Int{1} << (s - 1)));
        CHECK(b.twisted(PicClass(2)).c1(v) == PicClass((Int{1} << (s - 1)) + 2 * (Int{1} << s)));
        CHECK(spinor_twisted_sections(v, f, 0) == (Int{2} << s));
        CHECK(spinor_twisted_sections(v, f, -1) == 0);
        CHECK_THROWS_AS(spinor_twisted_sections(v, f, -2), InvalidInput);
    }
    auto q3 = Variety::quadric(3);
    CHECK(spinor_twisted_sections(q3, Flavor::Spinor, 0) == 4);
    CHECK(spinor_twisted_sections(q3, Flavor::Spinor, 1) == 16);
    CHECK(spinor_twisted_sections(q3, Flavor::Spinor, 2) == 4 * 14 - 16);
}

TEST_CASE("spinor flavors are checked against the variety") {
    CHECK_THROWS_AS(BundleSym::spinor(Flavor::Spinor).check(Variety::projective_space(3)), InvalidInput);
    CHECK_THROWS_AS(BundleSym::spinor(Flavor::Spinor).check(Variety::quadric(4)), InvalidInput);
    CHECK_THROWS_AS(BundleSym::spinor(Flavor::SpinorPlus).check(Variety::quadric(3)), InvalidInput);
    CHECK_THROWS_AS(BundleSym::spinor(Flavor::SpinorPlus).check(Variety::quadric(2)), InvalidInput);
    CHECK_NOTHROW(BundleSym::spinor(Flavor::SpinorMinus).check(Variety::quadric(6)));
    CHECK(parse_flavor("spinor-") == Flavor::SpinorMinus);
    CHECK_THROWS_AS(parse_flavor("twistor"), InvalidInput);
}

TEST_CASE("dual spinor parity") {
    CHECK(dual_spinor(Variety::quadric(3), Flavor::Spinor) == Flavor::Spinor);
    CHECK(dual_spinor(Variety::quadric(4), Flavor::SpinorPlus) == Flavor::SpinorPlus);  // s = 1
    CHECK(dual_spinor(Variety::quadric(6), Flavor::SpinorPlus) == Flavor::SpinorMinus);  // s = 2
    CHECK(dual_spinor(Variety::quadric(8), Flavor::SpinorMinus) == Flavor::SpinorMinus);  // s = 3
}

TEST_CASE("spinor Ext fixtures") {
    for (int n : {3, 5, 7}) {
        auto v = Variety::quadric(n);
        auto S = BundleSym::spinor(Flavor::Spinor);
        auto e = ext_dims(v, S.twisted(PicClass(1)), S);
        REQUIRE(e);
        std::vector<Int> want(n + 1, 0);
        want[1] = 1;
        CHECK(*e == want);
        CHECK(ext_justification(v, S.twisted(PicClass(1)), S) != "unverifiable");
    }
    for (int n : {4, 6}) {
        auto v = Variety::quadric(n);
        auto P = BundleSym::spinor(Flavor::SpinorPlus), M = BundleSym::spinor(Flavor::SpinorMinus);
        auto pm = ext_dims(v, P.twisted(PicClass(1)), M);
        auto pp = ext_dims(v, P.twisted(PicClass(1)), P);
        REQUIRE(pm);
        REQUIRE(pp);
        std::vector<Int> one(n + 1, 0), zero(n + 1, 0);
        one[1] = 1;
        CHECK(*pm == one);
        CHECK(*pp == zero);
        CHECK(*ext_dims(v, P, M) == zero);
    }
    auto q3 = Variety::quadric(3);
    auto S = BundleSym::spinor(Flavor::Spinor);
    CHECK_FALSE(ext_dims(q3, S.twisted(PicClass(3)), S).has_value());
    CHECK(ext_justification(q3, S.twisted(PicClass(3)), S) == "unverifiable");
    CHECK_FALSE(ext_dims(q3, L(0), S.twisted(PicClass(-5))).has_value());
}

TEST_CASE("validator") {
    for (const auto& v : all_varieties()) CHECK(validate_strong_exceptional(standard_collection(v)).ok);

    auto p1 = Variety::projective_space(1);
    auto bad = validate_strong_exceptional(p1, {L(0), L(2)});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0] == ExtFailure{1, 0, 1, 1});

    // H^*(O(-1,-1)) = 0 by Kunneth since P1 has no cohomology in degree -1.
    auto q2 = Variety::quadric(2);
    CHECK(line_cohomology(q2, PicClass(-1, -1)) == CohomologyVector{0, 0, 0});
    CHECK(validate_strong_exceptional(q2, {L2(0, 0), L2(1, 1)}).ok);
    auto rulings = validate_strong_exceptional(q2, {L2(0, 0), L2(2, 0)});
    CHECK_FALSE(rulings.ok);
    CHECK(rulings.failures == std::vector<ExtFailure>{{1, 0, 1, 1}});

    auto reversed = validate_strong_exceptional(Variety::projective_space(2), {L(1), L(0)});
    CHECK_FALSE(reversed.ok);
    CHECK(reversed.failures[0] == ExtFailure{1, 0, 0, 3});

    auto q3 = Variety::quadric(3);
    auto S = BundleSym::spinor(Flavor::Spinor);
    auto unknown = validate_strong_exceptional(q3, {S, S.twisted(PicClass(3))});
    CHECK_FALSE(unknown.ok);
    CHECK_FALSE(unknown.unverifiable.empty());
}

TEST_CASE("twisting collections") {
    auto p2 = standard_collection(Variety::projective_space(2));
    auto t = twist_collection(p2, PicClass(1));
    CHECK(t.gens() == std::vector<BundleSym>{L(-1), L(0), L(1)});
    auto q2 = standard_collection(Variety::quadric(2));
    CHECK(twist_collection(q2, PicClass(1, 0)).gens() == std::vector<BundleSym>{L2(-1, 0), L2(0, 0), L2(-1, 1), L2(0, 1)});
    for (const auto& v : all_varieties()) {
        auto c = standard_collection(v);
        for (Int k = -5; k <= 5; ++k) {
            if (v.is_quadric_surface()) {
                CHECK(twist_collection(c, PicClass(k, -k)).hom() == c.hom());
                CHECK(twist_collection(c, PicClass(k, 0)).hom() == c.hom());
            } else {
                CHECK(twist_collection(c, PicClass(k)).hom() == c.hom());
            }
        }
    }
}
