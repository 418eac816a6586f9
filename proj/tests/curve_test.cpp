#include <catch2/catch_amalgamated.hpp>

#include "dik/curve.hpp"
#include "dik/doubling.hpp"
#include "dik/tripling.hpp"

using namespace dik;

TEST_CASE("discriminant examples") {
    auto f5 = FieldSpec::make(5, 1);
    CubicCurve c{f5->zero(), f5->one(), f5->zero()};  // y^2 = x^3 + x
    CHECK(discriminant(c) == f5->from_int(-64));
    CHECK(discriminant(c) == f5->one());

    CubicCurve cusp{f5->zero(), f5->zero(), f5->zero()};
    CHECK(discriminant(cusp).is_zero());

    auto f7 = FieldSpec::make(7, 1);
    CHECK(!discriminant(doubling::d_curve(f7->from_int(2))).is_zero());
}

TEST_CASE("j-invariant examples") {
    auto f7 = FieldSpec::make(7, 1);
    CubicCurve j0{f7->zero(), f7->zero(), f7->one()};
    CHECK(j_invariant(j0).is_zero());
    CubicCurve j1728{f7->zero(), f7->one(), f7->zero()};
    CHECK(j_invariant(j1728) == f7->from_int(1728));
    CHECK(j_invariant(tripling::t_curve(f7->one())) == f7->from_int(2));

    CubicCurve cusp{f7->zero(), f7->zero(), f7->zero()};
    CHECK_THROWS(j_invariant(cusp));
}

TEST_CASE("to_short preserves j and matches the family short form") {
    auto f7 = FieldSpec::make(7, 1);
    CubicCurve c{f7->zero(), f7->from_int(3), f7->from_int(5)};
    ShortW s = to_short(c);
    CHECK(s.a == c.a4);
    CHECK(s.b == c.a6);

    FieldElem u = f7->one();
    ShortW via_curve = to_short(tripling::t_curve(u));
    ShortW via_formula = tripling::t_short(u);
    CHECK(via_curve.a == via_formula.a);
    CHECK(via_curve.b == via_formula.b);

    auto f27 = FieldSpec::make(3, 3);
    CubicCurve c3{f27->one(), f27->one(), f27->one()};
    CHECK_THROWS(to_short(c3));
}

TEST_CASE("isomorphic_fq examples") {
    auto f5 = FieldSpec::make(5, 1);
    CubicCurve c{f5->from_int(2), f5->one(), f5->from_int(3)};
    auto self = isomorphic_fq(c, c);
    REQUIRE(self);
    CHECK(self->alpha == f5->one());
    CHECK(self->r == f5->zero());

    // short (1, 0) vs (4, 0): fourth powers mod 5 are {1}
    CubicCurve s1{f5->zero(), f5->one(), f5->zero()};
    CubicCurve s4{f5->zero(), f5->from_int(4), f5->zero()};
    CHECK(!isomorphic_fq(s1, s4));

    auto w = isomorphic_fq(tripling::t_curve(f5->from_int(3)), tripling::t_curve(f5->from_int(4)));
    CHECK(w);
}

TEST_CASE("isomorphic_fqbar examples") {
    auto f11 = FieldSpec::make(11, 1);
    CHECK(isomorphic_fqbar(tripling::t_curve(f11->one()), tripling::t_curve(f11->from_int(7))));
    auto f7 = FieldSpec::make(7, 1);
    CHECK(!isomorphic_fqbar(doubling::d_curve(f7->from_int(2)), doubling::d_curve(f7->from_int(3))));
}

TEST_CASE("brute force oracle") {
    auto f5 = FieldSpec::make(5, 1);
    CubicCurve c{f5->from_int(1), f5->from_int(2), f5->one()};
    auto w = brute_force_iso(c, c);
    REQUIRE(w);
    CHECK(w->alpha == f5->one());
    CHECK(w->r == f5->zero());

    CubicCurve s1{f5->zero(), f5->one(), f5->zero()};
    CubicCurve s4{f5->zero(), f5->from_int(4), f5->zero()};
    CHECK(!brute_force_iso(s1, s4));
}

TEST_CASE("structured test agrees with brute force on family pairs, small q") {
    for (uint64_t q : {5u, 7u, 9u, 11u, 13u}) {
        auto pk = q == 9 ? std::pair<uint64_t, int>{3, 2} : std::pair<uint64_t, int>{q, 1};
        auto F = FieldSpec::make(pk.first, pk.second);
        std::vector<CubicCurve> curves;
        for (uint64_t i = 0; i < F->q; ++i) {
            FieldElem u = F->from_index(i);
            if (doubling::admissible(u)) curves.push_back(doubling::d_curve(u));
            if (F->p >= 5 && tripling::admissible(u)) curves.push_back(tripling::t_curve(u));
        }
        for (const auto& c1 : curves)
            for (const auto& c2 : curves) {
                auto fast = isomorphic_fq(c1, c2);
                auto slow = brute_force_iso(c1, c2);
                CHECK(fast.has_value() == slow.has_value());
                if (fast) CHECK(detail::witness_ok(c1, c2, fast->alpha, fast->r));
                if (slow) CHECK(detail::witness_ok(c1, c2, slow->alpha, slow->r));
            }
    }
}

TEST_CASE("isomorphic_fq is an equivalence relation on family curves") {
    auto F = FieldSpec::make(13, 1);
    std::vector<CubicCurve> curves;
    for (uint64_t i = 0; i < F->q; ++i) {
        FieldElem u = F->from_index(i);
        if (tripling::admissible(u)) curves.push_back(tripling::t_curve(u));
    }
    size_t n = curves.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            rel[i][j] = isomorphic_fq(curves[i], curves[j]).has_value();
    for (size_t i = 0; i < n; ++i) {
        CHECK(rel[i][i]);
        for (size_t j = 0; j < n; ++j) {
            CHECK(rel[i][j] == rel[j][i]);
            for (size_t l = 0; l < n; ++l)
                if (rel[i][j] && rel[j][l]) CHECK(rel[i][l]);
        }
    }
}

TEST_CASE("point_count examples and Hasse bound") {
    auto f5 = FieldSpec::make(5, 1);
    // L: y^2 = x(x+1)(x+3/4)
    FieldElem tq5 = f5->from_ratio(3, 4);
    CubicCurve L5{f5->one() + tq5, tq5, f5->zero()};
    CHECK(point_count(L5) == 8);

    auto f7 = FieldSpec::make(7, 1);
    FieldElem tq7 = f7->from_ratio(3, 4);
    CubicCurve L7{f7->one() + tq7, tq7, f7->zero()};
    CHECK(point_count(L7) == 8);

    for (uint64_t q : {5u, 7u, 11u, 13u, 25u}) {
        auto pk = q == 25 ? std::pair<uint64_t, int>{5, 2} : std::pair<uint64_t, int>{q, 1};
        auto F = FieldSpec::make(pk.first, pk.second);
        for (uint64_t i = 0; i < F->q; ++i) {
            FieldElem u = F->from_index(i);
            if (!tripling::admissible(u)) continue;
            double n = static_cast<double>(point_count(tripling::t_curve(u)));
            CHECK(std::abs(n - static_cast<double>(F->q + 1)) <=
                  2.0 * std::sqrt(static_cast<double>(F->q)));
        }
    }
}

TEST_CASE("quadratic twist") {
    auto f7 = FieldSpec::make(7, 1);
    FieldElem d = f7->from_int(3);
    REQUIRE(f7->chi2(d) == -1);
    CubicCurve c{f7->from_int(3), f7->from_int(6), f7->zero()};  // doubling u = 3, j = 4
    REQUIRE(j_invariant(c) != f7->zero());
    REQUIRE(j_invariant(c) != f7->from_int(1728));
    CubicCurve t = quadratic_twist(c, d);
    CHECK(j_invariant(t) == j_invariant(c));
    CHECK(!isomorphic_fq(c, t));
    CHECK(!brute_force_iso(c, t));
    CubicCurve tt = quadratic_twist(quadratic_twist(c, d), d);
    CHECK(isomorphic_fq(c, tt));

    // j = 1728: twisting by a nonsquare can still give an isomorphic curve.
    // (1, 0) twisted by 3 gives (2, 0), and 2 = 2^4 is a fourth power mod 7.
    CubicCurve s1{f7->zero(), f7->one(), f7->zero()};
    CubicCurve s2 = quadratic_twist(s1, d);
    CHECK(s2.a4 == f7->from_int(2));
    CHECK(isomorphic_fq(s1, s2).has_value());
    CHECK(brute_force_iso(s1, s2).has_value());

    // over F_5 every fourth power is 1, so the same twist is not isomorphic
    auto f5 = FieldSpec::make(5, 1);
    CubicCurve r1{f5->zero(), f5->one(), f5->zero()};
    CubicCurve r2 = quadratic_twist(r1, f5->from_int(2));
    CHECK(r2.a4 == f5->from_int(4));
    CHECK(!isomorphic_fq(r1, r2));

    CHECK_THROWS(quadratic_twist(c, f7->from_int(2)));  // 2 = 3^2 mod 7
}

TEST_CASE("char-3 isomorphism test against brute force") {
    for (auto [p, k] : std::vector<std::pair<uint64_t, int>>{{3, 1}, {3, 2}, {3, 3}}) {
        auto F = FieldSpec::make(p, k);
        for (uint64_t i = 0; i < F->q; ++i) {
            FieldElem u = F->from_index(i);
            if (!doubling::admissible(u)) continue;
            for (uint64_t j = 0; j < F->q; ++j) {
                FieldElem v = F->from_index(j);
                if (!doubling::admissible(v)) continue;
                CubicCurve cu = doubling::d_curve(u), cv = doubling::d_curve(v);
                auto fast = isomorphic_fq(cu, cv);
                auto slow = brute_force_iso(cu, cv);
                CHECK(fast.has_value() == slow.has_value());
                if (fast) CHECK(detail::witness_ok(cu, cv, fast->alpha, fast->r));
            }
        }
    }
}
