#include <catch2/catch_amalgamated.hpp>

#include "dik/census.hpp"
#include "dik/doubling.hpp"

using namespace dik;
using namespace dik::doubling;

namespace {
FieldPtr make_q(uint64_t q) {
    auto pk = prime_power(q);
    return FieldSpec::make(pk->first, pk->second);
}
}  // namespace

TEST_CASE("d_curve coefficients and exclusions") {
    auto f5 = FieldSpec::make(5, 1);
    CHECK_THROWS(d_curve(f5->from_int(4)));  // 64 = 4 mod 5
    auto f3 = FieldSpec::make(3, 1);
    CHECK_THROWS(d_curve(f3->one()));  // 64 = 1 mod 3
    auto f7 = FieldSpec::make(7, 1);
    CubicCurve c = d_curve(f7->from_int(2));
    CHECK(c.a2 == f7->from_int(2));
    CHECK(c.a4 == f7->from_int(4));
    CHECK(c.a6.is_zero());
    CHECK(!discriminant(c).is_zero());
}

TEST_CASE("d_j examples and agreement with the curve j-invariant") {
    auto f5 = FieldSpec::make(5, 1);
    CHECK(d_j(f5->from_int(3)).is_zero());  // 48 = 3 mod 5
    auto f7 = FieldSpec::make(7, 1);
    CHECK(d_j(f7->from_int(2)) == f7->from_int(6));

    for (uint64_t q : {3u, 5u, 7u, 9u, 11u, 27u, 25u, 81u}) {
        auto F = make_q(q);
        for (uint64_t i = 0; i < F->q; ++i) {
            FieldElem u = F->from_index(i);
            if (!admissible(u)) continue;
            CHECK(d_j(u) == j_invariant(d_curve(u)));
        }
    }
}

TEST_CASE("g_u specials") {
    auto f97 = FieldSpec::make(97, 1);
    // g_48(V) = -16 (V - 48)^2
    Quadratic g48 = g_u_poly(f97->from_int(48));
    CHECK(g48.lead == f97->from_int(-16));
    CHECK(g48.lin == f97->from_int(-16 * -96));
    CHECK(g48.cst == f97->from_int(-16) * f97->from_int(48) * f97->from_int(48));
    CHECK(d_delta(f97->from_int(48)).is_zero());
    // g_72(V) = 8 (V - 72) V
    Quadratic g72 = g_u_poly(f97->from_int(72));
    CHECK(g72.lead == f97->from_int(8));
    CHECK(g72.lin == f97->from_int(8 * -72));
    CHECK(g72.cst.is_zero());
}

TEST_CASE("d_jbar_class examples") {
    auto f97 = FieldSpec::make(97, 1);
    auto j48 = d_jbar_class(f97->from_int(48));
    REQUIRE(j48.size() == 1);
    CHECK(j48[0] == f97->from_int(48));
    auto j72 = d_jbar_class(f97->from_int(72));
    REQUIRE(j72.size() == 1);
    CHECK(j72[0] == f97->from_int(72));

    auto f7 = FieldSpec::make(7, 1);
    for (uint64_t i = 1; i < 7; ++i) {
        FieldElem u = f7->from_index(i);
        if (!admissible(u)) continue;
        CHECK(d_jbar_class(u).size() == 1);  // all five j-values distinct mod 7
    }

    // class membership agrees with j-equality
    for (uint64_t q : {9u, 11u, 13u, 27u, 25u}) {
        auto F = make_q(q);
        for (uint64_t i = 0; i < F->q; ++i) {
            FieldElem u = F->from_index(i);
            if (!admissible(u)) continue;
            auto cls = d_jbar_class(u);
            CHECK((cls.size() == 1 || cls.size() == 3));
            for (const FieldElem& v : cls) CHECK(d_j(v) == d_j(u));
            size_t same_j = 0;
            for (uint64_t j = 0; j < F->q; ++j) {
                FieldElem v = F->from_index(j);
                if (admissible(v) && d_j(v) == d_j(u)) ++same_j;
            }
            CHECK(same_j == cls.size());
        }
    }
}

TEST_CASE("c3 and c1") {
    CHECK(c3_formula(*make_q(7)) == 0);
    CHECK(c3_formula(*make_q(9)) == 1);
    CHECK(c3_formula(*make_q(13)) == 1);
    CHECK(c1_formula(*make_q(13)) == 8);
}

TEST_CASE("d_count_jbar_formula examples") {
    CHECK(d_count_jbar_formula(*make_q(5)) == 3);
    CHECK(d_count_jbar_formula(*make_q(7)) == 5);
    CHECK(d_count_jbar_formula(*make_q(9)) == 5);
}

TEST_CASE("lemma_alpha_pair examples") {
    auto f11 = FieldSpec::make(11, 1);
    auto sol = lemma_alpha_pair(f11->from_int(2));
    REQUIRE(sol);
    CHECK(sol->a_squared == f11->from_int(5));
    CHECK(sol->u == f11->one());
    CHECK(sol->v == f11->from_int(8));
    CHECK(sol->fq_isomorphic);
    CHECK(d_j(sol->u) == f11->from_int(2));
    CHECK(d_j(sol->v) == f11->from_int(2));
    CHECK(brute_force_iso(d_curve(sol->u), d_curve(sol->v)));

    CHECK_THROWS(lemma_alpha_pair(f11->from_int(-24)));
    CHECK_THROWS(lemma_alpha_pair(f11->zero()));
}

TEST_CASE("lemma alpha equivalence, small q") {
    for (uint64_t q : {5u, 7u, 9u, 11u, 13u, 27u}) {
        CHECK(lemma_alpha_discrepancies(*make_q(q)) == 0);
    }
}

TEST_CASE("gamma and exceptional counts") {
    CHECK(gamma_affine_count(*make_q(5)) == 7);
    CHECK(gamma_affine_count(*make_q(3)) == 3);
    CHECK(gamma_affine_count(*make_q(7)) == 7);

    CHECK(exceptional_count(*make_q(5)) == 7);
    CHECK(exceptional_count(*make_q(9)) == 5);
    CHECK(exceptional_count(*make_q(11)) == 3);
}

TEST_CASE("n_q examples") {
    CHECK(n_q_direct(*make_q(5)) == 0);
    CHECK(n_q_closed(*make_q(5)) == 0);
    CHECK(n_q_closed(*make_q(9)) == 4);
    CHECK(n_q_direct(*make_q(9)) == 4);
    CHECK(n_q_closed(*make_q(27)) == 24);
    CHECK(n_q_direct(*make_q(27)) == 24);
}

TEST_CASE("nbar examples") {
    CHECK(nbar(*make_q(9)) == 12);
    CHECK(nbar(*make_q(7)) == 0);
    CHECK(nbar(*make_q(27)) == 48);
}

TEST_CASE("d_count_fq_formula examples") {
    CHECK(d_count_fq_formula(*make_q(5)) == 3);
    CHECK(d_count_fq_formula(*make_q(9)) == 6);
    CHECK(d_count_fq_formula(*make_q(27)) == 20);
}

TEST_CASE("n_q brute agreement and the multiplicity rule, small q") {
    for (uint64_t q : {5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
        auto F = make_q(q);
        CensusReport rep = brute_census(Family::Doubling, F);
        uint64_t brute = n_q_brute(rep);
        CHECK(brute == n_q_direct(*F));
        CHECK(brute == n_q_closed(*F));
        if (F->q <= 47) CHECK(n_q_alpha_r(rep) == brute);
    }
}
