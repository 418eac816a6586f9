#include <catch2/catch_amalgamated.hpp>

#include "dik/census.hpp"
#include "dik/report_io.hpp"

using namespace dik;

namespace {
FieldPtr make_q(uint64_t q) {
    auto pk = prime_power(q);
    return FieldSpec::make(pk->first, pk->second);
}
}  // namespace

TEST_CASE("prime power decomposition") {
    CHECK(prime_power(7) == std::make_pair<uint64_t, int>(7, 1));
    CHECK(prime_power(729) == std::make_pair<uint64_t, int>(3, 6));
    CHECK(!prime_power(12));
    CHECK(!prime_power(1));
    auto pows = odd_prime_powers(3, 30);
    CHECK(pows == std::vector<uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
}

TEST_CASE("brute census examples") {
    auto t7 = brute_census(Family::Tripling, make_q(7));
    CHECK(t7.jbar_count == 5);
    CHECK(t7.fq_count == 5);

    auto d5 = brute_census(Family::Doubling, make_q(5));
    CHECK(d5.jbar_count == 3);
    CHECK(d5.fq_count == 3);

    auto t5 = brute_census(Family::Tripling, make_q(5));
    CHECK(t5.jbar_count == 2);
    CHECK(t5.fq_count == 2);
    REQUIRE(t5.classes.size() == 2);
    // classes ordered by smallest member: {2} then {3, 4} in one block
    CHECK(t5.classes[0].members.size() == 1);
    CHECK(t5.classes[1].members.size() == 2);
    CHECK(t5.classes[1].fq_blocks.size() == 1);

    CHECK_THROWS(brute_census(Family::Tripling, FieldSpec::make(3, 1)));
}

TEST_CASE("census determinism") {
    auto a = brute_census(Family::Doubling, make_q(13));
    auto b = brute_census(Family::Doubling, make_q(13));
    CHECK(census_to_json(a) == census_to_json(b));
    CHECK(census_to_csv(a) == census_to_csv(b));
}

TEST_CASE("verify examples") {
    auto rec9 = verify(Family::Doubling, make_q(9));
    CHECK(rec9.pass);
    bool found = false;
    for (const auto& c : rec9.checks)
        if (c.name == "jbar_count") {
            found = true;
            CHECK(c.formula == 5);
            CHECK(c.oracle == 5);
        }
    CHECK(found);

    auto rec13 = verify(Family::Tripling, make_q(13));
    CHECK(rec13.pass);
    for (const auto& c : rec13.checks)
        if (c.name == "jbar_count") CHECK(c.formula == 10);

    auto rec7 = verify(Family::Tripling, make_q(7));
    CHECK(rec7.pass);
    CHECK(rec7.stat("N1") == 25);
}

TEST_CASE("sweep") {
    auto recs = sweep(Family::Doubling, 3, 10);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].q == 3);
    CHECK(recs[1].q == 5);
    CHECK(recs[2].q == 7);
    CHECK(recs[3].q == 9);
    for (const auto& r : recs) CHECK(r.pass);

    auto trecs = sweep(Family::Tripling, 5, 13);
    REQUIRE(trecs.size() == 4);  // 5, 7, 11, 13

    auto both3 = sweep(std::nullopt, 3, 3);
    REQUIRE(both3.size() == 1);  // tripling needs p >= 5
    CHECK(both3[0].family == Family::Doubling);

    CHECK_THROWS(sweep(std::nullopt, 10, 9));

    // parallel sweep returns the same records in the same order
    auto seq = sweep(std::nullopt, 3, 40, 1);
    auto par = sweep(std::nullopt, 3, 40, 4);
    REQUIRE(seq.size() == par.size());
    for (size_t i = 0; i < seq.size(); ++i)
        CHECK(verification_to_json(seq[i]) == verification_to_json(par[i]));
}

TEST_CASE("json round trip") {
    auto rep = brute_census(Family::Tripling, make_q(25));
    json j = census_to_json(rep);
    json reparsed = json::parse(j.dump());
    CHECK(reparsed == j);
    CHECK(reparsed["jbar_count"].get<uint64_t>() == rep.jbar_count);
    // element round trip through serialization
    const FieldSpec& F = *rep.field;
    for (const auto& cls : rep.classes)
        for (const auto& u : cls.members) {
            FieldElem back = elem_from_json(json::parse(elem_to_json(u).dump()), F);
            CHECK(back == u);
        }
}

TEST_CASE("csv schema") {
    auto rec = verify(Family::Doubling, make_q(5));
    std::string row = sweep_csv_row(rec);
    CHECK(row.substr(0, 9) == "doubling,");
    size_t commas = 0;
    for (char c : row) commas += (c == ',');
    std::string header(kSweepCsvHeader);
    size_t hcommas = 0;
    for (char c : header) hcommas += (c == ',');
    CHECK(commas == hcommas);
}

TEST_CASE("structured vs exhaustive isomorphism oracle, small q") {
    for (uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
        auto F = make_q(q);
        if (F->p >= 5) CHECK(iso_oracle_discrepancies(Family::Tripling, *F) == 0);
        CHECK(iso_oracle_discrepancies(Family::Doubling, *F) == 0);
    }
}

TEST_CASE("lemma isoD equivalence, small q") {
    for (uint64_t q : {5u, 7u, 11u, 13u, 25u}) {
        CHECK(lemma_isod_discrepancies(*make_q(q)) == 0);
    }
}
