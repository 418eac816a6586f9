#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "dik/census.hpp"

namespace dik {

using json = nlohmann::json;

/// Prime-field elements serialize as plain integers; extension-field elements
/// as coefficient lists (constant term first) plus the modulus.
inline json elem_to_json(const FieldElem& e) {
    const FieldSpec& F = *e.field;
    if (F.k == 1) return e.c[0];
    json coeffs = json::array();
    for (int i = 0; i < F.k; ++i) coeffs.push_back(e.c[i]);
    return json{{"coeffs", coeffs}, {"modulus", F.modulus}};
}

inline FieldElem elem_from_json(const json& j, const FieldSpec& F) {
    if (j.is_number()) return F.from_int(j.get<int64_t>());
    return F.element(j.at("coeffs").get<std::vector<uint64_t>>());
}

inline json census_to_json(const CensusReport& rep) {
    json classes = json::array();
    for (const auto& cls : rep.classes) {
        json members = json::array(), blocks = json::array();
        for (const auto& u : cls.members) members.push_back(elem_to_json(u));
        for (const auto& block : cls.fq_blocks) {
            json b = json::array();
            for (const auto& u : block) b.push_back(elem_to_json(u));
            blocks.push_back(b);
        }
        classes.push_back({{"j", elem_to_json(cls.j)},
                           {"jbar_member_us", members},
                           {"fq_blocks", blocks}});
    }
    return json{{"family", family_name(rep.family)}, {"q", rep.q},     {"p", rep.p},
                {"k", rep.k},                        {"classes", classes},
                {"jbar_count", rep.jbar_count},      {"fq_count", rep.fq_count}};
}

inline json verification_to_json(const VerificationRecord& rec) {
    json checks = json::array();
    for (const auto& c : rec.checks)
        checks.push_back({{"name", c.name},
                          {"formula_value", c.formula},
                          {"oracle_value", c.oracle},
                          {"pass", c.pass}});
    json stats = json::object();
    for (const auto& [name, v] : rec.stats) stats[name] = v;
    return json{{"family", family_name(rec.family)},
                {"q", rec.q},
                {"p", rec.p},
                {"k", rec.k},
                {"checks", checks},
                {"stats", stats},
                {"pass", rec.pass}};
}

inline std::string census_to_csv(const CensusReport& rep) {
    const FieldSpec& F = *rep.field;
    std::ostringstream os;
    os << "family,q,p,k,u,j,class_index,block_index\n";
    for (size_t ci = 0; ci < rep.classes.size(); ++ci) {
        const auto& cls = rep.classes[ci];
        for (size_t bi = 0; bi < cls.fq_blocks.size(); ++bi)
            for (const auto& u : cls.fq_blocks[bi])
                os << family_name(rep.family) << ',' << rep.q << ',' << rep.p << ',' << rep.k
                   << ',' << F.index_of(u) << ',' << F.index_of(cls.j) << ',' << ci << ',' << bi
                   << '\n';
    }
    return os.str();
}

inline constexpr const char* kSweepCsvHeader =
    "family,q,p,k,jbar_formula,jbar_oracle,fq_formula,fq_oracle,N1,N2,N,c3,n_q,nbar,pass";

inline std::string sweep_csv_row(const VerificationRecord& rec) {
    auto field = [&](const char* check) -> std::pair<std::string, std::string> {
        for (const auto& c : rec.checks)
            if (c.name == check)
                return {std::to_string(c.formula), std::to_string(c.oracle)};
        return {"", ""};
    };
    auto stat = [&](const char* name) -> std::string {
        for (const auto& [n, v] : rec.stats)
            if (n == name) return std::to_string(v);
        return "";
    };
    auto [jf, jo] = field("jbar_count");
    auto [ff, fo] = field("fq_count");
    std::ostringstream os;
    os << family_name(rec.family) << ',' << rec.q << ',' << rec.p << ',' << rec.k << ',' << jf
       << ',' << jo << ',' << ff << ',' << fo << ',' << stat("N1") << ',' << stat("N2") << ','
       << stat("N") << ',' << stat("c3") << ',' << stat("n_q") << ',' << stat("nbar") << ','
       << (rec.pass ? "1" : "0");
    return os.str();
}

}  // namespace dik
