// Command-line front end: census / verify / sweep / points / classify / isom.
//
// Exit codes: 0 = all checks pass, 1 = at least one formula/oracle mismatch,
// 2 = invalid invocation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dik/report_io.hpp"

namespace {

using namespace dik;

Family parse_family(const std::string& s) {
    if (s == "tripling") return Family::Tripling;
    if (s == "doubling") return Family::Doubling;
    throw CLI::ValidationError("--family", "must be tripling or doubling");
}

FieldPtr field_for(uint64_t q, uint64_t p, int k) {
    if (q) {
        auto pk = prime_power(q);
        if (!pk) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
        p = pk->first;
        k = pk->second;
    }
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("characteristic must be an odd prime");
    return FieldSpec::make(p, k);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

std::string elem_str(const FieldElem& e) {
    return elem_to_json(e).dump();
}

int run(int argc, char** argv) {
    CLI::App app{"Doche-Icart-Kohel curve family census and formula verification"};
    app.require_subcommand(1);

    std::string family_str, format = "json", out_path, target;
    uint64_t q = 0, p = 0, q_min = 0, q_max = 0, u_idx = 0, v_idx = 0;
    int k = 1, jobs = 1;

    auto* c_census = app.add_subcommand("census", "class structure for one (family, q)");
    c_census->add_option("--family", family_str)->required();
    c_census->add_option("--q", q);
    c_census->add_option("--p", p);
    c_census->add_option("--k", k);
    c_census->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_census->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "formula-vs-oracle checks for one (family, q)");
    c_verify->add_option("--family", family_str)->required();
    c_verify->add_option("--q", q);
    c_verify->add_option("--p", p);
    c_verify->add_option("--k", k);
    c_verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_verify->add_option("--out", out_path);

    auto* c_sweep = app.add_subcommand("sweep", "verify a range of prime powers");
    c_sweep->add_option("--family", family_str)->default_val("both");
    c_sweep->add_option("--q-min", q_min)->required();
    c_sweep->add_option("--q-max", q_max)->required();
    c_sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_sweep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_sweep->add_option("--out", out_path);

    auto* c_points = app.add_subcommand("points", "point count of an auxiliary curve");
    c_points->add_option("--target", target)
        ->required()
        ->check(CLI::IsMember({"C", "legendre13", "legendre34", "gamma"}));
    c_points->add_option("--q", q)->required();

    auto* c_classify = app.add_subcommand("classify", "classify one parameter u");
    c_classify->add_option("--family", family_str)->required();
    c_classify->add_option("--q", q)->required();
    c_classify->add_option("--u", u_idx)->required();

    auto* c_isom = app.add_subcommand("isom", "decide E_u = E_v over F_q with witness");
    c_isom->add_option("--family", family_str)->required();
    c_isom->add_option("--q", q)->required();
    c_isom->add_option("--u", u_idx)->required();
    c_isom->add_option("--v", v_idx)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*c_census) {
        Family fam = parse_family(family_str);
        FieldPtr F = field_for(q, p, k);
        CensusReport rep = brute_census(fam, F);
        emit(format == "json" ? census_to_json(rep).dump(2) + "\n" : census_to_csv(rep), out_path);
        return 0;
    }

    if (*c_verify) {
        Family fam = parse_family(family_str);
        FieldPtr F = field_for(q, p, k);
        VerificationRecord rec = verify(fam, F);
        std::string text = format == "json"
                               ? verification_to_json(rec).dump(2) + "\n"
                               : std::string(kSweepCsvHeader) + "\n" + sweep_csv_row(rec) + "\n";
        emit(text, out_path);
        return rec.pass ? 0 : 1;
    }

    if (*c_sweep) {
        std::optional<Family> fam;
        if (family_str != "both") fam = parse_family(family_str);
        auto records = sweep(fam, q_min, q_max, jobs);
        std::string text;
        if (format == "json") {
            json arr = json::array();
            for (const auto& rec : records) arr.push_back(verification_to_json(rec));
            text = arr.dump(2) + "\n";
        } else {
            text = std::string(kSweepCsvHeader) + "\n";
            for (const auto& rec : records) text += sweep_csv_row(rec) + "\n";
        }
        emit(text, out_path);
        if (!out_path.empty())
            for (const auto& rec : records)
                std::cout << family_name(rec.family) << " q=" << rec.q
                          << (rec.pass ? " pass" : " FAIL") << "\n";
        bool all_pass = true;
        for (const auto& rec : records) all_pass &= rec.pass;
        return all_pass ? 0 : 1;
    }

    if (*c_points) {
        FieldPtr F = field_for(q, 0, 1);
        uint64_t n = 0;
        std::string convention;
        if (target == "C") {
            if (F->p < 5 || F->q % 3 != 1)
                throw std::invalid_argument("target C needs p >= 5 and q = 1 (mod 3)");
            n = tripling::N1(*F);
            convention = "affine";
        } else if (target == "legendre13") {
            if (F->p < 5) throw std::invalid_argument("legendre13 needs p >= 5");
            n = tripling::N2(*F);
            convention = "projective";
        } else if (target == "legendre34") {
            if (F->p < 5) throw std::invalid_argument("legendre34 needs p >= 5");
            n = doubling::N_L(*F);
            convention = "projective";
        } else {  // gamma
            n = doubling::gamma_affine_count(*F);
            convention = "affine";
        }
        std::cout << n << " (" << convention << ")\n";
        return 0;
    }

    if (*c_classify) {
        Family fam = parse_family(family_str);
        FieldPtr F = field_for(q, 0, 1);
        if (!family_supports(fam, F->p))
            throw std::invalid_argument("characteristic not supported by family");
        if (u_idx >= F->q) throw std::invalid_argument("--u out of range");
        FieldElem u = F->from_index(u_idx);
        if (!family_admissible(fam, u)) throw std::invalid_argument("u is not admissible");
        json out;
        out["family"] = family_name(fam);
        out["q"] = F->q;
        out["u"] = elem_to_json(u);
        if (fam == Family::Tripling) {
            out["label"] = tripling::label_name(tripling::t_label(u));
            out["j"] = elem_to_json(tripling::t_j(u));
            auto cs = tripling::t_fq_class(u);
            json members = json::array();
            for (const auto& m : cs.jbar_members) members.push_back(elem_to_json(m));
            out["jbar_class"] = members;
            json blocks = json::array();
            for (const auto& block : cs.fq_blocks) {
                json b = json::array();
                for (const auto& m : block) b.push_back(elem_to_json(m));
                blocks.push_back(b);
            }
            out["fq_blocks"] = blocks;
        } else {
            out["j"] = elem_to_json(doubling::d_j(u));
            auto cls = doubling::d_jbar_class(u);
            json members = json::array();
            for (const auto& m : cls) members.push_back(elem_to_json(m));
            out["jbar_class"] = members;
            json block = json::array();
            CubicCurve cu = doubling::d_curve(u);
            for (const auto& m : cls)
                if (isomorphic_fq(cu, doubling::d_curve(m))) block.push_back(elem_to_json(m));
            out["fq_block"] = block;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (*c_isom) {
        Family fam = parse_family(family_str);
        FieldPtr F = field_for(q, 0, 1);
        if (!family_supports(fam, F->p))
            throw std::invalid_argument("characteristic not supported by family");
        if (u_idx >= F->q || v_idx >= F->q) throw std::invalid_argument("--u/--v out of range");
        FieldElem u = F->from_index(u_idx), v = F->from_index(v_idx);
        if (!family_admissible(fam, u) || !family_admissible(fam, v))
            throw std::invalid_argument("parameter not admissible");
        auto w = isomorphic_fq(family_curve(fam, u), family_curve(fam, v));
        if (w) {
            std::cout << "yes alpha=" << elem_str(w->alpha) << " r=" << elem_str(w->r) << "\n";
        } else {
            std::cout << "no\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
