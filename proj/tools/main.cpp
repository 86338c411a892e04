#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "hyperclass/io.hpp"
#include "hyperclass/tables.hpp"
#include "hyperclass/verify.hpp"

using namespace hyperclass;
using nlohmann::json;

namespace {

struct FamilyArgs {
    std::string family;
    int n = 2;
    bool n_given = false;
};

std::pair<Family, int> resolve(const FamilyArgs& args) {
    auto [fam, forced_n] = parse_family(args.family);
    int n = forced_n ? *forced_n : (family_is_lauricella(fam) ? args.n : 0);
    if (forced_n && args.n_given && args.n != *forced_n)
        throw InputError("family " + args.family + " fixes n = " + std::to_string(*forced_n));
    return {fam, n};
}

std::vector<Rat> parse_params(const std::string& text, Family fam, int n) {
    std::vector<Rat> out;
    size_t pos = 0;
    int index = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        ++index;
        if (tok.empty())
            throw InputError("empty parameter at position " + std::to_string(index));
        try {
            out.push_back(parse_rational(tok));
        } catch (const InputError&) {
            throw InputError("malformed rational '" + tok + "' at position " +
                             std::to_string(index));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(out.size()) != param_arity(fam, n))
        throw InputError("family " + family_name(fam) + " expects " +
                         std::to_string(param_arity(fam, n)) + " parameters, got " +
                         std::to_string(out.size()));
    return out;
}

void emit(const json& doc, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << doc.dump(2) << "\n"; // text falls back to pretty json
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of algebraic Appell-Lauricella and Horn functions"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand
    std::string format = "json";
    app.add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    FamilyArgs fargs;
    std::string params_text;
    bool full_k = false;
    bool verify_flag = false;
    long long max_family_den = 24;

    auto add_family_opts = [&](CLI::App* cmd, bool with_params) {
        cmd->add_option("--family", fargs.family, "family name (FD, FA, FB, FC, F1..F4, G1..G3, H1..H7, Gauss)")
            ->required();
        cmd->add_option("--n", fargs.n, "number of variables for the Lauricella families")
            ->check(CLI::Range(1, 8))
            ->each([&](const std::string&) { fargs.n_given = true; });
        if (with_params)
            cmd->add_option("--params", params_text, "comma-separated rationals, e.g. 1/2,1/6,1/3")
                ->required();
    };

    auto* check_cmd = app.add_subcommand("check", "non-resonance and algebraicity of one parameter tuple");
    add_family_opts(check_cmd, true);
    check_cmd->add_flag("--full-k-report", full_k, "evaluate every conjugate even after a failure");

    auto* interlace_cmd = app.add_subcommand("interlace", "derive the maximal-signature floor vectors");
    add_family_opts(interlace_cmd, false);

    auto* classify_cmd = app.add_subcommand("classify", "regenerate the family's solution set");
    add_family_opts(classify_cmd, false);
    classify_cmd->add_flag("--verify", verify_flag, "compare against the embedded reference table");
    classify_cmd->add_option("--max-family-denominator", max_family_den,
                             "sampling bound for the parametric families");

    auto* families_cmd = app.add_subcommand("families", "dump the family's combinatorial data");
    add_family_opts(families_cmd, false);

    auto* volume_cmd = app.add_subcommand("volume", "normalized volume of the family's polytope");
    add_family_opts(volume_cmd, false);

    auto* schwarz_cmd = app.add_subcommand("schwarz", "emit the algebraic Gauss triples table");
    std::string schwarz_what = "triples";
    schwarz_cmd->add_option("--what", schwarz_what, "triples (default) or lmn")
        ->check(CLI::IsMember({"triples", "lmn"}));

    auto* tables_cmd = app.add_subcommand("tables", "emit an embedded reference table as CSV");
    std::string table_id;
    tables_cmd->add_option("--id", table_id, "table id (empty lists the available ids)");

    auto* verify_cmd = app.add_subcommand("verify-all", "run every acceptance check");
    std::string verify_filter;
    verify_cmd->add_option("--only", verify_filter, "run only checks whose name contains this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check_cmd)) {
            auto [fam, n] = resolve(fargs);
            std::vector<Rat> params = parse_params(params_text, fam, n);
            const GkzSystem& sys = family_system(fam, n);
            std::vector<Rat> alpha = frac_tuple(alpha_from_classical(fam, n, params));
            json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["family"] = family_name(fam);
            if (family_is_lauricella(fam)) doc["n"] = n;
            json ptuple = json::array();
            for (const Rat& p : params) ptuple.push_back(rat_to_string(p));
            doc["params"] = ptuple;
            bool nonres = is_nonresonant(sys, alpha);
            doc["nonresonant"] = nonres;
            doc["volume"] = sys.volume;
            if (nonres) {
                KReport rep = algebraicity_report(sys, alpha, full_k);
                doc["denominator"] = rep.denominator;
                json sigs = json::array();
                for (auto [k, sig] : rep.signature_per_k)
                    sigs.push_back({{"k", k}, {"signature", sig}});
                doc["signature_per_k"] = sigs;
                doc["algebraic"] = rep.algebraic;
            } else {
                json bad = json::array();
                for (int j : resonant_facets(sys, alpha)) bad.push_back(j);
                doc["resonant_facets"] = bad;
                doc["algebraic"] = false;
            }
            emit(doc, format);
            return 0;
        }
        if (app.got_subcommand(interlace_cmd)) {
            auto [fam, n] = resolve(fargs);
            InterlacingTable table = derive_interlacing(family_system(fam, n));
            if (format == "csv")
                std::cout << interlacing_to_csv(table);
            else
                emit(interlacing_to_json(table), format);
            return 0;
        }
        if (app.got_subcommand(classify_cmd)) {
            auto [fam, n] = resolve(fargs);
            ClassifyOptions opts;
            opts.max_family_denominator = max_family_den;
            SolutionSet s = classify_family(fam, n, opts);
            if (format == "csv") {
                std::cout << solutions_to_csv(s);
            } else {
                json doc = solutions_to_json(s);
                if (verify_flag) {
                    std::string id = reference_table_id(fam, n);
                    if (id.empty())
                        throw InputError("no reference table for this family/arity");
                    doc["verification"] = compare_to_json(compare_with_reference(s, id));
                }
                emit(doc, format);
                if (verify_flag) {
                    std::string id = reference_table_id(fam, n);
                    if (!compare_with_reference(s, id).pass) return 1;
                }
            }
            return 0;
        }
        if (app.got_subcommand(families_cmd)) {
            auto [fam, n] = resolve(fargs);
            emit(family_to_json(fam, n), format);
            return 0;
        }
        if (app.got_subcommand(volume_cmd)) {
            auto [fam, n] = resolve(fargs);
            const GkzSystem& sys = family_system(fam, n);
            json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["family"] = family_name(fam);
            if (family_is_lauricella(fam)) doc["n"] = n;
            doc["volume"] = sys.volume;
            doc["facet_count"] = sys.facet_count();
            emit(doc, format);
            return 0;
        }
        if (app.got_subcommand(schwarz_cmd)) {
            std::cout << (schwarz_what == "lmn" ? schwarz_lmn_csv() : schwarz_csv());
            return 0;
        }
        if (app.got_subcommand(tables_cmd)) {
            if (table_id.empty()) {
                for (const auto& id : all_reference_table_ids()) std::cout << id << "\n";
                return 0;
            }
            std::cout << reference_csv(table_id);
            return 0;
        }
        if (app.got_subcommand(verify_cmd)) {
            auto results = run_verifications(verify_filter);
            bool all_pass = true;
            for (const auto& res : results) {
                all_pass = all_pass && res.pass;
                std::printf("%s  %-40s (%.1fs)  %s\n", res.pass ? "PASS" : "FAIL",
                            res.name.c_str(), res.seconds, res.detail.c_str());
            }
            std::printf("%s: %zu checks\n", all_pass ? "ALL PASS" : "FAILURES", results.size());
            return all_pass ? 0 : 1;
        }
    } catch (const InputError& e) {
        json err{{"error", e.what()}, {"kind", "input"}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}, {"kind", "computation"}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
