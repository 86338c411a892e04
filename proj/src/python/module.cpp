#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hyperclass/io.hpp"
#include "hyperclass/tables.hpp"
#include "hyperclass/verify.hpp"

namespace py = pybind11;
using namespace hyperclass;

namespace {

std::pair<Family, int> resolve(const std::string& name, int n) {
    auto [fam, forced] = parse_family(name);
    return {fam, forced ? *forced : (family_is_lauricella(fam) ? n : 0)};
}

std::vector<Rat> parse_tuple(const std::vector<std::string>& params) {
    std::vector<Rat> out;
    out.reserve(params.size());
    for (const auto& p : params) out.push_back(parse_rational(p));
    return out;
}

std::string check_json(const std::string& family, int n,
                       const std::vector<std::string>& params, bool full) {
    auto [fam, nn] = resolve(family, n);
    std::vector<Rat> tuple = parse_tuple(params);
    if (static_cast<int>(tuple.size()) != param_arity(fam, nn))
        throw InputError("expected " + std::to_string(param_arity(fam, nn)) + " parameters");
    const GkzSystem& sys = family_system(fam, nn);
    std::vector<Rat> alpha = frac_tuple(alpha_from_classical(fam, nn, tuple));
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["family"] = family_name(fam);
    doc["nonresonant"] = is_nonresonant(sys, alpha);
    doc["volume"] = sys.volume;
    if (doc["nonresonant"].get<bool>()) {
        KReport rep = algebraicity_report(sys, alpha, full);
        doc["denominator"] = rep.denominator;
        nlohmann::json sigs = nlohmann::json::array();
        for (auto [k, sig] : rep.signature_per_k)
            sigs.push_back({{"k", k}, {"signature", sig}});
        doc["signature_per_k"] = sigs;
        doc["algebraic"] = rep.algebraic;
    } else {
        doc["algebraic"] = false;
    }
    return doc.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact classification of algebraic Appell-Lauricella and Horn "
              "hypergeometric functions";

    // Translators run newest-first: register the base class before the
    // derived one so InputError surfaces as ValueError.
    py::register_exception<Error>(m, "HyperclassError", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("check_json", &check_json, py::arg("family"), py::arg("n"), py::arg("params"),
          py::arg("full_k_report") = false,
          "Non-resonance / algebraicity report for one parameter tuple (JSON text).");

    m.def("volume", [](const std::string& family, int n) {
        auto [fam, nn] = resolve(family, n);
        return family_system(fam, nn).volume;
    }, py::arg("family"), py::arg("n") = 2, "Normalized volume of the family's polytope.");

    m.def("family_json", [](const std::string& family, int n) {
        auto [fam, nn] = resolve(family, n);
        return family_to_json(fam, nn).dump();
    }, py::arg("family"), py::arg("n") = 2,
       "Points, grading form, facets, relation lattice, volume (JSON text).");

    m.def("signature", [](const std::string& family, int n,
                          const std::vector<std::string>& params) {
        auto [fam, nn] = resolve(family, n);
        const GkzSystem& sys = family_system(fam, nn);
        return signature(sys, frac_tuple(alpha_from_classical(fam, nn, parse_tuple(params))));
    }, py::arg("family"), py::arg("n"), py::arg("params"),
       "Number of apexpoints at the given classical parameters.");

    m.def("interlace_json", [](const std::string& family, int n) {
        auto [fam, nn] = resolve(family, n);
        return interlacing_to_json(derive_interlacing(family_system(fam, nn))).dump();
    }, py::arg("family"), py::arg("n") = 2,
       "Maximal-signature floor vectors with witnesses (JSON text).");

    m.def("classify_json", [](const std::string& family, int n, long long max_family_den) {
        auto [fam, nn] = resolve(family, n);
        ClassifyOptions opts;
        opts.max_family_denominator = max_family_den;
        return solutions_to_json(classify_family(fam, nn, opts)).dump();
    }, py::arg("family"), py::arg("n") = 2, py::arg("max_family_denominator") = 24,
       "Full solution set of the family (JSON text).");

    m.def("classify_csv", [](const std::string& family, int n) {
        auto [fam, nn] = resolve(family, n);
        return solutions_to_csv(classify_family(fam, nn));
    }, py::arg("family"), py::arg("n") = 2);

    m.def("gauss_is_algebraic", [](const std::string& a, const std::string& b,
                                   const std::string& c) {
        return gauss_is_algebraic(parse_rational(a), parse_rational(b), parse_rational(c));
    }, py::arg("a"), py::arg("b"), py::arg("c"),
       "Classical interlacing test for the Gauss function.");

    m.def("gauss_triple_kind", [](const std::string& a, const std::string& b,
                                  const std::string& c) -> std::string {
        auto cls = gauss_triple_classify(parse_rational(a), parse_rational(b),
                                         parse_rational(c));
        switch (cls.kind) {
        case GaussClassification::Type1: return "type1";
        case GaussClassification::Type2: return "type2";
        default: return "not_algebraic";
        }
    }, py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("type2_count", [] { return type2_triples().size(); });
    m.def("schwarz_csv", &schwarz_csv);
    m.def("reference_csv", &reference_csv, py::arg("table_id"));
    m.def("reference_table_ids", &all_reference_table_ids);

    m.def("verify", [](const std::string& filter) {
        py::list out;
        for (const auto& res : run_verifications(filter)) {
            py::dict d;
            d["name"] = res.name;
            d["pass"] = res.pass;
            d["detail"] = res.detail;
            d["seconds"] = res.seconds;
            out.append(d);
        }
        return out;
    }, py::arg("filter") = "", "Run the acceptance checks (optionally filtered by name).");
}
