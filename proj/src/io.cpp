#include "hyperclass/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "hyperclass/schwarz.hpp"
#include "hyperclass/tables.hpp"

namespace hyperclass {

using nlohmann::json;

namespace {

json rat_json(const Rat& q) { return rat_to_string(q); }

json tuple_json(const std::vector<Rat>& t) {
    json out = json::array();
    for (const Rat& q : t) out.push_back(rat_json(q));
    return out;
}

json ivec_json(const IntVec& v) {
    json out = json::array();
    for (long long x : v) out.push_back(x);
    return out;
}

json family_pattern_json(const ParametricFamily& f) {
    json out;
    out["label"] = f.label;
    out["slope"] = ivec_json(IntVec(f.slope.begin(), f.slope.end()));
    out["offset"] = tuple_json(f.offset);
    json excl = json::array();
    for (const Rat& r : f.excluded_r) excl.push_back(rat_json(r));
    out["excluded_r"] = excl;
    out["constraint"] = "r in (0,1) rational, r not excluded";
    return out;
}

std::string csv_tuple(const std::vector<Rat>& t, char sep = ',') {
    std::ostringstream out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out << sep;
        out << rat_to_string(t[i]);
    }
    return out.str();
}

} // namespace

json system_to_json(const GkzSystem& sys) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["r"] = sys.r;
    out["num_points"] = sys.num_points;
    json pts = json::array();
    for (const auto& p : sys.points) pts.push_back(ivec_json(p));
    out["points"] = pts;
    out["h"] = ivec_json(sys.h);
    json facets = json::array();
    for (const auto& m : sys.facets) facets.push_back(ivec_json(m));
    out["facets"] = facets;
    json lattice = json::array();
    for (const auto& l : sys.lattice_basis) lattice.push_back(ivec_json(l));
    out["lattice_basis"] = lattice;
    out["volume"] = sys.volume;
    return out;
}

json family_to_json(Family fam, int n) {
    const GkzSystem& sys = family_system(fam, n);
    json out = system_to_json(sys);
    out["family"] = family_name(fam);
    if (family_is_lauricella(fam)) out["n"] = n;
    out["parameters"] = param_names(fam, n);
    json alpha = json::array();
    {
        // Describe the affine parameter map by its action on the names.
        std::vector<Rat> zero(param_arity(fam, n), Rat(0));
        std::vector<Rat> base = alpha_from_classical(fam, n, zero);
        auto names = param_names(fam, n);
        for (int i = 0; i < sys.r; ++i) {
            std::string desc;
            for (int j = 0; j < param_arity(fam, n); ++j) {
                std::vector<Rat> probe = zero;
                probe[j] = 1;
                Rat coef = alpha_from_classical(fam, n, probe)[i] - base[i];
                if (coef == 0) continue;
                if (coef > 0 && !desc.empty()) desc += "+";
                if (coef == -1) desc += "-";
                else if (coef != 1) desc += rat_to_string(coef) + "*";
                desc += names[j];
            }
            if (base[i] != 0) desc += (base[i] > 0 ? "+" : "") + rat_to_string(base[i]);
            alpha.push_back(desc);
        }
    }
    out["alpha_map"] = alpha;
    json nonres = json::array();
    for (const auto& form : nonresonance_forms_classical(fam, n)) {
        std::string desc;
        auto names = param_names(fam, n);
        for (size_t j = 0; j < form.size(); ++j) {
            if (form[j] == 0) continue;
            if (form[j] > 0 && !desc.empty()) desc += "+";
            if (form[j] == -1) desc += "-";
            else if (form[j] != 1) desc += std::to_string(form[j]) + "*";
            desc += names[j];
        }
        nonres.push_back(desc);
    }
    out["nonresonance_nonintegral"] = nonres;
    return out;
}

json interlacing_to_json(const InterlacingTable& table) {
    json out;
    out["schema_version"] = kSchemaVersion;
    json forms = json::array();
    for (const auto& m : table.forms) forms.push_back(ivec_json(m));
    out["forms"] = forms;
    out["volume"] = table.volume;
    out["max_signature"] = table.max_signature;
    out["feasible_floor_vectors"] = table.feasible_count;
    json rows = json::array();
    for (const auto& row : table.maximal) {
        json r;
        r["floors"] = ivec_json(row.floors);
        r["witness"] = tuple_json(row.witness);
        r["signature"] = row.sig;
        rows.push_back(r);
    }
    out["maximal"] = rows;
    return out;
}

json solutions_to_json(const SolutionSet& s) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["family"] = family_name(s.fam);
    if (family_is_lauricella(s.fam)) out["n"] = s.n;
    json fams = json::array();
    for (const auto& f : s.families) fams.push_back(family_pattern_json(f));
    out["parametric_families"] = fams;
    json reps = json::array();
    for (const auto& rep : s.representatives()) {
        json r;
        r["tuple"] = tuple_json(rep);
        r["class_size"] = s.class_size(rep);
        reps.push_back(r);
    }
    out["representatives"] = reps;
    json orbits = json::array();
    for (const auto& orbit : s.orbits()) {
        json o = json::array();
        for (const auto& t : orbit) o.push_back(tuple_json(t));
        orbits.push_back(o);
    }
    out["sporadic_orbits"] = orbits;
    out["sporadic_total"] = s.sporadic.size();
    return out;
}

json compare_to_json(const CompareReport& rep) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["pass"] = rep.pass;
    out["families_match"] = rep.families_match;
    json missing = json::array(), extra = json::array();
    for (const auto& t : rep.missing) missing.push_back(tuple_json(t));
    for (const auto& t : rep.extra) extra.push_back(tuple_json(t));
    out["missing"] = missing;
    out["extra"] = extra;
    out["detail"] = rep.detail;
    return out;
}

std::string solutions_to_csv(const SolutionSet& s) {
    std::ostringstream out;
    auto names = param_names(s.fam, s.n);
    for (size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << ",class_size\n";
    for (const auto& f : s.families) out << f.label << ",free r\n";
    for (const auto& rep : s.representatives())
        out << csv_tuple(rep) << "," << s.class_size(rep) << "\n";
    return out.str();
}

std::string interlacing_to_csv(const InterlacingTable& table) {
    std::ostringstream out;
    out << "floors,witness,signature\n";
    for (const auto& row : table.maximal) {
        out << "\"(";
        for (size_t i = 0; i < row.floors.size(); ++i)
            out << (i ? " " : "") << row.floors[i];
        out << ")\",\"(" << csv_tuple(row.witness, ' ') << ")\"," << row.sig << "\n";
    }
    return out.str();
}

std::string schwarz_csv() {
    std::ostringstream out;
    out << "a,b,c,orbit_pair_size\n";
    for (const auto& f : gauss_type1_patterns()) out << f.label << ",free r\n";
    for (const auto& rep : type2_orbit_pair_representatives()) {
        std::set<GaussTriple> cls;
        for (const auto& base : {rep, GaussTriple{rep[1], rep[0], rep[2]}})
            for (const auto& c : conjugation_orbit({base[0], base[1], base[2]}))
                cls.insert({c[0], c[1], c[2]});
        out << rat_to_string(rep[0]) << "," << rat_to_string(rep[1]) << ","
            << rat_to_string(rep[2]) << "," << cls.size() << "\n";
    }
    return out.str();
}

std::string schwarz_lmn_csv() {
    std::ostringstream out;
    out << "lambda,mu,nu\n";
    out << "1/2,1/2,s (s rational non-integral)\n";
    for (const auto& t : schwarz_lmn_tuples())
        out << rat_to_string(t[0]) << "," << rat_to_string(t[1]) << ","
            << rat_to_string(t[2]) << "\n";
    return out.str();
}

std::string reference_csv(const std::string& table_id) {
    const ReferenceTable& tab = reference_table(table_id);
    std::ostringstream out;
    auto names = param_names(tab.fam, tab.n);
    for (size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << "\n";
    for (const auto& f : tab.families) out << f.label << "\n";
    for (const auto& rep : tab.representatives) out << csv_tuple(rep) << "\n";
    return out.str();
}

} // namespace hyperclass
