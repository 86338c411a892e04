#include "hyperclass/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>

namespace hyperclass {

namespace {

IntVec unit(int r, int i) {
    IntVec e(r, 0);
    e[i] = 1;
    return e;
}

IntVec combine(int r, std::initializer_list<std::pair<int, long long>> terms) {
    IntVec v(r, 0);
    for (auto& [i, c] : terms) v[i] += c;
    return v;
}

void require_arity(Family f, int n, const std::vector<Rat>& params) {
    if (static_cast<int>(params.size()) != param_arity(f, n))
        throw InputError("family " + family_name(f) + ": expected " +
                         std::to_string(param_arity(f, n)) + " parameters, got " +
                         std::to_string(params.size()));
}

void require_n(Family f, int n) {
    if (family_is_lauricella(f)) {
        if (n < 1) throw UnsupportedError("family " + family_name(f) + ": n must be >= 1");
        if (n > 8) throw UnsupportedError("family " + family_name(f) + ": n too large");
    }
}

std::vector<IntVec> family_points(Family f, int n) {
    switch (f) {
    case Family::Gauss:
        return {unit(3, 0), unit(3, 1), unit(3, 2), combine(3, {{0, 1}, {1, 1}, {2, -1}})};
    case Family::FD: {
        int r = n + 2;
        std::vector<IntVec> a;
        for (int i = 0; i < r; ++i) a.push_back(unit(r, i));
        for (int i = 1; i <= n; ++i)
            a.push_back(combine(r, {{0, 1}, {i, 1}, {n + 1, -1}}));
        return a;
    }
    case Family::FA: {
        int r = 2 * n + 1;
        std::vector<IntVec> a;
        for (int i = 0; i < r; ++i) a.push_back(unit(r, i));
        for (int i = 1; i <= n; ++i)
            a.push_back(combine(r, {{0, 1}, {i, 1}, {n + i, -1}}));
        return a;
    }
    case Family::FB: {
        int r = 2 * n + 1;
        std::vector<IntVec> a;
        for (int i = 0; i < r; ++i) a.push_back(unit(r, i));
        for (int i = 0; i < n; ++i)
            a.push_back(combine(r, {{i, 1}, {n + i, 1}, {2 * n, -1}}));
        return a;
    }
    case Family::FC: {
        int r = n + 2;
        std::vector<IntVec> a;
        for (int i = 0; i < r; ++i) a.push_back(unit(r, i));
        for (int i = 2; i < n + 2; ++i)
            a.push_back(combine(r, {{0, 1}, {1, 1}, {i, -1}}));
        return a;
    }
    case Family::G1:
        return {unit(3, 0), unit(3, 1), unit(3, 2),
                combine(3, {{0, 1}, {1, -1}, {2, 1}}),
                combine(3, {{0, 1}, {1, 1}, {2, -1}})};
    case Family::G2:
        return {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3),
                combine(4, {{0, 1}, {2, -1}, {3, 1}}),
                combine(4, {{1, 1}, {2, 1}, {3, -1}})};
    case Family::G3:
        return {{1, 1}, {0, 1}, {-1, 1}, {2, 1}};
    case Family::H1:
        return {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3),
                combine(4, {{0, 1}, {1, 1}, {3, -1}}),
                combine(4, {{0, -1}, {1, 1}, {2, 1}})};
    case Family::H2:
        return {unit(5, 0), unit(5, 1), unit(5, 2), unit(5, 3), unit(5, 4),
                combine(5, {{0, 1}, {1, 1}, {4, -1}}),
                combine(5, {{0, -1}, {2, 1}, {3, 1}})};
    case Family::H3:
        return {unit(3, 0), unit(3, 1), unit(3, 2),
                combine(3, {{0, 2}, {2, -1}}),
                combine(3, {{0, 1}, {1, 1}, {2, -1}})};
    case Family::H4:
        return {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3),
                combine(4, {{0, 2}, {2, -1}}),
                combine(4, {{0, 1}, {1, 1}, {3, -1}})};
    case Family::H5:
        return {unit(3, 0), unit(3, 1), unit(3, 2),
                combine(3, {{0, 2}, {1, -1}}),
                combine(3, {{0, 1}, {1, 1}, {2, -1}})};
    case Family::H6:
        return {unit(3, 0), unit(3, 1), unit(3, 2),
                combine(3, {{0, 2}, {1, -1}}),
                combine(3, {{0, -1}, {1, 1}, {2, 1}})};
    case Family::H7:
        return {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3),
                combine(4, {{0, 2}, {3, -1}}),
                combine(4, {{0, -1}, {1, 1}, {2, 1}})};
    }
    throw UnsupportedError("unknown family");
}

} // namespace

bool family_is_lauricella(Family f) {
    return f == Family::FD || f == Family::FA || f == Family::FB || f == Family::FC;
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Gauss: return "Gauss";
    case Family::FD: return "FD";
    case Family::FA: return "FA";
    case Family::FB: return "FB";
    case Family::FC: return "FC";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::H1: return "H1";
    case Family::H2: return "H2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::H5: return "H5";
    case Family::H6: return "H6";
    case Family::H7: return "H7";
    }
    return "?";
}

std::pair<Family, std::optional<int>> parse_family(const std::string& name) {
    std::string s;
    for (char c : name)
        if (c != '_') s.push_back(static_cast<char>(std::toupper(c)));
    if (s == "GAUSS" || s == "F") return {Family::Gauss, std::nullopt};
    if (s == "FD") return {Family::FD, std::nullopt};
    if (s == "FA") return {Family::FA, std::nullopt};
    if (s == "FB") return {Family::FB, std::nullopt};
    if (s == "FC") return {Family::FC, std::nullopt};
    if (s == "F1") return {Family::FD, 2};
    if (s == "F2") return {Family::FA, 2};
    if (s == "F3") return {Family::FB, 2};
    if (s == "F4") return {Family::FC, 2};
    if (s == "G1") return {Family::G1, std::nullopt};
    if (s == "G2") return {Family::G2, std::nullopt};
    if (s == "G3") return {Family::G3, std::nullopt};
    if (s.size() == 2 && s[0] == 'H' && s[1] >= '1' && s[1] <= '7')
        return {static_cast<Family>(static_cast<int>(Family::H1) + (s[1] - '1')),
                std::nullopt};
    throw UnsupportedError("unknown family '" + name + "'");
}

int param_arity(Family f, int n) {
    switch (f) {
    case Family::Gauss: return 3;
    case Family::FD: return n + 2;
    case Family::FA: return 2 * n + 1;
    case Family::FB: return 2 * n + 1;
    case Family::FC: return n + 2;
    case Family::G1: return 3;
    case Family::G2: return 4;
    case Family::G3: return 2;
    case Family::H1: return 4;
    case Family::H2: return 5;
    case Family::H3: return 3;
    case Family::H4: return 4;
    case Family::H5: return 3;
    case Family::H6: return 3;
    case Family::H7: return 4;
    }
    return 0;
}

std::vector<std::string> param_names(Family f, int n) {
    auto seq = [](const std::string& base, int count) {
        std::vector<std::string> out;
        for (int i = 1; i <= count; ++i) out.push_back(base + std::to_string(i));
        return out;
    };
    std::vector<std::string> names;
    switch (f) {
    case Family::Gauss: return {"a", "b", "c"};
    case Family::FD:
        names = {"a"};
        for (auto& s : seq("b", n)) names.push_back(s);
        names.push_back("c");
        return names;
    case Family::FA:
        names = {"a"};
        for (auto& s : seq("b", n)) names.push_back(s);
        for (auto& s : seq("c", n)) names.push_back(s);
        return names;
    case Family::FB:
        names = seq("a", n);
        for (auto& s : seq("b", n)) names.push_back(s);
        names.push_back("c");
        return names;
    case Family::FC:
        names = {"a", "b"};
        for (auto& s : seq("c", n)) names.push_back(s);
        return names;
    case Family::G1: return {"a", "b1", "b2"};
    case Family::G2: return {"a1", "a2", "b1", "b2"};
    case Family::G3: return {"a1", "a2"};
    case Family::H2: return {"a", "b", "c", "d", "e"};
    case Family::H1:
    case Family::H4:
    case Family::H7: return {"a", "b", "c", "d"};
    case Family::H3:
    case Family::H5:
    case Family::H6: return {"a", "b", "c"};
    }
    return {};
}

std::vector<Rat> alpha_from_classical(Family f, int n, const std::vector<Rat>& p) {
    require_arity(f, n, p);
    std::vector<Rat> a;
    auto neg = [&](int i) { a.push_back(-p[i]); };
    auto minus1 = [&](int i) { a.push_back(p[i] - 1); };
    switch (f) {
    case Family::Gauss: neg(0); neg(1); minus1(2); break;
    case Family::FD:
        for (int i = 0; i <= n; ++i) neg(i);
        minus1(n + 1);
        break;
    case Family::FA:
        for (int i = 0; i <= n; ++i) neg(i);
        for (int i = n + 1; i <= 2 * n; ++i) minus1(i);
        break;
    case Family::FB:
        for (int i = 0; i < 2 * n; ++i) neg(i);
        minus1(2 * n);
        break;
    case Family::FC:
        neg(0); neg(1);
        for (int i = 2; i < n + 2; ++i) minus1(i);
        break;
    case Family::G1: neg(0); neg(1); neg(2); break;
    case Family::G2: neg(0); neg(1); neg(2); neg(3); break;
    case Family::G3:
        a.push_back(-p[0]);
        a.push_back(-p[0] - p[1]);
        break;
    case Family::H1: neg(0); neg(1); neg(2); minus1(3); break;
    case Family::H2: neg(0); neg(1); neg(2); neg(3); minus1(4); break;
    case Family::H3: neg(0); neg(1); minus1(2); break;
    case Family::H4: neg(0); neg(1); minus1(2); minus1(3); break;
    case Family::H5: neg(0); neg(1); minus1(2); break;
    case Family::H6: neg(0); neg(1); neg(2); break;
    case Family::H7: neg(0); neg(1); neg(2); minus1(3); break;
    }
    return a;
}

std::vector<Rat> classical_from_alpha(Family f, int n, const std::vector<Rat>& a) {
    if (static_cast<int>(a.size()) != param_arity(f, n))
        throw InputError("classical_from_alpha: alpha arity mismatch");
    if (f == Family::G3) return {-a[0], a[0] - a[1]};
    // All other maps are coordinatewise +-1 with offsets; invert directly.
    std::vector<Rat> probe(param_arity(f, n), Rat(0));
    std::vector<Rat> base = alpha_from_classical(f, n, probe);
    std::vector<Rat> p(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        // alpha_i = sign * p_i + base_i with sign = -1 for neg, +1 for minus1.
        Rat sign = base[i] == Rat(-1) ? Rat(1) : Rat(-1);
        p[i] = (a[i] - base[i]) * sign;
    }
    return p;
}

std::optional<TransportSpec> transport_source(Family f, int n) {
    switch (f) {
    case Family::G2:
        // x -> (x2, x3, x3+x4, x1-x3), from the n = 2 Lauricella FD set.
        return TransportSpec{Family::FD, 2,
                             {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}, {1, 0, -1, 0}}};
    case Family::H2:
        // x -> (x1-x3, x2, x3+x5, x3, x4), from the n = 2 Lauricella FA set.
        return TransportSpec{Family::FA, 2,
                             {{1, 0, -1, 0, 0},
                              {0, 1, 0, 0, 0},
                              {0, 0, 1, 0, 1},
                              {0, 0, 1, 0, 0},
                              {0, 0, 0, 1, 0}}};
    case Family::H3:
        // x -> (x1+x3, x2+x3, -x3), from G1.
        return TransportSpec{Family::G1, 0, {{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}};
    case Family::H6:
        // x -> (x1-x2, x2, x2+x3), from G1.
        return TransportSpec{Family::G1, 0, {{1, -1, 0}, {0, 1, 0}, {0, 1, 1}}};
    case Family::H7:
        // x -> (x1-x2, x2, x2+x4, x3), from H4.
        return TransportSpec{Family::H4, 0,
                             {{1, -1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}};
    case Family::FB: {
        // x -> (x2+x_{n+2}, ..., x_{n+1}+x_{2n+1}, x2, ..., x_{n+1},
        //       x1 - x2 - ... - x_{n+1}), from FA at the same n.
        int r = 2 * n + 1;
        IntMat m(r, IntVec(r, 0));
        for (int i = 0; i < n; ++i) {
            m[i][1 + i] = 1;
            m[i][n + 1 + i] = 1;
            m[n + i][1 + i] = 1;
        }
        m[2 * n][0] = 1;
        for (int i = 1; i <= n; ++i) m[2 * n][i] = -1;
        return TransportSpec{Family::FA, n, std::move(m)};
    }
    default:
        return std::nullopt;
    }
}

const GkzSystem& family_system(Family f, int n) {
    require_n(f, n);
    static std::map<std::pair<Family, int>, GkzSystem> cache;
    static std::recursive_mutex mutex; // transported families build their source
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto key = std::make_pair(f, family_is_lauricella(f) ? n : 0);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GkzSystem sys = build_system(family_points(f, key.second));
    if (auto spec = transport_source(f, key.second)) {
        const GkzSystem& src = family_system(spec->src, spec->src_n);
        std::set<IntVec> image;
        for (const auto& p : src.points) image.insert(apply_map(spec->f, p));
        std::set<IntVec> mine(sys.points.begin(), sys.points.end());
        if (image != mine)
            throw Error("family " + family_name(f) +
                        ": declared isomorphism does not map the source points onto "
                        "this family's points");
        // Facets must agree with the transported ones.
        auto [dst, beta] = transport(spec->f, src, std::vector<Rat>(src.r, Rat(0)));
        std::set<IntVec> fa(dst.facets.begin(), dst.facets.end());
        std::set<IntVec> fb(sys.facets.begin(), sys.facets.end());
        if (fa != fb)
            throw Error("family " + family_name(f) + ": transported facets disagree");
    }
    if (sys.volume != expected_volume(f, key.second))
        throw Error("family " + family_name(f) + ": volume mismatch");
    if (!sys.lattice_touches_all)
        throw Error("family " + family_name(f) + ": relation lattice misses a coordinate");
    return cache.emplace(key, std::move(sys)).first->second;
}

long long expected_volume(Family f, int n) {
    switch (f) {
    case Family::Gauss: return 2;
    case Family::FD: return n + 1;
    case Family::FA:
    case Family::FB:
    case Family::FC: return 1LL << n;
    case Family::G1:
    case Family::G2:
    case Family::G3:
    case Family::H3:
    case Family::H6: return 3;
    default: return 4;
    }
}

Restriction restrict_params(Family f, int n, const std::vector<Rat>& p, int i) {
    require_arity(f, n, p);
    auto bad_index = [&] {
        throw InputError("restrict: variable index " + std::to_string(i) + " out of range");
    };
    switch (f) {
    case Family::FD: {
        if (i < 1 || i > n) bad_index();
        std::vector<Rat> q{p[0]};
        for (int j = 1; j <= n; ++j)
            if (j != i) q.push_back(p[j]);
        q.push_back(p[n + 1]);
        if (n == 2) return {Family::Gauss, 0, q};
        return {Family::FD, n - 1, q};
    }
    case Family::FA: {
        if (i < 1 || i > n) bad_index();
        if (n == 2) return {Family::Gauss, 0, {p[0], p[3 - i], p[2 + (2 - i)]}};
        std::vector<Rat> q{p[0]};
        for (int j = 1; j <= n; ++j)
            if (j != i) q.push_back(p[j]);
        for (int j = 1; j <= n; ++j)
            if (j != i) q.push_back(p[n + j]);
        return {Family::FA, n - 1, q};
    }
    case Family::FB: {
        if (i < 1 || i > n) bad_index();
        if (n == 2) return {Family::Gauss, 0, {p[2 - i], p[2 + (2 - i)], p[4]}};
        std::vector<Rat> q;
        for (int j = 1; j <= n; ++j)
            if (j != i) q.push_back(p[j - 1]);
        for (int j = 1; j <= n; ++j)
            if (j != i) q.push_back(p[n + j - 1]);
        q.push_back(p[2 * n]);
        return {Family::FB, n - 1, q};
    }
    case Family::FC: {
        if (i < 1 || i > n) bad_index();
        std::vector<Rat> q{p[0], p[1]};
        for (int j = 1; j <= n; ++j)
            if (j != i) q.push_back(p[1 + j]);
        if (n == 2) return {Family::Gauss, 0, q};
        return {Family::FC, n - 1, q};
    }
    case Family::H1:
        if (i != 2) bad_index(); // only y = 0 drops to a Gauss function
        return {Family::Gauss, 0, {p[0], p[1], p[3]}};
    case Family::H4:
        if (i == 1) return {Family::Gauss, 0, {p[0], p[1], p[3]}};
        if (i == 2) return {Family::Gauss, 0, {p[0] / 2, (p[0] + 1) / 2, p[2]}};
        bad_index();
        break;
    case Family::H5:
        if (i != 1) bad_index();
        return {Family::Gauss, 0, {p[0], p[1], p[2]}};
    default:
        break;
    }
    throw UnsupportedError("restrict: no variable-drop rule for family " + family_name(f));
}

std::vector<GaussTriple> necessary_gauss_triples(Family f, int n, const std::vector<Rat>& p) {
    require_arity(f, n, p);
    switch (f) {
    case Family::Gauss: return {{p[0], p[1], p[2]}};
    case Family::FD: {
        if (n == 1) return {{p[0], p[1], p[2]}};
        std::vector<GaussTriple> out;
        Rat a = p[0], c = p[n + 1];
        for (int i = 1; i <= n; ++i) out.push_back({a, p[i], c});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out.push_back({a, p[i] + p[j], c});
        return out;
    }
    case Family::FA: {
        if (n == 1) return {{p[0], p[1], p[2]}};
        std::vector<GaussTriple> out;
        Rat a = p[0];
        for (int i = 1; i <= n; ++i) out.push_back({a, p[i], p[n + i]});
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) out.push_back({a - p[n + j], p[i], p[n + i]});
        return out;
    }
    case Family::FC: {
        std::vector<GaussTriple> out;
        for (int i = 1; i <= n; ++i) out.push_back({p[0], p[1], p[1 + i]});
        return out;
    }
    case Family::G1:
        return {{p[0], p[1], p[0] + p[1] + p[2]}, {p[0], p[2], p[0] + p[1] + p[2]}};
    case Family::G3: return {};
    case Family::H1: return {{p[0], p[1], p[3]}, {p[1] - p[3], p[2], p[3] - p[0]}};
    case Family::H4:
        return {{p[0] / 2, (p[0] + 1) / 2, p[2]},
                {p[0], p[1], p[3]},
                {p[1], p[0] - 2 * p[2], p[3]}};
    case Family::H5: return {{p[0], p[1], p[2]}};
    case Family::FB:
    case Family::G2:
    case Family::H2:
    case Family::H3:
    case Family::H6:
    case Family::H7: {
        auto spec = transport_source(f, n);
        Adjugate adj = adjugate(spec->f);
        long long det = adj.det; // +-1
        IntMat finv(spec->f.size(), IntVec(spec->f.size()));
        for (size_t i = 0; i < finv.size(); ++i)
            for (size_t j = 0; j < finv.size(); ++j) finv[i][j] = adj.adj[i][j] * det;
        std::vector<Rat> alpha = alpha_from_classical(f, n, p);
        std::vector<Rat> src_alpha = apply_map(finv, alpha);
        std::vector<Rat> src_params = classical_from_alpha(spec->src, spec->src_n, src_alpha);
        return necessary_gauss_triples(spec->src, spec->src_n, src_params);
    }
    }
    return {};
}

Triangulation reference_triangulation(Family f, int n) {
    switch (f) {
    case Family::FA: {
        Triangulation t;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> v;
            for (int i = 0; i <= n; ++i) v.push_back(i);
            // Coordinate labels i in {n+2, ..., 2n+1}: bit k <-> label n+2+k.
            for (int k = 0; k < n; ++k) {
                int label = n + 2 + k;
                v.push_back(mask & (1 << k) ? n + label - 1 : label - 1);
            }
            std::sort(v.begin(), v.end());
            t.push_back(std::move(v));
        }
        return t;
    }
    case Family::FC: {
        Triangulation t;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> v{0, 1};
            for (int k = 0; k < n; ++k) {
                int label = 3 + k;
                v.push_back(mask & (1 << k) ? n + label - 1 : label - 1);
            }
            std::sort(v.begin(), v.end());
            t.push_back(std::move(v));
        }
        return t;
    }
    case Family::H1:
        return {{0, 1, 2, 3}, {0, 1, 2, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}};
    case Family::H4:
        return {{0, 1, 2, 3}, {0, 1, 2, 5}, {0, 1, 3, 4}, {0, 1, 4, 5}};
    default:
        return {};
    }
}

std::vector<IntVec> nonresonance_forms_classical(Family f, int n) {
    const GkzSystem& sys = family_system(f, n);
    const int arity = param_arity(f, n);
    // Row i of the parameter-to-alpha matrix.
    std::vector<IntVec> jac(sys.r, IntVec(arity, 0));
    for (int j = 0; j < arity; ++j) {
        std::vector<Rat> zero(arity, Rat(0)), probe(arity, Rat(0));
        probe[j] = 1;
        std::vector<Rat> a0 = alpha_from_classical(f, n, zero);
        std::vector<Rat> a1 = alpha_from_classical(f, n, probe);
        for (int i = 0; i < sys.r; ++i) jac[i][j] = rat_floor_ll(a1[i] - a0[i]);
    }
    std::set<IntVec> forms;
    for (const auto& m : sys.facets) {
        IntVec form(arity, 0);
        for (int j = 0; j < arity; ++j)
            for (int i = 0; i < sys.r; ++i) form[j] += m[i] * jac[i][j];
        form = content_normalize(std::move(form));
        for (long long c : form) {
            if (c > 0) break;
            if (c < 0) {
                for (auto& x : form) x = -x;
                break;
            }
        }
        forms.insert(std::move(form));
    }
    return {forms.begin(), forms.end()};
}

} // namespace hyperclass
