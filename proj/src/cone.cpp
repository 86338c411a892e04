#include "hyperclass/cone.hpp"

#include <algorithm>
#include <set>

#include "hyperclass/lp.hpp"

namespace hyperclass {

namespace {

// Extreme rays of the dual cone {x : v.x >= 0 for all v}, by the incremental
// double description method. Requires the v's to span R^r, which makes every
// intermediate cone pointed, so the combinatorial adjacency test is valid.
std::vector<IntVec> dual_rays(std::vector<IntVec> vecs, int r) {
    // Deterministic processing order.
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());

    // Seed with r linearly independent vectors.
    std::vector<IntVec> seed;
    std::vector<size_t> seed_idx;
    for (size_t i = 0; i < vecs.size() && seed.size() < static_cast<size_t>(r); ++i) {
        seed.push_back(vecs[i]);
        if (rank(seed) != static_cast<int>(seed.size())) {
            seed.pop_back();
        } else {
            seed_idx.push_back(i);
        }
    }
    if (seed.size() != static_cast<size_t>(r))
        throw ConeError("input does not span a full-dimensional cone");

    Adjugate a = adjugate(seed);
    long long sign = a.det > 0 ? 1 : -1;
    struct Ray {
        IntVec dir;
        std::vector<char> tight; // over processed constraints
    };
    std::vector<Ray> rays;
    for (int k = 0; k < r; ++k) {
        IntVec dir(r);
        for (int j = 0; j < r; ++j) dir[j] = sign * a.adj[j][k]; // column k of adj
        rays.push_back({content_normalize(std::move(dir)), {}});
    }

    std::vector<IntVec> processed;
    auto record_tightness = [&](Ray& ray) {
        ray.tight.clear();
        ray.tight.reserve(processed.size());
        for (const auto& v : processed) ray.tight.push_back(dot(v, ray.dir) == 0);
    };
    for (size_t i = 0; i < seed_idx.size(); ++i) processed.push_back(vecs[seed_idx[i]]);
    for (auto& ray : rays) record_tightness(ray);

    for (size_t i = 0; i < vecs.size(); ++i) {
        if (std::find(seed_idx.begin(), seed_idx.end(), i) != seed_idx.end()) continue;
        const IntVec& v = vecs[i];
        std::vector<long long> val(rays.size());
        bool any_negative = false;
        for (size_t k = 0; k < rays.size(); ++k) {
            val[k] = dot(v, rays[k].dir);
            if (val[k] < 0) any_negative = true;
        }
        if (!any_negative) {
            processed.push_back(v);
            for (size_t k = 0; k < rays.size(); ++k) rays[k].tight.push_back(val[k] == 0);
            continue;
        }
        auto adjacent = [&](size_t p, size_t n) {
            for (size_t w = 0; w < rays.size(); ++w) {
                if (w == p || w == n) continue;
                bool contains = true;
                for (size_t c = 0; c < processed.size(); ++c) {
                    if (rays[p].tight[c] && rays[n].tight[c] && !rays[w].tight[c]) {
                        contains = false;
                        break;
                    }
                }
                if (contains) return false;
            }
            return true;
        };
        std::vector<Ray> next;
        for (size_t k = 0; k < rays.size(); ++k)
            if (val[k] >= 0) next.push_back(rays[k]);
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t n = 0; n < rays.size(); ++n) {
                if (val[n] >= 0 || !adjacent(p, n)) continue;
                IntVec dir(r);
                for (int j = 0; j < r; ++j)
                    dir[j] = val[p] * rays[n].dir[j] - val[n] * rays[p].dir[j];
                next.push_back({content_normalize(std::move(dir)), {}});
            }
        }
        processed.push_back(v);
        rays = std::move(next);
        for (auto& ray : rays) record_tightness(ray);
    }

    std::vector<IntVec> out;
    out.reserve(rays.size());
    for (auto& ray : rays) out.push_back(std::move(ray.dir));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int common_dim(const std::vector<IntVec>& vecs, const char* who) {
    if (vecs.empty()) throw ConeError(std::string(who) + ": empty input");
    int r = static_cast<int>(vecs[0].size());
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != r)
            throw InputError(std::string(who) + ": dimension mismatch");
        if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
            throw InputError(std::string(who) + ": zero vector");
    }
    return r;
}

} // namespace

bool cone_is_pointed(const std::vector<IntVec>& generators) {
    // Pointed iff no nonzero nonnegative combination of generators is zero.
    const int n = static_cast<int>(generators.size());
    const int r = static_cast<int>(generators[0].size());
    std::vector<LinConstraint> cons;
    for (int coord = 0; coord < r; ++coord) {
        LinConstraint c;
        c.coef.resize(n);
        for (int i = 0; i < n; ++i) c.coef[i] = Rat(generators[i][coord]);
        c.rel = Rel::Eq;
        c.rhs = 0;
        cons.push_back(std::move(c));
    }
    for (int i = 0; i < n; ++i) {
        LinConstraint lo; lo.coef.assign(n, Rat(0)); lo.coef[i] = 1; lo.rel = Rel::Ge; lo.rhs = 0;
        LinConstraint hi; hi.coef.assign(n, Rat(0)); hi.coef[i] = 1; hi.rel = Rel::Le; hi.rhs = 1;
        cons.push_back(std::move(lo));
        cons.push_back(std::move(hi));
    }
    std::vector<Rat> obj(n, Rat(1));
    LpResult res = lp_maximize(n, cons, obj);
    return res.status == LpStatus::Optimal && res.value == 0;
}

std::vector<IntVec> cone_facets(const std::vector<IntVec>& generators) {
    int r = common_dim(generators, "cone_facets");
    if (rank(generators) != r)
        throw ConeError("cone_facets: generators are not full-dimensional");
    if (!cone_is_pointed(generators))
        throw ConeError("cone_facets: cone is not pointed");
    return dual_rays(generators, r);
}

std::vector<IntVec> cone_rays(const std::vector<IntVec>& forms) {
    int r = common_dim(forms, "cone_rays");
    if (rank(forms) != r)
        throw ConeError("cone_rays: forms do not span the dual space");
    return dual_rays(forms, r);
}

bool in_cone_hull(const std::vector<IntVec>& generators, const std::vector<Rat>& x) {
    const int n = static_cast<int>(generators.size());
    const int r = static_cast<int>(generators[0].size());
    if (static_cast<int>(x.size()) != r) throw InputError("in_cone_hull: dimension mismatch");
    InequalitySystem sys;
    sys.num_vars = n;
    for (int coord = 0; coord < r; ++coord) {
        std::vector<Rat> coef(n);
        for (int i = 0; i < n; ++i) coef[i] = Rat(generators[i][coord]);
        sys.add(std::move(coef), Rel::Eq, x[coord]);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> coef(n, Rat(0));
        coef[i] = 1;
        sys.add(std::move(coef), Rel::Ge, 0);
    }
    return solve_mixed_inequalities(sys).has_value();
}

} // namespace hyperclass
