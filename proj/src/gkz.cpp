#include "hyperclass/gkz.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperclass/lp.hpp"

namespace hyperclass {

namespace {

// Integer form vanishing on the given r-1 independent vectors, content 1.
IntVec wall_form(const std::vector<IntVec>& wall, int r) {
    // Right kernel of the wall matrix = left kernel of its transpose.
    std::vector<IntVec> cols(r, IntVec(wall.size()));
    for (size_t i = 0; i < wall.size(); ++i)
        for (int j = 0; j < r; ++j) cols[j][static_cast<int>(i)] = wall[i][j];
    auto basis = integer_kernel_basis(cols, static_cast<int>(wall.size()));
    if (basis.size() != 1) throw Error("wall_form: wall is degenerate");
    return content_normalize(basis[0]);
}

} // namespace

std::vector<IntVec> lattice_of_relations(const std::vector<IntVec>& points) {
    if (points.empty()) throw InputError("lattice_of_relations: empty configuration");
    const int r = static_cast<int>(points[0].size());
    if (!integer_span_is_full(points, r))
        throw SpanError("points do not span the full lattice");
    return integer_kernel_basis(points, r);
}

long long normalized_volume(const std::vector<IntVec>& points, const IntVec& h) {
    const int r = static_cast<int>(h.size());
    for (const auto& p : points)
        if (dot(h, p) != 1)
            throw InputError("normalized_volume: point off the h = 1 hyperplane");

    // Seed simplex: first r linearly independent points.
    std::vector<int> seed;
    std::vector<IntVec> seed_vecs;
    for (int i = 0; i < static_cast<int>(points.size()) && rank(seed_vecs) < r; ++i) {
        seed_vecs.push_back(points[i]);
        if (rank(seed_vecs) == static_cast<int>(seed_vecs.size()))
            seed.push_back(i);
        else
            seed_vecs.pop_back();
    }
    if (static_cast<int>(seed.size()) != r)
        throw ConeError("normalized_volume: configuration is not full-dimensional");

    std::vector<std::vector<int>> simplices{seed};
    auto walls_of = [&](const std::vector<int>& s) {
        std::vector<std::pair<std::vector<int>, int>> walls; // (wall, opposite vertex)
        for (size_t k = 0; k < s.size(); ++k) {
            std::vector<int> w;
            for (size_t l = 0; l < s.size(); ++l)
                if (l != k) w.push_back(s[l]);
            std::sort(w.begin(), w.end());
            walls.push_back({std::move(w), s[k]});
        }
        return walls;
    };

    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        if (std::find(seed.begin(), seed.end(), i) != seed.end()) continue;
        // Boundary walls = walls owned by exactly one placed simplex.
        std::map<std::vector<int>, std::vector<int>> owner; // wall -> opposite vertices
        for (const auto& s : simplices)
            for (auto& [w, opp] : walls_of(s)) owner[w].push_back(opp);
        std::vector<std::vector<int>> added;
        for (const auto& [w, opps] : owner) {
            if (opps.size() > 2) throw Error("normalized_volume: wall shared three ways");
            if (opps.size() != 1) continue;
            std::vector<IntVec> wall_vecs;
            for (int idx : w) wall_vecs.push_back(points[idx]);
            IntVec m = wall_form(wall_vecs, r);
            if (dot(m, points[opps[0]]) < 0)
                for (auto& c : m) c = -c;
            if (dot(m, points[i]) < 0) {
                std::vector<int> s = w;
                s.push_back(i);
                added.push_back(std::move(s));
            }
        }
        for (auto& s : added) simplices.push_back(std::move(s));
    }

    long long vol = 0;
    for (const auto& s : simplices) {
        IntMat m;
        for (int idx : s) m.push_back(points[idx]);
        long long d = determinant(m);
        vol += d < 0 ? -d : d;
    }
    return vol;
}

GkzSystem build_system(std::vector<IntVec> points) {
    GkzSystem sys;
    if (points.empty()) throw InputError("build_system: empty configuration");
    sys.r = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != sys.r)
            throw InputError("build_system: inconsistent point dimensions");
    {
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("build_system: duplicate point");
    }
    sys.points = std::move(points);
    sys.num_points = static_cast<int>(sys.points.size());

    if (!integer_span_is_full(sys.points, sys.r))
        throw SpanError("build_system: points do not span the full lattice");

    // Grading form: unique because the points span R^r; verify on every point.
    std::vector<IntVec> indep;
    std::vector<int> indep_idx;
    for (int i = 0; i < sys.num_points && static_cast<int>(indep.size()) < sys.r; ++i) {
        indep.push_back(sys.points[i]);
        if (rank(indep) == static_cast<int>(indep.size()))
            indep_idx.push_back(i);
        else
            indep.pop_back();
    }
    std::vector<Rat> ones(sys.r, Rat(1));
    std::vector<Rat> h_rat = solve_square(indep, ones);
    sys.h.resize(sys.r);
    for (int j = 0; j < sys.r; ++j) {
        if (!is_integer(h_rat[j]))
            throw GradingFormError("build_system: grading form is not integral");
        sys.h[j] = rat_floor_ll(h_rat[j]);
    }
    for (const auto& p : sys.points)
        if (dot(sys.h, p) != 1)
            throw GradingFormError("build_system: no linear form equals 1 on all points");

    sys.facets = cone_facets(sys.points);
    sys.lattice_basis = integer_kernel_basis(sys.points, sys.r);
    sys.lattice_touches_all = true;
    for (int i = 0; i < sys.num_points; ++i) {
        bool touched = false;
        for (const auto& l : sys.lattice_basis) touched = touched || l[i] != 0;
        if (!touched) sys.lattice_touches_all = false;
    }

    sys.volume = normalized_volume(sys.points, sys.h);

    const int d = sys.facet_count();
    sys.facet_on_points.assign(d, IntVec(sys.num_points));
    sys.facet_max_on_points.assign(d, 0);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < sys.num_points; ++i) {
            sys.facet_on_points[j][i] = dot(sys.facets[j], sys.points[i]);
            sys.facet_max_on_points[j] =
                std::max(sys.facet_max_on_points[j], sys.facet_on_points[j][i]);
        }
    }

    // Invertible facet submatrix used to seed enumeration boxes.
    std::vector<IntVec> rows;
    for (int j = 0; j < d && static_cast<int>(rows.size()) < sys.r; ++j) {
        rows.push_back(sys.facets[j]);
        if (rank(rows) == static_cast<int>(rows.size()))
            sys.box_rows.push_back(j);
        else
            rows.pop_back();
    }
    if (static_cast<int>(sys.box_rows.size()) != sys.r)
        throw ConeError("build_system: facet forms do not span the dual space");
    Adjugate adj = adjugate(rows);
    sys.box_det = adj.det;
    sys.box_adj = adj.adj;
    if (sys.box_det < 0) {
        sys.box_det = -sys.box_det;
        for (auto& row : sys.box_adj)
            for (auto& x : row) x = -x;
    }
    return sys;
}

bool is_nonresonant(const GkzSystem& sys, const std::vector<Rat>& alpha) {
    return resonant_facets(sys, alpha).empty();
}

std::vector<int> resonant_facets(const GkzSystem& sys, const std::vector<Rat>& alpha) {
    if (static_cast<int>(alpha.size()) != sys.r)
        throw InputError("is_nonresonant: alpha dimension mismatch");
    std::vector<int> bad;
    for (int j = 0; j < sys.facet_count(); ++j)
        if (is_integer(dot_rat(sys.facets[j], alpha))) bad.push_back(j);
    return bad;
}

IntVec apply_map(const IntMat& f, const IntVec& x) {
    IntVec y(f.size());
    for (size_t i = 0; i < f.size(); ++i) y[i] = dot(f[i], x);
    return y;
}

std::vector<Rat> apply_map(const IntMat& f, const std::vector<Rat>& x) {
    std::vector<Rat> y(f.size());
    for (size_t i = 0; i < f.size(); ++i) y[i] = dot_rat(f[i], x);
    return y;
}

std::pair<GkzSystem, std::vector<Rat>> transport(const IntMat& f, const GkzSystem& src,
                                                 const std::vector<Rat>& alpha) {
    long long det = determinant(f);
    if (det != 1 && det != -1)
        throw InputError("transport: map is not unimodular");
    std::vector<IntVec> image;
    image.reserve(src.points.size());
    for (const auto& p : src.points) image.push_back(apply_map(f, p));
    GkzSystem dst = build_system(std::move(image));

    // Facets must transform contravariantly: {m o f^-1} = facets of the image.
    Adjugate adj = adjugate(f);
    std::set<IntVec> expected;
    for (const auto& m : src.facets) {
        IntVec composed(dst.r, 0);
        for (int j = 0; j < dst.r; ++j) {
            long long s = 0;
            for (int i = 0; i < src.r; ++i) s += m[i] * adj.adj[i][j] * det; // f^-1 = adj/det
            composed[j] = s;
        }
        expected.insert(content_normalize(std::move(composed)));
    }
    std::set<IntVec> actual(dst.facets.begin(), dst.facets.end());
    if (expected != actual)
        throw Error("transport: transported facets disagree with recomputed facets");
    return {std::move(dst), apply_map(f, alpha)};
}

TriangulationReport verify_triangulation(const GkzSystem& sys, const Triangulation& t) {
    TriangulationReport rep;
    const int r = sys.r;
    if (t.empty()) {
        rep.detail = "empty triangulation";
        return rep;
    }
    std::vector<long long> dets;
    rep.unimodular = true;
    for (size_t s = 0; s < t.size(); ++s) {
        if (static_cast<int>(t[s].size()) != r) {
            rep.detail = "simplex " + std::to_string(s) + " does not have r vertices";
            return rep;
        }
        IntMat m;
        for (int idx : t[s]) {
            if (idx < 0 || idx >= sys.num_points) {
                rep.detail = "simplex " + std::to_string(s) + " has an out-of-range vertex";
                return rep;
            }
            m.push_back(sys.points[idx]);
        }
        long long d = determinant(m);
        if (d == 0) {
            rep.detail = "simplex " + std::to_string(s) + " is degenerate";
            return rep;
        }
        dets.push_back(d < 0 ? -d : d);
        if (dets.back() != 1) rep.unimodular = false;
        rep.volume += dets.back();
    }
    if (!rep.unimodular) {
        rep.detail = "a simplex has determinant of absolute value > 1";
        return rep;
    }

    std::set<int> covered;
    for (const auto& s : t) covered.insert(s.begin(), s.end());
    if (static_cast<int>(covered.size()) != sys.num_points) {
        for (int i = 0; i < sys.num_points; ++i)
            if (!covered.count(i)) {
                rep.detail = "union coverage fails: point " + std::to_string(i) +
                             " is in no simplex";
                return rep;
            }
    }

    // Facet forms of each simplicial cone (inward, value |det| on the opposite vertex).
    std::vector<std::vector<IntVec>> simplex_forms(t.size());
    for (size_t s = 0; s < t.size(); ++s) {
        IntMat m;
        for (int idx : t[s]) m.push_back(sys.points[idx]);
        Adjugate adj = adjugate(m);
        long long sign = adj.det > 0 ? 1 : -1;
        for (int k = 0; k < r; ++k) {
            IntVec form(r);
            for (int j = 0; j < r; ++j) form[j] = sign * adj.adj[j][k];
            simplex_forms[s].push_back(content_normalize(std::move(form)));
        }
    }

    // Pairwise: C(V_i) cap C(V_j) must lie inside C(V_i cap V_j).
    for (size_t i = 0; i < t.size(); ++i) {
        for (size_t j = i + 1; j < t.size(); ++j) {
            std::vector<IntVec> forms = simplex_forms[i];
            forms.insert(forms.end(), simplex_forms[j].begin(), simplex_forms[j].end());
            std::vector<IntVec> rays = cone_rays(forms);
            std::vector<int> shared;
            std::set_intersection(t[i].begin(), t[i].end(), t[j].begin(), t[j].end(),
                                  std::back_inserter(shared));
            std::vector<IntVec> shared_vecs;
            for (int idx : shared) shared_vecs.push_back(sys.points[idx]);
            for (const auto& ray : rays) {
                std::vector<Rat> x(ray.begin(), ray.end());
                bool inside = !shared_vecs.empty() && in_cone_hull(shared_vecs, x);
                if (!inside) {
                    rep.detail = "intersection of simplices " + std::to_string(i) + " and " +
                                 std::to_string(j) + " leaves their shared face";
                    return rep;
                }
            }
        }
    }

    // Convexity of the union: every simplex wall is either a facet of the
    // global cone or shared with a neighbor on the other side.
    std::set<IntVec> global(sys.facets.begin(), sys.facets.end());
    for (size_t s = 0; s < t.size(); ++s) {
        for (int k = 0; k < r; ++k) {
            const IntVec& m = simplex_forms[s][k];
            bool outer = true;
            for (const auto& p : sys.points)
                if (dot(m, p) < 0) outer = false;
            if (outer) {
                if (!global.count(m)) {
                    rep.detail = "wall of simplex " + std::to_string(s) +
                                 " is nonnegative on A but is not a global facet";
                    return rep;
                }
                continue;
            }
            std::vector<int> wall;
            for (int l = 0; l < r; ++l)
                if (l != k) wall.push_back(t[s][l]);
            std::sort(wall.begin(), wall.end());
            bool matched = false;
            for (size_t o = 0; o < t.size() && !matched; ++o) {
                if (o == s) continue;
                if (!std::includes(t[o].begin(), t[o].end(), wall.begin(), wall.end()))
                    continue;
                for (int idx : t[o])
                    if (std::find(wall.begin(), wall.end(), idx) == wall.end() &&
                        dot(m, sys.points[idx]) < 0)
                        matched = true;
            }
            if (!matched) {
                rep.detail = "interior wall of simplex " + std::to_string(s) +
                             " has no neighbor across it";
                return rep;
            }
        }
    }

    rep.ok = true;
    rep.saturated = true;
    return rep;
}

namespace {

struct EnumRow {
    IntVec coef;
    long long lo;
    long long hi;
};

long long div_floor(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
long long div_ceil(long long a, long long b) { return -div_floor(-a, b); }

} // namespace

std::vector<IntVec> lattice_points(const GkzSystem& sys, const std::vector<long long>& facet_lb,
                                   const std::vector<long long>& facet_ub, long long h_lb,
                                   long long h_ub) {
    const int r = sys.r;
    const int d = sys.facet_count();
    if (static_cast<int>(facet_lb.size()) != d || static_cast<int>(facet_ub.size()) != d)
        throw InputError("lattice_points: bound arity mismatch");

    std::vector<EnumRow> rows;
    rows.reserve(d + 1);
    for (int j = 0; j < d; ++j) rows.push_back({sys.facets[j], facet_lb[j], facet_ub[j]});
    rows.push_back({sys.h, h_lb, h_ub});

    // Seed per-coordinate bounds through the invertible facet submatrix:
    // x = adj * y / det with y_l the value of the l-th selected facet form.
    std::vector<long long> lo(r), hi(r);
    for (int i = 0; i < r; ++i) {
        long long smin = 0, smax = 0;
        for (int l = 0; l < r; ++l) {
            int row = sys.box_rows[l];
            long long a = sys.box_adj[i][l];
            smin += std::min(a * facet_lb[row], a * facet_ub[row]);
            smax += std::max(a * facet_lb[row], a * facet_ub[row]);
        }
        lo[i] = div_ceil(smin, sys.box_det);
        hi[i] = div_floor(smax, sys.box_det);
        if (lo[i] > hi[i]) return {};
    }

    // Tighten to a fixpoint with single-row interval propagation.
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool changed = false;
        for (const auto& row : rows) {
            long long rmin = 0, rmax = 0;
            for (int i = 0; i < r; ++i) {
                rmin += std::min(row.coef[i] * lo[i], row.coef[i] * hi[i]);
                rmax += std::max(row.coef[i] * lo[i], row.coef[i] * hi[i]);
            }
            if (rmin > row.hi || rmax < row.lo) return {};
            for (int i = 0; i < r; ++i) {
                long long c = row.coef[i];
                if (c == 0) continue;
                long long imin = std::min(c * lo[i], c * hi[i]);
                long long imax = std::max(c * lo[i], c * hi[i]);
                long long rest_min = rmin - imin, rest_max = rmax - imax;
                long long vlo, vhi;
                if (c > 0) {
                    vlo = div_ceil(row.lo - rest_max, c);
                    vhi = div_floor(row.hi - rest_min, c);
                } else {
                    vlo = div_ceil(row.hi - rest_min, c);
                    vhi = div_floor(row.lo - rest_max, c);
                }
                if (vlo > lo[i]) { lo[i] = vlo; changed = true; }
                if (vhi < hi[i]) { hi[i] = vhi; changed = true; }
                if (lo[i] > hi[i]) return {};
            }
        }
        if (!changed) break;
    }

    // Narrowest coordinates first.
    std::vector<int> order(r);
    for (int i = 0; i < r; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        long long wa = hi[a] - lo[a], wb = hi[b] - lo[b];
        return wa != wb ? wa < wb : a < b;
    });

    // Static suffix extremes per row and depth, over the root box.
    const int nrows = static_cast<int>(rows.size());
    std::vector<std::vector<long long>> sfx_min(nrows, std::vector<long long>(r + 1, 0));
    std::vector<std::vector<long long>> sfx_max(nrows, std::vector<long long>(r + 1, 0));
    for (int q = 0; q < nrows; ++q) {
        for (int depth = r - 1; depth >= 0; --depth) {
            int v = order[depth];
            long long c = rows[q].coef[v];
            sfx_min[q][depth] = sfx_min[q][depth + 1] + std::min(c * lo[v], c * hi[v]);
            sfx_max[q][depth] = sfx_max[q][depth + 1] + std::max(c * lo[v], c * hi[v]);
        }
    }

    std::vector<IntVec> out;
    IntVec x(r, 0);
    std::vector<long long> partial(nrows, 0);
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == r) {
            for (int q = 0; q < nrows; ++q)
                if (partial[q] < rows[q].lo || partial[q] > rows[q].hi) return;
            out.push_back(x);
            return;
        }
        int v = order[depth];
        long long vlo = lo[v], vhi = hi[v];
        for (int q = 0; q < nrows; ++q) {
            long long c = rows[q].coef[v];
            if (c == 0) {
                // Prune on rows this variable cannot influence.
                if (partial[q] + sfx_min[q][depth] > rows[q].hi) return;
                if (partial[q] + sfx_max[q][depth] < rows[q].lo) return;
                continue;
            }
            long long rest_min = sfx_min[q][depth + 1], rest_max = sfx_max[q][depth + 1];
            long long a, b;
            if (c > 0) {
                a = div_ceil(rows[q].lo - partial[q] - rest_max, c);
                b = div_floor(rows[q].hi - partial[q] - rest_min, c);
            } else {
                a = div_ceil(rows[q].hi - partial[q] - rest_min, c);
                b = div_floor(rows[q].lo - partial[q] - rest_max, c);
            }
            vlo = std::max(vlo, a);
            vhi = std::min(vhi, b);
            if (vlo > vhi) return;
        }
        for (long long val = vlo; val <= vhi; ++val) {
            x[v] = val;
            for (int q = 0; q < nrows; ++q) partial[q] += rows[q].coef[v] * val;
            self(self, depth + 1);
            for (int q = 0; q < nrows; ++q) partial[q] -= rows[q].coef[v] * val;
        }
        x[v] = 0;
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool bounded_saturation_check(const GkzSystem& sys, long long hmax) {
    std::vector<long long> lb(sys.facet_count(), 0), ub(sys.facet_count());
    for (int j = 0; j < sys.facet_count(); ++j)
        ub[j] = sys.facet_max_on_points[j] * hmax;
    std::vector<IntVec> pts = lattice_points(sys, lb, ub, 0, hmax);
    for (const auto& x : pts) {
        long long level = dot(sys.h, x);
        // Representable as a sum of exactly `level` points (with repetition)?
        auto representable = [&](auto&& self, const IntVec& v, long long budget,
                                 int from) -> bool {
            if (std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; }))
                return true;
            if (budget == 0) return false;
            for (int i = from; i < sys.num_points; ++i) {
                IntVec w(v.size());
                for (size_t c = 0; c < v.size(); ++c) w[c] = v[c] - sys.points[i][c];
                if (self(self, w, budget - 1, i)) return true;
            }
            return false;
        };
        if (!representable(representable, x, level, 0)) return false;
    }
    return true;
}

} // namespace hyperclass
