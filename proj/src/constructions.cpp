#include "gcmv/constructions.hpp"

#include "gcmv/errors.hpp"
#include "gcmv/subsets.hpp"
#include "gcmv/symbolic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace gcmv {

bool proj_equal(const ProjectivePoint& a, const ProjectivePoint& b) {
    return proportionality(a, b).has_value();
}

std::vector<ProjectivePoint> dedup_points(const std::vector<ProjectivePoint>& points) {
    std::vector<ProjectivePoint> out;
    for (const auto& p : points) {
        bool seen = false;
        for (const auto& q : out)
            if (proj_equal(p, q)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(p);
    }
    return out;
}

ProjectivePoint conic_point(const Scalar& t) { return {Scalar(1), t, t * t}; }

ProjectivePoint moment_point(const Scalar& t, int d) {
    if (d < 2) throw std::invalid_argument("moment_point: degree must be at least 2");
    ProjectivePoint p;
    p.reserve(static_cast<std::size_t>(d) + 1);
    Scalar pow(1);
    for (int i = 0; i <= d; ++i) {
        p.push_back(pow);
        pow *= t;
    }
    return p;
}

Extensor line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    Extensor l = join(Extensor(static_cast<int>(p.size()), {p}),
                      Extensor(static_cast<int>(q.size()), {q}));
    if (l.is_zero()) throw DegeneracyError("line_through: coincident points");
    return l;
}

Extensor line_intersection(const Extensor& a, const Extensor& b) { return meet(a, b); }

namespace {

// Compares the configuration's dependent r-subsets against the expected list
// and reports both directions of any mismatch.
void validate_matroid(const PointConfig& c, const std::vector<std::vector<int>>& expected,
                      const std::string& what) {
    Matroid m = matroid_from_config(c);
    std::set<std::vector<int>> actual_set;
    for (auto& nb : nonbases(m)) actual_set.insert(nb);
    std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
    if (actual_set == expected_set) return;

    std::vector<std::vector<int>> offending;
    std::ostringstream os;
    os << what << ": unexpected incidence pattern;";
    bool first = true;
    for (const auto& s : actual_set)
        if (!expected_set.contains(s)) {
            offending.push_back(s);
            if (first) os << " extra dependent sets:";
            first = false;
            os << " {";
            for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
            os << "}";
        }
    first = true;
    for (const auto& s : expected_set)
        if (!actual_set.contains(s)) {
            offending.push_back(s);
            if (first) os << " missing dependent sets:";
            first = false;
            os << " {";
            for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
            os << "}";
        }
    throw DegeneracyError(os.str(), offending);
}

std::vector<Scalar> point_on_line(const ProjectivePoint& direction, const ProjectivePoint& apex,
                                  const Scalar& t) {
    std::vector<Scalar> p(direction.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = direction[i] + t * apex[i];
    return p;
}

ProjectivePoint extensor_point(const Extensor& e, const std::string& what) {
    if (e.step() != 1 || e.is_zero())
        throw DegeneracyError(what + ": expected a well-defined intersection point");
    return e.plucker();
}

} // namespace

const std::vector<std::vector<int>> kPencilNonbases{{1, 2, 7}, {3, 4, 7}, {5, 6, 7}};

const std::vector<std::vector<int>> kPascalNonbases{{1, 2, 7}, {1, 6, 9}, {2, 3, 8},
                                                    {3, 4, 9}, {4, 5, 7}, {5, 6, 8},
                                                    {7, 8, 9}};

PointConfig build_pencil(const PencilSpec& spec) {
    PointConfig c(3, 7);
    for (int line = 0; line < 3; ++line) {
        const auto& dir = spec.directions[static_cast<std::size_t>(line)];
        if (dir.size() != 3 || spec.apex.size() != 3)
            throw DimensionError("build_pencil: points live in rank 3");
        c.set_column(2 * line + 1, point_on_line(dir, spec.apex, spec.params[static_cast<std::size_t>(2 * line)]));
        c.set_column(2 * line + 2, point_on_line(dir, spec.apex, spec.params[static_cast<std::size_t>(2 * line + 1)]));
    }
    c.set_column(7, spec.apex);
    validate_matroid(c, kPencilNonbases, "build_pencil");
    return c;
}

PointConfig build_pencil(const std::array<Scalar, 6>& params) {
    PencilSpec spec;
    spec.params = params;
    return build_pencil(spec);
}

PointConfig build_pascal(const std::array<Scalar, 6>& t) {
    std::vector<Scalar> ts(t.begin(), t.end());
    MorePointsConfig mp = build_more_points(ts);
    if (mp.q != 3)
        throw DegeneracyError("build_pascal: auxiliary points collapsed");
    return mp.config;
}

std::vector<std::vector<int>> MorePointsConfig::expected_nonbases() const {
    std::set<std::vector<int>> exp;
    auto add = [&exp](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        exp.insert(std::move(s));
    };
    int a1 = aux_labels.front()[0];
    add({1, 2, a1});
    add({4, 5, a1});
    // All auxiliary points 23^5i lie on the line 23, and all 34^i1 on 34.
    std::vector<int> on23{2, 3}, on34{3, 4};
    for (std::size_t idx = 0; idx < aux_labels.size(); ++idx) {
        int i = 6 + static_cast<int>(idx);
        on23.push_back(aux_labels[idx][1]);
        on34.push_back(aux_labels[idx][2]);
        add({5, i, aux_labels[idx][1]});
        add({1, i, aux_labels[idx][2]});
        add({a1, aux_labels[idx][1], aux_labels[idx][2]}); // the Pascal line of the hexagon
    }
    for (const auto& line : {on23, on34}) {
        std::vector<int> sorted = line;
        std::sort(sorted.begin(), sorted.end());
        int sz = static_cast<int>(sorted.size());
        for (const auto& pick : k_subsets(sz, 3))
            add({sorted[static_cast<std::size_t>(pick[0] - 1)],
                 sorted[static_cast<std::size_t>(pick[1] - 1)],
                 sorted[static_cast<std::size_t>(pick[2] - 1)]});
    }
    return {exp.begin(), exp.end()};
}

MorePointsConfig build_more_points(const std::vector<Scalar>& t) {
    const int n = static_cast<int>(t.size());
    if (n < 6) throw std::invalid_argument("build_more_points: need at least 6 parameters");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
                throw DegeneracyError("build_more_points: repeated conic parameter");

    std::vector<ProjectivePoint> originals;
    for (const Scalar& ti : t) originals.push_back(conic_point(ti));

    auto pt = [&](int label) { return Extensor(3, {originals[static_cast<std::size_t>(label - 1)]}); };
    auto line = [&](int a, int b) { return join(pt(a), pt(b)); };

    // Q_i1 does not depend on i; Q_i2 and Q_i3 do.
    std::vector<ProjectivePoint> aux_raw;
    for (int i = 6; i <= n; ++i) {
        aux_raw.push_back(extensor_point(meet(line(1, 2), line(4, 5)), "build_more_points"));
        aux_raw.push_back(extensor_point(meet(line(2, 3), line(5, i)), "build_more_points"));
        aux_raw.push_back(extensor_point(meet(line(3, 4), line(i, 1)), "build_more_points"));
    }

    std::vector<ProjectivePoint> aux = dedup_points(aux_raw);
    MorePointsConfig out;
    out.n_original = n;
    out.q = static_cast<int>(aux.size());
    for (std::size_t raw = 0; raw < aux_raw.size(); raw += 3) {
        std::array<int, 3> labels{};
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t a = 0; a < aux.size(); ++a)
                if (proj_equal(aux_raw[raw + j], aux[a])) {
                    labels[j] = n + static_cast<int>(a) + 1;
                    break;
                }
        }
        out.aux_labels.push_back(labels);
    }

    out.config = PointConfig(3, n + out.q);
    for (int i = 0; i < n; ++i)
        out.config.set_column(i + 1, originals[static_cast<std::size_t>(i)], ColumnKind::original);
    for (int a = 0; a < out.q; ++a)
        out.config.set_column(n + a + 1, aux[static_cast<std::size_t>(a)], ColumnKind::auxiliary);

    validate_matroid(out.config, out.expected_nonbases(), "build_more_points");
    return out;
}

namespace {

struct CsRaw {
    CsConfig cs;
    std::vector<int> dedup_pattern; // raw auxiliary index -> config label
};

CsRaw build_cs_raw(int d, const std::vector<Scalar>& t) {
    const int r = d + 1;
    const int n0 = d + 4;
    if (static_cast<int>(t.size()) != n0)
        throw std::invalid_argument("build_caminata_schaffler: need d+4 parameters");
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j)
            if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
                throw DegeneracyError("build_caminata_schaffler: repeated curve parameter");

    std::vector<ProjectivePoint> originals;
    for (const Scalar& ti : t) originals.push_back(moment_point(ti, d));
    auto pt = [&](int label) { return Extensor(r, {originals[static_cast<std::size_t>(label - 1)]}); };

    CsRaw raw;
    raw.cs.d = d;
    std::vector<ProjectivePoint> aux_raw;

    for (const auto& lambda : k_subsets(n0, 6)) {
        std::vector<int> complement;
        for (int x = 1; x <= n0; ++x)
            if (!std::binary_search(lambda.begin(), lambda.end(), x)) complement.push_back(x);

        Extensor h = Extensor::scalar(r, Scalar(1));
        for (int x : complement) h = join(h, pt(x));

        auto edge_meet = [&](int a, int b, int c0, int c1) {
            Extensor hyperplane = join(join(pt(c0), pt(c1)), h);
            return meet(join(pt(a), pt(b)), hyperplane);
        };
        const auto& l = lambda;
        Extensor a1 = edge_meet(l[0], l[1], l[3], l[4]);
        Extensor a2 = edge_meet(l[1], l[2], l[4], l[5]);
        Extensor a3 = edge_meet(l[2], l[3], l[5], l[0]);
        aux_raw.push_back(extensor_point(a1, "build_caminata_schaffler"));
        aux_raw.push_back(extensor_point(a2, "build_caminata_schaffler"));
        aux_raw.push_back(extensor_point(a3, "build_caminata_schaffler"));

        auto atom = [](int x) { return GcExpression::atom(x); };
        auto edge_expr = [&](int a, int b, int c0, int c1) {
            GcExpression plane = GcExpression::join(atom(c0), atom(c1));
            for (int x : complement) plane = GcExpression::join(plane, atom(x));
            return GcExpression::meet(GcExpression::join(atom(a), atom(b)), plane);
        };
        GcExpression expr = GcExpression::join(
            GcExpression::join(edge_expr(l[0], l[1], l[3], l[4]),
                               edge_expr(l[1], l[2], l[4], l[5])),
            edge_expr(l[2], l[3], l[5], l[0]));
        for (int x : complement) expr = GcExpression::join(expr, atom(x));

        raw.cs.lambdas.push_back(lambda);
        raw.cs.expressions.push_back(expr);
    }

    std::vector<ProjectivePoint> aux = dedup_points(aux_raw);
    raw.cs.q = static_cast<int>(aux.size());
    for (const auto& p : aux_raw) {
        for (std::size_t a = 0; a < aux.size(); ++a)
            if (proj_equal(p, aux[a])) {
                raw.dedup_pattern.push_back(n0 + static_cast<int>(a) + 1);
                break;
            }
    }
    for (std::size_t li = 0; li < raw.cs.lambdas.size(); ++li)
        raw.cs.aux_labels.push_back({raw.dedup_pattern[3 * li], raw.dedup_pattern[3 * li + 1],
                                     raw.dedup_pattern[3 * li + 2]});

    raw.cs.config = PointConfig(r, n0 + raw.cs.q);
    for (int i = 0; i < n0; ++i)
        raw.cs.config.set_column(i + 1, originals[static_cast<std::size_t>(i)], ColumnKind::original);
    for (int a = 0; a < raw.cs.q; ++a)
        raw.cs.config.set_column(n0 + a + 1, aux[static_cast<std::size_t>(a)], ColumnKind::auxiliary);
    return raw;
}

// The generic matroid and dedup pattern of the construction, agreed on by two
// fixed reference draws. Cached per degree.
struct CsReference {
    std::vector<int> dedup_pattern;
    Matroid matroid;
};

const CsReference& cs_reference(int d) {
    static std::map<int, CsReference> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::vector<Scalar> t1, t2;
    for (int i = 1; i <= d + 4; ++i) {
        t1.emplace_back(i);
        t2.emplace_back(i % 2 == 1 ? (i + 1) / 2 : -(i / 2));
    }
    CsRaw ref1 = build_cs_raw(d, t1);
    CsRaw ref2 = build_cs_raw(d, t2);
    Matroid m1 = matroid_from_config(ref1.cs.config);
    Matroid m2 = matroid_from_config(ref2.cs.config);
    if (ref1.dedup_pattern != ref2.dedup_pattern || !same_matroid(m1, m2))
        throw std::logic_error("cs_reference: internal reference draws disagree");
    return cache.emplace(d, CsReference{ref1.dedup_pattern, std::move(m1)}).first->second;
}

} // namespace

CsConfig build_caminata_schaffler(int d, const std::vector<Scalar>& t) {
    if (d < 2) throw std::invalid_argument("build_caminata_schaffler: d must be at least 2");
    CsRaw raw = build_cs_raw(d, t);
    const CsReference& ref = cs_reference(d);
    if (raw.dedup_pattern != ref.dedup_pattern)
        throw DegeneracyError(
            "build_caminata_schaffler: auxiliary points collide differently than in the "
            "generic construction");
    Matroid m = matroid_from_config(raw.cs.config);
    if (!same_matroid(m, ref.matroid)) {
        std::set<std::vector<int>> expected_set;
        for (auto& nb : nonbases(ref.matroid)) expected_set.insert(nb);
        std::vector<std::vector<int>> offending;
        for (auto& nb : nonbases(m))
            if (!expected_set.contains(nb)) offending.push_back(nb);
        throw DegeneracyError("build_caminata_schaffler: degenerate parameters", offending);
    }
    return std::move(raw.cs);
}

std::vector<std::vector<int>> CbGrid::expected_nonbases() const {
    std::set<std::vector<int>> exp;
    auto add_line = [&exp](const std::vector<int>& labels) {
        std::vector<int> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        int sz = static_cast<int>(sorted.size());
        for (const auto& pick : k_subsets(sz, 3))
            exp.insert({sorted[static_cast<std::size_t>(pick[0] - 1)],
                        sorted[static_cast<std::size_t>(pick[1] - 1)],
                        sorted[static_cast<std::size_t>(pick[2] - 1)]});
    };
    add_line(incidence.base_line);
    for (const auto& l : incidence.ell) add_line(l);
    for (const auto& m : incidence.em) add_line(m);
    return {exp.begin(), exp.end()};
}

CbGrid build_cb_grid(const CbGridSpec& spec) {
    const int k = spec.k;
    if (k < 3) throw std::invalid_argument("build_cb_grid: k must be at least 3");
    if (static_cast<int>(spec.base_positions.size()) != k ||
        static_cast<int>(spec.ell_slopes.size()) != k ||
        static_cast<int>(spec.em_slopes.size()) != k)
        throw std::invalid_argument("build_cb_grid: need k positions and 2k slopes");
    for (int i = 0; i < k; ++i) {
        if (spec.ell_slopes[static_cast<std::size_t>(i)].is_zero() ||
            spec.em_slopes[static_cast<std::size_t>(i)].is_zero())
            throw DegeneracyError("build_cb_grid: a slope of 0 duplicates the base line");
        for (int j = 0; j < k; ++j)
            if (spec.ell_slopes[static_cast<std::size_t>(i)] ==
                spec.em_slopes[static_cast<std::size_t>(j)])
                throw DegeneracyError("build_cb_grid: l_" + std::to_string(i + 1) + " and m_" +
                                      std::to_string(j + 1) + " are parallel");
    }

    CbGrid grid;
    grid.k = k;
    grid.config = PointConfig(3, k * k);
    grid.incidence.ell.assign(static_cast<std::size_t>(k), {});
    grid.incidence.em.assign(static_cast<std::size_t>(k), {});
    for (int i = 1; i <= k; ++i) {
        const Scalar& b = spec.base_positions[static_cast<std::size_t>(i - 1)];
        grid.config.set_column(i, {b, Scalar(0), Scalar(1)}, ColumnKind::original);
        grid.incidence.base_line.push_back(i);
        grid.incidence.ell[static_cast<std::size_t>(i - 1)].push_back(i);
        grid.incidence.em[static_cast<std::size_t>(i - 1)].push_back(i);
    }
    int label = k;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (i == j) continue;
            ++label;
            const Scalar& bi = spec.base_positions[static_cast<std::size_t>(i - 1)];
            const Scalar& bj = spec.base_positions[static_cast<std::size_t>(j - 1)];
            const Scalar& si = spec.ell_slopes[static_cast<std::size_t>(i - 1)];
            const Scalar& uj = spec.em_slopes[static_cast<std::size_t>(j - 1)];
            // l_i: Y = si (X - bi); m_j: Y = uj (X - bj)
            Scalar x = (si * bi - uj * bj) / (si - uj);
            Scalar y = si * (x - bi);
            grid.config.set_column(label, {x, y, Scalar(1)}, ColumnKind::auxiliary);
            grid.incidence.ell[static_cast<std::size_t>(i - 1)].push_back(label);
            grid.incidence.em[static_cast<std::size_t>(j - 1)].push_back(label);
            grid.incidence.residual.push_back(label);
        }

    validate_matroid(grid.config, grid.expected_nonbases(), "build_cb_grid");
    return grid;
}

CbGrid build_cb_grid(int k) {
    CbGridSpec spec;
    spec.k = k;
    for (int i = 1; i <= k; ++i) {
        spec.base_positions.emplace_back(i - 1);
        spec.ell_slopes.emplace_back(i);
        spec.em_slopes.emplace_back(-i);
    }
    return build_cb_grid(spec);
}

} // namespace gcmv
