#include "ffdistlab/variety.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

namespace ffd {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

long long parse_int(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw HypothesisError("bad integer in polynomial: '" + s + "'");
    }
    if (used != s.size()) throw HypothesisError("bad integer in polynomial: '" + s + "'");
    return v;
}

// Odometer over `slots` values each in [0, q); returns false after the last
// assignment wraps back to all-zero.
bool next_assignment(std::vector<Field::Elt>& vals, std::uint32_t q) {
    for (auto& v : vals) {
        if (++v < q) return true;
        v = 0;
    }
    return false;
}

} // namespace

Polynomial parse_polynomial(const std::string& line, const Ambient& ambient) {
    const Field& f = ambient.field();
    const std::string flat = strip_ws(line);
    if (flat.empty()) throw HypothesisError("empty polynomial");
    Polynomial poly;
    for (const std::string& term_text : split(flat, '+')) {
        if (term_text.empty()) throw HypothesisError("empty term in polynomial");
        PolyTerm term;
        term.coeff = 1;
        term.exps.assign(ambient.dim(), 0);
        for (const std::string& factor : split(term_text, '*')) {
            if (factor.empty()) throw HypothesisError("empty factor in polynomial term");
            if (factor[0] == 'x') {
                const std::size_t caret = factor.find('^');
                const std::string var_text = factor.substr(1, caret == std::string::npos
                                                                  ? std::string::npos
                                                                  : caret - 1);
                const long long var = parse_int(var_text);
                if (var < 1 || var > ambient.dim())
                    throw HypothesisError("variable index out of range: '" + factor + "'");
                long long exp = 1;
                if (caret != std::string::npos) exp = parse_int(factor.substr(caret + 1));
                if (exp < 0) throw HypothesisError("negative exponent: '" + factor + "'");
                term.exps[static_cast<std::size_t>(var - 1)] += static_cast<std::uint32_t>(exp);
            } else {
                term.coeff = f.mul(term.coeff, f.from_int(parse_int(factor)));
            }
        }
        for (std::uint32_t a : term.exps)
            if (a >= f.q())
                throw HypothesisError("term exponent must be below the field order");
        if (term.coeff != 0) poly.push_back(std::move(term));
    }
    return poly;
}

std::vector<Polynomial> parse_polynomials(const std::string& text, const Ambient& ambient) {
    std::vector<Polynomial> polys;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (strip_ws(line).empty()) continue;
        polys.push_back(parse_polynomial(line, ambient));
    }
    if (polys.empty()) throw HypothesisError("no polynomials given");
    return polys;
}

Field::Elt evaluate(const Polynomial& poly, const Ambient& ambient, Rank x) {
    const Field& f = ambient.field();
    const Point pt = ambient.unrank(x);
    Field::Elt acc = 0;
    for (const PolyTerm& term : poly) {
        Field::Elt val = term.coeff;
        for (std::uint32_t i = 0; i < ambient.dim(); ++i)
            if (term.exps[i] > 0) val = f.mul(val, f.pow(pt[i], term.exps[i]));
        acc = f.add(acc, val);
    }
    return acc;
}

Variety enumerate_variety(VarietyDef def, const Ambient& ambient) {
    const Field& f = ambient.field();
    const std::uint32_t q = f.q();
    const std::uint32_t d = ambient.dim();

    // Per-(variable, exponent) power tables so the scan is table lookups only.
    struct Factor {
        std::uint32_t var;
        const std::vector<Field::Elt>* table;
    };
    struct CompiledTerm {
        Field::Elt coeff;
        std::vector<Factor> factors;
    };
    std::vector<std::vector<Field::Elt>> tables;
    std::vector<std::uint32_t> table_exp;
    auto table_for = [&](std::uint32_t exp) -> std::size_t {
        for (std::size_t i = 0; i < table_exp.size(); ++i)
            if (table_exp[i] == exp) return i;
        std::vector<Field::Elt> t(q);
        for (Field::Elt v = 0; v < q; ++v) t[v] = f.pow(v, exp);
        tables.push_back(std::move(t));
        table_exp.push_back(exp);
        return tables.size() - 1;
    };
    std::vector<std::vector<CompiledTerm>> compiled;
    for (const Polynomial& poly : def.polynomials) {
        std::vector<CompiledTerm> cpoly;
        for (const PolyTerm& term : poly) {
            CompiledTerm ct{term.coeff, {}};
            for (std::uint32_t i = 0; i < d; ++i)
                if (term.exps[i] > 0) ct.factors.push_back({i, nullptr});
            cpoly.push_back(std::move(ct));
        }
        compiled.push_back(std::move(cpoly));
    }
    // Resolve table pointers after the table vector stops reallocating.
    std::vector<std::vector<std::size_t>> table_idx(compiled.size());
    for (std::size_t pi = 0; pi < def.polynomials.size(); ++pi)
        for (const PolyTerm& term : def.polynomials[pi])
            for (std::uint32_t i = 0; i < d; ++i)
                if (term.exps[i] > 0) table_idx[pi].push_back(table_for(term.exps[i]));
    for (std::size_t pi = 0, flat = 0; pi < compiled.size(); ++pi, flat = 0)
        for (auto& ct : compiled[pi])
            for (auto& factor : ct.factors) factor.table = &tables[table_idx[pi][flat++]];

    Variety v{std::move(def), PointSet(ambient.size())};
    std::vector<Field::Elt> coords(d, 0);
    for (Rank r = 0; r < ambient.size(); ++r) {
        bool vanish = true;
        for (const auto& cpoly : compiled) {
            Field::Elt acc = 0;
            for (const CompiledTerm& ct : cpoly) {
                Field::Elt val = ct.coeff;
                for (const Factor& factor : ct.factors)
                    val = f.mul(val, (*factor.table)[coords[factor.var]]);
                acc = f.add(acc, val);
            }
            if (acc != 0) {
                vanish = false;
                break;
            }
        }
        if (vanish) v.points.insert(r);
        next_assignment(coords, q);
    }
    return v;
}

Variety sphere(const Ambient& ambient, Field::Elt j) {
    const Field& f = ambient.field();
    f.check_elt(j);
    VarietyDef def;
    Polynomial poly;
    for (std::uint32_t i = 0; i < ambient.dim(); ++i) {
        PolyTerm t{1, std::vector<std::uint32_t>(ambient.dim(), 0)};
        t.exps[i] = 2;
        poly.push_back(std::move(t));
    }
    if (j != 0) poly.push_back({f.neg(j), std::vector<std::uint32_t>(ambient.dim(), 0)});
    def.polynomials.push_back(std::move(poly));
    def.declared_dim = ambient.dim() - 1;
    def.declared_deg = 2;
    def.label = "sphere:" + std::to_string(j);
    def.sphere_radius = j;

    Variety v{std::move(def), PointSet(ambient.size())};
    for (Rank r = 0; r < ambient.size(); ++r)
        if (ambient.norm(r) == j) v.points.insert(r);
    return v;
}

Variety hyperplane(const Ambient& ambient) {
    VarietyDef def;
    PolyTerm t{1, std::vector<std::uint32_t>(ambient.dim(), 0)};
    t.exps[0] = 1;
    def.polynomials.push_back({std::move(t)});
    def.declared_dim = ambient.dim() - 1;
    def.declared_deg = 1;
    def.label = "hyperplane";

    Variety v{std::move(def), PointSet(ambient.size())};
    for (Rank r = 0; r < ambient.size(); ++r)
        if (ambient.coord(r, 0) == 0) v.points.insert(r);
    return v;
}

std::pair<std::uint64_t, double> size_profile(const Variety& v, const Ambient& ambient) {
    std::uint64_t denom = 1;
    for (std::uint32_t i = 0; i < v.def.declared_dim; ++i) denom *= ambient.field().q();
    return {v.points.size(), static_cast<double>(v.points.size()) / static_cast<double>(denom)};
}

namespace {

// Canonical projective directions: first nonzero coordinate equals 1 at the
// pivot, zeros below it, free values above. Each line of F_q^d appears for
// exactly one (direction, base-with-zero-pivot) pair.
template <typename DirFn>
void for_each_canonical_direction(const Ambient& amb, DirFn&& fn) {
    const std::uint32_t d = amb.dim();
    const std::uint32_t q = amb.field().q();
    Point v(d, 0);
    for (std::uint32_t pivot = 0; pivot < d; ++pivot) {
        std::fill(v.begin(), v.end(), 0);
        v[pivot] = 1;
        std::vector<Field::Elt> free(d - 1 - pivot, 0);
        do {
            for (std::uint32_t i = pivot + 1; i < d; ++i) v[i] = free[i - pivot - 1];
            if (!fn(v, pivot)) return;
        } while (next_assignment(free, q));
    }
}

// Base points of the transversal for a set of pivot coordinates: zero at
// every pivot, all values elsewhere.
template <typename BaseFn>
void for_each_transversal_point(const Ambient& amb, const std::vector<std::uint32_t>& pivots,
                                BaseFn&& fn) {
    const std::uint32_t d = amb.dim();
    const std::uint32_t q = amb.field().q();
    std::vector<std::uint32_t> free_pos;
    for (std::uint32_t i = 0; i < d; ++i)
        if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) free_pos.push_back(i);
    Point x(d, 0);
    std::vector<Field::Elt> free(free_pos.size(), 0);
    do {
        for (std::size_t i = 0; i < free_pos.size(); ++i) x[free_pos[i]] = free[i];
        if (!fn(x)) return;
    } while (next_assignment(free, q));
}

bool line_contained(const PointSet& points, const Ambient& amb, Rank base,
                    const std::vector<Rank>& scaled_dir) {
    for (Rank sv : scaled_dir)
        if (!points.contains(amb.add(base, sv))) return false;
    return true;
}

std::vector<Rank> scaled_ranks(const Ambient& amb, Rank dir) {
    const std::uint32_t q = amb.field().q();
    std::vector<Rank> out(q);
    for (Field::Elt t = 0; t < q; ++t) out[t] = amb.scale(t, dir);
    return out;
}

} // namespace

std::optional<std::pair<Rank, Rank>> find_line_generic(const PointSet& points,
                                                       const Ambient& amb) {
    std::optional<std::pair<Rank, Rank>> hit;
    for_each_canonical_direction(amb, [&](const Point& v, std::uint32_t pivot) {
        const Rank vr = amb.rank(v);
        const std::vector<Rank> sv = scaled_ranks(amb, vr);
        bool keep_going = true;
        for_each_transversal_point(amb, {pivot}, [&](const Point& x) {
            const Rank xr = amb.rank(x);
            if (points.contains(xr) && line_contained(points, amb, xr, sv)) {
                hit = {xr, vr};
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });
    return hit;
}

std::optional<std::pair<Rank, Rank>> find_line_sphere_pruned(const PointSet& points,
                                                             const Ambient& amb) {
    // A line x + tv inside a sphere forces v isotropic (v.v = 0) and x
    // orthogonal to v; membership of x supplies |x| = j. The conditions are
    // also sufficient, but containment is still verified directly.
    std::optional<std::pair<Rank, Rank>> hit;
    for_each_canonical_direction(amb, [&](const Point& v, std::uint32_t pivot) {
        const Rank vr = amb.rank(v);
        if (amb.norm(vr) != 0) return true;
        const std::vector<Rank> sv = scaled_ranks(amb, vr);
        bool keep_going = true;
        for_each_transversal_point(amb, {pivot}, [&](const Point& x) {
            const Rank xr = amb.rank(x);
            if (points.contains(xr) && amb.dot(xr, vr) == 0 &&
                line_contained(points, amb, xr, sv)) {
                hit = {xr, vr};
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });
    return hit;
}

namespace {

std::optional<std::array<Rank, 3>> find_plane(const PointSet& points, const Ambient& amb) {
    const std::uint32_t d = amb.dim();
    const std::uint32_t q = amb.field().q();
    if (d < 2) return std::nullopt;
    std::optional<std::array<Rank, 3>> hit;
    for (std::uint32_t pi = 0; pi < d && !hit; ++pi) {
        for (std::uint32_t pj = pi + 1; pj < d && !hit; ++pj) {
            // Reduced-row-echelon pair: row1 pivots at pi, row2 at pj; free
            // entries sit right of each pivot, excluding pivot columns.
            std::vector<std::uint32_t> free1, free2;
            for (std::uint32_t c = pi + 1; c < d; ++c)
                if (c != pj) free1.push_back(c);
            for (std::uint32_t c = pj + 1; c < d; ++c) free2.push_back(c);
            std::vector<Field::Elt> free(free1.size() + free2.size(), 0);
            do {
                Point r1(d, 0), r2(d, 0);
                r1[pi] = 1;
                r2[pj] = 1;
                for (std::size_t i = 0; i < free1.size(); ++i) r1[free1[i]] = free[i];
                for (std::size_t i = 0; i < free2.size(); ++i)
                    r2[free2[i]] = free[free1.size() + i];
                const Rank d1 = amb.rank(r1), d2 = amb.rank(r2);
                const std::vector<Rank> s1 = scaled_ranks(amb, d1);
                const std::vector<Rank> s2 = scaled_ranks(amb, d2);
                bool found_base = false;
                for_each_transversal_point(amb, {pi, pj}, [&](const Point& x) {
                    const Rank xr = amb.rank(x);
                    if (!points.contains(xr)) return true;
                    for (Field::Elt s = 0; s < q; ++s) {
                        const Rank xs = amb.add(xr, s1[s]);
                        for (Field::Elt t = 0; t < q; ++t)
                            if (!points.contains(amb.add(xs, s2[t]))) return true;
                    }
                    hit = {xr, d1, d2};
                    found_base = true;
                    return false;
                });
                if (found_base) break;
            } while (next_assignment(free, q));
        }
    }
    return hit;
}

} // namespace

AffineSubspaceReport max_affine_subspace(const Variety& v, const Ambient& amb,
                                         std::uint32_t dim_cap) {
    if (dim_cap > 2)
        throw HypothesisError("affine subspace search supports dimension caps 0..2");
    AffineSubspaceReport report;
    report.searched_dim_cap = dim_cap;
    if (v.points.empty()) return report;

    if (dim_cap >= 2 && amb.dim() >= 2) {
        if (auto plane = find_plane(v.points, amb)) {
            report.t_v = static_cast<std::uint64_t>(amb.field().q()) * amb.field().q();
            report.base = (*plane)[0];
            report.directions = {(*plane)[1], (*plane)[2]};
            return report;
        }
    }
    if (dim_cap >= 1) {
        const auto line = v.def.sphere_radius ? find_line_sphere_pruned(v.points, amb)
                                              : find_line_generic(v.points, amb);
        if (line) {
            report.t_v = amb.field().q();
            report.base = line->first;
            report.directions = {line->second};
            return report;
        }
    }
    report.t_v = 1;
    report.base = *v.points.begin();
    return report;
}

} // namespace ffd
