#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffdistlab/ambient.hpp"

namespace ffd {

// One monomial: coeff * prod_i x_{i+1}^{exps[i]}. Exponents are stored as
// given (x^q = x is never applied) and must each be < q.
struct PolyTerm {
    Field::Elt coeff = 0;
    std::vector<std::uint32_t> exps; // length d
};

using Polynomial = std::vector<PolyTerm>;

struct VarietyDef {
    std::vector<Polynomial> polynomials;
    std::uint32_t declared_dim = 0; // trusted metadata n, in [0, d]
    std::uint32_t declared_deg = 0; // trusted metadata D
    std::string label;              // e.g. "sphere:1", "hyperplane", "poly:file"
    // Set when the variety is a sphere sum x_i^2 = j; enables the pruned
    // line search inside max_affine_subspace.
    std::optional<Field::Elt> sphere_radius;
};

struct Variety {
    VarietyDef def;
    PointSet points;
};

struct AffineSubspaceReport {
    std::uint64_t t_v = 0;          // q^(witness dimension); 0 for an empty variety
    std::optional<Rank> base;       // witness base point
    std::vector<Rank> directions;   // witness basis (size = witness dimension)
    std::uint32_t searched_dim_cap = 0;
};

// Text format: one polynomial per line, terms joined by `+`, each term a
// `*`-separated product of an optional integer coefficient (reduced mod p,
// negatives allowed) and variable powers `x<i>` or `x<i>^<a>` with 1-based i.
Polynomial parse_polynomial(const std::string& line, const Ambient& ambient);
std::vector<Polynomial> parse_polynomials(const std::string& text, const Ambient& ambient);

Field::Elt evaluate(const Polynomial& poly, const Ambient& ambient, Rank x);

// Zero set of all polynomials in `def`, by exhaustive evaluation.
Variety enumerate_variety(VarietyDef def, const Ambient& ambient);

// Sphere sum_i x_i^2 = j, declared (dim, deg) = (d-1, 2).
Variety sphere(const Ambient& ambient, Field::Elt j);

// Coordinate hyperplane x_1 = 0, declared (dim, deg) = (d-1, 1).
Variety hyperplane(const Ambient& ambient);

// (|V|, |V| / q^declared_dim).
std::pair<std::uint64_t, double> size_profile(const Variety& v, const Ambient& ambient);

// Largest affine subspace contained in the variety, searched exhaustively
// over dimensions dim_cap down to 0 (dim_cap <= 2). Canonical enumeration:
// direction subspaces by reduced-row-echelon bases, base points ranging over
// the transversal with zeros at pivot coordinates. Sphere varieties prune the
// line level to isotropic directions and orthogonal base points.
AffineSubspaceReport max_affine_subspace(const Variety& v, const Ambient& ambient,
                                         std::uint32_t dim_cap);

// Line-level searches, exposed separately so the pruned path can be checked
// against the generic one.
std::optional<std::pair<Rank, Rank>> find_line_generic(const PointSet& points,
                                                       const Ambient& ambient);
std::optional<std::pair<Rank, Rank>> find_line_sphere_pruned(const PointSet& points,
                                                             const Ambient& ambient);

} // namespace ffd
