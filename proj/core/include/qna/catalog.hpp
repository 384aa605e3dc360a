#pragma once

#include "qna/presentation.hpp"

#include <optional>
#include <set>

namespace qna {

/// Derivation-free presentation with the given antisymmetric q-exponent
/// matrix; torus data defaults to the full rank-n torus (weights = identity).
CglPresentation make_quantum_affine(int n, const std::vector<std::vector<std::int64_t>>& exp);

/// The first quantized Weyl algebra: x_2 x_1 - q x_1 x_2 = 1, with the
/// rank-1 torus action forced by the defining relation (q_2 = q^{-1}).
CglPresentation make_weyl_q();

/// rows x cols quantum matrices, generators row-major; the only nonzero
/// derivations sit at the strictly-southeast generator pairs.
CglPresentation make_quantum_matrices(int rows, int cols);
CglPresentation make_quantum_matrices_2();

/// Polynomial ring k[x,y] extended by the non-nilpotent derivation
/// 2y d/dx + (x + y^2) d/dy. Deliberately fails validation: there is no
/// compatible torus weighting and the derivation orbit grows forever.
CglPresentation make_jordan_counterexample();

/**
 * Independent combinatorial fixture for quantum matrices: all subsets of
 * the rows x cols grid (row-major bit layout) such that every black box has
 * its full column above black or its full row to the left black. Used by
 * the tests to cross-validate the ideal-lifting pipeline.
 */
std::set<std::uint32_t> le_diagram_oracle(int rows, int cols);

struct CatalogEntry {
    std::string name;
    std::string description;
    CglPresentation presentation;
    bool expect_valid = true;
};

/// Fixed names (weyl_q, quantum_plane, jordan, quantum_matrices_2) plus the
/// parameterized families quantum_affine_N and quantum_matrices_RxC.
std::optional<CatalogEntry> catalog_lookup(const std::string& name);
std::vector<std::string> catalog_names();

// ---- presentation text format ------------------------------------------
//
// Line-oriented key = value document; see docs/presentation-format.md.
// Keys: n, lambda_exp, q_exp, torus_rank, weights, h_exp, delta.J.I.

CglPresentation parse_presentation_text(const std::string& text, const std::string& origin = "");
std::string serialize_presentation(const CglPresentation& P);
CglPresentation load(const std::string& path);
void save(const CglPresentation& P, const std::string& path);

// ---- polynomial / scalar expression syntax -------------------------------
//
// poly   := ['-'] term (('+' | '-') term)*
// term   := factor (('*' | '/' | juxtaposition) factor)*
// factor := atom ['^' int]
// atom   := uint | 'q' | 'x'uint | '(' scalar-poly ')'
//
// Generators inside one term must appear in strictly increasing index
// order (the normal form), parenthesized subexpressions and divisors must
// be scalar, and generator powers must be nonnegative.

NFPoly parse_poly_expr(const std::string& text, int n);
RatQ parse_ratq(const std::string& text);
/// Round-trippable rendering of a normal form (parse_poly_expr inverse).
std::string poly_expr_string(const NFPoly& f);

} // namespace qna
