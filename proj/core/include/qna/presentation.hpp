#pragma once

#include "qna/nfpoly.hpp"

#include <map>
#include <utility>

namespace qna {

/**
 * Finite presentation data for one level of an iterated skew-polynomial
 * extension with diagonal automorphisms and a compatible torus action:
 *
 *     x_j x_i = q^{m[j][i]} x_i x_j + delta_j(x_i)   for j > i,
 *
 * where every scalar is an integer power of the single parameter q. The
 * struct stores raw data; validate_cgl certifies the axioms. Instances are
 * treated as immutable after construction and are safe to share across
 * threads.
 *
 * Fields (all indices 1-based in the API):
 *  - n:           number of generators
 *  - lambda_exp:  n x n integer matrix m, antisymmetric with zero diagonal
 *  - delta:       entries (j, i) with i < j; each an NFPoly supported on
 *                 generators of index < j; absent means zero
 *  - q_exp:       c_j with q_j = q^{c_j}; c_1 is unused, c_j != 0 for j >= 2
 *  - torus_rank:  d >= 0
 *  - weights:     d x n matrix; column i is the eigenweight of x_i
 *  - h_exp:       d x n matrix; column j is the exponent vector of the
 *                 torus element implementing sigma_j
 */
struct CglPresentation {
    int n = 0;
    std::vector<std::vector<std::int64_t>> lambda_exp;
    std::map<std::pair<int, int>, NFPoly> delta;
    std::vector<std::int64_t> q_exp;
    int torus_rank = 0;
    std::vector<std::vector<std::int64_t>> weights;
    std::vector<std::vector<std::int64_t>> h_exp;

    std::int64_t m(int j, int i) const {
        return lambda_exp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
    }
    /// nullptr when delta_j(x_i) = 0.
    const NFPoly* delta_entry(int j, int i) const;
    std::vector<std::int64_t> weight_col(int i) const;
    std::vector<std::int64_t> h_col(int j) const;

    bool operator==(const CglPresentation& o) const = default;
};

/// x_i as an NFPoly over P.
NFPoly gen_poly(const CglPresentation& P, int i);

/// Normal form of c * (the word of generator indices), rewriting adjacent
/// inversions x_j x_i (j > i) leftmost-innermost until sorted. Terminates
/// for well-formed data because every delta entry lives strictly below its
/// row index.
NFPoly normalize_word(const CglPresentation& P, const RatQ& c, const std::vector<int>& word);

/// Product of normal forms, as a normal form.
NFPoly multiply(const CglPresentation& P, const NFPoly& f, const NFPoly& g);

/// f^k for k >= 0.
NFPoly poly_pow(const CglPresentation& P, const NFPoly& f, int k);

/// The diagonal automorphism sigma_j^e: scales the monomial with exponent
/// vector a by q^{e * sum_l m[j][l] a_l}. Positions l >= j use the diagonal
/// extension of sigma_j (the tau automorphisms of the lower tower levels).
NFPoly apply_sigma(const CglPresentation& P, int j, std::int64_t e, const NFPoly& f);

/// The sigma_j-derivation delta_j, extended over monomials by the twisted
/// Leibniz rule delta(ab) = sigma(a) delta(b) + delta(a) b. The argument
/// must be supported on x_1..x_{j-1}; otherwise throws std::domain_error.
NFPoly apply_delta(const CglPresentation& P, int j, const NFPoly& f);

/// Weight vector W * a shared by all monomials of f, or nullopt when f is
/// inhomogeneous or zero.
std::optional<std::vector<std::int64_t>> weight_of(const CglPresentation& P, const NFPoly& f);
std::optional<std::vector<std::int64_t>> weight_of_mono(const CglPresentation& P, const Expo& e);

/// Least t >= 0 with delta_j^t(f) = 0. Throws CapExceeded past the cap.
int nilpotency_index(const CglPresentation& P, int j, const NFPoly& f, int cap);

/// Both one-step rewrite orders of the word x_k x_j x_i (k > j > i),
/// each fully normalized; used by the validator's confluence check.
std::pair<NFPoly, NFPoly> diamond_pair(const CglPresentation& P, int k, int j, int i);

} // namespace qna
