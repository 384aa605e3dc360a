#pragma once

#include "qna/presentation.hpp"

namespace qna {

struct ValidationCheck {
    std::string id;          // "structure", "eigen_consistency", ...
    std::string description; // human-readable statement of the condition
    bool pass = false;
    std::string detail;      // failure specifics, empty on pass
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    const ValidationCheck* find(const std::string& id) const;
    std::string summary() const;
};

inline constexpr int kDefaultNilpotencyCap = 64;

/**
 * Certifies the axioms the rest of the pipeline relies on. Failures are
 * report entries, never exceptions. Checks:
 *
 *  (a) structure:          matrix shapes, antisymmetry, delta support below
 *                          the row index, q_exp nonzero from index 2
 *  (b) eigen_consistency:  sigma_j scales delta_l(x_i) by
 *                          q^{m[j][l] + m[j][i]} for i < l < j
 *  (c) omitted_identity:   sigma_j(delta_j(x_i)) = q^{c_j + m[j][i]} delta_j(x_i)
 *  (d) local_nilpotency:   every delta_j kills each lower generator within
 *                          the iteration cap
 *  (e) diamond:            both rewrite orders of x_k x_j x_i agree, so the
 *                          rewriting system is confluent on overlaps
 *  (f) torus:              <E_j, W_i> = m[j][i] for i < j, <E_j, W_j> = c_j != 0
 *                          for j >= 2, W_1 != 0, and every delta entry (j, i)
 *                          homogeneous of weight W_i + W_j
 */
ValidationReport validate_cgl(const CglPresentation& P, int nilpotency_cap = kDefaultNilpotencyCap);

} // namespace qna
