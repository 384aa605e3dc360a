#pragma once

#include "qna/errors.hpp"
#include "qna/presentation.hpp"

#include <memory>

namespace qna {

inline constexpr int kDefaultPairCap = 10000;

/**
 * Generators plus (once completed) a two-sided Groebner basis over one
 * presentation level, used for ideal membership, containment and equality.
 *
 * The basis is a left Groebner basis that has been saturated under right
 * multiplication by every generator, so the left ideal it generates is
 * two-sided and left normal forms decide two-sided membership. Completed
 * handles are immutable and safe to share; distinct handles may be
 * completed concurrently.
 */
struct IdealHandle {
    std::shared_ptr<const CglPresentation> ring;
    std::vector<NFPoly> gens;
    std::vector<NFPoly> gb;
    bool complete = false;
    int pairs_processed = 0;
};

/// CapExceeded variant that carries the partial basis for diagnostics.
class GBCapExceeded : public CapExceeded {
public:
    GBCapExceeded(const std::string& msg, std::vector<NFPoly> partial)
        : CapExceeded(msg), partial_basis(std::move(partial)) {}
    std::vector<NFPoly> partial_basis;
};

/// Unit-rescale: clear coefficient denominators to a common polynomial,
/// divide out the integer-polynomial content, and make the leading
/// coefficient's top integer positive. The result generates the same ideal.
NFPoly make_primitive(const NFPoly& f);

/**
 * Complete a two-sided Groebner basis by Buchberger completion over the
 * solvable presentation, with the pair queue augmented by the right
 * products g * x_i of every basis element. The final basis is
 * inter-reduced, so it is the unique reduced basis up to unit scaling.
 * Throws GBCapExceeded when more than pair_cap queue items are processed.
 */
IdealHandle two_sided_gb(std::shared_ptr<const CglPresentation> ring, std::vector<NFPoly> gens,
                         int pair_cap = kDefaultPairCap);
IdealHandle two_sided_gb(const CglPresentation& ring, std::vector<NFPoly> gens,
                         int pair_cap = kDefaultPairCap);

/**
 * Canonical remainder of f modulo the completed basis: every term is
 * reduced until no leading monomial of the basis divides it. Zero iff f
 * lies in the two-sided ideal. reducer_rotation rotates the reducer search
 * order; with a completed basis the result is independent of it (exercised
 * by the confluence tests).
 */
NFPoly normal_form(const IdealHandle& h, const NFPoly& f, int reducer_rotation = 0);

bool ideal_member(const IdealHandle& h, const NFPoly& f);
bool ideal_contains(const IdealHandle& big, const std::vector<NFPoly>& small_gens);
/// Mutual containment of generator sets; throws std::invalid_argument when
/// the handles live over different rings.
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

/// Exact right quotient h' with h = h' * x_s, when it exists. Requires every
/// generator above s to commute with x_s by a pure power of q (true on tower
/// levels where the rows above s are derivation-free), so the division is
/// monomial-wise.
std::optional<NFPoly> right_divide_by_gen(const CglPresentation& P, const NFPoly& h, int s);

} // namespace qna
