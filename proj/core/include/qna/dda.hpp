#pragma once

#include "qna/gbasis.hpp"
#include "qna/validate.hpp"

#include <memory>

namespace qna {

/**
 * Laurent normal form x_1^{a_1} ... x_j^{a_j} ... x_n^{a_n} with a_j ranging
 * over all integers: an element of the level-(j+1) ring localized at the
 * powers of x_j. Elements with a_j >= 0 throughout embed back losslessly
 * into NFPoly.
 */
class LocElement {
public:
    using TermMap = std::map<Expo, RatQ, MonoCmpDesc>;

    LocElement() = default;
    explicit LocElement(int level_j) : level_(level_j) {}

    static LocElement from_poly(int level_j, const NFPoly& f);
    static LocElement monomial(int level_j, Expo e, RatQ c);

    int level() const { return level_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Expo& e, const RatQ& c);
    LocElement operator+(const LocElement& o) const;
    LocElement operator-(const LocElement& o) const;
    LocElement scaled(const RatQ& c) const;
    bool operator==(const LocElement& o) const {
        return level_ == o.level_ && terms_ == o.terms_;
    }

    /// Most negative exponent of x_j across all terms (0 when none).
    std::int64_t min_xj_exponent() const;
    /// Back to a plain polynomial; nullopt when a negative power remains.
    std::optional<NFPoly> to_poly() const;

    std::string to_string() const;

private:
    int level_ = 2;
    TermMap terms_;
};

/**
 * The descending family of presentations produced by deleting the skew
 * derivations one index at a time: level N+1 is the input algebra, each
 * step removes the delta row at its index, and level 2 is a pure
 * q-commuting (quantum affine) presentation. Each level is re-validated
 * during construction, and the localized generator images
 *
 *   x_i^{(j)} = sum_k  (1-q_j)^{-k}/[k]!_{q_j} . delta_j^k sigma_j^{-k}(x_i) . x_j^{-k}
 *
 * are precomputed (the sum is finite by local nilpotency). Towers are
 * immutable after construction and safe to share across threads.
 */
class PresentationTower {
public:
    int length() const { return n_; }
    int nilpotency_cap() const { return nilpotency_cap_; }
    /// j in [2, N+1]; level 2 is the quantum affine bottom.
    const CglPresentation& level(int j) const;
    std::shared_ptr<const CglPresentation> level_ptr(int j) const;
    /// Precomputed image of x_i under the step-j change of generators,
    /// an element of the level-(j+1) ring localized at x_j. j in [2, N].
    const LocElement& image(int j, int i) const;

private:
    friend PresentationTower build_tower(const CglPresentation&, int);
    int n_ = 0;
    int nilpotency_cap_ = kDefaultNilpotencyCap;
    std::vector<std::shared_ptr<const CglPresentation>> levels_; // [0] = level 2
    std::vector<std::vector<LocElement>> images_;                // [j-2][i-1]
};

/// The level-j presentation obtained by zeroing the delta row at index j;
/// all other data is carried over verbatim.
CglPresentation delete_step(const CglPresentation& P, int j);

/// Builds and validates the whole tower. Throws ValidationError naming the
/// first level that fails.
PresentationTower build_tower(const CglPresentation& P, int nilpotency_cap = kDefaultNilpotencyCap);

/// Product in the localization the two operands live in (both at level j).
/// Negative powers commute rightward through
///   x_j^{-1} a = sigma_j^{-1}(a) x_j^{-1} - x_j^{-1} delta_j(sigma_j^{-1}(a)) x_j^{-1},
/// which terminates by local nilpotency.
LocElement loc_multiply(const PresentationTower& tower, int j, const LocElement& f,
                        const LocElement& g);

/// x_i^{(j)} as an element of the level-(j+1) localization; the bare
/// generator when i >= j.
LocElement generator_image(const PresentationTower& tower, int j, int i);

/// Image of a whole level-j polynomial under the change of generators:
/// every monomial is replaced by the ordered product of generator images.
LocElement theta_image(const PresentationTower& tower, int j, const NFPoly& f);

struct RelationCheck {
    int l = 0;
    int i = 0;
    bool pass = false;
    std::string note;
};

struct CheckReport {
    int level_j = 0;
    std::vector<RelationCheck> relations;
    bool all_pass() const;
};

/// Verifies, inside the localized arithmetic, that the generator images
/// satisfy exactly the level-j defining relations — the machine witness
/// that both neighbouring levels generate the same localized ring.
CheckReport matchloc_check(const PresentationTower& tower, int j);

/// Weight of a localized element (negative exponents contribute
/// negatively); nullopt when inhomogeneous or zero.
std::optional<std::vector<std::int64_t>> loc_weight_of(const CglPresentation& P,
                                                       const LocElement& f);

/// Coefficientwise relabelling of a level-j normal form as a level-(j+1)
/// normal form (a bijection of the PBW bases, not a ring map).
NFPoly rename_up(const PresentationTower& tower, int j, const NFPoly& f);

/// Completed two-sided basis of <x_j> over level j+1.
IdealHandle xj_ideal(const PresentationTower& tower, int j, int pair_cap = kDefaultPairCap);

/// The level-collapse ring map onto level j+1 modulo <x_j>: canonical coset
/// representative of the relabelled input.
NFPoly g_map(const PresentationTower& tower, int j, const NFPoly& f, const IdealHandle& xj);

} // namespace qna
