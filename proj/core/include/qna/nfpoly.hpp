#pragma once

#include "qna/ratq.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qna {

/// Monomial exponent vector; entry i-1 is the power of the generator x_i.
/// Normal-form polynomials keep every entry nonnegative; Laurent forms in
/// localizations allow one designated negative slot.
using Expo = std::vector<std::int64_t>;

/// Pure lexicographic order with the highest-index generator most
/// significant: exponents are compared at the last position first. For a
/// normal-form product this makes the ordered monomial x_i x_j (i < j) the
/// leading monomial of every defining relation, since the derivation part
/// only involves generators of smaller index.
bool mono_less(const Expo& a, const Expo& b);
bool mono_greater(const Expo& a, const Expo& b);

/// True when a - b is componentwise nonnegative (b divides a).
bool mono_divides(const Expo& b, const Expo& a);
Expo mono_sub(const Expo& a, const Expo& b);
Expo mono_add(const Expo& a, const Expo& b);
/// Componentwise max (the monomial lcm).
Expo mono_lcm(const Expo& a, const Expo& b);

struct MonoCmpDesc {
    bool operator()(const Expo& a, const Expo& b) const { return mono_greater(a, b); }
};

/**
 * Skew polynomial in normal (PBW-ordered) form: a finitely supported map
 * from exponent vectors to nonzero RatQ coefficients, representing
 * sum of coeff * x_1^{a_1} ... x_n^{a_n}. Terms are kept in descending
 * monomial order, so begin() is the leading term. Immutable in all ring
 * operations; the only mutators are the additive accumulators used while
 * building a value.
 */
class NFPoly {
public:
    using TermMap = std::map<Expo, RatQ, MonoCmpDesc>;

    NFPoly() = default;

    static NFPoly constant(int n, const RatQ& c);
    static NFPoly monomial(Expo e, RatQ c);
    /// The generator x_i (1-based) in an n-generator ring.
    static NFPoly generator(int n, int i);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading (largest) monomial and its coefficient; polynomial must be nonzero.
    const Expo& leading_mono() const;
    const RatQ& leading_coeff() const;

    /// Accumulate c * x^e, erasing the slot if the sum cancels.
    void add_term(const Expo& e, const RatQ& c);

    NFPoly operator+(const NFPoly& o) const;
    NFPoly operator-(const NFPoly& o) const;
    NFPoly operator-() const;
    NFPoly scaled(const RatQ& c) const;

    bool operator==(const NFPoly& o) const { return terms_ == o.terms_; }

    /// Largest generator index (1-based) appearing with nonzero exponent;
    /// 0 for constants and zero.
    int max_support_index() const;
    /// True when every monomial only uses generators with index < j.
    bool supported_below(int j) const;

    /// Number of generators, inferred from the exponent length; 0 when zero.
    int var_count() const;

    /// Rendered with generators x1..xn, e.g. "(q - 1) x1 x2^2 + 1".
    std::string to_string() const;

private:
    TermMap terms_;
};

std::string mono_to_string(const Expo& e);

} // namespace qna
