#pragma once

#include "qna/zpoly.hpp"

#include <string>

namespace qna {

/**
 * Exact rational function in the single indeterminate q over the rationals.
 *
 * Canonical form: num/den with integer-polynomial parts, den nonzero,
 * gcd(num, den) = 1 including integer content, den with positive leading
 * coefficient, and zero stored as 0/1. Structural equality therefore
 * coincides with field equality. Values are immutable after construction.
 */
class RatQ {
public:
    RatQ() : num_(), den_(1) {}
    RatQ(long v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
    explicit RatQ(ZPoly num) : num_(std::move(num)), den_(1) {}
    RatQ(ZPoly num, ZPoly den);

    /// q^e for any integer e (negative exponents land in the denominator).
    static RatQ q_power(long e);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    RatQ operator-() const;
    RatQ operator+(const RatQ& o) const;
    RatQ operator-(const RatQ& o) const;
    RatQ operator*(const RatQ& o) const;
    /// Throws std::domain_error on division by zero.
    RatQ operator/(const RatQ& o) const;
    RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
    RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
    RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
    RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

    bool operator==(const RatQ& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatQ inverse() const;
    RatQ pow(long e) const;

    /// e.g. "(1 - q^2)/(1 + q)"; bare numerator when the denominator is 1.
    std::string to_string() const;
    /// True when to_string() needs no parentheses inside a product.
    bool is_atomic() const;

private:
    void canonicalize();
    ZPoly num_;
    ZPoly den_;
};

/// [k]_q = 1 + q + ... + q^{k-1} for k >= 1, and [0] := 1 (the factorial
/// convention; note the divergence from the usual q-integer [0]_q = 0 —
/// this value only ever enters factorial products).
RatQ qint(long k);

/// [k]! = [0] x [1] x ... x [k].
RatQ qfactorial(long k);

/// a with q replaced by q^c (c != 0); negative c clears the inverse powers
/// back into canonical num/den form.
RatQ substitute_power(const RatQ& a, long c);

/// (1 - q^c)^{-k} / [k]!_{q^c}; the series coefficient of the derivation-
/// deleting change of generators. Requires c != 0, which keeps q^c away
/// from roots of unity so both factors are invertible.
RatQ cauchon_coeff(long k, long c);

} // namespace qna
