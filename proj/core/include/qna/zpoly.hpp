#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qna {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Univariate polynomial in q with arbitrary-precision integer coefficients.
 *
 * Dense representation, coefficient of q^k at index k, trailing zeros
 * trimmed; the zero polynomial has an empty coefficient vector.
 */
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long v); // NOLINT(google-explicit-constructor) integers embed
    explicit ZPoly(BigInt v);
    explicit ZPoly(std::vector<BigInt> coeffs);

    /// q^k for k >= 0.
    static ZPoly q_power(int k);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(int k) const;
    const BigInt& leading_coeff() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly pow(int e) const; // e >= 0

    /// gcd of all coefficients, >= 0 (0 for the zero polynomial).
    BigInt content() const;
    /// this / content, with leading coefficient made positive.
    ZPoly primitive_part() const;

    /// q -> q^e for e >= 1.
    ZPoly stretched(int e) const;
    /// q^degree * p(1/q): coefficient vector reversed.
    ZPoly reversed() const;
    /// Multiply by q^k, k >= 0.
    ZPoly shifted(int k) const;

    /// Exact quotient this / d; throws std::domain_error when d does not
    /// divide this over the integers.
    ZPoly divexact(const ZPoly& d) const;
    /// Divide every coefficient by g (must divide exactly).
    ZPoly divexact_scalar(const BigInt& g) const;

    static ZPoly gcd(const ZPoly& a, const ZPoly& b);
    static ZPoly lcm(const ZPoly& a, const ZPoly& b);

    /// Rendered with `q` as the indeterminate, descending powers,
    /// e.g. "2*q^3 - q + 1".
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

} // namespace qna
