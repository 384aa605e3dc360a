#include "qna/zpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qna {

namespace {
const BigInt kZero = 0;

BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace

ZPoly::ZPoly(long v) {
    if (v != 0) c_.push_back(BigInt(v));
}

ZPoly::ZPoly(BigInt v) {
    if (v != 0) c_.push_back(std::move(v));
}

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::q_power(int k) {
    if (k < 0) throw std::domain_error("ZPoly::q_power: negative exponent");
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1, kZero);
    v.back() = 1;
    return ZPoly(std::move(v));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& ZPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const BigInt& ZPoly::leading_coeff() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return ZPoly(std::move(v));
}

ZPoly ZPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("ZPoly::pow: negative exponent");
    ZPoly r(1);
    ZPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BigInt ZPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c_) {
        g = int_gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    BigInt g = content();
    if (leading_coeff() < 0) g = -g;
    return divexact_scalar(g);
}

ZPoly ZPoly::stretched(int e) const {
    if (e < 1) throw std::domain_error("ZPoly::stretched: exponent must be >= 1");
    if (is_zero()) return ZPoly();
    std::vector<BigInt> v(static_cast<std::size_t>(degree()) * e + 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * e] = c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::reversed() const {
    std::vector<BigInt> v(c_.rbegin(), c_.rend());
    return ZPoly(std::move(v));
}

ZPoly ZPoly::shifted(int k) const {
    if (k < 0) throw std::domain_error("ZPoly::shifted: negative shift");
    if (is_zero()) return ZPoly();
    std::vector<BigInt> v(static_cast<std::size_t>(k), kZero);
    v.insert(v.end(), c_.begin(), c_.end());
    return ZPoly(std::move(v));
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero()) throw std::domain_error("ZPoly::divexact: division by zero");
    if (is_zero()) return ZPoly();
    if (degree() < d.degree()) throw std::domain_error("ZPoly::divexact: not divisible");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(c_.size() - d.c_.size() + 1, kZero);
    int rd = degree();
    const int dd = d.degree();
    while (rd >= dd) {
        if (rem[static_cast<std::size_t>(rd)] == 0) {
            --rd;
            continue;
        }
        BigInt qc = rem[static_cast<std::size_t>(rd)] / d.leading_coeff();
        if (qc * d.leading_coeff() != rem[static_cast<std::size_t>(rd)])
            throw std::domain_error("ZPoly::divexact: not divisible");
        int shift = rd - dd;
        quot[static_cast<std::size_t>(shift)] = qc;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(i + shift)] -= qc * d.c_[static_cast<std::size_t>(i)];
        --rd;
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("ZPoly::divexact: not divisible");
    return ZPoly(std::move(quot));
}

ZPoly ZPoly::divexact_scalar(const BigInt& g) const {
    if (g == 0) throw std::domain_error("ZPoly::divexact_scalar: division by zero");
    std::vector<BigInt> v = c_;
    for (auto& x : v) {
        BigInt quo = x / g;
        if (quo * g != x) throw std::domain_error("ZPoly::divexact_scalar: not divisible");
        x = quo;
    }
    return ZPoly(std::move(v));
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly() : b.primitive_part() * ZPoly(BigInt(b.content()));
    if (b.is_zero()) return a.primitive_part() * ZPoly(BigInt(a.content()));
    BigInt cont = int_gcd(a.content(), b.content());
    ZPoly f = a.primitive_part();
    ZPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    // primitive PRS via pseudo-remainders
    while (!g.is_zero()) {
        ZPoly r = f;
        while (!r.is_zero() && r.degree() >= g.degree()) {
            int shift = r.degree() - g.degree();
            BigInt rl = r.leading_coeff();
            ZPoly scaled;
            {
                std::vector<BigInt> v = r.c_;
                for (auto& x : v) x *= g.leading_coeff();
                scaled = ZPoly(std::move(v));
            }
            r = scaled - (g * ZPoly(rl)).shifted(shift);
        }
        f = g;
        g = r.is_zero() ? ZPoly() : r.primitive_part();
    }
    return f.primitive_part() * ZPoly(cont);
}

ZPoly ZPoly::lcm(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    return (a * b).divexact(gcd(a, b)).primitive_part();
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& a = coeff(k);
        if (a == 0) continue;
        BigInt mag = a < 0 ? BigInt(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace qna
