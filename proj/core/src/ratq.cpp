#include "qna/ratq.hpp"

#include <sstream>
#include <stdexcept>

namespace qna {

RatQ::RatQ(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
    canonicalize();
}

void RatQ::canonicalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatQ RatQ::q_power(long e) {
    RatQ r;
    if (e >= 0) {
        r.num_ = ZPoly::q_power(static_cast<int>(e));
        r.den_ = ZPoly(1);
    } else {
        r.num_ = ZPoly(1);
        r.den_ = ZPoly::q_power(static_cast<int>(-e));
    }
    return r;
}

RatQ RatQ::operator-() const {
    RatQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RatQ RatQ::operator+(const RatQ& o) const {
    return RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator-(const RatQ& o) const {
    return RatQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator*(const RatQ& o) const {
    return RatQ(num_ * o.num_, den_ * o.den_);
}

RatQ RatQ::operator/(const RatQ& o) const {
    if (o.is_zero()) throw std::domain_error("RatQ: division by zero");
    return RatQ(num_ * o.den_, den_ * o.num_);
}

RatQ RatQ::inverse() const {
    if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
    return RatQ(den_, num_);
}

RatQ RatQ::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatQ r(1);
    RatQ base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool RatQ::is_atomic() const {
    if (!den_.is_one()) return false;
    if (num_.is_zero()) return true;
    // single nonnegative term: bare integer or c*q^k with c > 0
    int nonzero = 0;
    for (const auto& c : num_.coeffs())
        if (c != 0) ++nonzero;
    return nonzero == 1 && num_.leading_coeff() > 0;
}

std::string RatQ::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    bool wrap_num = num_.degree() > 0 || num_.leading_coeff() < 0;
    if (wrap_num)
        os << "(" << num_.to_string() << ")";
    else
        os << num_.to_string();
    os << "/";
    if (den_.degree() > 0)
        os << "(" << den_.to_string() << ")";
    else
        os << den_.to_string();
    return os.str();
}

RatQ qint(long k) {
    if (k < 0) throw std::domain_error("qint: negative argument");
    if (k == 0) return RatQ(1);
    std::vector<BigInt> v(static_cast<std::size_t>(k), BigInt(1));
    return RatQ(ZPoly(std::move(v)));
}

RatQ qfactorial(long k) {
    if (k < 0) throw std::domain_error("qfactorial: negative argument");
    RatQ r(1);
    for (long t = 1; t <= k; ++t) r *= qint(t);
    return r;
}

RatQ substitute_power(const RatQ& a, long c) {
    if (c == 0) throw std::domain_error("substitute_power: c must be nonzero");
    if (c == 1 || a.is_zero()) return a;
    if (c > 0) {
        return RatQ(a.num().stretched(static_cast<int>(c)),
                    a.den().stretched(static_cast<int>(c)));
    }
    // q -> q^{-e}: f(q^{-e}) = rev(f)(q^e) / q^{e*deg f}
    const int e = static_cast<int>(-c);
    ZPoly n = a.num().reversed().stretched(e);
    ZPoly d = a.den().reversed().stretched(e);
    const int dn = a.num().degree();
    const int dd = a.den().degree();
    if (dd >= dn)
        n = n.shifted(e * (dd - dn));
    else
        d = d.shifted(e * (dn - dd));
    return RatQ(std::move(n), std::move(d));
}

RatQ cauchon_coeff(long k, long c) {
    if (k < 0) throw std::domain_error("cauchon_coeff: negative k");
    if (c == 0) throw std::domain_error("cauchon_coeff: c must be nonzero (root-of-unity degenerate case)");
    if (k == 0) return RatQ(1);
    RatQ one_minus_qc = RatQ(1) - RatQ::q_power(c);
    RatQ fact = substitute_power(qfactorial(k), c);
    return (one_minus_qc.pow(k) * fact).inverse();
}

} // namespace qna
