#include "qna/nfpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qna {

bool mono_less(const Expo& a, const Expo& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = n; k-- > 0;) {
        const std::int64_t av = k < a.size() ? a[k] : 0;
        const std::int64_t bv = k < b.size() ? b[k] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

bool mono_greater(const Expo& a, const Expo& b) { return mono_less(b, a); }

bool mono_divides(const Expo& b, const Expo& a) {
    if (b.size() != a.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

Expo mono_sub(const Expo& a, const Expo& b) {
    Expo r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Expo mono_add(const Expo& a, const Expo& b) {
    Expo r = a;
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
        if (r[i] < a[i] && b[i] > 0) throw std::overflow_error("monomial exponent overflow");
    }
    return r;
}

Expo mono_lcm(const Expo& a, const Expo& b) {
    Expo r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

NFPoly NFPoly::constant(int n, const RatQ& c) {
    NFPoly p;
    if (!c.is_zero()) p.terms_.emplace(Expo(static_cast<std::size_t>(n), 0), c);
    return p;
}

NFPoly NFPoly::monomial(Expo e, RatQ c) {
    NFPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

NFPoly NFPoly::generator(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("NFPoly::generator: index out of range");
    Expo e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(std::move(e), RatQ(1));
}

const Expo& NFPoly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("NFPoly: leading term of zero");
    return terms_.begin()->first;
}

const RatQ& NFPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("NFPoly: leading term of zero");
    return terms_.begin()->second;
}

void NFPoly::add_term(const Expo& e, const RatQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NFPoly NFPoly::operator+(const NFPoly& o) const {
    NFPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

NFPoly NFPoly::operator-(const NFPoly& o) const {
    NFPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

NFPoly NFPoly::operator-() const {
    NFPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

NFPoly NFPoly::scaled(const RatQ& c) const {
    NFPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

int NFPoly::max_support_index() const {
    int best = 0;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = e.size(); i-- > 0;)
            if (e[i] != 0) {
                best = std::max(best, static_cast<int>(i) + 1);
                break;
            }
    return best;
}

bool NFPoly::supported_below(int j) const { return max_support_index() < j; }

int NFPoly::var_count() const {
    return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

std::string mono_to_string(const Expo& e) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << " ";
        os << "x" << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
        any = true;
    }
    if (!any) return "1";
    return os.str();
}

std::string NFPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        RatQ coeff = c;
        bool neg = false;
        // pull a leading minus out of pure negatives for readability
        if (coeff.den().is_one() && coeff.num().leading_coeff() < 0) {
            neg = true;
            coeff = -coeff;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const std::string mono = mono_to_string(e);
        if (mono == "1") {
            os << (coeff.is_atomic() ? coeff.to_string() : "(" + coeff.to_string() + ")");
        } else {
            if (!coeff.is_one()) {
                os << (coeff.is_atomic() ? coeff.to_string() : "(" + coeff.to_string() + ")");
                os << " ";
            }
            os << mono;
        }
    }
    return os.str();
}

} // namespace qna
