#include "qna/dda.hpp"

#include "qna/errors.hpp"

#include <deque>
#include <sstream>

namespace qna {

LocElement LocElement::from_poly(int level_j, const NFPoly& f) {
    LocElement e(level_j);
    for (const auto& [a, c] : f.terms()) e.terms_.emplace(a, c);
    return e;
}

LocElement LocElement::monomial(int level_j, Expo e, RatQ c) {
    LocElement r(level_j);
    if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
    return r;
}

void LocElement::add_term(const Expo& e, const RatQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LocElement LocElement::operator+(const LocElement& o) const {
    LocElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LocElement LocElement::operator-(const LocElement& o) const {
    LocElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LocElement LocElement::scaled(const RatQ& c) const {
    LocElement r(level_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

std::int64_t LocElement::min_xj_exponent() const {
    std::int64_t m = 0;
    for (const auto& [e, c] : terms_)
        m = std::min(m, e[static_cast<std::size_t>(level_ - 1)]);
    return m;
}

std::optional<NFPoly> LocElement::to_poly() const {
    NFPoly p;
    for (const auto& [e, c] : terms_) {
        for (std::int64_t v : e)
            if (v < 0) return std::nullopt;
        p.add_term(e, c);
    }
    return p;
}

std::string LocElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const std::string mono = mono_to_string(e);
        if (mono == "1")
            os << "(" << c.to_string() << ")";
        else
            os << "(" << c.to_string() << ") " << mono;
    }
    return os.str();
}

const CglPresentation& PresentationTower::level(int j) const {
    if (j < 2 || j > n_ + 1) throw std::out_of_range("PresentationTower::level: j out of range");
    return *levels_[static_cast<std::size_t>(j - 2)];
}

std::shared_ptr<const CglPresentation> PresentationTower::level_ptr(int j) const {
    if (j < 2 || j > n_ + 1) throw std::out_of_range("PresentationTower::level: j out of range");
    return levels_[static_cast<std::size_t>(j - 2)];
}

const LocElement& PresentationTower::image(int j, int i) const {
    if (j < 2 || j > n_) throw std::out_of_range("PresentationTower::image: j out of range");
    if (i < 1 || i > n_) throw std::out_of_range("PresentationTower::image: i out of range");
    return images_[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(i - 1)];
}

CglPresentation delete_step(const CglPresentation& P, int j) {
    if (j < 2 || j > P.n) throw std::out_of_range("delete_step: j out of range");
    CglPresentation Q = P;
    for (auto it = Q.delta.begin(); it != Q.delta.end();) {
        if (it->first.first == j)
            it = Q.delta.erase(it);
        else
            ++it;
    }
    return Q;
}

namespace {

LocElement compute_generator_image(const PresentationTower& tower, int j, int i) {
    const int n = tower.length();
    if (i >= j) {
        Expo e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        return LocElement::monomial(j, std::move(e), RatQ(1));
    }
    const CglPresentation& P1 = tower.level(j + 1);
    const long cj = P1.q_exp[static_cast<std::size_t>(j - 1)];
    const int t = nilpotency_index(P1, j, gen_poly(P1, i), tower.nilpotency_cap());
    LocElement acc(j);
    NFPoly dk = gen_poly(P1, i); // delta_j^k(x_i) as k advances
    for (int k = 0; k < t; ++k) {
        const RatQ coeff = cauchon_coeff(k, cj) * RatQ::q_power(-static_cast<long>(k) * P1.m(j, i));
        for (const auto& [e, c] : dk.terms()) {
            Expo le = e;
            le[static_cast<std::size_t>(j - 1)] -= k;
            acc.add_term(le, c * coeff);
        }
        dk = apply_delta(P1, j, dk);
    }
    return acc;
}

} // namespace

PresentationTower build_tower(const CglPresentation& P, int nilpotency_cap) {
    PresentationTower t;
    t.n_ = P.n;
    t.nilpotency_cap_ = nilpotency_cap;
    t.levels_.resize(static_cast<std::size_t>(P.n));
    t.levels_[static_cast<std::size_t>(P.n - 1)] = std::make_shared<const CglPresentation>(P);
    for (int j = P.n; j >= 2; --j) {
        const CglPresentation& upper = *t.levels_[static_cast<std::size_t>(j - 1)];
        if (j == P.n) {
            ValidationReport rep = validate_cgl(upper, nilpotency_cap);
            if (!rep.all_pass())
                throw ValidationError("build_tower: level " + std::to_string(j + 1) +
                                      " fails validation:\n" + rep.summary());
        }
        CglPresentation lower = delete_step(upper, j);
        ValidationReport rep = validate_cgl(lower, nilpotency_cap);
        if (!rep.all_pass())
            throw ValidationError("build_tower: level " + std::to_string(j) +
                                  " fails validation:\n" + rep.summary());
        t.levels_[static_cast<std::size_t>(j - 2)] = std::make_shared<const CglPresentation>(std::move(lower));
    }
    if (P.n == 1) {
        ValidationReport rep = validate_cgl(P, nilpotency_cap);
        if (!rep.all_pass())
            throw ValidationError("build_tower: level 2 fails validation:\n" + rep.summary());
    }
    // the bottom level must be derivation-free
    if (!t.level(2).delta.empty())
        throw InternalError("build_tower: bottom level still carries delta entries");
    // precompute the localized generator images for every step
    if (P.n >= 2) {
        t.images_.resize(static_cast<std::size_t>(P.n - 1));
        for (int j = 2; j <= P.n; ++j) {
            auto& row = t.images_[static_cast<std::size_t>(j - 2)];
            row.reserve(static_cast<std::size_t>(P.n));
            for (int i = 1; i <= P.n; ++i) row.push_back(compute_generator_image(t, j, i));
        }
    }
    return t;
}

namespace {

// Letters of localized words: 1..n are the generators, 0 is x_j^{-1}.
constexpr int kInv = 0;

struct LocTerm {
    RatQ coeff;
    std::vector<int> word;
};

int letter_rank(int letter, int j) { return letter == kInv ? j : letter; }

std::vector<int> loc_expo_to_word(const Expo& e, int j) {
    std::vector<int> w;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const int gen = static_cast<int>(i) + 1;
        if (gen == j && e[i] < 0) {
            for (std::int64_t k = 0; k < -e[i]; ++k) w.push_back(kInv);
        } else {
            for (std::int64_t k = 0; k < e[i]; ++k) w.push_back(gen);
        }
    }
    return w;
}

Expo loc_word_to_expo(int n, int j, const std::vector<int>& word) {
    Expo e(static_cast<std::size_t>(n), 0);
    for (int letter : word) {
        if (letter == kInv)
            e[static_cast<std::size_t>(j - 1)] -= 1;
        else
            e[static_cast<std::size_t>(letter - 1)] += 1;
    }
    return e;
}

constexpr long kLocRewriteCap = 50'000'000;

} // namespace

LocElement loc_multiply(const PresentationTower& tower, int j, const LocElement& f,
                        const LocElement& g) {
    if (f.level() != j || g.level() != j)
        throw std::invalid_argument("loc_multiply: operands at the wrong level");
    const CglPresentation& P = tower.level(j + 1);
    const int n = P.n;
    LocElement result(j);
    std::deque<LocTerm> work;
    for (const auto& [ea, ca] : f.terms()) {
        for (const auto& [eb, cb] : g.terms()) {
            std::vector<int> w = loc_expo_to_word(ea, j);
            std::vector<int> wb = loc_expo_to_word(eb, j);
            w.insert(w.end(), wb.begin(), wb.end());
            work.push_back({ca * cb, std::move(w)});
        }
    }
    long steps = 0;
    while (!work.empty()) {
        LocTerm t = std::move(work.front());
        work.pop_front();
        if (++steps > kLocRewriteCap)
            throw CapExceeded("loc_multiply: rewrite step cap exceeded");
        // find leftmost reducible adjacent pair
        std::size_t p = 0;
        int action = -1; // 0 cancel, 1 ordinary swap, 2 inv-vs-lower, 3 upper-vs-inv
        for (; p + 1 < t.word.size(); ++p) {
            const int a = t.word[p];
            const int b = t.word[p + 1];
            if ((a == j && b == kInv) || (a == kInv && b == j)) {
                action = 0;
                break;
            }
            if (a != kInv && b != kInv && a > b) {
                action = 1;
                break;
            }
            if (a == kInv && b != kInv && b < j) {
                action = 2;
                break;
            }
            if (a != kInv && b == kInv && a > j) {
                action = 3;
                break;
            }
            if (letter_rank(a, j) > letter_rank(b, j)) {
                throw InternalError("loc_multiply: unhandled inversion");
            }
        }
        if (action == -1) {
            result.add_term(loc_word_to_expo(n, j, t.word), t.coeff);
            continue;
        }
        auto splice = [&](std::vector<int> mid, const RatQ& c) {
            LocTerm nt;
            nt.coeff = c;
            nt.word.assign(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(p));
            nt.word.insert(nt.word.end(), mid.begin(), mid.end());
            nt.word.insert(nt.word.end(), t.word.begin() + static_cast<std::ptrdiff_t>(p) + 2,
                           t.word.end());
            work.push_back(std::move(nt));
        };
        const int a = t.word[p];
        const int b = t.word[p + 1];
        switch (action) {
        case 0: // x_j x_j^{-1} or x_j^{-1} x_j
            splice({}, t.coeff);
            break;
        case 1: { // ordinary inversion x_a x_b with a > b
            splice({b, a}, t.coeff * RatQ::q_power(P.m(a, b)));
            if (const NFPoly* d = P.delta_entry(a, b)) {
                for (const auto& [e, c] : d->terms())
                    splice(loc_expo_to_word(e, j), t.coeff * c);
            }
            break;
        }
        case 2: { // x_j^{-1} x_b with b < j
            const RatQ s = RatQ::q_power(-P.m(j, b));
            splice({b, kInv}, t.coeff * s);
            if (const NFPoly* d = P.delta_entry(j, b)) {
                for (const auto& [e, c] : d->terms()) {
                    std::vector<int> mid;
                    mid.push_back(kInv);
                    std::vector<int> me = loc_expo_to_word(e, j);
                    mid.insert(mid.end(), me.begin(), me.end());
                    mid.push_back(kInv);
                    splice(std::move(mid), -(t.coeff * s * c));
                }
            }
            break;
        }
        case 3: // x_a x_j^{-1} with a > j
            splice({kInv, a}, t.coeff * RatQ::q_power(-P.m(a, j)));
            break;
        default:
            throw InternalError("loc_multiply: bad action");
        }
    }
    return result;
}

LocElement generator_image(const PresentationTower& tower, int j, int i) {
    return tower.image(j, i);
}

LocElement theta_image(const PresentationTower& tower, int j, const NFPoly& f) {
    const int n = tower.length();
    LocElement acc(j);
    for (const auto& [a, c] : f.terms()) {
        LocElement prod =
            LocElement::monomial(j, Expo(static_cast<std::size_t>(n), 0), RatQ(1));
        for (int i = 1; i <= n; ++i) {
            for (std::int64_t k = 0; k < a[static_cast<std::size_t>(i - 1)]; ++k)
                prod = loc_multiply(tower, j, prod, tower.image(j, i));
        }
        acc = acc + prod.scaled(c);
    }
    return acc;
}

bool CheckReport::all_pass() const {
    for (const auto& r : relations)
        if (!r.pass) return false;
    return true;
}

CheckReport matchloc_check(const PresentationTower& tower, int j) {
    const CglPresentation& Plevel = tower.level(j);
    const int n = tower.length();
    CheckReport rep;
    rep.level_j = j;
    for (int l = 2; l <= n; ++l) {
        for (int i = 1; i < l; ++i) {
            const LocElement& xl = tower.image(j, l);
            const LocElement& xi = tower.image(j, i);
            LocElement lhs = loc_multiply(tower, j, xl, xi) -
                             loc_multiply(tower, j, xi, xl).scaled(RatQ::q_power(Plevel.m(l, i)));
            LocElement rhs(j);
            if (const NFPoly* d = Plevel.delta_entry(l, i)) rhs = theta_image(tower, j, *d);
            RelationCheck rc;
            rc.l = l;
            rc.i = i;
            rc.pass = (lhs == rhs);
            if (!rc.pass) rc.note = "residual: " + (lhs - rhs).to_string();
            rep.relations.push_back(std::move(rc));
        }
    }
    return rep;
}

std::optional<std::vector<std::int64_t>> loc_weight_of(const CglPresentation& P,
                                                       const LocElement& f) {
    if (f.is_zero()) return std::nullopt;
    std::optional<std::vector<std::int64_t>> w;
    for (const auto& [e, c] : f.terms()) {
        auto we = weight_of_mono(P, e);
        if (!w)
            w = we;
        else if (*w != *we)
            return std::nullopt;
    }
    return w;
}

NFPoly rename_up(const PresentationTower& tower, int j, const NFPoly& f) {
    if (j < 2 || j > tower.length()) throw std::out_of_range("rename_up: j out of range");
    if (!f.is_zero() && f.var_count() != tower.length())
        throw std::invalid_argument("rename_up: wrong exponent length");
    return f;
}

IdealHandle xj_ideal(const PresentationTower& tower, int j, int pair_cap) {
    return two_sided_gb(tower.level_ptr(j + 1), {gen_poly(tower.level(j + 1), j)}, pair_cap);
}

NFPoly g_map(const PresentationTower& tower, int j, const NFPoly& f, const IdealHandle& xj) {
    if (!xj.complete) throw std::invalid_argument("g_map: ideal handle not completed");
    if (!(*xj.ring == tower.level(j + 1)))
        throw std::invalid_argument("g_map: ideal handle lives over the wrong level");
    return normal_form(xj, rename_up(tower, j, f));
}

} // namespace qna
