#include "qna/gbasis.hpp"

#include <deque>
#include <sstream>

namespace qna {

NFPoly make_primitive(const NFPoly& f) {
    if (f.is_zero()) return f;
    ZPoly den_lcm(1);
    for (const auto& [e, c] : f.terms()) den_lcm = ZPoly::lcm(den_lcm, c.den());
    ZPoly num_gcd;
    for (const auto& [e, c] : f.terms()) {
        // after clearing, the coefficient numerator is c.num * (den_lcm / c.den)
        ZPoly cleared = c.num() * den_lcm.divexact(c.den());
        num_gcd = ZPoly::gcd(num_gcd, cleared);
    }
    RatQ unit(den_lcm, num_gcd); // scaling by den_lcm/num_gcd clears and de-contents
    NFPoly g = f.scaled(unit);
    // normalize sign via the leading coefficient
    const RatQ& lc = g.leading_coeff();
    if (lc.num().leading_coeff() < 0) g = g.scaled(RatQ(-1));
    return g;
}

namespace {

// x^{shift} * g, asserting the expected leading monomial (solvable rings
// guarantee LM(x^a * x^b) = a + b once the presentation validates).
NFPoly shifted_multiple(const CglPresentation& P, const Expo& shift, const NFPoly& g) {
    NFPoly u = multiply(P, NFPoly::monomial(shift, RatQ(1)), g);
    if (u.is_zero() || u.leading_mono() != mono_add(shift, g.leading_mono()))
        throw InternalError("gbasis: leading monomial drifted during shift; presentation invalid?");
    return u;
}

NFPoly reduce_full(const CglPresentation& P, const std::vector<NFPoly>& basis, NFPoly work,
                   int rotation, const NFPoly* skip = nullptr) {
    NFPoly result;
    while (!work.is_zero()) {
        const Expo lead = work.leading_mono();
        const RatQ lc = work.leading_coeff();
        const NFPoly* reducer = nullptr;
        const std::size_t sz = basis.size();
        for (std::size_t t = 0; t < sz; ++t) {
            const NFPoly& g = basis[(t + static_cast<std::size_t>(rotation)) % sz];
            if (&g == skip || g.is_zero()) continue;
            if (mono_divides(g.leading_mono(), lead)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            result.add_term(lead, lc);
            work.add_term(lead, -lc);
            continue;
        }
        NFPoly u = shifted_multiple(P, mono_sub(lead, reducer->leading_mono()), *reducer);
        work = work - u.scaled(lc / u.leading_coeff());
    }
    return result;
}

NFPoly s_poly(const CglPresentation& P, const NFPoly& f, const NFPoly& g) {
    const Expo gamma = mono_lcm(f.leading_mono(), g.leading_mono());
    NFPoly uf = shifted_multiple(P, mono_sub(gamma, f.leading_mono()), f);
    NFPoly ug = shifted_multiple(P, mono_sub(gamma, g.leading_mono()), g);
    return uf.scaled(uf.leading_coeff().inverse()) - ug.scaled(ug.leading_coeff().inverse());
}

void interreduce(const CglPresentation& P, std::vector<NFPoly>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            NFPoly b = basis[k];
            NFPoly red = reduce_full(P, basis, b, 0, &basis[k]);
            if (!(red == b)) changed = true;
            if (red.is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(k));
                --k;
            } else {
                basis[k] = make_primitive(red);
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const NFPoly& a, const NFPoly& b) {
        return mono_greater(a.leading_mono(), b.leading_mono());
    });
}

struct WorkItem {
    enum Kind { SPair, RightMul } kind;
    std::size_t a = 0;
    std::size_t b = 0; // S-pair partner
    int gen = 0;       // right-multiplication generator
};

} // namespace

IdealHandle two_sided_gb(std::shared_ptr<const CglPresentation> ring, std::vector<NFPoly> gens,
                         int pair_cap) {
    const CglPresentation& P = *ring;
    IdealHandle h;
    h.ring = std::move(ring);
    h.gens = gens;

    std::vector<NFPoly> basis;
    for (const auto& g : gens) {
        if (!g.is_zero()) basis.push_back(make_primitive(g));
    }

    std::deque<WorkItem> queue;
    auto enqueue_for = [&](std::size_t idx) {
        for (std::size_t a = 0; a < idx; ++a) queue.push_back({WorkItem::SPair, a, idx, 0});
        for (int i = 1; i <= P.n; ++i) queue.push_back({WorkItem::RightMul, idx, 0, i});
    };
    for (std::size_t k = 0; k < basis.size(); ++k) enqueue_for(k);

    int processed = 0;
    while (!queue.empty()) {
        WorkItem item = queue.front();
        queue.pop_front();
        if (++processed > pair_cap) {
            std::ostringstream os;
            os << "pair cap " << pair_cap << " exceeded with " << basis.size()
               << " basis elements";
            throw GBCapExceeded(os.str(), basis);
        }
        NFPoly candidate;
        if (item.kind == WorkItem::SPair)
            candidate = s_poly(P, basis[item.a], basis[item.b]);
        else
            candidate = multiply(P, basis[item.a], gen_poly(P, item.gen));
        NFPoly red = reduce_full(P, basis, candidate, 0);
        if (!red.is_zero()) {
            basis.push_back(make_primitive(red));
            enqueue_for(basis.size() - 1);
        }
    }

    interreduce(P, basis);
    h.gb = std::move(basis);
    h.complete = true;
    h.pairs_processed = processed;
    return h;
}

IdealHandle two_sided_gb(const CglPresentation& ring, std::vector<NFPoly> gens, int pair_cap) {
    return two_sided_gb(std::make_shared<const CglPresentation>(ring), std::move(gens), pair_cap);
}

NFPoly normal_form(const IdealHandle& h, const NFPoly& f, int reducer_rotation) {
    if (!h.complete) throw std::invalid_argument("normal_form: handle not completed");
    if (h.gb.empty()) return f;
    return reduce_full(*h.ring, h.gb, f, reducer_rotation);
}

bool ideal_member(const IdealHandle& h, const NFPoly& f) { return normal_form(h, f).is_zero(); }

bool ideal_contains(const IdealHandle& big, const std::vector<NFPoly>& small_gens) {
    for (const auto& g : small_gens)
        if (!ideal_member(big, g)) return false;
    return true;
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    if (!a.complete || !b.complete) throw std::invalid_argument("ideal_equal: handles not completed");
    if (!(*a.ring == *b.ring)) throw std::invalid_argument("ideal_equal: ring mismatch");
    return ideal_contains(a, b.gens) && ideal_contains(b, a.gens);
}

std::optional<NFPoly> right_divide_by_gen(const CglPresentation& P, const NFPoly& h, int s) {
    if (h.is_zero()) return std::nullopt;
    for (const auto& [e, c] : h.terms())
        if (e[static_cast<std::size_t>(s - 1)] < 1) return std::nullopt;
    for (int l = s + 1; l <= P.n; ++l)
        if (P.delta_entry(l, s))
            throw std::invalid_argument("right_divide_by_gen: x_" + std::to_string(s) +
                                        " does not q-commute past x_" + std::to_string(l));
    NFPoly quot;
    for (const auto& [e, c] : h.terms()) {
        // x^(e - e_s) * x_s = q^(sum_{l>s} m[l][s] e_l) * x^e
        std::int64_t t = 0;
        for (int l = s + 1; l <= P.n; ++l) t += P.m(l, s) * e[static_cast<std::size_t>(l - 1)];
        Expo f = e;
        f[static_cast<std::size_t>(s - 1)] -= 1;
        quot.add_term(f, c * RatQ::q_power(-t));
    }
    return quot;
}

} // namespace qna
