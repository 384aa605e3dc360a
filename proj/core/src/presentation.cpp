#include "qna/presentation.hpp"

#include "qna/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qna {

const NFPoly* CglPresentation::delta_entry(int j, int i) const {
    auto it = delta.find({j, i});
    if (it == delta.end() || it->second.is_zero()) return nullptr;
    return &it->second;
}

std::vector<std::int64_t> CglPresentation::weight_col(int i) const {
    std::vector<std::int64_t> w(static_cast<std::size_t>(torus_rank), 0);
    for (int r = 0; r < torus_rank; ++r)
        w[static_cast<std::size_t>(r)] =
            weights[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)];
    return w;
}

std::vector<std::int64_t> CglPresentation::h_col(int j) const {
    std::vector<std::int64_t> w(static_cast<std::size_t>(torus_rank), 0);
    for (int r = 0; r < torus_rank; ++r)
        w[static_cast<std::size_t>(r)] =
            h_exp[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)];
    return w;
}

NFPoly gen_poly(const CglPresentation& P, int i) { return NFPoly::generator(P.n, i); }

namespace {

Expo word_to_expo(int n, const std::vector<int>& word) {
    Expo e(static_cast<std::size_t>(n), 0);
    for (int g : word) e[static_cast<std::size_t>(g - 1)] += 1;
    return e;
}

std::vector<int> expo_to_word(const Expo& e) {
    std::vector<int> w;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::int64_t k = 0; k < e[i]; ++k) w.push_back(static_cast<int>(i) + 1);
    return w;
}

struct WordTerm {
    RatQ coeff;
    std::vector<int> word;
};

// Rewrite one inversion at position p: x_j x_i -> q^{m[j][i]} x_i x_j + delta_j(x_i).
// Pushes the resulting terms onto the work queue.
void rewrite_at(const CglPresentation& P, const WordTerm& t, std::size_t p,
                std::deque<WordTerm>& work) {
    const int j = t.word[p];
    const int i = t.word[p + 1];
    WordTerm swapped{t.coeff * RatQ::q_power(P.m(j, i)), t.word};
    std::swap(swapped.word[p], swapped.word[p + 1]);
    work.push_back(std::move(swapped));
    if (const NFPoly* d = P.delta_entry(j, i)) {
        for (const auto& [e, c] : d->terms()) {
            WordTerm spliced;
            spliced.coeff = t.coeff * c;
            spliced.word.assign(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(p));
            std::vector<int> mid = expo_to_word(e);
            spliced.word.insert(spliced.word.end(), mid.begin(), mid.end());
            spliced.word.insert(spliced.word.end(),
                                t.word.begin() + static_cast<std::ptrdiff_t>(p) + 2, t.word.end());
            work.push_back(std::move(spliced));
        }
    }
}

} // namespace

NFPoly normalize_word(const CglPresentation& P, const RatQ& c, const std::vector<int>& word) {
    NFPoly result;
    if (c.is_zero()) return result;
    std::deque<WordTerm> work;
    work.push_back({c, word});
    while (!work.empty()) {
        WordTerm t = std::move(work.front());
        work.pop_front();
        std::size_t p = 0;
        bool sorted = true;
        for (; p + 1 < t.word.size(); ++p) {
            if (t.word[p] > t.word[p + 1]) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            result.add_term(word_to_expo(P.n, t.word), t.coeff);
        } else {
            rewrite_at(P, t, p, work);
        }
    }
    return result;
}

NFPoly multiply(const CglPresentation& P, const NFPoly& f, const NFPoly& g) {
    NFPoly result;
    for (const auto& [ea, ca] : f.terms()) {
        for (const auto& [eb, cb] : g.terms()) {
            std::vector<int> word = expo_to_word(ea);
            std::vector<int> wb = expo_to_word(eb);
            word.insert(word.end(), wb.begin(), wb.end());
            result = result + normalize_word(P, ca * cb, word);
        }
    }
    return result;
}

NFPoly poly_pow(const CglPresentation& P, const NFPoly& f, int k) {
    if (k < 0) throw std::domain_error("poly_pow: negative exponent");
    NFPoly r = NFPoly::constant(P.n, RatQ(1));
    for (int t = 0; t < k; ++t) r = multiply(P, r, f);
    return r;
}

NFPoly apply_sigma(const CglPresentation& P, int j, std::int64_t e, const NFPoly& f) {
    if (j < 1 || j > P.n) throw std::out_of_range("apply_sigma: bad generator index");
    NFPoly r;
    for (const auto& [a, c] : f.terms()) {
        std::int64_t t = 0;
        for (int l = 1; l <= P.n; ++l) t += P.m(j, l) * a[static_cast<std::size_t>(l - 1)];
        r.add_term(a, c * RatQ::q_power(e * t));
    }
    return r;
}

NFPoly apply_delta(const CglPresentation& P, int j, const NFPoly& f) {
    if (j < 2 || j > P.n) throw std::out_of_range("apply_delta: bad generator index");
    if (!f.supported_below(j))
        throw std::domain_error("apply_delta: argument not supported below x_" + std::to_string(j));
    NFPoly r;
    for (const auto& [a, c] : f.terms()) {
        std::vector<int> word = expo_to_word(a);
        // delta(x_{i1}...x_{iL}) expanded by the twisted Leibniz rule:
        // sum over positions p of sigma(prefix) * delta(x_{ip}) * suffix.
        RatQ sigma_prefix(1);
        for (std::size_t p = 0; p < word.size(); ++p) {
            const int g = word[p];
            if (const NFPoly* d = P.delta_entry(j, g)) {
                for (const auto& [de, dc] : d->terms()) {
                    std::vector<int> w(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
                    std::vector<int> mid = expo_to_word(de);
                    w.insert(w.end(), mid.begin(), mid.end());
                    w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(p) + 1, word.end());
                    r = r + normalize_word(P, c * sigma_prefix * dc, w);
                }
            }
            sigma_prefix *= RatQ::q_power(P.m(j, g));
        }
    }
    return r;
}

std::optional<std::vector<std::int64_t>> weight_of_mono(const CglPresentation& P, const Expo& e) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(P.torus_rank), 0);
    for (int r = 0; r < P.torus_rank; ++r) {
        std::int64_t s = 0;
        for (int i = 1; i <= P.n; ++i)
            s += P.weights[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)] *
                 e[static_cast<std::size_t>(i - 1)];
        w[static_cast<std::size_t>(r)] = s;
    }
    return w;
}

std::optional<std::vector<std::int64_t>> weight_of(const CglPresentation& P, const NFPoly& f) {
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

int nilpotency_index(const CglPresentation& P, int j, const NFPoly& f, int cap) {
    NFPoly g = f;
    int t = 0;
    while (!g.is_zero()) {
        if (t >= cap)
            throw CapExceeded("nilpotency cap " + std::to_string(cap) +
                              " exceeded for delta_" + std::to_string(j) +
                              "; derivation is not locally nilpotent on the input");
        g = apply_delta(P, j, g);
        ++t;
    }
    return t;
}

std::pair<NFPoly, NFPoly> diamond_pair(const CglPresentation& P, int k, int j, int i) {
    if (!(k > j && j > i)) throw std::domain_error("diamond_pair: need k > j > i");
    WordTerm t{RatQ(1), {k, j, i}};
    std::deque<WordTerm> first, second;
    rewrite_at(P, t, 0, first);  // resolve x_k x_j first
    rewrite_at(P, t, 1, second); // resolve x_j x_i first
    NFPoly a, b;
    for (const auto& w : first) a = a + normalize_word(P, w.coeff, w.word);
    for (const auto& w : second) b = b + normalize_word(P, w.coeff, w.word);
    return {a, b};
}

} // namespace qna
