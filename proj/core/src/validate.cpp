#include "qna/validate.hpp"

#include "qna/errors.hpp"

#include <sstream>

namespace qna {

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const ValidationCheck* ValidationReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.id << ": " << c.description;
        if (!c.pass && !c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

namespace {

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool check_structure(const CglPresentation& P, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    const auto n = static_cast<std::size_t>(P.n);
    if (P.n < 1) {
        detail = "n must be positive";
        return false;
    }
    if (P.lambda_exp.size() != n) {
        detail = "lambda_exp must have n rows";
        return false;
    }
    for (const auto& row : P.lambda_exp)
        if (row.size() != n) {
            detail = "lambda_exp must be n x n";
            return false;
        }
    for (int j = 1; j <= P.n; ++j)
        for (int i = 1; i <= P.n; ++i)
            if (P.m(j, i) != -P.m(i, j)) {
                os << "lambda_exp not antisymmetric at (" << j << "," << i << "); ";
                ok = false;
            }
    if (P.q_exp.size() != n) {
        detail = "q_exp must have length n";
        return false;
    }
    for (int j = 2; j <= P.n; ++j)
        if (P.q_exp[static_cast<std::size_t>(j - 1)] == 0) {
            os << "q_exp[" << j << "] must be nonzero; ";
            ok = false;
        }
    if (P.torus_rank < 0) {
        detail = "torus_rank must be >= 0";
        return false;
    }
    const auto d = static_cast<std::size_t>(P.torus_rank);
    if (P.weights.size() != d || P.h_exp.size() != d) {
        detail = "weights and h_exp must have torus_rank rows";
        return false;
    }
    for (const auto& row : P.weights)
        if (row.size() != n) {
            detail = "weights must be d x n";
            return false;
        }
    for (const auto& row : P.h_exp)
        if (row.size() != n) {
            detail = "h_exp must be d x n";
            return false;
        }
    for (const auto& [key, poly] : P.delta) {
        const auto [j, i] = key;
        if (!(1 <= i && i < j && j <= P.n)) {
            os << "delta." << j << "." << i << " has an out-of-range index pair; ";
            ok = false;
            continue;
        }
        if (poly.is_zero()) continue;
        if (poly.var_count() != P.n) {
            os << "delta." << j << "." << i << " has wrong exponent length; ";
            ok = false;
            continue;
        }
        if (!poly.supported_below(j)) {
            os << "delta." << j << "." << i << " involves generators of index >= " << j << "; ";
            ok = false;
        }
        for (const auto& [e, c] : poly.terms())
            for (std::int64_t v : e)
                if (v < 0) {
                    os << "delta." << j << "." << i << " has a negative exponent; ";
                    ok = false;
                }
    }
    detail = os.str();
    return ok;
}

} // namespace

ValidationReport validate_cgl(const CglPresentation& P, int nilpotency_cap) {
    ValidationReport rep;

    // (a) structural invariants
    {
        ValidationCheck c{"structure",
                          "matrix shapes, antisymmetry, delta support, nonzero q exponents",
                          false,
                          ""};
        c.pass = check_structure(P, c.detail);
        rep.checks.push_back(c);
        if (!c.pass) {
            // dependent checks are meaningless on malformed data
            rep.checks.push_back({"eigen_consistency", "skipped: structural failure", false, c.detail});
            rep.checks.push_back({"omitted_identity", "skipped: structural failure", false, c.detail});
            rep.checks.push_back({"local_nilpotency", "skipped: structural failure", false, c.detail});
            rep.checks.push_back({"diamond", "skipped: structural failure", false, c.detail});
            rep.checks.push_back({"torus", "skipped: structural failure", false, c.detail});
            return rep;
        }
    }

    // (b) sigma_j scales delta_l(x_i) by q^{m[j][l] + m[j][i]} for i < l < j
    {
        ValidationCheck c{"eigen_consistency",
                          "sigma_j(delta_l(x_i)) = q^(m[j][l]+m[j][i]) delta_l(x_i) for i < l < j",
                          true,
                          ""};
        std::ostringstream os;
        for (const auto& [key, poly] : P.delta) {
            const auto [l, i] = key;
            if (poly.is_zero()) continue;
            for (int j = l + 1; j <= P.n; ++j) {
                NFPoly lhs = apply_sigma(P, j, 1, poly);
                NFPoly rhs = poly.scaled(RatQ::q_power(P.m(j, l) + P.m(j, i)));
                if (!(lhs == rhs)) {
                    c.pass = false;
                    os << "fails at (j,l,i)=(" << j << "," << l << "," << i << "); ";
                }
            }
        }
        c.detail = os.str();
        rep.checks.push_back(c);
    }

    // (c) sigma_j(delta_j(x_i)) = q^{c_j + m[j][i]} delta_j(x_i)
    {
        ValidationCheck c{"omitted_identity",
                          "sigma_j(delta_j(x_i)) = q^(c_j+m[j][i]) delta_j(x_i) for i < j",
                          true,
                          ""};
        std::ostringstream os;
        for (const auto& [key, poly] : P.delta) {
            const auto [j, i] = key;
            if (poly.is_zero()) continue;
            NFPoly lhs = apply_sigma(P, j, 1, poly);
            NFPoly rhs = poly.scaled(RatQ::q_power(P.q_exp[static_cast<std::size_t>(j - 1)] + P.m(j, i)));
            if (!(lhs == rhs)) {
                c.pass = false;
                os << "fails at (j,i)=(" << j << "," << i << "); ";
            }
        }
        c.detail = os.str();
        rep.checks.push_back(c);
    }

    // (d) local nilpotency on generators, capped
    {
        ValidationCheck c{"local_nilpotency",
                          "delta_j^t(x_i) = 0 for some t within the cap, for all i < j",
                          true,
                          ""};
        std::ostringstream os;
        for (int j = 2; j <= P.n; ++j) {
            bool has_delta = false;
            for (int i = 1; i < j; ++i)
                if (P.delta_entry(j, i)) has_delta = true;
            if (!has_delta) continue;
            for (int i = 1; i < j; ++i) {
                try {
                    nilpotency_index(P, j, gen_poly(P, i), nilpotency_cap);
                } catch (const CapExceeded&) {
                    c.pass = false;
                    os << "delta_" << j << " orbit of x_" << i << " exceeds cap " << nilpotency_cap
                       << "; ";
                }
            }
        }
        c.detail = os.str();
        rep.checks.push_back(c);
    }

    // (e) confluence on the overlap words x_k x_j x_i
    {
        ValidationCheck c{"diamond",
                          "both rewrite orders of x_k x_j x_i agree for all k > j > i",
                          true,
                          ""};
        std::ostringstream os;
        for (int k = 3; k <= P.n; ++k)
            for (int j = 2; j < k; ++j)
                for (int i = 1; i < j; ++i) {
                    auto [a, b] = diamond_pair(P, k, j, i);
                    if (!(a == b)) {
                        c.pass = false;
                        os << "overlap x_" << k << " x_" << j << " x_" << i << " is not confluent; ";
                    }
                }
        c.detail = os.str();
        rep.checks.push_back(c);
    }

    // (f) integer torus conditions and weight homogeneity
    {
        ValidationCheck c{"torus",
                          "<E_j,W_i> = m[j][i], <E_j,W_j> = c_j != 0 (j >= 2), W_1 != 0, "
                          "delta entries homogeneous of weight W_i + W_j",
                          true,
                          ""};
        std::ostringstream os;
        for (int j = 2; j <= P.n; ++j) {
            const auto Ej = P.h_col(j);
            for (int i = 1; i < j; ++i) {
                if (dot(Ej, P.weight_col(i)) != P.m(j, i)) {
                    c.pass = false;
                    os << "<E_" << j << ",W_" << i << "> != m[" << j << "][" << i << "]; ";
                }
            }
            if (dot(Ej, P.weight_col(j)) != P.q_exp[static_cast<std::size_t>(j - 1)]) {
                c.pass = false;
                os << "<E_" << j << ",W_" << j << "> != c_" << j << "; ";
            }
        }
        {
            bool w1_nonzero = false;
            for (std::int64_t v : P.weight_col(1))
                if (v != 0) w1_nonzero = true;
            if (!w1_nonzero && P.n >= 1) {
                c.pass = false;
                os << "W_1 = 0, so no torus element rescales x_1 by a non-root-of-unity; ";
            }
        }
        for (const auto& [key, poly] : P.delta) {
            const auto [j, i] = key;
            if (poly.is_zero()) continue;
            auto w = weight_of(P, poly);
            std::vector<std::int64_t> expect = P.weight_col(i);
            const auto wj = P.weight_col(j);
            for (std::size_t r = 0; r < expect.size(); ++r) expect[r] += wj[r];
            if (!w || *w != expect) {
                c.pass = false;
                os << "delta." << j << "." << i << " is not homogeneous of weight W_" << i << "+W_"
                   << j << "; ";
            }
        }
        c.detail = os.str();
        rep.checks.push_back(c);
    }

    return rep;
}

} // namespace qna
