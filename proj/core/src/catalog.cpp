#include "qna/catalog.hpp"

#include "qna/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

namespace qna {

namespace {

std::vector<std::vector<std::int64_t>> zero_matrix(std::size_t rows, std::size_t cols) {
    return std::vector<std::vector<std::int64_t>>(rows, std::vector<std::int64_t>(cols, 0));
}

} // namespace

CglPresentation make_quantum_affine(int n, const std::vector<std::vector<std::int64_t>>& exp) {
    if (n < 1) throw std::invalid_argument("make_quantum_affine: n must be positive");
    if (exp.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("make_quantum_affine: matrix must be n x n");
    for (const auto& row : exp)
        if (row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("make_quantum_affine: matrix must be n x n");
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (exp[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] !=
                -exp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                throw std::invalid_argument("make_quantum_affine: matrix must be antisymmetric");

    CglPresentation P;
    P.n = n;
    P.lambda_exp = exp;
    P.q_exp.assign(static_cast<std::size_t>(n), 1);
    P.q_exp[0] = 0; // unused
    P.torus_rank = n;
    P.weights = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) P.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    // E_j = row j of the exponent matrix off the diagonal, 1 on it; with the
    // identity weights this solves every eigen-equation with q_j = q.
    P.h_exp = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            P.h_exp[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                (i == j) ? 1 : P.m(j, i);
    return P;
}

CglPresentation make_weyl_q() {
    CglPresentation P;
    P.n = 2;
    P.lambda_exp = {{0, -1}, {1, 0}};
    P.delta[{2, 1}] = NFPoly::constant(2, RatQ(1));
    P.q_exp = {0, -1};
    P.torus_rank = 1;
    P.weights = {{1, -1}};
    P.h_exp = {{1, 1}};
    return P;
}

CglPresentation make_quantum_matrices(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("make_quantum_matrices: dimensions must be positive");
    const int n = rows * cols;
    auto idx = [cols](int r, int c) { return (r - 1) * cols + c; }; // 1-based
    CglPresentation P;
    P.n = n;
    P.lambda_exp = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    auto set_m = [&](int j, int i, std::int64_t v) {
        P.lambda_exp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
        P.lambda_exp[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -v;
    };
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            const int j = idx(r, c);
            for (int r2 = 1; r2 <= rows; ++r2)
                for (int c2 = 1; c2 <= cols; ++c2) {
                    const int i = idx(r2, c2);
                    if (i >= j) continue;
                    if (r2 == r || c2 == c) {
                        set_m(j, i, -1); // same row or column: x_j x_i = q^{-1} x_i x_j
                    } else if (c2 < c) {
                        // strictly northwest: commutes up to the derivation
                        set_m(j, i, 0);
                        NFPoly d;
                        Expo e(static_cast<std::size_t>(n), 0);
                        e[static_cast<std::size_t>(idx(r2, c) - 1)] += 1;
                        e[static_cast<std::size_t>(idx(r, c2) - 1)] += 1;
                        d.add_term(e, RatQ::q_power(-1) - RatQ::q_power(1));
                        P.delta[{j, i}] = d;
                    } else {
                        set_m(j, i, 0); // strictly northeast: commutes exactly
                    }
                }
        }
    const int d = rows + cols;
    P.torus_rank = d;
    P.weights = zero_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
    P.h_exp = zero_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
    P.q_exp.assign(static_cast<std::size_t>(n), 0);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            const int j = idx(r, c);
            P.weights[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] = 1;
            P.weights[static_cast<std::size_t>(rows + c - 1)][static_cast<std::size_t>(j - 1)] = 1;
            if (r == 1 && c == 1) {
                P.h_exp[0][static_cast<std::size_t>(j - 1)] = 1;
                P.q_exp[static_cast<std::size_t>(j - 1)] = 0; // unused slot
            } else if (r == 1) {
                P.h_exp[0][static_cast<std::size_t>(j - 1)] = -1;
                P.q_exp[static_cast<std::size_t>(j - 1)] = -1;
            } else if (c == 1) {
                P.h_exp[static_cast<std::size_t>(rows)][static_cast<std::size_t>(j - 1)] = -1;
                P.q_exp[static_cast<std::size_t>(j - 1)] = -1;
            } else {
                P.h_exp[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] = -1;
                P.h_exp[static_cast<std::size_t>(rows + c - 1)][static_cast<std::size_t>(j - 1)] =
                    -1;
                P.q_exp[static_cast<std::size_t>(j - 1)] = -2;
            }
        }
    return P;
}

CglPresentation make_quantum_matrices_2() { return make_quantum_matrices(2, 2); }

CglPresentation make_jordan_counterexample() {
    CglPresentation P;
    P.n = 3;
    P.lambda_exp = zero_matrix(3, 3);
    P.delta[{3, 1}] = NFPoly::monomial({0, 1, 0}, RatQ(2));
    {
        NFPoly d;
        d.add_term({1, 0, 0}, RatQ(1));
        d.add_term({0, 2, 0}, RatQ(1));
        P.delta[{3, 2}] = d;
    }
    P.q_exp = {0, 1, 1};
    P.torus_rank = 1;
    P.weights = {{0, 0, 0}};
    P.h_exp = {{0, 0, 0}};
    return P;
}

std::set<std::uint32_t> le_diagram_oracle(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("le_diagram_oracle: dimensions must be positive");
    const int n = rows * cols;
    if (n > 16) throw std::invalid_argument("le_diagram_oracle: grid too large to enumerate");
    auto bit = [cols](int r, int c) { return (r - 1) * cols + (c - 1); }; // 0-based bit
    std::set<std::uint32_t> good;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int r = 1; r <= rows && ok; ++r)
            for (int c = 1; c <= cols && ok; ++c) {
                if (!((mask >> bit(r, c)) & 1u)) continue;
                bool col_black = true;
                for (int r2 = 1; r2 < r; ++r2)
                    if (!((mask >> bit(r2, c)) & 1u)) col_black = false;
                bool row_black = true;
                for (int c2 = 1; c2 < c; ++c2)
                    if (!((mask >> bit(r, c2)) & 1u)) row_black = false;
                if (!col_black && !row_black) ok = false;
            }
        if (ok) good.insert(mask);
    }
    return good;
}

// ---- catalog registry -----------------------------------------------------

namespace {

std::vector<std::vector<std::int64_t>> all_ones_exp(int n) {
    auto m = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (j > i) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
            if (j < i) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
        }
    return m;
}

bool parse_suffix_int(const std::string& s, const std::string& prefix, int& out) {
    if (s.rfind(prefix, 0) != 0) return false;
    const std::string rest = s.substr(prefix.size());
    if (rest.empty() || rest.size() > 2) return false;
    for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoi(rest);
    return true;
}

bool parse_matrix_name(const std::string& s, int& r, int& c) {
    const std::string prefix = "quantum_matrices_";
    if (s.rfind(prefix, 0) != 0) return false;
    const std::string rest = s.substr(prefix.size());
    const auto x = rest.find('x');
    if (x == std::string::npos) return false;
    const std::string rs = rest.substr(0, x);
    const std::string cs = rest.substr(x + 1);
    if (rs.empty() || cs.empty()) return false;
    for (char ch : rs + cs)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    r = std::stoi(rs);
    c = std::stoi(cs);
    return true;
}

} // namespace

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    if (name == "weyl_q")
        return CatalogEntry{name, "first quantized Weyl algebra A_1^q", make_weyl_q(), true};
    if (name == "quantum_plane")
        return CatalogEntry{name, "quantum plane x2 x1 = q x1 x2",
                            make_quantum_affine(2, all_ones_exp(2)), true};
    if (name == "jordan")
        return CatalogEntry{name,
                            "polynomial ring with a non-nilpotent derivation adjoined "
                            "(validation is expected to fail)",
                            make_jordan_counterexample(), false};
    if (name == "quantum_matrices_2")
        return CatalogEntry{name, "2x2 quantum matrices", make_quantum_matrices_2(), true};
    int k = 0;
    if (parse_suffix_int(name, "quantum_affine_", k)) {
        if (k < 1 || k > 12) return std::nullopt;
        return CatalogEntry{name, "quantum affine space with all exponents 1",
                            make_quantum_affine(k, all_ones_exp(k)), true};
    }
    int r = 0, c = 0;
    if (parse_matrix_name(name, r, c)) {
        if (r < 1 || c < 1 || r * c > 12) return std::nullopt;
        return CatalogEntry{name,
                            std::to_string(r) + "x" + std::to_string(c) + " quantum matrices",
                            make_quantum_matrices(r, c), true};
    }
    return std::nullopt;
}

std::vector<std::string> catalog_names() {
    return {"weyl_q",
            "quantum_plane",
            "quantum_affine_1",
            "quantum_affine_2",
            "quantum_affine_3",
            "quantum_affine_4",
            "quantum_matrices_2",
            "quantum_matrices_2x2",
            "quantum_matrices_2x3",
            "jordan"};
}

// ---- presentation text format ---------------------------------------------

namespace {

struct RawDoc {
    // key -> (value, line)
    std::map<std::string, std::pair<std::string, int>> kv;
    std::vector<std::tuple<int, int, std::string, int>> deltas; // j, i, expr, line
};

RawDoc split_document(const std::string& text, const std::string& origin) {
    RawDoc doc;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        auto notspace = [](char c) { return !std::isspace(static_cast<unsigned char>(c)); };
        auto b = std::find_if(line.begin(), line.end(), notspace);
        auto e = std::find_if(line.rbegin(), line.rend(), notspace).base();
        if (b >= e) continue;
        std::string body(b, e);
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin + ": expected 'key = value' on line " +
                                 std::to_string(lineno),
                             lineno, 1);
        std::string key = body.substr(0, eq);
        std::string val = body.substr(eq + 1);
        auto trim = [&](std::string s) {
            auto b2 = std::find_if(s.begin(), s.end(), notspace);
            auto e2 = std::find_if(s.rbegin(), s.rend(), notspace).base();
            return b2 >= e2 ? std::string() : std::string(b2, e2);
        };
        key = trim(key);
        val = trim(val);
        if (key.rfind("delta.", 0) == 0) {
            const std::string rest = key.substr(6);
            const auto dot = rest.find('.');
            if (dot == std::string::npos)
                throw ParseError(origin + ": delta key must be delta.J.I (line " +
                                     std::to_string(lineno) + ")",
                                 lineno, 1);
            int j = 0, i = 0;
            try {
                j = std::stoi(rest.substr(0, dot));
                i = std::stoi(rest.substr(dot + 1));
            } catch (const std::exception&) {
                throw ParseError(origin + ": bad delta indices in '" + key + "' (line " +
                                     std::to_string(lineno) + ")",
                                 lineno, 1);
            }
            doc.deltas.emplace_back(j, i, val, lineno);
        } else {
            if (doc.kv.count(key))
                throw ParseError(origin + ": duplicate key '" + key + "' (line " +
                                     std::to_string(lineno) + ")",
                                 lineno, 1);
            doc.kv[key] = {val, lineno};
        }
    }
    return doc;
}

std::vector<std::int64_t> parse_int_row(const std::string& s, const std::string& what, int line) {
    std::vector<std::int64_t> row;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        try {
            row.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParseError(what + ": expected integer, got '" + tok + "'", line, 1);
        }
    }
    return row;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const std::string& s, const std::string& what,
                                                    int line) {
    std::vector<std::vector<std::int64_t>> m;
    std::string row;
    std::istringstream is(s);
    while (std::getline(is, row, ';')) m.push_back(parse_int_row(row, what, line));
    if (m.size() == 1 && m[0].empty()) m.clear();
    return m;
}

} // namespace

CglPresentation parse_presentation_text(const std::string& text, const std::string& origin) {
    RawDoc doc = split_document(text, origin);
    auto require = [&](const std::string& key) -> std::pair<std::string, int> {
        auto it = doc.kv.find(key);
        if (it == doc.kv.end()) throw ParseError(origin + ": missing key '" + key + "'", 0, 0);
        return it->second;
    };
    for (const auto& [key, vp] : doc.kv) {
        if (key != "n" && key != "lambda_exp" && key != "q_exp" && key != "torus_rank" &&
            key != "weights" && key != "h_exp")
            throw ParseError(origin + ": unknown key '" + key + "' (line " +
                                 std::to_string(vp.second) + ")",
                             vp.second, 1);
    }

    CglPresentation P;
    {
        auto [v, line] = require("n");
        try {
            P.n = std::stoi(v);
        } catch (const std::exception&) {
            throw ParseError(origin + ": n must be an integer", line, 1);
        }
        if (P.n < 1 || P.n > 30) throw ParseError(origin + ": n out of range", line, 1);
    }
    {
        auto [v, line] = require("lambda_exp");
        P.lambda_exp = parse_matrix(v, "lambda_exp", line);
        if (P.lambda_exp.size() != static_cast<std::size_t>(P.n))
            throw ParseError(origin + ": lambda_exp must have n rows", line, 1);
        for (const auto& row : P.lambda_exp)
            if (row.size() != static_cast<std::size_t>(P.n))
                throw ParseError(origin + ": lambda_exp row length must be n", line, 1);
    }
    {
        auto [v, line] = require("q_exp");
        P.q_exp = parse_int_row(v, "q_exp", line);
        if (P.q_exp.size() != static_cast<std::size_t>(P.n))
            throw ParseError(origin + ": q_exp must have length n", line, 1);
    }
    {
        auto [v, line] = require("torus_rank");
        try {
            P.torus_rank = std::stoi(v);
        } catch (const std::exception&) {
            throw ParseError(origin + ": torus_rank must be an integer", line, 1);
        }
        if (P.torus_rank < 0) throw ParseError(origin + ": torus_rank must be >= 0", line, 1);
    }
    {
        auto [v, line] = require("weights");
        P.weights = parse_matrix(v, "weights", line);
        if (P.weights.size() != static_cast<std::size_t>(P.torus_rank))
            throw ParseError(origin + ": weights must have torus_rank rows", line, 1);
        for (const auto& row : P.weights)
            if (row.size() != static_cast<std::size_t>(P.n))
                throw ParseError(origin + ": weights row length must be n", line, 1);
    }
    {
        auto [v, line] = require("h_exp");
        P.h_exp = parse_matrix(v, "h_exp", line);
        if (P.h_exp.size() != static_cast<std::size_t>(P.torus_rank))
            throw ParseError(origin + ": h_exp must have torus_rank rows", line, 1);
        for (const auto& row : P.h_exp)
            if (row.size() != static_cast<std::size_t>(P.n))
                throw ParseError(origin + ": h_exp row length must be n", line, 1);
    }
    for (const auto& [j, i, expr, line] : doc.deltas) {
        if (!(1 <= i && i < j && j <= P.n))
            throw ParseError(origin + ": delta." + std::to_string(j) + "." + std::to_string(i) +
                                 " has out-of-range indices",
                             line, 1);
        NFPoly d;
        try {
            d = parse_poly_expr(expr, P.n);
        } catch (const ParseError& e) {
            throw ParseError(origin + ": delta." + std::to_string(j) + "." + std::to_string(i) +
                                 ": " + e.what(),
                             line, e.col);
        }
        if (!d.supported_below(j))
            throw ParseError(origin + ": delta." + std::to_string(j) + "." + std::to_string(i) +
                                 " involves generators of index >= " + std::to_string(j),
                             line, 1);
        if (!d.is_zero()) P.delta[{j, i}] = d;
    }
    return P;
}

std::string serialize_presentation(const CglPresentation& P) {
    std::ostringstream os;
    auto emit_matrix = [&](const std::vector<std::vector<std::int64_t>>& m) {
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r) os << " ; ";
            for (std::size_t c = 0; c < m[r].size(); ++c) {
                if (c) os << " ";
                os << m[r][c];
            }
        }
    };
    os << "n = " << P.n << "\n";
    os << "lambda_exp = ";
    emit_matrix(P.lambda_exp);
    os << "\n";
    os << "q_exp = ";
    for (std::size_t i = 0; i < P.q_exp.size(); ++i) {
        if (i) os << " ";
        os << P.q_exp[i];
    }
    os << "\n";
    os << "torus_rank = " << P.torus_rank << "\n";
    os << "weights = ";
    emit_matrix(P.weights);
    os << "\n";
    os << "h_exp = ";
    emit_matrix(P.h_exp);
    os << "\n";
    for (const auto& [key, poly] : P.delta) {
        if (poly.is_zero()) continue;
        os << "delta." << key.first << "." << key.second << " = " << poly_expr_string(poly)
           << "\n";
    }
    return os.str();
}

CglPresentation load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_text(buf.str(), path);
}

void save(const CglPresentation& P, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_presentation(P);
}

} // namespace qna
