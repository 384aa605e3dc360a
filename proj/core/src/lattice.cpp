#include "qna/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qna {

namespace {

IntMat identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

} // namespace

DiagResult diagonalize(const IntMat& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    DiagResult r;
    r.d = a;
    r.u = identity(rows);
    r.v = identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t k) {
        std::swap(r.d[i], r.d[k]);
        std::swap(r.u[i], r.u[k]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t k) {
        for (std::size_t t = 0; t < rows; ++t) std::swap(r.d[t][i], r.d[t][k]);
        for (std::size_t t = 0; t < cols; ++t) std::swap(r.v[t][i], r.v[t][k]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t t = 0; t < cols; ++t) r.d[dst][t] += f * r.d[src][t];
        for (std::size_t t = 0; t < rows; ++t) r.u[dst][t] += f * r.u[src][t];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t t = 0; t < rows; ++t) r.d[t][dst] += f * r.d[t][src];
        for (std::size_t t = 0; t < cols; ++t) r.v[t][dst] += f * r.v[t][src];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a pivot of minimal magnitude
        std::size_t pi = t, pj = t;
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (r.d[i][j] != 0) {
                    BigInt mag = abs_big(r.d[i][j]);
                    if (!found || mag < best) {
                        found = true;
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (r.d[i][t] == 0) continue;
                BigInt f = r.d[i][t] / r.d[t][t];
                add_row(i, t, -f);
                if (r.d[i][t] != 0) {
                    swap_rows(t, i); // remainder became the smaller pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (r.d[t][j] == 0) continue;
                BigInt f = r.d[t][j] / r.d[t][t];
                add_col(j, t, -f);
                if (r.d[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }
    r.rank = 0;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i)
        if (r.d[i][i] != 0) ++r.rank;
    return r;
}

std::vector<IntVec> kernel_basis(const IntMat& a) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    if (cols == 0) return {};
    DiagResult dg = diagonalize(a);
    std::vector<IntVec> basis;
    for (std::size_t j = static_cast<std::size_t>(dg.rank); j < cols; ++j) {
        IntVec col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = dg.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

int int_rank(const IntMat& a) {
    if (a.empty() || a[0].empty()) return 0;
    return diagonalize(a).rank;
}

BigInt int_det(const IntMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (a[0].size() != n) throw std::invalid_argument("int_det: matrix not square");
    // Bareiss fraction-free elimination
    IntMat m = a;
    BigInt prev = 1;
    BigInt sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_i = k + 1;
            while (swap_i < n && m[swap_i][k] == 0) ++swap_i;
            if (swap_i == n) return 0;
            std::swap(m[k], m[swap_i]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntMat mat_from_rows(const std::vector<IntVec>& rows) { return rows; }

IntVec mat_vec(const IntMat& a, const IntVec& x) {
    IntVec y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

namespace {

// Row-style Hermite normal form of the lattice spanned by the given rows.
IntMat hnf_rows(std::vector<IntVec> rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows[0].size();
    std::size_t rank_row = 0;
    for (std::size_t col = 0; col < cols && rank_row < rows.size(); ++col) {
        // euclidean elimination below rank_row in this column
        while (true) {
            std::size_t piv = rows.size();
            BigInt best = 0;
            for (std::size_t i = rank_row; i < rows.size(); ++i)
                if (rows[i][col] != 0) {
                    BigInt mag = abs_big(rows[i][col]);
                    if (piv == rows.size() || mag < best) {
                        piv = i;
                        best = mag;
                    }
                }
            if (piv == rows.size()) break; // column clear
            std::swap(rows[rank_row], rows[piv]);
            bool reduced_all = true;
            for (std::size_t i = rank_row + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                BigInt f = rows[i][col] / rows[rank_row][col];
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[rank_row][j];
                if (rows[i][col] != 0) reduced_all = false;
            }
            if (reduced_all) {
                // normalize pivot sign and reduce the rows above
                if (rows[rank_row][col] < 0)
                    for (std::size_t j = 0; j < cols; ++j) rows[rank_row][j] = -rows[rank_row][j];
                for (std::size_t i = 0; i < rank_row; ++i) {
                    BigInt f;
                    // floor division for canonical residues
                    BigInt num = rows[i][col];
                    BigInt den = rows[rank_row][col];
                    f = num / den;
                    if (num % den != 0 && ((num < 0) != (den < 0))) f -= 1;
                    if (f != 0)
                        for (std::size_t j = 0; j < cols; ++j)
                            rows[i][j] -= f * rows[rank_row][j];
                }
                ++rank_row;
                break;
            }
        }
    }
    rows.resize(rank_row);
    return rows;
}

} // namespace

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    return hnf_rows(a) == hnf_rows(b);
}

} // namespace qna
