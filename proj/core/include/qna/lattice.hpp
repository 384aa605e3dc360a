#pragma once

#include "qna/zpoly.hpp"

#include <vector>

namespace qna {

using IntMat = std::vector<std::vector<BigInt>>;
using IntVec = std::vector<BigInt>;

/// Diagonalization U A V = D by unimodular row and column operations.
struct DiagResult {
    IntMat u;
    IntMat v;
    IntMat d;
    int rank = 0;
};
DiagResult diagonalize(const IntMat& a);

/// Basis of { x : A x = 0 } as a saturated sublattice (columns of the
/// diagonalizing V at the zero positions).
std::vector<IntVec> kernel_basis(const IntMat& a);

int int_rank(const IntMat& a);

/// Determinant by fraction-free elimination.
BigInt int_det(const IntMat& a);

IntMat mat_from_rows(const std::vector<IntVec>& rows);
IntVec mat_vec(const IntMat& a, const IntVec& x);

/// True when the two column sets generate the same sublattice of Z^r
/// (compared via the Hermite normal forms of the generated row lattices).
bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

} // namespace qna
