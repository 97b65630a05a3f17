#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homanti/matrix.hpp"

// Exact linear algebra over the rationals. Everything here is deterministic:
// pivot selection always takes the first row with a nonzero entry in the
// leftmost unfinished column, so repeated runs produce identical output.

namespace homanti {

// Rank via fraction-free (Bareiss) elimination.
int rank(const Matrix& m);

// Reduced row echelon form (Gauss-Jordan with exact division).
Matrix rref(const Matrix& m);

// Basis of { v : m v = 0 }, one vector per free column of rref(m),
// in increasing order of the free column index.
std::vector<Vec> nullspace_basis(const Matrix& m);

// One solution of m x = rhs, or std::nullopt when the system is
// inconsistent. Free variables are set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

// Kronecker product: (a ⊗ b)[(ra*b.rows+rb), (ca*b.cols+cb)] = a[ra,ca]*b[rb,cb].
Matrix kron(const Matrix& a, const Matrix& b);

// Exact matrix power, k >= 0, square input.
Matrix mat_pow(const Matrix& m, int k);

// Rank of m over Z/p for an odd prime p, used as an independent cross-check
// on the exact rank. Returns std::nullopt when some denominator in m is
// divisible by p (i.e. the matrix has no reduction mod p).
std::optional<int> rank_mod_p(const Matrix& m, std::uint64_t p);

}  // namespace homanti
