#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bmparity/integer.hpp"

// Exact linear algebra over Z and over the field with two elements. All
// matrices are lists of rows; the width is passed explicitly so that empty
// row lists stay meaningful.
namespace bmparity::linalg {

// Row echelon form of the lattice spanned by `rows` (each of length `width`)
// using unimodular row operations on the first `pivot_columns` columns only.
// Returns the rank r; afterwards rows [r, end) vanish on those columns.
std::size_t echelonize(IntMatrix& rows, std::size_t pivot_columns);

// Hermite normal form of the row lattice: nonzero rows only, pivots positive
// and strictly increasing, entries above each pivot reduced into
// [0, pivot). Two generating sets span the same lattice iff their HNFs agree.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t width);

// Reduces `v` against an HNF basis in place. Returns true iff v lies in the
// lattice (v is then zero).
bool reduce_by_hnf(const IntMatrix& hnf, IntVector& v);

// HNF basis of {x in Z^m : x * a = 0} for an m x width matrix `a`.
IntMatrix integer_left_kernel(const IntMatrix& a, std::size_t width);

// Smith normal form P * a * Q = D of an m x width matrix. Only the column
// transform is tracked, together with its inverse. `diagonal` holds the
// nonzero invariant factors d_0 | d_1 | ... (all positive); their count is
// the rank.
struct SmithForm {
  IntVector diagonal;
  IntMatrix column_transform;          // Q, width x width
  IntMatrix column_transform_inverse;  // Q^-1
};
SmithForm smith_normal_form(const IntMatrix& a, std::size_t width);

IntVector multiply_row(const IntVector& v, const IntMatrix& m, std::size_t width);

// ---------------------------------------------------------------------------
// GF(2)

using BitVector = std::vector<std::uint8_t>;
using BitMatrix = std::vector<BitVector>;

BitVector to_bits(const IntVector& v);
IntVector from_bits(const BitVector& v);

// Reduced row echelon form; `pivots[i]` is the pivot column of rows[i].
struct EchelonGf2 {
  BitMatrix rows;
  std::vector<std::size_t> pivots;
};
EchelonGf2 rref_gf2(BitMatrix rows, std::size_t width);

// Reduces v against an RREF basis in place; true iff v ends up zero.
bool reduce_gf2(const EchelonGf2& basis, BitVector& v);

// RREF basis of {x in GF(2)^m : x * a = 0}.
EchelonGf2 left_kernel_gf2(const BitMatrix& a, std::size_t width);

}  // namespace bmparity::linalg
