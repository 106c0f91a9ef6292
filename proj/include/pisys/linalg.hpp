#pragma once

#include "pisys/integer.hpp"

#include <cstddef>
#include <vector>

// Exact integer/rational linear algebra for small dense matrices.
namespace pisys::linalg {

using Matrix = std::vector<std::vector<Int>>;

// Fraction-free (Bareiss) elimination with row pivoting.
Int determinant(Matrix m);

// Sylvester's criterion: every leading principal minor is positive.
// The leading minors are the Bareiss pivots taken without row exchanges.
bool positive_definite(const Matrix& symmetric);

std::size_t rank(Matrix m);

// Basis of the right kernel {x : m x = 0}; each vector is primitive (coprime
// integer entries) with its first nonzero entry positive.
std::vector<Coeffs> integer_kernel(const Matrix& m);

// Divide out the gcd and fix the sign so the first nonzero entry is positive.
Coeffs primitive(Coeffs v);

}  // namespace pisys::linalg
