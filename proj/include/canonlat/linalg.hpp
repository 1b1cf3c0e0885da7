#pragma once

#include "canonlat/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace canonlat {

// Exact linear algebra over Q and Z. Everything here is small and dense:
// matrices of size n <= ~20, so plain Gaussian elimination is fine.

struct EchelonForm {
  RatMatrix reduced;          // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

EchelonForm rref(RatMatrix m);

Index rank(const RatMatrix& m);
inline Index rank(const IntMatrix& m) { return rank(to_rational(m)); }

/// Basis of {x : m x = 0}, one vector per column.
RatMatrix nullspace(const RatMatrix& m);

/// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// True iff v lies in the column span of cols.
bool in_column_span(const RatMatrix& cols, const RatVector& v);

RatMatrix inverse(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Symmetric congruence diagonalization: returns P invertible with
/// Pᵀ·S·P = diag(d).
struct CongruenceDiagonalization {
  RatMatrix transform;
  RatVector diagonal;
};
CongruenceDiagonalization congruence_diagonalize(const RatMatrix& symmetric);

struct Signature {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
  bool operator==(const Signature&) const = default;
};
Signature signature_of(const RatMatrix& symmetric);

/// Row-style Hermite normal form of the lattice spanned by the rows of m;
/// zero rows are dropped. Two generating sets span the same sublattice iff
/// their normal forms are equal.
IntMatrix hermite_normal_form(IntMatrix m);

/// Integer polynomial, coefficients from the constant term upwards.
using Polynomial = std::vector<Integer>;

Polynomial poly_trim(Polynomial p);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Exact division; throws when b does not divide a.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);
std::string poly_to_string(const Polynomial& p);

/// Characteristic polynomial det(x·I − m) by Berkowitz's division-free
/// algorithm.
Polynomial characteristic_polynomial(const IntMatrix& m);

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& m, unsigned exponent) {
  Matrix<Scalar> result = identity<Scalar>(m.rows());
  Matrix<Scalar> base = m;
  while (exponent > 0) {
    if (exponent & 1u) result = (result * base).eval();
    exponent >>= 1u;
    if (exponent > 0) base = (base * base).eval();
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace canonlat
