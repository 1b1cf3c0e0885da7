#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace canonlat {

/// Arbitrary-precision integer. Expression templates are disabled so the
/// type behaves as a plain value inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

using Index = Eigen::Index;

enum class ErrorKind {
  MalformedInput,
  InvalidSymbol,
  DimensionMismatch,
  NotPseudoRoot,
  IndexOutOfRange,
  ProductMismatch,
  NotBlockTriangular,
  NotDecomposable,
  MixedSigns,
  NotTubular,
  IsotropicVector,
  NotVInvariant,
  NotInRadical,
  NotNested,
  PreconditionViolated,
  NotExceptional,
  AxiomViolated,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Rational to_rational(const Integer& x) { return Rational(x); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Renders a rational as "a/b", or "a" when the denominator is 1.
std::string format_rational(const Rational& q);

template <typename Derived>
Matrix<Rational> to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>();
}

/// Converts a rational matrix with integral entries; throws otherwise.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);

inline IntVector unit_vector(Index n, Index i) {
  IntVector v = IntVector::Zero(n);
  v(i) = 1;
  return v;
}

template <typename Scalar>
std::vector<Scalar> to_std(const Vector<Scalar>& v) {
  return std::vector<Scalar>(v.data(), v.data() + v.size());
}

}  // namespace canonlat
