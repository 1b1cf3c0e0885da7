#include "canonlat/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace canonlat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPseudoRoot: return "NotPseudoRoot";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ProductMismatch: return "ProductMismatch";
    case ErrorKind::NotBlockTriangular: return "NotBlockTriangular";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::MixedSigns: return "MixedSigns";
    case ErrorKind::NotTubular: return "NotTubular";
    case ErrorKind::IsotropicVector: return "IsotropicVector";
    case ErrorKind::NotVInvariant: return "NotVInvariant";
    case ErrorKind::NotInRadical: return "NotInRadical";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotExceptional: return "NotExceptional";
    case ErrorKind::AxiomViolated: return "AxiomViolated";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j)))
        throw Error(ErrorKind::PreconditionViolated, "matrix entry " + format_rational(m(i, j)) +
                                                         " is not integral");
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

IntVector to_integer(const RatVector& v) {
  return to_integer(RatMatrix(v)).col(0);
}

EchelonForm rref(RatMatrix m) {
  EchelonForm out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Index rank(const RatMatrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

RatMatrix nullspace(const RatMatrix& m) {
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix basis = RatMatrix::Zero(m.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const EchelonForm e = rref(aug);
  RatVector x = RatVector::Zero(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(r, m.cols());
  }
  return x;
}

bool in_column_span(const RatMatrix& cols, const RatVector& v) {
  if (cols.cols() == 0) return v.isZero();
  return solve(cols, v).has_value();
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug << m, RatMatrix::Identity(n, n);
  const EchelonForm e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[n - 1] >= n)
    throw Error(ErrorKind::PreconditionViolated, "matrix is singular");
  return e.reduced.rightCols(n);
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant");
  const Index n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant");
  RatMatrix m = input;
  Rational det = 1;
  const Index n = m.rows();
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      m.row(i) -= f * m.row(k);
    }
  }
  return det;
}

CongruenceDiagonalization congruence_diagonalize(const RatMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols() || symmetric != symmetric.transpose())
    throw Error(ErrorKind::PreconditionViolated, "congruence diagonalization needs a symmetric matrix");
  const Index n = symmetric.rows();
  RatMatrix a = symmetric;
  RatMatrix p = RatMatrix::Identity(n, n);

  auto swap_basis = [&](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
    p.col(i).swap(p.col(j));
  };
  // Replaces basis vector i by (u_i + u_j).
  auto add_basis = [&](Index i, Index j) {
    a.row(i) += a.row(j);
    a.col(i) += a.col(j);
    p.col(i) += p.col(j);
  };

  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: look for an off-diagonal pair and use u+v.
      bool found = false;
      for (Index i = k; i < n && !found; ++i)
        for (Index j = i + 1; j < n && !found; ++j)
          if (a(i, j) != 0) {
            add_basis(i, j);
            pivot = i;
            found = true;
          }
      if (!found) break;
    }
    swap_basis(k, pivot);
    for (Index j = k + 1; j < n; ++j) {
      if (a(k, j) == 0) continue;
      const Rational f = a(k, j) / a(k, k);
      a.col(j) -= f * a.col(k);
      a.row(j) -= f * a.row(k);
      p.col(j) -= f * p.col(k);
    }
  }
  return {p, a.diagonal()};
}

Signature signature_of(const RatMatrix& symmetric) {
  const auto diag = congruence_diagonalize(symmetric).diagonal;
  Signature s;
  for (Index i = 0; i < diag.size(); ++i) {
    if (diag(i) > 0)
      ++s.positive;
    else if (diag(i) < 0)
      ++s.negative;
    else
      ++s.zero;
  }
  return s;
}

IntMatrix hermite_normal_form(IntMatrix m) {
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Euclid on column entries below `row` until a single nonzero remains.
    while (true) {
      Index best = -1;
      for (Index r = row; r < m.rows(); ++r)
        if (m(r, col) != 0 && (best < 0 || abs(m(r, col)) < abs(m(best, col)))) best = r;
      if (best < 0) break;
      m.row(best).swap(m.row(row));
      bool done = true;
      for (Index r = row + 1; r < m.rows(); ++r) {
        if (m(r, col) == 0) continue;
        const Integer q = m(r, col) / m(row, col);
        m.row(r) -= q * m.row(row);
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) m.row(row) = -m.row(row);
    for (Index r = 0; r < row; ++r) {
      // floor division keeps entries above the pivot in [0, pivot).
      Integer q = m(r, col) / m(row, col);
      if (m(r, col) - q * m(row, col) < 0) q -= 1;
      m.row(r) -= q * m.row(row);
    }
    ++row;
  }
  return m.topRows(row);
}

Polynomial poly_trim(Polynomial p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(Integer(0));
  return p;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

Polynomial poly_div_exact(const Polynomial& a_in, const Polynomial& b_in) {
  Polynomial a = poly_trim(a_in);
  const Polynomial b = poly_trim(b_in);
  if (b.size() == 1 && b[0] == 0) throw Error(ErrorKind::PreconditionViolated, "division by zero polynomial");
  if (a.size() < b.size()) {
    if (a.size() == 1 && a[0] == 0) return a;
    throw Error(ErrorKind::PreconditionViolated, "polynomial division is not exact");
  }
  Polynomial q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& lead = a[k + b.size() - 1];
    if (lead % b.back() != 0) throw Error(ErrorKind::PreconditionViolated, "polynomial division is not exact");
    q[k] = lead / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  for (const auto& c : a)
    if (c != 0) throw Error(ErrorKind::PreconditionViolated, "polynomial division is not exact");
  return poly_trim(q);
}

std::string poly_to_string(const Polynomial& p_in) {
  const Polynomial p = poly_trim(p_in);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0) continue;
    Integer c = p[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Polynomial characteristic_polynomial(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial");
  const Index n = a.rows();
  // Coefficients from the highest degree downwards while building.
  std::vector<Integer> p{Integer(1)};
  for (Index r = 0; r < n; ++r) {
    std::vector<Integer> toeplitz(r + 2, Integer(0));
    toeplitz[0] = 1;
    toeplitz[1] = -a(r, r);
    if (r > 0) {
      const IntMatrix lead = a.topLeftCorner(r, r);
      const IntMatrix row = a.block(r, 0, 1, r);
      IntVector col = a.block(0, r, r, 1);
      for (Index k = 2; k < r + 2; ++k) {
        toeplitz[k] = -(row * col)(0, 0);
        col = (lead * col).eval();
      }
    }
    std::vector<Integer> next(r + 2, Integer(0));
    for (Index i = 0; i < r + 2; ++i)
      for (Index j = 0; j <= std::min(i, r); ++j)
        if (j < static_cast<Index>(p.size())) next[i] += toeplitz[i - j] * p[j];
    p = std::move(next);
  }
  std::reverse(p.begin(), p.end());
  return poly_trim(p);
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

}  // namespace canonlat
