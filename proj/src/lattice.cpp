#include "canonlat/lattice.hpp"

#include "canonlat/group.hpp"

#include <numeric>

namespace canonlat {

std::string BasisLabel::str() const {
  switch (kind) {
    case Kind::Center0: return "a0";
    case Kind::Center0Star: return "a0*";
    case Kind::Arm: break;
  }
  return "a(" + std::to_string(arm) + "," + std::to_string(j) + ")";
}

CanonicalLattice::CanonicalLattice(Symbol s) : symbol_(std::move(s)), n_(symbol_.n()) {
  const Integer kappa(symbol_.kappa);
  const Integer eps(symbol_.epsilon);
  K_ = IntMatrix::Zero(n_, n_);

  for (int arm = symbol_.t; arm >= 1; --arm)
    for (int j = symbol_.p[arm - 1] - 1; j >= 1; --j) basis_.push_back({BasisLabel::Kind::Arm, arm, j});
  basis_.push_back({BasisLabel::Kind::Center0, 0, 0});
  basis_.push_back({BasisLabel::Kind::Center0Star, 0, 0});

  for (int arm = 1; arm <= symbol_.t; ++arm) {
    const int i = arm - 1;
    const Integer f(symbol_.f[i]);
    const Integer diag = kappa * eps * f / symbol_.e(i);  // integral by validation
    for (int j = symbol_.p[i] - 1; j >= 1; --j) {
      const Index row = arm_index(arm, j);
      K_(row, row) = diag;
      if (j > 1) K_(row, row + 1) = -diag;
    }
    const Index last = arm_index(arm, 1);
    K_(last, center0()) = -kappa * eps * f;
    K_(last, center0_star()) = -kappa * eps * eps * f;
  }
  K_(center0(), center0()) = kappa;
  K_(center0(), center0_star()) = 2 * kappa * eps;
  K_(center0_star(), center0_star()) = kappa * eps * eps;
  B_ = K_ + K_.transpose();
}

Index CanonicalLattice::arm_index(int arm, int j) const {
  if (arm < 1 || arm > symbol_.t || j < 1 || j >= symbol_.p[arm - 1])
    throw Error(ErrorKind::IndexOutOfRange, "no basis vector a(" + std::to_string(arm) + "," + std::to_string(j) + ")");
  Index offset = 0;
  for (int k = symbol_.t; k > arm; --k) offset += symbol_.p[k - 1] - 1;
  return offset + (symbol_.p[arm - 1] - 1 - j);
}

CanonicalLattice build_lattice(const Symbol& s) { return CanonicalLattice(s); }

namespace {
void check_length(const CanonicalLattice& lat, Index size) {
  if (size != lat.n())
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(size) + " in a rank " + std::to_string(lat.n()) + " lattice");
}
}  // namespace

Integer euler(const CanonicalLattice& lat, const RootVec& x, const RootVec& y) {
  check_length(lat, x.size());
  check_length(lat, y.size());
  return x.dot(lat.K() * y);
}

Integer sym(const CanonicalLattice& lat, const RootVec& x, const RootVec& y) {
  check_length(lat, x.size());
  check_length(lat, y.size());
  return x.dot(lat.B() * y);
}

Rational sym(const CanonicalLattice& lat, const RatVector& x, const RatVector& y) {
  check_length(lat, x.size());
  check_length(lat, y.size());
  return x.dot(to_rational(lat.B()) * y);
}

Integer rank_of(const CanonicalLattice& lat, const RootVec& x) {
  check_length(lat, x.size());
  return x(lat.center0()) + lat.symbol().epsilon * x(lat.center0_star());
}

RootVec radical_a(const CanonicalLattice& lat) {
  RootVec a = RootVec::Zero(lat.n());
  a(lat.center0_star()) = 1;
  a(lat.center0()) = -lat.symbol().epsilon;
  return a;
}

RadicalData radical(const CanonicalLattice& lat) {
  RadicalData out;
  out.kernel = nullspace(to_rational(lat.B()));
  out.rank = out.kernel.cols();
  out.a = radical_a(lat);
  if (!(lat.B() * out.a).isZero()) throw Error(ErrorKind::AxiomViolated, "a is not in the radical");
  if (delta(lat.symbol()) == 0) {
    const Symbol& s = lat.symbol();
    RatVector b = RatVector::Zero(lat.n());
    b(lat.center0()) = 1;
    for (int arm = 1; arm <= s.t; ++arm)
      for (int j = 1; j < s.p[arm - 1]; ++j)
        b(lat.arm_index(arm, j)) = Rational(s.p[arm - 1] - j, s.p[arm - 1]) * s.e(arm - 1);
    if (!(to_rational(lat.B()) * b).isZero()) throw Error(ErrorKind::AxiomViolated, "b is not in the radical");
    out.b = b;
  }
  return out;
}

Signature signature(const CanonicalLattice& lat) { return signature_of(to_rational(lat.B())); }

bool is_pseudo_root(const CanonicalLattice& lat, const RootVec& x) {
  check_length(lat, x.size());
  const Integer norm = euler(lat, x, x);
  if (norm <= 0) return false;
  const IntVector left = lat.K().transpose() * x;  // ⟨x, v⟩ for basis v
  const IntVector right = lat.K() * x;             // ⟨v, x⟩
  for (Index k = 0; k < lat.n(); ++k)
    if (left(k) % norm != 0 || right(k) % norm != 0) return false;
  return true;
}

bool satisfies_coxeter_identity(const CanonicalLattice& lat, const GroupElem& g) {
  // ⟨x,y⟩ + ⟨y,g x⟩ over basis pairs is K + (K g)ᵀ.
  const IntMatrix lhs = lat.K() + (lat.K() * g).transpose();
  return lhs.isZero();
}

GroupElem coxeter_element(const CanonicalLattice& lat) {
  GroupElem c = identity<Integer>(lat.n());
  for (Index k = 0; k < lat.n(); ++k) c = (c * reflection(lat, lat.simple(k))).eval();
  if (!satisfies_coxeter_identity(lat, c))
    throw Error(ErrorKind::AxiomViolated, "product of simple reflections violates the Coxeter identity");
  return c;
}

Polynomial char_poly(const GroupElem& g) { return characteristic_polynomial(g); }

Polynomial expected_coxeter_char_poly(const Symbol& s) {
  Polynomial out{Integer(1), Integer(-2), Integer(1)};  // (x−1)²
  for (int pl : s.p) {
    Polynomial cyclic(pl, Integer(1));  // 1 + x + … + x^{p−1}
    out = poly_mul(out, cyclic);
  }
  return out;
}

std::int64_t weight_lcm(const Symbol& s) {
  std::int64_t p = 1;
  for (int pi : s.p) p = std::lcm(p, static_cast<std::int64_t>(pi));
  return p;
}

}  // namespace canonlat
