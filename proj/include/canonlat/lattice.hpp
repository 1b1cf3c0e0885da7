#pragma once

#include "canonlat/linalg.hpp"
#include "canonlat/symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canonlat {

using RootVec = IntVector;
/// An element of W ⊆ O(Γ, B), acting on column coordinate vectors.
using GroupElem = IntMatrix;

struct BasisLabel {
  enum class Kind { Arm, Center0, Center0Star };
  Kind kind = Kind::Arm;
  int arm = 0;  // 1-based, arms only
  int j = 0;    // 1-based, arms only

  std::string str() const;
  bool operator==(const BasisLabel&) const = default;
};

// The canonical bilinear lattice of a symbol. Coordinates always refer to
// the ordered basis
//   (α_(t,p_t−1), …, α_(t,1), …, α_(1,p_1−1), …, α_(1,1), α_0, α_0*).
class CanonicalLattice {
 public:
  explicit CanonicalLattice(Symbol s);

  const Symbol& symbol() const { return symbol_; }
  Index n() const { return n_; }
  /// Euler form, row = left argument. Upper triangular.
  const IntMatrix& K() const { return K_; }
  /// Symmetrization K + Kᵀ.
  const IntMatrix& B() const { return B_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }

  /// Position of α_(arm, j), both 1-based.
  Index arm_index(int arm, int j) const;
  Index center0() const { return n_ - 2; }
  Index center0_star() const { return n_ - 1; }
  RootVec simple(Index k) const { return unit_vector(n_, k); }

 private:
  Symbol symbol_;
  Index n_;
  IntMatrix K_;
  IntMatrix B_;
  std::vector<BasisLabel> basis_;
};

CanonicalLattice build_lattice(const Symbol& s);

Integer euler(const CanonicalLattice& lat, const RootVec& x, const RootVec& y);
Integer sym(const CanonicalLattice& lat, const RootVec& x, const RootVec& y);
Rational sym(const CanonicalLattice& lat, const RatVector& x, const RatVector& y);

/// rk = λ_0 + ε·λ_0*.
Integer rank_of(const CanonicalLattice& lat, const RootVec& x);

struct RadicalData {
  RootVec a;                   // α_0* − ε·α_0
  std::optional<RatVector> b;  // tubular only
  Index rank = 0;
  RatMatrix kernel;            // exact basis of ker B, one vector per column
};

RadicalData radical(const CanonicalLattice& lat);

/// The vector a = α_0* − ε·α_0 alone.
RootVec radical_a(const CanonicalLattice& lat);

Signature signature(const CanonicalLattice& lat);

/// ⟨x,x⟩ > 0 and ⟨x,v⟩, ⟨v,x⟩ divisible by ⟨x,x⟩ for all basis vectors v.
bool is_pseudo_root(const CanonicalLattice& lat, const RootVec& x);

/// Product of the simple reflections in basis order. Checks the defining
/// identity ⟨x,y⟩ + ⟨y,c·x⟩ = 0 on all basis pairs before returning.
GroupElem coxeter_element(const CanonicalLattice& lat);

/// True iff ⟨x,y⟩ + ⟨y,g·x⟩ = 0 on all basis pairs.
bool satisfies_coxeter_identity(const CanonicalLattice& lat, const GroupElem& g);

Polynomial char_poly(const GroupElem& g);

/// (x−1)²·Π (x^{p_l} − 1)/(x − 1).
Polynomial expected_coxeter_char_poly(const Symbol& s);

/// lcm(p_1, …, p_t).
std::int64_t weight_lcm(const Symbol& s);

}  // namespace canonlat
