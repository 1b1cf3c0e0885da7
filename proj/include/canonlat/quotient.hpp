#pragma once

#include "canonlat/group.hpp"

#include <string>
#include <vector>

namespace canonlat {

struct DiagramEdge {
  Index from = 0;  // basis ordinals
  Index to = 0;
  Integer lambda_from_to;  // −(v_from, v_to^♯)
  Integer lambda_to_from;  // −(v_from^♯, v_to)
  bool dotted = false;     // positive pairing (the α_0 — α_0* edge)
};

// Γ = Γ_∘ ⊕ ⟨a⟩ with Γ_∘ spanned by all basis vectors except α_0*. In the
// adapted basis (…, α_0, a) every w ∈ W is block lower-triangular.
struct QuotientData {
  Index m = 0;                    // n − 1
  IntMatrix to_adapted;           // R-coordinates ↦ (R_∘, a)-coordinates
  IntMatrix from_adapted;         // inverse base change
  IntMatrix K0;                   // Euler form on Γ_∘
  IntMatrix B0;                   // symmetrized form on Γ_∘
  std::vector<DiagramEdge> diagram;
  int epsilon = 1;
};

QuotientData build_quotient(const CanonicalLattice& lat);

/// g expressed in the adapted basis.
IntMatrix adapted(const QuotientData& q, const GroupElem& g);

/// The image p(g) ∈ W_∘: upper-left m×m block in the adapted basis.
/// Throws NotBlockTriangular if g does not fix a.
IntMatrix project(const QuotientData& q, const GroupElem& g);

struct RootDecomposition {
  int d = 1;
  RootVec beta0;  // Γ_∘ coordinates, length m
  Integer k;
};

/// β = d·β_∘ + k·a with d ∈ {1, ε}, β_∘ a pseudo-root of Γ_∘.
RootDecomposition decompose_root(const QuotientData& q, const RootVec& beta);
/// d·β_∘ + k·a back in R-coordinates.
RootVec recompose(const QuotientData& q, const RootDecomposition& dec);

/// Pseudo-root test in Γ_∘ (Euler form K0).
bool is_quotient_pseudo_root(const QuotientData& q, const RootVec& beta0);

/// Reflection of W_∘ in β_∘, on Γ_∘ coordinates.
IntMatrix quotient_reflection(const QuotientData& q, const RootVec& beta0);

enum class RootSign { Positive, Negative };
/// Throws MixedSigns when the coefficients have both signs.
RootSign quotient_root_sign(const QuotientData& q, const RootVec& beta0);

/// Embeds Γ_∘ coordinates into R-coordinates (last coordinate zero).
RootVec embed(const QuotientData& q, const RootVec& beta0);

/// DOT rendering of the diagram of the full lattice or of W_∘.
std::string diagram_dot(const CanonicalLattice& lat, bool quotient);

/// Edges between basis vectors with nonzero pairing.
std::vector<DiagramEdge> diagram_edges(const IntMatrix& B, const IntMatrix& K);

}  // namespace canonlat
