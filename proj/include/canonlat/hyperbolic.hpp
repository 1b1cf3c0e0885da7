#pragma once

#include "canonlat/group.hpp"
#include "canonlat/quotient.hpp"

#include <cstdint>
#include <vector>

namespace canonlat {

/// Elements of W̃ are rational matrices on Ṽ.
using HypElem = RatMatrix;

// The hyperbolic extension of a tubular lattice with ε = 1. Coordinates on
// Ṽ refer to (α_(t,p_t−1), …, α_(1,1), α_0, a, a′).
struct HyperbolicModel {
  CanonicalLattice lat;  // always ε = 1
  QuotientData quotient;
  Index n = 0;           // rank of Γ; Ṽ has dimension n + 1
  RatMatrix Btilde;
  RatMatrix inclusion;   // (n+1)×n, R-coordinates ↦ Ṽ coordinates

  Index dim() const { return n + 1; }
  RatVector lift(const RootVec& x) const { return inclusion * to_rational(x); }
  RatVector a_prime() const;
  RatVector a() const;
  Rational form(const RatVector& x, const RatVector& y) const { return x.dot(Btilde * y); }
};

/// Throws NotTubular. ε = 2 symbols are replaced by their ε = 1 equivalent.
HyperbolicModel build_hyperbolic(const CanonicalLattice& lat);

/// s̃_v(x) = x − 2B̃(x,v)/B̃(v,v)·v. Throws IsotropicVector.
HypElem hyp_reflection(const HyperbolicModel& model, const RatVector& v);
HypElem hyp_reflection(const HyperbolicModel& model, const RootVec& root_in_R);

/// c̃ = s̃_(t,p_t−1) ⋯ s̃_0 s̃_0*. Asserts the formula for c̃(a′).
HypElem hyp_coxeter(const HyperbolicModel& model);

/// a′ + 2/(α_0,α_0)·(α_0 − a + Σ e_i α_(i,j)).
RatVector expected_coxeter_image_of_a_prime(const HyperbolicModel& model);

bool is_hyp_isometry(const HyperbolicModel& model, const HypElem& g);

/// The block on V, back in R-coordinates. Throws NotVInvariant.
GroupElem project_to_W(const HyperbolicModel& model, const HypElem& g);

struct CentralExtensionReport {
  std::int64_t p = 1;
  bool commutes_with_generators = false;  // (i)
  bool nontrivial = false;                // (ii) c̃^p ≠ I
  bool projects_to_identity = false;      // (iii)
  bool kernel_samples_ok = false;         // (iv)
  std::size_t kernel_samples = 0;
  std::vector<std::int64_t> kernel_powers;  // exponent found for each sample
  Index fix_dimension = 0;                // dim Fix(c̃)
  bool unipotent = false;                 // (c̃^p − I)² = 0
  bool coxeter_formula = false;           // c̃(a′) formula
  RatMatrix cp_minus_identity;

  bool all_pass() const {
    return commutes_with_generators && nontrivial && projects_to_identity && kernel_samples_ok &&
           fix_dimension == 2 && unipotent && coxeter_formula;
  }
};

CentralExtensionReport central_extension_report(const HyperbolicModel& model, std::uint64_t seed = 7,
                                                std::size_t samples = 200);

struct CoxeterLengthCertificate {
  Index n = 0;
  Index hyp_codim = 0;      // codim Fix(c̃); must be n − 1
  int hyp_parity = 0;       // parity of det c̃
  bool hyperbolic_exact = false;  // ℓ(c̃) = n
  std::int64_t k_range = 0;       // checked c̃^{1+pk} for |k| ≤ k_range
  bool lifts_have_codim = false;  // every such lift has codim n − 1
  Index base_lower = 0;           // codim Fix(c) in W
  bool base_exact = false;        // ℓ(c) = n
};

/// ℓ(c̃) = n from codimension and parity; ℓ(c) = n because any shorter
/// factorization would lift to some c̃^{1+pk} of codimension n − 1.
CoxeterLengthCertificate certify_coxeter_length(const HyperbolicModel& model, std::int64_t k_range = 3);

// ---- generic hyperbolic extensions of a real quadratic space ----

struct GenericExtension {
  Index inner_dim = 0;
  RatMatrix B_in;
  std::vector<RatVector> G_basis;
  Index ext_dim = 0;
  RatMatrix B_ext;
  RatMatrix inclusion;  // ext_dim × inner_dim
};

/// Extension of (V, B_in) with respect to span(G): each direction of
/// Rad(B_in)/G receives a hyperbolic partner. Throws NotInRadical.
GenericExtension extend_generic(const RatMatrix& B_in, const std::vector<RatVector>& G_basis);

/// The tubular model seen as an extension with respect to G = ⟨b⟩.
GenericExtension as_generic_extension(const HyperbolicModel& model);

/// Checks ιᵀ·B_ext·ι = B_in and Rad(B_ext) = ι(G).
bool extension_invariants_hold(const GenericExtension& ext);

/// Given a basis of V (columns) whose last m vectors complement G inside
/// Rad(B_in) while G lies in the span of the others, returns dual vectors
/// v′ (columns, Ṽ coordinates) bringing B̃ to the block form
///   [B|H′ 0 0; 0 0 I; 0 I 0].
RatMatrix realize_duals(const GenericExtension& ext, const RatMatrix& basis, Index m);

/// Gram matrix of B_ext in the basis (ι(basis), duals).
RatMatrix gram_in_basis(const GenericExtension& ext, const RatMatrix& basis, const RatMatrix& duals);

/// φ: Ṽ_G → Ṽ_H with B̃_G = φᵀ B̃_H φ and φ∘ι_G = ι_H, for H ⊆ G.
/// Throws NotNested.
RatMatrix extension_mono(const GenericExtension& ext_G, const GenericExtension& ext_H);

}  // namespace canonlat
