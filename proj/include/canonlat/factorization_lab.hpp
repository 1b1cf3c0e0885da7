#pragma once

#include "canonlat/hyperbolic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace canonlat {

// Everything below except radical_shift_check and kill_arms expects ε = 1
// and throws PreconditionViolated otherwise.
//
// γ⃗(β) = (α_(t,p_t−1), …, α_(1,1), β, β) shifted by k⃗·a. `ks` follows the
// same order: arm entries indexed like the basis, then k, then k′.
struct ShiftedTuple {
  RootVec beta;             // R-coordinates, α_0* coefficient zero
  std::vector<Integer> ks;  // length n
};

/// The shifted vectors γ_l + k_l·a, left to right.
std::vector<RootVec> shifted_gammas(const CanonicalLattice& lat, const ShiftedTuple& st);

/// True iff every γ_l + k_l·a is a pseudo-root.
bool is_valid_tuple(const CanonicalLattice& lat, const ShiftedTuple& st);

/// Evaluates both sides of
///   s_{γ_n+m_n a}⋯s_{γ_1+m_1 a}(x) = s_{γ_n}⋯s_{γ_1}(x) − Σ m_i (x, s_{γ_1}⋯s_{γ_{i−1}}(γ_i^♯)) a
/// with γ_1 the last entry of `gammas`. Throws IsotropicVector.
bool radical_shift_check(const CanonicalLattice& lat, const std::vector<RootVec>& gammas,
                         const std::vector<Integer>& ms, const RootVec& x);

/// t(β, k⃗) in W.
GroupElem build_t(const CanonicalLattice& lat, const ShiftedTuple& st);
/// t̃(β, k⃗) in W̃; the tuple refers to model.lat.
HypElem build_t(const HyperbolicModel& model, const ShiftedTuple& st);

/// α_0^♯ ≡ (k′−k)β^♯ + Σ_(i,j) (Σ_{q≥j} k_(i,q)) α_(i,j)^♯ modulo Rad(B).
bool factorization_condition(const CanonicalLattice& lat, const ShiftedTuple& st);

/// The standard tuple (α_0; 0, …, 0, 0, 1).
ShiftedTuple standard_tuple(const CanonicalLattice& lat);

struct KillArmsWitness {
  std::vector<Index> word;  // basis indices of arm reflections, applied first to last
  GroupElem w;              // their product; w(β) = α_0
};

/// Reduces β = α_0 + Σ λ_(k,l) α_(k,l) with ‖β‖ = ‖α_0‖ to α_0 by arm
/// reflections, one arm at a time. Throws PreconditionViolated.
KillArmsWitness kill_arms(const CanonicalLattice& lat, const RootVec& beta);

/// β has α_0-coefficient 1, no α_0* part and the norm of α_0.
bool kill_arms_eligible(const CanonicalLattice& lat, const RootVec& beta);

struct DivisibilityReport {
  std::size_t checked = 0;     // roots examined
  std::size_t passed = 0;
  std::size_t skipped = 0;     // ∼-class not resolved within the search depth
  std::size_t statements = 0;  // individual divisibility assertions evaluated
  std::vector<std::string> counterexamples;
};

/// For each root, resolves its ∼-classes by bounded orbits of the simple
/// roots and checks the divisibility statements that apply.
DivisibilityReport divisibility_report(const CanonicalLattice& lat, const std::vector<RootVec>& roots,
                                       Index sim_depth);

/// Roots of Γ_∘ up to the given depth (the quotient's simple reflections
/// acting on its simple roots).
std::vector<RootVec> quotient_roots(const CanonicalLattice& lat, Index depth, std::size_t cap = 100000);

struct GridReport {
  std::size_t betas = 0;
  std::size_t tuples = 0;            // valid tuples in the grid
  std::size_t condition_true = 0;
  std::size_t product_true = 0;      // t = c
  std::size_t mismatches = 0;
  std::size_t direct_checked = 0;    // tuples re-evaluated with build_t
  std::size_t lemma_checked = 0;     // solutions checked for the expected root shape
  std::size_t hyperbolic_true = 0;   // t̃ = c̃ (tubular only)
  std::size_t kill_arms_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return mismatches == 0 && failures.empty(); }
};

/// Exhaustive grid over β in the depth-`beta_depth` quotient roots and all
/// shifts with |k_l| ≤ kmax: compares factorization_condition with t = c,
/// replays build_t on every solution and on `sample` random tuples, and
/// checks the consequences for β, k′ − k and the arm shifts (in W̃ for
/// tubular symbols).
GridReport factorization_grid(const CanonicalLattice& lat, Index beta_depth = 4, int kmax = 2,
                              std::uint64_t seed = 7, std::size_t sample = 200);

std::string describe_tuple(const ShiftedTuple& st);

}  // namespace canonlat
