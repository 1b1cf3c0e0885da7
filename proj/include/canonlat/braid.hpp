#pragma once

#include "canonlat/group.hpp"

#include <cstdint>
#include <vector>

namespace canonlat {

/// Ordered tuple of pseudo-roots with ⟨γ_i, γ_j⟩ = 0 whenever j < i.
using ExcSequence = std::vector<RootVec>;

struct Factorization {
  std::vector<RootVec> refls;  // sign-normalized roots, one per reflection
  GroupElem product;
};

/// One braid generator σ_i^{dir}, i 1-based, dir = ±1.
struct BraidLetter {
  int i = 1;
  int dir = 1;
  bool operator==(const BraidLetter&) const = default;
};
using BraidWord = std::vector<BraidLetter>;  // applied left to right

bool is_exceptional(const CanonicalLattice& lat, const ExcSequence& seq);
/// The basis R as an exceptional sequence.
ExcSequence standard_sequence(const CanonicalLattice& lat);

ExcSequence braid_apply(const CanonicalLattice& lat, const ExcSequence& seq, int i, int dir);
ExcSequence braid_apply(const CanonicalLattice& lat, ExcSequence seq, const BraidWord& word);

Factorization make_factorization(const CanonicalLattice& lat, const std::vector<RootVec>& roots);
/// (s_(t,p_t−1), …, s_(1,1), s_0, s_0*) with product c.
Factorization standard_factorization(const CanonicalLattice& lat);

/// The Hurwitz move on root tuples alone; no product bookkeeping.
std::vector<RootVec> hurwitz_move(const CanonicalLattice& lat, std::vector<RootVec> roots, int i, int dir);

/// σ_i(…, g_i, g_{i+1}, …) = (…, g_{i+1}, g_{i+1}⁻¹ g_i g_{i+1}, …); the
/// inverse move conjugates the other way. Product invariance is asserted.
Factorization hurwitz_apply(const CanonicalLattice& lat, const Factorization& fact, int i, int dir);
Factorization hurwitz_apply(const CanonicalLattice& lat, Factorization fact, const BraidWord& word);

struct OrbitReport {
  std::size_t size = 0;
  Index depth_reached = 0;
  bool closed = false;
  bool truncated = false;
};

struct OrbitResult {
  std::vector<std::vector<RootVec>> members;  // BFS order, lexicographic within a layer
  std::vector<Index> depth;
  OrbitReport report;
};

OrbitResult hurwitz_orbit(const CanonicalLattice& lat, const Factorization& start, Index depth,
                          std::size_t cap = 1000000);

struct SearchResult {
  bool found = false;
  BraidWord word;  // word(start) = target
};

/// Bidirectional breadth-first search for a braid word of length ≤ depth.
/// Throws ProductMismatch when the products differ.
SearchResult orbit_search(const CanonicalLattice& lat, const Factorization& target, const Factorization& start,
                          Index depth, std::size_t cap = 1000000);

/// Row Hermite normal form of the span of the entries.
IntMatrix spanned_lattice(const std::vector<RootVec>& roots, Index n);

}  // namespace canonlat
