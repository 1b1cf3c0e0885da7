#pragma once

#include "canonlat/lattice.hpp"

#include <optional>
#include <vector>

namespace canonlat {

/// s_α(γ) = γ − 2(γ,α)/(α,α)·α as an integer matrix. Throws NotPseudoRoot.
GroupElem reflection(const CanonicalLattice& lat, const RootVec& alpha);

/// s_α(x) without forming the matrix; α must be a pseudo-root.
RootVec reflect(const CanonicalLattice& lat, const RootVec& alpha, const RootVec& x);

/// Flips the sign so that the first nonzero coordinate is positive.
RootVec normalize_root(const RootVec& v);
bool is_normalized(const RootVec& v);

/// normalize(g·α); asserts s_{gα}·g = g·s_α.
RootVec conj_reflection(const CanonicalLattice& lat, const GroupElem& g, const RootVec& alpha);

/// rank(g − I), the codimension of the fixed space.
Index fix_codim(const GroupElem& g);
Index fix_codim(const RatMatrix& g);

/// mᵀ·B·m = B.
bool is_isometry(const CanonicalLattice& lat, const GroupElem& m);

/// Product of the reflections of `roots`, left to right.
GroupElem reflection_product(const CanonicalLattice& lat, const std::vector<RootVec>& roots);

struct RootEnumeration {
  std::vector<RootVec> roots;  // layer 0 in the order given, later layers lexicographic
  std::vector<Index> depth;    // BFS layer of each root
  bool truncated = false;
};

/// BFS closure of the seeds under the generator reflections, at most
/// `max_depth` applications, stopping after `cap` roots. Seeds and
/// generators default to the simple roots.
RootEnumeration roots_up_to_depth(const CanonicalLattice& lat, Index max_depth, std::size_t cap,
                                  const std::vector<RootVec>& seeds = {},
                                  const std::vector<RootVec>& generators = {});

struct LengthBounds {
  Index lower = 0;   // codimension of Fix(g)
  int parity = 0;    // 0 if det g = +1, else 1
  std::optional<Index> upper;
  std::vector<RootVec> witness;  // factorization realizing `upper`
  bool search_exhausted = false; // true when the node budget ran out

  bool exact() const { return upper && *upper == lower; }
};

/// Lower bound from the fixed space, parity from the determinant, upper
/// bound by iterative deepening over products of reflections in `roots`
/// (tried in the given order). `search_cap` bounds the number of visited
/// nodes.
LengthBounds reflection_length_bounds(const CanonicalLattice& lat, const GroupElem& g,
                                      const std::vector<RootVec>& roots, std::size_t search_cap = 200000);

}  // namespace canonlat
