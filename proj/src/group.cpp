#include "canonlat/group.hpp"

#include "canonlat/util.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace canonlat {

GroupElem reflection(const CanonicalLattice& lat, const RootVec& alpha) {
  if (!is_pseudo_root(lat, alpha)) throw Error(ErrorKind::NotPseudoRoot, "cannot reflect in a non-pseudo-root");
  const Integer norm = euler(lat, alpha, alpha);
  const IntVector pairing = lat.B() * alpha;  // (v_k, α)
  GroupElem s = identity<Integer>(lat.n());
  for (Index col = 0; col < lat.n(); ++col) {
    const Integer factor = pairing(col) / norm;
    if (factor != 0) s.col(col) -= factor * alpha;
  }
  return s;
}

RootVec reflect(const CanonicalLattice& lat, const RootVec& alpha, const RootVec& x) {
  const Integer norm = euler(lat, alpha, alpha);
  if (norm <= 0) throw Error(ErrorKind::NotPseudoRoot, "cannot reflect in a vector of non-positive norm");
  const Integer pairing = x.dot(lat.B() * alpha);
  if (pairing % norm != 0) throw Error(ErrorKind::NotPseudoRoot, "reflection is not integral");
  return x - (pairing / norm) * alpha;
}

RootVec normalize_root(const RootVec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) > 0) return v;
    if (v(i) < 0) return -v;
  }
  return v;
}

bool is_normalized(const RootVec& v) { return normalize_root(v) == v; }

RootVec conj_reflection(const CanonicalLattice& lat, const GroupElem& g, const RootVec& alpha) {
  const RootVec image = normalize_root(g * alpha);
  if (!is_pseudo_root(lat, image)) throw Error(ErrorKind::NotPseudoRoot, "conjugated root is not a pseudo-root");
  if (reflection(lat, image) * g != g * reflection(lat, alpha))
    throw Error(ErrorKind::AxiomViolated, "conjugation identity failed");
  return image;
}

Index fix_codim(const GroupElem& g) { return rank(RatMatrix(to_rational(g) - RatMatrix::Identity(g.rows(), g.cols()))); }
Index fix_codim(const RatMatrix& g) { return rank(RatMatrix(g - RatMatrix::Identity(g.rows(), g.cols()))); }

bool is_isometry(const CanonicalLattice& lat, const GroupElem& m) {
  return m.transpose() * lat.B() * m == lat.B();
}

GroupElem reflection_product(const CanonicalLattice& lat, const std::vector<RootVec>& roots) {
  GroupElem out = identity<Integer>(lat.n());
  for (const auto& r : roots) out = (out * reflection(lat, r)).eval();
  return out;
}

RootEnumeration roots_up_to_depth(const CanonicalLattice& lat, Index max_depth, std::size_t cap,
                                  const std::vector<RootVec>& seeds_in, const std::vector<RootVec>& gens_in) {
  if (max_depth < 0 || cap == 0) throw Error(ErrorKind::PreconditionViolated, "depth must be >= 0 and cap > 0");
  std::vector<RootVec> seeds = seeds_in, gens = gens_in;
  if (seeds.empty())
    for (Index k = 0; k < lat.n(); ++k) seeds.push_back(lat.simple(k));
  if (gens.empty())
    for (Index k = 0; k < lat.n(); ++k) gens.push_back(lat.simple(k));
  std::vector<GroupElem> moves;
  for (const auto& g : gens) moves.push_back(reflection(lat, g));

  RootEnumeration out;
  std::unordered_set<RootVec, DenseHash, DenseEqual> seen;
  std::vector<RootVec> frontier;
  for (const auto& s : seeds) {
    const RootVec r = normalize_root(s);
    if (!seen.insert(r).second) continue;
    if (out.roots.size() >= cap) {
      out.truncated = true;
      return out;
    }
    out.roots.push_back(r);
    out.depth.push_back(0);
    frontier.push_back(r);
  }

  for (Index layer = 1; layer <= max_depth && !frontier.empty(); ++layer) {
    const auto images = parallel_map(frontier, [&](const RootVec& r) {
      std::vector<RootVec> next;
      next.reserve(moves.size());
      for (const auto& m : moves) next.push_back(normalize_root(m * r));
      return next;
    });
    std::set<RootVec, DenseLess> fresh;
    for (const auto& batch : images)
      for (const auto& r : batch)
        if (!seen.count(r)) fresh.insert(r);
    frontier.clear();
    for (const auto& r : fresh) {
      if (out.roots.size() >= cap) {
        out.truncated = true;
        return out;
      }
      seen.insert(r);
      out.roots.push_back(r);
      out.depth.push_back(layer);
      frontier.push_back(r);
    }
  }
  return out;
}

LengthBounds reflection_length_bounds(const CanonicalLattice& lat, const GroupElem& g,
                                      const std::vector<RootVec>& roots, std::size_t search_cap) {
  if (roots.empty()) throw Error(ErrorKind::PreconditionViolated, "reflection_length_bounds needs roots");
  LengthBounds out;
  out.lower = fix_codim(g);
  out.parity = determinant(g) == 1 ? 0 : 1;

  std::vector<GroupElem> refl;
  for (const auto& r : roots) refl.push_back(reflection(lat, r));
  const GroupElem one = identity<Integer>(lat.n());

  std::size_t visited = 0;
  std::vector<std::size_t> path;
  // Peel reflections off the left: g = t·h with h of length r−1.
  std::function<bool(const GroupElem&, Index)> dfs = [&](const GroupElem& h, Index remaining) -> bool {
    if (remaining == 0) return h == one;
    for (std::size_t k = 0; k < refl.size(); ++k) {
      if (++visited > search_cap) return false;
      const GroupElem next = refl[k] * h;
      if (fix_codim(next) > remaining - 1) continue;
      path.push_back(k);
      if (dfs(next, remaining - 1)) return true;
      path.pop_back();
      if (visited > search_cap) return false;
    }
    return false;
  };

  Index length = out.lower;
  if ((length - out.parity) % 2 != 0) ++length;
  const Index ceiling = out.lower + lat.n() + 2;
  for (; length <= ceiling && visited <= search_cap; length += 2) {
    path.clear();
    if (dfs(g, length)) {
      out.upper = length;
      for (auto k : path) out.witness.push_back(roots[k]);
      if (reflection_product(lat, out.witness) != g)
        throw Error(ErrorKind::AxiomViolated, "length witness does not multiply to g");
      return out;
    }
  }
  out.search_exhausted = visited > search_cap;
  return out;
}

}  // namespace canonlat
