#include "canonlat/braid.hpp"

#include "canonlat/util.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace canonlat {

namespace {

void check_position(std::size_t size, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= size)
    throw Error(ErrorKind::IndexOutOfRange,
                "braid generator " + std::to_string(i) + " on a tuple of length " + std::to_string(size));
}

// Concatenated coordinates; the hash/ordering key of a root tuple.
IntVector tuple_key(const std::vector<RootVec>& roots, Index n) {
  IntVector key(static_cast<Index>(roots.size()) * n);
  for (std::size_t k = 0; k < roots.size(); ++k) key.segment(static_cast<Index>(k) * n, n) = roots[k];
  return key;
}

std::vector<RootVec> split_key(const IntVector& key, Index n) {
  std::vector<RootVec> roots;
  for (Index k = 0; k < key.size() / n; ++k) roots.push_back(key.segment(k * n, n));
  return roots;
}

std::vector<BraidLetter> all_letters(std::size_t length) {
  std::vector<BraidLetter> out;
  for (int i = 1; static_cast<std::size_t>(i) < length; ++i) {
    out.push_back({i, 1});
    out.push_back({i, -1});
  }
  return out;
}

}  // namespace

bool is_exceptional(const CanonicalLattice& lat, const ExcSequence& seq) {
  for (const auto& g : seq)
    if (g.size() != lat.n() || !is_pseudo_root(lat, g)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (euler(lat, seq[i], seq[j]) != 0) return false;
  return true;
}

ExcSequence standard_sequence(const CanonicalLattice& lat) {
  ExcSequence seq;
  for (Index k = 0; k < lat.n(); ++k) seq.push_back(lat.simple(k));
  return seq;
}

ExcSequence braid_apply(const CanonicalLattice& lat, const ExcSequence& seq_in, int i, int dir) {
  check_position(seq_in.size(), i);
  ExcSequence seq = seq_in;
  const std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
  if (dir > 0) {
    const RootVec moved = reflect(lat, seq_in[b], seq_in[a]);
    seq[a] = seq_in[b];
    seq[b] = moved;
  } else {
    seq[a] = reflect(lat, seq_in[a], seq_in[b]);
    seq[b] = seq_in[a];
  }
  if (!is_exceptional(lat, seq)) throw Error(ErrorKind::NotExceptional, "braid move broke exceptionality");
  return seq;
}

ExcSequence braid_apply(const CanonicalLattice& lat, ExcSequence seq, const BraidWord& word) {
  for (const auto& l : word) seq = braid_apply(lat, seq, l.i, l.dir);
  return seq;
}

Factorization make_factorization(const CanonicalLattice& lat, const std::vector<RootVec>& roots) {
  Factorization f;
  for (const auto& r : roots) f.refls.push_back(normalize_root(r));
  f.product = reflection_product(lat, f.refls);
  return f;
}

Factorization standard_factorization(const CanonicalLattice& lat) {
  return make_factorization(lat, standard_sequence(lat));
}

std::vector<RootVec> hurwitz_move(const CanonicalLattice& lat, std::vector<RootVec> roots, int i, int dir) {
  check_position(roots.size(), i);
  const std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
  if (dir > 0) {
    // (s_α, s_β) ↦ (s_β, s_β s_α s_β) and s_β s_α s_β = s_{s_β(α)}
    const RootVec conj = normalize_root(reflect(lat, roots[b], roots[a]));
    roots[a] = roots[b];
    roots[b] = conj;
  } else {
    const RootVec conj = normalize_root(reflect(lat, roots[a], roots[b]));
    roots[b] = roots[a];
    roots[a] = conj;
  }
  return roots;
}

Factorization hurwitz_apply(const CanonicalLattice& lat, const Factorization& fact, int i, int dir) {
  Factorization out{hurwitz_move(lat, fact.refls, i, dir), fact.product};
  if (reflection_product(lat, out.refls) != fact.product)
    throw Error(ErrorKind::AxiomViolated, "Hurwitz move changed the product");
  return out;
}

Factorization hurwitz_apply(const CanonicalLattice& lat, Factorization fact, const BraidWord& word) {
  for (const auto& l : word) fact = hurwitz_apply(lat, fact, l.i, l.dir);
  return fact;
}

OrbitResult hurwitz_orbit(const CanonicalLattice& lat, const Factorization& start, Index depth, std::size_t cap) {
  if (depth < 0 || cap == 0) throw Error(ErrorKind::PreconditionViolated, "depth must be >= 0 and cap > 0");
  const Index n = lat.n();
  const auto letters = all_letters(start.refls.size());
  OrbitResult out;
  std::unordered_set<IntVector, DenseHash, DenseEqual> seen;

  std::vector<RootVec> first;
  for (const auto& r : start.refls) first.push_back(normalize_root(r));
  seen.insert(tuple_key(first, n));
  out.members.push_back(first);
  out.depth.push_back(0);
  std::vector<std::vector<RootVec>> frontier{first};

  for (Index layer = 1; layer <= depth; ++layer) {
    const auto images = parallel_map(frontier, [&](const std::vector<RootVec>& roots) {
      std::vector<IntVector> next;
      for (const auto& l : letters) next.push_back(tuple_key(hurwitz_move(lat, roots, l.i, l.dir), n));
      return next;
    });
    std::set<IntVector, DenseLess> fresh;
    for (const auto& batch : images)
      for (const auto& key : batch)
        if (!seen.count(key)) fresh.insert(key);
    if (fresh.empty()) {
      out.report.closed = true;
      break;
    }
    frontier.clear();
    for (const auto& key : fresh) {
      if (out.members.size() >= cap) {
        out.report.truncated = true;
        break;
      }
      seen.insert(key);
      out.members.push_back(split_key(key, n));
      out.depth.push_back(layer);
      frontier.push_back(out.members.back());
    }
    out.report.depth_reached = layer;
    if (out.report.truncated) break;
  }
  out.report.size = out.members.size();
  return out;
}

namespace {

struct Visit {
  IntVector parent;
  BraidLetter letter;  // applied to parent to reach this node
  Index depth = 0;
};

using VisitMap = std::unordered_map<IntVector, Visit, DenseHash, DenseEqual>;

void explore(const CanonicalLattice& lat, const std::vector<RootVec>& origin, Index depth, std::size_t cap,
             VisitMap& visits) {
  const Index n = lat.n();
  const auto letters = all_letters(origin.size());
  const IntVector root_key = tuple_key(origin, n);
  visits.emplace(root_key, Visit{root_key, {0, 0}, 0});
  std::vector<IntVector> frontier{root_key};
  for (Index layer = 1; layer <= depth && !frontier.empty(); ++layer) {
    std::vector<IntVector> next;
    for (const auto& key : frontier) {
      const auto roots = split_key(key, n);
      for (const auto& l : letters) {
        IntVector k2 = tuple_key(hurwitz_move(lat, roots, l.i, l.dir), n);
        if (visits.count(k2)) continue;
        if (visits.size() >= cap) return;
        visits.emplace(k2, Visit{key, l, layer});
        next.push_back(std::move(k2));
      }
    }
    frontier = std::move(next);
  }
}

BraidWord path_to(const VisitMap& visits, IntVector key) {
  BraidWord word;
  while (true) {
    const Visit& v = visits.at(key);
    if (v.depth == 0) break;
    word.push_back(v.letter);
    key = v.parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

SearchResult orbit_search(const CanonicalLattice& lat, const Factorization& target, const Factorization& start,
                          Index depth, std::size_t cap) {
  if (target.product != start.product) throw Error(ErrorKind::ProductMismatch, "target and start differ in product");
  if (target.refls.size() != start.refls.size())
    throw Error(ErrorKind::ProductMismatch, "target and start have different lengths");
  const Index n = lat.n();
  std::vector<RootVec> from, to;
  for (const auto& r : start.refls) from.push_back(normalize_root(r));
  for (const auto& r : target.refls) to.push_back(normalize_root(r));

  VisitMap forward, backward;
  explore(lat, from, (depth + 1) / 2, cap, forward);
  explore(lat, to, depth / 2, cap, backward);

  // Pick the meeting point with the shortest total word, ties broken by key.
  const IntVector* best = nullptr;
  Index best_len = depth + 1;
  std::vector<const IntVector*> meets;
  for (const auto& [key, visit] : backward) {
    auto it = forward.find(key);
    if (it == forward.end()) continue;
    const Index len = it->second.depth + visit.depth;
    if (len < best_len || (len == best_len && best && DenseLess{}(key, *best))) {
      best_len = len;
      best = &key;
    }
  }
  SearchResult result;
  if (!best) return result;
  result.found = true;
  result.word = path_to(forward, *best);
  BraidWord back = path_to(backward, *best);
  for (auto it = back.rbegin(); it != back.rend(); ++it) result.word.push_back({it->i, -it->dir});

  std::vector<RootVec> replay = from;
  for (const auto& l : result.word) replay = hurwitz_move(lat, replay, l.i, l.dir);
  if (tuple_key(replay, n) != tuple_key(to, n))
    throw Error(ErrorKind::AxiomViolated, "orbit search witness does not replay");
  return result;
}

IntMatrix spanned_lattice(const std::vector<RootVec>& roots, Index n) {
  IntMatrix rows(static_cast<Index>(roots.size()), n);
  for (std::size_t k = 0; k < roots.size(); ++k) rows.row(static_cast<Index>(k)) = roots[k].transpose();
  return hermite_normal_form(rows);
}

}  // namespace canonlat
