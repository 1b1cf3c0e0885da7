#include "canonlat/ncposet.hpp"

#include "canonlat/util.hpp"

#include <boost/dynamic_bitset.hpp>
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace canonlat {

namespace {

std::string tuple_str(const KeyTuple& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + t[i];
  return out + "]";
}

KeyTuple prefix(const KeyTuple& t, std::size_t r) { return KeyTuple(t.begin(), t.begin() + static_cast<long>(r)); }

template <typename S>
std::string matrix_key(const Matrix<S>& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
  }
  return os.str();
}

using Bits = boost::dynamic_bitset<>;

// Reflexivity, antisymmetry and transitivity of a relation given as rows.
void order_axioms(const std::vector<Bits>& rows, bool& reflexive, bool& antisymmetric, bool& transitive) {
  const std::size_t m = rows.size();
  reflexive = antisymmetric = transitive = true;
  for (std::size_t i = 0; i < m; ++i) {
    reflexive = reflexive && rows[i].test(i);
    for (std::size_t j = rows[i].find_first(); j != Bits::npos; j = rows[i].find_next(j)) {
      if (j != i && rows[j].test(i)) antisymmetric = false;
      if (!rows[j].is_subset_of(rows[i])) transitive = false;
    }
  }
}

std::vector<std::vector<bool>> to_matrix(const std::vector<Bits>& rows) {
  std::vector<std::vector<bool>> out(rows.size(), std::vector<bool>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) out[i][j] = rows[i].test(j);
  return out;
}

// Relation ≤ built from the prefix images of each top tuple.
template <typename Image>
std::vector<Bits> prefix_relation(const std::vector<KeyTuple>& top, int n, std::size_t count, Image image) {
  std::vector<Bits> rows(count, Bits(count));
  for (const auto& t : top) {
    std::vector<std::size_t> ids;
    for (int r = 1; r <= n; ++r) ids.push_back(image(t, r));
    for (std::size_t r = 0; r < ids.size(); ++r)
      for (std::size_t s = r; s < ids.size(); ++s) rows[ids[r]].set(ids[s]);
  }
  return rows;
}

// Breadth-first orbit of `start` under all generators σ_i^{±1}, layers sorted.
std::vector<KeyTuple> orbit_bfs(const KeyTuple& start, const TupleAction& act, Index depth, std::size_t cap,
                                bool& truncated) {
  std::set<KeyTuple> seen{start};
  std::vector<KeyTuple> out{start}, frontier{start};
  truncated = false;
  for (Index layer = 1; layer <= depth && !frontier.empty(); ++layer) {
    std::set<KeyTuple> fresh;
    for (const auto& t : frontier)
      for (int i = 1; static_cast<std::size_t>(i) < t.size(); ++i)
        for (int dir : {1, -1}) {
          KeyTuple next = act(t, i, dir);
          if (!seen.count(next)) fresh.insert(std::move(next));
        }
    frontier.clear();
    for (const auto& t : fresh) {
      if (out.size() >= cap) {
        truncated = true;
        return out;
      }
      seen.insert(t);
      out.push_back(t);
      frontier.push_back(t);
    }
  }
  return out;
}

std::vector<RootVec> parse_roots(const KeyTuple& t) {
  std::vector<RootVec> out;
  for (const auto& k : t) out.push_back(parse_root_key(k));
  return out;
}

KeyTuple root_keys(const std::vector<RootVec>& roots) {
  KeyTuple out;
  for (const auto& r : roots) out.push_back(root_key(r));
  return out;
}

}  // namespace

std::vector<std::vector<KeyTuple>> prefix_sets(const ExceptionalDatum& datum) {
  std::vector<std::vector<KeyTuple>> out(static_cast<std::size_t>(datum.n + 1));
  for (int r = 0; r <= datum.n; ++r) {
    std::set<KeyTuple> set;
    for (const auto& t : datum.top)
      if (static_cast<int>(t.size()) == datum.n) set.insert(prefix(t, static_cast<std::size_t>(r)));
    out[static_cast<std::size_t>(r)].assign(set.begin(), set.end());
  }
  return out;
}

DatumReport check_datum(const ExceptionalDatum& datum) {
  DatumReport rep;
  rep.c1 = datum.n >= 1 && !datum.top.empty();
  for (const auto& t : datum.top)
    if (static_cast<int>(t.size()) != datum.n) {
      rep.c1 = false;
      rep.violations.push_back("(C1) tuple of wrong length: " + tuple_str(t));
    }
  if (!rep.c1) return rep;

  const std::set<KeyTuple> top(datum.top.begin(), datum.top.end());
  const auto prefixes = prefix_sets(datum);
  // μ_r on every prefix, computed once.
  std::vector<std::map<KeyTuple, std::string>> mu(static_cast<std::size_t>(datum.n + 1));
  for (int r = 1; r <= datum.n; ++r)
    for (const auto& p : prefixes[static_cast<std::size_t>(r)]) mu[static_cast<std::size_t>(r)][p] = datum.mu(p);

  rep.c2 = true;
  for (int r = 1; r <= datum.n; ++r) {
    const auto& mu_r = mu[static_cast<std::size_t>(r)];
    for (const auto& e : top) {
      const std::string& me = mu_r.at(prefix(e, static_cast<std::size_t>(r)));
      for (const auto& [ep, mep] : mu_r) {
        ++rep.pairs_checked;
        KeyTuple joined = ep;
        joined.insert(joined.end(), e.begin() + r, e.end());
        const bool extends = top.count(joined) > 0;
        const bool same = me == mep;
        if (extends == same) continue;
        if (!extends && datum.truncated) {
          ++rep.unverifiable;
          continue;
        }
        rep.c2 = false;
        if (rep.violations.size() < 20)
          rep.violations.push_back("(C2) r=" + std::to_string(r) + " e=" + tuple_str(e) + " e'=" + tuple_str(ep) +
                                   (extends ? " extends but mu differs" : " has equal mu but does not extend"));
      }
    }
  }

  // A = ⊔ A_r with ≤_μ.
  std::map<std::pair<int, std::string>, std::size_t> index;
  for (int r = 1; r <= datum.n; ++r)
    for (const auto& [p, m] : mu[static_cast<std::size_t>(r)]) index.emplace(std::make_pair(r, m), 0);
  for (auto& [key, id] : index) {
    id = rep.poset.elements.size();
    rep.poset.elements.push_back(key);
  }
  const auto rows = prefix_relation(datum.top, datum.n, index.size(), [&](const KeyTuple& t, int r) {
    return index.at({r, mu[static_cast<std::size_t>(r)].at(prefix(t, static_cast<std::size_t>(r)))});
  });
  order_axioms(rows, rep.poset.reflexive, rep.poset.antisymmetric, rep.poset.transitive);
  rep.poset.leq = to_matrix(rows);
  if (!rep.poset.antisymmetric) rep.violations.push_back("order: antisymmetry fails");
  if (!rep.poset.transitive) {
    // The composing tuple may lie outside an explored truncation.
    if (datum.truncated)
      rep.poset.transitivity_unverifiable = true;
    else
      rep.violations.push_back("order: transitivity fails");
  }
  return rep;
}

DatumReport require_datum(const ExceptionalDatum& datum) {
  DatumReport rep = check_datum(datum);
  if (!rep.ok())
    throw Error(ErrorKind::AxiomViolated, rep.violations.empty() ? "datum axioms fail" : rep.violations.front());
  return rep;
}

ThetaReport check_theta(const ExceptionalDatum& E, const ExceptionalDatum& F,
                        const std::function<ElemKey(const ElemKey&)>& rho, const TupleAction& act_E,
                        const TupleAction& act_F, std::map<std::pair<int, std::string>, std::string>* theta_out) {
  ThetaReport rep;
  auto problem = [&](const std::string& s) {
    if (rep.problems.size() < 20) rep.problems.push_back(s);
  };
  if (E.n != F.n) {
    problem("data of different lengths");
    return rep;
  }
  const int n = E.n;
  auto rho_tuple = [&](const KeyTuple& t) {
    KeyTuple out;
    for (const auto& e : t) out.push_back(rho(e));
    return out;
  };

  // ρ on the base set.
  std::map<ElemKey, ElemKey> rho_map;
  std::map<ElemKey, ElemKey> preimage;
  rep.rho_injective = true;
  for (const auto& t : E.top)
    for (const auto& e : t)
      if (!rho_map.count(e)) {
        const ElemKey f = rho(e);
        rho_map[e] = f;
        auto [it, fresh] = preimage.emplace(f, e);
        if (!fresh && it->second != e) {
          rep.rho_injective = false;
          problem("rho identifies " + it->second + " and " + e);
        }
      }

  rep.equivariant = true;
  for (const auto& t : E.top)
    for (int i = 1; i < n; ++i)
      for (int dir : {1, -1})
        if (rho_tuple(act_E(t, i, dir)) != act_F(rho_tuple(t), i, dir)) {
          rep.equivariant = false;
          problem("action not equivariant at " + tuple_str(t));
        }

  std::set<KeyTuple> image, ftop(F.top.begin(), F.top.end());
  for (const auto& t : E.top) image.insert(rho_tuple(t));
  rep.images_match = image == ftop;
  if (!rep.images_match) problem("rho_n(E_n) differs from F_n");

  // θ_r(μ_r(e)) := ν_r(ρ_r(e)).
  std::map<std::pair<int, std::string>, std::string> theta;
  rep.well_defined = true;
  std::map<KeyTuple, std::string> mu_cache, nu_cache;
  auto mu = [&](const KeyTuple& p) {
    auto it = mu_cache.find(p);
    return it != mu_cache.end() ? it->second : (mu_cache[p] = E.mu(p));
  };
  auto nu = [&](const KeyTuple& p) {
    auto it = nu_cache.find(p);
    return it != nu_cache.end() ? it->second : (nu_cache[p] = F.mu(p));
  };
  for (const auto& t : E.top)
    for (int r = 1; r <= n; ++r) {
      const KeyTuple p = prefix(t, static_cast<std::size_t>(r));
      const auto key = std::make_pair(r, mu(p));
      const std::string value = nu(rho_tuple(p));
      auto [it, fresh] = theta.emplace(key, value);
      if (!fresh && it->second != value) {
        rep.well_defined = false;
        problem("theta not well defined at " + tuple_str(p));
      }
    }
  rep.size = theta.size();

  std::set<std::pair<int, std::string>> b_elems;
  for (const auto& t : F.top)
    for (int r = 1; r <= n; ++r) b_elems.emplace(r, nu(prefix(t, static_cast<std::size_t>(r))));
  std::set<std::pair<int, std::string>> hit;
  rep.injective = true;
  for (const auto& [a, b] : theta)
    if (!hit.emplace(a.first, b).second) {
      rep.injective = false;
      problem("theta not injective at r=" + std::to_string(a.first));
    }
  rep.surjective = hit == b_elems;
  if (!rep.surjective) problem("theta misses elements of B");

  // a′ ≤_μ a ⇔ θ(a′) ≤_ν θ(a).
  std::map<std::pair<int, std::string>, std::size_t> a_index, b_index;
  for (const auto& [a, b] : theta) a_index.emplace(a, a_index.size());
  for (const auto& b : b_elems) b_index.emplace(b, b_index.size());
  const auto a_rows = prefix_relation(E.top, n, a_index.size(), [&](const KeyTuple& t, int r) {
    return a_index.at({r, mu(prefix(t, static_cast<std::size_t>(r)))});
  });
  const auto b_rows = prefix_relation(F.top, n, b_index.size(), [&](const KeyTuple& t, int r) {
    return b_index.at({r, nu(prefix(t, static_cast<std::size_t>(r)))});
  });
  rep.order_preserving = rep.injective && rep.surjective;
  if (rep.order_preserving)
    for (const auto& [a1, b1] : theta)
      for (const auto& [a2, b2] : theta) {
        const bool le_a = a_rows[a_index.at(a1)].test(a_index.at(a2));
        const bool le_b = b_rows[b_index.at({a1.first, b1})].test(b_index.at({a2.first, b2}));
        if (le_a != le_b) {
          rep.order_preserving = false;
          problem("theta does not preserve the order");
        }
      }
  if (theta_out) *theta_out = std::move(theta);
  return rep;
}

ExceptionalDatum synthetic_datum() {
  ExceptionalDatum d;
  d.n = 2;
  d.top = {{"1", "2"}, {"2", "3"}, {"3", "1"}};
  d.mu = [](const KeyTuple& p) { return p.size() == 1 ? p[0] : std::string("*"); };
  return d;
}

ExceptionalDatum violating_datum() {
  ExceptionalDatum d = synthetic_datum();
  d.mu = [](const KeyTuple& p) {
    if (p.size() == 2) return std::string("*");
    return p[0] == "3" ? std::string("y") : std::string("x");
  };
  return d;
}

// ---- non-crossing partitions ----

GroupElem cox_map(const CanonicalLattice& lat, const ExcSequence& seq) {
  if (!is_exceptional(lat, seq)) throw Error(ErrorKind::NotExceptional, "cox map needs an exceptional sequence");
  std::vector<RootVec> roots;
  for (const auto& g : seq) roots.push_back(normalize_root(g));
  return reflection_product(lat, roots);
}

std::string short_hash(const RatMatrix& m) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(hash_dense(m) & 0xffffffffu));
  return buf;
}

Poset nc_enumerate(const CanonicalLattice& lat, const Factorization& start, Index depth, std::size_t cap,
                   const HyperbolicModel* model) {
  const OrbitResult orbit = hurwitz_orbit(lat, start, depth, cap);
  Poset poset;
  poset.truncated = orbit.report.truncated;
  poset.depth = orbit.report.depth_reached;

  std::vector<HypElem> refl_cache;
  auto reflection_of = [&](const RootVec& r) -> RatMatrix {
    return model ? hyp_reflection(*model, r) : to_rational(reflection(lat, r));
  };
  const Index dim = model ? model->dim() : lat.n();

  // Prefix products per member, in parallel.
  const auto products = parallel_map(orbit.members, [&](const std::vector<RootVec>& roots) {
    std::vector<RatMatrix> out{identity<Rational>(dim)};
    for (const auto& r : roots) out.push_back(out.back() * reflection_of(r));
    return out;
  });

  std::map<RatMatrix, std::set<Index>, DenseLess> lengths;
  for (const auto& ps : products)
    for (std::size_t r = 0; r < ps.size(); ++r) lengths[ps[r]].insert(static_cast<Index>(r));

  // Sort by (minimal length, matrix).
  std::vector<std::pair<Index, RatMatrix>> order;
  poset.grading_consistent = true;
  for (const auto& [m, ls] : lengths) {
    order.emplace_back(*ls.begin(), m);
    poset.grading_consistent = poset.grading_consistent && ls.size() == 1;
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::map<RatMatrix, std::size_t, DenseLess> index;
  for (const auto& [len, m] : order) {
    index.emplace(m, poset.elements.size());
    poset.elements.push_back({m, len});
  }

  const std::size_t count = poset.elements.size();
  std::vector<Bits> up(count, Bits(count));
  for (const auto& ps : products) {
    std::vector<std::size_t> ids;
    for (const auto& p : ps) ids.push_back(index.at(p));
    for (std::size_t r = 0; r < ids.size(); ++r)
      for (std::size_t s = r; s < ids.size(); ++s) up[ids[r]].set(ids[s]);
  }
  bool reflexive = false;
  order_axioms(up, reflexive, poset.antisymmetric, poset.transitive);
  poset.leq = to_matrix(up);

  std::vector<Bits> down(count, Bits(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = up[i].find_first(); j != Bits::npos; j = up[i].find_next(j)) down[j].set(i);
  poset.graded = true;
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = up[u].find_first(); v != Bits::npos; v = up[u].find_next(v)) {
      if (v == u) continue;
      Bits between = up[u] & down[v];
      between.reset(u);
      between.reset(v);
      if (between.any()) continue;
      poset.covers.emplace_back(u, v);
      poset.graded = poset.graded && poset.elements[v].length == poset.elements[u].length + 1;
    }
  return poset;
}

std::string poset_dot(const Poset& poset) {
  std::ostringstream os;
  os << "digraph nc {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    os << "  n" << i << " [label=\"l=" << poset.elements[i].length << "\\n" << short_hash(poset.elements[i].elem)
       << "\"];\n";
  for (const auto& [u, v] : poset.covers) os << "  n" << u << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_json(const Poset& poset) {
  nlohmann::ordered_json j;
  j["depth"] = poset.depth;
  j["truncated"] = poset.truncated;
  j["antisymmetric"] = poset.antisymmetric;
  j["transitive"] = poset.transitive;
  j["graded"] = poset.graded;
  j["grading_consistent"] = poset.grading_consistent;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    elems.push_back({{"id", i}, {"length", poset.elements[i].length}, {"hash", short_hash(poset.elements[i].elem)}});
  j["elements"] = elems;
  nlohmann::ordered_json covers = nlohmann::ordered_json::array();
  for (const auto& [u, v] : poset.covers) covers.push_back({u, v});
  j["covers"] = covers;
  return j.dump(2) + "\n";
}

// ---- lattice-level data ----

std::string root_key(const RootVec& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + v(i).str();
  return out + ")";
}

RootVec parse_root_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')')
    throw Error(ErrorKind::MalformedInput, "bad root key " + key);
  std::vector<Integer> parts;
  std::stringstream ss(key.substr(1, key.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) parts.emplace_back(item);
  RootVec v(static_cast<Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Index>(i)) = parts[i];
  return v;
}

namespace {

// Exceptional objects up to shift: the braid action on sign classes.
TupleAction braid_action(const CanonicalLattice& lat) {
  return [&lat](const KeyTuple& t, int i, int dir) {
    ExcSequence seq = braid_apply(lat, parse_roots(t), i, dir);
    for (auto& g : seq) g = normalize_root(g);
    return root_keys(seq);
  };
}

TupleAction hurwitz_action(const CanonicalLattice& lat) {
  return [&lat](const KeyTuple& t, int i, int dir) { return root_keys(hurwitz_move(lat, parse_roots(t), i, dir)); };
}

}  // namespace

ExceptionalDatum lattice_sequence_datum(const CanonicalLattice& lat, Index depth, std::size_t cap) {
  ExceptionalDatum d;
  d.n = static_cast<int>(lat.n());
  bool truncated = false;
  ExcSequence start = standard_sequence(lat);
  for (auto& g : start) g = normalize_root(g);
  d.top = orbit_bfs(root_keys(start), braid_action(lat), depth, cap, truncated);
  d.truncated = true;  // the braid orbit itself is infinite in general
  const Index n = lat.n();
  d.mu = [n](const KeyTuple& p) { return matrix_key(spanned_lattice(parse_roots(p), n)); };
  return d;
}

ExceptionalDatum lattice_factorization_datum(const CanonicalLattice& lat, Index depth, std::size_t cap) {
  ExceptionalDatum d;
  d.n = static_cast<int>(lat.n());
  bool truncated = false;
  std::vector<RootVec> start;
  for (const auto& r : standard_sequence(lat)) start.push_back(normalize_root(r));
  d.top = orbit_bfs(root_keys(start), hurwitz_action(lat), depth, cap, truncated);
  d.truncated = true;
  d.mu = [&lat](const KeyTuple& p) { return matrix_key(reflection_product(lat, parse_roots(p))); };
  return d;
}

LatticeThetaReport lattice_theta_check(const CanonicalLattice& lat, Index depth, std::size_t cap) {
  LatticeThetaReport rep;
  const ExceptionalDatum E = lattice_sequence_datum(lat, depth, cap);
  const ExceptionalDatum F = lattice_factorization_datum(lat, depth, cap);
  rep.e_side = check_datum(E);
  rep.f_side = check_datum(F);
  std::map<std::pair<int, std::string>, std::string> theta;
  rep.theta = check_theta(
      E, F, [](const ElemKey& e) { return root_key(normalize_root(parse_root_key(e))); }, braid_action(lat),
      hurwitz_action(lat), &theta);

  rep.cox_commutes = true;
  std::set<KeyTuple> seen;
  for (const auto& t : E.top)
    for (int r = 1; r <= E.n; ++r) {
      const KeyTuple p = prefix(t, static_cast<std::size_t>(r));
      if (!seen.insert(p).second) continue;
      ++rep.cox_checked;
      const auto it = theta.find({r, E.mu(p)});
      if (it == theta.end() || it->second != matrix_key(cox_map(lat, parse_roots(p)))) {
        rep.cox_commutes = false;
        if (rep.problems.size() < 20) rep.problems.push_back("theta and cox differ at " + tuple_str(p));
      }
    }
  return rep;
}

}  // namespace canonlat
