#include "canonlat/factorization_lab.hpp"

#include "canonlat/util.hpp"

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace canonlat {

namespace {

Index arm_slots(const CanonicalLattice& lat) { return lat.n() - 2; }

// The shifted-tuple calculus is stated for ε = 1; ε = 2 symbols go through
// epsilon_one_equivalent first.
void require_epsilon_one(const CanonicalLattice& lat) {
  if (lat.symbol().epsilon != 1)
    throw Error(ErrorKind::PreconditionViolated, "shifted tuples need eps = 1; use the eps = 1 equivalent");
}

void check_tuple_shape(const CanonicalLattice& lat, const ShiftedTuple& st) {
  require_epsilon_one(lat);
  if (st.beta.size() != lat.n() || static_cast<Index>(st.ks.size()) != lat.n())
    throw Error(ErrorKind::DimensionMismatch, "shifted tuple has the wrong length");
  if (st.beta(lat.center0_star()) != 0)
    throw Error(ErrorKind::PreconditionViolated, "β must lie in Γ_∘ (no α_0* coefficient)");
}

RatVector sharp(const CanonicalLattice& lat, const RatVector& v) {
  const Rational norm = sym(lat, v, v);
  if (norm == 0) throw Error(ErrorKind::IsotropicVector, "♯ of an isotropic vector");
  return (Rational(2) / norm) * v;
}

RatVector rational_reflect(const CanonicalLattice& lat, const RatVector& v, const RatVector& x) {
  const Rational norm = sym(lat, v, v);
  if (norm == 0) throw Error(ErrorKind::IsotropicVector, "cannot reflect in an isotropic vector");
  return x - (Rational(2) * sym(lat, v, x) / norm) * v;
}

// Partial sums Σ_{q ≥ j} k_(i,q) for every arm slot. Inside an arm the basis
// lists j from p_i − 1 down to 1, so the sum runs over earlier slots.
std::vector<Integer> arm_partial_sums(const CanonicalLattice& lat, const std::vector<Integer>& ks) {
  const Symbol& s = lat.symbol();
  std::vector<Integer> sums(static_cast<std::size_t>(arm_slots(lat)));
  for (int arm = 1; arm <= s.t; ++arm) {
    Integer running = 0;
    for (int j = s.p[static_cast<std::size_t>(arm - 1)] - 1; j >= 1; --j) {
      const auto idx = static_cast<std::size_t>(lat.arm_index(arm, j));
      running += ks[idx];
      sums[idx] = running;
    }
  }
  return sums;
}

// B·(α_0^♯ − Σ S_(i,j) α_(i,j)^♯): the arm part of the factorization condition.
RatVector arm_condition_key(const CanonicalLattice& lat, const std::vector<Integer>& ks) {
  const RatMatrix B = to_rational(lat.B());
  RatVector v = sharp(lat, to_rational(lat.simple(lat.center0())));
  const auto sums = arm_partial_sums(lat, ks);
  for (Index idx = 0; idx < arm_slots(lat); ++idx)
    if (sums[static_cast<std::size_t>(idx)] != 0)
      v -= Rational(sums[static_cast<std::size_t>(idx)]) * sharp(lat, to_rational(lat.simple(idx)));
  return B * v;
}

std::string vec_str(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

}  // namespace

std::string describe_tuple(const ShiftedTuple& st) {
  std::ostringstream os;
  os << "beta=" << vec_str(st.beta) << " ks=(";
  for (std::size_t i = 0; i < st.ks.size(); ++i) os << (i ? "," : "") << st.ks[i];
  os << ")";
  return os.str();
}

std::vector<RootVec> shifted_gammas(const CanonicalLattice& lat, const ShiftedTuple& st) {
  check_tuple_shape(lat, st);
  const RootVec a = radical_a(lat);
  std::vector<RootVec> out;
  for (Index idx = 0; idx < arm_slots(lat); ++idx)
    out.push_back(lat.simple(idx) + st.ks[static_cast<std::size_t>(idx)] * a);
  out.push_back(st.beta + st.ks[static_cast<std::size_t>(lat.n() - 2)] * a);
  out.push_back(st.beta + st.ks[static_cast<std::size_t>(lat.n() - 1)] * a);
  return out;
}

bool is_valid_tuple(const CanonicalLattice& lat, const ShiftedTuple& st) {
  for (const auto& g : shifted_gammas(lat, st))
    if (!is_pseudo_root(lat, g)) return false;
  return true;
}

bool radical_shift_check(const CanonicalLattice& lat, const std::vector<RootVec>& gammas,
                         const std::vector<Integer>& ms, const RootVec& x) {
  if (gammas.size() != ms.size()) throw Error(ErrorKind::DimensionMismatch, "one shift per vector expected");
  const RatVector a = to_rational(radical_a(lat));
  const RatVector xr = to_rational(x);
  const std::size_t count = gammas.size();
  // Index 0 of `gammas` is γ_n, the last one is γ_1 (applied first).
  auto gamma = [&](std::size_t i) { return RatVector(to_rational(gammas[count - i])); };  // 1-based γ_i
  auto shift = [&](std::size_t i) { return Rational(ms[count - i]); };

  RatVector lhs = xr, plain = xr;
  for (std::size_t i = 1; i <= count; ++i) {
    lhs = rational_reflect(lat, RatVector(gamma(i) + shift(i) * a), lhs);
    plain = rational_reflect(lat, gamma(i), plain);
  }
  Rational correction = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    if (shift(i) == 0) continue;
    // s_{γ_1}⋯s_{γ_{i−1}}(γ_i^♯): apply s_{γ_{i−1}} first.
    RatVector v = sharp(lat, gamma(i));
    for (std::size_t l = i - 1; l >= 1; --l) v = rational_reflect(lat, gamma(l), v);
    correction += shift(i) * sym(lat, xr, v);
  }
  return lhs == plain - correction * a;
}

GroupElem build_t(const CanonicalLattice& lat, const ShiftedTuple& st) {
  return reflection_product(lat, shifted_gammas(lat, st));
}

HypElem build_t(const HyperbolicModel& model, const ShiftedTuple& st) {
  HypElem t = identity<Rational>(model.dim());
  for (const auto& g : shifted_gammas(model.lat, st)) {
    if (!is_pseudo_root(model.lat, g)) throw Error(ErrorKind::NotPseudoRoot, "shifted vector is not a pseudo-root");
    t = (t * hyp_reflection(model, g)).eval();
  }
  return t;
}

bool factorization_condition(const CanonicalLattice& lat, const ShiftedTuple& st) {
  check_tuple_shape(lat, st);
  const Integer delta_k = st.ks[static_cast<std::size_t>(lat.n() - 1)] - st.ks[static_cast<std::size_t>(lat.n() - 2)];
  const RatVector rhs = Rational(delta_k) * (to_rational(lat.B()) * sharp(lat, to_rational(st.beta)));
  return arm_condition_key(lat, st.ks) == rhs;
}

ShiftedTuple standard_tuple(const CanonicalLattice& lat) {
  require_epsilon_one(lat);
  ShiftedTuple st{lat.simple(lat.center0()), std::vector<Integer>(static_cast<std::size_t>(lat.n()), Integer(0))};
  st.ks.back() = 1;
  return st;
}

bool kill_arms_eligible(const CanonicalLattice& lat, const RootVec& beta) {
  if (beta.size() != lat.n()) return false;
  const RootVec alpha0 = lat.simple(lat.center0());
  return beta(lat.center0()) == 1 && beta(lat.center0_star()) == 0 &&
         sym(lat, beta, beta) == sym(lat, alpha0, alpha0);
}

KillArmsWitness kill_arms(const CanonicalLattice& lat, const RootVec& beta) {
  if (!kill_arms_eligible(lat, beta))
    throw Error(ErrorKind::PreconditionViolated, "β must be α_0 plus arm terms with the norm of α_0");
  const Symbol& s = lat.symbol();
  KillArmsWitness out;
  out.w = identity<Integer>(lat.n());
  RootVec current = beta;
  for (int arm = 1; arm <= s.t; ++arm) {
    const int p = s.p[static_cast<std::size_t>(arm - 1)];
    // One pass s_(i,1)⋯s_(i,m) clears the arm; the bound guards the loop.
    for (int pass = 0; pass < 4 * p; ++pass) {
      int m = 0;
      for (int j = p - 1; j >= 1 && m == 0; --j)
        if (current(lat.arm_index(arm, j)) != 0) m = j;
      if (m == 0) break;
      for (int j = m; j >= 1; --j) {
        const Index idx = lat.arm_index(arm, j);
        current = reflect(lat, lat.simple(idx), current);
        out.word.push_back(idx);
        out.w = (reflection(lat, lat.simple(idx)) * out.w).eval();
      }
    }
  }
  if (current != lat.simple(lat.center0()) || out.w * beta != current)
    throw Error(ErrorKind::AxiomViolated, "arm reduction did not reach α_0 from " + vec_str(beta));
  return out;
}

std::vector<RootVec> quotient_roots(const CanonicalLattice& lat, Index depth, std::size_t cap) {
  std::vector<RootVec> simple;
  for (Index k = 0; k + 1 < lat.n(); ++k) simple.push_back(lat.simple(k));
  return roots_up_to_depth(lat, depth, cap, simple, simple).roots;
}

DivisibilityReport divisibility_report(const CanonicalLattice& lat, const std::vector<RootVec>& roots,
                                       Index sim_depth) {
  require_epsilon_one(lat);
  const Symbol& s = lat.symbol();
  const Index n = lat.n();
  const int eps = s.epsilon;

  // Orbit balls of the simple roots; every member is ∼ to its seed.
  std::vector<std::unordered_set<RootVec, DenseHash, DenseEqual>> balls(static_cast<std::size_t>(n));
  for (Index w = 0; w < n; ++w) {
    const auto e = roots_up_to_depth(lat, sim_depth, 2000000, {lat.simple(w)});
    balls[static_cast<std::size_t>(w)].insert(e.roots.begin(), e.roots.end());
  }
  // Seeds known to be equivalent; closed transitively.
  std::vector<std::vector<bool>> same(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      same[u][v] = u == v || balls[u].count(lat.simple(v)) || balls[v].count(lat.simple(u));
  for (Index k = 0; k < n; ++k)
    for (Index u = 0; u < n; ++u)
      for (Index v = 0; v < n; ++v) same[u][v] = same[u][v] || (same[u][k] && same[k][v]);

  auto arm_of = [&](Index idx) -> int { return lat.basis()[static_cast<std::size_t>(idx)].arm; };
  auto is_arm = [&](Index idx) { return idx < n - 2; };
  const RootVec a = radical_a(lat);

  struct Outcome {
    bool resolved = false;
    std::size_t statements = 0;
    std::vector<std::string> failures;
  };
  const auto outcomes = parallel_map(roots, [&](const RootVec& beta_in) {
    Outcome o;
    const RootVec beta = normalize_root(beta_in);
    std::vector<bool> cls(static_cast<std::size_t>(n), false);
    for (Index w = 0; w < n; ++w)
      if (balls[static_cast<std::size_t>(w)].count(beta))
        for (Index v = 0; v < n; ++v) cls[v] = cls[v] || same[w][v];
    for (Index w = 0; w < n; ++w) o.resolved = o.resolved || cls[w];
    if (!o.resolved) return o;

    const Integer l0 = beta(lat.center0()), l0s = beta(lat.center0_star());
    const Integer l0_adapted = l0 + eps * l0s;  // coefficient of α_0 in (…, α_0, a)
    auto require = [&](const Integer& divisor, const Integer& value, const std::string& what) {
      ++o.statements;
      if (value % divisor != 0)
        o.failures.push_back(vec_str(beta) + ": " + divisor.str() + " does not divide " + what + "=" + value.str());
    };
    for (Index w = 0; w < n; ++w) {
      if (!cls[w]) continue;
      if (is_arm(w)) {
        const int i = arm_of(w);
        const Integer fi = s.f[static_cast<std::size_t>(i - 1)];
        require(fi, l0, "lambda_0");
        require(fi, l0s, "lambda_0*");
        require(fi, l0_adapted, "lambda_0 (a-basis)");
        require(fi, l0s, "nu_0");
        for (Index idx = 0; idx < n - 2; ++idx) {
          const int k = arm_of(idx);
          if (k == i) continue;
          require(fi * s.e(k - 1), beta(idx), "lambda" + lat.basis()[static_cast<std::size_t>(idx)].str().substr(1));
        }
      } else {
        for (Index idx = 0; idx < n - 2; ++idx)
          require(Integer(s.e(arm_of(idx) - 1)), beta(idx),
                  "lambda" + lat.basis()[static_cast<std::size_t>(idx)].str().substr(1));
      }
    }
    // α_(i,j) + m·a ∈ Φ forces α_(i,j) + m·a ∼ α_(i,j).
    for (Index idx = 0; idx < n - 2; ++idx)
      for (int sign : {1, -1}) {
        const RootVec diff = sign * beta - lat.simple(idx);
        if (diff.isZero()) continue;
        bool multiple_of_a = true;
        Integer m = diff(lat.center0_star());
        for (Index k = 0; k < n; ++k) multiple_of_a = multiple_of_a && diff(k) == m * a(k);
        if (!multiple_of_a) continue;
        ++o.statements;
        if (!cls[idx]) o.failures.push_back(vec_str(beta) + ": shifted arm root not equivalent to its arm root");
      }
    return o;
  });

  DivisibilityReport r;
  for (const auto& o : outcomes) {
    ++r.checked;
    if (!o.resolved) {
      ++r.skipped;
      continue;
    }
    r.statements += o.statements;
    if (o.failures.empty()) ++r.passed;
    r.counterexamples.insert(r.counterexamples.end(), o.failures.begin(), o.failures.end());
  }
  return r;
}

GridReport factorization_grid(const CanonicalLattice& lat, Index beta_depth, int kmax, std::uint64_t seed,
                              std::size_t sample) {
  require_epsilon_one(lat);
  GridReport r;
  const Index n = lat.n();
  const Index slots = arm_slots(lat);
  const RootVec a = radical_a(lat);
  const GroupElem c = coxeter_element(lat);
  const RatMatrix B = to_rational(lat.B());
  const bool tubular = classify(lat.symbol()).cls == SymbolClass::Tubular;
  std::optional<HyperbolicModel> model;
  HypElem c_tilde;
  if (tubular) {
    model = build_hyperbolic(lat);
    c_tilde = hyp_coxeter(*model);
  }

  // Valid shifts per arm slot, then all arm shift vectors.
  std::vector<std::vector<int>> slot_values(static_cast<std::size_t>(slots));
  for (Index idx = 0; idx < slots; ++idx)
    for (int k = -kmax; k <= kmax; ++k)
      if (is_pseudo_root(lat, RootVec(lat.simple(idx) + k * a))) slot_values[idx].push_back(k);
  double combinations = 1;
  for (const auto& v : slot_values) combinations *= static_cast<double>(v.size());
  if (combinations > 2e5)
    throw Error(ErrorKind::PreconditionViolated, "shift grid too large for this symbol");
  std::vector<std::vector<Integer>> arm_ks{{}};
  for (Index idx = 0; idx < slots; ++idx) {
    std::vector<std::vector<Integer>> next;
    for (const auto& prefix : arm_ks)
      for (int k : slot_values[idx]) {
        auto v = prefix;
        v.push_back(k);
        next.push_back(std::move(v));
      }
    arm_ks = std::move(next);
  }

  // Arm-side keys: the condition residue and A⁻¹c for the arm product A.
  std::unordered_map<RatVector, std::vector<std::size_t>, DenseHash, DenseEqual> by_condition;
  std::unordered_map<IntMatrix, std::vector<std::size_t>, DenseHash, DenseEqual> by_product;
  for (std::size_t i = 0; i < arm_ks.size(); ++i) {
    auto ks = arm_ks[i];
    ks.resize(static_cast<std::size_t>(n), 0);
    by_condition[arm_condition_key(lat, ks)].push_back(i);
    GroupElem inv = identity<Integer>(n);
    for (Index idx = slots - 1; idx >= 0; --idx)
      inv = (inv * reflection(lat, RootVec(lat.simple(idx) + arm_ks[i][idx] * a))).eval();
    by_product[(inv * c).eval()].push_back(i);
  }

  const auto betas = quotient_roots(lat, beta_depth);
  r.betas = betas.size();

  using Key = std::tuple<std::size_t, std::size_t, int, int>;  // β, arm shifts, k, k′
  std::set<Key> condition_hits, product_hits;
  std::vector<std::vector<int>> beta_values(betas.size());
  for (std::size_t b = 0; b < betas.size(); ++b) {
    for (int k = -kmax; k <= kmax; ++k)
      if (is_pseudo_root(lat, RootVec(betas[b] + k * a))) beta_values[b].push_back(k);
    r.tuples += arm_ks.size() * beta_values[b].size() * beta_values[b].size();
  }
  struct BetaHits {
    std::vector<Key> condition, product;
  };
  std::vector<std::size_t> order(betas.size());
  for (std::size_t b = 0; b < betas.size(); ++b) order[b] = b;
  const auto hits = parallel_map(order, [&](std::size_t b) {
    BetaHits h;
    const RatVector bsharp = B * sharp(lat, to_rational(betas[b]));
    for (int k : beta_values[b])
      for (int k2 : beta_values[b]) {
        auto it = by_condition.find(RatVector(Rational(k2 - k) * bsharp));
        if (it != by_condition.end())
          for (auto i : it->second) h.condition.emplace_back(b, i, k, k2);
        const GroupElem pair = reflection(lat, RootVec(betas[b] + k * a)) * reflection(lat, RootVec(betas[b] + k2 * a));
        auto jt = by_product.find(pair);
        if (jt != by_product.end())
          for (auto i : jt->second) h.product.emplace_back(b, i, k, k2);
      }
    return h;
  });
  for (const auto& h : hits) {
    condition_hits.insert(h.condition.begin(), h.condition.end());
    product_hits.insert(h.product.begin(), h.product.end());
  }
  r.condition_true = condition_hits.size();
  r.product_true = product_hits.size();

  auto tuple_of = [&](const Key& key) {
    const auto& [b, i, k, k2] = key;
    ShiftedTuple st{betas[b], arm_ks[i]};
    st.ks.push_back(k);
    st.ks.push_back(k2);
    return st;
  };
  for (const auto& key : condition_hits)
    if (!product_hits.count(key)) {
      ++r.mismatches;
      r.failures.push_back("condition without product: " + describe_tuple(tuple_of(key)));
    }
  for (const auto& key : product_hits)
    if (!condition_hits.count(key)) {
      ++r.mismatches;
      r.failures.push_back("product without condition: " + describe_tuple(tuple_of(key)));
    }

  // Direct replay of every solution plus a random sample of the grid.
  std::vector<Key> direct(product_hits.begin(), product_hits.end());
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> nonempty;
  for (std::size_t b = 0; b < betas.size(); ++b)
    if (!beta_values[b].empty()) nonempty.push_back(b);
  for (std::size_t s = 0; s < sample && !nonempty.empty() && !arm_ks.empty(); ++s) {
    const std::size_t b = nonempty[std::uniform_int_distribution<std::size_t>(0, nonempty.size() - 1)(rng)];
    const auto& vals = beta_values[b];
    std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
    const int k = vals[pick(rng)], k2 = vals[pick(rng)];
    direct.emplace_back(b, std::uniform_int_distribution<std::size_t>(0, arm_ks.size() - 1)(rng), k, k2);
  }
  for (const auto& key : direct) {
    const ShiftedTuple st = tuple_of(key);
    ++r.direct_checked;
    const bool is_c = build_t(lat, st) == c;
    if (is_c != factorization_condition(lat, st) || is_c != (product_hits.count(key) > 0))
      r.failures.push_back("direct evaluation disagrees: " + describe_tuple(st));
  }

  // Consequences for solutions: in W for non-tubular symbols, in W̃ otherwise.
  const RootVec alpha0 = lat.simple(lat.center0());
  const Integer norm0 = sym(lat, alpha0, alpha0);
  for (const auto& key : product_hits) {
    const ShiftedTuple st = tuple_of(key);
    const auto& [b, i, k, k2] = key;
    const RootVec& beta = betas[b];
    bool arms_zero = true;
    for (const auto& v : arm_ks[i]) arms_zero = arms_zero && v == 0;
    // With β = α_0 and k′ − k = 1 the arm shifts vanish, in W as well as
    // in W̃. For tubular W other differences k′ − k do occur (b ∈ Rad).
    if (beta == alpha0 && k2 - k == 1 && !arms_zero)
      r.failures.push_back("nonzero arm shifts for β = α_0: " + describe_tuple(st));

    if (tubular) {
      if (build_t(*model, st) != c_tilde) continue;
      ++r.hyperbolic_true;
    }
    ++r.lemma_checked;
    const Integer l0 = beta(lat.center0());
    const int dk = k2 - k;
    if (sym(lat, beta, beta) != norm0 || !((l0 == 1 && dk == 1) || (l0 == -1 && dk == -1))) {
      r.failures.push_back("expected ‖β‖ = ‖α_0‖ and λ_0 = k′−k = ±1: " + describe_tuple(st));
      continue;
    }
    const RootVec oriented = l0 == 1 ? beta : RootVec(-beta);
    try {
      kill_arms(lat, oriented);
      ++r.kill_arms_checked;
    } catch (const Error& e) {
      r.failures.push_back(std::string("arm reduction failed: ") + e.what());
    }
  }
  return r;
}

}  // namespace canonlat
