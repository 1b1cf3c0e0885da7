#pragma once

#include "canonlat/braid.hpp"
#include "canonlat/hyperbolic.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace canonlat {

// ---- abstract exceptional data ----

using ElemKey = std::string;
using KeyTuple = std::vector<ElemKey>;

// E_n is listed explicitly; E_r is derived as the set of length-r prefixes.
// μ is applied to prefixes of length 1..n and returns an opaque key of A_r.
struct ExceptionalDatum {
  int n = 0;
  std::vector<KeyTuple> top;
  std::function<std::string(const KeyTuple&)> mu;
  // Set when `top` is a truncation of an infinite set: the "⇐" half of the
  // extension axiom can then only be checked on explored tuples.
  bool truncated = false;
};

struct DatumPoset {
  std::vector<std::pair<int, std::string>> elements;  // (r, μ_r value), sorted
  std::vector<std::vector<bool>> leq;
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool transitivity_unverifiable = false;  // failures only seen on a truncation
};

struct DatumReport {
  bool c1 = false;
  bool c2 = false;
  std::size_t pairs_checked = 0;
  std::size_t unverifiable = 0;  // "⇐" cases pointing outside a truncation
  std::vector<std::string> violations;
  DatumPoset poset;

  bool ok() const {
    return c1 && c2 && poset.reflexive && poset.antisymmetric && (poset.transitive || poset.transitivity_unverifiable);
  }
};

/// Checks (C1) and (C2) exhaustively and builds ≤_μ. Never throws on a
/// violation; see require_datum.
DatumReport check_datum(const ExceptionalDatum& datum);
/// Like check_datum, but throws AxiomViolated naming the first counterexample.
DatumReport require_datum(const ExceptionalDatum& datum);

/// E_r for r = 0..n, each sorted.
std::vector<std::vector<KeyTuple>> prefix_sets(const ExceptionalDatum& datum);

struct ThetaReport {
  bool rho_injective = false;
  bool equivariant = false;      // ρ_n commutes with the group action on every explored tuple
  bool images_match = false;     // ρ_n(E_n) = F_n on the explored sets
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool order_preserving = false;
  std::size_t size = 0;          // |A|
  std::vector<std::string> problems;

  bool ok() const {
    return rho_injective && equivariant && images_match && well_defined && injective && surjective &&
           order_preserving;
  }
};

// Group action on n-tuples, generator by generator.
using TupleAction = std::function<KeyTuple(const KeyTuple&, int i, int dir)>;

/// Builds θ_r(μ_r(e)) = ν_r(ρ_r(e)) and checks it is a well-defined,
/// bijective, order-preserving map A → B. `theta` receives the map.
ThetaReport check_theta(const ExceptionalDatum& E, const ExceptionalDatum& F,
                        const std::function<ElemKey(const ElemKey&)>& rho, const TupleAction& act_E,
                        const TupleAction& act_F, std::map<std::pair<int, std::string>, std::string>* theta = nullptr);

/// Synthetic fixture: E = {1,2,3}, E_2 = {(1,2),(2,3),(3,1)}, μ_1 the first
/// entry, μ_2 constant.
ExceptionalDatum synthetic_datum();
/// Same tuples with μ_1 identifying 1 and 2, which cannot be swapped.
ExceptionalDatum violating_datum();

// ---- non-crossing partitions of the lattice ----

struct NCElement {
  RatMatrix elem;   // integral for W, rational for W̃
  Index length = 0;
};

struct Poset {
  std::vector<NCElement> elements;  // sorted by length, then entries
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  bool antisymmetric = false;
  bool transitive = false;
  bool graded = false;           // every cover raises the length by one
  bool grading_consistent = false;  // each element has a single prefix length
  bool truncated = false;
  Index depth = 0;
};

/// Prefix products of every factorization in the Hurwitz orbit of `start`
/// up to `depth`, ordered by u ≤ v iff u and v are prefix products of one
/// explored factorization at positions r ≤ s. With a model, products are
/// taken in W̃.
Poset nc_enumerate(const CanonicalLattice& lat, const Factorization& start, Index depth, std::size_t cap,
                   const HyperbolicModel* model = nullptr);

/// Product of the reflections of the entries. Throws NotExceptional.
GroupElem cox_map(const CanonicalLattice& lat, const ExcSequence& seq);

/// Eight hex digits identifying an element.
std::string short_hash(const RatMatrix& m);

std::string poset_dot(const Poset& poset);
std::string poset_json(const Poset& poset);

// ---- lattice-level data ----

std::string root_key(const RootVec& v);
RootVec parse_root_key(const std::string& key);

/// E-side: the braid orbit of the standard sequence on roots up to sign, μ_r = the spanned
/// sublattice in Hermite normal form.
ExceptionalDatum lattice_sequence_datum(const CanonicalLattice& lat, Index depth, std::size_t cap = 200000);
/// F-side: the Hurwitz orbit of the standard factorization, ν_r = product.
ExceptionalDatum lattice_factorization_datum(const CanonicalLattice& lat, Index depth, std::size_t cap = 200000);

struct LatticeThetaReport {
  DatumReport e_side, f_side;
  ThetaReport theta;
  std::size_t cox_checked = 0;
  bool cox_commutes = false;  // θ(μ_r(e)) = cox_map(e) for every explored prefix
  std::vector<std::string> problems;

  bool ok() const { return e_side.ok() && f_side.ok() && theta.ok() && cox_commutes; }
};

LatticeThetaReport lattice_theta_check(const CanonicalLattice& lat, Index depth, std::size_t cap = 200000);

}  // namespace canonlat
