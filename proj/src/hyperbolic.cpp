#include "canonlat/hyperbolic.hpp"

#include <random>

namespace canonlat {

namespace {

CanonicalLattice epsilon_one_lattice(const CanonicalLattice& lat) {
  if (lat.symbol().epsilon == 1) return lat;
  return CanonicalLattice(epsilon_one_equivalent(lat.symbol()));
}

RatMatrix columns(const std::vector<RatVector>& cols, Index rows) {
  RatMatrix m(rows, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<Index>(k)) = cols[k];
  return m;
}

bool in_span(const std::vector<RatVector>& cols, const RatVector& v) {
  if (cols.empty()) return v.isZero();
  return in_column_span(columns(cols, v.size()), v);
}

// Appends to `chosen` those candidates that are independent of
// `fixed ∪ chosen`, stopping once `target` vectors are chosen in total.
void greedy_extend(const std::vector<RatVector>& fixed, std::vector<RatVector>& chosen,
                   const std::vector<RatVector>& candidates, std::size_t target) {
  for (const auto& c : candidates) {
    if (fixed.size() + chosen.size() >= target) return;
    std::vector<RatVector> all = fixed;
    all.insert(all.end(), chosen.begin(), chosen.end());
    if (!in_span(all, c)) chosen.push_back(c);
  }
}

std::vector<RatVector> column_list(const RatMatrix& m) {
  std::vector<RatVector> out;
  for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

std::vector<RatVector> unit_vectors(Index n) {
  std::vector<RatVector> out;
  for (Index k = 0; k < n; ++k) out.push_back(to_rational(unit_vector(n, k)));
  return out;
}

std::vector<RatVector> concat(std::initializer_list<const std::vector<RatVector>*> parts) {
  std::vector<RatVector> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

RatMatrix standard_block_form(const RatMatrix& restricted, Index m) {
  const Index h = restricted.rows();
  RatMatrix out = RatMatrix::Zero(h + 2 * m, h + 2 * m);
  out.topLeftCorner(h, h) = restricted;
  for (Index k = 0; k < m; ++k) {
    out(h + k, h + m + k) = 1;
    out(h + m + k, h + k) = 1;
  }
  return out;
}

// Order of s_i s_j in W, or 0 when it exceeds `bound`.
unsigned dihedral_order(const GroupElem& si, const GroupElem& sj, unsigned bound) {
  const GroupElem prod = si * sj;
  GroupElem power = prod;
  const GroupElem id = identity<Integer>(prod.rows());
  for (unsigned m = 1; m <= bound; ++m) {
    if (power == id) return m;
    power = (power * prod).eval();
  }
  return 0;
}

HypElem hyp_power(const HypElem& g, std::int64_t k) {
  if (k >= 0) return matrix_power(g, static_cast<unsigned>(k));
  return matrix_power(inverse(g), static_cast<unsigned>(-k));
}

}  // namespace

RatVector HyperbolicModel::a_prime() const {
  RatVector v = RatVector::Zero(n + 1);
  v(n) = 1;
  return v;
}

RatVector HyperbolicModel::a() const {
  RatVector v = RatVector::Zero(n + 1);
  v(n - 1) = 1;
  return v;
}

HyperbolicModel build_hyperbolic(const CanonicalLattice& input) {
  if (classify(input.symbol()).cls != SymbolClass::Tubular)
    throw Error(ErrorKind::NotTubular, "hyperbolic extension needs a tubular symbol, got " + describe(input.symbol()));
  HyperbolicModel model{epsilon_one_lattice(input), {}, 0, {}, {}};
  const CanonicalLattice& lat = model.lat;
  model.quotient = build_quotient(lat);
  const Index n = lat.n();
  model.n = n;

  const RatMatrix from = to_rational(model.quotient.from_adapted);
  model.Btilde = RatMatrix::Zero(n + 1, n + 1);
  model.Btilde.topLeftCorner(n, n) = from.transpose() * to_rational(lat.B()) * from;
  // Γ_∘ ⟂ a′, B̃(a, a′) = 1, B̃(a′, a′) = 0.
  model.Btilde(n - 1, n) = 1;
  model.Btilde(n, n - 1) = 1;

  model.inclusion = RatMatrix::Zero(n + 1, n);
  model.inclusion.topRows(n) = to_rational(model.quotient.to_adapted);

  const RatMatrix rad = nullspace(model.Btilde);
  const RadicalData data = radical(lat);
  if (rad.cols() != 1 || !(model.Btilde * (model.inclusion * *data.b)).isZero())
    throw Error(ErrorKind::AxiomViolated, "radical of the hyperbolic form is not spanned by b");
  return model;
}

HypElem hyp_reflection(const HyperbolicModel& model, const RatVector& v) {
  if (v.size() != model.dim()) throw Error(ErrorKind::DimensionMismatch, "vector has the wrong length");
  const Rational norm = model.form(v, v);
  if (norm == 0) throw Error(ErrorKind::IsotropicVector, "cannot reflect in an isotropic vector");
  const RatVector pairing = model.Btilde * v;
  return identity<Rational>(model.dim()) - (Rational(2) / norm) * v * pairing.transpose();
}

HypElem hyp_reflection(const HyperbolicModel& model, const RootVec& root_in_R) {
  if (root_in_R.size() != model.n) throw Error(ErrorKind::DimensionMismatch, "root has the wrong length");
  return hyp_reflection(model, model.lift(root_in_R));
}

RatVector expected_coxeter_image_of_a_prime(const HyperbolicModel& model) {
  const CanonicalLattice& lat = model.lat;
  const Symbol& s = lat.symbol();
  const RootVec alpha0 = lat.simple(lat.center0());
  const Rational norm = to_rational(sym(lat, alpha0, alpha0));
  RatVector sum = model.lift(alpha0) - model.a();
  for (int arm = 1; arm <= s.t; ++arm)
    for (int j = 1; j < s.p[static_cast<std::size_t>(arm - 1)]; ++j)
      sum += Rational(s.e(arm - 1)) * model.lift(lat.simple(lat.arm_index(arm, j)));
  return model.a_prime() + (Rational(2) / norm) * sum;
}

HypElem hyp_coxeter(const HyperbolicModel& model) {
  HypElem c = identity<Rational>(model.dim());
  for (Index k = 0; k < model.n; ++k) c = (c * hyp_reflection(model, model.lat.simple(k))).eval();
  if (c * model.a_prime() != expected_coxeter_image_of_a_prime(model))
    throw Error(ErrorKind::AxiomViolated, "hyperbolic Coxeter element does not act on a′ as expected");
  return c;
}

bool is_hyp_isometry(const HyperbolicModel& model, const HypElem& g) {
  return g.rows() == model.dim() && g.cols() == model.dim() && g.transpose() * model.Btilde * g == model.Btilde;
}

GroupElem project_to_W(const HyperbolicModel& model, const HypElem& g) {
  const Index n = model.n;
  if (g.rows() != n + 1 || g.cols() != n + 1) throw Error(ErrorKind::DimensionMismatch, "element has the wrong size");
  for (Index j = 0; j < n; ++j)
    if (g(n, j) != 0) throw Error(ErrorKind::NotVInvariant, "element does not preserve V");
  const RatMatrix block = g.topLeftCorner(n, n);
  const RatMatrix back =
      to_rational(model.quotient.from_adapted) * block * to_rational(model.quotient.to_adapted);
  return to_integer(back);
}

CentralExtensionReport central_extension_report(const HyperbolicModel& model, std::uint64_t seed,
                                                std::size_t samples) {
  CentralExtensionReport r;
  const CanonicalLattice& lat = model.lat;
  const Index n = model.n;
  const Index dim = model.dim();
  r.p = weight_lcm(lat.symbol());

  const HypElem c = hyp_coxeter(model);
  r.coxeter_formula = true;  // asserted inside hyp_coxeter
  r.fix_dimension = dim - fix_codim(c);

  const HypElem C = matrix_power(c, static_cast<unsigned>(r.p));
  const HypElem I = identity<Rational>(dim);
  const RatMatrix N = C - I;
  r.cp_minus_identity = N;
  r.nontrivial = !N.isZero();
  r.unipotent = (N * N).isZero();

  std::vector<HypElem> gens;
  std::vector<GroupElem> base_gens;
  for (Index k = 0; k < n; ++k) {
    gens.push_back(hyp_reflection(model, lat.simple(k)));
    base_gens.push_back(reflection(lat, lat.simple(k)));
  }
  r.commutes_with_generators = true;
  for (const auto& s : gens) r.commutes_with_generators = r.commutes_with_generators && C * s == s * C;
  r.projects_to_identity = project_to_W(model, C) == identity<Integer>(n);

  // Relators of W lifted to W̃: dihedral relations among the simple
  // reflections and the relation c^p = 1.
  std::vector<HypElem> relators;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const unsigned m = dihedral_order(base_gens[static_cast<std::size_t>(i)],
                                        base_gens[static_cast<std::size_t>(j)], 12);
      if (m == 0) continue;
      relators.push_back(matrix_power<Rational>(gens[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(j)], m));
    }
  relators.push_back(C);

  // The a′-column of N determines the exponent.
  const RatVector na = N * model.a_prime();
  Index pivot = -1;
  for (Index i = 0; i < dim && pivot < 0; ++i)
    if (na(i) != 0) pivot = i;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1), pick_rel(0, relators.size() - 1);
  std::uniform_int_distribution<int> word_len(0, 6), factors(1, 3), sign(0, 1);
  std::uniform_int_distribution<std::int64_t> extra(-2, 2);

  r.kernel_samples_ok = pivot >= 0;
  for (std::size_t sample = 0; sample < samples; ++sample) {
    HypElem w = I;
    const int count = factors(rng);
    for (int f = 0; f < count; ++f) {
      HypElem u = I, u_inv = I;
      const int len = word_len(rng);
      for (int l = 0; l < len; ++l) {
        const HypElem& s = gens[pick_gen(rng)];
        u = (u * s).eval();
        u_inv = (s * u_inv).eval();
      }
      HypElem rel = relators[pick_rel(rng)];
      if (sign(rng)) rel = inverse(rel);
      w = (w * u * rel * u_inv).eval();
    }
    w = (w * hyp_power(C, extra(rng))).eval();
    ++r.kernel_samples;

    bool ok = project_to_W(model, w) == identity<Integer>(n) && pivot >= 0;
    std::int64_t k = 0;
    if (ok) {
      const Rational ratio = (w * model.a_prime() - model.a_prime())(pivot) / na(pivot);
      ok = is_integral(ratio);
      if (ok) {
        k = numerator(ratio).convert_to<std::int64_t>();
        ok = w == I + Rational(k) * N && w == hyp_power(C, k);
      }
    }
    r.kernel_powers.push_back(k);
    r.kernel_samples_ok = r.kernel_samples_ok && ok;
  }
  return r;
}

CoxeterLengthCertificate certify_coxeter_length(const HyperbolicModel& model, std::int64_t k_range) {
  CoxeterLengthCertificate cert;
  const Index n = model.n;
  cert.n = n;
  const HypElem c = hyp_coxeter(model);
  cert.hyp_codim = fix_codim(c);
  const Rational det = determinant(c);
  cert.hyp_parity = det == 1 ? 0 : 1;
  // ℓ ≥ codim, ℓ ≡ parity mod 2, and the standard factorization has n terms.
  const bool parity_matches = (det == 1 && n % 2 == 0) || (det == -1 && n % 2 == 1);
  cert.hyperbolic_exact = cert.hyp_codim == n - 1 && parity_matches;

  const std::int64_t p = weight_lcm(model.lat.symbol());
  cert.k_range = k_range;
  cert.lifts_have_codim = true;
  for (std::int64_t k = -k_range; k <= k_range; ++k) {
    const HypElem lift = hyp_power(c, 1 + p * k);
    cert.lifts_have_codim = cert.lifts_have_codim && fix_codim(lift) == n - 1 && determinant(lift) == det;
  }
  cert.base_lower = fix_codim(coxeter_element(model.lat));
  cert.base_exact = cert.hyperbolic_exact && cert.lifts_have_codim;
  return cert;
}

GenericExtension extend_generic(const RatMatrix& B_in, const std::vector<RatVector>& G_basis) {
  const Index d = B_in.rows();
  if (B_in.cols() != d || B_in != B_in.transpose())
    throw Error(ErrorKind::DimensionMismatch, "form must be square and symmetric");
  for (const auto& g : G_basis) {
    if (g.size() != d) throw Error(ErrorKind::DimensionMismatch, "subspace vector has the wrong length");
    if (!(B_in * g).isZero()) throw Error(ErrorKind::NotInRadical, "subspace vector is not in the radical");
  }
  std::vector<RatVector> G, H, rest;
  greedy_extend({}, G, G_basis, static_cast<std::size_t>(d));
  // H complements G in the radical; the units complete G to H′ with H′ ⊕ H = V.
  greedy_extend(G, H, column_list(nullspace(B_in)), static_cast<std::size_t>(d));
  const auto GH = concat({&G, &H});
  greedy_extend(GH, rest, unit_vectors(d), static_cast<std::size_t>(d));
  const Index m = static_cast<Index>(H.size());

  const RatMatrix P = columns(concat({&G, &rest, &H}), d);
  GenericExtension ext;
  ext.inner_dim = d;
  ext.B_in = B_in;
  ext.G_basis = G;
  ext.ext_dim = d + m;
  ext.B_ext = RatMatrix::Zero(d + m, d + m);
  ext.B_ext.topLeftCorner(d, d) = P.transpose() * B_in * P;
  for (Index k = 0; k < m; ++k) {
    ext.B_ext(d - m + k, d + k) = 1;
    ext.B_ext(d + k, d - m + k) = 1;
  }
  ext.inclusion = RatMatrix::Zero(d + m, d);
  ext.inclusion.topRows(d) = inverse(P);

  if (!extension_invariants_hold(ext))
    throw Error(ErrorKind::AxiomViolated, "constructed extension violates its invariants");
  // Run the completion once so the block form is certified in this basis.
  realize_duals(ext, P, m);
  return ext;
}

GenericExtension as_generic_extension(const HyperbolicModel& model) {
  GenericExtension ext;
  ext.inner_dim = model.n;
  ext.B_in = to_rational(model.lat.B());
  ext.G_basis = {*radical(model.lat).b};
  ext.ext_dim = model.dim();
  ext.B_ext = model.Btilde;
  ext.inclusion = model.inclusion;
  return ext;
}

bool extension_invariants_hold(const GenericExtension& ext) {
  if (ext.inclusion.transpose() * ext.B_ext * ext.inclusion != ext.B_in) return false;
  const RatMatrix rad = nullspace(ext.B_ext);
  if (rad.cols() != static_cast<Index>(ext.G_basis.size())) return false;
  for (const auto& g : ext.G_basis)
    if (!(ext.B_ext * (ext.inclusion * g)).isZero()) return false;
  return rank(ext.inclusion) == ext.inner_dim;
}

RatMatrix gram_in_basis(const GenericExtension& ext, const RatMatrix& basis, const RatMatrix& duals) {
  RatMatrix M(ext.ext_dim, basis.cols() + duals.cols());
  M << ext.inclusion * basis, duals;
  return M.transpose() * ext.B_ext * M;
}

RatMatrix realize_duals(const GenericExtension& ext, const RatMatrix& basis, Index m) {
  const Index n = ext.inner_dim;
  if (basis.rows() != n || basis.cols() != n || rank(basis) != n)
    throw Error(ErrorKind::PreconditionViolated, "expected a basis of V");
  if (ext.ext_dim != n + m) throw Error(ErrorKind::DimensionMismatch, "extension has the wrong dimension");
  const Index h = n - m;
  for (Index k = h; k < n; ++k)
    if (!(ext.B_in * basis.col(k)).isZero())
      throw Error(ErrorKind::PreconditionViolated, "trailing basis vectors must lie in the radical");
  const RatMatrix head = basis.leftCols(h);
  for (const auto& g : ext.G_basis)
    if (h == 0 ? !g.isZero() : !in_column_span(head, g))
      throw Error(ErrorKind::PreconditionViolated, "G must lie in the span of the leading basis vectors");

  const RatMatrix& Bt = ext.B_ext;
  const RatMatrix V = ext.inclusion * basis;
  auto form = [&](const RatVector& x, const RatVector& y) { return Rational(x.dot(Bt * y)); };

  // Orthogonal basis of H′ (rational congruence diagonalization).
  const RatMatrix restricted = basis.leftCols(h).transpose() * ext.B_in * basis.leftCols(h);
  const auto diag = congruence_diagonalize(restricted);
  const RatMatrix orth = V.leftCols(h) * diag.transform;

  RatMatrix duals(ext.ext_dim, m);
  for (Index j = 0; j < m; ++j) {
    const RatVector vj = V.col(h + j);
    // v4: any vector pairing as δ_jk with the radical complement.
    RatMatrix system(m, ext.ext_dim);
    RatVector rhs = RatVector::Zero(m);
    for (Index k = 0; k < m; ++k) system.row(k) = (Bt * V.col(h + k)).transpose();
    rhs(j) = 1;
    const auto v4 = solve(system, rhs);
    if (!v4) throw Error(ErrorKind::AxiomViolated, "radical complement is degenerate in the extension");

    // v3: orthogonal to H′ and to the duals already chosen.
    RatVector v3 = *v4;
    for (Index i = 0; i < h; ++i)
      if (diag.diagonal(i) != 0) v3 -= (form(orth.col(i), *v4) / diag.diagonal(i)) * orth.col(i);
    for (Index k = 0; k < j; ++k) v3 -= form(v3, duals.col(k)) * V.col(h + k);

    // v2: isotropic.
    const Rational pair = form(vj, v3);
    if (pair == 0) throw Error(ErrorKind::AxiomViolated, "completion vector does not pair with its radical vector");
    const RatVector v2 = v3 - (form(v3, v3) / (2 * pair)) * vj;
    duals.col(j) = v2 / form(vj, v2);
  }

  if (gram_in_basis(ext, basis, duals) != standard_block_form(restricted, m))
    throw Error(ErrorKind::AxiomViolated, "completed basis does not have the block Gram form");
  return duals;
}

RatMatrix extension_mono(const GenericExtension& ext_G, const GenericExtension& ext_H) {
  const Index n = ext_G.inner_dim;
  if (ext_H.inner_dim != n || ext_G.B_in != ext_H.B_in)
    throw Error(ErrorKind::DimensionMismatch, "extensions of different spaces");
  for (const auto& v : ext_H.G_basis)
    if (!in_span(ext_G.G_basis, v)) throw Error(ErrorKind::NotNested, "H is not contained in G");

  // Basis (H, rest, D, C): H ⊕ D = G and G ⊕ C = Rad.
  std::vector<RatVector> H, D, C, rest;
  greedy_extend({}, H, ext_H.G_basis, static_cast<std::size_t>(n));
  greedy_extend(H, D, ext_G.G_basis, static_cast<std::size_t>(n));
  const auto HD = concat({&H, &D});
  greedy_extend(HD, C, column_list(nullspace(ext_G.B_in)), static_cast<std::size_t>(n));
  const auto HDC = concat({&H, &D, &C});
  greedy_extend(HDC, rest, unit_vectors(n), static_cast<std::size_t>(n));
  const RatMatrix basis = columns(concat({&H, &rest, &D, &C}), n);
  const Index s = static_cast<Index>(C.size()), t = static_cast<Index>(D.size() + C.size());
  if (ext_G.ext_dim != n + s || ext_H.ext_dim != n + t)
    throw Error(ErrorKind::PreconditionViolated, "extension dimensions do not match their subspaces");

  const RatMatrix duals_G = realize_duals(ext_G, basis, s);
  const RatMatrix duals_H = realize_duals(ext_H, basis, t);
  RatMatrix source(n + s, n + s), target(n + t, n + s);
  source << ext_G.inclusion * basis, duals_G;
  target << ext_H.inclusion * basis, duals_H.rightCols(s);
  const RatMatrix phi = target * inverse(source);

  if (rank(phi) != n + s) throw Error(ErrorKind::AxiomViolated, "φ is not injective");
  if (phi.transpose() * ext_H.B_ext * phi != ext_G.B_ext) throw Error(ErrorKind::AxiomViolated, "φ is not isometric");
  if (phi * ext_G.inclusion != ext_H.inclusion) throw Error(ErrorKind::AxiomViolated, "φ does not commute with ι");
  return phi;
}

}  // namespace canonlat
