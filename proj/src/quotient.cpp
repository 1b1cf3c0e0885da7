#include "canonlat/quotient.hpp"

#include <sstream>

namespace canonlat {

std::vector<DiagramEdge> diagram_edges(const IntMatrix& B, const IntMatrix& K) {
  std::vector<DiagramEdge> edges;
  for (Index i = 0; i < B.rows(); ++i)
    for (Index j = i + 1; j < B.cols(); ++j) {
      if (B(i, j) == 0) continue;
      DiagramEdge e;
      e.from = i;
      e.to = j;
      // (v_i, v_j^♯) = 2(v_i,v_j)/(v_j,v_j) = (v_i,v_j)/⟨v_j,v_j⟩
      e.lambda_from_to = -B(i, j) / K(j, j);
      e.lambda_to_from = -B(i, j) / K(i, i);
      e.dotted = B(i, j) > 0;
      edges.push_back(e);
    }
  return edges;
}

QuotientData build_quotient(const CanonicalLattice& lat) {
  QuotientData q;
  const Index n = lat.n();
  q.m = n - 1;
  q.epsilon = lat.symbol().epsilon;
  // New basis vector a = α_0* − ε·α_0.
  q.from_adapted = identity<Integer>(n);
  q.from_adapted(lat.center0(), n - 1) = -q.epsilon;
  q.to_adapted = identity<Integer>(n);
  q.to_adapted(lat.center0(), n - 1) = q.epsilon;
  q.K0 = lat.K().topLeftCorner(q.m, q.m);
  q.B0 = lat.B().topLeftCorner(q.m, q.m);
  q.diagram = diagram_edges(q.B0, q.K0);
  return q;
}

IntMatrix adapted(const QuotientData& q, const GroupElem& g) { return q.to_adapted * g * q.from_adapted; }

IntMatrix project(const QuotientData& q, const GroupElem& g) {
  const IntMatrix h = adapted(q, g);
  const Index n = q.m + 1;
  for (Index i = 0; i < q.m; ++i)
    if (h(i, n - 1) != 0) throw Error(ErrorKind::NotBlockTriangular, "element does not fix the radical vector a");
  if (h(n - 1, n - 1) != 1) throw Error(ErrorKind::NotBlockTriangular, "element does not fix the radical vector a");
  return h.topLeftCorner(q.m, q.m);
}

bool is_quotient_pseudo_root(const QuotientData& q, const RootVec& x) {
  if (x.size() != q.m) throw Error(ErrorKind::DimensionMismatch, "quotient vector has the wrong length");
  const Integer norm = x.dot(q.K0 * x);
  if (norm <= 0) return false;
  const IntVector left = q.K0.transpose() * x, right = q.K0 * x;
  for (Index k = 0; k < q.m; ++k)
    if (left(k) % norm != 0 || right(k) % norm != 0) return false;
  return true;
}

IntMatrix quotient_reflection(const QuotientData& q, const RootVec& beta0) {
  if (!is_quotient_pseudo_root(q, beta0)) throw Error(ErrorKind::NotPseudoRoot, "not a quotient pseudo-root");
  const Integer norm = beta0.dot(q.K0 * beta0);
  const IntVector pairing = q.B0 * beta0;
  IntMatrix s = identity<Integer>(q.m);
  for (Index col = 0; col < q.m; ++col) s.col(col) -= (pairing(col) / norm) * beta0;
  return s;
}

RootDecomposition decompose_root(const QuotientData& q, const RootVec& beta) {
  if (beta.size() != q.m + 1) throw Error(ErrorKind::DimensionMismatch, "root has the wrong length");
  const IntVector y = q.to_adapted * beta;
  const IntVector bar = y.head(q.m);
  std::vector<RootDecomposition> found;
  if (is_quotient_pseudo_root(q, bar)) found.push_back({1, bar, y(q.m)});
  if (q.epsilon != 1) {
    bool divisible = true;
    for (Index i = 0; i < q.m; ++i) divisible = divisible && bar(i) % q.epsilon == 0;
    if (divisible) {
      const IntVector half = bar / q.epsilon;
      if (is_quotient_pseudo_root(q, half)) found.push_back({q.epsilon, half, y(q.m)});
    }
  }
  if (found.empty()) throw Error(ErrorKind::NotDecomposable, "vector is not of the form d·β_∘ + k·a");
  if (found.size() > 1) throw Error(ErrorKind::NotDecomposable, "ambiguous decomposition");
  quotient_root_sign(q, found.front().beta0);
  return found.front();
}

RootVec recompose(const QuotientData& q, const RootDecomposition& dec) {
  IntVector y(q.m + 1);
  y.head(q.m) = dec.d * dec.beta0;
  y(q.m) = dec.k;
  return q.from_adapted * y;
}

RootSign quotient_root_sign(const QuotientData& q, const RootVec& beta0) {
  if (beta0.size() != q.m) throw Error(ErrorKind::DimensionMismatch, "quotient vector has the wrong length");
  bool pos = false, neg = false;
  for (Index i = 0; i < beta0.size(); ++i) {
    pos = pos || beta0(i) > 0;
    neg = neg || beta0(i) < 0;
  }
  if (pos && neg) throw Error(ErrorKind::MixedSigns, "quotient root has coefficients of both signs");
  if (!pos && !neg) throw Error(ErrorKind::MixedSigns, "zero vector is not a root");
  return pos ? RootSign::Positive : RootSign::Negative;
}

RootVec embed(const QuotientData& q, const RootVec& beta0) {
  RootVec out = RootVec::Zero(q.m + 1);
  out.head(q.m) = beta0;
  return out;
}

std::string diagram_dot(const CanonicalLattice& lat, bool quotient) {
  const Index size = quotient ? lat.n() - 1 : lat.n();
  const auto edges = diagram_edges(lat.B().topLeftCorner(size, size), lat.K().topLeftCorner(size, size));
  std::ostringstream os;
  os << "graph " << (quotient ? "quotient" : "canonical") << " {\n";
  for (Index k = 0; k < size; ++k) os << "  v" << k << " [label=\"" << lat.basis()[k].str() << "\"];\n";
  for (const auto& e : edges) {
    os << "  v" << e.from << " -- v" << e.to;
    std::vector<std::string> attrs;
    attrs.push_back("label=\"(" + e.lambda_from_to.str() + "," + e.lambda_to_from.str() + ")\"");
    if (e.dotted) attrs.push_back("style=dotted");
    os << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
    os << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace canonlat
