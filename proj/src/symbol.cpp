#include "canonlat/symbol.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace canonlat {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidSymbol, field + ": " + why);
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Index Symbol::n() const {
  Index n = 2;
  for (int pi : p) n += pi - 1;
  return n;
}

std::int64_t minimal_kappa(int epsilon, const std::vector<int>& d, const std::vector<int>& f) {
  std::int64_t kappa = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::int64_t e = d[i] / f[i];
    const std::int64_t need = e / std::gcd(e, static_cast<std::int64_t>(epsilon) * f[i]);
    kappa = std::lcm(kappa, need);
  }
  return kappa;
}

Symbol make_symbol(int epsilon, std::vector<int> p, std::vector<int> d, std::vector<int> f,
                   std::optional<std::int64_t> kappa) {
  const std::size_t t = p.size();
  if (t == 0) invalid("t", "at least one special arm is required");
  if (d.size() != t) invalid("d", "length must equal t");
  if (f.size() != t) invalid("f", "length must equal t");
  if (epsilon != 1 && epsilon != 2) invalid("epsilon", "must be 1 or 2, got " + std::to_string(epsilon));
  for (std::size_t i = 0; i < t; ++i) {
    const std::string at = "[" + std::to_string(i) + "]";
    if (p[i] < 2) invalid("p" + at, "weights must be >= 2");
    if (d[i] < 1) invalid("d" + at, "must be positive");
    if (f[i] < 1) invalid("f" + at, "must be positive");
    if (d[i] % f[i] != 0) invalid("f" + at, "f must divide d");
  }
  Symbol s;
  s.t = static_cast<int>(t);
  s.epsilon = epsilon;
  s.p = std::move(p);
  s.d = std::move(d);
  s.f = std::move(f);
  s.kappa = kappa.value_or(minimal_kappa(epsilon, s.d, s.f));
  if (s.kappa < 1) invalid("kappa", "must be positive");
  for (int i = 0; i < s.t; ++i)
    if ((s.kappa * epsilon * s.f[i]) % s.e(i) != 0)
      invalid("kappa", "kappa*epsilon*f_i/e_i is not integral for arm " + std::to_string(i));
  return s;
}

Symbol make_symbol(std::vector<int> p, int epsilon) {
  std::vector<int> ones(p.size(), 1);
  return make_symbol(epsilon, std::move(p), ones, ones);
}

Symbol parse_symbol(const std::string& json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("symbol JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::MalformedInput, "symbol JSON must be an object");

  auto integer_field = [&](const char* key) -> std::int64_t {
    if (!doc.contains(key)) throw Error(ErrorKind::MalformedInput, std::string("missing field ") + key);
    if (!doc[key].is_number_integer())
      throw Error(ErrorKind::MalformedInput, std::string(key) + ": expected an integer");
    return doc[key].get<std::int64_t>();
  };
  auto array_field = [&](const char* key) {
    if (!doc.contains(key)) throw Error(ErrorKind::MalformedInput, std::string("missing field ") + key);
    if (!doc[key].is_array()) throw Error(ErrorKind::MalformedInput, std::string(key) + ": expected an array");
    std::vector<int> out;
    for (const auto& x : doc[key]) {
      if (!x.is_number_integer())
        throw Error(ErrorKind::MalformedInput, std::string(key) + ": entries must be integers");
      out.push_back(x.get<int>());
    }
    return out;
  };

  const std::int64_t t = integer_field("t");
  const std::int64_t epsilon = integer_field("epsilon");
  auto p = array_field("p");
  auto d = array_field("d");
  auto f = array_field("f");
  if (t < 1) invalid("t", "must be positive");
  if (static_cast<std::int64_t>(p.size()) != t) invalid("p", "length must equal t");
  std::optional<std::int64_t> kappa;
  if (doc.contains("kappa")) kappa = integer_field("kappa");
  if (epsilon != 1 && epsilon != 2) invalid("epsilon", "must be 1 or 2, got " + std::to_string(epsilon));
  return make_symbol(static_cast<int>(epsilon), std::move(p), std::move(d), std::move(f), kappa);
}

Symbol load_symbol(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_symbol(buf.str());
}

std::string symbol_to_json(const Symbol& s) {
  nlohmann::ordered_json doc;
  doc["t"] = s.t;
  doc["epsilon"] = s.epsilon;
  doc["p"] = s.p;
  doc["d"] = s.d;
  doc["f"] = s.f;
  doc["kappa"] = s.kappa;
  return doc.dump();
}

std::string describe(const Symbol& s) {
  return "(" + join(s.p) + " | " + join(s.d) + " | " + join(s.f) + " ; eps=" + std::to_string(s.epsilon) +
         " kappa=" + std::to_string(s.kappa) + ")";
}

const char* to_string(SymbolClass c) {
  switch (c) {
    case SymbolClass::Domestic: return "Domestic";
    case SymbolClass::Tubular: return "Tubular";
    case SymbolClass::Wild: return "Wild";
  }
  return "?";
}

ReducedSymbol reduce(const Symbol& s) {
  ReducedSymbol r{s.p, {}};
  for (int di : s.d) r.ed.push_back(s.epsilon * di);
  return r;
}

std::vector<std::pair<int, int>> reduced_key(const ReducedSymbol& r) {
  std::vector<std::pair<int, int>> key;
  for (std::size_t i = 0; i < r.p.size(); ++i) key.emplace_back(r.p[i], r.ed[i]);
  std::sort(key.begin(), key.end());
  return key;
}

Rational delta(const Symbol& s) {
  Rational sum = 0;
  for (int i = 0; i < s.t; ++i) sum += Rational(s.epsilon * s.d[i]) * (Rational(1) - Rational(1, s.p[i]));
  return sum - 2;
}

ClassInfo classify(const Symbol& s) {
  ClassInfo info;
  info.n = s.n();
  info.delta = delta(s);
  info.cls = info.delta < 0 ? SymbolClass::Domestic : info.delta == 0 ? SymbolClass::Tubular : SymbolClass::Wild;
  info.dynkin_name = dynkin_name(s);
  return info;
}

Symbol epsilon_one_equivalent(const Symbol& s) {
  if (s.epsilon == 1) return s;
  std::vector<int> d2;
  for (int di : s.d) d2.push_back(2 * di);
  return make_symbol(1, s.p, d2, s.f);
}

// ---------------------------------------------------------------------------

namespace {

// Affine families, recognized from the sorted (p, ε·d) pairs.
std::optional<std::string> affine_name(const std::vector<std::pair<int, int>>& key) {
  auto all_ed_one = std::all_of(key.begin(), key.end(), [](auto& a) { return a.second == 1; });
  const auto n = [](int k) { return std::to_string(k); };
  switch (key.size()) {
    case 1: {
      auto [p, ed] = key[0];
      if (ed == 1) return "A~" + n(p);
      if (ed == 2) return "C~" + n(p);
      if (p == 2 && ed == 3) return std::string("G~2");
      return std::nullopt;
    }
    case 2: {
      if (all_ed_one) return "A~" + n(key[0].first + key[1].first - 1);
      // one arm (2 | 2), the other (p | 1)
      for (int k = 0; k < 2; ++k) {
        const auto& a = key[k];
        const auto& b = key[1 - k];
        if (a == std::pair{2, 2} && b.second == 1) return "B~" + n(b.first + 1);
      }
      if (key[0] == std::pair{2, 1} && key[1] == std::pair{3, 2}) return std::string("F~4");
      return std::nullopt;
    }
    case 3: {
      if (!all_ed_one) return std::nullopt;
      const int p1 = key[0].first, p2 = key[1].first, p3 = key[2].first;
      if (p1 == 2 && p2 == 2) return "D~" + n(p3 + 2);
      if (p1 == 2 && p2 == 3 && p3 >= 3 && p3 <= 5) return "E~" + n(p3 + 3);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

struct EllipticRow {
  const char* name;
  int epsilon;
  std::vector<int> p, d, f;  // empty d / f rows mean all ones
};

const std::vector<EllipticRow>& elliptic_rows() {
  static const std::vector<EllipticRow> rows = {
      {"BC_1^(2,1)", 1, {2}, {4}, {}},
      {"A_1^(1,1)*", 1, {2}, {4}, {2}},
      {"BC_1^(2,4)", 1, {2}, {4}, {4}},
      {"B_2^(2,1)", 1, {2, 2}, {2, 2}, {}},
      {"BC_2^(2,2)(1)", 1, {2, 2}, {2, 2}, {2, 1}},
      {"C_2^(1,2)", 1, {2, 2}, {2, 2}, {2, 2}},
      {"G_2^(3,1)", 1, {3}, {3}, {}},
      {"G_2^(1,3)", 1, {3}, {3}, {3}},
      {"G_2^(1,1)", 1, {2, 2}, {1, 3}, {}},
      {"G_2^(3,3)", 1, {2, 2}, {1, 3}, {1, 3}},
      {"B_3^(1,1)", 1, {2, 2, 2}, {1, 1, 2}, {}},
      {"C_3^(2,2)", 1, {2, 2, 2}, {1, 1, 2}, {1, 1, 2}},
      {"F_4^(2,1)", 1, {4, 2}, {2, 1}, {}},
      {"F_4^(1,2)", 1, {4, 2}, {2, 1}, {2, 1}},
      {"F_4^(1,1)", 1, {3, 3}, {1, 2}, {}},
      {"F_4^(2,2)", 1, {3, 3}, {1, 2}, {1, 2}},
      {"D_4^(1,1)", 1, {2, 2, 2, 2}, {}, {}},
      {"E_6^(1,1)", 1, {3, 3, 3}, {}, {}},
      {"E_7^(1,1)", 1, {4, 4, 2}, {}, {}},
      {"E_8^(1,1)", 1, {6, 3, 2}, {}, {}},
      {"BC_1^(2,1)", 2, {2}, {2}, {2}},
      {"BC_1^(2,4)", 2, {2}, {2}, {}},
      {"BC_2^(2,2)(1)", 2, {2, 2}, {}, {}},
  };
  return rows;
}

Symbol instantiate(const EllipticRow& row) {
  const std::vector<int> ones(row.p.size(), 1);
  return make_symbol(row.epsilon, row.p, row.d.empty() ? ones : row.d, row.f.empty() ? ones : row.f);
}

using ExactKey = std::pair<int, std::vector<std::tuple<int, int, int>>>;

ExactKey exact_key(const Symbol& s) {
  ExactKey key{s.epsilon, {}};
  for (int i = 0; i < s.t; ++i) key.second.emplace_back(s.p[i], s.d[i], s.f[i]);
  std::sort(key.second.begin(), key.second.end());
  return key;
}

struct EllipticIndex {
  std::map<ExactKey, std::string> exact;
  std::map<std::vector<std::pair<int, int>>, std::set<std::string>> by_reduced;
};

const EllipticIndex& elliptic_index() {
  static const EllipticIndex index = [] {
    EllipticIndex idx;
    for (const auto& row : elliptic_rows()) {
      const Symbol s = instantiate(row);
      idx.exact.emplace(exact_key(s), row.name);
      idx.by_reduced[reduced_key(reduce(s))].insert(row.name);
    }
    return idx;
  }();
  return index;
}

}  // namespace

const std::vector<DictionaryEntry>& dictionary() {
  static const std::vector<DictionaryEntry> entries = [] {
    std::vector<DictionaryEntry> out;
    auto affine = [&](const char* name, std::vector<int> p, std::vector<int> d) {
      const std::vector<int> ones(p.size(), 1);
      out.push_back({DictionaryTable::Affine, name, make_symbol(1, std::move(p), d.empty() ? ones : d, ones)});
    };
    affine("A~2", {2}, {});
    affine("A~4", {2, 3}, {});
    affine("B~4", {2, 3}, {2, 1});
    affine("C~3", {3}, {2});
    affine("D~5", {2, 2, 3}, {});
    affine("E~6", {2, 3, 3}, {});
    affine("E~7", {2, 3, 4}, {});
    affine("E~8", {2, 3, 5}, {});
    affine("F~4", {2, 3}, {1, 2});
    affine("G~2", {2}, {3});
    for (const auto& row : elliptic_rows())
      out.push_back({row.epsilon == 1 ? DictionaryTable::EllipticEps1 : DictionaryTable::EllipticEps2, row.name,
                     instantiate(row)});
    return out;
  }();
  return entries;
}

std::optional<std::string> dynkin_name(const Symbol& s) {
  const auto key = reduced_key(reduce(s));
  if (auto name = affine_name(key)) return name;
  const auto& idx = elliptic_index();
  if (auto it = idx.exact.find(exact_key(s)); it != idx.exact.end()) return it->second;
  if (auto it = idx.by_reduced.find(key); it != idx.by_reduced.end() && it->second.size() == 1)
    return *it->second.begin();
  return std::nullopt;
}

}  // namespace canonlat
