#pragma once

#include "canonlat/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace canonlat {

// A symbol (p_i; d_i; f_i | ε) with t special arms and scaling κ.
// Arms are stored 0-based here; arm k in this struct is arm k+1 in the
// usual notation.
struct Symbol {
  int t = 0;
  int epsilon = 1;
  std::vector<int> p;
  std::vector<int> d;
  std::vector<int> f;
  std::int64_t kappa = 1;

  int e(int arm) const { return d[arm] / f[arm]; }
  /// Rank of the lattice: Σ(p_i − 1) + 2.
  Index n() const;

  bool operator==(const Symbol&) const = default;
};

/// Validates and fills in κ when absent. Throws InvalidSymbol naming the
/// offending field.
Symbol make_symbol(int epsilon, std::vector<int> p, std::vector<int> d, std::vector<int> f,
                   std::optional<std::int64_t> kappa = std::nullopt);

/// Convenience for the common d = f = 1 case.
Symbol make_symbol(std::vector<int> p, int epsilon = 1);

/// Smallest κ making every κ·ε·f_i/e_i integral.
std::int64_t minimal_kappa(int epsilon, const std::vector<int>& d, const std::vector<int>& f);

Symbol parse_symbol(const std::string& json_text);
Symbol load_symbol(const std::string& path);
std::string symbol_to_json(const Symbol& s);
/// Compact human form, e.g. "(2,3,7 | 1,1,1 | 1,1,1 ; eps=1 kappa=1)".
std::string describe(const Symbol& s);

enum class SymbolClass { Domestic, Tubular, Wild };
const char* to_string(SymbolClass c);

struct ReducedSymbol {
  std::vector<int> p;
  std::vector<int> ed;
  bool operator==(const ReducedSymbol&) const = default;
};

ReducedSymbol reduce(const Symbol& s);

/// Order-insensitive key of a reduced symbol: sorted (p_i, ε·d_i) pairs.
std::vector<std::pair<int, int>> reduced_key(const ReducedSymbol& r);

struct ClassInfo {
  Index n = 0;
  Rational delta;
  SymbolClass cls = SymbolClass::Domestic;
  std::optional<std::string> dynkin_name;
};

Rational delta(const Symbol& s);
ClassInfo classify(const Symbol& s);

/// ε = 2 symbols rewritten with ε = 1 and doubled d; ε = 1 symbols unchanged.
Symbol epsilon_one_equivalent(const Symbol& s);

// ---- dictionaries between symbols and affine / elliptic types ----

enum class DictionaryTable { Affine, EllipticEps1, EllipticEps2 };

struct DictionaryEntry {
  DictionaryTable table;
  std::string name;
  Symbol symbol;  // affine families are instantiated at one parameter value
};

/// All tabulated entries: 10 affine families, 20 elliptic ε=1 and 3 elliptic
/// ε=2 symbols.
const std::vector<DictionaryEntry>& dictionary();

/// Name of the affine or elliptic type of s, when it is tabulated. Exact
/// symbols in the elliptic tables are matched first; otherwise the reduced
/// symbol decides, and only when it points to a single name.
std::optional<std::string> dynkin_name(const Symbol& s);

}  // namespace canonlat
