#include "canonlat/cli.hpp"

#include "canonlat/braid.hpp"
#include "canonlat/factorization_lab.hpp"
#include "canonlat/hyperbolic.hpp"
#include "canonlat/ncposet.hpp"
#include "canonlat/quotient.hpp"
#include "canonlat/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace canonlat::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename S>
std::string entry(const S& x) {
  if constexpr (std::is_same_v<S, Rational>)
    return format_rational(x);
  else
    return x.str();
}

template <typename S>
void write_tsv(std::ostream& out, const Matrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << (j ? "\t" : "") << entry(m(i, j));
    out << "\n";
  }
}

template <typename S>
ordered_json matrix_json(const Matrix<S>& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json vector_json(const RootVec& v) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

std::string vector_tsv(const RootVec& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) s += (i ? "\t" : "") + v(i).str();
  return s;
}

std::string pick_format(const Config& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw Error(ErrorKind::MalformedInput, "unsupported --format " + fmt);
}

Index depth_or(const Config& cfg, Index fallback) { return cfg.depth >= 0 ? static_cast<Index>(cfg.depth) : fallback; }

// ---- subcommands ----

int cmd_classify(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  const ClassInfo info = classify(lat.symbol());
  const std::string fmt = pick_format(cfg, "text");
  require_format(fmt, {"text", "json"});
  if (fmt == "json") {
    ordered_json j;
    j["n"] = info.n;
    j["delta"] = format_rational(info.delta);
    j["class"] = to_string(info.cls);
    j["name"] = info.dynkin_name ? ordered_json(*info.dynkin_name) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "n=" << info.n << " delta=" << format_rational(info.delta) << " class=" << to_string(info.cls);
    if (info.dynkin_name) out << " name=" << *info.dynkin_name;
    out << "\n";
  }
  return Ok;
}

int cmd_gram(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "tsv");
  require_format(fmt, {"tsv", "json"});
  IntMatrix K = lat.K(), B = lat.B();
  if (cfg.quotient) {
    const QuotientData q = build_quotient(lat);
    K = q.K0;
    B = q.B0;
  }
  if (fmt == "json") {
    ordered_json j;
    j["K"] = matrix_json(K);
    j["B"] = matrix_json(B);
    out << j.dump(2) << "\n";
  } else {
    out << "# K\n";
    write_tsv(out, K);
    out << "# B\n";
    write_tsv(out, B);
  }
  return Ok;
}

int cmd_roots(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "tsv");
  require_format(fmt, {"tsv", "json"});
  const Index depth = depth_or(cfg, 3);
  std::vector<RootVec> roots;
  std::vector<Index> depths;
  bool truncated = false;
  if (cfg.quotient) {
    roots = quotient_roots(lat, depth, static_cast<std::size_t>(cfg.cap));
  } else {
    RootEnumeration e = roots_up_to_depth(lat, depth, static_cast<std::size_t>(cfg.cap));
    roots = std::move(e.roots);
    depths = std::move(e.depth);
    truncated = e.truncated;
  }
  if (fmt == "json") {
    ordered_json j;
    j["count"] = roots.size();
    j["truncated"] = truncated;
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      ordered_json r;
      if (!depths.empty()) r["depth"] = depths[i];
      r["root"] = vector_json(roots[i]);
      list.push_back(r);
    }
    j["roots"] = list;
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!depths.empty()) out << depths[i] << "\t";
      out << vector_tsv(roots[i]) << "\n";
    }
    if (truncated) out << "# truncated at cap\n";
  }
  return Ok;
}

int cmd_coxeter(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "json");
  require_format(fmt, {"tsv", "json"});
  if (cfg.hyperbolic) {
    const HyperbolicModel model = build_hyperbolic(lat);
    const HypElem ct = hyp_coxeter(model);
    if (fmt == "tsv") {
      write_tsv(out, ct);
      return Ok;
    }
    const CoxeterLengthCertificate cert = certify_coxeter_length(model);
    ordered_json j;
    j["matrix"] = matrix_json(ct);
    j["hyp_codim"] = cert.hyp_codim;
    j["hyp_parity"] = cert.hyp_parity;
    j["length_hyperbolic"] = cert.hyperbolic_exact ? ordered_json(cert.n) : ordered_json(nullptr);
    j["lifts_checked_k"] = cert.k_range;
    j["lifts_have_codim"] = cert.lifts_have_codim;
    j["length_base"] = cert.base_exact ? ordered_json(cert.n) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
    return cert.hyperbolic_exact && cert.base_exact ? Ok : VerificationFailed;
  }
  const GroupElem c = coxeter_element(lat);
  if (fmt == "tsv") {
    write_tsv(out, c);
    return Ok;
  }
  const Index codim = fix_codim(c);
  const int parity = determinant(c) == 1 ? 0 : 1;
  ordered_json j;
  j["matrix"] = matrix_json(c);
  j["char_poly"] = poly_to_string(char_poly(c));
  j["expected_char_poly"] = poly_to_string(expected_coxeter_char_poly(lat.symbol()));
  j["fix_codim"] = codim;
  j["parity"] = parity;
  const Index lower = codim + ((codim % 2) != parity ? 1 : 0);
  j["length_lower"] = lower;
  j["length_upper"] = lat.n();
  out << j.dump(2) << "\n";
  return Ok;
}

int cmd_hurwitz(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "json");
  require_format(fmt, {"tsv", "json"});
  const OrbitResult orbit =
      hurwitz_orbit(lat, standard_factorization(lat), depth_or(cfg, 3), static_cast<std::size_t>(cfg.cap));
  if (fmt == "tsv") {
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      out << orbit.depth[i];
      for (const auto& r : orbit.members[i]) out << "\t" << vector_tsv(r);
      out << "\n";
    }
    return Ok;
  }
  ordered_json j;
  j["size"] = orbit.report.size;
  j["depth_reached"] = orbit.report.depth_reached;
  j["closed"] = orbit.report.closed;
  j["truncated"] = orbit.report.truncated;
  if (cfg.dump) {
    ordered_json members = ordered_json::array();
    for (const auto& m : orbit.members) {
      ordered_json tuple = ordered_json::array();
      for (const auto& r : m) tuple.push_back(vector_json(r));
      members.push_back(tuple);
    }
    j["members"] = members;
  }
  out << j.dump(2) << "\n";
  return Ok;
}

int cmd_dynkin(const Config&, const CanonicalLattice& lat, std::ostream& out, bool quotient) {
  out << diagram_dot(lat, quotient);
  return Ok;
}

int cmd_hyperbolic(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  const HyperbolicModel model = build_hyperbolic(lat);
  const std::string fmt = pick_format(cfg, "json");
  require_format(fmt, {"tsv", "json"});
  if (fmt == "tsv") {
    write_tsv(out, model.Btilde);
    return Ok;
  }
  const CentralExtensionReport r = central_extension_report(model, cfg.seed);
  ordered_json j;
  j["dim"] = model.dim();
  j["Btilde"] = matrix_json(model.Btilde);
  j["p"] = r.p;
  j["commutes_with_generators"] = r.commutes_with_generators;
  j["nontrivial"] = r.nontrivial;
  j["projects_to_identity"] = r.projects_to_identity;
  j["kernel_samples"] = r.kernel_samples;
  j["kernel_samples_ok"] = r.kernel_samples_ok;
  j["fix_dimension"] = r.fix_dimension;
  j["unipotent"] = r.unipotent;
  j["coxeter_formula"] = r.coxeter_formula;
  if (cfg.dump) j["cp_minus_identity"] = matrix_json(r.cp_minus_identity);
  j["ok"] = r.all_pass();
  out << j.dump(2) << "\n";
  return r.all_pass() ? Ok : VerificationFailed;
}

int cmd_ncposet(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "dot");
  require_format(fmt, {"dot", "json"});
  std::optional<HyperbolicModel> model;
  if (cfg.hyperbolic) model = build_hyperbolic(lat);
  const CanonicalLattice& base = model ? model->lat : lat;
  const Poset p = nc_enumerate(base, standard_factorization(base), depth_or(cfg, 3),
                               static_cast<std::size_t>(cfg.cap), model ? &*model : nullptr);
  out << (fmt == "dot" ? poset_dot(p) : poset_json(p));
  return Ok;
}

int cmd_verify(const Config& cfg, const CanonicalLattice& lat, std::ostream& out) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.cap = static_cast<std::size_t>(cfg.cap);
  if (cfg.depth >= 0) opts.orbit_depth = static_cast<Index>(cfg.depth);
  const VerifyReport rep = run_verify(lat, cfg.suite, opts);
  const std::string json = rep.to_json();
  out << json;
  if (!cfg.report.empty()) {
    std::ofstream f(cfg.report);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + cfg.report);
    f << json;
  }
  return rep.ok() ? Ok : VerificationFailed;
}

bool input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput:
    case ErrorKind::InvalidSymbol:
    case ErrorKind::Io:
    case ErrorKind::NotTubular:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DimensionMismatch:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> commands = {"classify", "gram",       "roots",   "coxeter", "hurwitz",
                                                    "dynkin",   "hyperbolic", "ncposet", "verify"};
  CLI::App app{"Reflection groups of canonical type"};
  app.name("canonlat");
  Config cfg;
  app.add_option("command", cfg.command, "subcommand")->required()->check(CLI::IsMember(commands));
  app.add_option("symbol", cfg.input, "symbol JSON file")->required();
  app.add_option("--depth", cfg.depth, "orbit / root search depth")->check(CLI::NonNegativeNumber);
  app.add_option("--cap", cfg.cap, "cap on enumerated objects")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "text|json|tsv|dot, per command");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--suite", cfg.suite, "verify suite")->check(CLI::IsMember([] {
    std::vector<std::string> s = suite_names();
    s.push_back("all");
    return s;
  }()));
  app.add_flag("--quotient", cfg.quotient, "work in the quotient group W_o");
  app.add_flag("--hyperbolic", cfg.hyperbolic, "work in the hyperbolic extension");
  app.add_option("--report", cfg.report, "also write the JSON report to this path");
  app.add_flag("--dump", cfg.dump, "include full member lists");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "canonlat: " << e.what() << "\n" << app.help();
    return InputError;
  }

  try {
    const CanonicalLattice lat(load_symbol(cfg.input));
    if (cfg.command == "classify") return cmd_classify(cfg, lat, out);
    if (cfg.command == "gram") return cmd_gram(cfg, lat, out);
    if (cfg.command == "roots") return cmd_roots(cfg, lat, out);
    if (cfg.command == "coxeter") return cmd_coxeter(cfg, lat, out);
    if (cfg.command == "hurwitz") return cmd_hurwitz(cfg, lat, out);
    if (cfg.command == "dynkin") return cmd_dynkin(cfg, lat, out, cfg.quotient);
    if (cfg.command == "hyperbolic") return cmd_hyperbolic(cfg, lat, out);
    if (cfg.command == "ncposet") return cmd_ncposet(cfg, lat, out);
    return cmd_verify(cfg, lat, out);
  } catch (const Error& e) {
    err << "canonlat: " << e.what() << "\n";
    return input_error(e.kind()) ? InputError : VerificationFailed;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace canonlat::cli
