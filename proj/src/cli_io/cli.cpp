// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/cli_io/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "drinfeld/base_arith/error.hpp"
#include "drinfeld/base_arith/expr.hpp"
#include "drinfeld/base_arith/irreducible.hpp"
#include "drinfeld/cli_io/prime_cache.hpp"
#include "drinfeld/goss_lseries/newton.hpp"
#include "drinfeld/goss_lseries/power_sums.hpp"

namespace drinfeld {

using Json = nlohmann::ordered_json;

namespace {

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(Errc::parse_error, what + ": '" + text + "' is not an integer at offset " + std::to_string(used));
  }
  return v;
}

// Parses text with the expression parser and reports offsets relative to the
// whole argument.
RatFunc parse_part(const FieldPtr& field, const std::string& whole, std::size_t start, std::size_t len) {
  try {
    return parse_ratfunc(field, whole.substr(start, len));
  } catch (const Error& e) {
    if (e.code() != Errc::parse_error) throw;
    throw Error(Errc::parse_error, "in '" + whole + "' (part starting at offset " + std::to_string(start) +
                                       "): " + e.detail());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) row += (i ? "," : "") + csv_field(cells[i]);
  return row + "\n";
}

std::string newton_text(const std::vector<NewtonSegment>& np) {
  std::string s;
  for (const auto& seg : np) s += (s.empty() ? "" : ";") + seg.slope.to_string() + ":" + std::to_string(seg.length);
  return s;
}

std::string fq_text(const FiniteField& F, Fq c) { return Poly::constant(field_make(F.p(), F.m()), c).to_string(); }

Json config_json(const RunConfig& cfg, const Json& params) {
  Json j;
  j["command"] = cfg.command;
  j["r"] = cfg.r_text;
  j["p"] = cfg.field->p();
  j["m"] = cfg.field->m();
  for (const auto& [k, v] : params.items()) j[k] = v;
  j["format"] = cfg.format == OutputFormat::csv ? "csv" : "json";
  j["max_enumeration"] = cfg.bounds.max_enumeration;
  j["max_extension_degree"] = cfg.bounds.max_extension_degree;
  j["laurent_precision"] = cfg.bounds.laurent_precision;
  j["cache"] = cfg.cache;
  return j;
}

std::string config_comment(const Json& config) { return "# config " + config.dump() + "\n"; }

std::string cmd_special(const RunConfig& cfg, const std::string& kind_text, const std::string& range_text) {
  const SpecialKind kind = parse_kind(kind_text);
  const auto [lo, hi] = parse_index_range(range_text);
  const Json config = config_json(cfg, Json{{"kind", kind_text}, {"i", range_text}});
  std::vector<SpecialPolynomial> rows;
  if (hi >= lo) {
    const long long k_max = special_exponent(kind, hi);
    if (static_cast<std::uint64_t>(k_max) > cfg.bounds.max_enumeration) {
      throw Error(Errc::bound_exceeded, "exponent k = " + std::to_string(k_max) + " exceeds max_enumeration=" +
                                            std::to_string(cfg.bounds.max_enumeration));
    }
    PowerSumTable table(cfg.field, static_cast<int>(k_max));
    for (int i = lo; i <= hi; ++i) rows.push_back(special_polynomial(table, i, kind));
  }
  if (cfg.format == OutputFormat::json) {
    Json doc;
    doc["config"] = config;
    doc["rows"] = Json::array();
    for (const auto& sp : rows) {
      Json row;
      row["i"] = sp.i;
      row["kind"] = kind_name(sp.kind);
      row["k"] = sp.k;
      row["degree"] = sp.degree();
      row["coeffs"] = Json::array();
      for (const Poly& c : sp.coeffs) row["coeffs"].push_back(c.to_string());
      row["polynomial"] = sp.to_string();
      row["newton"] = Json::array();
      for (const auto& seg : newton_polygon(sp)) row["newton"].push_back({{"slope", seg.slope.to_string()}, {"length", seg.length}});
      doc["rows"].push_back(row);
    }
    return doc.dump(2) + "\n";
  }
  std::string s = config_comment(config) + csv_row({"i", "kind", "k", "degree", "polynomial", "newton"});
  for (const auto& sp : rows) {
    s += csv_row({std::to_string(sp.i), kind_name(sp.kind), std::to_string(sp.k), std::to_string(sp.degree()),
                  sp.to_string(), newton_text(newton_polygon(sp))});
  }
  return s;
}

std::string cmd_lfactors(const RunConfig& cfg, const std::string& object_text, int dmax, std::ostream& err) {
  if (dmax < 0) throw Error(Errc::invalid_argument, "--dmax must be >= 0");
  const LObject obj = parse_object(cfg.field, object_text);
  const Json config = config_json(cfg, Json{{"object", object_text}, {"dmax", dmax}});
  PrimeCache cache(cfg.cache.empty() ? std::nullopt : std::optional<std::filesystem::path>(cfg.cache));
  struct Row {
    std::string prime, denominator, provenance;
  };
  std::vector<Row> rows;
  for (const Poly& f : cache.primes_up_to(cfg.field, dmax, cfg.bounds)) {
    try {
      const LocalFactor lf = local_factor(obj, f, cfg.bounds);
      rows.push_back({f.to_string(), lf.to_string(), provenance_name(lf.provenance)});
    } catch (const Error& e) {
      if (e.code() != Errc::unsupported) throw;
      err << "warning: " << f.to_string() << ": " << e.detail() << "\n";
      rows.push_back({f.to_string(), "", "unsupported"});
    }
  }
  if (cfg.format == OutputFormat::json) {
    Json doc;
    doc["config"] = config;
    doc["rows"] = Json::array();
    for (const Row& r : rows) {
      doc["rows"].push_back({{"prime", r.prime}, {"denominator", r.denominator}, {"provenance", r.provenance}});
    }
    return doc.dump(2) + "\n";
  }
  std::string s = config_comment(config) + csv_row({"prime", "denominator", "provenance"});
  for (const Row& r : rows) s += csv_row({r.prime, r.denominator, r.provenance});
  return s;
}

std::string cmd_classify(const RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot read eigen file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const EigenSystem es = parse_eigen_file(cfg.field, text.str());
  const Classification c = classify_eigen_system(es);
  const FiniteField& F = *cfg.field;
  Json doc;
  doc["config"] = config_json(cfg, Json{{"eigen_file", path}});
  doc["primes"] = es.values.size();
  doc["verdict"] = verdict_name(c);
  if (const auto* t = std::get_if<ClassIITranslate>(&c)) {
    doc["j"] = t->j;
    doc["j_mod_r_minus_1"] = t->j_mod_r_minus_1;
    doc["scale"] = fq_text(F, t->scale);
  } else if (const auto* w = std::get_if<ClassIWitness>(&c)) {
    doc["j"] = w->j;
    doc["characters"] = Json::array();
    for (const auto& [P, cp] : w->characters) doc["characters"].push_back({{"prime", P.to_string()}, {"c", fq_text(F, cp)}});
    if (w->conductor) {
      Json cond;
      cond["modulus"] = w->conductor->modulus.to_string();
      cond["scale"] = fq_text(F, w->conductor->scale);
      cond["note"] = w->conductor->note;
      cond["values"] = Json::array();
      for (const auto& [res, v] : w->conductor->values_by_residue) {
        cond["values"].push_back({{"residue", res.to_string()}, {"value", fq_text(F, v)}});
      }
      doc["conductor"] = cond;
    } else {
      doc["conductor"] = nullptr;
    }
  } else {
    doc["reason"] = std::get<NoMatch>(c).reason;
  }
  return doc.dump(2) + "\n";
}

std::string cmd_eigen(const RunConfig& cfg, const std::string& source, int dmax) {
  if (dmax < 1) throw Error(Errc::invalid_argument, "--dmax must be >= 1");
  const Json config = config_json(cfg, Json{{"source", source}, {"dmax", dmax}});
  PrimeCache cache(cfg.cache.empty() ? std::nullopt : std::optional<std::filesystem::path>(cfg.cache));
  const std::vector<Poly> primes = cache.primes_up_to(cfg.field, dmax, cfg.bounds);
  std::vector<std::pair<Poly, RatFunc>> rows;
  if (source.rfind("power:", 0) == 0) {
    const int j = parse_int(source.substr(6), "power exponent");
    for (const Poly& f : primes) rows.emplace_back(f, RatFunc(f).pow(j));
  } else if (source.rfind("chi:", 0) == 0) {
    const RatFunc beta = parse_part(cfg.field, source, 4, std::string::npos);
    if (beta.is_zero()) throw Error(Errc::zero_input, "beta must be nonzero");
    for (const Poly& f : primes) {
      if (beta.valuation_at(f) != 0) continue;
      rows.emplace_back(f, RatFunc(f) * RatFunc::constant(cfg.field, cfg.field->inv(chi_beta(beta, f))));
    }
  } else {
    throw Error(Errc::parse_error, "eigen source '" + source + "' at offset 0: expected power:<j> or chi:<beta>");
  }
  if (cfg.format == OutputFormat::json) {
    Json doc;
    doc["config"] = config;
    doc["rows"] = Json::array();
    for (const auto& [f, a] : rows) doc["rows"].push_back({{"prime", f.to_string()}, {"value", a.to_string("T")}});
    return doc.dump(2) + "\n";
  }
  std::string s = config_comment(config) + csv_row({"prime", "value"});
  for (const auto& [f, a] : rows) s += csv_row({f.to_string(), a.to_string("T")});
  return s;
}

}  // namespace

std::pair<int, int> parse_index_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int i = parse_int(text, "index");
    if (i < 0) throw Error(Errc::invalid_argument, "index must be >= 0");
    return {i, i};
  }
  const int lo = parse_int(text.substr(0, dots), "range start");
  const int hi = parse_int(text.substr(dots + 2), "range end");
  if (lo < 0) throw Error(Errc::invalid_argument, "range start must be >= 0");
  return {lo, hi};
}

LObject parse_object(const FieldPtr& field, const std::string& object_text) {
  if (object_text == "carlitz") return CarlitzObject{field};
  if (object_text.rfind("cbeta:", 0) == 0) {
    const RatFunc beta = parse_part(field, object_text, 6, std::string::npos);
    if (beta.is_zero()) throw Error(Errc::zero_input, "cbeta needs a nonzero beta");
    return TwistObject{beta};
  }
  if (object_text.rfind("tensorpower:", 0) == 0) {
    const int n = parse_int(object_text.substr(12), "tensor power");
    return carlitz_tensor_power(field, n).sheaf;
  }
  if (object_text.rfind("rank2:", 0) == 0) {
    const std::size_t comma = object_text.find(',', 6);
    if (comma == std::string::npos) {
      throw Error(Errc::parse_error, "rank2 needs two coefficients a1,a2 at offset " + std::to_string(object_text.size()));
    }
    const RatFunc a1 = parse_part(field, object_text, 6, comma - 6);
    const RatFunc a2 = parse_part(field, object_text, comma + 1, std::string::npos);
    if (a2.is_zero()) throw Error(Errc::invalid_argument, "rank2 needs a nonzero leading coefficient");
    return drinfeld_over_k(field, {a1, a2});
  }
  throw Error(Errc::parse_error, "unknown object '" + object_text +
                                     "' at offset 0: expected carlitz, cbeta:<beta>, tensorpower:<n> or rank2:<a1>,<a2>");
}

EigenSystem parse_eigen_file(const FieldPtr& field, const std::string& text) {
  EigenSystem es;
  es.field = field;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line == "prime,value") continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": expected 'prime,value' at offset " +
                                         std::to_string(line.size()));
    }
    try {
      const Poly prime = parse_poly(field, line.substr(0, comma));
      if (!prime.is_monic() || !is_irreducible_trial(prime)) {
        throw Error(Errc::not_prime, prime.to_string() + " is not a monic prime");
      }
      es.add(prime, parse_ratfunc(field, line.substr(comma + 1)));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.detail());
    }
  }
  return es;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for Drinfeld modules, tau-sheaves and Goss L-series", "drinfeld"};
  app.require_subcommand(1);
  struct Options {
    std::string r, format = "csv", out, cache, kind = "zeta", range = "0", positional;
    int prec = DeskBounds{}.laurent_precision;
    std::uint64_t max_enum = DeskBounds{}.max_enumeration;
    int max_ext = DeskBounds{}.max_extension_degree;
    int dmax = 2;
  } o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "field order, as r or p^m")->required();
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_option("--cache", o.cache, "directory for prime tables");
    sub->add_option("--prec", o.prec, "Laurent precision")->check(CLI::PositiveNumber);
    sub->add_option("--max-enum", o.max_enum, "largest enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--max-ext", o.max_ext, "largest extension degree")->check(CLI::PositiveNumber);
  };
  CLI::App* special = app.add_subcommand("special", "special polynomials with degrees and Newton polygons");
  common(special);
  special->add_option("--kind", o.kind, "zeta or carlitz")->check(CLI::IsMember({"zeta", "carlitz"}));
  special->add_option("--i", o.range, "index or range a..b");
  CLI::App* lfactors = app.add_subcommand("lfactors", "local L-factors at primes of degree <= dmax");
  common(lfactors);
  lfactors->add_option("object", o.positional, "carlitz | cbeta:<beta> | tensorpower:<n> | rank2:<a1>,<a2>")->required();
  lfactors->add_option("--dmax", o.dmax, "largest prime degree");
  CLI::App* classify = app.add_subcommand("classify", "classify an eigen-system file");
  common(classify);
  classify->add_option("file", o.positional, "CSV of prime,value lines")->required();
  CLI::App* eigen = app.add_subcommand("eigen", "write an eigen-system file");
  common(eigen);
  eigen->add_option("source", o.positional, "power:<j> | chi:<beta>")->required();
  eigen->add_option("--dmax", o.dmax, "largest prime degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    RunConfig cfg;
    cfg.bounds.laurent_precision = o.prec;
    cfg.bounds.max_enumeration = o.max_enum;
    cfg.bounds.max_extension_degree = o.max_ext;
    cfg.r_text = o.r;
    cfg.field = field_from_text(o.r, cfg.bounds);
    cfg.format = o.format == "json" ? OutputFormat::json : OutputFormat::csv;
    cfg.cache = o.cache;
    std::string text;
    if (special->parsed()) {
      cfg.command = "special";
      text = cmd_special(cfg, o.kind, o.range);
    } else if (lfactors->parsed()) {
      cfg.command = "lfactors";
      text = cmd_lfactors(cfg, o.positional, o.dmax, err);
    } else if (classify->parsed()) {
      cfg.command = "classify";
      cfg.format = OutputFormat::json;
      text = cmd_classify(cfg, o.positional);
    } else {
      cfg.command = "eigen";
      text = cmd_eigen(cfg, o.positional, o.dmax);
    }
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
      if (!file) throw Error(Errc::invalid_argument, "cannot write '" + o.out + "'");
      file << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::inconsistent_crt ? kExitInternal : kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace drinfeld
