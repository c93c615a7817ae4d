/* Copyright 2026 The dumont-grammar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "dumont/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dumont/bijection.hpp"
#include "dumont/error.hpp"
#include "dumont/grammar.hpp"
#include "dumont/identities.hpp"
#include "dumont/labeling.hpp"
#include "dumont/perms.hpp"
#include "dumont/trees.hpp"
#include "dumont/verification.hpp"

namespace dumont::cli {

namespace {

using nlohmann::json;

constexpr int kMaxDeriveN = 12;
constexpr int kMaxGfOrder = 10;
constexpr int kDefaultVerifyN = 7;
constexpr int kVerifyNWithoutOverride = 8;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// derive ---------------------------------------------------------------------

struct DeriveArgs {
  std::string grammar = "dumont";
  std::string grammar_file;
  std::string word = "a";
  int n = 0;
  bool json = false;
};

int cmd_derive(const DeriveArgs& args, std::ostream& out) {
  Grammar g;
  std::string source = args.grammar;
  if (!args.grammar_file.empty()) {
    std::ifstream in(args.grammar_file);
    if (!in) throw UsageError("cannot read grammar file '" + args.grammar_file + "'");
    std::stringstream text;
    text << in.rdbuf();
    g = Grammar::parse(text.str());
    source = args.grammar_file;
  } else {
    g = Grammar::by_name(args.grammar);
  }
  Polynomial w = Polynomial::parse(args.word);
  Polynomial result = derive_n(g, w, static_cast<unsigned>(args.n));
  if (args.json) {
    emit(out, {{"command", "derive"},
               {"grammar", source},
               {"word", w.to_string()},
               {"n", args.n},
               {"result", result.to_string()},
               {"terms", result.to_json()}});
  } else {
    out << result.to_string() << '\n';
  }
  return kExitOk;
}

// dist -----------------------------------------------------------------------

struct DistArgs {
  int n = 0;
  std::string spec;
  bool json = false;
};

int cmd_dist(const DistArgs& args, std::ostream& out) {
  auto spec = parse_stat_spec(args.spec);
  Polynomial result = distribution(args.n, spec);
  if (args.json) {
    emit(out, {{"command", "dist"},
               {"n", args.n},
               {"spec", args.spec},
               {"result", result.to_string()},
               {"terms", result.to_json()}});
  } else {
    out << result.to_string() << '\n';
  }
  return kExitOk;
}

// map ------------------------------------------------------------------------

struct MapArgs {
  std::string perm;
  std::string direction = "forward";
  bool trace = false;
  bool json = false;
};

int cmd_map(const MapArgs& args, std::ostream& out) {
  const Permutation input = Permutation::parse(args.perm);
  const bool forward = args.direction == "forward";
  const Permutation sigma = forward ? input : phi_inverse(input);
  const Permutation image = forward ? phi(input) : input;
  const Permutation& result = forward ? image : sigma;

  const int jump = stat(sigma, Stat::jump), des = stat(sigma, Stat::des);
  const int exc = stat(image, Stat::exc), drop = stat(image, Stat::drop);
  const auto lbar = set_stat(sigma, SetStat::Lbar), fixed = set_stat(image, SetStat::F);
  const auto jumpbar = set_stat(sigma, SetStat::Jumpbar), excbar = set_stat(image, SetStat::Excbar);

  std::vector<PhiStep> steps;
  if (args.trace) steps = phi_trace(sigma);

  if (args.json) {
    json trace = json::array();
    for (const auto& s : steps) {
      json step = {{"perm", s.perm.to_string()},
                   {"labeled", labeled_text(s.perm, s.labels)},
                   {"tree", s.tree.to_string()}};
      if (s.slot != 0) {
        step["slot"] = s.slot;
        step["label"] = std::string(1, var_name(s.labels.at(s.slot)));
        step["leaf"] = leaf_to_string(*s.leaf);
      }
      trace.push_back(step);
    }
    json j = {{"command", "map"},
              {"direction", args.direction},
              {"input", input.to_string()},
              {"output", result.to_string()},
              {"output_cycles", to_cycles(result).to_string()},
              {"sigma", sigma.to_string()},
              {"phi_sigma", image.to_string()},
              {"jump_des", {jump, des}},
              {"exc_drop", {exc, drop}},
              {"Lbar", lbar},
              {"F", fixed},
              {"Jumpbar", jumpbar},
              {"Excbar", excbar}};
    if (args.trace) j["trace"] = trace;
    emit(out, j);
    return kExitOk;
  }

  out << result.to_string() << "  =  " << to_cycles(result).to_string() << '\n';
  out << "(jump,des) = " << pair_text(jump, des) << "  ->  (exc,drop) = " << pair_text(exc, drop) << '\n';
  out << "Lbar = " << set_to_string(lbar) << "  ->  F = " << set_to_string(fixed) << '\n';
  out << "Jumpbar = " << set_to_string(jumpbar) << "  ->  Excbar = " << set_to_string(excbar) << '\n';
  if (args.trace) {
    out << "trace of phi(" << sigma.to_string() << "):\n";
    for (const auto& s : steps) {
      out << "  " << labeled_text(s.perm, s.labels) << '\n';
      out << "  " << s.tree.to_string() << '\n';
      if (s.slot != 0)
        out << "    insert " << s.perm.size() + 1 << " at slot " << s.slot << " (" << var_name(s.labels.at(s.slot))
            << "), grow the " << leaf_to_string(*s.leaf) << '\n';
    }
  }
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int max_n = kDefaultVerifyN;
  bool allow_large = false;
  bool json = false;
};

json table_json(const BijectionReport& table) {
  json rows = json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"I", r.subset},
                    {"sigma", r.sigma.to_string()},
                    {"phi_sigma", to_cycles(r.image).to_string()},
                    {"jump_des", {r.jump, r.des}},
                    {"exc_drop", {r.exc, r.drop}}});
  return {{"n", table.n}, {"rows", rows}};
}

void print_table(const BijectionReport& table, std::ostream& out) {
  out << "bijection table, n = " << table.n << ":\n";
  out << "  " << pad("I", 10) << pad("Lbar_n(I)", 14) << pad("F_n(I)", 16) << "(jump,des) <-> (exc,drop)\n";
  for (const auto& r : table.rows) {
    std::string stats = pair_text(r.jump, r.des);
    if (r.jump != r.exc || r.des != r.drop) stats += " != " + pair_text(r.exc, r.drop);
    out << "  " << pad(set_to_string(r.subset), 10) << pad(r.sigma.to_string(), 14)
        << pad(to_cycles(r.image).to_string(), 16) << stats << '\n';
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  Suite suite;
  try {
    suite = parse_suite(args.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.max_n > kVerifyNWithoutOverride && !args.allow_large)
    throw UsageError("--max-n above " + std::to_string(kVerifyNWithoutOverride) + " requires --allow-large");
  VerificationReport report = run_verification(suite, args.max_n);

  if (args.json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"anchor", c.anchor},
                        {"n_range", c.n_range},
                        {"status", c.status == CheckStatus::pass ? "pass" : "fail"},
                        {"detail", c.detail}});
    json j = {{"command", "verify"},
              {"suite", args.suite},
              {"max_n", args.max_n},
              {"checks", checks},
              {"summary", {{"passed", report.passed()}, {"failed", report.failed()}}}};
    if (report.table) j["table"] = table_json(*report.table);
    emit(out, j);
  } else {
    out << "verify suite=" << args.suite << " max-n=" << args.max_n << '\n';
    for (const auto& c : report.checks) {
      out << (c.status == CheckStatus::pass ? "PASS  " : "FAIL  ") << c.name << "  [n = " << c.n_range << "]\n";
      out << "      " << c.anchor << '\n';
      out << "      " << c.detail << '\n';
    }
    if (report.table) print_table(*report.table, out);
    out << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

// gf -------------------------------------------------------------------------

struct GfArgs {
  std::string id;
  int order = 0;
  std::string source = "grammar";
  bool json = false;
};

int cmd_gf(const GfArgs& args, std::ostream& out) {
  const auto source = args.source == "grammar" ? CoefficientSource::grammar : CoefficientSource::enumeration;
  const unsigned order = static_cast<unsigned>(args.order);
  ClosedFormIdentity ident = closed_form_identity(args.id, order, source);
  TruncatedEgf closed = ident.closed_form_coefficients();
  const bool match = closed == ident.generated && ident.holds();

  if (args.json) {
    json closed_list = json::array(), generated_list = json::array();
    for (unsigned n = 0; n <= order; ++n) {
      closed_list.push_back(closed[n].to_string());
      generated_list.push_back(ident.generated[n].to_string());
    }
    emit(out, {{"command", "gf"},
               {"id", ident.id},
               {"formula", ident.formula},
               {"order", args.order},
               {"source", args.source},
               {"generated_by", ident.generated_by},
               {"closed_form", closed_list},
               {"generated", generated_list},
               {"match", match}});
  } else {
    out << ident.id << ": " << ident.formula << '\n';
    out << "closed-form coefficients; [=] when " << ident.generated_by << " agrees\n";
    for (unsigned n = 0; n <= order; ++n) {
      out << n << ": " << closed[n].to_string();
      if (closed[n] == ident.generated[n])
        out << "  [=]\n";
      else
        out << "  [MISMATCH: " << ident.generated[n].to_string() << "]\n";
    }
    out << (match ? "match" : "MISMATCH") << " to order " << order << '\n';
  }
  return match ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grammar calculus for permutation statistics: derivations, distributions, series and the "
               "left-succession / fixed-point bijection.",
               "dumont"};
  app.require_subcommand(1);

  DeriveArgs derive_args;
  auto* derive = app.add_subcommand("derive", "Iterate the formal derivative of a grammar on a word");
  auto* grammar_opt = derive->add_option("--grammar", derive_args.grammar, "Built-in grammar: dumont, dumont-b, eulerian")
                          ->capture_default_str();
  derive->add_option("--grammar-file", derive_args.grammar_file, "Grammar file with lines 'v -> poly'")
      ->excludes(grammar_opt);
  derive->add_option("--word", derive_args.word, "Starting polynomial, e.g. a*b")->capture_default_str();
  derive->add_option("--n", derive_args.n, "Number of derivations")->required()->check(CLI::Range(0, kMaxDeriveN));
  derive->add_flag("--json", derive_args.json, "Machine-readable output");

  DistArgs dist_args;
  auto* dist = app.add_subcommand("dist", "Joint distribution of statistics over S_n");
  dist->add_option("--n", dist_args.n, "Permutation size")->required()->check(CLI::Range(0, kMaxEnumerationSize));
  dist->add_option("--spec", dist_args.spec, "Statistic-to-variable map, e.g. jump:x,des:y,suc:z")->required();
  dist->add_flag("--json", dist_args.json, "Machine-readable output");

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Apply the bijection or its inverse to a permutation");
  map->add_option("--perm", map_args.perm, "One-line permutation, e.g. \"1 6 3 2 4 5\"")->required();
  map->add_option("--direction", map_args.direction, "forward or inverse")
      ->check(CLI::IsMember({"forward", "inverse"}))
      ->capture_default_str();
  map->add_flag("--trace", map_args.trace, "Print the labeled permutation and tree at each growth step");
  map->add_flag("--json", map_args.json, "Machine-readable output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--suite", verify_args.suite, "all, grammar, series, bijection or identities")
      ->check(CLI::IsMember({"all", "grammar", "series", "bijection", "identities"}))
      ->capture_default_str();
  verify->add_option("--max-n", verify_args.max_n, "Largest permutation size checked")
      ->check(CLI::Range(1, kMaxEnumerationSize))
      ->capture_default_str();
  verify->add_flag("--allow-large", verify_args.allow_large, "Permit --max-n 9");
  verify->add_flag("--json", verify_args.json, "Machine-readable output");

  GfArgs gf_args;
  auto* gf = app.add_subcommand("gf", "Compare a closed-form generating function with generated coefficients");
  gf->add_option("--id", gf_args.id, "Identity: fxz, fsg-2, gat, gpstar, gpn, genab, eulerian")->required();
  gf->add_option("--order", gf_args.order, "Truncation order")->required()->check(CLI::Range(0, kMaxGfOrder));
  gf->add_option("--source", gf_args.source, "Coefficient source: grammar or enumeration")
      ->check(CLI::IsMember({"grammar", "enumeration"}))
      ->capture_default_str();
  gf->add_flag("--json", gf_args.json, "Machine-readable output");

  std::vector<const char*> argv{"dumont"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*derive) return cmd_derive(derive_args, out);
    if (*dist) return cmd_dist(dist_args, out);
    if (*map) return cmd_map(map_args, out);
    if (*verify) return cmd_verify(verify_args, out);
    if (*gf) return cmd_gf(gf_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dumont::cli
