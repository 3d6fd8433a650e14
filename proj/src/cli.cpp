#include "poz/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "poz/errors.hpp"
#include "poz/fusion.hpp"
#include "poz/generators.hpp"
#include "poz/io.hpp"
#include "poz/json_io.hpp"
#include "poz/momentum.hpp"
#include "poz/pattern.hpp"
#include "poz/poly_ops.hpp"
#include "poz/reproduce.hpp"

namespace poz {

namespace {

struct InputOptions {
  std::string expr;
  std::string path;
  std::string family;
  std::optional<std::uint64_t> seed;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--expr", in.expr, "Polynomial text");
  cmd->add_option("--input", in.path, "File containing polynomial text");
  cmd->add_option("--family", in.family, "FamilySpec JSON text or path to a JSON file");
  cmd->add_option("--seed", in.seed, "Seed for random families (overrides the spec)");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Json read_family_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const std::string text = (first != std::string::npos && arg[first] == '{') ? arg : read_file(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("family: invalid JSON: ") + e.what());
  }
}

Polynomial load_polynomial(const InputOptions& in) {
  const int given = !in.expr.empty() + !in.path.empty() + !in.family.empty();
  if (given != 1) throw PreconditionError("exactly one of --expr, --input, --family is required");
  if (!in.expr.empty()) return parse(in.expr);
  if (!in.path.empty()) return parse(read_file(in.path));
  FamilySpec spec = family_from_json(read_family_json(in.family));
  if (in.seed) spec.seed = *in.seed;
  return generate(spec);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Variable parse_variable(const std::string& text) {
  const Polynomial p = parse(text);
  if (p.size() != 1 || p.leading().coeff != 1 || p.leading().monomial.total_degree() != 1)
    throw PreconditionError("expected a variable, got '" + text + "'");
  return p.leading().monomial.entries().front().first;
}

// "z[1],z[2]->z[2,1] & z[3],z[4]->z[2,2]"
FusionStep parse_step(const std::string& text) {
  FusionStep step;
  for (const auto& part : split_top_level(text, '&')) {
    const auto arrow = part.find("->");
    if (arrow == std::string::npos) throw PreconditionError("fusion step '" + part + "' lacks '->'");
    FusionSpec spec;
    for (const auto& v : split_top_level(part.substr(0, arrow), ',')) spec.inputs.push_back(parse_variable(v));
    spec.output = parse_variable(part.substr(arrow + 2));
    step.push_back(std::move(spec));
  }
  return step;
}

PatternOfZeros make_pattern(std::uint32_t n, std::uint32_t m, const std::vector<std::int64_t>& S) {
  PatternOfZeros pat{n, m, S};
  validate_pattern(pat);
  return pat;
}

Json structure_json(const StructureReport& s) {
  return Json{{"symmetric", s.symmetric}, {"translation_invariant", s.translation_invariant},
              {"homogeneous", s.homogeneous}};
}

bool all_unit(const Polynomial& p) {
  for (auto v : p.registry())
    if (!v.is_particle() || v.weight() != 1) return false;
  return true;
}

void analyze(const Polynomial& p, std::size_t budget, ReportEnvelope& env) {
  env.result["polynomial"] = polynomial_json(p);
  const auto s = structure_report(p);
  env.result["structure"] = structure_json(s);
  if (!s.symmetric || !all_unit(p)) return;
  const auto N = static_cast<std::uint32_t>(particles(p).size());
  env.result["pattern"] = pattern_from_polynomial(p, N);
  if (!s.translation_invariant) return;

  MomentumContext ctx(p, budget);
  env.result["momentum"] = to_json(ctx.momentum());
  env.add(ctx.preconditions());
  if (N >= 3) env.add(check_thm61(ctx));
  env.add(check_AMS(ctx));
  if (ctx.momentum().AMS) {
    env.add(check_thm62(ctx));
    for (std::uint32_t n = 1; n < N; ++n)
      if (N % n == 0) env.add(check_nAMS(ctx, n));
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Pattern-of-zeros fusion calculus for symmetric polynomials", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::size_t budget = 20000;
  InputOptions in;

  auto* analyze_cmd = app.add_subcommand("analyze", "Structure, pattern of zeros and momentum checks");
  add_input_options(analyze_cmd, in);
  analyze_cmd->add_option("--budget", budget, "Maximum number of fusions explored");

  std::vector<std::string> steps;
  auto* fuse_cmd = app.add_subcommand("fuse", "Run an explicit fusion process");
  add_input_options(fuse_cmd, in);
  fuse_cmd->add_option("--step", steps, "Fusion step, e.g. 'z[1],z[2]->z[2,1]'; '&' joins simultaneous fusions")
      ->required();

  std::uint32_t n = 1, m = 1, a = 1, k = 0, a_max = 0;
  std::int64_t cap = 10;
  std::vector<std::int64_t> S;
  auto* pattern_cmd = app.add_subcommand("pattern", "Pattern-of-zeros arithmetic");
  pattern_cmd->require_subcommand(1);
  auto* check_cmd = pattern_cmd->add_subcommand("check", "Check conditions (a)-(g)");
  auto* extend_cmd = pattern_cmd->add_subcommand("extend", "Extended value S_{a+kn}");
  auto* enum_cmd = pattern_cmd->add_subcommand("enumerate", "All admissible patterns below a cap");
  for (auto* c : {check_cmd, extend_cmd, enum_cmd}) {
    c->add_option("--n", n, "Cluster period")->required();
    c->add_option("--m", m, "Filling denominator")->required();
  }
  for (auto* c : {check_cmd, extend_cmd})
    c->add_option("--S", S, "S_1..S_n, comma separated")->required()->delimiter(',');
  check_cmd->add_option("--amax", a_max, "Largest index checked (default 3n)");
  extend_cmd->add_option("--a", a, "Base index, 1 <= a <= n")->required();
  extend_cmd->add_option("--k", k, "Number of periods")->required();
  enum_cmd->add_option("--cap", cap, "Upper bound on S_a");

  FamilySpec fam;
  std::string family_arg;
  std::optional<std::uint64_t> gen_seed;
  auto* gen_cmd = app.add_subcommand("generate", "Build a named or random polynomial");
  gen_cmd->add_option("--family", family_arg, "FamilySpec JSON text or path");
  gen_cmd->add_option("--kind", fam.kind, "Family kind");
  gen_cmd->add_option("--N", fam.N, "Number of variables");
  gen_cmd->add_option("--m", fam.m, "Exponent");
  gen_cmd->add_option("--degree-cap", fam.degree_cap, "Degree cap for random families");
  gen_cmd->add_option("--seed", gen_seed, "Seed for random families");

  std::string case_name;
  auto* repro_cmd = app.add_subcommand("reproduce", "Recompute the worked examples");
  repro_cmd->add_option("--case", case_name, "Single case to run");

  bool multi = false;
  std::vector<std::uint32_t> final_config;
  auto* ufc_cmd = app.add_subcommand("ufc", "Unique fusion condition");
  add_input_options(ufc_cmd, in);
  ufc_cmd->add_option("--budget", budget, "Maximum number of fusions explored");
  ufc_cmd->add_flag("--multi", multi, "Also enumerate simultaneous fusions");
  ufc_cmd->add_option("--final", final_config, "Final configuration weights, comma separated")->delimiter(',');

  auto* ulc_cmd = app.add_subcommand("ulc", "Unique local condition");
  add_input_options(ulc_cmd, in);
  ulc_cmd->add_option("--budget", budget, "Maximum number of fusions explored");

  std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::string command = "";
  try {
    std::vector<std::string> reversed(argv_tail.rbegin(), argv_tail.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_document(command, e.what()).dump(2) << "\n";
    return kExitInputError;
  }

  ReportEnvelope env;
  for (auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }
  env.command = command;

  try {
    if (analyze_cmd->parsed()) {
      const Polynomial p = load_polynomial(in);
      env.input_digest = digest(to_string(p));
      analyze(p, budget, env);
    } else if (fuse_cmd->parsed()) {
      const Polynomial p = load_polynomial(in);
      env.input_digest = digest(to_string(p));
      FusionProcess proc;
      for (const auto& s : steps) proc.steps.push_back(parse_step(s));
      AnalysisReport report;
      report.subject = "fusion process " + proc.describe();
      Json trace = Json::array();
      Polynomial current = p;
      bool ok = true;
      for (std::size_t i = 0; i < proc.steps.size() && ok; ++i) {
        const auto pre = prederive_multi(current, proc.steps[i]);
        const auto derived = separate(pre);
        Json row{{"step", i}, {"s", pre.s}};
        if (!derived) {
          ok = false;
          row["prederived"] = polynomial_json(pre.qs);
        } else {
          current = derived->pder;
          row["R"] = polynomial_json(derived->r);
          row["derived"] = polynomial_json(current);
        }
        trace.push_back(std::move(row));
      }
      report.add("separable", ok);
      env.result["trace"] = std::move(trace);
      if (ok) env.result["derived"] = polynomial_json(current);
      env.add(std::move(report));
    } else if (check_cmd->parsed()) {
      const auto pat = make_pattern(n, m, S);
      env.input_digest = digest(pattern_to_json(pat).dump());
      env.add(check_conditions(pat, a_max ? a_max : 3 * n));
      env.result["pattern"] = pattern_to_json(pat);
    } else if (extend_cmd->parsed()) {
      const auto pat = make_pattern(n, m, S);
      env.input_digest = digest(pattern_to_json(pat).dump());
      env.result = {{"pattern", pattern_to_json(pat)}, {"a", a}, {"k", k},
                    {"index", a + static_cast<std::uint64_t>(k) * n}, {"value", extend_pattern(pat, a, k)}};
    } else if (enum_cmd->parsed()) {
      env.input_digest = digest(Json{{"n", n}, {"m", m}, {"cap", cap}}.dump());
      Json list = Json::array();
      for (const auto& pat : enumerate_patterns(n, m, cap)) list.push_back(pattern_to_json(pat));
      env.result = {{"n", n}, {"m", m}, {"cap", cap}, {"count", list.size()}, {"patterns", std::move(list)}};
    } else if (gen_cmd->parsed()) {
      if (!family_arg.empty()) {
        if (!fam.kind.empty()) throw PreconditionError("give either --family or --kind, not both");
        fam = family_from_json(read_family_json(family_arg));
      }
      if (fam.kind.empty()) throw PreconditionError("generate needs --family or --kind");
      if (gen_seed) fam.seed = *gen_seed;
      const Polynomial p = generate(fam);
      env.input_digest = digest(family_to_json(fam).dump());
      env.result = {{"family", family_to_json(fam)},
                    {"polynomial", polynomial_json(p, std::numeric_limits<std::size_t>::max())},
                    {"structure", structure_json(structure_report(p))}};
    } else if (repro_cmd->parsed()) {
      std::vector<std::string> names = case_name.empty() ? reproduce_cases() : std::vector<std::string>{case_name};
      env.input_digest = digest(case_name);
      for (const auto& name : names) env.add(reproduce_case(name));
      env.result["cases"] = names;
    } else if (ufc_cmd->parsed()) {
      const Polynomial p = load_polynomial(in);
      env.input_digest = digest(to_string(p));
      UfcOptions options;
      options.budget = budget;
      options.multi = multi;
      if (!final_config.empty()) options.final_config = final_config;
      env.add(check_sUFC(p, options));
    } else if (ulc_cmd->parsed()) {
      const Polynomial p = load_polynomial(in);
      env.input_digest = digest(to_string(p));
      env.add(check_ULC(p, budget));
    }
  } catch (const InseparableError& e) {
    AnalysisReport report;
    report.subject = "fusion";
    report.add("separable", false, {{"message", e.what()}});
    env.add(std::move(report));
  } catch (const Error& e) {
    out << error_document(command, e.what()).dump(2) << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    out << error_document(command, e.what()).dump(2) << "\n";
    return kExitInputError;
  }

  env.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << env.to_json().dump(2) << "\n";
  return env.pass ? kExitOk : kExitCheckFailed;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, std::cout);
}

} // namespace poz
