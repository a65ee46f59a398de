#include "ramcov/cli.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "ramcov/constructions.hpp"
#include "ramcov/covering.hpp"
#include "ramcov/invariants.hpp"
#include "ramcov/io.hpp"
#include "ramcov/nerve.hpp"
#include "ramcov/report.hpp"
#include "ramcov/selftest.hpp"

namespace ramcov::cli {

namespace {

using io::Json;

std::string dec(std::uint64_t v) { return std::to_string(v); }

Json fraction_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_fraction(v));
  return out;
}

std::vector<std::string> messages(const std::vector<Diagnostic>& diagnostics) {
  std::vector<std::string> out;
  for (const auto& d : diagnostics) out.push_back(d.message);
  return out;
}

struct Outcome {
  Report report;
  int status = exit_success;
};

// Thrown when validation of an input category/functor fails; carries the report.
struct RejectedInput {
  Outcome outcome;
};

CategoryPtr load_category(const std::string& spec, const std::string& command) {
  auto validated = validate_category(io::read_category(spec));
  if (!validated.ok()) {
    Report r{command, {spec}, Verdict::fail, Json::object(), messages(validated.diagnostics)};
    throw RejectedInput{{std::move(r), exit_input_error}};
  }
  return std::make_shared<const FiniteCategory>(std::move(*validated.value));
}

CategoryFunctor load_functor(const std::string& spec, const std::string& command) {
  const auto file = io::read_functor(spec);
  auto fail = [&](std::vector<std::string> diagnostics) {
    Report r{command, {spec}, Verdict::fail, Json::object(), std::move(diagnostics)};
    throw RejectedInput{{std::move(r), exit_input_error}};
  };
  auto source = validate_category(file.source);
  auto target = validate_category(file.target);
  if (!source.ok() || !target.ok()) {
    std::vector<std::string> diagnostics;
    for (const auto& m : messages(source.diagnostics)) diagnostics.push_back("source: " + m);
    for (const auto& m : messages(target.diagnostics)) diagnostics.push_back("target: " + m);
    fail(std::move(diagnostics));
  }
  auto functor = validate_functor(file.map, std::make_shared<const FiniteCategory>(std::move(*source.value)),
                                  std::make_shared<const FiniteCategory>(std::move(*target.value)));
  if (!functor.ok()) fail(messages(functor.diagnostics));
  return std::move(*functor.value);
}

Json profile_json(const CategoryFunctor& p, const RamificationProfile& profile) {
  Json e = Json::object();
  for (std::uint32_t x = 0; x < p.source().object_count(); ++x)
    e[p.source().object_name(ObjectIndex{x})] = dec(profile.ramification[x]);
  Json j;
  j["degree"] = dec(profile.degree);
  j["total_ramification"] = dec(profile.total_ramification);
  j["ramification"] = std::move(e);
  return j;
}

std::string chi_text(const std::optional<Rational>& chi) { return chi ? to_fraction(*chi) : "undefined"; }

Outcome cmd_validate(const std::string& spec) {
  const auto c = load_category(spec, "validate");
  Json payload;
  payload["objects"] = dec(c->object_count());
  payload["morphisms"] = dec(c->morphism_count());
  payload["non_identity_morphisms"] = dec(c->morphism_count() - c->object_count());
  payload["connected"] = is_connected(*c);
  Json pre = Json::array();
  for (const auto x : preinitial_objects(*c)) pre.push_back(c->object_name(x));
  payload["preinitial"] = std::move(pre);
  Json adjacency = Json::array();
  const auto a = adjacency_matrix(*c);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_decimal(a(i, j)));
    adjacency.push_back(std::move(row));
  }
  payload["adjacency"] = std::move(adjacency);
  return {{"validate", {spec}, Verdict::pass, std::move(payload), {}}, exit_success};
}

Outcome cmd_chains(const std::string& spec, std::size_t n, bool nondegenerate, const std::string& base, bool list) {
  const auto c = load_category(spec, "chains");
  std::optional<ObjectIndex> based_at;
  if (!base.empty()) {
    based_at = c->find_object(base);
    if (!based_at) throw io::InputError("unknown object '" + base + "'");
  }
  Json payload;
  payload["length"] = dec(n);
  payload["nondegenerate"] = nondegenerate;
  if (based_at) payload["base"] = base;
  if (list || based_at) {
    const auto chains = enumerate_chains(*c, n, nondegenerate, based_at);
    payload["count"] = dec(chains.size());
    if (list) {
      Json items = Json::array();
      for (const auto& chain : chains) items.push_back(format_chain(*c, chain));
      payload["chains"] = std::move(items);
    }
  } else {
    payload["count"] = to_decimal(count_chains(*c, n, nondegenerate));
  }
  return {{"chains", {spec}, Verdict::pass, std::move(payload), {}}, exit_success};
}

Json polynomial_json(const Polynomial& p) {
  return fraction_list(p.coefficients());
}

Outcome cmd_euler(const std::string& spec) {
  const auto c = load_category(spec, "euler");
  const auto rf = euler_rational_function(*c);
  const auto chi = rf.evaluate(Rational(-1));
  Json payload;
  payload["numerator"] = polynomial_json(rf.numerator());
  payload["denominator"] = polynomial_json(rf.denominator());
  payload["rational_function"] = "(" + rf.numerator().to_string() + ") / (" + rf.denominator().to_string() + ")";
  payload["chi"] = chi_text(chi);
  return {{"euler", {spec}, chi ? Verdict::pass : Verdict::undefined, std::move(payload), {}}, exit_success};
}

Outcome cmd_zeta(const std::string& spec, std::size_t order) {
  const auto c = load_category(spec, "zeta");
  if (order < 1) throw io::InputError("--order must be at least 1");
  Json payload;
  payload["order"] = dec(order);
  payload["coefficients"] = fraction_list(zeta_truncated(*c, order).coefficients());
  return {{"zeta", {spec}, Verdict::pass, std::move(payload), {}}, exit_success};
}

Outcome cmd_covering(const std::string& spec, bool unramified) {
  const auto p = load_functor(spec, "covering");
  if (unramified) {
    const auto v = check_unramified_covering(p);
    Json payload;
    payload["unramified"] = v.holds;
    if (v.witness) payload["witness"] = p.source().object_name(*v.witness);
    if (v.failing_star) payload["failing_star"] = *v.failing_star == StarKind::source ? "source" : "target";
    return {{"covering", {spec}, v.holds ? Verdict::pass : Verdict::fail, std::move(payload), messages(v.diagnostics)},
            v.holds ? exit_success : exit_math_failure};
  }
  const auto profile = check_ramified_covering(p);
  if (!profile.ok())
    return {{"covering", {spec}, Verdict::fail, Json::object(), messages(profile.diagnostics)}, exit_math_failure};
  Json payload = profile_json(p, *profile);
  payload["unramified"] = check_unramified_covering(p).holds;
  return {{"covering", {spec}, Verdict::pass, std::move(payload), {}}, exit_success};
}

Outcome cmd_lemmas(const std::string& spec) {
  const auto p = load_functor(spec, "lemmas");
  const auto profile = check_ramified_covering(p);
  if (!profile.ok())
    return {{"lemmas", {spec}, Verdict::fail, Json::object(), messages(profile.diagnostics)}, exit_math_failure};
  const auto lemmas = check_covering_lemmas(p, *profile);
  Json payload;
  payload["identity_reflection"] = lemmas.identity_reflection;
  payload["cycle_lemma"] = lemmas.cycle_lemma;
  payload["target_lemma"] = lemmas.target_lemma;
  return {{"lemmas", {spec}, lemmas.passed() ? Verdict::pass : Verdict::fail, std::move(payload),
           messages(lemmas.witnesses)},
          lemmas.passed() ? exit_success : exit_math_failure};
}

Outcome cmd_rh(const std::string& spec) {
  const auto p = load_functor(spec, "rh");
  const auto rh = check_riemann_hurwitz(p);
  if (!rh.covering_verified)
    return {{"rh", {spec}, Verdict::fail, Json::object(), messages(rh.diagnostics)}, exit_math_failure};
  Json payload;
  payload["chi_total"] = chi_text(rh.chi_total);
  payload["chi_base"] = chi_text(rh.chi_base);
  payload["degree"] = dec(rh.degree);
  payload["total_ramification"] = dec(rh.total_ramification);
  payload["definedness_agrees"] = rh.definedness_agrees;
  payload["identity_holds"] = rh.identity_holds;
  std::vector<std::string> diagnostics;
  if (rh.chi_total && rh.chi_base)
    diagnostics.push_back(to_fraction(*rh.chi_total) + " = " + dec(rh.degree) + " * " + to_fraction(*rh.chi_base) +
                          " - " + dec(rh.total_ramification) + (rh.identity_holds ? "" : " fails"));
  return {{"rh", {spec}, rh.passed() ? Verdict::pass : Verdict::fail, std::move(payload), std::move(diagnostics)},
          rh.passed() ? exit_success : exit_math_failure};
}

Outcome cmd_zetadiv(const std::string& spec, std::size_t order) {
  if (order < 1) throw io::InputError("--order must be at least 1");
  const auto p = load_functor(spec, "zetadiv");
  const auto z = check_zeta_divisibility(p, order);
  if (!z.covering_verified)
    return {{"zetadiv", {spec}, Verdict::fail, Json::object(), messages(z.diagnostics)}, exit_math_failure};
  Json payload;
  payload["order"] = dec(order);
  payload["degree"] = dec(z.degree);
  payload["total_ramification"] = dec(z.total_ramification);
  payload["equal"] = !z.first_difference.has_value();
  if (z.first_difference) payload["first_difference"] = dec(*z.first_difference);
  payload["total_zeta"] = fraction_list(z.total_zeta->coefficients());
  payload["predicted"] = fraction_list(z.predicted->coefficients());
  return {{"zetadiv", {spec}, z.passed() ? Verdict::pass : Verdict::fail, std::move(payload), {}},
          z.passed() ? exit_success : exit_math_failure};
}

Outcome cmd_dinverse(const std::string& spec, std::size_t n_max) {
  const auto p = load_functor(spec, "dinverse");
  const auto profile = check_ramified_covering(p);
  if (!profile.ok())
    return {{"dinverse", {spec}, Verdict::fail, Json::object(), messages(profile.diagnostics)}, exit_math_failure};
  const auto report = check_simplicial_compatibility(p, *profile, n_max);
  Json payload;
  payload["n_max"] = dec(n_max);
  payload["degree"] = dec(profile->degree);
  payload["chains_checked"] = dec(report.chains_checked);
  payload["violations"] = dec(report.violations.size());
  std::vector<std::string> diagnostics;
  for (const auto& v : report.violations) diagnostics.push_back(v.message);
  return {{"dinverse", {spec}, report.passed() ? Verdict::pass : Verdict::fail, std::move(payload),
           std::move(diagnostics)},
          report.passed() ? exit_success : exit_math_failure};
}

// "cat.json:obj" or "builtin:name:obj".
std::pair<std::string, std::string> split_part(const std::string& arg) {
  std::size_t split = std::string::npos;
  if (arg.starts_with(io::builtin_prefix)) {
    split = arg.find(':', io::builtin_prefix.size());
  } else if (const auto at = arg.find(".json:"); at != std::string::npos) {
    split = at + 5;
  } else {
    split = arg.rfind(':');
  }
  if (split == std::string::npos || split + 1 >= arg.size())
    throw io::InputError("wedge part '" + arg + "' must look like <category>:<object>");
  return {arg.substr(0, split), arg.substr(split + 1)};
}

Outcome cmd_wedge(const std::vector<std::string>& parts, const std::string& output) {
  WedgeSpec spec;
  for (const auto& arg : parts) {
    const auto [category, object] = split_part(arg);
    auto c = load_category(category, "wedge");
    const auto x = c->find_object(object);
    if (!x) throw io::InputError("unknown object '" + object + "' in " + category);
    spec.parts.push_back({std::move(c), *x});
  }
  Wedge w;
  try {
    w = wedge(spec);
  } catch (const ConstructionError& e) {
    throw io::InputError(e.what());
  }
  io::write_text_file(output, io::to_file_text(io::category_to_json(*w.category)));
  Json payload;
  payload["output"] = output;
  payload["objects"] = dec(w.category->object_count());
  payload["non_identity_morphisms"] = dec(w.category->morphism_count() - w.category->object_count());
  return {{"wedge", parts, Verdict::pass, std::move(payload), {}}, exit_success};
}

Outcome cmd_example(const std::string& name, const std::string& output) {
  Example example;
  try {
    example = builtin_example(name);
  } catch (const std::out_of_range& e) {
    throw io::InputError(e.what());
  }
  Json payload;
  payload["output"] = output;
  if (const auto* c = std::get_if<CategoryPtr>(&example)) {
    io::write_text_file(output, io::to_file_text(io::category_to_json(**c)));
    payload["kind"] = "category";
  } else {
    io::write_text_file(output, io::to_file_text(io::functor_to_json(std::get<CategoryFunctor>(example))));
    payload["kind"] = "functor";
  }
  return {{"example", {name}, Verdict::pass, std::move(payload), {}}, exit_success};
}

Outcome cmd_random(std::uint64_t seed, const std::string& output) {
  const auto p = random_covering(seed);
  const auto text = io::to_file_text(io::functor_to_json(p));
  Json payload;
  payload["seed"] = std::to_string(seed);
  if (!output.empty()) {
    io::write_text_file(output, text);
    payload["output"] = output;
  } else {
    payload["functor"] = io::functor_to_json(p);
  }
  return {{"random", {}, Verdict::pass, std::move(payload), {}}, exit_success};
}

Outcome cmd_selftest(std::uint64_t seed, std::size_t cases) {
  SelftestOptions options;
  options.first_seed = seed;
  options.cases = cases;
  const auto results = run_selftest(options);
  std::size_t failures = 0;
  std::vector<std::string> diagnostics;
  for (const auto& r : results)
    if (!r.passed()) {
      ++failures;
      for (const auto& f : r.failures) diagnostics.push_back("seed " + std::to_string(r.seed) + ": " + f);
    }
  Json payload;
  payload["first_seed"] = std::to_string(seed);
  payload["cases"] = dec(cases);
  payload["failures"] = dec(failures);
  return {{"selftest", {}, failures ? Verdict::fail : Verdict::pass, std::move(payload), std::move(diagnostics)},
          failures ? exit_math_failure : exit_success};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories, ramified coverings and their invariants", "ramcov"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON report");

  std::string input, base, output;
  std::size_t length = 0, order = default_series_order, n_max = 4, cases = 100;
  std::uint64_t seed = 0;
  bool nondegenerate = false, list = false, unramified = false;
  std::vector<std::string> parts;
  std::function<Outcome()> action;

  auto* validate = app.add_subcommand("validate", "Validate a category file");
  validate->add_option("category", input, "Category file or builtin:<name>")->required();
  validate->callback([&] { action = [&] { return cmd_validate(input); }; });

  auto* chains = app.add_subcommand("chains", "Count or list chains of the nerve");
  chains->add_option("category", input)->required();
  chains->add_option("--n", length, "Chain length")->required();
  chains->add_flag("--nondegenerate", nondegenerate, "Only chains of non-identity morphisms");
  chains->add_option("--base", base, "Only chains starting at this object");
  chains->add_flag("--list", list, "List the chains");
  chains->callback([&] { action = [&] { return cmd_chains(input, length, nondegenerate, base, list); }; });

  auto* euler = app.add_subcommand("euler", "Series Euler characteristic");
  euler->add_option("category", input)->required();
  euler->callback([&] { action = [&] { return cmd_euler(input); }; });

  auto* zeta = app.add_subcommand("zeta", "Truncated zeta function");
  zeta->add_option("category", input)->required();
  zeta->add_option("--order", order, "Truncation order");
  zeta->callback([&] { action = [&] { return cmd_zeta(input, order); }; });

  auto* covering = app.add_subcommand("covering", "Decide whether a functor is a ramified covering");
  covering->add_option("functor", input, "Functor file or builtin:<name>")->required();
  covering->add_flag("--unramified", unramified, "Check the unramified condition instead");
  covering->callback([&] { action = [&] { return cmd_covering(input, unramified); }; });

  auto* lemmas = app.add_subcommand("lemmas", "Check the structural consequences of being a covering");
  lemmas->add_option("functor", input)->required();
  lemmas->callback([&] { action = [&] { return cmd_lemmas(input); }; });

  auto* rh = app.add_subcommand("rh", "Check the Riemann-Hurwitz formula");
  rh->add_option("functor", input)->required();
  rh->callback([&] { action = [&] { return cmd_rh(input); }; });

  auto* zetadiv = app.add_subcommand("zetadiv", "Check zeta-function divisibility");
  zetadiv->add_option("functor", input)->required();
  zetadiv->add_option("--order", order, "Truncation order");
  zetadiv->callback([&] { action = [&] { return cmd_zetadiv(input, order); }; });

  auto* dinverse = app.add_subcommand("dinverse", "Check lift counts and face/degeneracy compatibility");
  dinverse->add_option("functor", input)->required();
  dinverse->add_option("--nmax", n_max, "Longest base chain checked");
  dinverse->callback([&] { action = [&] { return cmd_dinverse(input, n_max); }; });

  auto* wedge_cmd = app.add_subcommand("wedge", "Wedge categories at preinitial objects");
  wedge_cmd->add_option("parts", parts, "<category>:<object> ...")->required();
  wedge_cmd->add_option("-o,--output", output, "Output category file")->required();
  wedge_cmd->callback([&] { action = [&] { return cmd_wedge(parts, output); }; });

  auto* example = app.add_subcommand("example", "Write a builtin example");
  example->add_option("name", input)->required();
  example->add_option("-o,--output", output, "Output file")->required();
  example->callback([&] { action = [&] { return cmd_example(input, output); }; });

  auto* random = app.add_subcommand("random", "Write a seeded random ramified covering");
  random->add_option("--seed", seed, "Seed");
  random->add_option("-o,--output", output, "Output functor file (default: embed in the report)");
  random->callback([&] { action = [&] { return cmd_random(seed, output); }; });

  auto* selftest = app.add_subcommand("selftest", "Fuzz every theorem checker on random coverings");
  selftest->add_option("--seed", seed, "First seed");
  selftest->add_option("--cases", cases, "Number of coverings");
  selftest->callback([&] { action = [&] { return cmd_selftest(seed, cases); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  try {
    const Outcome outcome = action();
    out << outcome.report.serialize(pretty);
    return outcome.status;
  } catch (const RejectedInput& rejected) {
    out << rejected.outcome.report.serialize(pretty);
    return rejected.outcome.status;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}

}  // namespace ramcov::cli
