#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spiraldet/spiraldet.hpp"

namespace spiraldet::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Gen: return "gen";
    case Command::Det: return "det";
    case Command::Verify: return "verify";
    case Command::Reduce: return "reduce";
    case Command::Seq: return "seq";
    case Command::Funceq: return "funceq";
    case Command::Bench: return "bench";
  }
  return "?";
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Latex: return "latex";
    case Format::Text: return "text";
  }
  return "?";
}

json config_json(const CliConfig& c) {
  return {{"command", command_name(c.command)},
          {"n", c.n},
          {"n_max", c.n_max},
          {"family", c.family},
          {"theorem", c.theorem},
          {"seq", c.seq},
          {"relation", c.relation.empty() ? "all" : c.relation},
          {"kind", c.kind},
          {"alpha", c.alpha},
          {"imaginary", c.imaginary},
          {"c1", c.c1},
          {"c2", c.c2},
          {"trials", c.trials},
          {"seed", c.seed},
          {"tolerance", c.tolerance},
          {"format", format_name(c.format)}};
}

std::string envelope(const CliConfig& c, json report) {
  json doc = {{"version", "1"},
              {"config", config_json(c)},
              {"report", std::move(report)}};
  return doc.dump(2) + "\n";
}

/// Emission result: text plus whether every embedded check passed.
struct Output {
  std::string text;
  bool ok = true;
};

Family require_family(const CliConfig& c) {
  auto f = parse_family(c.family);
  if (!f) throw UsageError("unknown family '" + c.family + "'");
  return *f;
}

void require_format(const CliConfig& c, std::initializer_list<Format> allowed) {
  if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end()) {
    throw UsageError("format '" + std::string(format_name(c.format)) +
                     "' is not supported by '" +
                     std::string(command_name(c.command)) + "'");
  }
}

template <class T, class F>
std::string grid(const SquareMatrix<T>& m, F&& cell, char sep) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += sep;
      out += cell(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

SquareMatrix<LaurentPoly> symbolic_matrix(const CliConfig& c, Family f) {
  switch (f) {
    case Family::Additive: return build_additive_poly(c.n);
    case Family::QPower: return build_qpower(c.n);
    case Family::Bracket: return build_bracket(c.n);
    case Family::GeneralizedBracket:
      return build_generalized_bracket(random_generalized_spec(c.n, c.seed));
  }
  throw UsageError("unknown family");
}

// ---------------------------------------------------------------------------

Output cmd_gen(const CliConfig& c) {
  const Family f = require_family(c);
  if (f == Family::Additive) {
    const auto m = build_additive(c.n);
    switch (c.format) {
      case Format::Json: return {envelope(c, matrix_to_json(m, "additive"))};
      case Format::Latex: return {to_latex(m)};
      case Format::Text:
        return {grid(m, [](const LinearForm& l) { return l.to_latex(); }, '\t')};
      case Format::Csv:
        return {grid(m, [](const LinearForm& l) { return csv_quote(l.to_latex()); },
                     ',')};
    }
  }
  const auto m = symbolic_matrix(c, f);
  switch (c.format) {
    case Format::Json:
      return {envelope(c, matrix_to_json(m, family_name(f)))};
    case Format::Latex: return {to_latex(m)};
    case Format::Text:
      return {grid(m, [](const LaurentPoly& p) { return to_string(p); }, '\t')};
    case Format::Csv:
      return {grid(m, [](const LaurentPoly& p) { return csv_quote(to_string(p)); },
                   ',')};
  }
  return {};
}

Output cmd_det(const CliConfig& c) {
  require_format(c, {Format::Json, Format::Text});
  const Family f = require_family(c);
  SquareMatrix<LaurentPoly> m;
  std::string check_name;
  LaurentPoly expected;
  switch (f) {
    case Family::Additive:
      m = build_additive_poly(c.n);
      expected = closed_form(Theorem::Additive, c.n);
      check_name = "closed_form_match";
      break;
    case Family::QPower:
      m = build_qpower(c.n);
      expected = closed_form(Theorem::QPower, c.n);
      check_name = "closed_form_match";
      break;
    case Family::Bracket:
      m = build_bracket(c.n, Horizontal::Tied);
      expected = closed_form(Theorem::Bracket, c.n);
      check_name = "closed_form_match";
      break;
    case Family::GeneralizedBracket:
      m = symbolic_matrix(c, f);
      expected = wedge_eliminate(m).factorization.product();
      check_name = "wedge_match";
      break;
  }
  const LaurentPoly d = det_cofactor(m);
  const bool match = d == expected;
  if (c.format == Format::Text) return {to_string(d) + "\n", match};
  json report = {{"determinant", to_json(d)},
                 {"string", to_string(d)},
                 {"terms", d.size()},
                 {check_name, match}};
  if (f == Family::Bracket) report["substitution"] = "y:=x";
  return {envelope(c, std::move(report)), match};
}

Output cmd_verify(const CliConfig& c) {
  require_format(c, {Format::Json, Format::Text});
  if (c.theorem < 1 || c.theorem > 3) throw UsageError("--theorem must be 1, 2 or 3");
  const auto t = static_cast<Theorem>(c.theorem);
  constexpr std::size_t kExactLimit = 6;

  json exact = json::array();
  std::size_t failures = 0;
  VerificationReport randomized;
  randomized.seed = c.seed;
  for (std::size_t n = 1; n <= c.n_max; ++n) {
    if (n <= kExactLimit) {
      const bool ok = theorem_holds_exactly(t, n);
      failures += ok ? 0 : 1;
      exact.push_back({{"n", n}, {"match", ok}});
    } else {
      randomized.absorb(verify_theorem_random(t, n, c.trials, c.seed + n));
    }
  }
  failures += randomized.failures;
  const bool ok = failures == 0;
  if (c.format == Format::Text) {
    return {"theorem " + std::to_string(c.theorem) + ": " +
                std::to_string(failures) + " failures\n",
            ok};
  }
  return {envelope(c, {{"exact", exact},
                       {"randomized", to_json(randomized)},
                       {"failures", failures}}),
          ok};
}

json reduction_json(const ReductionData& r) {
  json border = json::array();
  for (const auto& e : r.border) border.push_back(to_string(e));
  return {{"size", r.size},
          {"A", {{"numerator", to_string(r.centre.numerator)},
                 {"denominator", to_string(r.centre.denominator)}}},
          {"B", to_string(r.up)},
          {"C", to_string(r.down)},
          {"scalar_factor", to_string(r.scalar_factor)},
          {"D", to_string(r.difference)},
          {"border", border}};
}

Output cmd_reduce(const CliConfig& c) {
  require_format(c, {Format::Json, Format::Text});
  const Family f = require_family(c);
  if (f == Family::QPower) {
    const VerificationReport r = qreduction_check(c.n);
    if (c.format == Format::Text) {
      return {"qreduction n=" + std::to_string(c.n) + ": " +
                  std::to_string(r.failures) + " failures\n",
              r.ok()};
    }
    return {envelope(c, {{"qreduction", to_json(r)}}), r.ok()};
  }
  if (f != Family::Additive) {
    throw UsageError("reduce supports --family additive or qpower");
  }
  const auto n = static_cast<std::int64_t>(c.n);
  const std::size_t trials = c.trials_set ? c.trials : 50;
  json steps = json::array();
  bool ok = true;
  std::string text;
  for (const ReductionData& r : {reduce_odd(n), reduce_even(n)}) {
    const auto by_matrix = check_recurrence(r, trials, c.seed);
    const auto by_formula = check_recurrence_closed_form(r, trials, c.seed);
    ok = ok && by_matrix.ok() && by_formula.ok();
    json j = reduction_json(r);
    j["check_matrices"] = to_json(by_matrix);
    j["check_closed_forms"] = to_json(by_formula);
    steps.push_back(std::move(j));
    text += "size " + std::to_string(r.size) + ": A = (" +
            to_string(r.centre.numerator) + ")/(" +
            to_string(r.centre.denominator) + "), B = " + to_string(r.up) +
            ", C = " + to_string(r.down) + ", failures " +
            std::to_string(by_matrix.failures + by_formula.failures) + "\n";
  }
  if (c.format == Format::Text) return {text, ok};
  return {envelope(c, {{"steps", steps}}), ok};
}

Output cmd_seq(const CliConfig& c) {
  require_format(c, {Format::Json, Format::Csv, Format::Text});
  const auto id = parse_sequence(c.seq);
  if (!id) throw UsageError("unknown sequence '" + c.seq + "'");
  const auto rows = sequence_table(*id, c.n_max);
  const bool ok = std::all_of(rows.begin(), rows.end(),
                              [](const SequenceRow& r) { return r.match; });
  if (c.format != Format::Json) return {sequence_csv(rows), ok};
  json terms = json::array();
  for (const auto& r : rows) {
    terms.push_back({{"n", r.n},
                     {"term", term_to_string(r.term)},
                     {"oracle", term_to_string(r.oracle)},
                     {"match", r.match}});
  }
  return {envelope(c, {{"terms", terms},
                       {"verification", to_json(verify_sequence(*id, c.n_max))}}),
          ok};
}

Output cmd_funceq(const CliConfig& c) {
  require_format(c, {Format::Json, Format::Text});
  using namespace funceq;
  FamilySpec spec;
  if (c.kind == "zero") {
    spec = FamilySpec::zero();
  } else if (c.kind == "logaffine") {
    spec = FamilySpec::log_affine(c.c1, c.c2);
  } else if (c.kind == "power") {
    spec = c.imaginary ? FamilySpec::imaginary_power(c.alpha, c.c1, c.c2)
                       : FamilySpec::power(c.alpha, c.c1, c.c2);
  } else {
    throw UsageError("unknown kind '" + c.kind + "'");
  }
  std::vector<Relation> relations;
  if (c.relation.empty()) {
    relations.assign(std::begin(kAllRelations), std::end(kAllRelations));
  } else {
    try {
      relations.push_back(parse_relation(c.relation));
    } catch (const UnknownRelation& e) {
      throw UsageError(e.what());
    }
  }
  const std::size_t samples = c.trials_set ? c.trials : 1000;
  const auto tol = static_cast<Real>(c.tolerance);

  bool ok = true;
  json reports = json::array();
  std::string text;
  for (Relation r : relations) {
    const ResidualReport rep = check_relation(spec, r, samples, c.seed);
    const bool pass = rep.max_residual < tol;
    ok = ok && pass;
    json j = to_json(rep);
    j["pass"] = pass;
    reports.push_back(std::move(j));
    std::ostringstream line;
    line << relation_id(r) << " max_residual " << std::setprecision(6)
         << static_cast<double>(rep.max_residual) << (pass ? " ok" : " FAIL")
         << "\n";
    text += line.str();
  }
  json classified;
  try {
    const FamilySpec fit = classify(
        [&spec](Real x) { return eval_g(spec, x); }, samples, c.seed, tol);
    classified = {{"kind", kind_name(fit.kind)},
                  {"alpha", static_cast<double>(fit.alpha)},
                  {"imaginary", fit.imaginary}};
  } catch (const Unclassifiable& e) {
    classified = {{"error", e.what()}};
  }
  if (c.format == Format::Text) return {text, ok};
  return {envelope(c, {{"relations", reports}, {"classified", classified}}), ok};
}

std::string hash_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << h;
  return o.str();
}

template <class F>
std::pair<std::int64_t, Rational> time_median(std::size_t reps, F&& f) {
  std::vector<std::int64_t> ns;
  Rational result;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    result = f();
    const auto t1 = std::chrono::steady_clock::now();
    ns.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  std::sort(ns.begin(), ns.end());
  return {ns[ns.size() / 2], result};
}

Output cmd_bench(const CliConfig& c) {
  require_format(c, {Format::Json, Format::Csv, Format::Text});
  const Family f = require_family(c);
  Theorem t;
  switch (f) {
    case Family::Additive: t = Theorem::Additive; break;
    case Family::QPower: t = Theorem::QPower; break;
    case Family::Bracket: t = Theorem::Bracket; break;
    default: throw UsageError("bench supports additive, qpower or bracket");
  }
  const std::size_t reps = c.trials_set ? std::max<std::size_t>(c.trials, 1) : 5;

  struct Row {
    std::size_t n;
    std::string method;
    std::int64_t median_ns;
    std::string hash;
  };
  std::vector<Row> rows;
  bool agree = true;
  for (std::size_t n = 1; n <= c.n_max; ++n) {
    const FactoredForm closed = closed_form_factors(t, n);
    const EvalPoint pt = sample_point(c.seed, n, closed.half_exponent_vars());
    const auto symbolic = theorem_matrix(t, n);

    std::vector<Row> here;
    if (n <= kCofactorGuard) {
      auto [ns, v] = time_median(
          reps, [&] { return evaluate(det_cofactor(symbolic), pt); });
      here.push_back({n, "cofactor", ns, hash_hex(to_string(v))});
    }
    {
      auto [ns, v] = time_median(reps, [&] {
        return det_bareiss_rational(specialize(symbolic, pt));
      });
      here.push_back({n, "bareiss", ns, hash_hex(to_string(v))});
    }
    {
      auto [ns, v] = time_median(reps, [&] { return closed.evaluate(pt); });
      here.push_back({n, "closed_form", ns, hash_hex(to_string(v))});
    }
    for (const auto& r : here) agree = agree && r.hash == here.front().hash;
    rows.insert(rows.end(), here.begin(), here.end());
  }

  if (c.format == Format::Json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"method", r.method},
                   {"median_ns", r.median_ns},
                   {"result_hash", r.hash}});
    }
    return {envelope(c, {{"rows", j}, {"agree", agree}}), agree};
  }
  std::string out = "n,method,median_ns,result_hash\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + r.method + "," +
           std::to_string(r.median_ns) + "," + r.hash + "\n";
  }
  return {out, agree};
}

Output dispatch(const CliConfig& c) {
  switch (c.command) {
    case Command::Gen: return cmd_gen(c);
    case Command::Det: return cmd_det(c);
    case Command::Verify: return cmd_verify(c);
    case Command::Reduce: return cmd_reduce(c);
    case Command::Seq: return cmd_seq(c);
    case Command::Funceq: return cmd_funceq(c);
    case Command::Bench: return cmd_bench(c);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::string usage() {
  return "usage: spiraldet <gen|det|verify|reduce|seq|funceq|bench> "
         "[--n INT] [--n-max INT] "
         "[--family additive|qpower|bracket|generalized] [--theorem 1|2|3] "
         "[--seq inward|outward|qspiral] "
         "[--relation 6.1|6.14|6.15|6.16|6.17] [--alpha FLOAT] [--imaginary] "
         "[--kind zero|logaffine|power] [--c1 FLOAT] [--c2 FLOAT] "
         "[--trials INT] [--seed INT] [--tolerance FLOAT] "
         "[--format json|csv|latex|text] [--out PATH]\n";
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  std::string command;
  std::string format = "json";

  CLI::App app{"Spiral matrix determinant toolkit", "spiraldet"};
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(
          {"gen", "det", "verify", "reduce", "seq", "funceq", "bench"}));
  app.add_option("--n", cfg.n, "Matrix size")->check(CLI::Range(1, 64));
  app.add_option("--n-max", cfg.n_max, "Largest size / sequence length")
      ->check(CLI::Range(1, 64));
  app.add_option("--family", cfg.family, "Spiral family")
      ->check(CLI::IsMember({"additive", "qpower", "bracket", "generalized"}));
  app.add_option("--theorem", cfg.theorem, "Theorem to verify")
      ->check(CLI::Range(1, 3));
  app.add_option("--seq", cfg.seq, "Sequence")
      ->check(CLI::IsMember({"inward", "outward", "qspiral"}));
  app.add_option("--relation", cfg.relation, "Functional relation");
  app.add_option("--kind", cfg.kind, "Function family")
      ->check(CLI::IsMember({"zero", "logaffine", "power"}));
  app.add_option("--alpha", cfg.alpha, "Exponent (or t when imaginary)");
  app.add_flag("--imaginary", cfg.imaginary, "Purely imaginary exponent");
  app.add_option("--c1", cfg.c1, "Coefficient c1");
  app.add_option("--c2", cfg.c2, "Coefficient c2");
  auto* trials = app.add_option("--trials", cfg.trials, "Trials / samples")
                     ->check(CLI::PositiveNumber);
  auto* seed = app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--tolerance", cfg.tolerance, "Residual tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
  app.add_option("--out", cfg.out_path, "Output path (default stdout)");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << usage();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return 2;
  }

  cfg.trials_set = trials->count() > 0;
  if (seed->count() == 0) {
    if (const char* env = std::getenv("SPIRALDET_SEED")) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        err << "error: SPIRALDET_SEED is not an integer\n" << usage();
        return 2;
      }
    }
  }
  const std::vector<std::string> names = {"gen",    "det",    "verify", "reduce",
                                          "seq",    "funceq", "bench"};
  cfg.command = static_cast<Command>(
      std::find(names.begin(), names.end(), command) - names.begin());
  const std::vector<std::string> formats = {"json", "csv", "latex", "text"};
  cfg.format = static_cast<Format>(
      std::find(formats.begin(), formats.end(), format) - formats.begin());

  Output result;
  try {
    result = dispatch(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return 2;
  } catch (const SizeGuard& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return 2;
    }
    file << result.text;
  }
  return result.ok ? 0 : 1;
}

}  // namespace spiraldet::cli
