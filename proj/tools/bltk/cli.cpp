#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bltk/errors.hpp"
#include "bltk/evaluate.hpp"
#include "bltk/finite_algebra.hpp"
#include "bltk/formula.hpp"
#include "bltk/grid.hpp"
#include "bltk/interval_ball.hpp"
#include "bltk/metric.hpp"
#include "bltk/norms.hpp"
#include "bltk/topology.hpp"
#include "output.hpp"

namespace bltk::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything a subcommand prints, in both formats.
struct Result {
  Json json = Json::object();
  std::string text;
  bool passed = true;

  void section(const std::string& name, Report report, const OutputOptions& o, std::string note = {}) {
    if (o.approx) report = approximate(std::move(report));
    passed = passed && all_passed(report);
    text += "== " + name + " ==\n";
    if (!note.empty()) text += "  note: " + note + "\n";
    text += to_text(report);
    Json s;
    s["name"] = name;
    if (!note.empty()) s["note"] = note;
    s["laws"] = to_json(report);
    json["sections"].push_back(std::move(s));
  }
};

long default_grid() {
  const char* env = std::getenv(kGridEnv);
  if (env == nullptr || *env == '\0') return GridSpec::kDefaultDenominator;
  long value = 0;
  std::istringstream in(env);
  if (!(in >> value) || !in.eof())
    throw UsageError(std::string(kGridEnv) + " must be an integer, got '" + env + "'");
  return value;
}

GridSpec make_grid(const std::optional<long>& opt) {
  GridSpec g{opt.value_or(default_grid())};
  g.validate();
  return g;
}

NormKind kind_from(const std::string& name) {
  if (auto k = parse_norm_kind(name)) return *k;
  throw UsageError("unknown norm family '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- norms

struct NormsArgs {
  std::string family;
  bool all = false;
  std::optional<long> grid;
  bool residuum = false;
};

Result cmd_norms(const NormsArgs& a, const OutputOptions& o) {
  if (a.all == !a.family.empty()) throw UsageError("norms: give exactly one of --family or --all");
  std::vector<NormKind> kinds;
  if (a.all) kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
  else kinds.push_back(kind_from(a.family));
  if (!a.all && a.residuum && kinds.front() == NormKind::Drastic)
    throw Error(ErrorCode::DrasticNotResiduated, "the drastic norms have no residuum");

  const GridSpec g = make_grid(a.grid);
  Result res;
  res.json["command"] = "norms";
  res.json["grid"] = g.denominator;
  res.text = "grid 1/" + std::to_string(g.denominator) + "\n";
  for (NormKind k : kinds) {
    for (NormFamily f : {t_norm(k), s_norm(k)}) {
      Report r = norm_axioms_check(f, g);
      r.push_back(duality_check(f, g));
      std::string note;
      if (f.residuated()) {
        r.push_back(adjointness_check(f, g));
        if (a.residuum) r.push_back(residuum_oracle_check(f, g));
      } else {
        note = f.side == NormSide::TNorm
                   ? "not residuated; T_d(x, y) = min(x, y) if max(x, y) = 1, else 0"
                   : "not residuated; S_d(x, y) = max(x, y) if min(x, y) = 0, else 1";
      }
      res.section(to_string(f), std::move(r), o, note);
    }
  }
  if (a.all) res.section("ordering", ordering_check(g), o);
  return res;
}

// ---------------------------------------------------------------- metric

struct MetricArgs {
  std::string family;
  std::optional<long> grid;
  long grid4 = 16;
  long grid_pairs = 4;
  std::string laws;
  std::string ball;
};

/// "d1..d15,dbl3" -> {"D1", ..., "D15", "DBL3"}.
std::set<std::string> parse_law_selection(const std::string& selection) {
  auto parse_id = [](std::string tok) -> std::pair<std::string, int> {
    for (auto& c : tok) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::size_t digits = tok.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0) throw UsageError("bad law id '" + tok + "'");
    const std::string prefix = tok.substr(0, digits);
    const std::string number = tok.substr(digits);
    if (number.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad law id '" + tok + "'");
    const int n = std::stoi(number);
    if (prefix == "d" && n >= 1 && n <= 15) return {"D", n};
    if (prefix == "dbl" && n >= 1 && n <= 5) return {"DBL", n};
    throw UsageError("unknown law '" + tok + "' (expected d1..d15 or dbl1..dbl5)");
  };
  std::set<std::string> out;
  std::stringstream ss(selection);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "all") {
      for (int i = 1; i <= 15; ++i) out.insert("D" + std::to_string(i));
      for (int i = 1; i <= 5; ++i) out.insert("DBL" + std::to_string(i));
      continue;
    }
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const auto [p1, lo] = parse_id(item.substr(0, dots));
      const auto [p2, hi] = parse_id(item.substr(dots + 2));
      if (p1 != p2 || lo > hi) throw UsageError("bad law range '" + item + "'");
      for (int i = lo; i <= hi; ++i) out.insert(p1 + std::to_string(i));
    } else {
      const auto [p, n] = parse_id(item);
      out.insert(p + std::to_string(n));
    }
  }
  if (out.empty()) throw UsageError("--laws selects nothing");
  return out;
}

std::string interval_text(const Interval& i, const OutputOptions& o) {
  if (i.lo == i.hi) return "{" + render(i.lo, o) + "}";
  return std::string(i.lo_closed ? "[" : "(") + render(i.lo, o) + ", " + render(i.hi, o) +
         (i.hi_closed ? "]" : ")");
}

Result cmd_metric(const MetricArgs& a, const OutputOptions& o) {
  const SAlgebra alg(kind_from(a.family));
  const GridSpec g = make_grid(a.grid);
  Result res;
  res.json["command"] = "metric";
  res.json["family"] = to_string(alg.family());
  res.json["grid"] = g.denominator;

  if (!a.ball.empty()) {
    const auto comma = a.ball.find(',');
    if (comma == std::string::npos) throw UsageError("--ball expects CENTER,RADIUS");
    const UnitValue center = UnitValue::parse(a.ball.substr(0, comma));
    const UnitValue radius = UnitValue::parse(a.ball.substr(comma + 1));
    const IntervalBall ball(alg, center, radius);
    std::string desc;
    Json pieces = Json::array();
    for (const auto& piece : ball.closed_form()) {
      desc += (desc.empty() ? "" : " u ") + interval_text(piece, o);
      pieces.push_back({{"lo", render(piece.lo, o)},
                        {"hi", render(piece.hi, o)},
                        {"lo_closed", piece.lo_closed},
                        {"hi_closed", piece.hi_closed}});
    }
    res.json["ball"] = {{"center", render(center, o)}, {"radius", render(radius, o)},
                        {"text", desc}, {"pieces", pieces}};
    res.text = "N(" + render(center, o) + ", " + render(radius, o) + ") = " + desc + "\n";
    res.section("ball", {interval_ball_check(ball, g)}, o);
    return res;
  }

  if (!a.laws.empty()) {
    const auto wanted = parse_law_selection(a.laws);
    Report all = dbl_axioms_check(alg, g);
    append(all, dbl_laws_check(alg, g));
    Report picked;
    for (auto& l : all)
      if (wanted.contains(l.law)) picked.push_back(std::move(l));
    res.section(to_string(alg.family()) + " laws", std::move(picked), o);
    return res;
  }

  const GridSpec g4 = make_grid(a.grid4);
  const GridSpec gp = make_grid(a.grid_pairs);
  res.json["grid4"] = g4.denominator;
  res.json["grid_pairs"] = gp.denominator;
  Report m{d_star_closed_form_check(alg, g)};
  append(m, metric_axioms_check(alg, g));
  res.section("metric (grid 1/" + std::to_string(g.denominator) + ")", std::move(m), o);
  res.section("pair metric (grid 1/" + std::to_string(gp.denominator) + ")",
              pair_metric_axioms_check(alg, gp), o);
  res.section("continuity (grid 1/" + std::to_string(g4.denominator) + ")",
              continuity_inequalities_check(alg, g4), o);
  return res;
}

// ---------------------------------------------------------------- algebra

struct AlgebraArgs {
  std::string file;
  std::size_t bound = kDefaultEnumerationBound;
  std::string output;
};

Json set_json(const FiniteAlgebra& alg, ElementSet s) {
  Json arr = Json::array();
  for (FiniteAlgebra::Index i = 0; i < static_cast<FiniteAlgebra::Index>(alg.size()); ++i)
    if ((s >> i) & 1U) arr.push_back(alg.label(i));
  return arr;
}

Result algebra_header(const FiniteAlgebra& alg, const std::string& sub, const AlgebraArgs& a) {
  Result res;
  res.json["command"] = "algebra " + sub;
  res.json["file"] = a.file;
  res.json["signature"] = to_string(alg.signature());
  res.json["size"] = alg.size();
  res.text = a.file + ": " + std::string(to_string(alg.signature())) + "-algebra, " +
             std::to_string(alg.size()) + " elements\n";
  return res;
}

Result cmd_algebra_check(const AlgebraArgs& a, const OutputOptions& o) {
  const FiniteAlgebra alg = load_algebra_file(a.file);
  Result res = algebra_header(alg, "check", a);
  res.section("axioms", check_axioms(alg), o);
  res.section("derived laws", check_derived_laws(alg), o);
  res.section("radius lemmas", check_radius_lemmas(alg), o);
  return res;
}

Result cmd_algebra_topology(const AlgebraArgs& a, const OutputOptions& o) {
  const FiniteAlgebra alg = load_algebra_file(a.file);
  Result res = algebra_header(alg, "topology", a);
  const Topology t = enumerate_topology(alg, a.bound);
  Json opens = Json::array();
  for (ElementSet s : t.opens) opens.push_back(set_json(alg, s));
  res.json["open_sets"] = std::move(opens);
  res.json["count"] = t.opens.size();
  res.json["discrete"] = t.discrete();
  res.text += std::to_string(t.opens.size()) + " open sets" + (t.discrete() ? " (discrete)" : "") +
              ":\n" + export_topology(alg, t);
  res.section("topology axioms", topology_axioms_check(alg, t), o);
  res.section("continuity", verify_operation_continuity(alg, a.bound), o);
  return res;
}

Result cmd_algebra_dualize(const AlgebraArgs& a, const OutputOptions& o) {
  const FiniteAlgebra dual = dualize_algebra(load_algebra_file(a.file));
  const std::string doc = save_algebra(dual);
  Result res;
  res.json["command"] = "algebra dualize";
  res.json["file"] = a.file;
  if (!a.output.empty()) {
    std::ofstream out(a.output, std::ios::binary);
    if (!(out << doc)) throw UsageError("cannot write '" + a.output + "'");
    res.json["output"] = a.output;
    res.text = "wrote " + a.output + "\n";
  } else {
    res.json["algebra"] = Json::parse(doc);
    res.text = doc;
  }
  (void)o;
  return res;
}

Result cmd_algebra_radii(const AlgebraArgs& a, const OutputOptions& o) {
  const FiniteAlgebra alg = load_algebra_file(a.file);
  Result res = algebra_header(alg, "radii", a);
  const RadiusSet rs = admissible_radii(alg);
  const bool bl = alg.signature() == Signature::BL;
  res.json["relation"] = bl ? "strongly-less-than-1" : "positive";
  res.json["radii"] = set_json(alg, rs.mask);
  res.text += std::string(bl ? "strongly less than 1: " : "positive: ") + format_set(alg, rs.mask) + "\n";
  res.section("radius lemmas", check_radius_lemmas(alg), o);
  return res;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string formula;
  std::string formula_file;
  std::string t_algebra;
  std::string algebra;
  std::string assign;
  std::string valuation;
  bool sweep = false;
  std::optional<long> sweep_grid;
  std::string expect;
};

template <class B>
void eval_with(const B& backend, const Formula& f, std::span<const typename B::element_type> domain,
               const EvalArgs& a, const OutputOptions& o, Result& res) {
  using E = typename B::element_type;
  auto show = [&](const E& v) {
    if constexpr (std::is_same_v<E, UnitValue>) return render(v, o);
    else return backend.label(v);
  };
  std::optional<E> expected;
  if (!a.expect.empty()) expected = backend.parse_value(a.expect);

  if (a.sweep) {
    const auto names = atoms_of(f);
    const Formula core = desugar(f);
    std::vector<E> values;
    std::size_t count = 0;
    for_each_valuation<B>(names, domain, [&](const Valuation<B>& v) {
      ++count;
      E x = evaluate(core, backend, v);
      if (std::find(values.begin(), values.end(), x) == values.end()) values.push_back(x);
    });
    Json vals = Json::array();
    for (const auto& v : values) vals.push_back(show(v));
    res.json["valuations"] = count;
    res.json["constant"] = values.size() == 1;
    if (values.size() == 1) res.json["value"] = show(values.front());
    res.json["values"] = std::move(vals);
    if (values.size() == 1) {
      res.text += "constant " + show(values.front()) + " over " + std::to_string(count) + " valuations\n";
    } else {
      std::string listed;
      for (const auto& v : values) listed += (listed.empty() ? "" : ", ") + show(v);
      res.text += std::to_string(values.size()) + " distinct values over " + std::to_string(count) +
                  " valuations: " + listed + "\n";
    }
    if (expected) res.section("expect", {check_constant("expect", f, backend, domain, *expected)}, o);
    return;
  }

  std::map<std::string, std::string, std::less<>> raw;
  if (!a.valuation.empty()) raw = parse_valuation_file(read_file(a.valuation));
  if (!a.assign.empty())
    for (auto& [k, v] : parse_assignments(a.assign)) raw[k] = v;
  const Valuation<B> val = bind_valuation(backend, raw);
  const E value = evaluate(f, backend, val);
  res.json["value"] = show(value);
  res.text += show(value) + "\n";
  if (expected) {
    res.json["expected"] = show(*expected);
    res.json["matches"] = value == *expected;
    if (!(value == *expected)) {
      res.passed = false;
      res.text += "expected " + show(*expected) + "\n";
    }
  }
}

Result cmd_eval(const EvalArgs& a, const OutputOptions& o) {
  if (a.formula.empty() == a.formula_file.empty())
    throw UsageError("eval: give exactly one of FORMULA or --formula-file");
  if (a.t_algebra.empty() == a.algebra.empty())
    throw UsageError("eval: give exactly one of --t-algebra or --algebra");
  if (a.sweep && (!a.assign.empty() || !a.valuation.empty()))
    throw UsageError("eval: --sweep cannot be combined with --assign or --valuation");

  const Formula f = parse_formula(a.formula.empty() ? read_file(a.formula_file) : a.formula);
  Result res;
  res.json["command"] = "eval";
  res.json["formula"] = print_formula(f);
  if (!a.t_algebra.empty()) {
    const TAlgebraBackend backend(kind_from(a.t_algebra));
    res.json["t_algebra"] = std::string(to_string(backend.kind()));
    std::vector<UnitValue> domain;
    if (a.sweep) {
      const GridSpec g = make_grid(a.sweep_grid);
      res.json["grid"] = g.denominator;
      domain = g.points();
    }
    eval_with(backend, f, std::span<const UnitValue>(domain), a, o, res);
  } else {
    const FiniteAlgebra alg = load_algebra_file(a.algebra);
    const FiniteBackend backend(alg);
    res.json["algebra"] = a.algebra;
    const FiniteView view(alg);
    eval_with(backend, f, view.elements(), a, o, res);
  }
  return res;
}

void emit(const Result& res, const OutputOptions& o, std::ostream& out) {
  if (o.format == Format::Json) {
    Json j = res.json;
    j["passed"] = res.passed;
    out << j.dump(2) << '\n';
    return;
  }
  out << res.text;
  if (res.json.contains("sections")) out << "result: " << (res.passed ? "PASS" : "FAIL") << '\n';
}

void emit_error(const std::string& kind, const std::string& message, const OutputOptions& o,
                std::ostream& out, std::ostream& err, const SyntaxError* syntax = nullptr) {
  err << "error: " << message << '\n';
  if (o.format != Format::Json) return;
  Json j;
  j["error"]["code"] = kind;
  j["error"]["message"] = message;
  if (syntax != nullptr) {
    j["error"]["line"] = syntax->line();
    j["error"]["column"] = syntax->column();
  }
  out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for t-norms, s-norms, their residua and metrics, finite BL/DBL-algebras, "
               "their ball topologies, and basic-logic formulas.",
               "bltk"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  OutputOptions opts;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--approx", opts.approx, "Print decimal approximations instead of exact rationals");

  NormsArgs na;
  auto* norms = app.add_subcommand("norms", "Check t-norm and s-norm axioms, duality, residua and ordering");
  norms->add_option("--family", na.family, "lukasiewicz, goedel, product or drastic");
  norms->add_flag("--all", na.all, "Every family plus the ordering chains");
  norms->add_option("--grid", na.grid, "Grid denominator (default $BLTK_GRID or 64)");
  norms->add_flag("--residuum", na.residuum, "Also compare closed-form residua against a search oracle");

  MetricArgs ma;
  auto* metric = app.add_subcommand("metric", "Check the residuum metric, its pair metric and balls");
  metric->add_option("--family", ma.family, "lukasiewicz, goedel or product")->required();
  metric->add_option("--grid", ma.grid, "Grid denominator for pairs and triples (default $BLTK_GRID or 64)");
  metric->add_option("--grid4", ma.grid4, "Grid denominator for 4-tuple sweeps")->capture_default_str();
  metric->add_option("--grid-pairs", ma.grid_pairs, "Grid denominator for the pair metric")
      ->capture_default_str();
  metric->add_option("--laws", ma.laws, "Run selected laws instead, e.g. d1..d15,dbl1..dbl5");
  metric->add_option("--ball", ma.ball, "Describe the ball CENTER,RADIUS");

  AlgebraArgs aa;
  auto* algebra = app.add_subcommand("algebra", "Work with a finite algebra file");
  algebra->require_subcommand(1);
  auto* a_check = algebra->add_subcommand("check", "Axioms, derived laws and radius lemmas");
  auto* a_topo = algebra->add_subcommand("topology", "Enumerate the ball topology and check continuity");
  auto* a_dual = algebra->add_subcommand("dualize", "Print the order-dual algebra");
  auto* a_radii = algebra->add_subcommand("radii", "Admissible radii and their lemmas");
  for (auto* sub : {a_check, a_topo, a_dual, a_radii}) {
    sub->fallthrough();
    sub->add_option("FILE", aa.file, "Algebra file")->required()->check(CLI::ExistingFile);
  }
  a_topo->add_option("--bound", aa.bound, "Largest carrier to enumerate exhaustively")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationBound))
      ->capture_default_str();
  a_dual->add_option("-o,--output", aa.output, "Write to a file instead of stdout");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula");
  eval->add_option("FORMULA", ea.formula, "Formula text");
  eval->add_option("--formula-file", ea.formula_file, "Read the formula from a file")->check(CLI::ExistingFile);
  eval->add_option("--t-algebra", ea.t_algebra, "lukasiewicz, goedel or product");
  eval->add_option("--algebra", ea.algebra, "Finite BL-algebra file")->check(CLI::ExistingFile);
  eval->add_option("--assign", ea.assign, "Comma-separated atom=value list");
  eval->add_option("--valuation", ea.valuation, "File of 'atom = value' lines")->check(CLI::ExistingFile);
  auto* sweep = eval->add_option("--sweep", ea.sweep_grid,
                                 "Evaluate under every valuation (grid denominator for t-algebras)");
  sweep->expected(0, 1);
  eval->add_option("--expect", ea.expect, "Exit 1 unless the value (or every value) equals this");
  for (auto* sub : {norms, metric, algebra, eval}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  opts.format = format == "json" ? Format::Json : Format::Text;
  ea.sweep = sweep->count() > 0;

  try {
    Result res;
    if (norms->parsed()) res = cmd_norms(na, opts);
    else if (metric->parsed()) res = cmd_metric(ma, opts);
    else if (a_check->parsed()) res = cmd_algebra_check(aa, opts);
    else if (a_topo->parsed()) res = cmd_algebra_topology(aa, opts);
    else if (a_dual->parsed()) res = cmd_algebra_dualize(aa, opts);
    else if (a_radii->parsed()) res = cmd_algebra_radii(aa, opts);
    else res = cmd_eval(ea, opts);
    emit(res, opts, out);
    return res.passed ? kExitPass : kExitCheckFailed;
  } catch (const SyntaxError& e) {
    emit_error(std::string(to_string(e.code())), e.what(), opts, out, err, &e);
  } catch (const Error& e) {
    emit_error(std::string(to_string(e.code())), e.what(), opts, out, err);
  } catch (const UsageError& e) {
    emit_error("Usage", e.what(), opts, out, err);
  } catch (const std::exception& e) {
    emit_error("Internal", e.what(), opts, out, err);
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace bltk::cli
