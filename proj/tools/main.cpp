#include "goldens.hpp"

#include "limitstab/comparator.hpp"
#include "limitstab/model_io.hpp"
#include "limitstab/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>

using namespace limitstab;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitModel = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset;
  std::string model_path;
  std::string beta;
  std::int64_t n = 0;
  std::string k;
  std::string range;
  std::string format;
  std::string f_class, e_class;
  std::int64_t n_max = 4;
  bool all_walls = false;
};

struct Loaded {
  std::unique_ptr<NumericalThreefold> model;
  OutputFormat format = OutputFormat::Tsv;
};

Loaded load(const Options& opt) {
  Loaded out;
  if (!opt.preset.empty() && !opt.model_path.empty()) throw UsageError("--preset and --model are mutually exclusive");
  if (!opt.preset.empty()) {
    out.model = std::make_unique<NumericalThreefold>(preset_data(opt.preset));
  } else {
    std::string path = opt.model_path;
    if (path.empty()) {
      if (const char* env = std::getenv("LIMITSTAB_MODEL")) path = env;
    }
    if (path.empty()) throw UsageError("no model: pass --preset, --model, or set LIMITSTAB_MODEL");
    const ModelConfig cfg = load_config(path);
    out.model = std::make_unique<NumericalThreefold>(cfg.data);
    out.format = cfg.format;
  }
  if (!opt.format.empty()) out.format = parse_output_format(opt.format);
  return out;
}

CurveClass beta_of(const Options& opt, const NumericalThreefold& X) {
  if (opt.beta.empty()) throw UsageError("--beta is required");
  CurveClass beta = parse_curve_class(opt.beta);
  X.check_rank(beta);
  if (!beta.is_effective() || beta.is_zero()) {
    throw UsageError("--beta must be a nonzero effective class, got " + to_string(beta));
  }
  return beta;
}

std::pair<Rational, Rational> range_of(const Options& opt) {
  if (opt.range.empty()) throw UsageError("--range lo:hi is required");
  const auto colon = opt.range.find(':');
  if (colon == std::string::npos) throw UsageError("--range must look like lo:hi");
  Rational lo = parse_rational(opt.range.substr(0, colon));
  Rational hi = parse_rational(opt.range.substr(colon + 1));
  if (!(lo < hi)) throw UsageError("--range needs lo < hi");
  return {lo, hi};
}

Rational k_of(const Options& opt) {
  if (opt.k.empty()) throw UsageError("--k is required");
  return parse_rational(opt.k);
}

int cmd_walls(const Options& opt) {
  auto m = load(opt);
  auto [lo, hi] = range_of(opt);
  std::cout << walls_tsv(wall_set(*m.model, beta_of(opt, *m.model), lo, hi));
  return 0;
}

int cmd_mu(const Options& opt) {
  auto m = load(opt);
  const CurveClass beta = beta_of(opt, *m.model);
  const PtBounds b = pt_bounds(*m.model, beta, opt.n);
  std::cout << "mu\t" << format_rational(mu_threshold(*m.model, beta, opt.n)) << "\n"
            << "mu_dual\t" << format_rational(mu_threshold(*m.model, beta, -opt.n)) << "\n"
            << "k_pt\t" << format_rational(b.k_pt) << "\n"
            << "k_dual\t" << format_rational(b.k_dual) << "\n";
  return 0;
}

int cmd_compare(const Options& opt) {
  auto m = load(opt);
  if (opt.f_class.empty() || opt.e_class.empty()) throw UsageError("--F and --E are required");
  const ChernCharacter f = parse_chern(opt.f_class);
  const ChernCharacter e = parse_chern(opt.e_class);
  for (const auto* ch : {&f, &e}) {
    if (ch->gamma.size() != m.model->rank()) throw UsageError("class " + format_chern(*ch) + " has the wrong rank");
    if (shape_of(*ch) == ClassShape::Zero) throw UsageError("compare needs nonzero classes");
  }
  const Rational k = k_of(opt);
  const Polynomial w = phase_determinant(*m.model, f, e, k);
  std::cout << "order\t" << to_string(compare_phases(*m.model, f, e, k)) << "\n";
  std::cout << "W\t" << to_string(w) << "\n";
  std::cout << "W_leading\t" << format_rational(w.leading_coeff()) << "\n";
  const ClassShape sf = shape_of(f);
  if ((sf == ClassShape::Sheaf || sf == ClassShape::Point) && shape_of(e) == ClassShape::Pair) {
    std::cout << "closed_form\t" << to_string(compare_phases_closed(*m.model, f, e, k)) << "\n";
    const ClosedFormSides sides = closed_form_sides(*m.model, f, e, k);
    if (sides.point) {
      std::cout << "slope_test\tpoint class\n";
    } else {
      std::cout << "slope_test\t" << format_rational(sides.mu_iomega) << " vs " << format_rational(sides.bound) << "\n";
      std::cout << "tie_break\t" << format_rational(sides.tie_lhs) << " vs " << format_rational(sides.tie_rhs) << "\n";
    }
  }
  return 0;
}

ChamberTable covering_table(CrossingEngine& engine, const CurveClass& beta, std::int64_t n, const Rational& k) {
  const Rational k_pt = pt_bounds(engine.model(), beta, n).k_pt;
  const Rational lo(floor_of(std::min(k_pt, k)) - 1);
  const Rational hi(ceil_of(std::max(k_pt, k)) + 1);
  return engine.chamber_table(beta, n, lo, hi);
}

int cmd_cross(const Options& opt) {
  auto m = load(opt);
  const CurveClass beta = beta_of(opt, *m.model);
  const Rational k = k_of(opt);
  CrossingEngine engine(*m.model);
  const ChamberTable table = covering_table(engine, beta, opt.n, k);
  std::cout << report_text(engine.cross_wall(beta, opt.n, k, table.limit_at(k, WallSide::Left)));
  return 0;
}

int cmd_table(const Options& opt, std::optional<OutputFormat> forced_default) {
  auto m = load(opt);
  const CurveClass beta = beta_of(opt, *m.model);
  auto [lo, hi] = range_of(opt);
  CrossingEngine engine(*m.model);
  const ChamberTable table = engine.chamber_table(beta, opt.n, lo, hi);
  OutputFormat format = m.format;
  if (forced_default && opt.format.empty()) format = *forced_default;
  switch (format) {
    case OutputFormat::Tsv: std::cout << table_tsv(table, !opt.all_walls); break;
    case OutputFormat::Text:
      std::cout << table_text(table);
      for (const auto& r : table.reports) std::cout << report_text(r);
      break;
    case OutputFormat::Svg: std::cout << table_svg(table); break;
  }
  return 0;
}

int cmd_series(const Options& opt) {
  auto m = load(opt);
  const CurveClass beta = beta_of(opt, *m.model);
  CrossingEngine engine(*m.model);
  const PtSymmetryReport rep = engine.pt_symmetry_check(beta, opt.n_max);
  std::cout << "n\tP_n\tP_-n\tcrossing_sum\ttelescoping_defect\trelation_defect\n";
  for (const auto& r : rep.rows) {
    std::cout << r.n << "\t" << format_rational(r.p_n) << "\t" << format_rational(r.p_minus_n) << "\t"
              << format_rational(r.crossing_sum) << "\t" << format_rational(r.telescoping_defect) << "\t"
              << (r.relation_defect ? format_rational(*r.relation_defect) : std::string("n/a")) << "\n";
  }
  for (auto n : rep.skipped) std::cout << "# skipped n=" << n << " (no P seed)\n";
  std::cout << "# laurent";
  for (const auto& [n, v] : rep.laurent) std::cout << " q^" << n << ":" << format_rational(v);
  std::cout << "\n# consistent\t" << (rep.consistent() ? "yes" : "no") << "\n";
  return rep.consistent() ? 0 : kExitMismatch;
}

std::string collapsed_tsv(const ChamberTable& t) {
  const std::string tsv = table_tsv(t, true);
  return tsv.substr(tsv.find('\n') + 1);
}

int cmd_verify() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& what, const std::string& detail) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) {
      std::cout << detail;
      ++failures;
    }
  };
  for (const auto& g : goldens::kTables) {
    Options opt;
    opt.range = std::string(g.range);
    NumericalThreefold X(preset_data(g.preset));
    CrossingEngine engine(X);
    auto [lo, hi] = range_of(opt);
    const std::string got = collapsed_tsv(engine.chamber_table(parse_curve_class(g.beta), g.n, lo, hi));
    check(got == g.tsv,
          "table " + std::string(g.preset) + " beta=(" + std::string(g.beta) + ") n=" + std::to_string(g.n),
          "  expected:\n" + std::string(g.tsv) + "  got:\n" + got);
  }
  for (const auto& g : goldens::kCrossings) {
    NumericalThreefold X(preset_data(g.preset));
    CrossingEngine engine(X);
    const CurveClass beta = parse_curve_class(g.beta);
    const Rational k0 = parse_rational(g.k0);
    const ChamberTable t = covering_table(engine, beta, g.n, k0);
    const WallReport r = engine.cross_wall(beta, g.n, k0, t.limit_at(k0, WallSide::Left));
    std::string got;
    for (const auto& term : r.terms) got += format_datum(term.datum) + "=" + format_rational(term.contribution) + "\n";
    const std::string got_plus = format_rational(r.l_plus);
    check(got == g.data && got_plus == g.l_plus,
          "crossing " + std::string(g.preset) + " beta=(" + std::string(g.beta) + ") n=" + std::to_string(g.n) +
              " k0=" + std::string(g.k0),
          "  expected:\n" + std::string(g.data) + "  L+=" + std::string(g.l_plus) + "\n  got:\n" + got +
              "  L+=" + got_plus + "\n");
  }
  {
    NumericalThreefold X(conifold_single(1));
    CrossingEngine engine(X);
    const PtSymmetryReport rep = engine.pt_symmetry_check(CurveClass({1}), 4);
    bool ok = rep.consistent() && rep.rows.size() == 4;
    for (const auto& r : rep.rows) ok = ok && r.p_minus_n == 0 && r.relation_defect && *r.relation_defect == 0;
    check(ok, "series conifold_single:1 beta=(1) n<=4", "  P_{-n} or relation defect nonzero\n");
  }
  std::cout << (failures == 0 ? "verify: all goldens match\n" : "verify: " + std::to_string(failures) + " mismatches\n");
  return failures == 0 ? 0 : kExitMismatch;
}

void add_model_options(CLI::App* sub, Options& opt) {
  sub->add_option("--preset", opt.preset, "Preset model, e.g. conifold_double:1 or conifold_pair:3,2");
  sub->add_option("--model", opt.model_path, "Model config file (default: $LIMITSTAB_MODEL)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact limit-stability wall-crossing engine for numerical CY3 models"};
  app.require_subcommand(1);
  app.footer(
      "Output: rationals are exact, \"p/q\" or \"p\".\n"
      "  walls   TSV rows  wall<TAB>k\n"
      "  mu      TSV rows  mu, mu_dual, k_pt, k_dual\n"
      "  table   TSV       k_lo<TAB>k_hi<TAB>L, chambers of equal L merged (--all-walls to split,\n"
      "                    --format text|svg for diagrams)\n"
      "  series  TSV       n, P_n, P_-n, crossing_sum, telescoping_defect, relation_defect\n"
      "Negative ranges are fine as --range -2:0 or --range=-2:0.");
  Options opt;

  auto* walls = app.add_subcommand("walls", "Walls of S(beta) inside a range");
  add_model_options(walls, opt);
  walls->add_option("--beta", opt.beta, "Curve class, e.g. 1,1")->required();
  walls->add_option("--range", opt.range, "lo:hi")->required();

  auto* mu = app.add_subcommand("mu", "mu_{n,beta} and the PT chamber bounds");
  add_model_options(mu, opt);
  mu->add_option("--beta", opt.beta, "Curve class")->required();
  mu->add_option("--n", opt.n, "ch3")->required();

  auto* compare = app.add_subcommand("compare", "Asymptotic phase order of F against E at k");
  add_model_options(compare, opt);
  compare->add_option("--F", opt.f_class, "Chern character (r, c, [gamma], n)")->required();
  compare->add_option("--E", opt.e_class, "Chern character (r, c, [gamma], n)")->required();
  compare->add_option("--k", opt.k, "B-field coefficient")->required();

  auto* cross = app.add_subcommand("cross", "Crossing report at the wall k");
  add_model_options(cross, opt);
  cross->add_option("--beta", opt.beta, "Curve class")->required();
  cross->add_option("--n", opt.n, "ch3")->required();
  cross->add_option("--k", opt.k, "Wall position")->required();

  auto* table = app.add_subcommand("table", "Chamber table of L_{n,beta}(k)");
  add_model_options(table, opt);
  table->add_option("--beta", opt.beta, "Curve class")->required();
  table->add_option("--n", opt.n, "ch3")->required();
  table->add_option("--range", opt.range, "lo:hi, lo below k_pt")->required();
  table->add_option("--format", opt.format, "tsv, text or svg");
  table->add_flag("--all-walls", opt.all_walls, "TSV: one row per geometric chamber, even without a jump");

  auto* series = app.add_subcommand("series", "PT series data and the q -> 1/q check");
  add_model_options(series, opt);
  series->add_option("--beta", opt.beta, "Curve class")->required();
  series->add_option("--n-max", opt.n_max, "Largest n")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check the built-in presets against golden tables");

  auto* render = app.add_subcommand("render", "Chamber diagram (text or svg)");
  add_model_options(render, opt);
  render->add_option("--beta", opt.beta, "Curve class")->required();
  render->add_option("--n", opt.n, "ch3")->required();
  render->add_option("--range", opt.range, "lo:hi")->required();
  render->add_option("--format", opt.format, "text or svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*walls) return cmd_walls(opt);
    if (*mu) return cmd_mu(opt);
    if (*compare) return cmd_compare(opt);
    if (*cross) return cmd_cross(opt);
    if (*table) return cmd_table(opt, std::nullopt);
    if (*series) return cmd_series(opt);
    if (*verify) return cmd_verify();
    if (*render) {
      if (opt.format == "tsv") throw UsageError("render supports --format text or svg");
      return cmd_table(opt, OutputFormat::Text);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  }
  return kExitUsage;
}
