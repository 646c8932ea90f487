#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "selection/constructions.hpp"
#include "selection/delaunay.hpp"
#include "selection/depth.hpp"
#include "selection/first_selection.hpp"
#include "selection/pointset_io.hpp"
#include "selection/report.hpp"
#include "selection/second_selection.hpp"
#include "selection/selftest.hpp"

using namespace sel;

namespace {

// Invalid configuration: exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string kind;  // gen
  std::string family = "rect";
  std::string variant = "strong";
  std::string finder;  // pierce/verify: max or constructive
  int n = 0;
  int d = 2;
  i64 m = -1;
  std::optional<std::uint64_t> seed;
  int trials = 1;
  std::optional<i64> slack;
  i64 scale = 1'000'000;
  std::string in, out, subset, point, construction;
  std::string format = "json";
  std::vector<int> only;
};

Family family_of(const RunConfig& c) {
  const auto f = parse_family(c.family);
  if (!f) throw ConfigError("unknown family '" + c.family + "'");
  return *f;
}

Variant variant_of(const RunConfig& c) {
  const auto v = parse_variant(c.variant);
  if (!v) throw ConfigError("unknown variant '" + c.variant + "'");
  return *v;
}

std::uint64_t need_seed(const RunConfig& c) {
  if (!c.seed) throw ConfigError(c.command + " draws random instances and needs --seed");
  return *c.seed;
}

PointSet load_points(const RunConfig& c) {
  if (c.in.empty()) throw ConfigError(c.command + " needs --in");
  try {
    return read_point_set_file(c.in).points;
  } catch (const sel::ParseError& e) {
    throw ConfigError(e.what());
  }
}

// Input set, or a random one when --in is absent.
PointSet points_or_random(const RunConfig& c, int dim) {
  if (!c.in.empty()) return load_points(c);
  if (c.n < 1) throw ConfigError(c.command + " needs --in or --n");
  return random_point_set(c.n, dim, need_seed(c));
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty() || c.command == "gen") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ConfigError("cannot write " + c.out);
  f << text;
}

void emit_json(const RunConfig& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

std::string subset_text(const InducedSubset& S) {
  std::ostringstream s;
  write_subset(s, S);
  return s.str();
}

// ------------------------------------------------------------------ gen

int run_gen(const RunConfig& c) {
  ConstructionSpec spec;
  try {
    spec.kind = parse_construction(c.kind);
  } catch (const InvalidSpec& e) {
    throw ConfigError(e.what());
  }
  spec.n = c.n;
  spec.d = c.d;
  spec.scale = c.scale;
  if (spec.kind == ConstructionKind::RandomGeneral || spec.kind == ConstructionKind::RandomSymmetric)
    spec.seed = need_seed(c);
  else if (c.seed)
    spec.seed = *c.seed;
  PointSet P;
  try {
    P = generate(spec);
  } catch (const InvalidSpec& e) {
    throw ConfigError(e.what());
  }
  std::vector<std::string> comments{spec.describe()};
  if (spec.kind == ConstructionKind::ThreeArc) {
    std::string cls = "classes=";
    for (int k : three_arc_classes(spec.n)) cls += static_cast<char>('A' + k);
    comments.push_back(cls);
  }
  if (c.out.empty())
    write_point_set(std::cout, P, comments);
  else
    write_point_set_file(c.out, P, comments);
  return 0;
}

// ------------------------------------------------------------------ depth

int run_depth(const RunConfig& c) {
  const auto P = load_points(c);
  const Family f = family_of(c);
  require_family(f, P.dim());
  if (c.point.empty()) throw ConfigError("depth needs --point");
  RationalPoint q;
  try {
    q = parse_rational_point(c.point);
  } catch (const sel::ParseError& e) {
    throw ConfigError(e.what());
  }
  const auto brute = depth_brute(P, f, q);
  const auto fast = depth_fast(P, f, q);
  const bool agree = brute.depth == fast.depth;
  Json j = report_envelope("depth");
  j["family"] = std::string(family_name(f));
  j["point"] = point_json(q);
  j["brute"] = brute.depth;
  j["fast"] = fast.depth;
  j["fast_engine"] = fast.engine == Engine::Fast ? "fast" : "brute";
  j["agree"] = agree;
  if (c.format == "text")
    emit(c, "depth " + std::to_string(brute.depth) + (agree ? "" : " (fast " + std::to_string(fast.depth) + ")") + "\n");
  else
    emit_json(c, j);
  return agree ? 0 : 1;
}

// ------------------------------------------------------------------ pierce / verify

Finder finder_of(const RunConfig& c, Finder fallback) {
  if (c.finder.empty()) return fallback;
  if (c.finder == "max") return Finder::Max;
  if (c.finder == "constructive") return Finder::Constructive;
  throw ConfigError("unknown finder '" + c.finder + "'");
}

BoundSpec bound_for(const RunConfig& c, Family f, Variant v, int d, Finder finder) {
  auto b = default_bound(f, v, d);
  BoundSpec spec;
  if (b) {
    spec = *b;
  } else {
    spec.family = f;
    spec.variant = v;
    spec.coefficient = Rational(0);
  }
  if (c.slack) spec.slack = *c.slack;
  spec.finder = finder;
  spec.caps = TukeyCaps{60, 48, 16};
  return spec;
}

int run_pierce(const RunConfig& c) {
  const auto P = load_points(c);
  const Family f = family_of(c);
  const Variant v = variant_of(c);
  const bool has_bound = default_bound(f, v, P.dim()).has_value();
  const auto spec = bound_for(c, f, v, P.dim(), finder_of(c, Finder::Max));
  const auto check = verify_first_selection(P, spec, c.seed.value_or(0));
  Json j = report_envelope("pierce");
  j["family"] = std::string(family_name(f));
  j["variant"] = std::string(variant_name(v));
  j["finder"] = spec.finder == Finder::Max ? "max" : "constructive";
  j["n"] = P.size();
  j["d"] = P.dim();
  j["depth"] = check.observed;
  j["point"] = point_json(check.point);
  j["certificate"] = check.certificate;
  if (has_bound) {
    const Rational headline = spec.coefficient * Rational(static_cast<i64>(P.size()) * P.size());
    // Integral bounds print as plain numbers.
    if (headline.denominator() == 1)
      j["required"] = headline.numerator();
    else
      j["required"] = rational_string(headline);
    j["required_float"] = boost::rational_cast<double>(headline);
    put_rational(j, "required_with_slack", check.required);
    j["slack"] = spec.slack;
    j["holds"] = check.holds;
  } else {
    j["required"] = nullptr;
  }
  if (c.format == "text")
    emit(c, "depth " + std::to_string(check.observed) + " at " + check.point.to_string() + "\n");
  else
    emit_json(c, j);
  return !has_bound || check.holds ? 0 : 1;
}

int run_verify(const RunConfig& c) {
  const Family f = family_of(c);
  const Variant v = variant_of(c);
  require_family(f, c.d);
  if (!default_bound(f, v, c.d) && !c.slack) throw ConfigError("no bound is asserted for this family and variant");
  if (c.n < 1) throw ConfigError("verify needs --n");
  if (c.trials < 1) throw ConfigError("verify needs --trials >= 1");
  const auto seed = need_seed(c);
  const auto spec = bound_for(c, f, v, c.d, finder_of(c, Finder::Constructive));
  Json trials = Json::array();
  Json failures = Json::array();
  std::ostringstream csv;
  csv << "trial,seed,n,observed,required,holds\n";
  int failed = 0;
  for (int t = 0; t < c.trials; ++t) {
    const auto s = trial_seed(seed, 0, t);
    const auto P = random_point_set(c.n, c.d, s);
    const auto check = verify_first_selection(P, spec, s);
    Json row = bound_check_json(check);
    row["trial"] = t;
    trials.push_back(row);
    csv << t << ',' << s << ',' << c.n << ',' << check.observed << ',' << rational_string(check.required) << ','
        << (check.holds ? 1 : 0) << '\n';
    if (!check.holds) {
      ++failed;
      row["set"] = point_set_json(P);
      failures.push_back(row);
    }
  }
  Json j = report_envelope("verify");
  j["family"] = std::string(family_name(f));
  j["variant"] = std::string(variant_name(v));
  j["n"] = c.n;
  j["d"] = c.d;
  j["seed"] = seed;
  j["trials"] = trials;
  j["failed"] = failed;
  j["failures"] = failures;
  if (c.format == "csv")
    emit(c, csv.str());
  else if (c.format == "text")
    emit(c, std::to_string(c.trials - failed) + "/" + std::to_string(c.trials) + " trials hold\n");
  else
    emit_json(c, j);
  return failed == 0 ? 0 : 1;
}

// ------------------------------------------------------------------ second

InducedSubset subset_for(const RunConfig& c, const PointSet& P, Family f) {
  if (!c.subset.empty()) {
    std::ifstream in(c.subset);
    if (!in) throw ConfigError("cannot read " + c.subset);
    try {
      auto S = read_subset(in, f);
      for (const auto& [i, j] : S.pairs)
        if (i < 0 || j >= P.size()) throw ConfigError("subset index out of range");
      return S;
    } catch (const sel::ParseError& e) {
      throw ConfigError(e.what());
    }
  }
  if (c.m < 0) throw ConfigError("second needs --m or --subset");
  try {
    return sample_subset(P, f, c.m, need_seed(c));
  } catch (const MTooLarge& e) {
    throw ConfigError(e.what());
  }
}

int run_second(const RunConfig& c) {
  const Family f = family_of(c);
  Json j = report_envelope("second");
  j["family"] = std::string(family_name(f));
  if (f == Family::Interval) {
    PointSet P;
    InducedSubset S;
    if (c.construction == "upper") {
      if (c.n < 1 || c.m < 0) throw ConfigError("the upper construction needs --n and --m");
      IntervalConstruction con;
      try {
        con = gen_interval_upper(c.n, c.m);
      } catch (const InvalidRange& e) {
        throw ConfigError(e.what());
      }
      P = con.points;
      S = con.subset;
      j["k"] = con.k;
    } else if (!c.construction.empty()) {
      throw ConfigError("unknown construction '" + c.construction + "'");
    } else {
      P = points_or_random(c, 1);
      S = subset_for(c, P, f);
    }
    const auto prof = interval_depth_profile(P, S);
    const i64 n = P.size(), m = S.m();
    j["n"] = n;
    j["m"] = m;
    j["max"] = prof.max;
    j["argmax"] = prof.argmax;
    j["point"] = P[prof.argmax][0];
    j["meets_lower_bound"] = prof.meets_lower_bound;
    j["sparse"] = m < n;
    j["partition_sanity"] = interval_partition_sanity(P, S);
    const Rational target = Rational(m * m, n * n) + Rational(3 * m, n);
    put_rational(j, "upper_scale", target);
    const bool ok = (prof.meets_lower_bound || m < n) && j["partition_sanity"].get<bool>();
    if (!ok) {
      j["set"] = point_set_json(P);
      j["subset"] = subset_text(S);
    }
    if (c.format == "csv") {
      std::ostringstream s;
      s << "index,x,count\n";
      for (int i = 0; i < P.size(); ++i) s << i << ',' << P[i][0] << ',' << prof.count[static_cast<std::size_t>(i)] << '\n';
      emit(c, s.str());
    } else if (c.format == "text") {
      emit(c, "max " + std::to_string(prof.max) + (prof.meets_lower_bound ? " meets" : " misses") + " the lower bound\n");
    } else {
      emit_json(c, j);
    }
    return ok ? 0 : 1;
  }
  if (f != Family::Rectangle) throw ConfigError("second supports interval and rect");
  const auto P = points_or_random(c, 2);
  const auto S = subset_for(c, P, f);
  const auto g = grid_depth_map(P, S);
  const auto J = rectangle_grid_counts(P, S);
  i64 sumJ = 0;
  for (i64 x : J) sumJ += x;
  const auto cubic = check_cubic_lemma(P, S);
  j["n"] = P.size();
  j["m"] = S.m();
  j["max"] = g.max;
  j["point"] = Json::array({g.xs[static_cast<std::size_t>(g.gx)], g.ys[static_cast<std::size_t>(g.gy)]});
  j["meets_cubic_bound"] = g.meets_cubic_bound;
  j["sum_grid"] = g.total;
  j["sum_j"] = sumJ;
  j["double_counting"] = g.total == sumJ;
  j["cubic_lemma"] = cubic.holds;
  j["partitions"] = cubic.entries.size();
  const bool ok = g.meets_cubic_bound && g.total == sumJ && cubic.holds;
  if (!ok) {
    j["set"] = point_set_json(P);
    j["subset"] = subset_text(S);
  }
  if (c.format == "csv") {
    std::ostringstream s;
    g.write_csv(s);
    emit(c, s.str());
  } else if (c.format == "text") {
    emit(c, "max " + std::to_string(g.max) + " at (" + std::to_string(g.xs[static_cast<std::size_t>(g.gx)]) + ", " +
                std::to_string(g.ys[static_cast<std::size_t>(g.gy)]) + ")\n");
  } else {
    emit_json(c, j);
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ delaunay

int run_delaunay(const RunConfig& c) {
  const Family f = family_of(c);
  if (f != Family::Skyline && f != Family::DownTriangle && f != Family::Disk)
    throw ConfigError("delaunay supports skyline, downtri and disk");
  const auto P = points_or_random(c, 2);
  require_family(f, P.dim());
  const auto E = delaunay_graph(P, f);
  const auto pr = planarity_check(E, P.size());
  Json j = report_envelope("delaunay");
  j["family"] = std::string(family_name(f));
  j["n"] = P.size();
  j["edges"] = E.size();
  j["edge_bound"] = pr.edge_bound;
  j["planar"] = pr.planar;
  if (!pr.ok()) j["set"] = point_set_json(P);
  if (c.format == "csv") {
    std::ostringstream s;
    s << "a,b\n";
    for (const auto& [a, b] : E) s << a << ',' << b << '\n';
    emit(c, s.str());
  } else if (c.format == "text") {
    emit(c, std::to_string(E.size()) + " edges, " + (pr.ok() ? "planar" : "NOT planar") + "\n");
  } else {
    j["edge_list"] = E;
    emit_json(c, j);
  }
  return pr.ok() ? 0 : 1;
}

// ------------------------------------------------------------------ selftest

int run_selftest(const RunConfig& c) {
  for (int id : c.only)
    if (id < 1 || id > 7) throw ConfigError("criteria ids are 1..7");
  const auto rep = sel::run_selftest(need_seed(c), c.only);
  if (c.format == "text") {
    std::string s;
    for (const auto& cr : rep.criteria)
      s += (cr.passed ? "PASS " : "FAIL ") + std::to_string(cr.id) + " " + cr.name + ": " + cr.detail + "\n";
    emit(c, s);
  } else {
    emit_json(c, rep.to_json());
  }
  return rep.passed() ? 0 : 1;
}

int run(const RunConfig& c) {
  if (c.format != "json" && c.format != "csv" && c.format != "text")
    throw ConfigError("--format must be json, csv or text");
  if (c.command == "gen") return run_gen(c);
  if (c.command == "depth") return run_depth(c);
  if (c.command == "pierce") return run_pierce(c);
  if (c.command == "verify") return run_verify(c);
  if (c.command == "second") return run_second(c);
  if (c.command == "delaunay") return run_delaunay(c);
  if (c.command == "selftest") return run_selftest(c);
  throw ConfigError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"selemma: selection lemmas for induced geometric objects"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or text")->capture_default_str();
    sub->add_option("--out", cfg.out, "report path (stdout when omitted)");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& s) { cfg.seed = s; }, "RNG seed");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family,
                    "rect|quadrant|slab|vslab|hslab|skyline|box|disk|hypersphere|downtri|interval")
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "write a constructed point set");
  gen->add_option("kind", cfg.kind, "circle|semicircle|chain|line|grid|threearc|random|symmetric")->required();
  gen->add_option("--n", cfg.n, "number of points")->required();
  gen->add_option("--d", cfg.d, "dimension")->capture_default_str();
  gen->add_option("--scale", cfg.scale, "coordinate scale")->capture_default_str();
  gen->add_option("--out", cfg.out, "point file (stdout when omitted)");
  add_seed(gen);

  auto* depth = app.add_subcommand("depth", "depth of one point by both engines");
  add_family(depth);
  depth->add_option("--in", cfg.in, "point file")->required();
  depth->add_option("--point", cfg.point, "query, e.g. 3,7/2")->required();
  add_common(depth);

  auto* pierce = app.add_subcommand("pierce", "deepest or constructed piercing point");
  add_family(pierce);
  pierce->add_option("--variant", cfg.variant, "strong or weak")->capture_default_str();
  pierce->add_option("--finder", cfg.finder, "max (default) or constructive");
  pierce->add_option("--in", cfg.in, "point file")->required();
  pierce->add_option_function<i64>("--slack", [&](const i64& s) { cfg.slack = s; }, "override the linear slack");
  add_seed(pierce);
  add_common(pierce);

  auto* verify = app.add_subcommand("verify", "check a lower bound over random trials");
  add_family(verify);
  verify->add_option("--variant", cfg.variant, "strong or weak")->capture_default_str();
  verify->add_option("--finder", cfg.finder, "constructive (default) or max");
  verify->add_option("--n", cfg.n, "points per trial")->required();
  verify->add_option("--d", cfg.d, "dimension")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "number of trials")->capture_default_str();
  verify->add_option_function<i64>("--slack", [&](const i64& s) { cfg.slack = s; }, "override the linear slack");
  add_seed(verify);
  add_common(verify);

  auto* second = app.add_subcommand("second", "second selection: intervals or rectangles");
  add_family(second);
  second->add_option("--in", cfg.in, "point file (random when omitted)");
  second->add_option("--n", cfg.n, "random point count or construction size");
  second->add_option("--m", cfg.m, "subset size");
  second->add_option("--subset", cfg.subset, "subset file ('pairs <m>' then 'i j' lines)");
  second->add_option("--construction", cfg.construction, "upper: the short-interval construction");
  add_seed(second);
  add_common(second);

  auto* del = app.add_subcommand("delaunay", "Delaunay graph and planarity");
  add_family(del);
  del->add_option("--in", cfg.in, "point file (random when omitted)");
  del->add_option("--n", cfg.n, "random point count");
  add_seed(del);
  add_common(del);

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  st->add_option("--only", cfg.only, "criterion ids to run")->delimiter(',');
  add_seed(st);
  add_common(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    return run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sel::Error& e) {
    // Certification or construction failures are property failures.
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
