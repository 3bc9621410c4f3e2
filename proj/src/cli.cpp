#include "stackprice/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stackprice/analysis.hpp"
#include "stackprice/error.hpp"
#include "stackprice/instances.hpp"
#include "stackprice/singleprice.hpp"
#include "stackprice/stackvc.hpp"

namespace stackprice {

using json = nlohmann::ordered_json;

namespace {

json number(const ExactNumber& x) { return json{{"exact", x.str()}, {"decimal", x.decimal()}}; }

std::string show(const ExactNumber& x) {
  if (x.is_infinite() || x.rational().get_den() == 1) return x.str();
  return x.str() + " (" + x.decimal() + ")";
}

std::string show_set(const ItemSet& s) {
  std::string out = "{";
  for (const auto& id : s) out += (out.size() > 1 ? ", " : "") + id;
  return out + "}";
}

void row(std::ostream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(22) << key << value << '\n';
}

std::string describe_follower(const FollowerSpec& f) {
  switch (f.goal) {
    case Goal::shortest_path:
      return "shortest_path " + f.source + " -> " + f.sink;
    case Goal::spanning_tree:
      return "spanning_tree";
    case Goal::vertex_cover:
      return "vertex_cover of " + std::to_string(f.edges.size()) + " edges";
  }
  return {};
}

void emit(const json& record, const std::string& format, const std::string& out_file, std::ostream& out) {
  if (format == "json") out << record.dump(2) << '\n';
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw ParseError("cannot write \"" + out_file + "\"");
    f << record.dump(2) << '\n';
  }
}

// --- solve ----------------------------------------------------------------

struct SolveOptions {
  std::string algo;
  std::string epsilon = "1/4";
  std::size_t limit = kDefaultEnumerationLimit;
  std::size_t tuple_limit = kDefaultTupleLimit;
  std::string format = "table";
  std::string out_file;
  bool timing = false;
  std::string file;
};

int do_solve(const SolveOptions& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  const ExactNumber eps = ExactNumber::parse(o.epsilon);
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  if (o.algo == "single-price") {
    report = run_single_price(inst, eps);
  } else if (o.algo == "stackvc") {
    report = solve_one_sided(inst);
  } else if (o.algo == "stackvc2") {
    report = solve_two_sided(inst);
  } else {
    report = exact_optimum(inst, o.tuple_limit, o.limit);
  }
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;

  json record;
  record["command"] = "solve";
  record["digest"] = instance_digest(inst);
  record["params"] = {{"algo", o.algo}, {"file", o.file}};
  if (o.algo == "single-price") record["params"]["epsilon"] = eps.str();
  if (o.algo == "exact") {
    record["params"]["limit"] = o.limit;
    record["params"]["tuple_limit"] = o.tuple_limit;
  }
  record["solver"] = report.algorithm;
  record["revenue"] = number(report.revenue);
  record["prices"] = json::object();
  for (const auto& [id, price] : report.prices) record["prices"][id] = number(price);
  record["diagnostics"] = json::object();
  for (const auto& [key, value] : report.diagnostics) record["diagnostics"][key] = number(value);
  record["followers"] = json::array();
  for (std::size_t j = 0; j < report.per_follower.size(); ++j) {
    const Response& r = report.per_follower[j];
    record["followers"].push_back({{"index", j},
                                   {"demand", number(inst.followers()[j].demand)},
                                   {"chosen", std::vector<std::string>(r.chosen.begin(), r.chosen.end())},
                                   {"weight", number(r.weight)},
                                   {"revenue", number(r.revenue)}});
  }
  record["trace"] = report.trace;
  if (o.timing) record["wall_time_seconds"] = wall.count();

  if (o.format == "table") {
    row(out, "solver", report.algorithm);
    row(out, "instance", o.file + " (" + instance_digest(inst) + ")");
    row(out, "revenue", show(report.revenue));
    for (const auto& [id, price] : report.prices) row(out, "price " + id, show(price));
    for (const auto& [key, value] : report.diagnostics) row(out, key, show(value));
    if (report.diagnostics.count("c0") && report.diagnostics.count("cn")) {
      row(out, "identity", "revenue = c0 - cn = " + show(report.diagnostics.at("c0")) + " - " +
                               show(report.diagnostics.at("cn")));
    }
    for (std::size_t j = 0; j < report.per_follower.size(); ++j) {
      const Response& r = report.per_follower[j];
      row(out, "follower " + std::to_string(j),
          "demand " + show(inst.followers()[j].demand) + ", weight " + show(r.weight) + ", revenue " +
              show(r.revenue) + ", chooses " + show_set(r.chosen));
    }
    for (const auto& line : report.trace) row(out, "trace", line);
    if (o.timing) row(out, "wall time (s)", std::to_string(wall.count()));
  }
  emit(record, o.format, o.out_file, out);
  return kExitOk;
}

// --- analyze --------------------------------------------------------------

struct AnalyzeOptions {
  std::optional<std::size_t> follower;
  std::size_t limit = kDefaultEnumerationLimit;
  std::string format = "table";
  std::string out_file;
  std::string file;
};

int do_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  std::vector<std::size_t> which;
  if (o.follower) {
    if (*o.follower >= inst.follower_count())
      throw ValidationError("follower " + std::to_string(*o.follower) + " does not exist");
    which.push_back(*o.follower);
  } else {
    for (std::size_t j = 0; j < inst.follower_count(); ++j) which.push_back(j);
  }

  json record;
  record["command"] = "analyze";
  record["digest"] = instance_digest(inst);
  record["params"] = {{"file", o.file}, {"limit", o.limit}};
  if (o.follower) record["params"]["follower"] = *o.follower;
  record["followers"] = json::array();
  for (std::size_t j : which) {
    const ThresholdProfile profile = full_profile(inst, j, o.limit);
    const ExactNumber bound = revenue_upper_bound(profile);
    json f;
    f["index"] = j;
    f["complete"] = profile.complete;
    f["points"] = json::array();
    for (const auto& p : profile.points)
      f["points"].push_back({{"j", p.j}, {"c", number(p.cost)}, {"delta", number(p.delta)}});
    f["hull"] = profile.hull;
    f["thetas"] = json::array();
    for (const auto& t : profile.thetas) f["thetas"].push_back(number(t));
    f["revenue_bound"] = number(bound);
    record["followers"].push_back(f);

    if (o.format == "table") {
      out << "follower " << j << ": " << describe_follower(inst.followers()[j])
          << (profile.complete ? "" : " (hull points only)") << '\n';
      write_profile_table(out, profile);
      row(out, "revenue bound", show(bound));
    }
  }
  emit(record, o.format, o.out_file, out);
  return kExitOk;
}

// --- gen ------------------------------------------------------------------

struct GenOptions {
  std::string family;
  long m = 1;
  std::vector<std::string> customers;
  RandomParams random;
  std::string shape = "graph";
  std::string edge_probability = "1/3";
  std::string priceable_probability = "1/2";
  std::string spanning_tree_probability = "0";
  std::string out_file;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// "p1,p2:budget[:demand]"
std::tuple<std::vector<std::string>, ExactNumber, ExactNumber> parse_customer(const std::string& text,
                                                                               bool allow_demand) {
  auto fields = split(text, ':');
  if (fields.size() < 2 || fields.size() > (allow_demand ? 3u : 2u))
    throw CLI::ValidationError("--customer", "expected PRODUCTS:BUDGET" + std::string(allow_demand ? "[:DEMAND]" : "") +
                                                 ", got \"" + text + "\"");
  auto products = split(fields[0], ',');
  return {products, ExactNumber::parse(fields[1]),
          fields.size() == 3 ? ExactNumber::parse(fields[2]) : ExactNumber(1)};
}

int do_gen(GenOptions o, std::ostream& out) {
  std::optional<Instance> inst;
  if (o.family == "harmonic") {
    inst = gen_harmonic(o.m);
  } else if (o.family == "single-minded") {
    std::vector<SingleMindedCustomer> cs;
    for (const auto& text : o.customers) {
      auto [products, budget, demand] = parse_customer(text, false);
      cs.push_back({products, budget});
    }
    inst = gen_from_single_minded(cs);
  } else if (o.family == "unit-demand") {
    std::vector<UnitDemandCustomer> cs;
    for (const auto& text : o.customers) {
      auto [products, budget, demand] = parse_customer(text, true);
      cs.push_back({products, budget, demand});
    }
    inst = gen_from_unit_demand(cs);
  } else {
    o.random.shape = o.shape == "bipartite" ? RandomShape::bipartite : RandomShape::graph;
    o.random.edge_probability = ExactNumber::parse(o.edge_probability);
    o.random.priceable_probability = ExactNumber::parse(o.priceable_probability);
    o.random.spanning_tree_probability = ExactNumber::parse(o.spanning_tree_probability);
    inst = gen_random(o.random);
  }
  require_valid(*inst);
  const std::string text = serialize_instance(*inst);
  if (o.out_file.empty()) {
    out << text << '\n';
  } else {
    std::ofstream f(o.out_file);
    if (!f) throw ParseError("cannot write \"" + o.out_file + "\"");
    f << text << '\n';
    row(out, "wrote", o.out_file + " (" + instance_digest(*inst) + ")");
  }
  return kExitOk;
}

// --- bench ----------------------------------------------------------------

struct BenchOptions {
  std::string dir;
  std::string epsilon = "1/4";
  std::size_t limit = kDefaultEnumerationLimit;
  std::size_t tuple_limit = kDefaultTupleLimit;
  std::string format = "table";
  std::string out_file;
  bool strict = false;
};

json optional_number(const std::optional<ExactNumber>& x) { return x ? number(*x) : json(nullptr); }

int do_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.epsilon = ExactNumber::parse(o.epsilon);
  config.enumeration_limit = o.limit;
  config.tuple_limit = o.tuple_limit;
  const BenchTable table = run_bench(o.dir, config);
  for (const auto& s : table.skipped) err << "skipped " << s << '\n';

  json record;
  record["command"] = "bench";
  record["params"] = {{"dir", o.dir}, {"epsilon", config.epsilon.str()}, {"limit", o.limit},
                      {"tuple_limit", o.tuple_limit}};
  record["rows"] = json::array();
  for (const auto& r : table.rows) {
    json j;
    j["file"] = r.file;
    j["digest"] = r.digest;
    j["m"] = r.m;
    j["k"] = r.k;
    j["r_star"] = optional_number(r.r_star);
    j["delta_bound"] = number(r.delta_bound);
    j["delta_pass"] = r.delta_pass;
    j["single_price"] = {{"revenue", number(r.sp_revenue)},
                         {"factor", number(r.sp_factor)},
                         {"ratio", optional_number(r.sp_ratio)},
                         {"pass", r.sp_pass ? json(*r.sp_pass) : json(nullptr)}};
    if (!r.vc_solver.empty()) {
      j["flow"] = {{"solver", r.vc_solver},
                   {"revenue", optional_number(r.vc_revenue)},
                   {"ratio", optional_number(r.vc_ratio)},
                   {"pass", r.vc_pass ? json(*r.vc_pass) : json(nullptr)}};
    }
    record["rows"].push_back(j);
  }
  record["skipped"] = table.skipped;
  record["summary"] = {{"worst_single_price_ratio", optional_number(table.worst_sp_ratio)},
                       {"worst_flow_ratio", optional_number(table.worst_vc_ratio)},
                       {"failures", table.failures}};

  if (o.format == "table") write_bench_table(out, table);
  emit(record, o.format, o.out_file, out);
  return o.strict && table.failures > 0 ? kExitBenchFailure : kExitOk;
}

}  // namespace

BenchTable run_bench(const std::string& dir, const BenchConfig& config) {
  namespace fs = std::filesystem;
  BenchTable table;
  std::vector<fs::path> files;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->path().extension() == ".json") files.push_back(it->path());
  }
  if (ec) throw ParseError("cannot read directory \"" + dir + "\": " + ec.message());
  std::sort(files.begin(), files.end());

  auto note_worst = [](std::optional<ExactNumber>& worst, const ExactNumber& x) {
    if (!worst || x > *worst) worst = x;
  };

  for (const auto& path : files) {
    BenchRow r;
    r.file = path.filename().string();
    try {
      const Instance inst = load_instance(path.string());
      require_valid(inst);
      r.digest = instance_digest(inst);
      r.m = inst.priceable_count();
      r.k = inst.follower_count();

      r.delta_bound = ExactNumber(0);
      for (std::size_t j = 0; j < r.k; ++j)
        r.delta_bound += inst.followers()[j].demand * revenue_upper_bound(parametric_profile(inst, j));
      try {
        r.r_star = exact_optimum(inst, config.tuple_limit, config.enumeration_limit).revenue;
      } catch (const LimitExceeded&) {
      }
      if (r.r_star) r.delta_pass = *r.r_star <= r.delta_bound;

      const SolveReport sp = run_single_price(inst, config.epsilon);
      r.sp_revenue = sp.revenue;
      r.sp_factor = sp.diagnostics.at("guarantee_factor");
      if (r.r_star) {
        r.sp_pass = *r.r_star <= r.sp_factor * r.sp_revenue;
        if (!r.sp_revenue.is_zero()) {
          r.sp_ratio = *r.r_star / r.sp_revenue;
        } else if (r.r_star->is_zero()) {
          r.sp_ratio = ExactNumber(1);
        }
        if (r.sp_ratio) note_worst(table.worst_sp_ratio, *r.sp_ratio);
      }

      if (inst.game() == GameKind::vertex && r.k == 1) {
        std::optional<SolveReport> vc;
        try {
          vc = solve_one_sided(inst);
          r.vc_solver = "stackvc";
        } catch (const UnsupportedError&) {
          try {
            vc = solve_two_sided(inst);
            r.vc_solver = "stackvc2";
          } catch (const UnsupportedError&) {
          }
        }
        if (vc) {
          r.vc_revenue = vc->revenue;
          if (r.r_star) {
            r.vc_pass = r.vc_solver == "stackvc" ? vc->revenue == *r.r_star
                                                 : ExactNumber(2) * vc->revenue >= *r.r_star;
            if (!vc->revenue.is_zero()) {
              r.vc_ratio = *r.r_star / vc->revenue;
            } else if (r.r_star->is_zero()) {
              r.vc_ratio = ExactNumber(1);
            }
            if (r.vc_ratio) note_worst(table.worst_vc_ratio, *r.vc_ratio);
          }
        }
      }
    } catch (const Error& e) {
      table.skipped.push_back(r.file + ": " + e.what());
      continue;
    }
    if (!r.delta_pass || r.sp_pass == false || r.vc_pass == false) ++table.failures;
    table.rows.push_back(std::move(r));
  }
  return table;
}

void write_bench_table(std::ostream& os, const BenchTable& table) {
  auto cell = [](const std::optional<ExactNumber>& x) { return x ? show(*x) : std::string("-"); };
  auto verdict = [](const std::optional<bool>& b) { return b ? (*b ? "PASS" : "FAIL") : "-"; };
  os << "file\tm\tk\tr*\tdelta_bound\tsp_revenue\tsp_ratio\tsp_factor\tsp\tflow_solver\tflow_revenue\tflow_ratio\tflow\n";
  for (const auto& r : table.rows) {
    // Without r* only the bound is shown, marked as such.
    const std::string r_star = r.r_star ? show(*r.r_star) : "n/a (bound " + show(r.delta_bound) + ")";
    os << r.file << '\t' << r.m << '\t' << r.k << '\t' << r_star << '\t' << show(r.delta_bound)
       << (r.delta_pass ? "" : " FAIL") << '\t' << show(r.sp_revenue) << '\t' << cell(r.sp_ratio) << '\t'
       << show(r.sp_factor) << '\t' << verdict(r.sp_pass) << '\t' << (r.vc_solver.empty() ? "-" : r.vc_solver)
       << '\t' << cell(r.vc_revenue) << '\t' << cell(r.vc_ratio) << '\t' << verdict(r.vc_pass) << '\n';
  }
  os << "worst\t\t\t\t\t\t" << cell(table.worst_sp_ratio) << "\t\t\t\t\t" << cell(table.worst_vc_ratio) << '\t'
     << table.failures << " failures\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stackelberg network pricing toolkit", "stackprice"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Price an instance");
  s->add_option("--algo", solve.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"single-price", "stackvc", "stackvc2", "exact"}));
  s->add_option("--epsilon", solve.epsilon, "Grid step of the single-price algorithm (rational)");
  s->add_option("--limit", solve.limit, "Oracle enumeration limit per follower");
  s->add_option("--tuple-limit", solve.tuple_limit, "Oracle target tuple limit");
  s->add_option("--format", solve.format)->check(CLI::IsMember({"table", "json"}));
  s->add_option("--out", solve.out_file, "Also write the JSON report here");
  s->add_flag("--timing", solve.timing, "Record wall time");
  s->add_option("file", solve.file)->required();

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Threshold profile of followers");
  a->add_option("--follower", analyze.follower);
  a->add_option("--limit", analyze.limit, "Enumeration limit for non-path followers");
  a->add_option("--format", analyze.format)->check(CLI::IsMember({"table", "json"}));
  a->add_option("--out", analyze.out_file);
  a->add_option("file", analyze.file)->required();

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("family", gen.family)
      ->required()
      ->check(CLI::IsMember({"harmonic", "single-minded", "unit-demand", "random"}));
  g->add_option("--m", gen.m, "harmonic: chain length");
  g->add_option("--customer", gen.customers, "PRODUCTS:BUDGET[:DEMAND], products comma-separated");
  g->add_option("--seed", gen.random.seed);
  g->add_option("--shape", gen.shape)->check(CLI::IsMember({"graph", "bipartite"}));
  g->add_option("--min-vertices", gen.random.min_vertices);
  g->add_option("--max-vertices", gen.random.max_vertices);
  g->add_option("--max-edges", gen.random.max_edges);
  g->add_option("--edge-probability", gen.edge_probability);
  g->add_option("--priceable-probability", gen.priceable_probability);
  g->add_option("--spanning-tree-probability", gen.spanning_tree_probability);
  g->add_option("--cost-min", gen.random.cost_min);
  g->add_option("--cost-max", gen.random.cost_max);
  g->add_option("--cost-denominator", gen.random.cost_denominator);
  g->add_option("--followers", gen.random.followers);
  g->add_flag("--directed", gen.random.directed);
  g->add_flag("--weighted", gen.random.weighted);
  g->add_flag("--two-sided", gen.random.two_sided);
  g->add_option("-o,--out", gen.out_file);

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Compare solvers with the oracle over a corpus");
  b->add_option("dir", bench.dir)->required();
  b->add_option("--epsilon", bench.epsilon);
  b->add_option("--limit", bench.limit);
  b->add_option("--tuple-limit", bench.tuple_limit);
  b->add_option("--format", bench.format)->check(CLI::IsMember({"table", "json"}));
  b->add_option("--out", bench.out_file);
  b->add_flag("--strict", bench.strict, "Exit 4 when any bound check fails");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s->parsed()) return do_solve(solve, out);
    if (a->parsed()) return do_analyze(analyze, out);
    if (g->parsed()) return do_gen(gen, out);
    return do_bench(bench, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInstance;
  }
}

}  // namespace stackprice
