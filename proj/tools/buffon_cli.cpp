#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "buffon/construct.hpp"
#include "buffon/discrepancy.hpp"
#include "buffon/io.hpp"
#include "buffon/search.hpp"
#include "buffon/svg.hpp"
#include "buffon/verify.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerifyFailed = 2,
  kResourceLimit = 3,
  kDegenerate = 4,
};

constexpr const char* kExitHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage, I/O, parse or validation error\n"
    "  2  verification suite failed\n"
    "  3  resource limit exceeded (primitive cap)\n"
    "  4  degenerate line (tangent, collinear or through an endpoint)\n"
    "Environment:\n"
    "  BUFFON_THREADS  default worker count when --threads is 0\n";

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Manifest {
  std::string command;
  json config = json::object();
  json inputs = json::array();
  json outputs = json::array();
  std::string started = utc_now();

  // Outputs stay byte-reproducible; the manifest lives next to the first one.
  void write() const {
    if (outputs.empty()) return;
    const json j{{"command", command},          {"version", buffon::kVersion}, {"config", config},
                 {"inputs", inputs},             {"outputs", outputs},          {"started", started},
                 {"finished", utc_now()}};
    buffon::write_json_file(outputs.front().get<std::string>() + ".manifest.json", j);
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

// mc:N or scan:T
buffon::SearchEvaluator parse_evaluator(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "mc") return buffon::McObjective{arg.empty() ? 4096 : std::stoul(arg)};
  if (kind == "scan") return buffon::ScanObjective{arg.empty() ? 256 : std::stoi(arg)};
  throw std::invalid_argument("evaluator must be mc[:samples] or scan[:theta_count]");
}

// greedy or sa[:T0[,cooling]]
buffon::SearchSchedule parse_schedule(const std::string& text) {
  if (text == "greedy") return buffon::Greedy{};
  if (text.rfind("sa", 0) == 0) {
    buffon::Annealing a;
    if (text.size() > 2) {
      if (text[2] != ':') throw std::invalid_argument("schedule must be greedy or sa[:T0[,cooling]]");
      const auto v = parse_list(text.substr(3));
      if (v.size() > 2) throw std::invalid_argument("schedule sa takes at most T0,cooling");
      a.initial_temperature = v[0];
      if (v.size() == 2) a.cooling = v[1];
    }
    return a;
  }
  throw std::invalid_argument("schedule must be greedy or sa[:T0[,cooling]]");
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    buffon::write_json_file(out, j);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Buffon discrepancy toolkit: constructions, evaluation, verification and rendering"};
  app.footer(kExitHelp);
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (0: BUFFON_THREADS or all cores)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a set");
  gen->require_subcommand(1);
  double gen_length = 0.0;
  std::string gen_out;
  auto* gen_disk = gen->add_subcommand("disk-circles", "Concentric circles in the unit disk");
  gen_disk->add_option("--L", gen_length, "Total length")->required();
  gen_disk->add_option("--out", gen_out, "Output set file")->required();

  auto* gen_st = gen->add_subcommand("steinhaus", "Steinhaus line families clipped to a domain");
  int st_n = 0;
  double st_eps = 0.0;
  std::string st_domain = "disk";
  std::size_t st_cap = buffon::kDefaultPrimitiveCap;
  auto* st_len = gen_st->add_option("--L", gen_length, "Target length (n = round(L^1/3), eps = 1/round(L^2/3))");
  auto* st_n_opt = gen_st->add_option("--n", st_n, "Number of directions");
  auto* st_eps_opt = gen_st->add_option("--eps", st_eps, "Line spacing");
  st_len->excludes(st_n_opt)->excludes(st_eps_opt);
  st_n_opt->needs(st_eps_opt);
  st_eps_opt->needs(st_n_opt);
  gen_st->add_option("--domain", st_domain, "Domain spec");
  gen_st->add_option("--cap", st_cap, "Maximum candidate lines");
  gen_st->add_option("--out", gen_out, "Output set file")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate the discrepancy of a set");
  std::string eval_set, eval_domain = "disk", eval_method = "scan", eval_out;
  int eval_theta = 4096;
  std::size_t eval_samples = 100000;
  std::uint64_t eval_seed = 1;
  std::optional<double> eval_factor;
  bool eval_no_cert = false;
  eval->add_option("set", eval_set, "Set file")->required();
  eval->add_option("--domain", eval_domain, "Domain spec");
  eval->add_option("--method", eval_method, "scan or mc")->check(CLI::IsMember({"scan", "mc"}));
  eval->add_option("--theta-count", eval_theta, "Angles for the scan");
  eval->add_option("--samples", eval_samples, "Lines for Monte Carlo");
  eval->add_option("--seed", eval_seed, "Monte Carlo seed");
  eval->add_option("--factor", eval_factor, "Replace the Crofton factor");
  eval->add_flag("--no-certify", eval_no_cert, "Skip the upper-bound sweep");
  eval->add_option("--out", eval_out, "Report file (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite, verify_out, verify_lengths;
  buffon::VerifyOptions vopts;
  verify->add_option("suite", suite, "crofton|proposition|harmonic|theorem1|longimeter")
      ->required()
      ->check(CLI::IsMember({"crofton", "proposition", "harmonic", "theorem1", "longimeter"}));
  verify->add_option("--resolution", vopts.resolution, "Theta cells for crofton");
  verify->add_option("--sets", vopts.random_sets, "Random sets for crofton");
  verify->add_option("--n", vopts.n, "Directions for longimeter");
  verify->add_option("--L", verify_lengths, "Comma-separated lengths");
  verify->add_option("--theta-count", vopts.theta_count, "Angles for scans");
  verify->add_option("--r-grid", vopts.r_grid, "Radius grid for theorem1");
  verify->add_option("--draws", vopts.theta_draws, "Random angles per n for harmonic");
  verify->add_option("--seed", vopts.seed, "Seed");
  verify->add_option("--out", verify_out, "Summary file (default: stdout)");

  // scan
  auto* scan = app.add_subcommand("scan", "Parameter sweeps");
  scan->require_subcommand(1);
  auto* scaling = scan->add_subcommand("scaling", "Steinhaus sup discrepancy against L");
  std::string scan_lengths, scan_domain = "disk", scan_csv, scan_out;
  int scan_theta = 4096;
  bool scan_no_cert = false;
  scaling->add_option("--L", scan_lengths, "Comma-separated lengths")->required();
  scaling->add_option("--domain", scan_domain, "Domain spec including pose");
  scaling->add_option("--theta-count", scan_theta, "Angles for each scan");
  scaling->add_flag("--no-certify", scan_no_cert, "Skip the upper-bound sweep");
  scaling->add_option("--csv", scan_csv, "CSV table");
  scaling->add_option("--out", scan_out, "JSON table (default: stdout)");

  // render
  auto* render = app.add_subcommand("render", "Render a set as SVG");
  std::string render_set, render_domain = "disk", render_witness, render_out;
  buffon::SvgStyle style;
  render->add_option("set", render_set, "Set file")->required();
  render->add_option("--domain", render_domain, "Domain spec");
  render->add_option("--witness", render_witness, "Report whose witness line is drawn");
  render->add_option("--size", style.size_px, "Image size in pixels");
  render->add_option("--stroke", style.stroke, "Stroke width in domain units");
  render->add_option("--out", render_out, "SVG file")->required();

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Local search for low-discrepancy segment sets");
  std::string opt_domain = "disk", opt_eval = "mc:4096", opt_sched = "greedy", opt_out, opt_history, opt_report;
  buffon::SearchConfig sconf;
  optimize->add_option("--domain", opt_domain, "Domain spec");
  optimize->add_option("--segments", sconf.segment_count, "Segment count");
  optimize->add_option("--L", sconf.length_budget, "Total length");
  optimize->add_option("--iterations", sconf.iterations, "Iterations");
  optimize->add_option("--scale", sconf.proposal_scale, "Endpoint jitter standard deviation");
  optimize->add_option("--seed", sconf.seed, "Seed");
  optimize->add_option("--evaluator", opt_eval, "mc[:samples] or scan[:theta_count]");
  optimize->add_option("--schedule", opt_sched, "greedy or sa[:T0[,cooling]]");
  optimize->add_option("--final-theta-count", sconf.final_theta_count, "Angles for the final scan");
  optimize->add_option("--out", opt_out, "Output set file")->required();
  optimize->add_option("--history", opt_history, "History as JSON lines");
  optimize->add_option("--report", opt_report, "Final scan report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Manifest manifest;
    if (gen->parsed()) {
      buffon::RectifiableSet set;
      manifest.command = "gen";
      if (gen_disk->parsed()) {
        set = buffon::disk_construction(gen_length);
        manifest.config = {{"kind", "disk-circles"}, {"L", gen_length}};
      } else {
        const auto domain = buffon::parse_domain_spec(st_domain);
        if (*st_len) {
          auto build = buffon::steinhaus_for_length(gen_length, domain, st_cap);
          set = std::move(build.set);
          manifest.config = {{"kind", "steinhaus"}, {"L", gen_length}};
        } else if (*st_n_opt) {
          set = buffon::steinhaus_clip({st_n, st_eps}, domain, st_cap);
          manifest.config = {{"kind", "steinhaus"}, {"n", st_n}, {"eps", st_eps}};
        } else {
          throw std::invalid_argument("steinhaus needs --L or --n with --eps");
        }
        set.metadata()["domain"] = st_domain;
        manifest.config["domain"] = st_domain;
        manifest.config["cap"] = st_cap;
      }
      buffon::write_json_file(gen_out, buffon::set_to_json(set));
      manifest.outputs.push_back(gen_out);
      std::cerr << set.size() << " primitives, total length " << set.total_length() << '\n';
    } else if (eval->parsed()) {
      const auto set = buffon::set_from_json(buffon::read_json_file(eval_set));
      const auto domain = buffon::parse_domain_spec(eval_domain);
      json config{{"domain", eval_domain}, {"method", eval_method}, {"threads", threads}};
      if (eval_factor) config["factor"] = *eval_factor;
      buffon::DiscrepancyReport report;
      if (eval_method == "scan") {
        buffon::ScanConfig sc;
        sc.theta_count = eval_theta;
        sc.factor_override = eval_factor;
        sc.certify = !eval_no_cert;
        sc.threads = threads;
        config["theta_count"] = eval_theta;
        config["certify"] = sc.certify;
        report = buffon::sup_discrepancy_scan(set, domain, sc);
      } else {
        buffon::McConfig mc;
        mc.samples = eval_samples;
        mc.seed = eval_seed;
        mc.factor_override = eval_factor;
        mc.threads = threads;
        config["samples"] = eval_samples;
        config["seed"] = eval_seed;
        report = buffon::sup_discrepancy_mc(set, domain, mc);
      }
      emit(buffon::report_to_json(report, config), eval_out);
      manifest.command = "eval";
      manifest.config = config;
      manifest.inputs.push_back(eval_set);
      if (!eval_out.empty()) manifest.outputs.push_back(eval_out);
    } else if (verify->parsed()) {
      if (!verify_lengths.empty()) vopts.lengths = parse_list(verify_lengths);
      vopts.threads = threads;
      const auto result = buffon::run_suite(suite, vopts);
      emit(buffon::suite_to_json(result), verify_out);
      for (const auto& c : result.checks) {
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.value << " (limit " << c.limit << ")";
        if (!c.note.empty()) std::cerr << " [" << c.note << "]";
        std::cerr << '\n';
      }
      manifest.command = "verify";
      manifest.config = {{"suite", suite},           {"resolution", vopts.resolution}, {"sets", vopts.random_sets},
                         {"n", vopts.n},             {"L", vopts.lengths},             {"theta_count", vopts.theta_count},
                         {"r_grid", vopts.r_grid},   {"draws", vopts.theta_draws},     {"seed", vopts.seed}};
      if (!verify_out.empty()) manifest.outputs.push_back(verify_out);
      manifest.write();
      return result.passed ? kOk : kVerifyFailed;
    } else if (scan->parsed()) {
      const auto lengths = parse_list(scan_lengths);
      const auto domain = buffon::parse_domain_spec(scan_domain);
      buffon::ScanConfig sc;
      sc.theta_count = scan_theta;
      sc.certify = !scan_no_cert;
      sc.threads = threads;
      const auto study = buffon::scaling_study(domain, lengths, sc);
      json rows = json::array();
      std::ostringstream csv;
      csv << "L,n,epsilon,realized_length,primitives,sup,certified_gap,sup_over_L13\n";
      char line[512];
      for (const auto& r : study.rows) {
        const double ratio = r.sup_value / std::cbrt(r.length);
        rows.push_back({{"L", r.length},
                        {"n", r.n},
                        {"epsilon", r.epsilon},
                        {"realized_length", r.realized_length},
                        {"primitives", r.primitives},
                        {"sup", r.sup_value},
                        {"certified_gap", std::isfinite(r.certified_gap) ? json(r.certified_gap) : json(nullptr)},
                        {"sup_over_L13", ratio},
                        {"witness", buffon::line_to_json(r.witness)}});
        std::snprintf(line, sizeof line, "%.17g,%d,%.17g,%.17g,%zu,%.17g,%.17g,%.17g\n", r.length, r.n, r.epsilon,
                      r.realized_length, r.primitives, r.sup_value, r.certified_gap, ratio);
        csv << line;
      }
      json out{{"domain", scan_domain}, {"theta_count", scan_theta}, {"rows", rows}, {"fit", nullptr}};
      if (study.fit) {
        out["fit"] = {{"slope", study.fit->slope}, {"intercept", study.fit->intercept},
                      {"residuals", study.fit->residuals}};
      } else {
        std::cerr << "fewer than three lengths: no fit\n";
      }
      emit(out, scan_out);
      if (!scan_csv.empty()) write_text(scan_csv, csv.str());
      manifest.command = "scan scaling";
      manifest.config = {{"L", lengths}, {"domain", scan_domain}, {"theta_count", scan_theta},
                         {"certify", sc.certify}};
      if (!scan_out.empty()) manifest.outputs.push_back(scan_out);
      if (!scan_csv.empty()) manifest.outputs.push_back(scan_csv);
    } else if (render->parsed()) {
      const auto set = buffon::set_from_json(buffon::read_json_file(render_set));
      const auto domain = buffon::parse_domain_spec(render_domain);
      std::optional<buffon::LineCoords> witness;
      manifest.inputs.push_back(render_set);
      if (!render_witness.empty()) {
        witness = buffon::report_from_json(buffon::read_json_file(render_witness)).witness;
        manifest.inputs.push_back(render_witness);
      }
      write_text(render_out, buffon::render_svg(set, domain, witness, style));
      manifest.command = "render";
      manifest.config = {{"domain", render_domain}, {"size", style.size_px}, {"stroke", style.stroke}};
      manifest.outputs.push_back(render_out);
    } else if (optimize->parsed()) {
      const auto domain = buffon::parse_domain_spec(opt_domain);
      sconf.evaluator = parse_evaluator(opt_eval);
      sconf.schedule = parse_schedule(opt_sched);
      sconf.threads = threads;
      const auto result = buffon::optimize(domain, sconf);
      auto set = result.set;
      set.metadata()["domain"] = opt_domain;
      buffon::write_json_file(opt_out, buffon::set_to_json(set));
      manifest.outputs.push_back(opt_out);
      if (!opt_history.empty()) {
        std::ostringstream h;
        for (const auto& step : result.history) {
          h << json{{"iteration", step.iteration}, {"objective", step.objective}, {"accepted", step.accepted}}.dump()
            << '\n';
        }
        write_text(opt_history, h.str());
        manifest.outputs.push_back(opt_history);
      }
      if (!opt_report.empty()) {
        buffon::write_json_file(opt_report, buffon::report_to_json(result.report));
        manifest.outputs.push_back(opt_report);
      }
      std::cerr << "objective " << result.initial_objective << " -> " << result.best_objective << ", final scan sup "
                << result.report.sup_value << '\n';
      manifest.command = "optimize";
      manifest.config = {{"domain", opt_domain},      {"segments", sconf.segment_count},
                         {"L", sconf.length_budget},  {"iterations", sconf.iterations},
                         {"scale", sconf.proposal_scale}, {"seed", sconf.seed},
                         {"evaluator", opt_eval},     {"schedule", opt_sched},
                         {"final_theta_count", sconf.final_theta_count}};
    }
    manifest.config["threads"] = threads;
    manifest.write();
    return kOk;
  } catch (const buffon::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const buffon::DegenerateLineError& e) {
    std::cerr << "degenerate line: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
