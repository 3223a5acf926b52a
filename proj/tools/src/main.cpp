#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "cablecone/cfk_io.hpp"
#include "cablecone/pipeline.hpp"
#include "cablecone/verify/suite.hpp"

namespace {

struct ComputeArgs {
  std::string knot;
  std::string cfk_path;
  cablecone::Int n = 1;
  std::string surgery = "1";
  std::string window;
  bool mirror = false;
  std::string emit = "text";
};

// CABLECONE_LOG=trace|debug|info|warn|error|off, default warn.
void setup_logging() {
  auto logger = spdlog::stderr_logger_st("cablecone");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("CABLECONE_LOG")) {
    const auto level = spdlog::level::from_str(env);
    if (level == spdlog::level::off && std::string_view(env) != "off")
      spdlog::warn("ignoring CABLECONE_LOG={}", env);
    else
      spdlog::set_level(level);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cablecone::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int compute(const ComputeArgs& a) {
  using namespace cablecone;
  try {
    PipelineInput in;
    if (!a.cfk_path.empty()) {
      in.knot_label = "cfk:" + a.cfk_path;
      try {
        in.knot = parse_cfk(read_file(a.cfk_path));
      } catch (const CfkParseError& e) {
        throw InputError(a.cfk_path + ": " + e.what());
      } catch (const CfkValidationError& e) {
        throw InputError(a.cfk_path + ": " + e.what());
      }
    } else {
      in.knot_label = a.knot;
      in.knot = knot_from_spec(a.knot);
    }
    if (a.n < 1) throw InputError("--cable-n must be positive");
    in.n = a.n;
    in.surgery = parse_surgery(a.surgery);
    if (!a.window.empty()) in.window = parse_window(a.window);
    in.mirror = a.mirror;
    spdlog::info("knot {} with {} generators, n = {}, surgery {}", in.knot_label, in.knot.size(), in.n,
                 in.surgery.to_string());

    const Report r = run_pipeline(in);
    spdlog::info("cone {} generators, reduced to {} after {} cancellations", r.generators_cone,
                 r.generators_reduced, r.cancellations);
    if (r.standard_sequence_status != "ok")
      spdlog::warn("standard sequence {}: {}", r.standard_sequence_status, r.standard_sequence_detail);
    if (r.standard_complex_x_status != "ok")
      spdlog::warn("standard complex over X {}: {}", r.standard_complex_x_status, r.standard_complex_x_detail);

    std::cout << serialize_report(r, a.emit == "json" ? ReportFormat::Json : ReportFormat::Text);
    return exit_code(r);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int verify(const std::string& name) {
  namespace v = cablecone::verify;
  const auto suite = v::parse_suite(name);
  if (!suite) {
    std::cerr << "error: unknown suite '" << name << "'\n";
    return 1;
  }
  bool ok = true;
  std::size_t passed = 0;
  const auto results = v::run_suite(*suite);
  for (const auto& r : results) {
    std::cout << v::format_result(r) << '\n';
    ok = ok && r.passed;
    passed += r.passed ? 1 : 0;
  }
  std::cout << v::suite_name(*suite) << ": " << passed << "/" << results.size() << " passed\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Knot Floer complexes of cables in surgeries on torus knots"};
  app.require_subcommand(1);

  ComputeArgs args;
  auto* cmd = app.add_subcommand("compute", "Build, reduce and standardize the mapping cone");
  auto* knot = cmd->add_option("--knot", args.knot, "torus:2,<q>");
  auto* cfk = cmd->add_option("--cfk", args.cfk_path, "CFK file")->check(CLI::ExistingFile);
  knot->excludes(cfk);
  cmd->add_option("--cable-n", args.n, "Cable parameter n")->required();
  cmd->add_option("--surgery", args.surgery, "1 or 1/<p>")->capture_default_str();
  cmd->add_option("--window", args.window, "Tower window a,b");
  cmd->add_flag("--mirror", args.mirror, "Dualize the input complex first");
  cmd->add_option("--emit", args.emit, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string suite;
  auto* ver = app.add_subcommand("verify", "Run a check suite");
  ver->add_option("suite", suite, "paper, properties or oracles")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*cmd) {
    if (args.knot.empty() && args.cfk_path.empty()) {
      std::cerr << "error: one of --knot or --cfk is required\n";
      return 1;
    }
    return compute(args);
  }
  return verify(suite);
}
