#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qconcept/dataset.hpp"
#include "qconcept/report.hpp"
#include "selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kItemError = 1;
constexpr int kConfigError = 2;

struct Config {
  std::string input;
  bool embedded = false;
  std::string output;
  std::string kind = "auto";
  double tolerance = 1e-12;
  unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Config& cfg, bool with_kind) {
  auto* in = cmd->add_option("--input", cfg.input, "CSV dataset")->check(CLI::ExistingFile);
  auto* emb = cmd->add_flag("--embedded", cfg.embedded, "use the built-in reference corpus");
  in->excludes(emb);
  emb->excludes(in);
  cmd->add_option("--output", cfg.output, "write to PATH instead of standard output");
  cmd->add_option("--tolerance", cfg.tolerance, "solver residual tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  if (with_kind) {
    cmd->add_option("--kind", cfg.kind, "model family")
        ->check(CLI::IsMember({"auto", "c3", "fock", "r8"}));
  }
}

qc::KindFilter kind_of(const std::string& s) {
  if (s == "c3") return qc::KindFilter::C3;
  if (s == "fock") return qc::KindFilter::Fock;
  if (s == "r8") return qc::KindFilter::R8;
  return qc::KindFilter::Auto;
}

int emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << cfg.output << '\n';
    return kConfigError;
  }
  out << text;
  return kOk;
}

int run_analysis(const Config& cfg, qc::Stage stage, const CLI::App& cmd) {
  if (cfg.input.empty() == !cfg.embedded) {
    std::cerr << "error: exactly one of --input or --embedded is required\n\n" << cmd.help();
    return kConfigError;
  }
  qc::Dataset data;
  if (cfg.embedded) {
    data = qc::embedded_samples();
  } else {
    std::ifstream in(cfg.input);
    if (!in) {
      std::cerr << "error: cannot read " << cfg.input << '\n';
      return kConfigError;
    }
    auto parsed = qc::parse_dataset(in);
    if (!parsed) {
      std::cerr << cfg.input << ": " << qc::to_string(parsed.error()) << '\n';
      return kConfigError;
    }
    data = std::move(parsed.value());
  }

  qc::AnalysisOptions opt;
  opt.stage = stage;
  opt.kind = kind_of(cfg.kind);
  opt.jobs = cfg.jobs;
  opt.fit.solver.tolerance = cfg.tolerance;
  const qc::Report report = qc::analyze(data, opt);
  const int rc = emit(cfg, qc::report_json(report, 2) + "\n");
  if (rc != kOk) return rc;
  return qc::has_item_errors(report) ? kItemError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify concept-combination membership data and build quantum models."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qconcept 0.1.0");

  Config cfg;
  auto* classify = app.add_subcommand("classify", "label every item and report its factors");
  add_common(classify, cfg, false);
  auto* model = app.add_subcommand("model", "build a C^3, Fock or R^8 model per item");
  add_common(model, cfg, true);
  auto* fit = app.add_subcommand("fit-angles", "fit the pair angles, then solve every item");
  add_common(fit, cfg, false);
  auto* report = app.add_subcommand("report", "classification, models and relative weights");
  add_common(report, cfg, false);
  auto* selftest = app.add_subcommand("selftest", "replay the built-in reference examples");
  selftest->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  if (*classify) return run_analysis(cfg, qc::Stage::Classify, *classify);
  if (*model) return run_analysis(cfg, qc::Stage::Model, *model);
  if (*fit) return run_analysis(cfg, qc::Stage::FitAngles, *fit);
  if (*report) return run_analysis(cfg, qc::Stage::Full, *report);
  if (*selftest) return qc::selftest::run_all(std::cout, cfg.jobs) == 0 ? kOk : kItemError;
  return kConfigError;
}
