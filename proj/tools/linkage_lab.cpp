// linkage-lab: batch runner for session files.
//
//   linkage-lab run --input FILE [--json PATH] [--step-budget N] [--r-max N]
//                   [--degree-cap N] [--parallel] [--timing]
//   linkage-lab check FILE
//
// Exit status: 0 when every report is ok or verified, 1 otherwise, 2 on
// parse or I/O errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "llab/error.hpp"
#include "llab/session.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw llab::Error(llab::ErrorCode::IOError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Links, Koszul lengths and Rees algebras of desk-scale ideals"};
  app.require_subcommand(1);

  llab::Limits lim;
  if (const char* env = std::getenv("LINKAGE_LAB_BUDGET")) {
    try {
      lim.step_budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring LINKAGE_LAB_BUDGET=" << env << "\n";
    }
  }

  std::string input, json_path, check_path;
  bool parallel = false, timing = false;
  auto* run = app.add_subcommand("run", "execute a session file");
  run->add_option("--input", input, "session file")->required();
  run->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  run->add_option("--step-budget", lim.step_budget, "pair reductions per Groebner run");
  run->add_option("--r-max", lim.r_max, "reduction-number search bound")->check(CLI::NonNegativeNumber);
  run->add_option("--degree-cap", lim.degree_cap, "degree cap for length enumeration")->check(CLI::PositiveNumber);
  run->add_flag("--parallel", parallel, "run commands concurrently");
  run->add_flag("--timing", timing, "record wall time per command");

  auto* check = app.add_subcommand("check", "parse a session file without running it");
  check->add_option("file", check_path, "session file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      llab::session::SessionAST ast = llab::session::parse_session(slurp(check_path));
      std::cout << check_path << ": " << ast.statements.size() << " statements\n";
      return 0;
    }
    llab::session::SessionAST ast = llab::session::parse_session(slurp(input));
    llab::session::RunOptions opts{lim, parallel, timing};
    std::vector<llab::session::Report> reports = llab::session::run_session(ast, opts);
    if (json_path == "-") {
      std::cout << llab::session::emit_report(reports, llab::session::Format::Json);
    } else {
      std::cout << llab::session::emit_report(reports, llab::session::Format::Text);
      if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << llab::session::emit_report(reports, llab::session::Format::Json);
        if (!out) throw llab::Error(llab::ErrorCode::IOError, "cannot write " + json_path);
      }
    }
    return llab::session::all_ok(reports) ? 0 : 1;
  } catch (const llab::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
