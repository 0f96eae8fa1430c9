#include "superweyl/cli.hpp"

#include "CLI11.hpp"
#include "superweyl/report.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <ostream>

namespace superweyl {

namespace {

struct Flags {
  RunConfig config;
  std::string mu = "1/2";
  std::string format = "json";
  std::string algebra;
  int N = 0;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--window", f.config.window, "mode window W")->capture_default_str();
  sub->add_option("--depth", f.config.depth, "generation depth")->capture_default_str();
  sub->add_option("--tau-floor", f.config.tau_floor, "lowest tau-exponent kept in symbol products")
      ->capture_default_str();
  sub->add_option("--mu", f.mu, "module parameter (0 or non-integer)")->capture_default_str();
  sub->add_option("--out", f.config.out, "write the report here instead of stdout");
  sub->add_option("--format", f.format, "json or csv (export-tables)")->capture_default_str();
  sub->add_option("--N", f.N, "rank of the Clifford superalgebra (generate)");
  sub->add_option("--algebra", f.algebra, "K2, K4hat or CK6 (export-tables)");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of superconformal algebras realized by Weyl supermatrices", "superweyl"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<CLI::App*> subs;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    add_flags(sub, flags);
    subs.push_back(sub);
  }

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig& cfg = flags.config;
  for (CLI::App* sub : subs)
    if (sub->parsed()) {
      cfg.command = sub->get_name();
      if (sub->count("--N") > 0) cfg.N = flags.N;
    }
  try {
    cfg.mu = parse_gaussian_rational(flags.mu);
    cfg.format = parse_table_format(flags.format);
    if (!flags.algebra.empty()) cfg.algebra = parse_algebra(flags.algebra);
    validate(cfg);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Report report;
  try {
    report = run_report(cfg);
  } catch (const std::exception& e) {
    err << cfg.command << ": error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    out << report.payload;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (file) file << report.payload;
    if (!file) {
      err << cfg.command << ": cannot write " << cfg.out << ": " << std::strerror(errno) << "\n";
      return 1;
    }
  }
  for (const auto& line : report.summary) err << line << "\n";
  err << cfg.command << ": " << (report.passed ? "PASS" : "FAIL") << "\n";
  return report.passed ? 0 : 1;
}

}  // namespace superweyl
