#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "monopole/cli.hpp"

namespace {

void add_common(CLI::App* app, monopole::cli::RunConfig& c, std::string& format, std::string& output) {
  app->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app->add_option("-o,--output", output, "write the report to a file instead of stdout");
  app->add_option("--tolerance", c.tolerance, "absolute tolerance for numeric residuals");
}

}  // namespace

int main(int argc, char** argv) {
  monopole::cli::RunConfig c;
  std::string format = "json";
  std::string output;

  CLI::App app{"monopole_star: star product of the quaternionic Weyl correspondence for a monopole field"};
  app.require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "bidifferential operators B_0 .. B_N");
  expand->add_option("--order", c.order, "truncation order N");
  auto* symbolic = expand->add_flag("--mu-symbolic", "keep mu = eg as a formal parameter (default)");
  auto* bind = expand->add_flag("--mu-bind", "substitute mu = hbar/2 and regrade");
  symbolic->excludes(bind);
  expand->add_option("--reference", c.reference_path, "reference table to compare against");
  add_common(expand, c, format, output);

  auto* verify = app.add_subcommand("verify", "identity checks");
  verify->add_option("target", c.target, "assoc | kontsevich | cocycle | weakrep | multiplier | zassenhaus | all")
      ->required()
      ->check(CLI::IsMember({"assoc", "kontsevich", "cocycle", "weakrep", "multiplier", "zassenhaus", "all"}));
  verify->add_option("--order", c.order, "hbar order (assoc, zassenhaus specialization)");
  verify->add_option("--family", c.family, "acceptance | coords | constants | radial | 'expr;expr;...'");
  verify->add_option("--samples", c.samples, "random configurations (cocycle, weakrep)");
  verify->add_option("--configs", c.configs, "random configurations (multiplier)");
  verify->add_option("--seed", c.seed, "random seed");
  verify->add_option("--orders", c.orders, "truncation orders (multiplier)")->delimiter(',');
  verify->add_option("--hbars", c.hbars, "hbar values (multiplier)")->delimiter(',');
  verify->add_option("--slope-margin", c.slope_margin, "required slope is N + 1 - margin");
  verify->add_option("--max-degree", c.max_degree, "free-algebra degree (zassenhaus)");
  verify->add_option("--reference", c.reference_path, "reference table (all)");
  add_common(verify, c, format, output);

  auto* eval = app.add_subcommand("eval", "pointwise evaluation");
  eval->add_option("target", c.target, "kernel | star")->required()->check(CLI::IsMember({"kernel", "star"}));
  eval->add_option("--point", c.point, "kernel point as JSON: {p1,q1,p2,q2,p,q: [x,y,z], hbar}");
  eval->add_option("--f", c.f, "left symbol, e.g. 'p1*q2 + rinv'");
  eval->add_option("--g", c.g, "right symbol");
  eval->add_option("--order", c.order, "hbar order (star)");
  add_common(eval, c, format, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : monopole::cli::kConfigError;
  }

  if (expand->parsed()) {
    c.command = "expand";
    c.mu_bind = bind->count() > 0;
  } else if (verify->parsed()) {
    c.command = "verify";
  } else {
    c.command = "eval";
  }

  const monopole::cli::RunResult result = monopole::cli::run(c);
  const std::string text =
      format == "text" ? monopole::cli::render_text(result.report) : result.report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return monopole::cli::kConfigError;
    }
    out << text;
  }
  return result.exit_code;
}
