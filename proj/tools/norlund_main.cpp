#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "norlund/commands.hpp"
#include "norlund/rational.hpp"
#include "norlund/verify.hpp"

namespace {

int run_eval(const std::string& family, unsigned int n, const std::string& alpha,
             const std::optional<std::string>& x, const std::string& method,
             const std::string& format) {
  norlund::EvalRequest req;
  req.family = norlund::parse_family(family);
  req.n = n;
  req.alpha = norlund::Rational::from_string(alpha);
  if (x) req.x = norlund::Rational::from_string(*x);
  req.method = norlund::parse_method(method);
  req.format = norlund::parse_format(format);

  norlund::EvalResult result = norlund::cmd_eval(req);
  norlund::render_eval(result, std::cout);
  if (result.agreement && !*result.agreement) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "norlund: exact higher-order Bernoulli and Euler polynomial calculator"};
  app.require_subcommand(1);

  std::string family;
  std::string alpha = "1";
  std::string x;
  std::string method = "all";
  std::string format = "plain";
  unsigned int n = 0;
  unsigned int nmax = 0;
  norlund::VerifyOptions verify_opts;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one polynomial or number");
  eval->add_option("--family", family, "bernoulli or euler")->required();
  eval->add_option("--n", n, "degree")->required();
  eval->add_option("--alpha", alpha, "order, as p/q or an integer")->required();
  CLI::Option* x_opt = eval->add_option(
      "--x", x, "evaluation point; omit for the coefficient list "
      "(closed) or x=0 (det, series); write --x=-3/4 for negatives");
  eval->add_option("--method", method, "closed, det, series, or all")
      ->capture_default_str();
  eval->add_option("--format", format, "json, csv, latex, or plain")
      ->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "Tabulate numbers for n = 0..nmax");
  table->add_option("--family", family, "bernoulli or euler")->required();
  table->add_option("--nmax", nmax, "last row")->required();
  table->add_option("--alpha", alpha, "order, as p/q or an integer")->required();
  table->add_option("--format", format, "json, csv, latex, or plain")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("--max-n", verify_opts.max_n, "degree bound")
      ->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "randomness seed")
      ->capture_default_str();
  verify->add_flag("--corrupt-gamma1", verify_opts.corrupt_gamma1)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*eval) {
      std::optional<std::string> x_arg;
      if (x_opt->count() > 0) x_arg = x;
      return run_eval(family, n, alpha, x_arg, method, format);
    }
    if (*table) {
      norlund::cmd_table(norlund::parse_family(family), nmax,
                         norlund::Rational::from_string(alpha),
                         norlund::parse_format(format), std::cout);
      return 0;
    }
    return norlund::cmd_verify(verify_opts, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
