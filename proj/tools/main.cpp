#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace cuspgroup::cli;

namespace {

struct DatumArgs {
  std::int64_t n = 0;
  std::int64_t m = 1;
  std::int64_t d = 1;
};

void add_datum(CLI::App* sub, DatumArgs& a) {
  sub->add_option("N", a.n, "level")->required();
  sub->add_option("--M", a.m, "M, a divisor of N^sf D")->required();
  sub->add_option("--D", a.d, "D, a divisor of N^sq")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuspidal divisor classes and rational Eisenstein primes on X_0(N)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--timing", timing, "print elapsed time on stderr");

  std::int64_t n = 0;
  DatumArgs datum;
  bool inverse = false;
  std::string method = "both";
  int prec = 60;
  std::int64_t p = 0;
  std::string divisor;
  std::optional<std::int64_t> ell;
  std::int64_t max_n = 0;

  auto* cusps = app.add_subcommand("cusps", "enumerate the cusps of X_0(N)");
  cusps->add_option("N", n, "level")->required();

  auto* lambda = app.add_subcommand("lambda", "the matrix Lambda(N) or its inverse");
  lambda->add_option("N", n, "level")->required();
  lambda->add_flag("--inverse", inverse, "print the block-recursive inverse");

  auto* cdiv = app.add_subcommand("cdivisor", "the divisor C^D_{M,N} and its R vector");
  add_datum(cdiv, datum);

  auto* order = app.add_subcommand("order", "order of the class of C^D_{M,N}");
  add_datum(order, datum);
  order->add_option("--method", method, "closed, lattice or both")
      ->check(CLI::IsMember({"closed", "lattice", "both"}))
      ->capture_default_str();

  auto* residues = app.add_subcommand("residues", "residues of E^D_{M,N} at each cusp level");
  add_datum(residues, datum);

  auto* qexp = app.add_subcommand("qexp", "q-expansion of E^D_{M,N}");
  add_datum(qexp, datum);
  qexp->add_option("--prec", prec, "precision")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* hecke = app.add_subcommand("hecke", "Delta_p on a rational cuspidal divisor");
  hecke->add_option("N", n, "level")->required();
  hecke->add_option("--p", p, "prime")->required();
  hecke->add_option("--divisor", divisor, "level:coefficient pairs, e.g. 1:1,11:-1")->required();

  auto* classify = app.add_subcommand("classify", "rational Eisenstein primes of level N");
  classify->add_option("N", n, "level")->required();
  classify->add_option("--ell", ell, "restrict to this prime");

  auto* sweep = app.add_subcommand("sweep", "check every invariant for all levels up to max-N");
  sweep->add_option("--max-N", max_n, "largest level")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ExitCode::invalid_input;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  if (cusps->parsed()) {
    r = cmd_cusps(n);
  } else if (lambda->parsed()) {
    r = cmd_lambda(n, inverse);
  } else if (cdiv->parsed()) {
    r = cmd_cdivisor(datum.n, datum.m, datum.d);
  } else if (order->parsed()) {
    r = cmd_order(datum.n, datum.m, datum.d, parse_order_method(method));
  } else if (residues->parsed()) {
    r = cmd_residues(datum.n, datum.m, datum.d);
  } else if (qexp->parsed()) {
    r = cmd_qexp(datum.n, datum.m, datum.d, prec);
  } else if (hecke->parsed()) {
    r = cmd_hecke(n, p, divisor);
  } else if (classify->parsed()) {
    r = cmd_classify(n, ell);
  } else if (sweep->parsed()) {
    r = cmd_sweep(max_n);
  }
  std::cout << render(r, format == "json" ? Format::json : Format::text);
  if (timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << dt.count() << " s\n";
  }
  return r.exit_code;
}
