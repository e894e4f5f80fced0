// Command-line front end: `verify` runs identity suites and writes a report,
// `eval` prints single exact quantities.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cigler/error.hpp"
#include "cigler/expansion.hpp"
#include "cigler/hankel.hpp"
#include "cigler/qhermite.hpp"
#include "cigler/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n_max;
  std::string mode = "random";
  int trials = 25;
  std::uint64_t seed = 7;
  long bound = 1000;
  std::vector<std::string> qs;
  std::vector<std::string> as;
  std::string out = "-";
  std::string format = "json";
  std::string mutate;
};

struct EvalArgs {
  std::string what;
  int n = 0;
  std::optional<int> k;
  int eps = 0;
  std::string q;
  std::string a;
};

cigler::Mutation parse_mutation(const std::string &text) {
  if (text.empty())
    return {};
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw cigler::InvalidInput("--mutate expects b:K or lambda:K");
  const std::string target = text.substr(0, colon);
  cigler::Mutation m;
  if (target == "b")
    m.target = cigler::Mutation::Target::b;
  else if (target == "lambda")
    m.target = cigler::Mutation::Target::lambda;
  else
    throw cigler::InvalidInput("--mutate target must be b or lambda");
  try {
    m.index = std::stoi(text.substr(colon + 1));
  } catch (const std::exception &) {
    throw cigler::InvalidInput("--mutate index must be an integer");
  }
  return m;
}

int run_verify(const VerifyArgs &args) {
  cigler::SuiteConfig config;
  config.suite = cigler::parse_suite(args.suite);
  config.n_max = args.n_max;
  config.mode = cigler::parse_mode(args.mode);
  config.trials = args.trials;
  config.seed = args.seed;
  config.bound = args.bound;
  config.mutation = parse_mutation(args.mutate);
  if (args.qs.size() != args.as.size())
    throw cigler::InvalidInput("--q and --a must be given the same number of times");
  for (std::size_t i = 0; i < args.qs.size(); ++i)
    config.explicit_points.emplace_back(cigler::Rational::parse(args.qs[i]), cigler::Rational::parse(args.as[i]));
  if (args.format != "json" && args.format != "csv")
    throw cigler::InvalidInput("--format must be json or csv");
  const auto format = args.format == "json" ? cigler::ReportFormat::json : cigler::ReportFormat::csv;

  const auto report = cigler::run_suite(config);
  if (args.out == "-") {
    std::cout << (format == cigler::ReportFormat::json ? cigler::render_json(report)
                                                       : cigler::render_csv(report));
  } else {
    cigler::emit_report(report, format, args.out);
  }
  for (const auto &r : report.identities)
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << " n=" << r.n_lo << ".." << r.n_hi
              << " points=" << r.points << '\n';
  return report.passed() ? kExitPass : kExitFail;
}

void print_polynomial(const cigler::Polynomial &p) {
  for (int j = 0; j <= p.degree(); ++j)
    std::cout << j << ' ' << p.coeff(j) << '\n';
}

int run_eval(const EvalArgs &args) {
  using namespace cigler;
  const Rational q = Rational::parse(args.q);
  if (args.what == "hermite") {
    const auto h = hermite_laurent(args.n, q);
    for (const auto &[e, c] : h.poly.terms())
      std::cout << e << ' ' << c << '\n';
    return kExitPass;
  }
  if (args.a.empty())
    throw InvalidInput("--a is required for --what " + args.what);
  const QPoint point = QPoint::make(q, Rational::parse(args.a));
  if (args.eps != 0 && args.eps != 1)
    throw InvalidInput("--eps must be 0 or 1");

  if (args.what == "b") {
    std::cout << coeff_b(args.n, point) << '\n';
  } else if (args.what == "lambda") {
    std::cout << coeff_lambda(args.n, point) << '\n';
  } else if (args.what == "s") {
    print_polynomial(s_polynomial(args.n, point));
  } else if (args.what == "moment") {
    std::cout << moments(args.n, point).mu.back() << '\n';
  } else if (args.what == "P") {
    std::cout << cigler_P(args.n, point) << '\n';
  } else if (args.what == "pi") {
    auto p = pi_product(args.n, point);
    print_polynomial(args.eps == 1 ? p.shift_mul_x() : p);
  } else if (args.what == "Lpi") {
    std::cout << "closed " << L_pi(args.n, args.eps, point, LpiMethod::closed) << '\n'
              << "direct " << L_pi(args.n, args.eps, point, LpiMethod::direct) << '\n';
  } else if (args.what == "acoeff") {
    const auto table = expansion_coeffs(args.n, point);
    if (args.k) {
      std::cout << table.at(*args.k) << '\n';
    } else {
      for (std::size_t j = 0; j < table.coeffs.size(); ++j)
        std::cout << j << ' ' << table.coeffs[j] << '\n';
    }
  } else if (args.what == "hankel") {
    const auto h = hankel_check(args.n, point);
    std::cout << "det " << h.determinant << '\n'
              << "product " << h.product << '\n'
              << "equal " << (h.equal ? "true" : "false") << '\n';
    return h.equal ? kExitPass : kExitFail;
  } else {
    throw InvalidInput("unknown --what '" + args.what + "'");
  }
  return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification of the q-Hermite moment identities"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  auto *verify = app.add_subcommand("verify", "Run identity suites and write a report");
  verify->add_option("--suite", vargs.suite, "conjecture|expansion|induction|theorem|hankel|lemmas|hermite|all");
  verify->add_option("--nmax", vargs.n_max, "Largest index checked (default: per-suite)");
  verify->add_option("--mode", vargs.mode, "random|grid");
  verify->add_option("--trials", vargs.trials, "Number of sampled points");
  verify->add_option("--seed", vargs.seed, "Sampling seed");
  verify->add_option("--bound", vargs.bound, "Numerator/denominator bound for sampling");
  verify->add_option("--q", vargs.qs, "Extra point q (pair with --a)");
  verify->add_option("--a", vargs.as, "Extra point a (pair with --q)");
  verify->add_option("--out", vargs.out, "Report path, - for stdout");
  verify->add_option("--format", vargs.format, "json|csv");
  verify->add_option("--mutate", vargs.mutate, "Negate one coefficient, b:K or lambda:K (harness self-check)");

  EvalArgs eargs;
  auto *eval = app.add_subcommand("eval", "Print one exact quantity");
  eval->add_option("--what", eargs.what, "b|lambda|s|moment|P|pi|Lpi|acoeff|hankel|hermite")->required();
  eval->add_option("--n", eargs.n, "Index n")->required();
  eval->add_option("--k", eargs.k, "Coefficient index for acoeff");
  eval->add_option("--eps", eargs.eps, "0 or 1 for pi and Lpi");
  eval->add_option("--q", eargs.q, "q as p or p/r")->required();
  eval->add_option("--a", eargs.a, "a as p or p/r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*verify)
      return run_verify(vargs);
    return run_eval(eargs);
  } catch (const cigler::InvalidInput &e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
