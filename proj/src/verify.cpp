#include "cigler/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "cigler/error.hpp"
#include "cigler/identities.hpp"

namespace cigler {

namespace {

using ExactFn = Residuals<Rational> (*)(int, const Rational &, const Rational &, const Mutation &);
using BudgetFn = Residuals<DegreeBudget> (*)(int, const DegreeBudget &, const DegreeBudget &,
                                             const Mutation &);

struct Entry {
  std::string_view id;
  Suite group;
  int n_min;
  int default_max;
  int grid_default_max; // grids past this take minutes; still reachable via an explicit n_max
  bool second_is_t; // second coordinate is t0 rather than a
  ExactFn exact;
  BudgetFn budget;
};

#define CIGLER_IDENTITY(name) &identity::name<Rational>, &identity::name<DegreeBudget>

const std::vector<Entry> &registry() {
  static const std::vector<Entry> entries = {
      {"conjecture.annihilation", Suite::conjecture, 0, 24, 6, false, CIGLER_IDENTITY(annihilation)},
      {"conjecture.basis_oracle", Suite::conjecture, 0, 24, 6, false, CIGLER_IDENTITY(basis_oracle)},
      {"conjecture.moments_equal_P", Suite::conjecture, 0, 24, 6, false, CIGLER_IDENTITY(moments_equal_P)},
      {"expansion.product_basis", Suite::expansion, 0, 8, 6, false, CIGLER_IDENTITY(expansion)},
      {"hankel.determinant", Suite::hankel, 0, 8, 4, false, CIGLER_IDENTITY(hankel)},
      {"hermite.connection", Suite::hermite, 0, 16, 6, true, CIGLER_IDENTITY(hermite_connection)},
      {"hermite.laurent_identity", Suite::hermite, 0, 16, 6, true, CIGLER_IDENTITY(hermite_laurent_identity)},
      {"hermite.palindromic", Suite::hermite, 0, 16, 6, true, CIGLER_IDENTITY(hermite_palindromic)},
      {"hermite.recurrence", Suite::hermite, 1, 16, 6, true, CIGLER_IDENTITY(hermite_recurrence)},
      {"induction.five_term", Suite::induction, 0, 8, 6, false, CIGLER_IDENTITY(induction)},
      {"lemmas.newmoms", Suite::lemmas, 0, 10, 6, false, CIGLER_IDENTITY(newmoms)},
      {"lemmas.qbinomial_theorem", Suite::lemmas, 0, 20, 6, false, CIGLER_IDENTITY(qbinomial_theorem)},
      {"lemmas.qvandermonde_limit", Suite::lemmas, 0, 20, 6, false, CIGLER_IDENTITY(qvandermonde_limit)},
      {"theorem.moments_through_2n_plus_1", Suite::theorem, 0, 8, 5, false, CIGLER_IDENTITY(theorem_moments)},
      {"theorem.odd_constant_term", Suite::theorem, 1, 8, 5, false, CIGLER_IDENTITY(theorem_odd)},
      {"theorem.top_coefficient", Suite::theorem, 0, 8, 5, false, CIGLER_IDENTITY(theorem_top)},
  };
  return entries;
}

#undef CIGLER_IDENTITY

const Entry &find_entry(std::string_view id) {
  for (const auto &e : registry())
    if (e.id == id)
      return e;
  throw InvalidInput("unknown identity id '" + std::string(id) + "'");
}

constexpr Suite kSuites[] = {Suite::conjecture, Suite::expansion, Suite::induction, Suite::theorem,
                             Suite::hankel,     Suite::lemmas,    Suite::hermite};

/// Runs task(i) for i in [0, count) on a small thread pool.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &task) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        task(i);
    });
}

struct Failure {
  int n = 0;
  std::string label;
  Rational lhs;
  Rational rhs;
  std::optional<std::string> defect;
};

std::optional<Failure> first_failure(const Entry &entry, int n, const Rational &q, const Rational &second,
                                     const Mutation &mutation) {
  try {
    for (auto &r : entry.exact(n, q, second, mutation))
      if (!holds(r))
        return Failure{n, std::move(r.label), std::move(r.lhs), std::move(r.rhs), std::move(r.defect)};
  } catch (const std::exception &e) {
    return Failure{n, "evaluation", Rational(0), Rational(0), std::string(e.what())};
  }
  return std::nullopt;
}

Counterexample to_counterexample(std::size_t index, const QPoint &pt, Failure f) {
  return {index, pt.q, pt.a, f.n, std::move(f.label), std::move(f.lhs), std::move(f.rhs), std::move(f.defect)};
}

Rational second_coordinate(const Entry &entry, const QPoint &pt) {
  if (entry.second_is_t && pt.a.is_zero())
    return Rational(2);
  return pt.a;
}

IdentityRecord run_random(const Entry &entry, int n_hi, const std::vector<QPoint> &points,
                          const Mutation &mutation) {
  IdentityRecord rec{std::string(entry.id), std::string(to_string(entry.group)), entry.n_min, n_hi,
                     points.size(), true, std::nullopt, {}};
  std::vector<std::optional<Failure>> failures(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const Rational second = second_coordinate(entry, points[i]);
    for (int n = entry.n_min; n <= n_hi; ++n)
      if (auto f = first_failure(entry, n, points[i].q, second, mutation)) {
        failures[i] = std::move(f);
        return;
      }
  });
  std::optional<std::size_t> worst;
  for (std::size_t i = 0; i < failures.size(); ++i)
    if (failures[i] && (!worst || failures[i]->n < failures[*worst]->n))
      worst = i;
  if (worst) {
    rec.passed = false;
    QPoint shown{points[*worst].q, second_coordinate(entry, points[*worst])};
    rec.counterexample = to_counterexample(*worst, shown, std::move(*failures[*worst]));
  }
  return rec;
}

IdentityRecord run_grid(const Entry &entry, int n_hi, const Mutation &mutation) {
  IdentityRecord rec{std::string(entry.id), std::string(to_string(entry.group)), entry.n_min, n_hi, 0, true,
                     std::nullopt, {}};
  for (int n = entry.n_min; n <= n_hi; ++n) {
    const Degree bound = degree_bound(entry.id, n);
    rec.grid.push_back({n, bound.q, bound.a});
    const auto grid = proof_grid(bound);
    rec.points += grid.size();
    std::vector<std::optional<Failure>> failures(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      failures[i] = first_failure(entry, n, grid[i].q, grid[i].a, mutation);
    });
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (failures[i]) {
        rec.passed = false;
        rec.counterexample = to_counterexample(i, grid[i], std::move(*failures[i]));
        return rec;
      }
  }
  return rec;
}

std::uint64_t draw(std::mt19937_64 &gen, std::uint64_t range) {
  // Largest multiple of range representable; values above it are redrawn.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  for (;;) {
    const std::uint64_t u = gen();
    if (u < limit)
      return u % range;
  }
}

Rational draw_rational(std::mt19937_64 &gen, long bound) {
  const auto range = static_cast<std::uint64_t>(2 * bound + 1);
  const long num = static_cast<long>(draw(gen, range)) - bound;
  long den = 0;
  while (den == 0)
    den = static_cast<long>(draw(gen, range)) - bound;
  return Rational(mpz_class(num), mpz_class(den));
}

} // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
  case Suite::conjecture: return "conjecture";
  case Suite::expansion: return "expansion";
  case Suite::induction: return "induction";
  case Suite::theorem: return "theorem";
  case Suite::hankel: return "hankel";
  case Suite::lemmas: return "lemmas";
  case Suite::hermite: return "hermite";
  case Suite::all: return "all";
  }
  return "unknown";
}

std::string_view to_string(Mode mode) { return mode == Mode::grid ? "grid" : "random"; }

Suite parse_suite(std::string_view text) {
  for (Suite s : kSuites)
    if (to_string(s) == text)
      return s;
  if (text == "all")
    return Suite::all;
  throw InvalidInput("unknown suite '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
  if (text == "random")
    return Mode::random;
  if (text == "grid")
    return Mode::grid;
  throw InvalidInput("unknown mode '" + std::string(text) + "' (expected random or grid)");
}

void validate(const SuiteConfig &config) {
  if (config.n_max && *config.n_max < 0)
    throw InvalidInput("n_max must be non-negative");
  if (config.mode == Mode::random && config.trials < 1)
    throw InvalidInput("trials must be at least 1 in random mode");
  if (config.mode == Mode::grid && config.n_max && *config.n_max > kGridMaxN)
    throw InvalidInput("grid mode requires n_max <= " + std::to_string(kGridMaxN));
  if (config.bound < 2)
    throw InvalidInput("bound must be at least 2");
  for (const auto &[q, a] : config.explicit_points)
    if (auto why = QPoint::violation(q, a))
      throw InvalidInput("inadmissible point (q=" + q.to_string() + ", a=" + a.to_string() + "): " + *why);
  if (config.mutation.target == Mutation::Target::b && config.mutation.index < 0)
    throw InvalidInput("mutated b index must be >= 0");
  if (config.mutation.target == Mutation::Target::lambda && config.mutation.index < 1)
    throw InvalidInput("mutated lambda index must be >= 1");
}

bool VerificationReport::passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto &r) { return r.passed; });
}

std::vector<QPoint> sample_points(int trials, std::uint64_t seed, long bound) {
  if (trials < 1)
    throw InvalidInput("trials must be at least 1");
  if (bound < 2)
    throw InvalidInput("bound must be at least 2");
  std::mt19937_64 gen(seed);
  std::vector<QPoint> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Rational q = draw_rational(gen, bound);
    while (q_violation(q))
      q = draw_rational(gen, bound);
    Rational a = draw_rational(gen, bound);
    while (a == Rational(-1))
      a = draw_rational(gen, bound);
    out.push_back({std::move(q), std::move(a)});
  }
  return out;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto &e : registry())
    ids.emplace_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

Degree degree_bound(std::string_view identity, int n) {
  const Entry &entry = find_entry(identity);
  if (n < entry.n_min)
    throw InvalidInput(std::string(identity) + " starts at n = " + std::to_string(entry.n_min));
  Degree out;
  for (const auto &r : entry.budget(n, DegreeBudget::variable_q(), DegreeBudget::variable_a(), Mutation{}))
    out = max(out, (r.lhs - r.rhs).numerator_bound());
  return out;
}

std::vector<QPoint> proof_grid(Degree bound) {
  std::vector<QPoint> grid;
  grid.reserve(static_cast<std::size_t>((bound.q + 1) * (bound.a + 1)));
  for (long i = 0; i <= bound.q; ++i)
    for (long j = 0; j <= bound.a; ++j)
      grid.push_back({Rational(2 + i), Rational(2 + j)});
  return grid;
}

VerificationReport run_suite(const SuiteConfig &config) {
  validate(config);
  VerificationReport report;
  report.config = config;

  std::vector<QPoint> points;
  if (config.mode == Mode::random) {
    points = sample_points(config.trials, config.seed, config.bound);
    for (const auto &[q, a] : config.explicit_points)
      points.push_back(QPoint::make(q, a));
  }

  for (Suite suite : kSuites) {
    if (config.suite != Suite::all && config.suite != suite)
      continue;
    const auto started = std::chrono::steady_clock::now();
    for (const auto &entry : registry()) {
      if (entry.group != suite)
        continue;
      int n_hi = config.mode == Mode::grid ? config.n_max.value_or(entry.grid_default_max)
                                           : config.n_max.value_or(entry.default_max);
      if (n_hi < entry.n_min)
        continue;
      report.identities.push_back(config.mode == Mode::random
                                      ? run_random(entry, n_hi, points, config.mutation)
                                      : run_grid(entry, n_hi, config.mutation));
    }
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report.durations_ms.emplace_back(
        std::string(to_string(suite)),
        static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()));
  }
  std::sort(report.identities.begin(), report.identities.end(),
            [](const auto &x, const auto &y) { return x.id < y.id; });
  return report;
}

} // namespace cigler
