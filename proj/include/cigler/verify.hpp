#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cigler/degree_budget.hpp"
#include "cigler/point.hpp"
#include "cigler/recurrence.hpp"

namespace cigler {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Suite { conjecture, expansion, induction, theorem, hankel, lemmas, hermite, all };
enum class Mode { random, grid };

std::string_view to_string(Suite suite);
std::string_view to_string(Mode mode);
Suite parse_suite(std::string_view text);
Mode parse_mode(std::string_view text);

/// Largest n_max accepted in grid mode.
inline constexpr int kGridMaxN = 6;

struct SuiteConfig {
  Suite suite = Suite::all;
  /// Unset means each suite's default range.
  std::optional<int> n_max;
  Mode mode = Mode::random;
  int trials = 25;
  std::uint64_t seed = 7;
  long bound = 1000;
  /// Unvalidated (q, a) pairs appended to the sampled points.
  std::vector<std::pair<Rational, Rational>> explicit_points;
  Mutation mutation;
};

/// Throws InvalidInput describing the first broken constraint.
void validate(const SuiteConfig &config);

struct Counterexample {
  std::size_t point_index = 0;
  Rational q;
  Rational a;
  int n = 0;
  std::string label;
  Rational lhs;
  Rational rhs;
  std::optional<std::string> defect;
};

struct GridBound {
  int n = 0;
  long dq = 0;
  long da = 0;
};

struct IdentityRecord {
  std::string id;
  std::string group;
  int n_lo = 0;
  int n_hi = 0;
  std::size_t points = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::vector<GridBound> grid; // grid mode only
};

struct VerificationReport {
  SuiteConfig config;
  std::string tool_version{kToolVersion};
  std::vector<IdentityRecord> identities;
  /// Wall clock per suite in milliseconds, keyed by suite name.
  std::vector<std::pair<std::string, long>> durations_ms;

  bool passed() const;
};

/// Deterministic admissible points. Numerators and denominators are drawn
/// uniformly from [-bound, bound] (denominator 0 redrawn) using
/// std::mt19937_64 and rejection sampling, so results do not depend on the
/// standard library's distributions. Inadmissible q or a are redrawn.
std::vector<QPoint> sample_points(int trials, std::uint64_t seed, long bound);

/// Identity ids known to the harness, sorted.
std::vector<std::string> identity_ids();

/// Conservative (Dq, Da) degree bound of the numerator of lhs - rhs for the
/// identity at index n; the second variable is t0 for hermite identities.
Degree degree_bound(std::string_view identity, int n);

/// Tensor grids used by grid mode: q from 2, 3, ... and the second
/// variable from 2, 3, ...; all such points are admissible.
std::vector<QPoint> proof_grid(Degree bound);

VerificationReport run_suite(const SuiteConfig &config);

enum class ReportFormat { json, csv };

std::string render_json(const VerificationReport &report);
std::string render_csv(const VerificationReport &report);

/// Writes the report; throws std::runtime_error on I/O failure.
void emit_report(const VerificationReport &report, ReportFormat format, const std::string &path);

} // namespace cigler
