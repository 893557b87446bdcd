#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hiccup/engine.hpp"
#include "hiccup/qfield.hpp"

namespace hiccup {

/// H_1..H_n: H_n counts the hits among k = 2..n. Every entry is checked
/// against a(n) = x + z(n-1) + (y-z) H_n; a failure throws IdentityViolation.
/// Only defined for j = 0 (DomainError otherwise).
std::vector<std::int64_t> hits_prefix(const SequenceTrace& trace);

/// N(t) = max{k : a(k) <= t}, 0 if no such k. Requires a strictly increasing
/// trace (DomainError) and t < a(n) so that a(N(t)+1) is known (RangeError).
/// The result satisfies a(N(t)) <= t < a(N(t)+1); IdentityViolation if not.
std::size_t counting_function(const SequenceTrace& trace, std::int64_t t);

struct DensityReport {
  SequenceParams params;
  std::size_t horizon = 0;
  Rational ratio;      // a(horizon) / horizon
  QuadExt target;      // slope_r0(y, z)
  Decimal50 gap;       // |ratio - target|
};

/// Empirical a(horizon)/horizon against r0 for y > z > 0, j = 0.
DensityReport density_report(const SequenceParams& params, std::size_t horizon);

struct PeriodicityReport {
  std::size_t preperiod = 0;  // first k from which increments repeat
  std::size_t period = 0;
  std::vector<std::int64_t> increment_pattern;  // increments at k = preperiod .. preperiod + period - 1
};

struct PeriodicitySearch {
  /// The periodic tail must cover this many full periods.
  std::size_t min_repeats = 3;
  /// Largest period tried; 0 selects horizon / 10. Sturmian increment words
  /// contain long cubes (S(1,3,2) at horizon 10^4 repeats with period 2378
  /// from k = 1685 on), so unbounded periods give false positives.
  std::size_t max_period = 0;
};

/// Minimal period, then minimal preperiod (searched up to horizon / 2), such
/// that increment(k) = increment(k + period) for every k in the tail.
std::optional<PeriodicityReport> detect_periodicity(const SequenceTrace& trace, PeriodicitySearch search = {});

/// Smallest K with a(k) - a(k-1) - a(k-z) + a(k-z-1) = 0 for all k in
/// [K, horizon]. nullopt unless the relation holds over at least the second
/// half of the trace. Requires z >= 1 and horizon > z + 1 (RangeError).
std::optional<std::size_t> verify_linear_recurrence(const SequenceTrace& trace, std::int64_t z);

/// Average increment over one detected period of S(x, 0, z), asserted equal
/// to z - 1. DomainError unless y == 0 and z >= 1; NotFound if no period.
Rational slope_y0(const SequenceTrace& trace);

}  // namespace hiccup
