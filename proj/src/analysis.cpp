#include "hiccup/analysis.hpp"

#include <algorithm>

#include "hiccup/error.hpp"

namespace hiccup {

std::vector<std::int64_t> hits_prefix(const SequenceTrace& trace) {
  const SequenceParams& p = trace.params();
  if (p.j != 0) {
    throw DomainError("hits_prefix: the hits identity is stated for j = 0, got " + p.to_string());
  }
  std::vector<std::int64_t> hits(trace.size());
  const auto flags = trace.hit_flags();
  const auto values = trace.values();
  std::int64_t running = 0;
  for (std::size_t n = 1; n <= trace.size(); ++n) {
    if (n >= 2) {
      running += flags[n - 2];
    }
    hits[n - 1] = running;
    const auto steps = static_cast<std::int64_t>(n - 1);
    const std::int64_t predicted = p.x + p.z * steps + (p.y - p.z) * running;
    if (predicted != values[n - 1]) {
      throw IdentityViolation("hits identity fails at n=" + std::to_string(n) + ": x + z(n-1) + (y-z)H_n = " +
                              std::to_string(predicted) + " but a(n) = " + std::to_string(values[n - 1]));
    }
  }
  return hits;
}

std::size_t counting_function(const SequenceTrace& trace, std::int64_t t) {
  const auto values = trace.values();
  if (std::min(trace.params().y, trace.params().z) < 1) {
    throw DomainError("counting_function needs a strictly increasing trace (min(y, z) >= 1)");
  }
  if (t >= values.back()) {
    throw RangeError("counting_function: t=" + std::to_string(t) + " is not below a(" + std::to_string(values.size()) +
                     ") = " + std::to_string(values.back()));
  }
  const auto it = std::upper_bound(values.begin(), values.end(), t);
  const auto count = static_cast<std::size_t>(it - values.begin());
  // a(N(t)) <= t < a(N(t)+1), with a(0) read as -infinity.
  const bool lower_ok = count == 0 || values[count - 1] <= t;
  const bool upper_ok = count < values.size() && t < values[count];
  if (!lower_ok || !upper_ok) {
    throw IdentityViolation("counting inequality fails at t=" + std::to_string(t));
  }
  return count;
}

DensityReport density_report(const SequenceParams& params, std::size_t horizon) {
  if (params.j != 0 || !(params.y > params.z && params.z > 0)) {
    throw DomainError("density_report needs j = 0 and y > z > 0, got " + params.to_string());
  }
  const SequenceTrace trace = generate(params, horizon);
  DensityReport report;
  report.params = params;
  report.horizon = horizon;
  report.ratio = Rational(BigInt(trace.back()), BigInt(horizon));
  report.target = slope_r0(params.y, params.z);
  const Decimal50 ratio = Decimal50(BigInt(trace.back())) / Decimal50(BigInt(horizon));
  report.gap = boost::multiprecision::abs(ratio - report.target.approximate<Decimal50>());
  return report;
}

std::optional<PeriodicityReport> detect_periodicity(const SequenceTrace& trace, PeriodicitySearch search) {
  const auto inc = trace.increments();  // inc[i] is the increment at k = i + 2
  const std::size_t count = inc.size();
  if (count == 0) {
    return std::nullopt;
  }
  const std::size_t horizon = trace.size();
  const std::size_t max_period = search.max_period != 0 ? search.max_period : std::max<std::size_t>(1, horizon / 10);
  const std::size_t repeats = std::max<std::size_t>(1, search.min_repeats);

  for (std::size_t period = 1; period <= max_period && period < count; ++period) {
    // Latest i with inc[i] != inc[i + period]; everything after it is periodic.
    std::size_t start = 0;
    for (std::size_t i = count - period; i-- > 0;) {
      if (inc[i] != inc[i + period]) {
        start = i + 1;
        break;
      }
    }
    const std::size_t preperiod = start + 2;
    const std::size_t tail = count - start;
    if (preperiod > horizon / 2 || tail < repeats * period) {
      continue;
    }
    PeriodicityReport report;
    report.preperiod = preperiod;
    report.period = period;
    report.increment_pattern.assign(inc.begin() + static_cast<std::ptrdiff_t>(start),
                                    inc.begin() + static_cast<std::ptrdiff_t>(start + period));
    return report;
  }
  return std::nullopt;
}

std::optional<std::size_t> verify_linear_recurrence(const SequenceTrace& trace, std::int64_t z) {
  if (z < 1) {
    throw DomainError("verify_linear_recurrence: z must be positive");
  }
  const std::size_t lag = static_cast<std::size_t>(z);
  const std::size_t horizon = trace.size();
  if (horizon <= lag + 1) {
    throw RangeError("verify_linear_recurrence: horizon " + std::to_string(horizon) + " must exceed z + 1");
  }
  const std::size_t first = lag + 2;  // smallest k with a(k - z - 1) defined
  std::size_t start = first;
  for (std::size_t k = horizon; k >= first; --k) {
    const std::int64_t r = trace.value(k) - trace.value(k - 1) - trace.value(k - lag) + trace.value(k - lag - 1);
    if (r != 0) {
      start = k + 1;
      break;
    }
  }
  if (start > horizon / 2) {
    return std::nullopt;
  }
  return start;
}

Rational slope_y0(const SequenceTrace& trace) {
  const SequenceParams& p = trace.params();
  if (p.y != 0 || p.z < 1) {
    throw DomainError("slope_y0 is defined for S(x, 0, z) with z >= 1, got " + p.to_string());
  }
  const auto report = detect_periodicity(trace);
  if (!report) {
    throw NotFound("slope_y0: no period detected within horizon " + std::to_string(trace.size()));
  }
  std::int64_t total = 0;
  for (const std::int64_t step : report->increment_pattern) {
    total += step;
  }
  Rational average(BigInt(total), BigInt(report->period));
  if (average != Rational(p.z - 1)) {
    throw IdentityViolation("slope_y0: period average " + average.str() + " differs from z - 1 = " +
                            std::to_string(p.z - 1));
  }
  return average;
}

}  // namespace hiccup
