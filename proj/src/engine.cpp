#include "hiccup/engine.hpp"

#include <algorithm>
#include <limits>

#include "hiccup/error.hpp"

namespace hiccup {

std::string SequenceParams::to_string() const {
  std::string out = "(j=" + std::to_string(j) + ", x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                    ", z=" + std::to_string(z) + ")";
  return out;
}

void validate(const SequenceParams& params) {
  if (params.j < 0 || params.x < 0 || params.y < 0 || params.z < 0) {
    throw DomainError("sequence parameters must be nonnegative, got " + params.to_string());
  }
}

SequenceTrace generate(const SequenceParams& params, std::size_t n_terms) {
  if (n_terms == 0) {
    throw UsageError("generate: n_terms must be at least 1");
  }
  validate(params);

  // a(n) <= x + max(y, z) * (n - 1); reject anything that could leave int64.
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  const auto steps = static_cast<std::int64_t>(n_terms - 1);
  const std::int64_t widest = std::max(params.y, params.z);
  if (steps > 0 && widest > 0 && widest > (kMax - params.x) / steps) {
    throw RangeError("generate: values of " + params.to_string() + " overflow 64 bits before term " +
                     std::to_string(n_terms));
  }

  SequenceTrace trace;
  trace.params_ = params;
  trace.values_.reserve(n_terms);
  trace.hits_.reserve(n_terms - 1);
  trace.increments_.reserve(n_terms - 1);

  auto& values = trace.values_;
  values.push_back(params.x);

  std::size_t cursor = 0;
  std::int64_t current = params.x;
  for (std::size_t k = 2; k <= n_terms; ++k) {
    const std::int64_t target = static_cast<std::int64_t>(k) - params.j;
    // Values are nondecreasing and targets increase by one per step, so
    // everything the cursor skips is below every future target. Repeated
    // values (y = 0) are skipped the same way.
    while (cursor < values.size() && values[cursor] < target) {
      ++cursor;
    }
    const bool hit = cursor < values.size() && values[cursor] == target;
    const std::int64_t step = hit ? params.y : params.z;
    current += step;
    values.push_back(current);
    trace.hits_.push_back(hit ? 1 : 0);
    trace.increments_.push_back(step);
  }
  return trace;
}

std::vector<std::size_t> miss_indices(const SequenceTrace& trace) {
  std::vector<std::size_t> misses;
  const auto flags = trace.hit_flags();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] == 0) {
      misses.push_back(i + 2);
    }
  }
  return misses;
}

std::vector<std::int64_t> image_complement(const SequenceTrace& trace, std::int64_t bound) {
  std::vector<std::int64_t> missing;
  if (bound < 1) {
    return missing;
  }
  if (bound > trace.back()) {
    throw RangeError("image_complement: bound " + std::to_string(bound) + " exceeds the largest generated value " +
                     std::to_string(trace.back()));
  }
  const auto values = trace.values();
  auto it = values.begin();
  for (std::int64_t v = 1; v <= bound; ++v) {
    while (it != values.end() && *it < v) {
      ++it;
    }
    if (it == values.end() || *it != v) {
      missing.push_back(v);
    }
  }
  return missing;
}

}  // namespace hiccup
