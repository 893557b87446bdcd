#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiccup/closedforms.hpp"
#include "hiccup/engine.hpp"

namespace hiccup::verify {

/// Concrete counterexample: at `index`, the claim produced `claimed` while
/// the ground truth (usually the generator) produced `observed`.
struct Witness {
  std::int64_t index = 0;
  std::string claimed;
  std::string observed;
  std::string note;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string summary;  // "MATCH 1..1000", "MISMATCH n=4: formula 12, engine 11", ...
  std::optional<Witness> witness;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

enum class Lattice { ramsey, thumbtack, hex };

/// Beatty closed form of the family against the generator over
/// [start_index, n].
CheckResult beatty(BeattyFamily family, std::int64_t x, std::int64_t Z, std::int64_t n);

/// ceil(k r) against S(Z+1, Z+1, Z) (family A) or S(Z+1, Z, Z+1) (family B).
CheckResult ceiling(BeattyFamily family, std::int64_t Z, std::int64_t n);

/// Lattice closed form against S(3,1,2), S(4,1,2) or S(5,1,2) for 1..n.
CheckResult lattice(Lattice which, std::int64_t n);

/// Misses of S(3,1,2) are the triangular numbers plus one, and values avoid
/// exactly {1} and that set, within the first n indices.
CheckResult miss_set(std::int64_t n);

/// a(k) = x + z(k-1) + (y-z) H_k for k <= n (j must be 0).
CheckResult hits(const SequenceParams& params, std::int64_t n);

/// S(x, 0, z): four-term recurrence from some K <= max_start, a period that
/// divides z, period average z - 1 and a(k) = x (mod z).
CheckResult recurrence(std::int64_t x, std::int64_t z, std::int64_t horizon, std::int64_t max_start);

/// k | b_k(n) - n for every n, leaf counts nondecreasing with steps in {0,1}.
CheckResult metafib(std::int64_t k, std::int64_t n);

/// Positions of '0' in the fixed point of 0 -> 01, 1 -> 1101 against
/// S(1, 2, 4), plus the 16-letter prefix.
CheckResult morphic(std::int64_t letters);

/// |a(horizon)/horizon - r0| < tolerance for y > z > 0.
CheckResult density(const SequenceParams& params, std::int64_t horizon, double tolerance);

struct AllScope {
  std::int64_t horizon = 10'000;
};

/// Every family above over its default grid; cells run concurrently.
SuiteReport all(const AllScope& scope);

}  // namespace hiccup::verify
