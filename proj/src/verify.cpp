#include "hiccup/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "hiccup/analysis.hpp"
#include "hiccup/error.hpp"
#include "hiccup/kernels.hpp"
#include "hiccup/qfield.hpp"

namespace hiccup::verify {

namespace {

std::string range_text(std::int64_t first, std::int64_t last) {
  return std::to_string(first) + ".." + std::to_string(last);
}

CheckResult pass(std::string name, std::string summary) {
  return CheckResult{std::move(name), true, std::move(summary), std::nullopt};
}

CheckResult fail(std::string name, std::string summary, Witness witness) {
  return CheckResult{std::move(name), false, std::move(summary), std::move(witness)};
}

// Compares claimed[i] with the generated a(first + i).
CheckResult compare_against_engine(std::string name, std::string_view claim_label, const SequenceTrace& trace,
                                   std::int64_t first, const std::vector<std::int64_t>& claimed) {
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    const auto n = first + static_cast<std::int64_t>(i);
    const std::int64_t engine = trace.value(static_cast<std::size_t>(n));
    if (claimed[i] != engine) {
      std::string summary = "MISMATCH n=" + std::to_string(n) + ": " + std::string(claim_label) + " " +
                            std::to_string(claimed[i]) + ", engine " + std::to_string(engine);
      return fail(std::move(name), std::move(summary),
                  Witness{n, std::to_string(claimed[i]), std::to_string(engine), std::string(claim_label)});
    }
  }
  const auto last = first + static_cast<std::int64_t>(claimed.size()) - 1;
  return pass(std::move(name), "MATCH " + range_text(first, last));
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + " must be positive");
  }
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult beatty(BeattyFamily family, std::int64_t x, std::int64_t Z, std::int64_t n) {
  const BeattyForm form = beatty_form(family, x, Z);
  std::string name = "beatty " + std::string(to_string(family)) + " x=" + std::to_string(x) + " Z=" + std::to_string(Z);
  if (n < form.start_index()) {
    throw DomainError("beatty: n must be at least the start index " + std::to_string(form.start_index()));
  }
  const SequenceParams params = family == BeattyFamily::A ? S(x, Z + 1, Z) : S(x, Z, Z + 1);
  const SequenceTrace trace = generate(params, static_cast<std::size_t>(n));
  const auto claimed = kernels::eval_beatty_range(form, form.start_index(), n);
  return compare_against_engine(std::move(name), "formula", trace, form.start_index(), claimed);
}

CheckResult ceiling(BeattyFamily family, std::int64_t Z, std::int64_t n) {
  require_positive(n, "ceiling: n");
  const QuadExt slope = family == BeattyFamily::A ? slope_family_a(Z) : slope_family_b(Z);
  const SequenceParams params = family == BeattyFamily::A ? S(Z + 1, Z + 1, Z) : S(Z + 1, Z, Z + 1);
  const SequenceTrace trace = generate(params, static_cast<std::size_t>(n));
  const auto claimed = kernels::ceil_multiple_range(slope, 1, n);
  return compare_against_engine("ceiling " + std::string(to_string(family)) + " Z=" + std::to_string(Z), "ceil(n r)",
                                trace, 1, claimed);
}

CheckResult lattice(Lattice which, std::int64_t n) {
  require_positive(n, "lattice: n");
  switch (which) {
    case Lattice::ramsey:
      return compare_against_engine("lattice ramsey", "formula", generate(S(3, 1, 2), static_cast<std::size_t>(n)), 1,
                                    kernels::ramsey_range(1, n));
    case Lattice::thumbtack:
      return compare_against_engine("lattice thumbtack", "formula", generate(S(4, 1, 2), static_cast<std::size_t>(n)),
                                    1, kernels::thumbtack_range(1, n));
    case Lattice::hex:
      return compare_against_engine("lattice hex", "formula", generate(S(5, 1, 2), static_cast<std::size_t>(n)), 1,
                                    kernels::hex_range(1, n));
  }
  throw DomainError("unknown lattice");
}

CheckResult miss_set(std::int64_t n) {
  require_positive(n, "miss_set: n");
  const std::string name = "miss set S(3,1,2)";
  const SequenceTrace trace = generate(S(3, 1, 2), static_cast<std::size_t>(n));
  const auto misses = miss_indices(trace);
  std::vector<std::int64_t> expected;
  for (std::int64_t j = 1; j * (j + 1) / 2 + 1 <= n; ++j) {
    expected.push_back(j * (j + 1) / 2 + 1);
  }
  const std::size_t common = std::min(misses.size(), expected.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (static_cast<std::int64_t>(misses[i]) != expected[i]) {
      return fail(name, "MISMATCH miss #" + std::to_string(i + 1),
                  Witness{static_cast<std::int64_t>(i + 1), std::to_string(expected[i]), std::to_string(misses[i]),
                          "i-th miss index vs j(j+1)/2+1"});
    }
  }
  if (misses.size() != expected.size()) {
    return fail(name, "MISMATCH miss count",
                Witness{n, std::to_string(expected.size()), std::to_string(misses.size()), "number of misses"});
  }
  // Values avoid exactly {1} and the triangular-plus-one numbers up to a(n).
  std::vector<std::int64_t> avoided{1};
  for (std::int64_t j = 1; j * (j + 1) / 2 + 1 <= trace.back(); ++j) {
    avoided.push_back(j * (j + 1) / 2 + 1);
  }
  const auto complement = image_complement(trace, trace.back());
  if (complement != avoided) {
    return fail(name, "MISMATCH image complement",
                Witness{trace.back(), std::to_string(avoided.size()), std::to_string(complement.size()),
                        "size of image complement up to a(n)"});
  }
  return pass(name, "MATCH misses " + std::to_string(misses.size()) + " in 2.." + std::to_string(n));
}

CheckResult hits(const SequenceParams& params, std::int64_t n) {
  require_positive(n, "hits: n");
  const std::string name = "hits " + params.to_string();
  const SequenceTrace trace = generate(params, static_cast<std::size_t>(n));
  try {
    hits_prefix(trace);
  } catch (const IdentityViolation& e) {
    return fail(name, std::string("VIOLATION ") + e.what(), Witness{0, "", "", e.what()});
  }
  return pass(name, "MATCH 1.." + std::to_string(n));
}

CheckResult recurrence(std::int64_t x, std::int64_t z, std::int64_t horizon, std::int64_t max_start) {
  if (z < 1) {
    throw DomainError("recurrence: z must be positive");
  }
  require_positive(horizon, "recurrence: horizon");
  const std::string name = "recurrence S(" + std::to_string(x) + ",0," + std::to_string(z) + ")";
  const SequenceTrace trace = generate(S(x, 0, z), static_cast<std::size_t>(horizon));

  for (std::size_t k = 1; k <= trace.size(); ++k) {
    if ((trace.value(k) - x) % z != 0) {
      return fail(name, "VIOLATION a(k) = x (mod z)",
                  Witness{static_cast<std::int64_t>(k), std::to_string(x % z), std::to_string(trace.value(k) % z),
                          "residue mod z"});
    }
  }
  const auto start = verify_linear_recurrence(trace, z);
  if (!start) {
    return fail(name, "NOT FOUND recurrence start", Witness{horizon, "", "", "relation does not stabilize"});
  }
  if (static_cast<std::int64_t>(*start) > max_start) {
    return fail(name, "LATE recurrence start K=" + std::to_string(*start),
                Witness{static_cast<std::int64_t>(*start), "<= " + std::to_string(max_start), std::to_string(*start),
                        "recurrence start"});
  }
  const auto period = detect_periodicity(trace);
  if (!period || z % static_cast<std::int64_t>(period->period) != 0) {
    return fail(name, "VIOLATION period divides z",
                Witness{0, "divisor of " + std::to_string(z), period ? std::to_string(period->period) : "none",
                        "detected period"});
  }
  try {
    slope_y0(trace);
  } catch (const Error& e) {
    return fail(name, std::string("VIOLATION slope ") + e.what(), Witness{0, std::to_string(z - 1), "", e.what()});
  }
  return pass(name, "MATCH K=" + std::to_string(*start) + " period=" + std::to_string(period->period) +
                        " slope=" + std::to_string(z - 1));
}

CheckResult metafib(std::int64_t k, std::int64_t n) {
  require_positive(n, "metafib: n");
  const std::string name = "metafib k=" + std::to_string(k);
  std::vector<std::int64_t> leaves;
  try {
    leaves = leaf_count_prefix(k, n);
  } catch (const IdentityViolation& e) {
    return fail(name, std::string("VIOLATION ") + e.what(), Witness{0, "", "", e.what()});
  }
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    const std::int64_t step = leaves[i] - leaves[i - 1];
    if (step != 0 && step != 1) {
      return fail(name, "VIOLATION leaf_count step at n=" + std::to_string(i + 1),
                  Witness{static_cast<std::int64_t>(i + 1), "0 or 1", std::to_string(step), "leaf_count increment"});
    }
  }
  return pass(name, "MATCH 1.." + std::to_string(n));
}

CheckResult morphic(std::int64_t letters) {
  require_positive(letters, "morphic: letters");
  const std::string name = "morphic 0->01 1->1101";
  const MorphismRules rules{"01", "1101"};
  const std::string word = morphic_fixed_point(rules, static_cast<std::size_t>(letters));
  const std::string expected_prefix = "0111011101110101";
  const std::size_t shown = std::min(word.size(), expected_prefix.size());
  if (word.compare(0, shown, expected_prefix, 0, shown) != 0) {
    return fail(name, "MISMATCH prefix", Witness{0, expected_prefix.substr(0, shown), word.substr(0, shown), "prefix"});
  }
  const auto zeros = positions_of(word, '0');
  if (zeros.empty()) {
    return pass(name, "MATCH 0 positions");
  }
  const SequenceTrace trace = generate(S(1, 2, 4), zeros.size());
  return compare_against_engine(name, "position", trace, 1, zeros);
}

CheckResult density(const SequenceParams& params, std::int64_t horizon, double tolerance) {
  require_positive(horizon, "density: horizon");
  const DensityReport report = density_report(params, static_cast<std::size_t>(horizon));
  std::ostringstream gap;
  gap.precision(6);
  gap << report.gap.convert_to<double>();
  const std::string name = "density " + params.to_string();
  if (report.gap < Decimal50(tolerance)) {
    return pass(name, "WITHIN gap=" + gap.str());
  }
  return fail(name, "OUTSIDE gap=" + gap.str(),
              Witness{horizon, report.target.to_string(), report.ratio.str(), "a(n)/n vs r0, gap " + gap.str()});
}

SuiteReport all(const AllScope& scope) {
  const std::int64_t n = scope.horizon;
  std::vector<std::function<CheckResult()>> cells;
  for (std::int64_t Z = 2; Z <= 6; ++Z) {
    for (std::int64_t x = 0; x <= Z + 2; ++x) {
      cells.emplace_back([=] { return beatty(BeattyFamily::A, x, Z, n); });
    }
    for (std::int64_t x = 0; x <= Z + 1; ++x) {
      cells.emplace_back([=] { return beatty(BeattyFamily::B, x, Z, n); });
    }
    cells.emplace_back([=] { return ceiling(BeattyFamily::A, Z, n); });
    cells.emplace_back([=] { return ceiling(BeattyFamily::B, Z, n); });
  }
  for (Lattice which : {Lattice::ramsey, Lattice::thumbtack, Lattice::hex}) {
    cells.emplace_back([=] { return lattice(which, n); });
  }
  cells.emplace_back([=] { return miss_set(n); });
  for (std::int64_t x = 0; x <= 6; ++x) {
    for (std::int64_t y = 0; y <= 6; ++y) {
      for (std::int64_t z = 0; z <= 6; ++z) {
        cells.emplace_back([=] { return hits(S(x, y, z), n); });
      }
    }
  }
  for (std::int64_t z = 2; z <= 6; ++z) {
    for (std::int64_t x = 0; x <= 9; ++x) {
      cells.emplace_back([=] { return recurrence(x, z, n, 10 * z); });
    }
  }
  for (std::int64_t k = 2; k <= 5; ++k) {
    cells.emplace_back([=] { return metafib(k, n); });
  }
  cells.emplace_back([=] { return morphic(n); });

  SuiteReport report;
  report.checks.resize(cells.size());
  const auto count = static_cast<std::int64_t>(cells.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      report.checks[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i)]();
    } catch (...) {
#pragma omp critical(hiccup_verify_failure)
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return report;
}

}  // namespace hiccup::verify
