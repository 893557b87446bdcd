#include <cmath>

#include "doctest.h"
#include "hiccup/analysis.hpp"
#include "hiccup/error.hpp"
#include "oracles.hpp"

using namespace hiccup;

TEST_CASE("hits_prefix: frozen values") {
  const auto h = hits_prefix(generate(S(3, 1, 2), 11));
  CHECK(h.size() == 11);
  CHECK(h[0] == 0);
  CHECK(h[10] == 6);
  CHECK(hits_prefix(generate(S(3, 3, 2), 5))[4] == 2);
  CHECK(hits_prefix(generate(S(9, 4, 1), 1)) == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(hits_prefix(generate({1, 1, 2, 1}, 5)), DomainError);
}

TEST_CASE("hits identity on the full small grid, against an independent hit count") {
  for (std::int64_t x = 0; x <= 6; ++x) {
    for (std::int64_t y = 0; y <= 6; ++y) {
      for (std::int64_t z = 0; z <= 6; ++z) {
        const auto a = oracle::hiccup(0, x, y, z, 2000);
        const auto h = hits_prefix(generate(S(x, y, z), 2000));
        std::int64_t count = 0;
        for (std::size_t n = 1; n <= a.size(); ++n) {
          if (n >= 2 && std::find(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n - 1),
                                  static_cast<std::int64_t>(n)) != a.begin() + static_cast<std::ptrdiff_t>(n - 1)) {
            ++count;
          }
          REQUIRE(h[n - 1] == count);
          REQUIRE(a[n - 1] == x + z * static_cast<std::int64_t>(n - 1) + (y - z) * count);
        }
      }
    }
  }
}

TEST_CASE("counting_function") {
  const auto t = generate(S(3, 1, 2), 11);
  CHECK(counting_function(t, 10) == 6);
  CHECK(counting_function(t, 2) == 0);
  CHECK(counting_function(generate(S(3, 3, 2), 5), 9) == 3);
  CHECK_THROWS_AS(counting_function(t, 17), RangeError);
  CHECK_THROWS_AS(counting_function(generate(S(2, 0, 2), 10), 3), DomainError);

  const auto u = generate(S(2, 5, 3), 500);
  for (std::int64_t v = u.front(); v < u.value(u.size() - 1); ++v) {
    const auto N = counting_function(u, v);
    std::size_t brute = 0;
    for (auto a : u.values()) {
      brute += a <= v ? 1 : 0;
    }
    REQUIRE(N == brute);
  }
}

TEST_CASE("density_report") {
  const auto one = density_report(S(1, 3, 2), 1);
  CHECK(one.ratio == Rational(1));
  CHECK(one.target == QuadExt(1, 1, 1, 2));
  CHECK(std::abs(one.gap.convert_to<double>() - std::sqrt(2.0)) < 1e-12);

  const auto r = density_report(S(1, 3, 2), 100'000);
  CHECK(r.gap < Decimal50("1e-2"));
  const auto s = density_report(S(2, 5, 1), 100'000);
  CHECK(s.target == QuadExt(1, 1, 2, 17));
  CHECK(s.gap < Decimal50("1e-2"));
  CHECK(s.gap >= 0);

  CHECK_THROWS_AS(density_report(S(1, 2, 2), 10), DomainError);
  CHECK_THROWS_AS(density_report(S(1, 2, 0), 10), DomainError);
  CHECK_THROWS_AS(density_report({1, 1, 3, 2}, 10), DomainError);
}

TEST_CASE("detect_periodicity") {
  const auto p = detect_periodicity(generate(S(1, 0, 3), 100));
  REQUIRE(p.has_value());
  CHECK(p->period == 3);
  auto pattern = p->increment_pattern;
  std::sort(pattern.begin(), pattern.end());
  CHECK(pattern == std::vector<std::int64_t>{0, 3, 3});

  const auto q = detect_periodicity(generate(S(2, 0, 2), 50));
  REQUIRE(q.has_value());
  CHECK(q->period == 2);
  pattern = q->increment_pattern;
  std::sort(pattern.begin(), pattern.end());
  CHECK(pattern == std::vector<std::int64_t>{0, 2});

  CHECK_FALSE(detect_periodicity(generate(S(1, 3, 2), 1000)).has_value());
  CHECK_FALSE(detect_periodicity(generate(S(1, 3, 2), 10'000)).has_value());
  CHECK_FALSE(detect_periodicity(generate(S(1, 2, 4), 10'000)).has_value());
  CHECK_FALSE(detect_periodicity(generate(S(3, 1, 2), 10'000)).has_value());
}

TEST_CASE("an unbounded period search accepts a Sturmian cube") {
  const auto t = generate(S(1, 3, 2), 10'000);
  const auto loose = detect_periodicity(t, PeriodicitySearch{3, 10'000});
  REQUIRE(loose.has_value());
  CHECK(loose->period == 2378);
  CHECK(loose->preperiod == 1685);
}

TEST_CASE("periodicity report reproduces the tail") {
  for (std::int64_t z = 2; z <= 6; ++z) {
    for (std::int64_t x = 0; x <= 9; ++x) {
      const auto t = generate(S(x, 0, z), 5000);
      const auto p = detect_periodicity(t);
      REQUIRE(p.has_value());
      for (std::size_t k = std::max<std::size_t>(p->preperiod, 2); k <= t.size(); ++k) {
        REQUIRE(t.increment(k) == p->increment_pattern[(k - p->preperiod) % p->period]);
      }
    }
  }
}

TEST_CASE("verify_linear_recurrence") {
  CHECK(verify_linear_recurrence(generate(S(2, 0, 2), 50), 2) == std::optional<std::size_t>{4});
  const auto k = verify_linear_recurrence(generate(S(1, 0, 3), 100), 3);
  REQUIRE(k.has_value());
  CHECK(*k <= 10);
  CHECK_FALSE(verify_linear_recurrence(generate(S(1, 3, 2), 100), 2).has_value());
  CHECK_THROWS_AS(verify_linear_recurrence(generate(S(1, 0, 3), 4), 3), RangeError);
}

TEST_CASE("recurrence start is the first index of a stable run") {
  for (std::int64_t z = 2; z <= 6; ++z) {
    for (std::int64_t x = 0; x <= 9; ++x) {
      const auto a = oracle::hiccup(0, x, 0, z, 3000);
      const auto K = verify_linear_recurrence(generate(S(x, 0, z), 3000), z);
      REQUIRE(K.has_value());
      auto rel = [&](std::size_t k) { return a[k - 1] - a[k - 2] - a[k - 1 - z] + a[k - 2 - z]; };
      for (std::size_t k = *K; k <= a.size(); ++k) {
        REQUIRE(rel(k) == 0);
      }
      if (*K > static_cast<std::size_t>(z) + 2) {
        CHECK(rel(*K - 1) != 0);
      }
    }
  }
}

TEST_CASE("slope_y0") {
  CHECK(slope_y0(generate(S(1, 0, 3), 1000)) == Rational(2));
  CHECK(slope_y0(generate(S(2, 0, 2), 1000)) == Rational(1));
  CHECK(slope_y0(generate(S(7, 0, 4), 1000)) == Rational(3));
  CHECK_THROWS_AS(slope_y0(generate(S(1, 1, 3), 100)), DomainError);
  CHECK_THROWS_AS(slope_y0(generate(S(1, 0, 0), 100)), DomainError);
}

// The gap property as stated: for y > z > 0 (y, z <= 6) and x in 0..6, the gap
// at horizon 10^5 is below 10^-2 and does not grow by more than a factor of 2
// across the horizons 10^3, 10^4, 10^5. Registered as its own ctest entry.
TEST_CASE("density gap property over the y > z > 0 grid" * doctest::skip(true)) {
  for (std::int64_t y = 2; y <= 6; ++y) {
    for (std::int64_t z = 1; z < y; ++z) {
      for (std::int64_t x = 0; x <= 6; ++x) {
        CAPTURE(x);
        CAPTURE(y);
        CAPTURE(z);
        const auto g3 = density_report(S(x, y, z), 1'000).gap;
        const auto g4 = density_report(S(x, y, z), 10'000).gap;
        const auto g5 = density_report(S(x, y, z), 100'000).gap;
        CHECK(g5 < Decimal50("1e-2"));
        CHECK(g4 <= 2 * g3);
        CHECK(g5 <= 2 * g4);
      }
    }
  }
}
