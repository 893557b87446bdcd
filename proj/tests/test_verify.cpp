#include "doctest.h"
#include "hiccup/error.hpp"
#include "hiccup/verify.hpp"

using namespace hiccup;
using namespace hiccup::verify;

TEST_CASE("beatty check summaries") {
  const auto ok = beatty(BeattyFamily::A, 1, 2, 1000);
  CHECK(ok.passed);
  CHECK(ok.summary == "MATCH 1..1000");
  CHECK_FALSE(ok.witness.has_value());

  CHECK(beatty(BeattyFamily::A, 0, 2, 500).summary == "MATCH 2..500");

  const auto bad = beatty(BeattyFamily::A, 5, 2, 10);
  CHECK_FALSE(bad.passed);
  CHECK(bad.summary == "MISMATCH n=1: formula 4, engine 5");
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->index == 1);
  CHECK(bad.witness->claimed == "4");
  CHECK(bad.witness->observed == "5");

  CHECK_FALSE(beatty(BeattyFamily::B, 4, 2, 100).passed);
  CHECK_THROWS_AS(beatty(BeattyFamily::A, 0, 2, 1), DomainError);
}

TEST_CASE("other checks pass on their stated ranges") {
  CHECK(ceiling(BeattyFamily::B, 3, 2000).passed);
  CHECK(lattice(Lattice::hex, 5000).passed);
  CHECK(miss_set(5000).passed);
  CHECK(hits(S(3, 1, 2), 5000).passed);
  CHECK(recurrence(4, 5, 5000, 50).passed);
  CHECK(metafib(3, 5000).passed);
  CHECK(morphic(5000).passed);
  CHECK(density(S(1, 3, 2), 100'000, 1e-2).passed);
}

TEST_CASE("checks fail with a witness when the claim is false") {
  const auto late = recurrence(4, 5, 5000, 1);
  CHECK_FALSE(late.passed);
  REQUIRE(late.witness.has_value());

  const auto flat = density(S(0, 2, 1), 100'000, 1e-2);
  CHECK_FALSE(flat.passed);  // a(n) = n - 1 never hits
  REQUIRE(flat.witness.has_value());
  CHECK(flat.witness->index == 100'000);
}

TEST_CASE("verify all") {
  const auto report = all(AllScope{2000});
  CHECK(report.checks.size() > 400);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  CHECK(report.passed());
}
