#include "doctest.h"
#include "hiccup/error.hpp"
#include "hiccup/kernels.hpp"

using namespace hiccup;

TEST_CASE("parallel kernels agree with the serial reference") {
  for (std::int64_t Z = 2; Z <= 6; ++Z) {
    for (std::int64_t x = 0; x <= Z + 2; ++x) {
      const BeattyForm f = beatty_form_a(x, Z);
      REQUIRE(kernels::eval_beatty_range(f, f.start_index(), 20'000) ==
              serial::eval_beatty_range(f, f.start_index(), 20'000));
    }
    REQUIRE(kernels::ceil_multiple_range(slope_family_b(Z), 1, 20'000) ==
            serial::ceil_multiple_range(slope_family_b(Z), 1, 20'000));
  }
  CHECK(kernels::ramsey_range(1, 100'000) == serial::ramsey_range(1, 100'000));
  CHECK(kernels::thumbtack_range(5, 100'000) == serial::thumbtack_range(5, 100'000));
  CHECK(kernels::hex_range(1, 100'000) == serial::hex_range(1, 100'000));
}

TEST_CASE("range kernels evaluate the scalar forms") {
  const auto r = kernels::ramsey_range(3, 7);
  CHECK(r == std::vector<std::int64_t>{ramsey_form(3), ramsey_form(4), ramsey_form(5), ramsey_form(6), ramsey_form(7)});
  CHECK(kernels::hex_range(4, 3).empty());
  CHECK(serial::hex_range(4, 3).empty());
  CHECK_THROWS_AS(kernels::ramsey_range(0, 5), RangeError);
  CHECK_THROWS_AS(serial::ramsey_range(0, 5), RangeError);
  CHECK_THROWS_AS(kernels::hex_range(5, 3), RangeError);
}

TEST_CASE("exceptions inside a parallel loop reach the caller") {
  const BeattyForm f = beatty_form_a(0, 2);  // start index 2
  CHECK_THROWS_AS(kernels::eval_beatty_range(f, 1, 1000), RangeError);
  CHECK_THROWS_AS(serial::eval_beatty_range(f, 1, 1000), RangeError);
}

TEST_CASE("generate_grid") {
  std::vector<SequenceParams> grid;
  for (std::int64_t x = 0; x <= 4; ++x) {
    for (std::int64_t y = 0; y <= 4; ++y) {
      grid.push_back(S(x, y, 2));
    }
  }
  const auto par = kernels::generate_grid(grid, 3000);
  const auto ser = serial::generate_grid(grid, 3000);
  REQUIRE(par.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(par[i].params() == grid[i]);
    CHECK(std::vector<std::int64_t>(par[i].values().begin(), par[i].values().end()) ==
          std::vector<std::int64_t>(ser[i].values().begin(), ser[i].values().end()));
  }
  std::vector<SequenceParams> bad{S(1, 1, 1), S(-1, 1, 1)};
  CHECK_THROWS_AS(kernels::generate_grid(bad, 10), DomainError);
}
