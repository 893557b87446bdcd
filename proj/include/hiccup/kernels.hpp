#pragma once

// Batch kernels over index ranges and parameter grids.
//
// hiccup::kernels is the OpenMP version; hiccup::serial holds the plain-loop
// reference with identical signatures. Tests require both to agree and the
// benchmark target compares them. Index ranges are inclusive [first, last].

#include <cstdint>
#include <span>
#include <vector>

#include "hiccup/closedforms.hpp"
#include "hiccup/engine.hpp"
#include "hiccup/qfield.hpp"

namespace hiccup {

namespace kernels {

std::vector<std::int64_t> eval_beatty_range(const BeattyForm& form, std::int64_t first, std::int64_t last);
std::vector<std::int64_t> ceil_multiple_range(const QuadExt& slope, std::int64_t first, std::int64_t last);
std::vector<std::int64_t> ramsey_range(std::int64_t first, std::int64_t last);
std::vector<std::int64_t> thumbtack_range(std::int64_t first, std::int64_t last);
std::vector<std::int64_t> hex_range(std::int64_t first, std::int64_t last);

/// One independent trace per parameter set, generated concurrently.
std::vector<SequenceTrace> generate_grid(std::span<const SequenceParams> grid, std::size_t n_terms);

}  // namespace kernels

namespace serial {

std::vector<std::int64_t> eval_beatty_range(const BeattyForm& form, std::int64_t first, std::int64_t last);
std::vector<std::int64_t> ceil_multiple_range(const QuadExt& slope, std::int64_t first, std::int64_t last);
std::vector<std::int64_t> ramsey_range(std::int64_t first, std::int64_t last);
std::vector<std::int64_t> thumbtack_range(std::int64_t first, std::int64_t last);
std::vector<std::int64_t> hex_range(std::int64_t first, std::int64_t last);
std::vector<SequenceTrace> generate_grid(std::span<const SequenceParams> grid, std::size_t n_terms);

}  // namespace serial

}  // namespace hiccup
