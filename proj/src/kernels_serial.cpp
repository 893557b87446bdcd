#include "hiccup/error.hpp"
#include "hiccup/kernels.hpp"

namespace hiccup::serial {

namespace {

std::size_t range_size(std::int64_t first, std::int64_t last) {
  if (first < 1 || last < first - 1) {
    throw RangeError("invalid index range [" + std::to_string(first) + ", " + std::to_string(last) + "]");
  }
  return static_cast<std::size_t>(last - first + 1);
}

template <class F>
std::vector<std::int64_t> map_range(std::int64_t first, std::int64_t last, F f) {
  std::vector<std::int64_t> out(range_size(first, last));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f(first + static_cast<std::int64_t>(i));
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> eval_beatty_range(const BeattyForm& form, std::int64_t first, std::int64_t last) {
  return map_range(first, last, [&](std::int64_t n) { return form(n); });
}

std::vector<std::int64_t> ceil_multiple_range(const QuadExt& slope, std::int64_t first, std::int64_t last) {
  return map_range(first, last, [&](std::int64_t n) { return ceil_multiple(slope, n); });
}

std::vector<std::int64_t> ramsey_range(std::int64_t first, std::int64_t last) {
  return map_range(first, last, ramsey_form);
}

std::vector<std::int64_t> thumbtack_range(std::int64_t first, std::int64_t last) {
  return map_range(first, last, thumbtack_form);
}

std::vector<std::int64_t> hex_range(std::int64_t first, std::int64_t last) { return map_range(first, last, hex_form); }

std::vector<SequenceTrace> generate_grid(std::span<const SequenceParams> grid, std::size_t n_terms) {
  std::vector<SequenceTrace> traces;
  traces.reserve(grid.size());
  for (const SequenceParams& params : grid) {
    traces.push_back(generate(params, n_terms));
  }
  return traces;
}

}  // namespace hiccup::serial
