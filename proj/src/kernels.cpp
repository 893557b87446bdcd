#include <exception>
#include <optional>

#include "hiccup/error.hpp"
#include "hiccup/kernels.hpp"

namespace hiccup::kernels {

namespace {

std::size_t range_size(std::int64_t first, std::int64_t last) {
  if (first < 1 || last < first - 1) {
    throw RangeError("invalid index range [" + std::to_string(first) + ", " + std::to_string(last) + "]");
  }
  return static_cast<std::size_t>(last - first + 1);
}

// Exceptions may not leave an OpenMP region: the first one is captured and
// rethrown after the loop.
template <class F>
std::vector<std::int64_t> map_range(std::int64_t first, std::int64_t last, F f) {
  std::vector<std::int64_t> out(range_size(first, last));
  const auto count = static_cast<std::int64_t>(out.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(first + i);
    } catch (...) {
#pragma omp critical(hiccup_kernel_failure)
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> eval_beatty_range(const BeattyForm& form, std::int64_t first, std::int64_t last) {
  if (first < form.start_index()) {
    throw RangeError("Beatty formula is only claimed for n >= " + std::to_string(form.start_index()));
  }
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
  std::vector<std::optional<SequenceTrace>> slots(grid.size());
  const auto count = static_cast<std::int64_t>(grid.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = generate(grid[static_cast<std::size_t>(i)], n_terms);
    } catch (...) {
#pragma omp critical(hiccup_kernel_failure)
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  std::vector<SequenceTrace> traces;
  traces.reserve(slots.size());
  for (auto& slot : slots) {
    traces.push_back(std::move(*slot));
  }
  return traces;
}

}  // namespace hiccup::kernels
