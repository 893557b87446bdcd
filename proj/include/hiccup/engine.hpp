#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hiccup {

/// Parameters (j, x, y, z) of one hiccup sequence: a(1) = x, and for k > 1
/// a(k) = a(k-1) + y when k - j is among a(1..k-1), a(k-1) + z otherwise.
/// j = 0 is the plain S(x, y, z) family.
struct SequenceParams {
  std::int64_t j = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend bool operator==(const SequenceParams&, const SequenceParams&) = default;

  std::string to_string() const;
};

/// Throws DomainError if any field is negative.
void validate(const SequenceParams& params);

/// Plain S(x, y, z), i.e. j = 0.
inline SequenceParams S(std::int64_t x, std::int64_t y, std::int64_t z) {
  return SequenceParams{0, x, y, z};
}

/// Generated prefix a(1..n) with the hit flag and increment of every k >= 2.
/// Indices taken by the accessors are 1-based, matching the sequence.
class SequenceTrace {
 public:
  const SequenceParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const std::int64_t> values() const noexcept { return values_; }
  /// hit_flags()[i] is the flag of k = i + 2.
  std::span<const std::uint8_t> hit_flags() const noexcept { return hits_; }
  /// increments()[i] = a(i + 2) - a(i + 1).
  std::span<const std::int64_t> increments() const noexcept { return increments_; }

  std::int64_t value(std::size_t k) const { return values_.at(k - 1); }
  bool hit(std::size_t k) const { return hits_.at(k - 2) != 0; }
  std::int64_t increment(std::size_t k) const { return increments_.at(k - 2); }

  std::int64_t front() const { return values_.front(); }
  std::int64_t back() const { return values_.back(); }

 private:
  friend SequenceTrace generate(const SequenceParams&, std::size_t);

  SequenceParams params_;
  std::vector<std::int64_t> values_;
  std::vector<std::uint8_t> hits_;
  std::vector<std::int64_t> increments_;
};

/// Generates the first n_terms values by the literal self-referential rule.
///
/// Membership of k - j is tested with a cursor over the stored, nondecreasing
/// values: the cursor only ever moves forward, so the whole run is O(n_terms).
/// A target k - j <= 0 is tested literally as well (it can only hit a stored 0).
/// Throws UsageError for n_terms == 0, DomainError for negative parameters and
/// RangeError when a(n_terms) would overflow 64 bits.
SequenceTrace generate(const SequenceParams& params, std::size_t n_terms);

/// Indices k >= 2 whose flag is a miss, ascending.
std::vector<std::size_t> miss_indices(const SequenceTrace& trace);

/// Integers in [1, bound] that are not values of the trace. bound must not
/// exceed the largest generated value, otherwise later terms could still fill
/// the gap and RangeError is thrown.
std::vector<std::int64_t> image_complement(const SequenceTrace& trace, std::int64_t bound);

}  // namespace hiccup
