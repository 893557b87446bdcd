#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hiccup/qfield.hpp"

namespace hiccup {

enum class BeattyFamily {
  A,  // S(x, Z+1, Z)
  B,  // S(x, Z, Z+1)
};

std::string_view to_string(BeattyFamily family);

/// a(n) = floor(n * slope - offset) for n >= start_index, evaluated exactly.
///
/// slope and offset share one radicand; the combined coefficients of
/// n * slope - offset are precomputed so evaluation is two multiplies and a
/// floor_q.
class BeattyForm {
 public:
  /// Throws DomainError unless slope is irrational and start_index >= 1.
  BeattyForm(QuadExt slope, QuadExt offset, std::int64_t start_index);

  const QuadExt& slope() const noexcept { return slope_; }
  const QuadExt& offset() const noexcept { return offset_; }
  std::int64_t start_index() const noexcept { return start_index_; }

  /// floor(n * slope - offset). RangeError if n < start_index.
  std::int64_t operator()(std::int64_t n) const;

 private:
  QuadExt slope_;
  QuadExt offset_;
  std::int64_t start_index_;
  // n * slope - offset = (n*rat_n + rat_0 + (n*irr_n + irr_0) sqrt(D)) / den
  BigInt rat_n_, rat_0_, irr_n_, irr_0_, den_, radicand_;
  bool small_ = false;
  std::int64_t s_rat_n_ = 0, s_rat_0_ = 0, s_irr_n_ = 0, s_irr_0_ = 0, s_den_ = 1, s_radicand_ = 0;
};

/// Beatty representation of S(x, Z+1, Z). The offset follows the x ladder:
/// x = 0 (with a special offset and start 2 when Z = 2), x = 1, and x >= 2.
/// The formula is only claimed, not verified, for every x; see verify_beatty.
BeattyForm beatty_form_a(std::int64_t x, std::int64_t Z);

/// Beatty representation of S(x, Z, Z+1): x = 0, x = 1 (start 2), x >= 2.
BeattyForm beatty_form_b(std::int64_t x, std::int64_t Z);

BeattyForm beatty_form(BeattyFamily family, std::int64_t x, std::int64_t Z);

std::int64_t eval_beatty(const BeattyForm& form, std::int64_t n);

/// ceil(n * slope), the quasi-homogeneous form for x = Z + 1.
std::int64_t ceil_multiple(const QuadExt& slope, std::int64_t n);

/// n + floor((sqrt(8n - 7) + 3) / 2), the closed form of S(3, 1, 2).
std::int64_t ramsey_form(std::int64_t n);

/// n + floor(sqrt(4n - 3)) + 2, the closed form of S(4, 1, 2).
std::int64_t thumbtack_form(std::int64_t n);

/// Hexagonal layer of index n: the smallest m >= 1 with 3m(m+1)/2 >= n.
std::int64_t hex_layer(std::int64_t n);

/// n + 3m + 1 + floor((n - 1 - 3m(m-1)/2) / m) with m = hex_layer(n); the
/// closed form of S(5, 1, 2).
std::int64_t hex_form(std::int64_t n);

/// b_k(n) = n-th term of S(k+1, 1, k+1). DomainError for k < 2.
std::int64_t metafib_b(std::int64_t k, std::int64_t n);
/// b_k(1..n) in one generator pass.
std::vector<std::int64_t> metafib_prefix(std::int64_t k, std::int64_t n);

/// (b_k(n) - n) / k. Throws IdentityViolation if k does not divide b_k(n) - n.
std::int64_t leaf_count(std::int64_t k, std::int64_t n);
std::vector<std::int64_t> leaf_count_prefix(std::int64_t k, std::int64_t n);

/// Binary substitution 0 -> image_of_0, 1 -> image_of_1 over letters '0'/'1'.
struct MorphismRules {
  std::string image_of_0;
  std::string image_of_1;
};

/// Throws DomainError unless both images are nonempty binary words and
/// image_of_0 starts with '0'.
void validate(const MorphismRules& rules);

/// The first n_letters letters of the fixed point starting with '0'. Letters
/// are produced by expanding the word being built from its own prefix, so
/// nothing beyond n_letters is ever materialized. DomainError when the fixed
/// point is shorter than n_letters (e.g. 0 -> 0).
std::string morphic_fixed_point(const MorphismRules& rules, std::size_t n_letters);

/// 1-based positions of `letter` ('0' or '1') in word, ascending.
std::vector<std::int64_t> positions_of(std::string_view word, char letter);

}  // namespace hiccup
