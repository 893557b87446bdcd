#include "hiccup/closedforms.hpp"

#include <cmath>
#include <limits>

#include "hiccup/engine.hpp"
#include "hiccup/error.hpp"

namespace hiccup {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kSmallQ = i128{1} << 50;
constexpr std::int64_t kSmallCoeff = std::int64_t{1} << 30;
constexpr std::int64_t kSmallRadicand = std::int64_t{1} << 20;

bool fits_small(const BigInt& v) { return v < kSmallCoeff && v > -kSmallCoeff; }

u128 isqrt_u128(u128 n) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if (a % b != 0 && a < 0) {
    --q;
  }
  return q;
}

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw RangeError(std::string(what) + ": value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

void require_z(std::int64_t Z, const char* who) {
  if (Z < 2) {
    throw DomainError(std::string(who) + ": Z must be at least 2, got " + std::to_string(Z));
  }
}

void require_index(std::int64_t n, const char* who) {
  if (n < 1) {
    throw RangeError(std::string(who) + ": index must be positive, got " + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(BeattyFamily family) { return family == BeattyFamily::A ? "A" : "B"; }

BeattyForm::BeattyForm(QuadExt slope, QuadExt offset, std::int64_t start_index)
    : slope_(std::move(slope)), offset_(std::move(offset)), start_index_(start_index) {
  if (slope_.is_rational()) {
    throw DomainError("BeattyForm: slope must be irrational, got " + slope_.to_string());
  }
  if (start_index_ < 1) {
    throw DomainError("BeattyForm: start_index must be positive");
  }
  if (!offset_.is_rational() && offset_.radicand() != slope_.radicand()) {
    throw DomainError("BeattyForm: slope and offset live in different fields");
  }
  radicand_ = slope_.radicand();
  den_ = slope_.den() * offset_.den();
  rat_n_ = slope_.p() * offset_.den();
  irr_n_ = slope_.q() * offset_.den();
  rat_0_ = -offset_.p() * slope_.den();
  irr_0_ = -offset_.q() * slope_.den();

  small_ = fits_small(rat_n_) && fits_small(rat_0_) && fits_small(irr_n_) && fits_small(irr_0_) &&
           fits_small(den_) && radicand_ < kSmallRadicand;
  if (small_) {
    s_rat_n_ = static_cast<std::int64_t>(rat_n_);
    s_rat_0_ = static_cast<std::int64_t>(rat_0_);
    s_irr_n_ = static_cast<std::int64_t>(irr_n_);
    s_irr_0_ = static_cast<std::int64_t>(irr_0_);
    s_den_ = static_cast<std::int64_t>(den_);
    s_radicand_ = static_cast<std::int64_t>(radicand_);
  }
}

std::int64_t BeattyForm::operator()(std::int64_t n) const {
  if (n < start_index_) {
    throw RangeError("Beatty formula is only claimed for n >= " + std::to_string(start_index_) + ", got n=" +
                     std::to_string(n));
  }
  if (small_) {
    const i128 rational = i128{n} * s_rat_n_ + s_rat_0_;
    const i128 irrational = i128{n} * s_irr_n_ + s_irr_0_;
    if (irrational < kSmallQ && irrational > -kSmallQ && irrational != 0) {
      const u128 magnitude = static_cast<u128>(irrational < 0 ? -irrational : irrational);
      const u128 root = isqrt_u128(magnitude * magnitude * static_cast<u128>(s_radicand_));
      const i128 floor_irr = irrational > 0 ? static_cast<i128>(root) : -static_cast<i128>(root) - 1;
      const i128 result = floor_div(rational + floor_irr, s_den_);
      if (result <= std::numeric_limits<std::int64_t>::max() && result >= std::numeric_limits<std::int64_t>::min()) {
        return static_cast<std::int64_t>(result);
      }
    }
  }
  const QuadExt value(rat_n_ * n + rat_0_, irr_n_ * n + irr_0_, den_, radicand_);
  return to_int64(floor_q(value), "eval_beatty");
}

BeattyForm beatty_form_a(std::int64_t x, std::int64_t Z) {
  require_z(Z, "beatty_form_a");
  if (x < 0) {
    throw DomainError("beatty_form_a: x must be nonnegative");
  }
  const QuadExt r = slope_family_a(Z);
  const QuadExt one(1);
  if (x == 0 && Z == 2) {
    // (3 + 4 sqrt 2) / (2 + sqrt 2), claimed from n = 2 on.
    const QuadExt sqrt2 = QuadExt::sqrt(2);
    return BeattyForm(r, (QuadExt(3) + QuadExt(4) * sqrt2) / (QuadExt(2) + sqrt2), 2);
  }
  std::int64_t multiplier = 0;
  if (x == 0) {
    multiplier = Z + 1;
  } else if (x == 1) {
    multiplier = Z;
  } else {
    multiplier = Z - x;
  }
  return BeattyForm(r, (QuadExt(multiplier) * r - one) / (r + one), 1);
}

BeattyForm beatty_form_b(std::int64_t x, std::int64_t Z) {
  require_z(Z, "beatty_form_b");
  if (x < 0) {
    throw DomainError("beatty_form_b: x must be nonnegative");
  }
  const QuadExt r = slope_family_b(Z);
  const QuadExt one(1);
  std::int64_t multiplier = 0;
  std::int64_t start = 1;
  if (x == 0) {
    multiplier = Z - 1;
  } else if (x == 1) {
    multiplier = Z - 2;
    start = 2;
  } else {
    multiplier = Z - x;
  }
  return BeattyForm(r, (QuadExt(multiplier) * r + one) / (r - one), start);
}

BeattyForm beatty_form(BeattyFamily family, std::int64_t x, std::int64_t Z) {
  return family == BeattyFamily::A ? beatty_form_a(x, Z) : beatty_form_b(x, Z);
}

std::int64_t eval_beatty(const BeattyForm& form, std::int64_t n) { return form(n); }

std::int64_t ceil_multiple(const QuadExt& slope, std::int64_t n) {
  return to_int64(ceil_q(QuadExt(n) * slope), "ceil_multiple");
}

std::int64_t ramsey_form(std::int64_t n) {
  require_index(n, "ramsey_form");
  // floor((s + 3) / 2) == floor((floor(s) + 3) / 2) for any real s >= 0.
  const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(8 * n - 7)));
  return n + (root + 3) / 2;
}

std::int64_t thumbtack_form(std::int64_t n) {
  require_index(n, "thumbtack_form");
  return n + static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * n - 3))) + 2;
}

std::int64_t hex_layer(std::int64_t n) {
  require_index(n, "hex_layer");
  // 3m(m+1)/2 >= n  <=>  m >= (-1 + sqrt(1 + 8n/3)) / 2; start near that root.
  auto m = static_cast<std::int64_t>((isqrt(static_cast<std::uint64_t>(1 + 8 * n / 3)) - 1) / 2);
  if (m < 1) {
    m = 1;
  }
  auto covers = [n](std::int64_t layer) { return 3 * layer * (layer + 1) / 2 >= n; };
  while (!covers(m)) {
    ++m;
  }
  while (m > 1 && covers(m - 1)) {
    --m;
  }
  return m;
}

std::int64_t hex_form(std::int64_t n) {
  const std::int64_t m = hex_layer(n);
  // Nonnegative because 3(m-1)m/2 < n by minimality of m.
  const std::int64_t numerator = n - 1 - 3 * m * (m - 1) / 2;
  return n + 3 * m + 1 + numerator / m;
}

std::vector<std::int64_t> metafib_prefix(std::int64_t k, std::int64_t n) {
  if (k < 2) {
    throw DomainError("metafib: k must be at least 2, got " + std::to_string(k));
  }
  require_index(n, "metafib");
  const SequenceTrace trace = generate(S(k + 1, 1, k + 1), static_cast<std::size_t>(n));
  const auto values = trace.values();
  return {values.begin(), values.end()};
}

std::int64_t metafib_b(std::int64_t k, std::int64_t n) { return metafib_prefix(k, n).back(); }

std::vector<std::int64_t> leaf_count_prefix(std::int64_t k, std::int64_t n) {
  std::vector<std::int64_t> leaves = metafib_prefix(k, n);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto index = static_cast<std::int64_t>(i + 1);
    const std::int64_t excess = leaves[i] - index;
    if (excess % k != 0) {
      throw IdentityViolation("leaf_count: k=" + std::to_string(k) + " does not divide b_k(" + std::to_string(index) +
                              ") - " + std::to_string(index) + " = " + std::to_string(excess));
    }
    leaves[i] = excess / k;
  }
  return leaves;
}

std::int64_t leaf_count(std::int64_t k, std::int64_t n) { return leaf_count_prefix(k, n).back(); }

void validate(const MorphismRules& rules) {
  auto binary = [](const std::string& word) {
    return !word.empty() && word.find_first_not_of("01") == std::string::npos;
  };
  if (!binary(rules.image_of_0) || !binary(rules.image_of_1)) {
    throw DomainError("morphism images must be nonempty words over {0,1}");
  }
  if (rules.image_of_0.front() != '0') {
    throw DomainError("morphism is not prolongable on 0: image of 0 is '" + rules.image_of_0 + "'");
  }
}

std::string morphic_fixed_point(const MorphismRules& rules, std::size_t n_letters) {
  validate(rules);
  if (n_letters == 0) {
    throw UsageError("morphic_fixed_point: n_letters must be at least 1");
  }
  std::string word = rules.image_of_0;
  // word[i] for i >= 1 is expanded in turn; sigma(word[0]) is already placed.
  for (std::size_t i = 1; word.size() < n_letters; ++i) {
    if (i >= word.size()) {
      throw DomainError("fixed point of the morphism has only " + std::to_string(word.size()) + " letters");
    }
    word += word[i] == '0' ? rules.image_of_0 : rules.image_of_1;
  }
  word.resize(n_letters);
  return word;
}

std::vector<std::int64_t> positions_of(std::string_view word, char letter) {
  std::vector<std::int64_t> positions;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == letter) {
      positions.push_back(static_cast<std::int64_t>(i + 1));
    }
  }
  return positions;
}

}  // namespace hiccup
