#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace hiccup {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Decimal50 = boost::multiprecision::cpp_dec_float_50;

/// floor(sqrt(n)). Throws DomainError for negative n.
BigInt isqrt(const BigInt& n);
std::uint64_t isqrt(std::uint64_t n);

/// Exact element (p + q*sqrt(D)) / den of a real quadratic field.
///
/// Canonical form: den > 0, gcd(p, q, den) = 1, D squarefree (square factors
/// are folded into q), and rational values carry q = 0, D = 0. Two QuadExt
/// compare equal iff their canonical fields are equal.
///
/// Square factors of D are removed by trial division up to 2^16 followed by a
/// perfect-square test of the cofactor, which is complete for D < 2^48.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(std::int64_t integer) : p_(integer) {}  // NOLINT(google-explicit-constructor)
  explicit QuadExt(BigInt integer) : p_(std::move(integer)) {}
  QuadExt(BigInt p, BigInt q, BigInt den, BigInt radicand);

  static QuadExt rational(BigInt num, BigInt den);
  /// sqrt(radicand) itself.
  static QuadExt sqrt(BigInt radicand);

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }
  const BigInt& den() const noexcept { return den_; }
  const BigInt& radicand() const noexcept { return radicand_; }

  bool is_rational() const noexcept { return q_ == 0; }
  bool is_zero() const noexcept { return p_ == 0 && q_ == 0; }
  /// -1, 0 or +1, decided with integer comparisons only.
  int sign() const;

  QuadExt operator-() const;
  QuadExt conjugate() const;

  friend QuadExt operator+(const QuadExt& lhs, const QuadExt& rhs);
  friend QuadExt operator-(const QuadExt& lhs, const QuadExt& rhs);
  friend QuadExt operator*(const QuadExt& lhs, const QuadExt& rhs);
  friend QuadExt operator/(const QuadExt& lhs, const QuadExt& rhs);

  friend bool operator==(const QuadExt&, const QuadExt&) = default;
  friend std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs);

  /// "(p+q*sqrt(D))/den", with trivial parts dropped.
  std::string to_string() const;

  template <class Float>
  Float approximate() const {
    Float value{p_};
    if (q_ != 0) {
      value += Float{q_} * boost::multiprecision::sqrt(Float{radicand_});
    }
    return value / Float{den_};
  }

 private:
  void normalize();

  BigInt p_ = 0;
  BigInt q_ = 0;
  BigInt den_ = 1;
  BigInt radicand_ = 0;
};

enum class FieldOp { add, sub, mul, div };

/// Exact lhs (op) rhs. Both operands must share a radicand unless one is
/// rational (DomainError otherwise); division by zero is an ArithmeticError.
QuadExt field_arith(FieldOp op, const QuadExt& lhs, const QuadExt& rhs);

/// Exact floor / ceiling without floating point.
BigInt floor_q(const QuadExt& value);
BigInt ceil_q(const QuadExt& value);

/// z^2 + 4(y - z), the discriminant of r^2 - z r - (y - z).
std::int64_t discriminant(std::int64_t y, std::int64_t z);

/// Positive root (z + sqrt(z^2 + 4(y - z))) / 2 of r^2 - z r - (y - z) = 0.
/// DomainError when the discriminant is negative.
QuadExt slope_r0(std::int64_t y, std::int64_t z);

/// Slopes of the two Beatty families: (Z + sqrt(Z^2 + 4)) / 2 for S(x, Z+1, Z)
/// and (Z + 1 + sqrt(Z^2 + 2Z - 3)) / 2 for S(x, Z, Z+1). Both need Z >= 2.
QuadExt slope_family_a(std::int64_t Z);
QuadExt slope_family_b(std::int64_t Z);

}  // namespace hiccup
