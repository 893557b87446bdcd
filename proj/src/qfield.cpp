#include "hiccup/qfield.hpp"

#include <bit>

#include "hiccup/error.hpp"

namespace hiccup {

namespace {

int sign_of(const BigInt& v) { return v.sign(); }

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g = boost::multiprecision::gcd(a, b);
  return boost::multiprecision::gcd(g, c);
}

// floor(a / b) for b > 0; cpp_int division truncates toward zero.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(a, b, quotient, remainder);
  if (remainder != 0 && remainder.sign() < 0) {
    --quotient;
  }
  return quotient;
}

const BigInt& common_radicand(const QuadExt& lhs, const QuadExt& rhs) {
  if (lhs.is_rational()) {
    return rhs.radicand();
  }
  if (rhs.is_rational() || lhs.radicand() == rhs.radicand()) {
    return lhs.radicand();
  }
  throw DomainError("incompatible radicands " + lhs.radicand().str() + " and " + rhs.radicand().str());
}

}  // namespace

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) {
    throw DomainError("isqrt of negative number " + n.str());
  }
  if (n < 2) {
    return n;
  }
  // Newton from above: x0 = 2^ceil(bits/2) >= sqrt(n), then decreasing.
  const auto bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) {
      return x;
    }
    x = std::move(y);
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) {
    return n;
  }
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) >> 1;
    if (y >= x) {
      return x;
    }
    x = y;
  }
}

QuadExt::QuadExt(BigInt p, BigInt q, BigInt den, BigInt radicand)
    : p_(std::move(p)), q_(std::move(q)), den_(std::move(den)), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) {
    throw DomainError("negative radicand " + radicand_.str());
  }
  if (den_ == 0) {
    throw ArithmeticError("zero denominator");
  }
  // Fold square factors of D into q. Trial division leaves a cofactor whose
  // prime factors all exceed 2^16; below 2^48 it has at most two of them, so
  // a perfect-square test finishes the job.
  if (q_ != 0 && radicand_ > 1) {
    BigInt factor = 1;
    BigInt kept = 1;
    BigInt rest = radicand_;
    for (unsigned f = 2; f < (1u << 16) && BigInt(f) * f <= rest; ++f) {
      bool odd = false;
      while (rest % f == 0) {
        rest /= f;
        if (odd) {
          factor *= f;
        }
        odd = !odd;
      }
      if (odd) {
        kept *= f;
      }
    }
    const BigInt root = isqrt(rest);
    if (root * root == rest) {
      factor *= root;
    } else {
      kept *= rest;
    }
    radicand_ = kept;
    q_ *= factor;
  }
  normalize();
}

void QuadExt::normalize() {
  if (radicand_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0 || radicand_ == 0) {
    q_ = 0;
    radicand_ = 0;
  }
  if (den_.sign() < 0) {
    p_ = -p_;
    q_ = -q_;
    den_ = -den_;
  }
  const BigInt g = gcd3(p_, q_, den_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    den_ /= g;
  }
}

QuadExt QuadExt::rational(BigInt num, BigInt den) { return QuadExt(std::move(num), 0, std::move(den), 0); }

QuadExt QuadExt::sqrt(BigInt radicand) { return QuadExt(0, 1, 1, std::move(radicand)); }

int QuadExt::sign() const {
  const int sp = sign_of(p_);
  const int sq = sign_of(q_);
  if (sq == 0) {
    return sp;
  }
  if (sp == 0 || sp == sq) {
    return sq;
  }
  // Opposite signs: the larger magnitude of p and q*sqrt(D) wins. They cannot
  // tie because D is not a perfect square.
  return p_ * p_ > q_ * q_ * radicand_ ? sp : sq;
}

QuadExt QuadExt::operator-() const {
  QuadExt out = *this;
  out.p_ = -out.p_;
  out.q_ = -out.q_;
  return out;
}

QuadExt QuadExt::conjugate() const {
  QuadExt out = *this;
  out.q_ = -out.q_;
  return out;
}

namespace {

QuadExt make_raw(BigInt p, BigInt q, BigInt den, const BigInt& radicand) {
  // The radicand is already squarefree, so the factor search stops at once.
  return QuadExt(std::move(p), std::move(q), std::move(den), q == 0 ? BigInt(0) : radicand);
}

}  // namespace

QuadExt operator+(const QuadExt& lhs, const QuadExt& rhs) {
  const BigInt& d = common_radicand(lhs, rhs);
  return make_raw(lhs.p_ * rhs.den_ + rhs.p_ * lhs.den_, lhs.q_ * rhs.den_ + rhs.q_ * lhs.den_, lhs.den_ * rhs.den_,
                  d);
}

QuadExt operator-(const QuadExt& lhs, const QuadExt& rhs) { return lhs + (-rhs); }

QuadExt operator*(const QuadExt& lhs, const QuadExt& rhs) {
  const BigInt& d = common_radicand(lhs, rhs);
  return make_raw(lhs.p_ * rhs.p_ + lhs.q_ * rhs.q_ * d, lhs.p_ * rhs.q_ + lhs.q_ * rhs.p_, lhs.den_ * rhs.den_, d);
}

QuadExt operator/(const QuadExt& lhs, const QuadExt& rhs) {
  if (rhs.is_zero()) {
    throw ArithmeticError("division by zero");
  }
  common_radicand(lhs, rhs);
  // 1 / ((p + q sqrt D) / den) = den (p - q sqrt D) / (p^2 - q^2 D).
  const BigInt norm = rhs.p_ * rhs.p_ - rhs.q_ * rhs.q_ * rhs.radicand_;
  const QuadExt inverse = make_raw(rhs.den_ * rhs.p_, -(rhs.den_ * rhs.q_), norm, rhs.radicand_);
  return lhs * inverse;
}

std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) {
    return std::strong_ordering::less;
  }
  return s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string QuadExt::to_string() const {
  std::string numerator;
  if (q_ == 0) {
    numerator = p_.str();
  } else {
    std::string root = (q_ == 1 ? "" : q_ == -1 ? "-" : q_.str() + "*") + "sqrt(" + radicand_.str() + ")";
    if (p_ == 0) {
      numerator = root;
    } else {
      numerator = p_.str() + (q_.sign() > 0 ? "+" : "") + root;
    }
  }
  if (den_ == 1) {
    return numerator;
  }
  if (q_ == 0) {
    return numerator + "/" + den_.str();
  }
  return "(" + numerator + ")/" + den_.str();
}

QuadExt field_arith(FieldOp op, const QuadExt& lhs, const QuadExt& rhs) {
  switch (op) {
    case FieldOp::add:
      return lhs + rhs;
    case FieldOp::sub:
      return lhs - rhs;
    case FieldOp::mul:
      return lhs * rhs;
    case FieldOp::div:
      return lhs / rhs;
  }
  throw DomainError("unknown field operation");
}

BigInt floor_q(const QuadExt& value) {
  if (value.is_rational()) {
    return floor_div(value.p(), value.den());
  }
  // floor(q sqrt D) exactly; q^2 D is never a perfect square here.
  const BigInt& q = value.q();
  BigInt root = isqrt(q * q * value.radicand());
  if (q.sign() < 0) {
    root = -root - 1;
  }
  // (p + s + f) / den with 0 < f < 1 and integer p + s floors like (p + s) / den.
  return floor_div(value.p() + root, value.den());
}

BigInt ceil_q(const QuadExt& value) { return -floor_q(-value); }

std::int64_t discriminant(std::int64_t y, std::int64_t z) { return z * z + 4 * (y - z); }

QuadExt slope_r0(std::int64_t y, std::int64_t z) {
  const std::int64_t disc = discriminant(y, z);
  if (disc < 0) {
    throw DomainError("slope_r0: negative discriminant " + std::to_string(disc) + " for y=" + std::to_string(y) +
                      ", z=" + std::to_string(z));
  }
  return QuadExt(z, 1, 2, disc);
}

QuadExt slope_family_a(std::int64_t Z) {
  if (Z < 2) {
    throw DomainError("family A slope needs Z >= 2, got " + std::to_string(Z));
  }
  return QuadExt(Z, 1, 2, Z * Z + 4);
}

QuadExt slope_family_b(std::int64_t Z) {
  if (Z < 2) {
    throw DomainError("family B slope needs Z >= 2, got " + std::to_string(Z));
  }
  return QuadExt(Z + 1, 1, 2, Z * Z + 2 * Z - 3);
}

}  // namespace hiccup
