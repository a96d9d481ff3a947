#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace freeact {

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Exact element p + q*sqrt(D) of a real quadratic field.
//
// A scalar whose irrational part is zero carries radicand 1 and combines with
// scalars of any field. Two scalars with nonzero irrational parts over
// different radicands cannot be combined (field_mismatch).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : rat_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class rat);
  Scalar(mpq_class rat, mpq_class irr, unsigned long radicand);

  static Scalar rational(long num, long den);
  static Scalar sqrt(unsigned long radicand);

  // Accepts "p", "p/q", "r/s*sqrtD", "p/q + r/s*sqrtD", "sqrtD", "-sqrtD"
  // and the same with '-' between the terms. Whitespace is ignored.
  static Scalar parse(std::string_view text);

  const mpq_class& rational_part() const { return rat_; }
  const mpq_class& irrational_part() const { return irr_; }
  unsigned long radicand() const { return radicand_; }
  bool is_rational() const { return irr_ == 0; }

  Sign sign() const;
  bool is_zero() const { return rat_ == 0 && irr_ == 0; }
  double approx() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void canonicalize();
  unsigned long joint_radicand(const Scalar& other) const;

  mpq_class rat_{0};
  mpq_class irr_{0};
  unsigned long radicand_ = 1;
};

Sign sign(const Scalar& s);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
Scalar abs(const Scalar& s);

bool is_square_free(unsigned long n);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace freeact
