#pragma once

#include <gmpxx.h>

#include <string>

namespace freelip {

// Numeric mode of a metric space and everything derived from it. Exact mode
// keeps all arithmetic in arbitrary-precision rationals; float mode uses
// binary64 with a fixed comparison tolerance.
enum class NumMode { Exact, Float };

// Tolerance for float-mode comparisons (metric axioms, duality gaps).
inline constexpr double kFloatTol = 1e-9;

// Tagged number: an exact rational or a binary64 float. Binary operations
// require both operands to share a mode; mixing modes is a programming error
// and throws std::logic_error. Domain-level mode mismatches are caught before
// any arithmetic happens.
class Scalar {
 public:
  Scalar() : mode_(NumMode::Exact), rat_(0), flt_(0.0) {}

  static Scalar exact(long num, long den = 1);
  static Scalar exact(mpq_class q);
  static Scalar real(double v);
  static Scalar zero(NumMode mode);
  static Scalar one(NumMode mode);

  // Accepts "p/q" and plain integers in both modes; decimal literals only in
  // float mode. Throws std::invalid_argument on malformed text or zero
  // denominators.
  static Scalar parse(const std::string& text, NumMode mode);

  NumMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == NumMode::Exact; }
  double to_double() const;
  const mpq_class& rat() const;

  bool is_zero() const;
  bool is_negative() const;
  bool is_positive() const;
  Scalar abs() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  // String form used wherever numbers cross a text boundary: "p" when the
  // denominator is 1, otherwise "p/q"; floats in shortest round-trip form.
  std::string str() const;

 private:
  void require_mode(const Scalar& o) const;

  NumMode mode_;
  mpq_class rat_;
  double flt_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

}  // namespace freelip
