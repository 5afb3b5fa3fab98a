#include "core/scalar.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace freelip {

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Scalar s;
  s.mode_ = NumMode::Exact;
  s.rat_ = mpq_class(num, den);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::exact(mpq_class q) {
  Scalar s;
  s.mode_ = NumMode::Exact;
  s.rat_ = std::move(q);
  return s;
}

Scalar Scalar::real(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite float scalar");
  Scalar s;
  s.mode_ = NumMode::Float;
  s.flt_ = v;
  return s;
}

Scalar Scalar::zero(NumMode mode) {
  return mode == NumMode::Exact ? exact(0) : real(0.0);
}

Scalar Scalar::one(NumMode mode) {
  return mode == NumMode::Exact ? exact(1) : real(1.0);
}

Scalar Scalar::parse(const std::string& text, NumMode mode) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0)
      throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return mode == NumMode::Exact ? exact(std::move(q)) : real(q.get_d());
  }
  // Plain integer, or a decimal literal in float mode.
  bool integral = true;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if ((c == '+' || c == '-') && i == 0) continue;
    if (c < '0' || c > '9') {
      integral = false;
      break;
    }
  }
  if (integral) {
    mpz_class z;
    if (z.set_str(text, 10) != 0)
      throw std::invalid_argument("malformed integer '" + text + "'");
    return mode == NumMode::Exact ? exact(mpq_class(z)) : real(z.get_d());
  }
  if (mode == NumMode::Exact)
    throw std::invalid_argument("non-integer literal '" + text +
                                "' in exact mode; use p/q");
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number '" + text + "'");
  return real(v);
}

double Scalar::to_double() const {
  return mode_ == NumMode::Exact ? rat_.get_d() : flt_;
}

const mpq_class& Scalar::rat() const {
  if (mode_ != NumMode::Exact)
    throw std::logic_error("rat() on a float-mode scalar");
  return rat_;
}

bool Scalar::is_zero() const {
  return mode_ == NumMode::Exact ? rat_ == 0 : flt_ == 0.0;
}

bool Scalar::is_negative() const {
  return mode_ == NumMode::Exact ? rat_ < 0 : flt_ < 0.0;
}

bool Scalar::is_positive() const {
  return mode_ == NumMode::Exact ? rat_ > 0 : flt_ > 0.0;
}

Scalar Scalar::abs() const {
  if (mode_ == NumMode::Exact) return exact(mpq_class(::abs(rat_)));
  return real(std::fabs(flt_));
}

void Scalar::require_mode(const Scalar& o) const {
  if (mode_ != o.mode_)
    throw std::logic_error("scalar mode mismatch in arithmetic");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_mode(o);
  if (mode_ == NumMode::Exact)
    rat_ += o.rat_;
  else
    flt_ += o.flt_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_mode(o);
  if (mode_ == NumMode::Exact)
    rat_ -= o.rat_;
  else
    flt_ -= o.flt_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_mode(o);
  if (mode_ == NumMode::Exact)
    rat_ *= o.rat_;
  else
    flt_ *= o.flt_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_mode(o);
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  if (mode_ == NumMode::Exact)
    rat_ /= o.rat_;
  else
    flt_ /= o.flt_;
  return *this;
}

Scalar Scalar::operator-() const {
  if (mode_ == NumMode::Exact) return exact(mpq_class(-rat_));
  return real(-flt_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_mode(b);
  return a.mode_ == NumMode::Exact ? a.rat_ == b.rat_ : a.flt_ == b.flt_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_mode(b);
  return a.mode_ == NumMode::Exact ? a.rat_ < b.rat_ : a.flt_ < b.flt_;
}

std::string Scalar::str() const {
  if (mode_ == NumMode::Exact) {
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_str();
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, flt_);
  return std::string(buf, ptr);
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace freelip
