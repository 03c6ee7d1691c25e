#ifndef FROBFP_RATIONAL_HPP
#define FROBFP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobfp {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator; zero is canonically 0/1. Backed by GMP.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: implicit for literals
  Rat(int n) : q_(static_cast<signed long>(n)) {}   // NOLINT

  Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rat(const mpz_class& n) : q_(n) {}

  /// Parses "p", "-p", "p/q" (whitespace not allowed).
  static Rat parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("Rat: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return Rat(Canonical{}, std::move(q));
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rat(Canonical{}, std::move(r));
  }

  Rat abs() const { return Rat(Canonical{}, mpq_class(::abs(q_))); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const { return q_.get_str(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(Canonical{}, mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(Canonical{}, mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(Canonical{}, mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(Canonical{}, mpq_class(a.q_ / b.q_));
  }
  Rat operator-() const { return Rat(Canonical{}, mpq_class(-q_)); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  const mpq_class& raw() const { return q_; }

 private:
  struct Canonical {};  // tag: argument already canonical, skip normalization
  Rat(Canonical, mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

}  // namespace frobfp

#endif  // FROBFP_RATIONAL_HPP
