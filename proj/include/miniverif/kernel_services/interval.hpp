#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace miniverif::ai {

/// An interval endpoint: an integer or one of the two infinities.
/// Finite payloads saturate to the matching infinity on overflow, which
/// keeps every operation an over-approximation of exact arithmetic.
class Bound {
 public:
  static Bound minus_inf() { return Bound(-1, 0); }
  static Bound plus_inf() { return Bound(+1, 0); }
  static Bound of(std::int64_t v) { return Bound(0, v); }

  bool is_minus_inf() const { return inf_ < 0; }
  bool is_plus_inf() const { return inf_ > 0; }
  bool is_finite() const { return inf_ == 0; }
  std::int64_t value() const { return value_; }  // pre: finite

  friend bool operator==(const Bound& a, const Bound& b) {
    return a.inf_ == b.inf_ && (a.inf_ != 0 || a.value_ == b.value_);
  }
  friend bool operator<(const Bound& a, const Bound& b);
  friend bool operator<=(const Bound& a, const Bound& b) { return !(b < a); }

  static Bound min(const Bound& a, const Bound& b) { return a < b ? a : b; }
  static Bound max(const Bound& a, const Bound& b) { return a < b ? b : a; }

  // Saturating arithmetic. -inf + +inf never arises: interval lows are
  // never +inf and interval highs never -inf.
  friend Bound operator+(const Bound& a, const Bound& b);
  friend Bound operator-(const Bound& a);
  friend Bound operator*(const Bound& a, const Bound& b);  // inf * 0 == 0

  std::string to_string() const;

 private:
  Bound(int inf, std::int64_t value) : inf_(inf), value_(value) {}

  int inf_;  // -1, 0, +1
  std::int64_t value_;
};

/// Integer interval with infinite endpoints, plus the empty value Bottom.
/// This is the abstract-interpretation toolkit the kernel offers plugins;
/// all operations are sound over-approximations of their concrete
/// counterparts under truncation-toward-zero division.
class Interval {
 public:
  Interval() : Interval(Bound::minus_inf(), Bound::plus_inf()) {}  // top

  static Interval bottom() { return Interval(true); }
  static Interval top() { return Interval(); }
  static Interval constant(std::int64_t v) { return range(v, v); }
  static Interval range(std::int64_t lo, std::int64_t hi) {
    return Interval(Bound::of(lo), Bound::of(hi));
  }
  static Interval range(Bound lo, Bound hi);  // lo > hi collapses to bottom
  static Interval at_least(std::int64_t lo) {
    return Interval(Bound::of(lo), Bound::plus_inf());
  }
  static Interval at_most(std::int64_t hi) {
    return Interval(Bound::minus_inf(), Bound::of(hi));
  }

  bool is_bottom() const { return bottom_; }
  bool is_top() const {
    return !bottom_ && lo_.is_minus_inf() && hi_.is_plus_inf();
  }
  const Bound& lo() const { return lo_; }  // pre: not bottom
  const Bound& hi() const { return hi_; }  // pre: not bottom

  bool contains(std::int64_t v) const;
  /// Set inclusion: every value of `other` lies in *this.
  bool includes(const Interval& other) const;
  std::optional<std::int64_t> as_constant() const;

  friend bool operator==(const Interval& a, const Interval& b);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  /// Quotient over all pairs with a nonzero divisor; divisors that can
  /// only be zero yield bottom.
  static Interval div(const Interval& a, const Interval& b);
  /// Remainder under truncation-toward-zero (sign follows the dividend).
  static Interval rem(const Interval& a, const Interval& b);

  std::string to_string() const;

 private:
  explicit Interval(bool) : bottom_(true), lo_(Bound::of(0)), hi_(Bound::of(0)) {}
  Interval(Bound lo, Bound hi) : bottom_(false), lo_(lo), hi_(hi) {}

  bool bottom_;
  Bound lo_;
  Bound hi_;
};

/// Convex hull.
Interval join(const Interval& a, const Interval& b);
/// Intersection.
Interval meet(const Interval& a, const Interval& b);
/// Any strictly growing endpoint jumps to its infinity; result covers
/// join(older, newer), which bounds every ascending chain.
Interval widen(const Interval& older, const Interval& newer);
/// Refines infinite endpoints of `older` to the finite ones of `newer`;
/// finite endpoints are kept, so the result never grows.
Interval narrow(const Interval& older, const Interval& newer);

}  // namespace miniverif::ai
