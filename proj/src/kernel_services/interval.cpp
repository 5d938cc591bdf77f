#include "miniverif/kernel_services/interval.hpp"

#include <array>

#include "miniverif/libraries/checked_math.hpp"

namespace miniverif::ai {

bool operator<(const Bound& a, const Bound& b) {
  if (a.inf_ != 0 || b.inf_ != 0) return a.inf_ < b.inf_;
  return a.value_ < b.value_;
}

Bound operator+(const Bound& a, const Bound& b) {
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  if (auto r = num::checked_add(a.value_, b.value_)) return Bound::of(*r);
  // Saturate toward the sign of the true sum.
  return (a.value_ > 0) ? Bound::plus_inf() : Bound::minus_inf();
}

Bound operator-(const Bound& a) {
  if (a.is_minus_inf()) return Bound::plus_inf();
  if (a.is_plus_inf()) return Bound::minus_inf();
  if (auto r = num::checked_neg(a.value_)) return Bound::of(*r);
  return Bound::plus_inf();  // -INT64_MIN
}

Bound operator*(const Bound& a, const Bound& b) {
  auto sign = [](const Bound& x) {
    if (x.is_minus_inf()) return -1;
    if (x.is_plus_inf()) return +1;
    return x.value_ < 0 ? -1 : (x.value_ > 0 ? +1 : 0);
  };
  if (!a.is_finite() || !b.is_finite()) {
    int s = sign(a) * sign(b);
    if (s == 0) return Bound::of(0);
    return s > 0 ? Bound::plus_inf() : Bound::minus_inf();
  }
  if (auto r = num::checked_mul(a.value_, b.value_)) return Bound::of(*r);
  int s = sign(a) * sign(b);
  return s > 0 ? Bound::plus_inf() : Bound::minus_inf();
}

std::string Bound::to_string() const {
  if (is_minus_inf()) return "-oo";
  if (is_plus_inf()) return "+oo";
  return std::to_string(value_);
}

Interval Interval::range(Bound lo, Bound hi) {
  if (hi < lo) return bottom();
  return Interval(lo, hi);
}

bool Interval::contains(std::int64_t v) const {
  if (bottom_) return false;
  return lo_ <= Bound::of(v) && Bound::of(v) <= hi_;
}

bool Interval::includes(const Interval& other) const {
  if (other.bottom_) return true;
  if (bottom_) return false;
  return lo_ <= other.lo_ && other.hi_ <= hi_;
}

std::optional<std::int64_t> Interval::as_constant() const {
  if (!bottom_ && lo_.is_finite() && lo_ == hi_) return lo_.value();
  return std::nullopt;
}

bool operator==(const Interval& a, const Interval& b) {
  if (a.bottom_ || b.bottom_) return a.bottom_ == b.bottom_;
  return a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

Interval operator+(const Interval& a, const Interval& b) {
  if (a.is_bottom() || b.is_bottom()) return Interval::bottom();
  return Interval::range(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a) {
  if (a.is_bottom()) return Interval::bottom();
  return Interval::range(-a.hi_, -a.lo_);
}

Interval operator-(const Interval& a, const Interval& b) {
  return a + (-b);
}

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_bottom() || b.is_bottom()) return Interval::bottom();
  std::array<Bound, 4> c = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  Bound lo = c[0], hi = c[0];
  for (const Bound& x : c) {
    lo = Bound::min(lo, x);
    hi = Bound::max(hi, x);
  }
  return Interval::range(lo, hi);
}

namespace {

// Quotient bound under truncation toward zero. The divisor is never zero
// here; the callers split divisor ranges into strictly-signed parts.
Bound bound_div(const Bound& n, const Bound& d) {
  auto sign = [](const Bound& x) {
    if (x.is_minus_inf()) return -1;
    if (x.is_plus_inf()) return +1;
    return x.value() < 0 ? -1 : (x.value() > 0 ? +1 : 0);
  };
  if (!n.is_finite()) {
    int s = sign(n) * sign(d);
    return s > 0 ? Bound::plus_inf() : Bound::minus_inf();
  }
  if (!d.is_finite()) return Bound::of(0);  // finite / huge truncates to 0
  if (auto r = num::checked_div(n.value(), d.value())) return Bound::of(*r);
  return Bound::plus_inf();  // INT64_MIN / -1
}

// Division by a divisor interval that excludes zero entirely.
Interval div_nonzero(const Interval& a, const Bound& dlo, const Bound& dhi) {
  std::array<Bound, 4> c = {bound_div(a.lo(), dlo), bound_div(a.lo(), dhi),
                            bound_div(a.hi(), dlo), bound_div(a.hi(), dhi)};
  Bound lo = c[0], hi = c[0];
  for (const Bound& x : c) {
    lo = Bound::min(lo, x);
    hi = Bound::max(hi, x);
  }
  return Interval::range(lo, hi);
}

}  // namespace

Interval Interval::div(const Interval& a, const Interval& b) {
  if (a.is_bottom() || b.is_bottom()) return bottom();
  Interval out = bottom();
  // Negative part of the divisor: [b.lo, min(b.hi, -1)].
  Bound neg_hi = Bound::min(b.hi_, Bound::of(-1));
  if (b.lo_ <= neg_hi) out = join(out, div_nonzero(a, b.lo_, neg_hi));
  // Positive part: [max(b.lo, 1), b.hi].
  Bound pos_lo = Bound::max(b.lo_, Bound::of(1));
  if (pos_lo <= b.hi_) out = join(out, div_nonzero(a, pos_lo, b.hi_));
  return out;  // divisor only zero -> bottom
}

Interval Interval::rem(const Interval& a, const Interval& b) {
  if (a.is_bottom() || b.is_bottom()) return bottom();
  bool has_neg = b.lo_ < Bound::of(0);
  bool has_pos = Bound::of(0) < b.hi_;
  if (!has_neg && !has_pos) return bottom();  // divisor only zero
  // |r| < max |d| over nonzero divisors; the sign of r follows the dividend.
  Bound m = Bound::max(-b.lo_, b.hi_);
  Bound mag = m.is_finite() ? Bound::of(m.value() - 1) : Bound::plus_inf();
  Bound lo = Bound::max(a.lo_, -mag);
  Bound hi = Bound::min(a.hi_, mag);
  if (Bound::of(0) <= a.lo_) lo = Bound::of(0);
  if (a.hi_ <= Bound::of(0)) hi = Bound::of(0);
  return range(lo, hi);
}

std::string Interval::to_string() const {
  if (bottom_) return "bottom";
  return "[" + lo_.to_string() + "," + hi_.to_string() + "]";
}

Interval join(const Interval& a, const Interval& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return Interval::range(Bound::min(a.lo(), b.lo()), Bound::max(a.hi(), b.hi()));
}

Interval meet(const Interval& a, const Interval& b) {
  if (a.is_bottom() || b.is_bottom()) return Interval::bottom();
  return Interval::range(Bound::max(a.lo(), b.lo()), Bound::min(a.hi(), b.hi()));
}

Interval widen(const Interval& older, const Interval& newer) {
  if (older.is_bottom()) return newer;
  if (newer.is_bottom()) return older;
  Bound lo = newer.lo() < older.lo() ? Bound::minus_inf() : older.lo();
  Bound hi = older.hi() < newer.hi() ? Bound::plus_inf() : older.hi();
  return Interval::range(lo, hi);
}

Interval narrow(const Interval& older, const Interval& newer) {
  if (older.is_bottom() || newer.is_bottom()) return Interval::bottom();
  Bound lo = older.lo().is_minus_inf() ? newer.lo() : older.lo();
  Bound hi = older.hi().is_plus_inf() ? newer.hi() : older.hi();
  return Interval::range(lo, hi);
}

}  // namespace miniverif::ai
