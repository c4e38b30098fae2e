#pragma once

// Exact rationals and canonical piecewise-constant step functions on (0,1].
//
// A StepFunction stores integer values on the open intervals cut out by its
// breakpoints. The value at a breakpoint is never stored; it is the average
// of the two neighbouring interval values. Adjacent equal values are always
// merged, so two step functions are equal as functions iff they compare equal.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotproj {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rational(-Integer(num), -Integer(den));
  return Rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// Largest integer <= r.
inline Integer floor(const Rational& r) {
  const Integer& n = boost::multiprecision::numerator(r);
  const Integer& d = boost::multiprecision::denominator(r);
  Integer q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / 2;
}

class StepFunction {
 public:
  /// The zero function.
  StepFunction() : values_{0} {}

  /// Builds a step function from breakpoints in (0,1) and one value per open
  /// interval. The result is canonicalized; invalid shapes throw.
  StepFunction(std::vector<Rational> breakpoints, std::vector<std::int64_t> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breakpoints_.size() + 1)
      throw std::invalid_argument("step function needs one value per interval");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      if (breakpoints_[i] <= 0 || breakpoints_[i] >= 1)
        throw std::invalid_argument("breakpoint outside (0,1): " + to_string(breakpoints_[i]));
      if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i]))
        throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    canonicalize();
  }

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t interval_count() const { return values_.size(); }
  bool is_zero() const { return values_.size() == 1 && values_[0] == 0; }

  /// Left end of interval i (0 for the first interval).
  Rational interval_lo(std::size_t i) const {
    return i == 0 ? Rational(0) : breakpoints_[i - 1];
  }
  /// Right end of interval i (1 for the last interval, which contains 1).
  Rational interval_hi(std::size_t i) const {
    return i == breakpoints_.size() ? Rational(1) : breakpoints_[i];
  }
  /// A point strictly inside interval i; the last interval reports t = 1.
  Rational interval_sample(std::size_t i) const {
    if (i == breakpoints_.size()) return Rational(1);
    return midpoint(interval_lo(i), interval_hi(i));
  }

  /// Two-sided averaged value at t in (0,1].
  Rational evaluate(const Rational& t) const {
    check_domain(t);
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (it != breakpoints_.end() && *it == t)
      return Rational(Integer(values_[idx] + values_[idx + 1]), Integer(2));
    return Rational(values_[idx]);
  }

  /// Limit from the left at t in (0,1].
  std::int64_t left_limit(const Rational& t) const {
    check_domain(t);
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
  }

  /// Limit from the right at t in [0,1).
  std::int64_t right_limit(const Rational& t) const {
    if (t < 0 || t >= 1) throw std::domain_error("right limit needs t in [0,1), got " + to_string(t));
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
  }

  /// max |value| over the open intervals.
  std::int64_t sup_abs() const {
    std::int64_t best = 0;
    for (auto v : values_) best = std::max<std::int64_t>(best, std::llabs(v));
    return best;
  }

  /// Index of the interval where sup_abs is attained; the last interval wins
  /// ties so that t = 1 is reported when it realizes the maximum.
  std::size_t sup_abs_interval() const {
    const auto target = sup_abs();
    for (std::size_t i = values_.size(); i-- > 0;)
      if (std::llabs(values_[i]) == target) return i;
    return 0;
  }

  StepFunction operator-() const {
    StepFunction r = *this;
    for (auto& v : r.values_) v = -v;
    return r;
  }

  bool operator==(const StepFunction&) const = default;

  friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
  friend StepFunction operator*(std::int64_t c, const StepFunction& f);

 private:
  static void check_domain(const Rational& t) {
    if (t <= 0 || t > 1) throw std::domain_error("evaluation point outside (0,1]: " + to_string(t));
  }

  void canonicalize() {
    std::vector<Rational> bps;
    std::vector<std::int64_t> vals;
    bps.reserve(breakpoints_.size());
    vals.reserve(values_.size());
    vals.push_back(values_[0]);
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      if (values_[i + 1] == vals.back()) continue;
      bps.push_back(std::move(breakpoints_[i]));
      vals.push_back(values_[i + 1]);
    }
    breakpoints_ = std::move(bps);
    values_ = std::move(vals);
  }

  std::vector<Rational> breakpoints_;
  std::vector<std::int64_t> values_;
};

/// Common refinement of several step functions: the union of their
/// breakpoints together with each function's value on every refined interval.
struct Refinement {
  std::vector<Rational> breakpoints;
  std::vector<std::vector<std::int64_t>> values;  // values[f][interval]

  std::size_t interval_count() const { return breakpoints.size() + 1; }
};

inline Refinement refine(std::span<const StepFunction* const> fs) {
  Refinement r;
  for (const auto* f : fs)
    r.breakpoints.insert(r.breakpoints.end(), f->breakpoints().begin(), f->breakpoints().end());
  std::sort(r.breakpoints.begin(), r.breakpoints.end());
  r.breakpoints.erase(std::unique(r.breakpoints.begin(), r.breakpoints.end()), r.breakpoints.end());

  r.values.reserve(fs.size());
  for (const auto* f : fs) {
    std::vector<std::int64_t> vals;
    vals.reserve(r.interval_count());
    const auto& bps = f->breakpoints();
    std::size_t j = 0;  // index of f's interval containing the current refined interval
    for (std::size_t i = 0; i < r.interval_count(); ++i) {
      vals.push_back(f->values()[j]);
      if (i < r.breakpoints.size() && j < bps.size() && bps[j] == r.breakpoints[i]) ++j;
    }
    r.values.push_back(std::move(vals));
  }
  return r;
}

inline Refinement refine(const StepFunction& f, const StepFunction& g) {
  const StepFunction* fs[] = {&f, &g};
  return refine(fs);
}

inline StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  Refinement r = refine(f, g);
  std::vector<std::int64_t> sum(r.interval_count());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = r.values[0][i] + r.values[1][i];
  return StepFunction(std::move(r.breakpoints), std::move(sum));
}

inline StepFunction operator*(std::int64_t c, const StepFunction& f) {
  if (c == 0) return StepFunction{};
  StepFunction r = f;
  for (auto& v : r.values_) v *= c;
  return r;
}

inline StepFunction operator-(const StepFunction& f, const StepFunction& g) { return f + (-g); }

inline StepFunction add(const StepFunction& f, const StepFunction& g) { return f + g; }
inline StepFunction scale(const StepFunction& f, std::int64_t c) { return c * f; }
inline std::int64_t sup_abs(const StepFunction& f) { return f.sup_abs(); }
inline Rational evaluate(const StepFunction& f, const Rational& t) { return f.evaluate(t); }

}  // namespace knotproj
