#pragma once

// The projective pseudo-metric delta and the chain metric Delta on classes of
// the torus-knot span, plus the max-norm demo metric on Z + Z.
//
// delta([K],[J]) = min over a, b != 0 of g4(aK - bJ). Its lower bound is the
// signature bound S(aK - bJ) minimized over all (a, b); signatures vanish on
// torsion and divide correctly, so this bounds the whole projective classes
// once K and J carry primitivity witnesses. Upper bounds come from certified
// four-genus intervals of the candidate combinations.

#include "knotproj/exactnum.hpp"
#include "knotproj/genus.hpp"
#include "knotproj/knots.hpp"
#include "knotproj/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotproj {

// ---------------------------------------------------------------------------
// Class nodes

/// An additive integer-valued invariant nu with nu(K) = 1: either sign *
/// sigma'(t) at a point t that is no torus-knot breakpoint (even reduced
/// denominator, or t = 1), or sign * (jump of sigma' at t).
struct PrimitivityWitness {
  enum class Kind { Value, Jump };

  Kind kind = Kind::Value;
  Rational t = 1;
  std::int64_t sign = 1;

  std::int64_t evaluate(const StepFunction& f) const {
    if (kind == Kind::Jump) return sign * (f.right_limit(t) - f.left_limit(t));
    return sign * f.left_limit(t);  // t is never a breakpoint on the torus span
  }

  std::string describe() const {
    const std::string s = sign < 0 ? "-" : "";
    return kind == Kind::Jump ? s + "jump of sigma' at t=" + to_string(t) : s + "sigma'(" + to_string(t) + ")";
  }
};

namespace detail {

/// A point of (lo, hi) with even reduced denominator.
inline Rational even_denominator_point(const Rational& lo, const Rational& hi) {
  for (Integer d = 2;; d *= 2) {
    const Integer j = floor(lo * d) + 1;
    const Rational t(j, d);
    if (t < hi && boost::multiprecision::denominator(t) % 2 == 0) return t;
    const Rational t2(j + 1, d);
    if (t2 < hi && boost::multiprecision::denominator(t2) % 2 == 0) return t2;
  }
}

}  // namespace detail

struct ClassNode {
  KnotCombo combo;
  PrimitivityWitness nu;

  /// Finds a witness with nu(combo) = 1; throws invalid_argument if none of
  /// the candidate invariants takes the value +-1.
  static ClassNode make(KnotCombo c) {
    if (c.empty()) throw std::invalid_argument("the unknot has no projective class");
    const StepFunction f = combo_signature(c);
    std::vector<PrimitivityWitness> tries;
    tries.push_back({PrimitivityWitness::Kind::Value, Rational(1), 1});
    for (const auto& bp : f.breakpoints()) tries.push_back({PrimitivityWitness::Kind::Jump, bp, 1});
    for (std::size_t i = 0; i + 1 < f.interval_count(); ++i)
      tries.push_back({PrimitivityWitness::Kind::Value, detail::even_denominator_point(f.interval_lo(i), f.interval_hi(i)), 1});
    for (auto w : tries) {
      const std::int64_t v = w.evaluate(f);
      if (v == 1 || v == -1) {
        w.sign = v;
        return {std::move(c), w};
      }
    }
    throw std::invalid_argument("no signature invariant certifies " + c.to_string() + " as primitive");
  }

  static ClassNode parse(std::string_view text) { return make(parse_combo(text)); }

  std::string label() const { return combo.to_string(); }
};

// ---------------------------------------------------------------------------
// Distance intervals

struct DistInterval {
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;  // nullopt: unbounded within the search
  std::string lower_certificate;
  std::string upper_certificate;
  std::vector<std::pair<std::int64_t, std::int64_t>> argmins;  // (a, b) realizing upper via a*x - b*y
  std::vector<KnotCombo> chain;                                // Delta: the path realizing upper

  bool exact() const { return upper && *upper == lower; }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Signature vectors of x and y on their common refinement; the sharp
/// signature bound of a x - b y is max_i |a X_i - b Y_i|.
class PairSpace {
 public:
  PairSpace(const KnotCombo& x, const KnotCombo& y) {
    const StepFunction fx = combo_signature(x), fy = combo_signature(y);
    const Refinement r = refine(fx, fy);
    std::set<std::pair<std::int64_t, std::int64_t>> rows;
    for (std::size_t i = 0; i < r.interval_count(); ++i) rows.emplace(r.values[0][i], r.values[1][i]);
    rows.erase({0, 0});
    for (auto [a, b] : rows) {
      X_.push_back(a);
      Y_.push_back(b);
    }
    choose_pair();
  }

  std::int64_t S(std::int64_t a, std::int64_t b) const {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < X_.size(); ++i) m = std::max(m, std::abs(a * X_[i] - b * Y_[i]));
    return m;
  }

  /// X and Y are proportional: the two classes coincide.
  bool degenerate() const { return !pair_; }

  /// The least (a, b), a >= 1, with a X = b Y; requires degenerate().
  std::pair<std::int64_t, std::int64_t> proportion() const {
    for (std::size_t i = 0; i < X_.size(); ++i) {
      if (X_[i] == 0 || Y_[i] == 0) continue;
      const std::int64_t g = std::gcd(X_[i], Y_[i]);
      return {std::abs(Y_[i] / g), X_[i] / g * (Y_[i] < 0 ? -1 : 1)};
    }
    throw std::logic_error("proportion requested for a non-degenerate pair");
  }

  /// Every (a, b) with a >= 1, b != 0 and S(a, b) <= theta, sorted.
  ///
  /// For two rows i, j with D = X_i Y_j - X_j Y_i != 0, writing u = a X - b Y
  /// gives a D = u_i Y_j - u_j Y_i and b D = u_i X_j - u_j X_i, so
  /// |a| <= theta (|Y_i| + |Y_j|) / |D| and |b| <= theta (|X_i| + |X_j|) / |D|.
  /// The cheaper variable is enumerated; the other one ranges over the
  /// intersection of the per-row constraints.
  std::vector<std::pair<std::int64_t, std::int64_t>> enumerate(std::int64_t theta) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (!pair_) return out;
    const auto [i, j] = *pair_;
    const std::int64_t D = std::abs(X_[i] * Y_[j] - X_[j] * Y_[i]);
    const std::int64_t amax = theta * (std::abs(Y_[i]) + std::abs(Y_[j])) / D;
    const std::int64_t bmax = theta * (std::abs(X_[i]) + std::abs(X_[j])) / D;

    if (amax <= 2 * bmax) {
      for (std::int64_t a = 1; a <= amax; ++a) {
        auto range = other_range(a, theta, X_, Y_, -bmax, bmax);
        if (!range) continue;
        for (std::int64_t b = range->first; b <= range->second; ++b)
          if (b != 0) out.emplace_back(a, b);
      }
    } else {
      for (std::int64_t b = -bmax; b <= bmax; ++b) {
        if (b == 0) continue;
        auto range = other_range(b, theta, Y_, X_, 1, amax);
        if (!range) continue;
        for (std::int64_t a = range->first; a <= range->second; ++a) out.emplace_back(a, b);
      }
      std::sort(out.begin(), out.end());
    }
    return out;
  }

 private:
  void choose_pair() {
    // Minimize the enumeration length over row pairs; bounds scale with theta.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < X_.size(); ++i)
      for (std::size_t j = i + 1; j < X_.size(); ++j) {
        const std::int64_t D = std::abs(X_[i] * Y_[j] - X_[j] * Y_[i]);
        if (D == 0) continue;
        const double ca = static_cast<double>(std::abs(Y_[i]) + std::abs(Y_[j])) / static_cast<double>(D);
        const double cb = 2.0 * static_cast<double>(std::abs(X_[i]) + std::abs(X_[j])) / static_cast<double>(D);
        if (std::min(ca, cb) < best) {
          best = std::min(ca, cb);
          pair_ = std::pair{i, j};
        }
      }
  }

  /// Range of v with |u P_i - v Q_i| <= theta for all rows, clipped to [lo, hi].
  static std::optional<std::pair<std::int64_t, std::int64_t>> other_range(std::int64_t u, std::int64_t theta,
                                                                         const std::vector<std::int64_t>& P,
                                                                         const std::vector<std::int64_t>& Q,
                                                                         std::int64_t lo, std::int64_t hi) {
    for (std::size_t r = 0; r < P.size() && lo <= hi; ++r) {
      const std::int64_t c = u * P[r];
      if (Q[r] == 0) {
        if (std::abs(c) > theta) return std::nullopt;
        continue;
      }
      std::int64_t l, h;
      if (Q[r] > 0) {
        l = ceil_div(c - theta, Q[r]);
        h = floor_div(c + theta, Q[r]);
      } else {
        l = ceil_div(c + theta, Q[r]);
        h = floor_div(c - theta, Q[r]);
      }
      lo = std::max(lo, l);
      hi = std::min(hi, h);
    }
    if (lo > hi) return std::nullopt;
    return std::pair{lo, hi};
  }

  std::vector<std::int64_t> X_, Y_;
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

inline KnotCombo linear(std::int64_t a, const KnotCombo& x, std::int64_t b, const KnotCombo& y) { return a * x - b * y; }

inline std::string pair_label(std::int64_t a, std::int64_t b) {
  return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace detail

/// Certified interval for delta([x],[y]).
///
/// theta doubles from 1; at each stage every (a, b) with S(a, b) <= theta is
/// found and its four-genus upper bound evaluated. Once theta reaches the best
/// upper bound U, no pair outside the enumerated set can do better, and the
/// least S seen is the global signature lower bound. With `cap` set, the
/// search stops at theta = cap: the result is then only guaranteed to be
/// complete for values <= cap (lower is min S if some pair has S <= cap, else
/// cap + 1).
inline DistInterval delta_certified(const ClassNode& x, const ClassNode& y, const ExecPolicy& policy = {},
                                    std::optional<std::int64_t> cap = std::nullopt) {
  DistInterval out;
  const detail::PairSpace space(x.combo, y.combo);

  if (space.degenerate()) {
    const auto [a, b] = space.proportion();
    const KnotCombo diff = detail::linear(a, x.combo, b, y.combo);
    const GenusInterval g = g4_interval(diff);
    if (g.upper != 0) throw std::logic_error("proportional signatures but nonzero combination " + diff.to_string());
    out.lower = 0;
    out.upper = 0;
    out.lower_certificate = "trivial";
    out.upper_certificate = detail::pair_label(a, b) + " gives the unknot";
    out.argmins.emplace_back(a, b);
    return out;
  }

  std::map<std::pair<std::int64_t, std::int64_t>, GenusInterval> seen;
  std::optional<std::int64_t> U;
  std::int64_t theta = 1;
  const std::int64_t limit = cap.value_or(std::numeric_limits<std::int64_t>::max() / 4);
  for (;;) {
    std::vector<std::pair<std::int64_t, std::int64_t>> fresh;
    for (const auto& ab : space.enumerate(theta))
      if (!seen.count(ab)) fresh.push_back(ab);
    std::vector<GenusInterval> results(fresh.size());
    parallel_for(fresh.size(), policy, [&](std::size_t i) {
      results[i] = g4_interval(detail::linear(fresh[i].first, x.combo, fresh[i].second, y.combo));
    });
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      if (!U || results[i].upper < *U) U = results[i].upper;
      seen.emplace(fresh[i], std::move(results[i]));
    }
    if (U && theta >= *U) break;
    if (theta >= limit) break;
    theta = std::min({2 * theta, U.value_or(limit), limit});
  }

  std::optional<std::int64_t> min_s;
  std::pair<std::int64_t, std::int64_t> min_s_at{0, 0};
  Rational min_s_t = 1;
  for (const auto& [ab, g] : seen)
    if (!min_s || g.lower < *min_s) {
      min_s = g.lower;
      min_s_at = ab;
      min_s_t = g.lower_witness;
    }
  if (min_s && *min_s <= theta) {
    out.lower = *min_s;
    out.lower_certificate = "min over all (a,b) of max|sigma'(a*x - b*y)| = " + std::to_string(*min_s) + ", attained at " +
                            detail::pair_label(min_s_at.first, min_s_at.second) + ", t=" + to_string(min_s_t);
  } else {
    out.lower = theta + 1;
    out.lower_certificate = "every (a,b) has max|sigma'(a*x - b*y)| > " + std::to_string(theta);
  }
  out.upper = U;
  if (U) {
    for (const auto& [ab, g] : seen)
      if (g.upper == *U) out.argmins.push_back(ab);
    const auto& g = seen.at(out.argmins.front());
    out.upper_certificate = "g4(" + detail::linear(out.argmins.front().first, x.combo, out.argmins.front().second, y.combo).to_string() +
                            ") <= " + std::to_string(*U) + " (" + to_string(g.upper_kind) + ": " + g.upper_note + ")";
  } else {
    out.upper_certificate = "no combination with upper bound <= " + std::to_string(limit);
  }
  return out;
}

/// Whether delta([x],[y]) = 1.
enum class Verdict { One, NotOne, Uncertified };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::One: return "one";
    case Verdict::NotOne: return "not-one";
    case Verdict::Uncertified: return "uncertified";
  }
  return "?";
}

/// Decides delta = 1 with the search capped at theta = 1: distinct classes
/// have delta >= 1, a pair with S <= 1 and g4 upper <= 1 proves delta = 1, and
/// the absence of any pair with S <= 1 proves delta >= 2.
inline Verdict delta_is_one(const ClassNode& x, const ClassNode& y, std::string* certificate = nullptr) {
  const DistInterval d = delta_certified(x, y, {}, 1);
  if (d.upper && *d.upper == 1 && d.lower == 1) {
    if (certificate) *certificate = d.upper_certificate;
    return Verdict::One;
  }
  if (d.lower >= 2 || (d.upper && *d.upper == 0)) {
    if (certificate) *certificate = d.upper && *d.upper == 0 ? "same class" : d.lower_certificate;
    return Verdict::NotOne;
  }
  if (certificate) *certificate = "signature allows 1 but no schema reaches 1";
  return Verdict::Uncertified;
}

// ---------------------------------------------------------------------------
// d-bar search over (b, a) for b T(2,2n+1) - a T(2,2k+1)

struct DbarCandidate {
  std::int64_t b = 0;
  std::int64_t a = 0;
  GenusInterval interval;
};

struct DbarResult {
  std::int64_t value = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> argmins;  // (b, a)
  bool certified = false;
  std::int64_t v0 = 0;  // closed-form bound defining the region
  std::int64_t j1 = 0;  // jumps of T(2,2n+1) below 1/(2k+1)
  std::vector<DbarCandidate> candidates;
};

/// Every (b, a) with b > 0, a != 0 that could have g4(b T_n - a T_k) <= v0.
/// Same sign: sigma' just below 1/(2k+1) equals b J1 and sigma'(1) = bn - ak.
/// Opposite sign: sigma'(1) = bn + |a|k.
inline std::vector<std::pair<std::int64_t, std::int64_t>> dbar_region(std::int64_t k, std::int64_t n, std::int64_t v0) {
  const std::int64_t j1 = jumps_below(k, n);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t b = 1; b * j1 <= v0; ++b) {
    for (std::int64_t a = -1; b * n - a * k <= v0; --a) out.emplace_back(b, a);
    const std::int64_t lo = std::max<std::int64_t>(1, detail::ceil_div(b * n - v0, k));
    const std::int64_t hi = detail::floor_div(b * n + v0, k);
    for (std::int64_t a = lo; a <= hi; ++a) out.emplace_back(b, a);
  }
  return out;
}

inline DbarResult dbar_search(std::int64_t k, std::int64_t n, const ExecPolicy& policy = {}) {
  if (!(0 < k && k < n)) throw std::domain_error("dbar_search needs 0 < k < n");
  DbarResult r;
  r.v0 = closed_form_b1(k, n).minimum();
  r.j1 = jumps_below(k, n);
  const auto region = dbar_region(k, n, r.v0);
  r.candidates.resize(region.size());
  parallel_for(region.size(), policy, [&](std::size_t i) {
    const auto [b, a] = region[i];
    r.candidates[i] = {b, a, g4_interval(KnotCombo::torus(n, b) + KnotCombo::torus(k, -a))};
  });
  r.value = r.v0;
  for (const auto& c : r.candidates) r.value = std::min(r.value, c.interval.upper);
  r.certified = true;
  for (const auto& c : r.candidates) {
    if (c.interval.lower <= r.value && !c.interval.exact()) r.certified = false;
    if (c.interval.exact() && c.interval.upper == r.value) r.argmins.emplace_back(c.b, c.a);
  }
  return r;
}

/// d-bar(T(2,2k+1), T(2,2n+1)) / n; throws when the search is not certified.
inline Rational growth_ratio(std::int64_t k, std::int64_t n, const ExecPolicy& policy = {}) {
  const DbarResult r = dbar_search(k, n, policy);
  if (!r.certified) throw std::runtime_error("d-bar search for (" + std::to_string(k) + "," + std::to_string(n) + ") is not certified");
  return make_rational(r.value, n);
}

// ---------------------------------------------------------------------------
// Radius-one balls among torus classes

/// Torus parameter m' is at distance one from m < m' iff m' is k+1, 2k, 2k+1
/// or 3k+1 for k = m.
inline bool torus_pair_distance_one(std::int64_t m1, std::int64_t m2) {
  const std::int64_t k = std::min(m1, m2), n = std::max(m1, m2);
  return k != n && (n == k + 1 || n == 2 * k || n == 2 * k + 1 || n == 3 * k + 1);
}

/// Odd parameters q' <= q_max with delta([T(2,q)],[T(2,q')]) = 1. The
/// classification and the direct computation are both run; any disagreement
/// or uncertified pair throws.
inline std::vector<std::int64_t> ball_radius_one(std::int64_t q, std::int64_t q_max, const ExecPolicy& policy = {}) {
  if (q < 3 || q % 2 == 0) throw std::domain_error("ball centre needs odd q >= 3");
  if (q_max < q) throw std::domain_error("ball needs q <= q_max");
  const std::int64_t m = (q - 1) / 2;
  const ClassNode centre = ClassNode::make(KnotCombo::torus(m));
  std::vector<std::int64_t> others;
  for (std::int64_t mm = 1; 2 * mm + 1 <= q_max; ++mm)
    if (mm != m) others.push_back(mm);
  std::vector<Verdict> verdicts(others.size());
  parallel_for(others.size(), policy, [&](std::size_t i) {
    verdicts[i] = delta_is_one(centre, ClassNode::make(KnotCombo::torus(others[i])));
  });
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < others.size(); ++i) {
    const bool classified = torus_pair_distance_one(m, others[i]);
    if (verdicts[i] == Verdict::Uncertified)
      throw std::runtime_error("delta(T(2," + std::to_string(q) + "), T(2," + std::to_string(2 * others[i] + 1) + ")) not decided");
    if (classified != (verdicts[i] == Verdict::One))
      throw std::logic_error("classification and direct delta disagree for T(2," + std::to_string(q) + "), T(2," +
                             std::to_string(2 * others[i] + 1) + ")");
    if (classified) out.push_back(2 * others[i] + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Delta

/// T(2,2m+1) for m <= 30, and 2T(2,q) + T(2,3q) for odd q in 3..19.
inline std::vector<ClassNode> default_universe() {
  std::vector<ClassNode> u;
  for (std::int64_t m = 1; m <= 30; ++m) u.push_back(ClassNode::make(KnotCombo::torus(m)));
  for (std::int64_t q = 3; q <= 19; q += 2)
    u.push_back(ClassNode::make(KnotCombo(Generator::torus_q(q), 2) + KnotCombo(Generator::torus_q(3 * q), 1)));
  return u;
}

/// Certified interval for Delta([x],[y]) relative to a finite universe of
/// intermediate classes. Edges carry delta upper bounds; only edges shorter
/// than the direct delta upper bound can shorten a path, so each edge search
/// is capped there.
inline DistInterval big_delta_interval(const ClassNode& x, const ClassNode& y, const std::vector<ClassNode>& universe,
                                       const ExecPolicy& policy = {}) {
  const DistInterval direct = delta_certified(x, y, policy);
  DistInterval out;
  out.chain = {x.combo, y.combo};
  if (direct.upper && *direct.upper == 0) {
    out.lower = 0;
    out.upper = 0;
    out.lower_certificate = out.upper_certificate = "same class";
    out.chain = {x.combo};
    return out;
  }

  out.lower = direct.lower >= 2 ? 2 : 1;
  out.lower_certificate = direct.lower >= 2 ? "delta >= 2, and Delta = 1 iff delta = 1" : "distinct classes";
  out.upper = direct.upper;
  out.upper_certificate = "direct: delta <= " + std::to_string(*direct.upper);

  std::vector<ClassNode> nodes{x, y};
  for (const auto& u : universe)
    if (u.combo != x.combo && u.combo != y.combo && u.combo != -x.combo && u.combo != -y.combo) nodes.push_back(u);

  const std::int64_t cap = *direct.upper - 1;
  if (cap >= 1) {
    const std::size_t N = nodes.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (!(i == 0 && j == 1)) pairs.emplace_back(i, j);
    std::vector<std::optional<std::int64_t>> w(pairs.size());
    parallel_for(pairs.size(), policy, [&](std::size_t p) {
      const DistInterval d = delta_certified(nodes[pairs[p].first], nodes[pairs[p].second], {}, cap);
      if (d.upper && *d.upper <= cap) w[p] = *d.upper;
    });
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(N);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (w[p]) {
        adj[pairs[p].first].emplace_back(pairs[p].second, *w[p]);
        adj[pairs[p].second].emplace_back(pairs[p].first, *w[p]);
      }

    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(N, inf);
    std::vector<std::size_t> prev(N, N);
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[0] = 0;
    pq.emplace(0, 0);
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      for (auto [to, wt] : adj[v])
        if (d + wt < dist[to]) {
          dist[to] = d + wt;
          prev[to] = v;
          pq.emplace(dist[to], to);
        }
    }
    if (dist[1] < *out.upper) {
      out.upper = dist[1];
      out.chain.clear();
      for (std::size_t v = 1; v != N; v = prev[v]) out.chain.push_back(nodes[v].combo);
      std::reverse(out.chain.begin(), out.chain.end());
      out.upper_certificate = "chain of " + std::to_string(out.chain.size() - 1) + " steps with total delta " + std::to_string(dist[1]);
    }
  }

  if (direct.exact() && (*direct.upper == 1 || *direct.upper == 2)) {
    out.lower = *direct.upper;
    out.upper = *direct.upper;
    out.lower_certificate = "delta = " + std::to_string(*direct.upper) + " exactly, and Delta = 1 iff delta = 1";
  }
  return out;
}

struct ChainLegs {
  DistInterval first;   // x to middle
  DistInterval second;  // middle to y
};

inline ChainLegs chain_witness_check(const ClassNode& x, const ClassNode& y, const ClassNode& middle, const ExecPolicy& policy = {}) {
  return {delta_certified(x, middle, policy), delta_certified(middle, y, policy)};
}

// ---------------------------------------------------------------------------
// Z + Z with the max norm

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

/// Primitive, sign-normalized representative of the class of p.
inline LatticePoint zz_primitive(LatticePoint p) {
  if (p.first == 0 && p.second == 0) throw std::domain_error("zero lattice point has no class");
  const std::int64_t g = std::gcd(std::abs(p.first), std::abs(p.second));
  p = {p.first / g, p.second / g};
  if (p.first < 0 || (p.first == 0 && p.second < 0)) p = {-p.first, -p.second};
  return p;
}

inline std::int64_t zz_norm(LatticePoint p) { return std::max(std::abs(p.first), std::abs(p.second)); }

/// min over s >= 1, t != 0 of |s u - t v| (max norm), u, v the primitive
/// representatives. With D = det(u, v) != 0, every pair with norm <= U has
/// s <= U |v|_1 / |D|, which bounds the search.
inline std::int64_t zz_delta(LatticePoint x, LatticePoint y) {
  const LatticePoint u = zz_primitive(x), v = zz_primitive(y);
  if (u == v) return 0;
  const std::int64_t D = std::abs(u.first * v.second - u.second * v.first);
  std::int64_t best = std::min(zz_norm({u.first - v.first, u.second - v.second}), zz_norm({u.first + v.first, u.second + v.second}));
  const std::int64_t smax = best * (std::abs(v.first) + std::abs(v.second)) / D;
  for (std::int64_t s = 1; s <= smax; ++s) {
    // |s u_c - t v_c| <= best for both coordinates bounds t.
    std::int64_t lo = std::numeric_limits<std::int64_t>::min() / 4, hi = std::numeric_limits<std::int64_t>::max() / 4;
    for (auto [uc, vc] : {std::pair{u.first, v.first}, std::pair{u.second, v.second}}) {
      if (vc == 0) continue;
      const std::int64_t c = s * uc;
      const std::int64_t av = std::abs(vc), sc = vc > 0 ? c : -c;
      lo = std::max(lo, detail::ceil_div(sc - best, av));
      hi = std::min(hi, detail::floor_div(sc + best, av));
    }
    for (std::int64_t t = lo; t <= hi; ++t)
      if (t != 0) best = std::min(best, zz_norm({s * u.first - t * v.first, s * u.second - t * v.second}));
  }
  return best;
}

struct ZzChain {
  std::optional<std::int64_t> length;  // nullopt: unreachable within the bound
  std::vector<LatticePoint> path;      // class representatives, x first
};

/// Shortest chain of unit moves between classes: a step goes from [p] to
/// [s p + e] with |e| = 1, all points of max norm <= bound. Every step has
/// delta <= 1, so the length bounds Delta from above.
inline ZzChain zz_big_delta(LatticePoint x, LatticePoint y, std::int64_t bound) {
  const LatticePoint from = zz_primitive(x), to = zz_primitive(y);
  ZzChain out;
  std::map<LatticePoint, LatticePoint> parent;
  std::queue<LatticePoint> q;
  parent.emplace(from, from);
  q.push(from);
  while (!q.empty() && !parent.count(to)) {
    const LatticePoint p = q.front();
    q.pop();
    for (std::int64_t s = 1; s * zz_norm(p) <= bound + 1; ++s)
      for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          const LatticePoint w{s * p.first + dx, s * p.second + dy};
          if ((dx == 0 && dy == 0) || (w.first == 0 && w.second == 0) || zz_norm(w) > bound) continue;
          const LatticePoint c = zz_primitive(w);
          if (parent.emplace(c, p).second) q.push(c);
        }
  }
  if (!parent.count(to)) return out;
  for (LatticePoint p = to;; p = parent.at(p)) {
    out.path.push_back(p);
    if (p == from) break;
  }
  std::reverse(out.path.begin(), out.path.end());
  out.length = static_cast<std::int64_t>(out.path.size()) - 1;
  return out;
}

}  // namespace knotproj
