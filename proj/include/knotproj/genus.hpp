#pragma once

// Certified four-genus intervals for combinations of torus knots.
//
// Lower bounds come from the signature function. Upper bounds come from a
// combinatorial model of band surgery on the schematic Seifert surface of a
// difference of torus knots: every positive summand contributes blocks of
// bands on the top, every negative summand blocks on the bottom, and each
// surgery curve runs over one top band and one bottom band.
//
// A schema is an ordered list of runs. Run i pairs `length` consecutive bands
// of a top block with `length` consecutive bands of a bottom block. Along the
// run order both block indices are non-decreasing, and two consecutive runs
// never share both blocks. When consecutive runs share a top block (so they
// go to different bottom blocks) at least one top band between them stays
// unused, and symmetrically for the bottom. After surgery the genus is half
// the number of free bands, i.e. total_bands / 2 - curves.

#include "knotproj/errors.hpp"
#include "knotproj/exactnum.hpp"
#include "knotproj/knots.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace knotproj {

struct SurgeryRun {
  std::int64_t top_block = 0;
  std::int64_t top_offset = 0;
  std::int64_t bottom_block = 0;
  std::int64_t bottom_offset = 0;
  std::int64_t length = 0;

  bool operator==(const SurgeryRun&) const = default;
};

struct SurgerySchema {
  std::vector<std::int64_t> top_blocks;
  std::vector<std::int64_t> bottom_blocks;
  std::vector<SurgeryRun> runs;

  std::int64_t curve_count() const {
    std::int64_t n = 0;
    for (const auto& r : runs) n += r.length;
    return n;
  }
  std::int64_t total_bands() const {
    return std::accumulate(top_blocks.begin(), top_blocks.end(), std::int64_t{0}) +
           std::accumulate(bottom_blocks.begin(), bottom_blocks.end(), std::int64_t{0});
  }
  /// Genus of the surgered surface.
  std::int64_t genus_after_surgery() const { return total_bands() / 2 - curve_count(); }

  bool operator==(const SurgerySchema&) const = default;
};

inline bool schema_validate(const SurgerySchema& s) {
  auto blocks_ok = [](const std::vector<std::int64_t>& blocks) {
    return std::all_of(blocks.begin(), blocks.end(), [](std::int64_t b) { return b > 0 && b % 2 == 0; });
  };
  if (!blocks_ok(s.top_blocks) || !blocks_ok(s.bottom_blocks)) return false;

  const auto ntop = static_cast<std::int64_t>(s.top_blocks.size());
  const auto nbot = static_cast<std::int64_t>(s.bottom_blocks.size());
  for (std::size_t i = 0; i < s.runs.size(); ++i) {
    const SurgeryRun& r = s.runs[i];
    if (r.length < 1) return false;
    if (r.top_block < 0 || r.top_block >= ntop || r.bottom_block < 0 || r.bottom_block >= nbot) return false;
    if (r.top_offset < 0 || r.bottom_offset < 0) return false;
    if (r.top_offset + r.length > s.top_blocks[static_cast<std::size_t>(r.top_block)]) return false;
    if (r.bottom_offset + r.length > s.bottom_blocks[static_cast<std::size_t>(r.bottom_block)]) return false;
    if (i == 0) continue;

    const SurgeryRun& p = s.runs[i - 1];
    if (r.top_block < p.top_block || r.bottom_block < p.bottom_block) return false;  // crossing
    const bool same_top = r.top_block == p.top_block;
    const bool same_bottom = r.bottom_block == p.bottom_block;
    if (same_top && same_bottom) return false;  // unmerged
    if (same_top && r.top_offset < p.top_offset + p.length + 1) return false;
    if (same_bottom && r.bottom_offset < p.bottom_offset + p.length + 1) return false;
  }
  return true;
}

struct SurgeryPlan {
  std::int64_t count = 0;
  SurgerySchema witness;
};

namespace detail {

// Dynamic program over run structure. A run is always entered with at least
// one of its two blocks untouched, so the state is (top block, bottom block,
// remaining capacity of the touched side):
//   fresh_bottom[t][b][r]: best total when the next run sits in (t, b), top
//                          block t has r bands left, bottom block b is fresh;
//   fresh_top[t][b][r]:    symmetric.
// After a run of length l the next run either stays in top block t (pays one
// top gap, fresh bottom b' > b), stays in bottom block b (pays one bottom gap,
// fresh top t' > t), or moves to fresh blocks on both sides.
class SurgeryDp {
 public:
  SurgeryDp(const std::vector<std::int64_t>& top, const std::vector<std::int64_t>& bottom)
      : top_(top), bot_(bottom), T_(top.size()), B_(bottom.size()) {
    alloc(fresh_bottom_, top_, true);
    alloc(fresh_top_, bot_, false);
    alloc(top_suffix_, top_, true);
    alloc(bottom_suffix_, bot_, false);
    both_suffix_.assign(T_ + 1, std::vector<std::int64_t>(B_ + 1, 0));

    for (std::size_t t = T_; t-- > 0;) {
      for (std::size_t b = B_; b-- > 0;) {
        for (std::int64_t r = 1; r <= top_[t]; ++r) fresh_bottom_[t][b][idx(r)] = best_from(t, b, r, bot_[b]);
        for (std::int64_t r = 1; r <= bot_[b]; ++r) fresh_top_[t][b][idx(r)] = best_from(t, b, top_[t], r);
        for (std::int64_t r = 1; r <= top_[t]; ++r)
          top_suffix_[t][b][idx(r)] =
              std::max(fresh_bottom_[t][b][idx(r)], b + 1 < B_ ? top_suffix_[t][b + 1][idx(r)] : 0);
        for (std::int64_t r = 1; r <= bot_[b]; ++r)
          bottom_suffix_[t][b][idx(r)] =
              std::max(fresh_top_[t][b][idx(r)], t + 1 < T_ ? bottom_suffix_[t + 1][b][idx(r)] : 0);
        both_suffix_[t][b] = std::max({both(t, b), both_suffix_[t + 1][b], both_suffix_[t][b + 1]});
      }
    }
  }

  std::int64_t best() const { return T_ == 0 || B_ == 0 ? 0 : both_suffix_[0][0]; }

  SurgerySchema witness() const {
    SurgerySchema s{top_, bot_, {}};
    if (best() == 0) return s;

    std::size_t t = 0, b = 0;
    find_both(0, 0, best(), t, b);
    std::int64_t top_off = 0, bot_off = 0;
    for (;;) {
      const std::int64_t rt = top_[t] - top_off, rb = bot_[b] - bot_off;
      const std::int64_t target = value(t, b, rt, rb);
      std::int64_t len = 0, rest = 0;
      for (std::int64_t l = 1; l <= std::min(rt, rb); ++l) {
        rest = next_best(t, b, rt - l, rb - l);
        if (l + rest == target) {
          len = l;
          break;
        }
      }
      if (len == 0) throw std::logic_error("surgery DP reconstruction failed");
      s.runs.push_back({static_cast<std::int64_t>(t), top_off, static_cast<std::int64_t>(b), bot_off, len});
      if (rest == 0) break;

      const std::int64_t ut = rt - len - 1, ub = rb - len - 1;
      if (ut >= 1 && b + 1 < B_ && top_suffix_[t][b + 1][idx(ut)] == rest) {
        std::size_t nb = b + 1;
        while (fresh_bottom_[t][nb][idx(ut)] != rest) ++nb;
        top_off += len + 1;
        b = nb;
        bot_off = 0;
      } else if (ub >= 1 && t + 1 < T_ && bottom_suffix_[t + 1][b][idx(ub)] == rest) {
        std::size_t nt = t + 1;
        while (fresh_top_[nt][b][idx(ub)] != rest) ++nt;
        bot_off += len + 1;
        t = nt;
        top_off = 0;
      } else {
        find_both(t + 1, b + 1, rest, t, b);
        top_off = bot_off = 0;
      }
    }
    return s;
  }

 private:
  using Table = std::vector<std::vector<std::vector<std::int64_t>>>;

  static std::size_t idx(std::int64_t r) { return static_cast<std::size_t>(r); }

  void alloc(Table& tab, const std::vector<std::int64_t>& sizes, bool by_top) {
    tab.assign(T_, std::vector<std::vector<std::int64_t>>(B_));
    for (std::size_t t = 0; t < T_; ++t)
      for (std::size_t b = 0; b < B_; ++b) tab[t][b].assign(idx((by_top ? sizes[t] : sizes[b]) + 1), 0);
  }

  std::int64_t both(std::size_t t, std::size_t b) const { return fresh_bottom_[t][b][idx(top_[t])]; }

  std::int64_t value(std::size_t t, std::size_t b, std::int64_t rt, std::int64_t rb) const {
    return rb == bot_[b] ? fresh_bottom_[t][b][idx(rt)] : fresh_top_[t][b][idx(rb)];
  }

  std::int64_t next_best(std::size_t t, std::size_t b, std::int64_t ut, std::int64_t ub) const {
    std::int64_t best = both_suffix_[t + 1][b + 1];
    if (ut - 1 >= 1 && b + 1 < B_) best = std::max(best, top_suffix_[t][b + 1][idx(ut - 1)]);
    if (ub - 1 >= 1 && t + 1 < T_) best = std::max(best, bottom_suffix_[t + 1][b][idx(ub - 1)]);
    return best;
  }

  std::int64_t best_from(std::size_t t, std::size_t b, std::int64_t rt, std::int64_t rb) const {
    std::int64_t best = 0;
    for (std::int64_t l = 1; l <= std::min(rt, rb); ++l) best = std::max(best, l + next_best(t, b, rt - l, rb - l));
    return best;
  }

  void find_both(std::size_t t0, std::size_t b0, std::int64_t target, std::size_t& t, std::size_t& b) const {
    for (std::size_t i = t0; i < T_; ++i)
      for (std::size_t j = b0; j < B_; ++j)
        if (both(i, j) == target) {
          t = i;
          b = j;
          return;
        }
    throw std::logic_error("surgery DP reconstruction failed");
  }

  std::vector<std::int64_t> top_, bot_;
  std::size_t T_, B_;
  Table fresh_bottom_, fresh_top_, top_suffix_, bottom_suffix_;
  std::vector<std::vector<std::int64_t>> both_suffix_;
};

}  // namespace detail

/// Maximum number of surgery curves over all valid schemas, with a witness.
inline SurgeryPlan max_surgeries(const std::vector<std::int64_t>& top_blocks,
                                 const std::vector<std::int64_t>& bottom_blocks) {
  for (const auto* side : {&top_blocks, &bottom_blocks})
    for (auto b : *side)
      if (b <= 0 || b % 2 != 0) throw std::domain_error("band blocks must be even and positive");
  detail::SurgeryDp dp(top_blocks, bottom_blocks);
  SurgeryPlan plan{dp.best(), dp.witness()};
  if (!schema_validate(plan.witness) || plan.witness.curve_count() != plan.count)
    throw std::logic_error("surgery DP produced an invalid witness");
  return plan;
}

/// Band blocks of the Seifert surface: positive terms on top, negative terms
/// on the bottom, |c| blocks of 2m bands per term, in generator order.
inline SurgerySchema band_layout(const KnotCombo& c) {
  SurgerySchema s;
  for (const auto& [g, coeff] : c.terms()) {
    if (!g.is_torus()) throw UnsupportedGenerator("no band model for twist knot " + g.label());
    auto& side = coeff > 0 ? s.top_blocks : s.bottom_blocks;
    side.insert(side.end(), static_cast<std::size_t>(std::llabs(coeff)), 2 * g.param);
  }
  return s;
}

struct UpperBound {
  std::int64_t bound = 0;
  SurgerySchema witness;
};

inline UpperBound upper_bound_g4(const KnotCombo& c) {
  SurgerySchema layout = band_layout(c);
  if (layout.top_blocks.empty() || layout.bottom_blocks.empty())
    return {c.seifert_genus(), std::move(layout)};
  SurgeryPlan plan = max_surgeries(layout.top_blocks, layout.bottom_blocks);
  return {plan.witness.genus_after_surgery(), std::move(plan.witness)};
}

struct ClosedFormB1 {
  std::int64_t alpha = 0;
  std::int64_t at_alpha = 0;
  std::optional<std::int64_t> at_alpha_plus_1;

  std::int64_t minimum() const {
    return at_alpha_plus_1 ? std::min(at_alpha, *at_alpha_plus_1) : at_alpha;
  }
};

/// Constructed bounds for T(2,2n+1) - a T(2,2k+1) at a = alpha and a = alpha + 1,
/// alpha = floor((2n+1)/(2k+1)). The second is undefined when 2k+1 | 2n+1.
inline ClosedFormB1 closed_form_b1(std::int64_t k, std::int64_t n) {
  if (!(0 < k && k < n)) throw std::domain_error("closed_form_b1 needs 0 < k < n");
  ClosedFormB1 r;
  r.alpha = (2 * n + 1) / (2 * k + 1);
  r.at_alpha = n - r.alpha * k;
  if ((2 * n + 1) % (2 * k + 1) != 0) r.at_alpha_plus_1 = (r.alpha + 1) * (k + 1) - n - 1;
  return r;
}

enum class UpperKind { Schema, ClosedForm, Seifert };

inline const char* to_string(UpperKind k) {
  switch (k) {
    case UpperKind::Schema: return "schema";
    case UpperKind::ClosedForm: return "closed-form";
    case UpperKind::Seifert: return "seifert";
  }
  return "?";
}

struct GenusInterval {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  Rational lower_witness{1};  // |sigma'| attains `lower` here
  UpperKind upper_kind = UpperKind::Seifert;
  SurgerySchema schema;      // band layout, with runs when upper_kind == Schema
  std::string upper_note;    // human-readable description of the upper certificate

  bool exact() const { return lower == upper; }
};

namespace detail {

// Recognizes +-(T(2,2n+1) - a T(2,2k+1)) with a in {alpha, alpha+1}.
inline std::optional<std::pair<std::int64_t, std::string>> closed_form_for(const KnotCombo& c) {
  if (c.terms().size() != 2) return std::nullopt;
  auto lo = c.terms().begin();
  auto hi = std::next(lo);
  const std::int64_t k = lo->first.param, n = hi->first.param;
  std::int64_t big = hi->second, small = lo->second;
  if (!lo->first.is_torus() || !hi->first.is_torus()) return std::nullopt;
  if (big < 0) {
    big = -big;
    small = -small;
  }
  if (big != 1 || small >= 0) return std::nullopt;
  const std::int64_t a = -small;
  const ClosedFormB1 cf = closed_form_b1(k, n);
  const std::string tag = "T(2," + std::to_string(2 * n + 1) + ") - a*T(2," + std::to_string(2 * k + 1) + ")";
  if (a == cf.alpha) return std::pair{cf.at_alpha, "closed form n - alpha*k for " + tag + ", a = alpha"};
  if (cf.at_alpha_plus_1 && a == cf.alpha + 1)
    return std::pair{*cf.at_alpha_plus_1, "closed form (alpha+1)(k+1) - n - 1 for " + tag + ", a = alpha + 1"};
  return std::nullopt;
}

}  // namespace detail

inline GenusInterval g4_interval(const KnotCombo& c) {
  GenusInterval g;
  const StepFunction sig = combo_signature(c);  // rejects twist terms
  g.lower = sig.sup_abs();
  g.lower_witness = sig.interval_sample(sig.sup_abs_interval());

  UpperBound ub = upper_bound_g4(c);
  g.upper = ub.bound;
  g.schema = std::move(ub.witness);
  g.upper_kind = g.schema.runs.empty() ? UpperKind::Seifert : UpperKind::Schema;
  g.upper_note = g.schema.runs.empty()
                     ? "Seifert surface genus"
                     : std::to_string(g.schema.curve_count()) + " surgery curves on " +
                           std::to_string(g.schema.total_bands()) + " bands";

  if (auto cf = detail::closed_form_for(c); cf && cf->first < g.upper) {
    g.upper = cf->first;
    g.upper_kind = UpperKind::ClosedForm;
    g.upper_note = cf->second;
  }
  if (const auto sg = c.seifert_genus(); sg < g.upper) {
    g.upper = sg;
    g.upper_kind = UpperKind::Seifert;
    g.upper_note = "Seifert surface genus";
  }
  if (g.lower > g.upper) throw std::logic_error("g4 interval inverted for " + c.to_string());
  return g;
}

}  // namespace knotproj
