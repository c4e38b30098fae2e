#pragma once

// Projectivization of finitely generated abelian groups.
//
// x ~' y when x = r m and y = s m for some m and integers r, s; the projective
// relation is the equivalence relation it generates. Canonical class labels:
//   * zero                       -> Star (the adjoined basepoint)
//   * non-torsion x              -> the primitive, sign-normalized free part
//                                   (torsion is invisible: [x] = [x + t])
//   * torsion, >= 2 primes       -> the single Mixed class
//   * torsion in a p-group       -> the F_p-line through n x, where n is least
//                                   with p n x = 0 (the bottom layer of x)

#include "knotproj/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotproj {

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// (p, k) with n = p^k, or nullopt when n is not a prime power > 1.
inline std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = n;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  std::int64_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::pair{p, k};
}

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  throw std::logic_error("no inverse mod p");
}

}  // namespace detail

struct GroupElement {
  std::vector<std::int64_t> free_part;
  std::vector<std::int64_t> torsion_part;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

/// Z^rank + Z_{q_1} + ... with every q_i a prime power.
class FgGroup {
 public:
  FgGroup() = default;
  FgGroup(std::int64_t rank, std::vector<std::int64_t> torsion) : rank_(rank), torsion_(std::move(torsion)) {
    if (rank_ < 0) throw std::invalid_argument("negative rank");
    for (auto q : torsion_) {
      auto pp = detail::prime_power(q);
      if (!pp) throw std::invalid_argument("torsion order " + std::to_string(q) + " is not a prime power > 1");
      primes_.push_back(pp->first);
      exps_.push_back(pp->second);
    }
  }

  std::int64_t rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::int64_t prime(std::size_t i) const { return primes_[i]; }
  std::int64_t prime_exponent(std::size_t i) const { return exps_[i]; }

  std::set<std::int64_t> torsion_primes() const { return {primes_.begin(), primes_.end()}; }

  /// Least common multiple of the torsion orders (1 when torsion-free).
  std::int64_t exponent() const {
    std::int64_t e = 1;
    for (auto q : torsion_) e = std::lcm(e, q);
    return e;
  }

  /// Order of the torsion subgroup.
  std::int64_t torsion_order() const {
    std::int64_t n = 1;
    for (auto q : torsion_) n *= q;
    return n;
  }

  GroupElement element(std::vector<std::int64_t> free_part, std::vector<std::int64_t> torsion_part) const {
    if (static_cast<std::int64_t>(free_part.size()) != rank_ || torsion_part.size() != torsion_.size())
      throw std::invalid_argument("element shape does not match group " + to_string());
    for (std::size_t i = 0; i < torsion_part.size(); ++i) torsion_part[i] = detail::mod(torsion_part[i], torsion_[i]);
    return {std::move(free_part), std::move(torsion_part)};
  }

  GroupElement zero() const {
    return {std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0), std::vector<std::int64_t>(torsion_.size(), 0)};
  }

  GroupElement multiple(std::int64_t r, const GroupElement& x) const {
    GroupElement out = x;
    for (auto& v : out.free_part) v *= r;
    for (std::size_t i = 0; i < out.torsion_part.size(); ++i)
      out.torsion_part[i] = detail::mod(r * detail::mod(out.torsion_part[i], torsion_[i]), torsion_[i]);
    return out;
  }

  GroupElement sum(const GroupElement& x, const GroupElement& y) const {
    GroupElement out = x;
    for (std::size_t i = 0; i < out.free_part.size(); ++i) out.free_part[i] += y.free_part[i];
    for (std::size_t i = 0; i < out.torsion_part.size(); ++i)
      out.torsion_part[i] = detail::mod(out.torsion_part[i] + y.torsion_part[i], torsion_[i]);
    return out;
  }

  static bool is_zero(const GroupElement& x) {
    auto z = [](const std::vector<std::int64_t>& v) { return std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; }); };
    return z(x.free_part) && z(x.torsion_part);
  }
  static bool is_torsion(const GroupElement& x) {
    return std::all_of(x.free_part.begin(), x.free_part.end(), [](auto c) { return c == 0; });
  }

  /// Every element of the torsion subgroup, in lexicographic residue order.
  std::vector<GroupElement> torsion_elements() const {
    std::vector<GroupElement> out;
    GroupElement cur = zero();
    for (;;) {
      out.push_back(cur);
      std::size_t i = 0;
      for (; i < torsion_.size(); ++i) {
        if (++cur.torsion_part[i] < torsion_[i]) break;
        cur.torsion_part[i] = 0;
      }
      if (i == torsion_.size()) break;
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    if (rank_ > 0) s = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
    for (auto q : torsion_) s += (s.empty() ? "" : " + ") + std::string("Z") + std::to_string(q);
    return s.empty() ? "0" : s;
  }

  bool operator==(const FgGroup& o) const { return rank_ == o.rank_ && torsion_ == o.torsion_; }

 private:
  std::int64_t rank_ = 0;
  std::vector<std::int64_t> torsion_;
  std::vector<std::int64_t> primes_, exps_;
};

/// A group written with arbitrary cyclic factors Z_n, split into prime-power
/// factors by the Chinese remainder theorem.
struct GroupPresentation {
  FgGroup group;
  std::vector<std::int64_t> cyclic_orders;              // as written
  std::vector<std::vector<std::size_t>> factor_indices;  // written factor -> torsion entries

  /// Maps residues modulo the written cyclic orders into the group.
  GroupElement element(std::vector<std::int64_t> free_part, const std::vector<std::int64_t>& residues) const {
    if (residues.size() != cyclic_orders.size())
      throw std::invalid_argument("element has " + std::to_string(residues.size()) + " torsion entries, group has " +
                                  std::to_string(cyclic_orders.size()));
    std::vector<std::int64_t> tors(group.torsion().size(), 0);
    for (std::size_t i = 0; i < residues.size(); ++i)
      for (auto j : factor_indices[i]) tors[j] = residues[i];
    return group.element(std::move(free_part), std::move(tors));
  }
};

inline GroupPresentation presentation_from_cyclic(std::int64_t rank, const std::vector<std::int64_t>& orders) {
  GroupPresentation p;
  p.cyclic_orders = orders;
  std::vector<std::int64_t> torsion;
  for (auto n : orders) {
    if (n < 2) throw std::invalid_argument("cyclic factor Z" + std::to_string(n) + " must have order >= 2");
    std::vector<std::size_t> idx;
    std::int64_t rest = n;
    for (std::int64_t d = 2; d <= rest; ++d) {
      if (rest % d != 0) continue;
      std::int64_t q = 1;
      while (rest % d == 0) {
        rest /= d;
        q *= d;
      }
      idx.push_back(torsion.size());
      torsion.push_back(q);
    }
    p.factor_indices.push_back(std::move(idx));
  }
  p.group = FgGroup(rank, std::move(torsion));
  return p;
}

struct ProjClass {
  enum class Kind { Star, Free, TorsionLine, Mixed };

  Kind kind = Kind::Star;
  std::int64_t prime = 0;             // TorsionLine only
  std::vector<std::int64_t> vector;   // Free: primitive vector; TorsionLine: F_p coordinates

  bool operator==(const ProjClass&) const = default;
  auto operator<=>(const ProjClass&) const = default;

  std::string to_string() const {
    auto vec = [this] {
      std::string s = "(";
      for (std::size_t i = 0; i < vector.size(); ++i) s += (i ? "," : "") + std::to_string(vector[i]);
      return s + ")";
    };
    switch (kind) {
      case Kind::Star: return "*";
      case Kind::Free: return "free" + vec();
      case Kind::TorsionLine: return "F" + std::to_string(prime) + "-line" + vec();
      case Kind::Mixed: return "mixed-torsion";
    }
    return "?";
  }
};

inline ProjClass canonicalize(const FgGroup& G, const GroupElement& x_in) {
  const GroupElement x = G.element(x_in.free_part, x_in.torsion_part);
  ProjClass c;
  if (!FgGroup::is_torsion(x)) {
    std::int64_t g = 0;
    for (auto v : x.free_part) g = std::gcd(g, std::abs(v));
    c.kind = ProjClass::Kind::Free;
    for (auto v : x.free_part) c.vector.push_back(v / g);
    auto lead = std::find_if(c.vector.begin(), c.vector.end(), [](auto v) { return v != 0; });
    if (*lead < 0)
      for (auto& v : c.vector) v = -v;
    return c;
  }
  if (FgGroup::is_zero(x)) return c;  // Star

  const auto primes = G.torsion_primes();
  if (primes.size() >= 2) {
    c.kind = ProjClass::Kind::Mixed;
    return c;
  }

  // p-group: push x down to the elements of order p.
  const std::int64_t p = *primes.begin();
  std::int64_t order_exp = 0;  // ord(x) = p^order_exp
  for (std::size_t i = 0; i < x.torsion_part.size(); ++i) {
    std::int64_t v = x.torsion_part[i];
    if (v == 0) continue;
    std::int64_t e = G.prime_exponent(i);
    while (v % p == 0) {
      v /= p;
      --e;
    }
    order_exp = std::max(order_exp, e);
  }
  const GroupElement bottom = G.multiple(detail::ipow(p, order_exp - 1), x);
  c.kind = ProjClass::Kind::TorsionLine;
  c.prime = p;
  for (std::size_t i = 0; i < bottom.torsion_part.size(); ++i)
    c.vector.push_back(bottom.torsion_part[i] / detail::ipow(p, G.prime_exponent(i) - 1));
  auto lead = std::find_if(c.vector.begin(), c.vector.end(), [](auto v) { return v != 0; });
  const std::int64_t inv = detail::inverse_mod(*lead, p);
  for (auto& v : c.vector) v = detail::mod(v * inv, p);
  return c;
}

/// Whether x and y are multiples of one common element.
///
/// Decision procedure. x = r m forces r != 0 (x != 0), so every free
/// coordinate of m divides the matching coordinates of x and y, and m's free
/// part is x_free / r for a divisor r of gcd(x_free). When x_free != 0 this
/// leaves finitely many r; s is then forced by y_free, and each torsion
/// coordinate of m can be solved for independently. When x_free = 0 (so
/// y_free = 0 is required) m may be taken torsion, and x, y must both lie in
/// the cyclic subgroup generated by some torsion element m.
inline bool related_one_step(const FgGroup& G, const GroupElement& x_in, const GroupElement& y_in) {
  const GroupElement x = G.element(x_in.free_part, x_in.torsion_part);
  const GroupElement y = G.element(y_in.free_part, y_in.torsion_part);
  if (FgGroup::is_zero(x) || FgGroup::is_zero(y)) throw std::domain_error("related_one_step needs nonzero elements");

  const bool xt = FgGroup::is_torsion(x), yt = FgGroup::is_torsion(y);
  if (xt != yt) return false;
  const auto& T = G.torsion();

  if (xt) {
    for (const GroupElement& m : G.torsion_elements()) {
      bool hit_x = false, hit_y = false;
      GroupElement cur = G.zero();
      for (std::int64_t r = 1; r <= G.exponent() && !(hit_x && hit_y); ++r) {
        cur = G.sum(cur, m);
        hit_x = hit_x || cur == x;
        hit_y = hit_y || cur == y;
      }
      if (hit_x && hit_y) return true;
    }
    return false;
  }

  for (std::size_t i = 0; i < x.free_part.size(); ++i)
    if ((x.free_part[i] == 0) != (y.free_part[i] == 0)) return false;

  std::int64_t gx = 0;
  for (auto v : x.free_part) gx = std::gcd(gx, std::abs(v));
  for (std::int64_t d = 1; d <= gx; ++d) {
    if (gx % d != 0) continue;
    for (std::int64_t r : {d, -d}) {
      // m_free = x_free / r; s must satisfy y_free = s m_free.
      std::optional<std::int64_t> s;
      bool ok = true;
      for (std::size_t i = 0; i < x.free_part.size() && ok; ++i) {
        const std::int64_t mi = x.free_part[i] / r;
        if (mi == 0) continue;
        if (y.free_part[i] % mi != 0) {
          ok = false;
          break;
        }
        const std::int64_t si = y.free_part[i] / mi;
        if (s && *s != si) ok = false;
        s = si;
      }
      if (!ok || !s) continue;
      for (std::size_t i = 0; i < T.size() && ok; ++i) {
        bool found = false;
        for (std::int64_t mi = 0; mi < T[i] && !found; ++mi)
          found = detail::mod(r * mi, T[i]) == x.torsion_part[i] && detail::mod(*s * mi, T[i]) == y.torsion_part[i];
        ok = found;
      }
      if (ok) return true;
    }
  }
  return false;
}

inline bool equivalent(const FgGroup& G, const GroupElement& x, const GroupElement& y) {
  if (FgGroup::is_zero(G.element(x.free_part, x.torsion_part)) || FgGroup::is_zero(G.element(y.free_part, y.torsion_part)))
    throw std::domain_error("equivalent needs nonzero elements");
  return canonicalize(G, x) == canonicalize(G, y);
}

/// Number of points of P(G) for a finite group G.
inline std::int64_t class_count(const FgGroup& G) {
  if (G.rank() > 0) throw std::domain_error("class_count needs a finite group (rank 0); P(Z^r) is infinite");
  const auto primes = G.torsion_primes();
  if (primes.empty()) return 0;
  if (primes.size() >= 2) return 1;
  const std::int64_t p = *primes.begin();
  const auto d = static_cast<std::int64_t>(G.torsion().size());
  return (detail::ipow(p, d) - 1) / (p - 1);
}

/// Least a >= 1 (with matching b) such that a x = b y != 0, for equivalent
/// non-torsion x, y. With x_free = c_x v and y_free = c_y v, taking
/// a = e |c_y| / g (e the torsion exponent, g = gcd(c_x, c_y)) always works,
/// so the search over a is bounded by that value.
inline std::optional<std::pair<std::int64_t, std::int64_t>> common_multiple_witness(const FgGroup& G, const GroupElement& x_in,
                                                                                  const GroupElement& y_in) {
  const GroupElement x = G.element(x_in.free_part, x_in.torsion_part);
  const GroupElement y = G.element(y_in.free_part, y_in.torsion_part);
  if (FgGroup::is_torsion(x) || FgGroup::is_torsion(y)) return std::nullopt;
  if (canonicalize(G, x) != canonicalize(G, y)) return std::nullopt;

  const auto lead = static_cast<std::size_t>(
      std::find_if(x.free_part.begin(), x.free_part.end(), [](auto v) { return v != 0; }) - x.free_part.begin());
  const std::int64_t cx = x.free_part[lead], cy = y.free_part[lead];
  const std::int64_t limit = G.exponent() * std::abs(cy) / std::gcd(std::abs(cx), std::abs(cy));
  for (std::int64_t a = 1; a <= limit; ++a) {
    if ((a * cx) % cy != 0) continue;
    const std::int64_t b = a * cx / cy;
    if (G.multiple(a, x) == G.multiple(b, y)) return std::pair{a, b};
  }
  throw std::logic_error("common multiple search exhausted its certified bound");
}

// ---------------------------------------------------------------------------
// Literals: groups "Z^2 + Z2 + Z4 + Z3", elements "(3,-1;1,2,0)".

inline GroupPresentation parse_group(std::string_view text) {
  std::int64_t rank = 0;
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&] {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(std::string(text), pos, "expected unsigned integer");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > 1'000'000'000) throw ParseError(std::string(text), pos, "integer too large");
    }
    return v;
  };
  for (;;) {
    skip();
    if (pos >= text.size() || text[pos] != 'Z') throw ParseError(std::string(text), pos, "expected 'Z', 'Z^r' or 'Zn'");
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      rank += number();
    } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t at = pos;
      const std::int64_t n = number();
      if (n < 2) throw ParseError(std::string(text), at, "cyclic factor needs order >= 2");
      orders.push_back(n);
    } else {
      rank += 1;
    }
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw ParseError(std::string(text), pos, "expected '+'");
    ++pos;
  }
  return presentation_from_cyclic(rank, orders);
}

inline GroupElement parse_element(const GroupPresentation& P, std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& m) { throw ParseError(std::string(text), pos, m); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto list = [&](std::vector<std::int64_t>& out) {
    skip();
    if (pos < text.size() && (text[pos] == ')' || text[pos] == ';')) return;
    for (;;) {
      skip();
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected integer");
      std::int64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos++] - '0');
        if (v > 1'000'000'000'000) fail("integer too large");
      }
      out.push_back(neg ? -v : v);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      return;
    }
  };

  skip();
  if (pos >= text.size() || text[pos] != '(') fail("expected '('");
  ++pos;
  std::vector<std::int64_t> first, second;
  list(first);
  bool split = false;
  if (pos < text.size() && text[pos] == ';') {
    split = true;
    ++pos;
    list(second);
  }
  skip();
  if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
  ++pos;
  skip();
  if (pos != text.size()) fail("unexpected trailing input");

  const auto rank = static_cast<std::size_t>(P.group.rank());
  if (!split) {
    if (rank == 0) std::swap(first, second);
    else if (!P.cyclic_orders.empty()) {
      pos = 0;
      fail("group has free and torsion parts; separate them with ';'");
    }
  }
  if (first.size() != rank) {
    pos = 0;
    fail("free part needs " + std::to_string(rank) + " coordinates");
  }
  if (second.size() != P.cyclic_orders.size()) {
    pos = 0;
    fail("torsion part needs " + std::to_string(P.cyclic_orders.size()) + " residues");
  }
  return P.element(std::move(first), second);
}

}  // namespace knotproj
