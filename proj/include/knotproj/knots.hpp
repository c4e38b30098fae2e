#pragma once

// Generator knots (2-stranded torus knots and twist knots), integer
// combinations of them, and their normalized signature step functions.
//
// Sign convention: sigma'(K) = -sigma(K)/2, parametrized by t with
// omega = exp(pi i t). For T(2,2m+1) the function is 0 below 1/(2m+1) and
// equals j on ((2j-1)/(2m+1), (2j+1)/(2m+1)).

#include "knotproj/errors.hpp"
#include "knotproj/exactnum.hpp"

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>

namespace knotproj {

struct Generator {
  enum class Kind { Torus, Twist };

  Kind kind = Kind::Torus;
  std::int64_t param = 1;  // m for T(2,2m+1), n for the twist knot W(n)

  static Generator torus(std::int64_t m) {
    if (m < 1) throw std::domain_error("torus knot T(2,2m+1) needs m >= 1");
    return {Kind::Torus, m};
  }
  static Generator twist(std::int64_t n) {
    if (n < 1) throw std::domain_error("twist knot W(n) needs n >= 1");
    return {Kind::Twist, n};
  }
  /// T(2,q) for odd q >= 3.
  static Generator torus_q(std::int64_t q) {
    if (q < 3 || q % 2 == 0) throw std::domain_error("T(2,q) needs odd q >= 3");
    return torus((q - 1) / 2);
  }

  bool is_torus() const { return kind == Kind::Torus; }
  /// The odd torus parameter 2m+1.
  std::int64_t q() const { return 2 * param + 1; }

  std::string label() const {
    return is_torus() ? "T(2," + std::to_string(q()) + ")" : "W(" + std::to_string(param) + ")";
  }

  auto operator<=>(const Generator&) const = default;
};

/// Formal integer combination of generators. Zero coefficients are never
/// stored; the empty combination is the (slice) unknot.
class KnotCombo {
 public:
  KnotCombo() = default;
  KnotCombo(Generator g, std::int64_t coeff = 1) { add(g, coeff); }  // NOLINT(implicit)

  static KnotCombo torus(std::int64_t m, std::int64_t coeff = 1) {
    return KnotCombo(Generator::torus(m), coeff);
  }

  KnotCombo& add(Generator g, std::int64_t coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(g, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  const std::map<Generator, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::int64_t coefficient(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
  }

  bool torus_only() const {
    for (const auto& [g, c] : terms_)
      if (!g.is_torus()) return false;
    return true;
  }

  /// Genus of the connected-sum Seifert surface: sum |c| m over torus terms.
  std::int64_t seifert_genus() const {
    std::int64_t total = 0;
    for (const auto& [g, c] : terms_) {
      if (!g.is_torus()) throw UnsupportedGenerator("Seifert genus of twist-knot term " + g.label());
      total += std::llabs(c) * g.param;
    }
    return total;
  }

  KnotCombo operator-() const {
    KnotCombo r = *this;
    for (auto& [g, c] : r.terms_) c = -c;
    return r;
  }
  KnotCombo& operator+=(const KnotCombo& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
  }
  friend KnotCombo operator+(KnotCombo a, const KnotCombo& b) { return a += b; }
  friend KnotCombo operator-(KnotCombo a, const KnotCombo& b) { return a += -b; }
  friend KnotCombo operator*(std::int64_t k, const KnotCombo& a) {
    KnotCombo r;
    if (k == 0) return r;
    r.terms_ = a.terms_;
    for (auto& [g, c] : r.terms_) c *= k;
    return r;
  }
  bool operator==(const KnotCombo&) const = default;

  /// Renders in the combination grammar, e.g. "2*T(2,17) - 3*T(2,11)".
  /// Terms appear in generator order; the unknot renders as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      const std::int64_t mag = std::llabs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += g.label();
      first = false;
    }
    return out;
  }

 private:
  std::map<Generator, std::int64_t> terms_;
};

// ---------------------------------------------------------------------------
// Signatures

inline StepFunction torus_signature(std::int64_t m) {
  if (m < 1) throw std::domain_error("torus_signature needs m >= 1");
  std::vector<Rational> bps;
  std::vector<std::int64_t> vals;
  bps.reserve(static_cast<std::size_t>(m));
  vals.reserve(static_cast<std::size_t>(m + 1));
  vals.push_back(0);
  for (std::int64_t j = 1; j <= m; ++j) {
    bps.push_back(make_rational(2 * j - 1, 2 * m + 1));
    vals.push_back(j);
  }
  return StepFunction(std::move(bps), std::move(vals));
}

inline StepFunction combo_signature(const KnotCombo& c) {
  StepFunction total;
  for (const auto& [g, coeff] : c.terms()) {
    if (!g.is_torus())
      throw UnsupportedGenerator("signature function of twist knot " + g.label() + " is not available");
    total = total + coeff * torus_signature(g.param);
  }
  return total;
}

/// Maximum of |sigma'| over (0,1]; a lower bound for the four-genus.
inline std::int64_t sharp_S(const KnotCombo& c) { return combo_signature(c).sup_abs(); }

/// floor(x) off the integers and x - 1 on them, i.e. -floor(-x) - 1.
inline Integer double_floor(const Rational& x) { return -floor(-x) - 1; }

struct JumpValues {
  std::int64_t below_first_jump;  // t = 1/(2k+1) - eps
  std::int64_t at_one;            // t = 1
  std::int64_t above_last_jump;   // t = (2k-1)/(2k+1) + eps

  bool operator==(const JumpValues&) const = default;
};

/// Signature of b*T(2,2n+1) - a*T(2,2k+1) at the three probe points used for
/// the finiteness argument, read off the exact step function.
inline JumpValues corollary_jump_values(std::int64_t k, std::int64_t n, std::int64_t a, std::int64_t b) {
  if (!(0 < k && k < n)) throw std::domain_error("corollary_jump_values needs 0 < k < n");
  if (a <= 0 || b <= 0) throw std::domain_error("corollary_jump_values needs a, b > 0");
  const StepFunction f = combo_signature(KnotCombo::torus(n, b) + KnotCombo::torus(k, -a));
  JumpValues v{};
  v.below_first_jump = f.left_limit(make_rational(1, 2 * k + 1));
  const Rational at_one = f.evaluate(Rational(1));
  v.at_one = static_cast<std::int64_t>(boost::multiprecision::numerator(at_one));
  v.above_last_jump = f.right_limit(make_rational(2 * k - 1, 2 * k + 1));
  if (v.at_one != b * n - a * k) throw std::logic_error("signature at t = 1 disagrees with bn - ak");
  return v;
}

/// Number of jumps of T(2,2n+1) strictly below 1/(2k+1):
/// double_floor((2n+1)/(2(2k+1)) + 1/2).
inline std::int64_t jumps_below(std::int64_t k, std::int64_t n) {
  const Rational x = make_rational(2 * n + 1, 2 * (2 * k + 1)) + make_rational(1, 2);
  return static_cast<std::int64_t>(double_floor(x));
}

/// cos(theta_n) = 1 - 1/(2n), the jump locus of the twist knot W(n).
inline Rational twist_jump_cosine(std::int64_t n) {
  if (n < 1) throw std::domain_error("twist_jump_cosine needs n >= 1");
  return make_rational(2 * n - 1, 2 * n);
}

// ---------------------------------------------------------------------------
// Grammar
//   combo := term (('+'|'-') term)*     (a leading sign is also accepted)
//   term  := [uint '*'] gen
//   gen   := 'T(2,' odd-uint ')' | 'W(' uint ')'

namespace detail {

class ComboParser {
 public:
  explicit ComboParser(std::string_view text) : text_(text) {}

  KnotCombo parse() {
    KnotCombo out;
    skip_ws();
    if (peek() == '0') {
      get();
      skip_ws();
      if (!at_end()) fail("unexpected input after unknot '0'");
      return out;
    }
    std::int64_t sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
    }
    parse_term(out, sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      parse_term(out, c == '-' ? -1 : 1);
    }
    return out;
  }

 private:
  void parse_term(KnotCombo& out, std::int64_t sign) {
    skip_ws();
    std::int64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_uint();
      skip_ws();
      expect('*');
      skip_ws();
    }
    const Generator g = parse_gen();
    out.add(g, sign * coeff);
  }

  Generator parse_gen() {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == 'T') {
      get();
      skip_ws();
      expect('(');
      skip_ws();
      expect('2');
      skip_ws();
      expect(',');
      skip_ws();
      const std::size_t qpos = pos_;
      const std::int64_t q = parse_uint();
      skip_ws();
      expect(')');
      if (q % 2 == 0) fail_at(qpos, "T(2,q) needs odd q");
      if (q < 3) fail_at(qpos, "T(2,q) needs q >= 3");
      return Generator::torus_q(q);
    }
    if (c == 'W') {
      get();
      skip_ws();
      expect('(');
      skip_ws();
      const std::size_t npos = pos_;
      const std::int64_t n = parse_uint();
      skip_ws();
      expect(')');
      if (n < 1) fail_at(npos, "W(n) needs n >= 1");
      return Generator::twist(n);
    }
    fail_at(start, "expected generator 'T(2,q)' or 'W(n)'");
  }

  std::int64_t parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected unsigned integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
    }
    return v;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& msg) const {
    throw ParseError(std::string(text_), p, msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline KnotCombo parse_combo(std::string_view text) { return detail::ComboParser(text).parse(); }

}  // namespace knotproj
