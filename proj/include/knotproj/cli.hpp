#pragma once

// The knotproj command line, callable in-process: run(args, out, err) returns
// the exit code (0 ok, 2 parse error, 3 precondition failure).

#include "knotproj/errors.hpp"
#include "knotproj/genus.hpp"
#include "knotproj/io.hpp"
#include "knotproj/knots.hpp"
#include "knotproj/metric.hpp"
#include "knotproj/projective.hpp"
#include "knotproj/rips.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace knotproj::cli {

struct Options {
  bool json = false;
  bool csv = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;

  ExecPolicy policy() const { return {threads}; }
};

/// What one subcommand produced: the JSON record plus its text and CSV forms.
struct Output {
  Json record;
  std::string text;
  std::string csv;  // empty when the command has no CSV form
};

namespace detail {

inline std::string interval_text(std::int64_t lo, std::optional<std::int64_t> hi) {
  return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
}

/// "1,3,5", "1..11" and mixtures such as "1..4,9". Ranges advance by `step`,
/// so torus parameters can be written "3..21".
inline std::vector<std::int64_t> parse_int_list(const std::string& text, std::int64_t step = 1) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  auto number = [&] {
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) throw ParseError(text, start, "expected integer");
    return std::stoll(text.substr(start, pos - start));
  };
  for (;;) {
    const std::int64_t a = number();
    if (text.compare(pos, 2, "..") == 0) {
      pos += 2;
      const std::size_t at = pos;
      const std::int64_t b = number();
      if (b < a) throw ParseError(text, at, "empty range");
      for (std::int64_t v = a; v <= b; v += step) out.push_back(v);
    } else {
      out.push_back(a);
    }
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(text, pos, "expected ',' or '..'");
    ++pos;
  }
  return out;
}

/// "x,y" or "(x,y)".
inline LatticePoint parse_point(const std::string& text) {
  std::string body = text;
  std::size_t shift = 0;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError(text, text.size(), "expected ')'");
    body = body.substr(1, body.size() - 2);
    shift = 1;
  }
  try {
    const auto v = parse_int_list(body);
    if (v.size() != 2 || body.find("..") != std::string::npos)
      throw ParseError(text, shift, "expected a lattice point 'x,y'");
    return {v[0], v[1]};
  } catch (const ParseError& e) {
    throw ParseError(text, e.position() + shift, "expected a lattice point 'x,y'");
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

inline std::string signature_svg(const StepFunction& f, const std::string& title) {
  const double W = 640, H = 400, left = 50, right = 20, top = 40, bottom = 40;
  std::int64_t lo = 0, hi = 0;
  for (auto v : f.values()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  lo -= 1;
  hi += 1;
  auto X = [&](double t) { return left + t * (W - left - right); };
  auto Y = [&](double v) { return top + (static_cast<double>(hi) - v) / static_cast<double>(hi - lo) * (H - top - bottom); };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H
    << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">sigma'(t) for "
    << title << "</text>\n";
  for (std::int64_t v = lo; v <= hi; ++v) {
    s << "<line x1=\"" << X(0) << "\" y1=\"" << Y(static_cast<double>(v)) << "\" x2=\"" << X(1) << "\" y2=\"" << Y(static_cast<double>(v))
      << "\" stroke=\"" << (v == 0 ? "#555" : "#ddd") << "\"/>\n";
    s << "<text x=\"" << left - 8 << "\" y=\"" << Y(static_cast<double>(v)) + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << v << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double t = i / 4.0;
    s << "<text x=\"" << X(t) << "\" y=\"" << H - bottom + 16 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
      << t << "</text>\n";
  }
  s << "<line x1=\"" << X(0) << "\" y1=\"" << top << "\" x2=\"" << X(0) << "\" y2=\"" << H - bottom << "\" stroke=\"#555\"/>\n";
  for (std::size_t i = 0; i < f.interval_count(); ++i) {
    const double a = f.interval_lo(i).convert_to<double>(), b = f.interval_hi(i).convert_to<double>();
    const double y = Y(static_cast<double>(f.values()[i]));
    s << "<line x1=\"" << X(a) << "\" y1=\"" << y << "\" x2=\"" << X(b) << "\" y2=\"" << y
      << "\" stroke=\"#1f4e9c\" stroke-width=\"2.5\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

inline std::string schema_text(const SurgerySchema& s) {
  std::ostringstream o;
  for (const auto& r : s.runs)
    o << "    run: top block " << r.top_block << " @" << r.top_offset << " -> bottom block " << r.bottom_block << " @"
      << r.bottom_offset << ", " << r.length << " curves\n";
  return o.str();
}

// --- subcommands -----------------------------------------------------------

inline Output cmd_sig(const std::string& text, const std::string& svg_path) {
  const KnotCombo c = parse_combo(text);
  const StepFunction f = combo_signature(c);
  Output o;
  o.record = {{"inputs", {{"combo", c.to_string()}}}, {"value", f.sup_abs()}, {"certified", true}};
  o.record["signature"] = to_json(f);
  o.record["witnesses"] = {{"t", to_string(f.interval_sample(f.sup_abs_interval()))}};
  std::ostringstream t, csv;
  t << "sigma' of " << c.to_string() << "\n";
  csv << "t_lo,t_hi,value\n";
  for (std::size_t i = 0; i < f.interval_count(); ++i) {
    const bool last = i + 1 == f.interval_count();
    t << "  t in (" << to_string(f.interval_lo(i)) << ", " << to_string(f.interval_hi(i)) << (last ? "]" : ")") << ": "
      << f.values()[i] << "\n";
    csv << to_string(f.interval_lo(i)) << ',' << to_string(f.interval_hi(i)) << ',' << f.values()[i] << "\n";
  }
  t << "S = " << f.sup_abs() << " at t = " << to_string(f.interval_sample(f.sup_abs_interval())) << "\n";
  if (!svg_path.empty()) {
    std::ofstream file(svg_path);
    if (!file) throw std::invalid_argument("cannot write " + svg_path);
    file << signature_svg(f, c.to_string());
    t << "wrote " << svg_path << "\n";
  }
  o.text = t.str();
  o.csv = csv.str();
  return o;
}

inline Output cmd_g4(const std::string& text) {
  const KnotCombo c = parse_combo(text);
  const GenusInterval g = g4_interval(c);
  Output o;
  o.record = {{"inputs", {{"combo", c.to_string()}}}};
  o.record.update(to_json(g));
  if (g.exact()) o.record["value"] = g.lower;
  std::ostringstream t;
  t << "g4(" << c.to_string() << ") in " << interval_text(g.lower, g.upper) << (g.exact() ? " (exact)" : "") << "\n"
    << "  lower: |sigma'| = " << g.lower << " at t = " << to_string(g.lower_witness) << "\n"
    << "  upper: " << to_string(g.upper_kind) << ", " << g.upper_note << "\n";
  if (g.upper_kind == UpperKind::Schema) t << schema_text(g.schema);
  o.text = t.str();
  return o;
}

inline Output cmd_dbar(std::int64_t k, std::int64_t n, const Options& opt) {
  const DbarResult r = dbar_search(k, n, opt.policy());
  Output o;
  Json argmins = Json::array(), cands = Json::array();
  for (auto [b, a] : r.argmins) argmins.push_back({b, a});
  std::ostringstream t, csv;
  csv << "b,a,lower,upper,exact\n";
  for (const auto& c : r.candidates) {
    cands.push_back({{"b", c.b}, {"a", c.a}, {"lower", c.interval.lower}, {"upper", c.interval.upper}, {"exact", c.interval.exact()}});
    csv << c.b << ',' << c.a << ',' << c.interval.lower << ',' << c.interval.upper << ',' << (c.interval.exact() ? "true" : "false")
        << "\n";
  }
  o.record = {{"inputs", {{"k", k}, {"n", n}}},
              {"value", r.value},
              {"argmins", argmins},
              {"certified", r.certified},
              {"witnesses", {{"region_bound", r.v0}, {"jumps_below", r.j1}, {"candidates", cands}}}};
  t << "dbar(T(2," << 2 * k + 1 << "), T(2," << 2 * n + 1 << ")) = " << r.value << (r.certified ? " (certified)" : " (NOT certified)")
    << "\n  argmins (b,a):";
  for (auto [b, a] : r.argmins) t << " (" << b << "," << a << ")";
  t << "\n  " << r.candidates.size() << " candidates with region bound " << r.v0 << "\n";
  o.text = t.str();
  o.csv = csv.str();
  return o;
}

inline Output cmd_delta(const std::string& a, const std::string& b, const Options& opt) {
  const ClassNode x = ClassNode::parse(a), y = ClassNode::parse(b);
  const DistInterval d = delta_certified(x, y, opt.policy());
  Output o;
  o.record = {{"inputs", {{"x", x.label()}, {"y", y.label()}}}};
  o.record.update(to_json(d));
  o.record["witnesses"]["primitivity"] = {{"x", x.nu.describe()}, {"y", y.nu.describe()}};
  std::ostringstream t;
  t << "delta([" << x.label() << "], [" << y.label() << "]) in " << interval_text(d.lower, d.upper) << (d.exact() ? " (exact)" : "")
    << "\n  lower: " << d.lower_certificate << "\n  upper: " << d.upper_certificate << "\n";
  o.text = t.str();
  return o;
}

inline std::vector<ClassNode> parse_universe(const std::string& spec) {
  if (spec == "default") return default_universe();
  std::vector<ClassNode> u;
  if (spec == "none") return u;
  for (const auto& part : split(spec, ';'))
    if (part.find_first_not_of(" \t") != std::string::npos) u.push_back(ClassNode::parse(part));
  return u;
}

inline Output cmd_big_delta(const std::string& a, const std::string& b, const std::string& universe, const Options& opt) {
  const ClassNode x = ClassNode::parse(a), y = ClassNode::parse(b);
  const DistInterval d = big_delta_interval(x, y, parse_universe(universe), opt.policy());
  Output o;
  o.record = {{"inputs", {{"x", x.label()}, {"y", y.label()}, {"universe", universe}}}};
  o.record.update(to_json(d));
  std::ostringstream t;
  t << "Delta([" << x.label() << "], [" << y.label() << "]) in " << interval_text(d.lower, d.upper) << (d.exact() ? " (exact)" : "")
    << "\n  lower: " << d.lower_certificate << "\n  upper: " << d.upper_certificate << "\n  chain:";
  for (std::size_t i = 0; i < d.chain.size(); ++i) t << (i ? " -> " : " ") << d.chain[i].to_string();
  t << "\n";
  o.text = t.str();
  return o;
}

inline Output cmd_ball(std::int64_t q, std::optional<std::int64_t> max_q, const Options& opt) {
  const std::int64_t qmax = max_q.value_or(3 * q);
  const auto ball = ball_radius_one(q, qmax, opt.policy());
  Output o;
  o.record = {{"inputs", {{"N", q}, {"max", qmax}}},
              {"value", ball},
              {"certified", true},
              {"witnesses", "classification and direct delta agree on every q' <= max"}};
  std::ostringstream t;
  for (std::size_t i = 0; i < ball.size(); ++i) t << (i ? " " : "") << ball[i];
  t << "\n";
  o.text = t.str();
  return o;
}

inline Output cmd_rips(const std::string& torus, const std::string& twist, const std::string& file, const Options& opt) {
  RipsComplex rc;
  Json inputs;
  if (!torus.empty()) {
    std::vector<KnotCombo> combos;
    for (auto q : parse_int_list(torus, 2)) combos.emplace_back(Generator::torus_q(q));
    rc = torus_rips(combos, opt.policy());
    inputs = {{"torus", torus}};
  } else if (!twist.empty()) {
    rc = twist_clique(parse_int_list(twist));
    inputs = {{"twist", twist}};
  } else {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read " + file);
    std::vector<KnotCombo> combos;
    for (std::string line; std::getline(in, line);) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      combos.push_back(parse_combo(line));
    }
    rc = torus_rips(combos, opt.policy());
    inputs = {{"combos", file}};
  }
  Output o;
  o.record = {{"inputs", inputs}, {"value", rc.dimension()}, {"certified", rc.uncertified.empty()}};
  o.record["complex"] = to_json(rc);
  std::ostringstream t;
  t << rc.vertices.size() << " vertices, " << rc.edges.size() << " edges, dimension " << rc.dimension() << "\n";
  for (const auto& s : rc.maximal_simplices) {
    t << "  simplex {";
    for (std::size_t i = 0; i < s.size(); ++i) t << (i ? ", " : "") << rc.vertices[s[i]];
    t << "}\n";
  }
  for (auto [u, v] : rc.uncertified) t << "  uncertified: " << rc.vertices[u] << " -- " << rc.vertices[v] << "\n";
  o.text = t.str();
  return o;
}

inline Output cmd_proj(const std::string& group, const std::string& e1, const std::string& e2) {
  const GroupPresentation P = parse_group(group);
  const FgGroup& G = P.group;
  const GroupElement x = parse_element(P, e1);
  const ProjClass cx = canonicalize(G, x);
  Output o;
  o.record = {{"inputs", {{"group", G.to_string()}, {"x", e1}}}, {"value", cx.to_string()}, {"certified", true}};
  o.record["witnesses"] = {{"x", to_json(cx)}};
  std::ostringstream t;
  t << "group " << G.to_string() << "\n  [x] = " << cx.to_string() << "\n";
  if (G.rank() == 0) {
    o.record["class_count"] = class_count(G);
    t << "  |P(G)| = " << class_count(G) << "\n";
  }
  if (!e2.empty()) {
    const GroupElement y = parse_element(P, e2);
    const ProjClass cy = canonicalize(G, y);
    o.record["inputs"]["y"] = e2;
    o.record["witnesses"]["y"] = to_json(cy);
    const bool eq = equivalent(G, x, y);
    const bool rel = related_one_step(G, x, y);
    o.record["value"] = eq;
    o.record["related_one_step"] = rel;
    t << "  [y] = " << cy.to_string() << "\n  equivalent: " << (eq ? "yes" : "no") << "\n  both multiples of one element: "
      << (rel ? "yes" : "no") << "\n";
    if (auto w = common_multiple_witness(G, x, y)) {
      o.record["witnesses"]["common_multiple"] = {w->first, w->second};
      t << "  " << w->first << "*x = " << w->second << "*y\n";
    }
  }
  o.text = t.str();
  return o;
}

inline Output cmd_zz(const std::string& mode, const std::string& p, const std::string& q, std::int64_t bound) {
  const LatticePoint x = parse_point(p), y = parse_point(q);
  Output o;
  std::ostringstream t;
  auto pt = [](LatticePoint v) { return "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")"; };
  if (mode == "delta") {
    const std::int64_t d = zz_delta(x, y);
    o.record = {{"inputs", {{"x", pt(x)}, {"y", pt(y)}}}, {"value", d}, {"certified", true}};
    t << "delta(" << pt(x) << ", " << pt(y) << ") = " << d << "\n";
  } else if (mode == "chain") {
    const ZzChain c = zz_big_delta(x, y, bound);
    const std::int64_t direct = zz_delta(x, y);
    const std::int64_t lower = direct == 0 ? 0 : direct == 1 ? 1 : 2;
    Json path = Json::array();
    for (auto v : c.path) path.push_back({v.first, v.second});
    o.record = {{"inputs", {{"x", pt(x)}, {"y", pt(y)}, {"bound", bound}}},
                {"lower", lower},
                {"upper", c.length ? Json(*c.length) : Json(nullptr)},
                {"certified", c.length && *c.length == lower},
                {"witnesses", {{"chain", path}}}};
    if (c.length) o.record["value"] = *c.length;
    t << "Delta(" << pt(x) << ", " << pt(y) << ") in " << interval_text(lower, c.length) << "\n  chain:";
    for (std::size_t i = 0; i < c.path.size(); ++i) t << (i ? " -> " : " ") << pt(c.path[i]);
    t << "\n";
  } else {
    throw ParseError(mode, 0, "expected 'delta' or 'chain'");
  }
  o.text = t.str();
  return o;
}

/// Randomized spot checks of the core invariants, reproducible from the seed.
inline Output cmd_props(std::int64_t count, const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  auto combo = [&](std::int64_t max_m) {
    KnotCombo c;
    for (std::int64_t i = uni(1, 3); i > 0; --i) c.add(Generator::torus(uni(1, max_m)), uni(-4, 4));
    return c;
  };
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> tally;  // checks, failures
  auto check = [&](const std::string& name, bool ok) {
    auto& t = tally[name];
    ++t.first;
    if (!ok) ++t.second;
  };
  for (std::int64_t i = 0; i < count; ++i) {
    const KnotCombo a = combo(25), b = combo(25);
    const StepFunction fa = combo_signature(a), fb = combo_signature(b);
    check("signature additivity", combo_signature(a + b) == fa + fb);
    check("S subadditivity", (fa + fb).sup_abs() <= fa.sup_abs() + fb.sup_abs());
    const GenusInterval g = g4_interval(combo(12));
    check("g4 interval ordering", g.lower <= g.upper);
    const ClassNode x = ClassNode::make(KnotCombo::torus(uni(1, 12))), y = ClassNode::make(KnotCombo::torus(uni(1, 12)));
    const DistInterval dxy = delta_certified(x, y), dyx = delta_certified(y, x);
    check("delta symmetry", dxy.lower == dyx.lower && dxy.upper == dyx.upper);
    if (dxy.exact() && *dxy.upper == 1) {
      const DistInterval D = big_delta_interval(x, y, {});
      check("Delta = 1 iff delta = 1", D.exact() && *D.upper == 1);
    } else if (dxy.lower >= 2) {
      check("Delta = 1 iff delta = 1", big_delta_interval(x, y, {}).lower >= 2);
    }
  }
  Output o;
  Json checks = Json::object();
  std::ostringstream t;
  bool all_ok = true;
  for (const auto& [name, ct] : tally) {
    checks[name] = {{"checks", ct.first}, {"failures", ct.second}};
    t << name << ": " << ct.first << " checks, " << ct.second << " failures\n";
    all_ok = all_ok && ct.second == 0;
  }
  o.record = {{"inputs", {{"count", count}, {"seed", opt.seed}}}, {"value", all_ok}, {"certified", all_ok}, {"witnesses", checks}};
  o.text = t.str();
  return o;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact signature, four-genus and projective-distance computations for torus-knot combinations", "knotproj"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit one JSON record");
  app.add_flag("--csv", opt.csv, "Emit CSV (sig, dbar)");
  app.add_option("--seed", opt.seed, "Seed for randomized property demos");
  app.add_option("--parallel", opt.threads, "Worker threads for candidate evaluation")->check(CLI::Range(1u, 1024u));

  std::function<Output()> action;
  std::string s1, s2, s3, s4;
  std::int64_t i1 = 0, i2 = 0;
  std::optional<std::int64_t> o1;

  auto* sig = app.add_subcommand("sig", "Signature step function of a combination");
  sig->add_option("combo", s1, "e.g. \"2*T(2,17) - 3*T(2,11)\"")->required();
  sig->add_option("--svg", s2, "Write an SVG plot");
  sig->callback([&] { action = [&] { return detail::cmd_sig(s1, s2); }; });

  auto* g4 = app.add_subcommand("g4", "Certified four-genus interval");
  g4->add_option("combo", s1)->required();
  g4->callback([&] { action = [&] { return detail::cmd_g4(s1); }; });

  auto* dbar = app.add_subcommand("dbar", "min over (b,a) of g4(b T(2,2n+1) - a T(2,2k+1))");
  dbar->add_option("k", i1)->required();
  dbar->add_option("n", i2)->required();
  dbar->callback([&] { action = [&] { return detail::cmd_dbar(i1, i2, opt); }; });

  auto* delta = app.add_subcommand("delta", "Projective distance delta between two classes");
  delta->add_option("x", s1)->required();
  delta->add_option("y", s2)->required();
  delta->callback([&] { action = [&] { return detail::cmd_delta(s1, s2, opt); }; });

  auto* big = app.add_subcommand("big-delta", "Chain metric Delta between two classes");
  big->add_option("x", s1)->required();
  big->add_option("y", s2)->required();
  s3 = "default";
  big->add_option("--universe", s3, "'default', 'none', or ';'-separated combinations");
  big->callback([&] { action = [&] { return detail::cmd_big_delta(s1, s2, s3, opt); }; });

  auto* ball = app.add_subcommand("ball", "Torus classes at delta = 1 from T(2,N)");
  ball->add_option("N", i1)->required();
  ball->add_option("--max", o1, "Largest parameter considered (default 3N)");
  ball->callback([&] { action = [&] { return detail::cmd_ball(i1, o1, opt); }; });

  auto* rips = app.add_subcommand("rips", "Rips complex at scale one");
  auto* g_torus = rips->add_option("--torus", s1, "Torus parameters, e.g. 3,5,7 or 3..21");
  auto* g_twist = rips->add_option("--twist", s2, "Twist parameters, e.g. 1..11");
  auto* g_file = rips->add_option("--combos", s3, "File with one combination per line");
  g_torus->excludes(g_twist)->excludes(g_file);
  g_twist->excludes(g_file);
  rips->callback([&] {
    if (s1.empty() && s2.empty() && (s3.empty() || s3 == "default"))
      throw CLI::RequiredError("one of --torus, --twist, --combos");
    if (!g_file->count()) s3.clear();
    action = [&] { return detail::cmd_rips(s1, s2, s3, opt); };
  });

  auto* proj = app.add_subcommand("proj", "Projective class of a group element");
  proj->add_option("group", s1, "e.g. \"Z^2 + Z2 + Z4 + Z3\"")->required();
  proj->add_option("x", s2, "e.g. \"(3,-1;1,2,0)\"")->required();
  proj->add_option("y", s4);
  proj->callback([&] { action = [&] { return detail::cmd_proj(s1, s2, s4); }; });

  auto* zz = app.add_subcommand("zz", "Max-norm projective metric on Z+Z");
  zz->add_option("mode", s1, "delta | chain")->required()->check(CLI::IsMember({"delta", "chain"}));
  zz->add_option("x", s2)->required();
  zz->add_option("y", s4)->required();
  i2 = 20;
  zz->add_option("--bound", i2, "Coefficient bound for chains");
  zz->callback([&] { action = [&] { return detail::cmd_zz(s1, s2, s4, i2); }; });

  auto* props = app.add_subcommand("props", "Randomized invariant checks (seeded)");
  i1 = 100;
  props->add_option("--count", i1, "Samples per invariant");
  props->callback([&] { action = [&] { return detail::cmd_props(i1, opt); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Output o = action();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.json) {
      Json record = {{"command", app.get_subcommands().front()->get_name()}, {"argv", args}};
      record.update(o.record);
      record["timing"] = {{"ms", ms}, {"threads", opt.threads}};
      out << record.dump(2) << "\n";
    } else if (opt.csv) {
      if (o.csv.empty()) throw std::invalid_argument("--csv is available for sig and dbar only");
      out << o.csv;
    } else {
      out << o.text;
    }
    return 0;
  } catch (const ParseError& e) {
    err << "parse error\n" << e.annotated() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace knotproj::cli
