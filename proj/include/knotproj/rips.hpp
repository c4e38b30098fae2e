#pragma once

// Vietoris-Rips complexes at scale one: vertices are classes, edges join
// pairs at distance exactly one, and simplices are cliques. Only maximal
// cliques are stored.

#include "knotproj/knots.hpp"
#include "knotproj/metric.hpp"
#include "knotproj/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotproj {

struct RipsEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::string certificate;
};

struct RipsComplex {
  std::vector<std::string> vertices;
  std::vector<RipsEdge> edges;
  std::vector<std::vector<std::size_t>> maximal_simplices;  // sorted vertex indices, sorted list
  std::vector<std::pair<std::size_t, std::size_t>> uncertified;

  /// Largest simplex dimension; -1 for the empty complex.
  std::int64_t dimension() const {
    std::int64_t d = -1;
    for (const auto& s : maximal_simplices) d = std::max(d, static_cast<std::int64_t>(s.size()) - 1);
    return d;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return std::any_of(edges.begin(), edges.end(), [&](const RipsEdge& e) { return e.u == u && e.v == v; });
  }
};

/// Oracle answer for one pair, with a human-readable certificate.
struct PairVerdict {
  Verdict verdict = Verdict::Uncertified;
  std::string certificate;
};

using DistanceOneOracle = std::function<PairVerdict(std::size_t, std::size_t)>;

namespace detail {

/// Bron-Kerbosch with pivoting over adjacency bitsets held as sorted sets.
inline void bron_kerbosch(std::vector<std::size_t>& R, std::set<std::size_t> P, std::set<std::size_t> X,
                          const std::vector<std::set<std::size_t>>& adj, std::vector<std::vector<std::size_t>>& out) {
  if (P.empty() && X.empty()) {
    std::vector<std::size_t> clique = R;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  std::size_t pivot = P.empty() ? *X.begin() : *P.begin();
  std::size_t best = 0;
  for (const auto* side : {&P, &X})
    for (auto u : *side) {
      std::size_t c = 0;
      for (auto v : P) c += adj[u].count(v);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
  std::vector<std::size_t> todo;
  for (auto v : P)
    if (!adj[pivot].count(v)) todo.push_back(v);
  for (auto v : todo) {
    std::set<std::size_t> P2, X2;
    for (auto w : P)
      if (adj[v].count(w)) P2.insert(w);
    for (auto w : X)
      if (adj[v].count(w)) X2.insert(w);
    R.push_back(v);
    bron_kerbosch(R, std::move(P2), std::move(X2), adj, out);
    R.pop_back();
    P.erase(v);
    X.insert(v);
  }
}

}  // namespace detail

/// Builds the complex from a distance-one oracle. Uncertified pairs get no
/// edge and are listed in `uncertified`.
inline RipsComplex build_rips(std::vector<std::string> labels, const DistanceOneOracle& oracle, const ExecPolicy& policy = {}) {
  RipsComplex rc;
  rc.vertices = std::move(labels);
  const std::size_t n = rc.vertices.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<PairVerdict> verdicts(pairs.size());
  parallel_for(pairs.size(), policy, [&](std::size_t p) { verdicts[p] = oracle(pairs[p].first, pairs[p].second); });

  std::vector<std::set<std::size_t>> adj(n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    if (verdicts[p].verdict == Verdict::One) {
      rc.edges.push_back({i, j, verdicts[p].certificate});
      adj[i].insert(j);
      adj[j].insert(i);
    } else if (verdicts[p].verdict == Verdict::Uncertified) {
      rc.uncertified.emplace_back(i, j);
    }
  }

  std::set<std::size_t> P;
  for (std::size_t i = 0; i < n; ++i) P.insert(i);
  std::vector<std::size_t> R;
  if (n > 0) detail::bron_kerbosch(R, std::move(P), {}, adj, rc.maximal_simplices);
  std::sort(rc.maximal_simplices.begin(), rc.maximal_simplices.end());
  return rc;
}

/// Rips complex on classes of torus-span combinations, deciding each edge by
/// the certified delta = 1 test.
inline RipsComplex torus_rips(const std::vector<KnotCombo>& combos, const ExecPolicy& policy = {}) {
  std::vector<ClassNode> nodes;
  std::vector<std::string> labels;
  for (const auto& c : combos) {
    nodes.push_back(ClassNode::make(c));
    labels.push_back(c.to_string());
  }
  return build_rips(std::move(labels), [&](std::size_t i, std::size_t j) {
    PairVerdict v;
    v.verdict = delta_is_one(nodes[i], nodes[j], &v.certificate);
    if (v.verdict == Verdict::One) v.certificate = "signature+schema: " + v.certificate;
    return v;
  }, policy);
}

/// Complete complex on twist knots W(n). Distance <= 1 is the geometric
/// crossing-change argument (an axiom here, not recomputed); distinct jump
/// cosines 1 - 1/(2n) make the classes distinct, so distance >= 1.
inline RipsComplex twist_clique(const std::vector<std::int64_t>& ns) {
  std::set<std::int64_t> seen;
  std::vector<std::string> labels;
  for (auto n : ns) {
    if (n < 1) throw std::domain_error("twist knot W(n) needs n >= 1");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate twist parameter " + std::to_string(n));
    labels.push_back(Generator::twist(n).label());
  }
  return build_rips(std::move(labels), [&](std::size_t i, std::size_t j) {
    const Rational ci = twist_jump_cosine(ns[i]), cj = twist_jump_cosine(ns[j]);
    if (ci == cj) return PairVerdict{Verdict::Uncertified, "equal jump loci"};
    return PairVerdict{Verdict::One, "axiom: crossing-change disk bound (upper 1); jump cosines " + to_string(ci) + " != " +
                                         to_string(cj) + " (lower 1)"};
  });
}

}  // namespace knotproj
