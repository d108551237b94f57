#pragma once

// Truncated S^-1 S and its hermitian variant S^-1 S_H. Objects are pairs
// inside a window; a morphism (A, B) -> (A', B') is the class of
// (V; alpha : V (+) A -> A', beta : V (+) B -> B') modulo Aut(V).

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "kgw/category/homotopy.hpp"
#include "kgw/hermitian/decomposition.hpp"
#include "kgw/util/report.hpp"

namespace kgw::cons {

using f1::Morphism;
using herm::SymmetricForm;

namespace detail {

// sigma (+) 1 on V (+) rest with sigma ordering alpha's V-block ascending.
inline Morphism sorting_block(const Morphism& alpha, int v) {
  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return alpha(x) < alpha(y); });
  std::array<std::uint8_t, f1::kMaxSize + 1> t{};
  for (int k = 0; k < v; ++k) t[k + 1] = static_cast<std::uint8_t>(order[k]);
  for (int x = v + 1; x <= alpha.src(); ++x) t[x] = static_cast<std::uint8_t>(x);
  return Morphism::from_table_unchecked(alpha.src(), alpha.src(), t);
}

inline bool block_sorted(const Morphism& alpha, int v) {
  for (int k = 1; k < v; ++k)
    if (alpha(k) > alpha(k + 1)) return false;
  return true;
}

// Bijections V (+) A -> A' whose V-block is ascending.
inline std::vector<Morphism> sorted_bijections(int n, int v) {
  std::vector<Morphism> out;
  for (const auto& a : f1::permutations(n))
    if (block_sorted(a, v)) out.push_back(a);
  return out;
}

}  // namespace detail

struct SPair {
  int a = 0;
  int b = 0;
  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
  friend auto operator<=>(const SPair&, const SPair&) = default;
  friend bool operator==(const SPair&, const SPair&) = default;
};

struct SMorphism {
  SPair src;
  SPair dst;
  Morphism alpha;  // V (+) A -> A'
  Morphism beta;   // V (+) B -> B'

  int v() const { return dst.a - src.a; }

  static SMorphism make(const SPair& s, const SPair& t, const Morphism& alpha, const Morphism& beta) {
    const int v = t.a - s.a;
    if (v < 0 || t.b - s.b != v || alpha.src() != t.a || beta.src() != t.b || !f1::is_iso(alpha) ||
        !f1::is_iso(beta))
      throw TypeMismatch("not a localized morphism " + s.to_string() + " -> " + t.to_string());
    const Morphism sigma = detail::sorting_block(alpha, v);
    std::array<std::uint8_t, f1::kMaxSize + 1> bt{};
    for (int x = 1; x <= t.b; ++x) bt[x] = static_cast<std::uint8_t>(x <= v ? sigma(x) : x);
    const Morphism sigma_b = Morphism::from_table_unchecked(t.b, t.b, bt);
    return {s, t, f1::compose(alpha, sigma), f1::compose(beta, sigma_b)};
  }
  static SMorphism identity(const SPair& p) {
    return {p, p, Morphism::identity(p.a), Morphism::identity(p.b)};
  }

  std::string to_string() const {
    return src.to_string() + "->" + dst.to_string() + " " + alpha.to_string() + " " + beta.to_string();
  }
  friend auto operator<=>(const SMorphism&, const SMorphism&) = default;
  friend bool operator==(const SMorphism&, const SMorphism&) = default;
};

// (W; gamma, delta) o (V; alpha, beta) = (W (+) V; gamma (1 (+) alpha), delta (1 (+) beta))
inline SMorphism s_compose(const SMorphism& g, const SMorphism& f) {
  if (f.dst != g.src) throw TypeMismatch("localized morphisms are not composable");
  const Morphism w = Morphism::identity(g.v());
  return SMorphism::make(f.src, g.dst, f1::compose(g.alpha, f1::direct_sum(w, f.alpha)),
                         f1::compose(g.beta, f1::direct_sum(w, f.beta)));
}

inline std::vector<SMorphism> s_hom(const SPair& s, const SPair& t) {
  std::vector<SMorphism> out;
  const int v = t.a - s.a;
  if (v < 0 || t.b - s.b != v) return out;
  const auto betas = f1::permutations(t.b);
  for (const auto& alpha : detail::sorted_bijections(t.a, v))
    for (const auto& beta : betas) out.push_back({s, t, alpha, beta});
  return out;
}

using SInvCategory = cat::Enumerated<SPair, SMorphism>;

// Associativity is swept in full only up to full_check_window; above it the
// build checks closure and units.
inline SInvCategory s_inverse_s(int window, int full_check_window = 3) {
  f1::check_size(window);
  std::vector<SPair> objects;
  for (int a = 0; a <= window; ++a)
    for (int b = 0; b <= window; ++b) objects.push_back({a, b});
  return cat::build_category<SPair, SMorphism>(
      objects, s_hom, s_compose, SMorphism::identity, [](const SPair& p) { return p.to_string(); },
      [](const SMorphism& m) { return m.to_string(); },
      window <= full_check_window ? cat::Validation::full : cat::Validation::structural);
}

// Hermitian variant: objects (A, N) with N hyperbolic, morphisms
// (V; alpha : V (+) A -> A', delta : H(V) (+) N -> N' an isometry).
struct SHPair {
  int a = 0;
  SymmetricForm n;
  std::string to_string() const { return "(" + std::to_string(a) + "," + n.to_string() + ")"; }
  friend auto operator<=>(const SHPair&, const SHPair&) = default;
  friend bool operator==(const SHPair&, const SHPair&) = default;
};

struct SHMorphism {
  SHPair src;
  SHPair dst;
  Morphism alpha;
  Morphism delta;

  int v() const { return dst.a - src.a; }

  static SHMorphism make(const SHPair& s, const SHPair& t, const Morphism& alpha, const Morphism& delta) {
    const int v = t.a - s.a;
    const SymmetricForm domain = herm::direct_sum(herm::hyperbolic(std::max(v, 0)), s.n);
    if (v < 0 || alpha.src() != t.a || !f1::is_iso(alpha) || !herm::is_isometry(domain, t.n, delta))
      throw TypeMismatch("not a localized hermitian morphism " + s.to_string() + " -> " + t.to_string());
    const Morphism sigma = detail::sorting_block(alpha, v);
    std::array<std::uint8_t, f1::kMaxSize + 1> dt{};
    for (int x = 1; x <= domain.size(); ++x)
      dt[x] = static_cast<std::uint8_t>(x <= v ? sigma(x) : x <= 2 * v ? v + sigma(x - v) : x);
    const Morphism h_sigma = Morphism::from_table_unchecked(domain.size(), domain.size(), dt);
    return {s, t, f1::compose(alpha, sigma), f1::compose(delta, h_sigma)};
  }
  static SHMorphism identity(const SHPair& p) {
    return {p, p, Morphism::identity(p.a), Morphism::identity(p.n.size())};
  }

  std::string to_string() const {
    return src.to_string() + "->" + dst.to_string() + " " + alpha.to_string() + " " + delta.to_string();
  }
  friend auto operator<=>(const SHMorphism&, const SHMorphism&) = default;
  friend bool operator==(const SHMorphism&, const SHMorphism&) = default;
};

// epsilon o (1_H(W) (+) delta) o (shuffle^-1 (+) 1_N)
inline SHMorphism sh_compose(const SHMorphism& g, const SHMorphism& f) {
  if (f.dst != g.src) throw TypeMismatch("localized hermitian morphisms are not composable");
  const int w = g.v(), v = f.v();
  const Morphism unshuffle =
      f1::direct_sum(f1::inverse(herm::hyperbolic_shuffle(w, v).map), Morphism::identity(f.src.n.size()));
  const Morphism delta =
      f1::compose(g.delta, f1::direct_sum(Morphism::identity(2 * w), f.delta), unshuffle);
  return SHMorphism::make(f.src, g.dst, f1::compose(g.alpha, f1::direct_sum(Morphism::identity(w), f.alpha)),
                          delta);
}

inline std::vector<SHMorphism> sh_hom(const SHPair& s, const SHPair& t) {
  std::vector<SHMorphism> out;
  const int v = t.a - s.a;
  if (v < 0 || t.n.size() != 2 * v + s.n.size()) return out;
  const SymmetricForm domain = herm::direct_sum(herm::hyperbolic(v), s.n);
  const auto phi = herm::find_isometry(domain, t.n);
  if (!phi) return out;
  std::vector<Morphism> deltas;
  for (const auto& g : herm::isometry_group(domain)) deltas.push_back(f1::compose(*phi, g));
  std::sort(deltas.begin(), deltas.end());
  for (const auto& alpha : detail::sorted_bijections(t.a, v))
    for (const auto& d : deltas) out.push_back({s, t, alpha, d});
  return out;
}

using SHInvCategory = cat::Enumerated<SHPair, SHMorphism>;

inline SHInvCategory s_inverse_s_hyperbolic(int window, int full_check_window = 3) {
  f1::check_size(window);
  std::vector<SHPair> objects;
  for (int a = 0; a <= window; ++a)
    for (int n = 0; n <= window; n += 2)
      for (const auto& s : herm::enumerate_forms(n))
        if (s.fixed_points() == 0) objects.push_back({a, s});
  return cat::build_category<SHPair, SHMorphism>(
      objects, sh_hom, sh_compose, SHMorphism::identity, [](const SHPair& p) { return p.to_string(); },
      [](const SHMorphism& m) { return m.to_string(); },
      window <= full_check_window ? cat::Validation::full : cat::Validation::structural);
}

// pi_0 with each component tagged by a numeric invariant of its objects.
struct TaggedComponents {
  std::size_t count = 0;
  std::vector<int> tags;  // per component, ascending component order
  bool tags_constant = true;
  bool tags_distinct = true;
};

template <class Enum, class TagFn>
TaggedComponents tagged_components(const Enum& e, TagFn&& tag) {
  const cat::Components c = cat::pi0(e.cat);
  TaggedComponents out;
  out.count = c.size();
  std::set<int> seen;
  for (const auto& members : c.members) {
    const int t = tag(e.objects[members.front()]);
    for (cat::Id a : members) out.tags_constant &= tag(e.objects[a]) == t;
    out.tags_distinct &= seen.insert(t).second;
    out.tags.push_back(t);
  }
  return out;
}

inline TaggedComponents s_inverse_s_components(const SInvCategory& c) {
  return tagged_components(c, [](const SPair& p) { return p.b - p.a; });
}

inline TaggedComponents s_inverse_s_hyperbolic_components(const SHInvCategory& c) {
  return tagged_components(c, [](const SHPair& p) { return p.n.size() / 2 - p.a; });
}

}  // namespace kgw::cons
