#pragma once

// The Q-construction of pointed sets truncated at a carrier size: objects
// 0..n, morphisms U -> V classes of spans U <<- E >-> V.

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "kgw/category/finite_category.hpp"
#include "kgw/f1/square.hpp"

namespace kgw::cons {

using f1::Morphism;
using f1::Subset;

// Canonical representative: E is image(j) inside V with ascending labels.
struct QSpan {
  int src = 0;
  int dst = 0;
  Subset e = 0;
  Morphism p;  // E ->> src

  Morphism j() const { return f1::subset_inclusion(e, dst); }
  int middle() const { return p.src(); }

  // Canonicalises an arbitrary representative U <<- E >-> V.
  static QSpan make(const Morphism& p, const Morphism& j) {
    if (!f1::is_deflation(p)) throw NotADeflation(p.to_string());
    if (!f1::is_inflation(j)) throw NotAnInflation(j.to_string());
    if (p.src() != j.src()) throw TypeMismatch("span legs " + p.to_string() + " and " + j.to_string());
    const Subset img = j.image();
    const Morphism back = f1::compose(f1::dualize(j), f1::subset_inclusion(img, j.dst()));
    return {p.dst(), j.dst(), img, f1::compose(p, back)};
  }
  static QSpan identity(int n) { return {n, n, f1::full_subset(n), Morphism::identity(n)}; }
  // 0 <<- 0 >-> C
  static QSpan zero_to(int c) { return {0, c, 0, Morphism::zero(0, 0)}; }
  // 0 <<- C = C
  static QSpan full_to(int c) { return {0, c, f1::full_subset(c), Morphism::zero(c, 0)}; }

  // "1<-{2,3}->3 [0,1,0]"
  std::string to_string() const {
    std::string s = std::to_string(src) + "<-{";
    bool first = true;
    for (int x : f1::subset_elements(e)) {
      s += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
    std::string pm = p.to_string();
    return s + "}->" + std::to_string(dst) + " " + pm.substr(0, pm.find(':'));
  }

  friend auto operator<=>(const QSpan&, const QSpan&) = default;
  friend bool operator==(const QSpan&, const QSpan&) = default;
};

// g∘f by pulling back the inflation of f along the deflation of g.
inline QSpan q_compose(const QSpan& g, const QSpan& f) {
  if (f.dst != g.src) throw TypeMismatch("spans " + f.to_string() + " and " + g.to_string() + " are not composable");
  const f1::Square sq = f1::complete_pullback(f.j(), g.p);
  return QSpan::make(f1::compose(f.p, sq.left), f1::compose(g.j(), sq.top));
}

inline QSpan direct_sum(const QSpan& a, const QSpan& b) {
  return QSpan::make(f1::direct_sum(a.p, b.p), f1::direct_sum(a.j(), b.j()));
}

// Hom_Q(u, v) in the order (E as an ascending subset list, then p).
inline std::vector<QSpan> q_hom(int u, int v) {
  std::vector<QSpan> out;
  for (Subset e = 0; e <= f1::full_subset(v); e += 2) {
    const int k = f1::popcount(e);
    if (k < u) continue;
    for (const auto& p : f1::deflations(k, u)) out.push_back({u, v, e, p});
  }
  std::sort(out.begin(), out.end());
  return out;
}

using QCategory = cat::Enumerated<int, QSpan>;

inline QCategory q_category(int max_size) {
  f1::check_size(max_size);
  std::vector<int> objects;
  for (int n = 0; n <= max_size; ++n) objects.push_back(n);
  return cat::build_category<int, QSpan>(
      objects, q_hom, q_compose, QSpan::identity, [](int n) { return std::to_string(n); },
      [](const QSpan& s) { return s.to_string(); });
}

// The groupoid of pointed sets of size <= n and bijections.
using SCategory = cat::Enumerated<int, Morphism>;

inline SCategory s_groupoid(int max_size) {
  std::vector<int> objects;
  for (int n = 0; n <= max_size; ++n) objects.push_back(n);
  return cat::build_category<int, Morphism>(
      objects, [](int a, int b) { return a == b ? f1::permutations(a) : std::vector<Morphism>{}; },
      [](const Morphism& g, const Morphism& f) { return f1::compose(g, f); }, Morphism::identity,
      [](int n) { return std::to_string(n); }, [](const Morphism& m) { return m.to_string(); });
}

}  // namespace kgw::cons
