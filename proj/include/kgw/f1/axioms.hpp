#pragma once

// Exhaustive verification of the proto-exact axioms (i)-(v), the exact
// direct sum axioms DS1-DS4, and the direct-sum lemmas over all pointed sets
// up to a size bound.
//
// The inflation/deflation classes are a parameter so that a deliberately
// corrupted structure can be run through the same checks.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kgw/f1/conflation.hpp"
#include "kgw/f1/morphism.hpp"
#include "kgw/f1/square.hpp"
#include "kgw/util/parallel.hpp"
#include "kgw/util/report.hpp"

namespace kgw::f1 {

struct ExactStructure {
  std::string name;
  std::function<bool(const Morphism&)> inflation;
  std::function<bool(const Morphism&)> deflation;

  static ExactStructure standard() {
    return {"standard", [](const Morphism& f) { return is_inflation(f); },
            [](const Morphism& f) { return is_deflation(f); }};
  }
  bool is_standard() const { return name == "standard"; }
};

struct AxiomSuiteOptions {
  int max_size = 4;
  int probe_bound = kDefaultProbeBound;
  unsigned jobs = 1;
  ExactStructure structure = ExactStructure::standard();
};

namespace detail {

// Hom-sets of every pair of sizes up to the bound, split by class.
class HomTable {
 public:
  HomTable(int max_size, const ExactStructure& st) : n_(max_size + 1) {
    all_.resize(n_ * n_);
    inf_.resize(n_ * n_);
    def_.resize(n_ * n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        auto& all = all_[a * n_ + b];
        all = hom(a, b);
        for (const auto& f : all) {
          if (st.inflation(f)) inf_[a * n_ + b].push_back(f);
          if (st.deflation(f)) def_[a * n_ + b].push_back(f);
        }
      }
  }
  const std::vector<Morphism>& all(int a, int b) const { return all_[a * n_ + b]; }
  const std::vector<Morphism>& inf(int a, int b) const { return inf_[a * n_ + b]; }
  const std::vector<Morphism>& def(int a, int b) const { return def_[a * n_ + b]; }
  int bound() const { return n_ - 1; }

 private:
  int n_;
  std::vector<std::vector<Morphism>> all_, inf_, def_;
};

inline bool contains(const std::vector<Morphism>& v, const Morphism& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

inline bool up_bicartesian(const Square& s, int probe, std::string* why) {
  return is_cartesian(s, probe, why) && is_cocartesian(s, probe, why);
}

inline bool in_classes(const Square& s, const ExactStructure& st) {
  return st.inflation(s.top) && st.inflation(s.bottom) && st.deflation(s.left) &&
         st.deflation(s.right);
}

}  // namespace detail

// Lists every commuting square of the shape (inflation, deflation, deflation,
// inflation) whose top is `top`, with corners bounded by the table.
template <class Fn>
void for_each_square_with_top(const detail::HomTable& homs, const ExactStructure& st,
                              const Morphism& top, Fn&& fn) {
  const int u = top.src(), v = top.dst(), n = homs.bound();
  for (int x = 0; x <= n; ++x)
    for (const auto& right : homs.def(v, x)) {
      const Morphism ra = compose(right, top);
      for (int w = 0; w <= n; ++w)
        for (const auto& bottom : homs.inf(w, x)) {
          if (bottom.kernel() == 0) {
            // bottom is injective, so left is forced
            const Subset img = bottom.image();
            if ((ra.image() & ~img) != 0) continue;
            const Morphism left = compose(dualize(bottom), ra);
            if (!st.deflation(left)) continue;
            fn(Square{top, left, right, bottom});
          } else {
            for (const auto& left : homs.def(u, w))
              if (compose(bottom, left) == ra) fn(Square{top, left, right, bottom});
          }
        }
    }
}

inline SuiteReport axiom_suite(const AxiomSuiteOptions& opt) {
  const ExactStructure& st = opt.structure;
  const int n = opt.max_size;
  const int probe = opt.probe_bound;
  const detail::HomTable homs(n, st);
  SuiteReport report{"axioms[" + st.name + ",max_size=" + std::to_string(n) + "]"};

  {  // (i)
    auto& c = report.add("(i) zero maps are inflations/deflations");
    for (int k = 0; k <= n; ++k) {
      ++c.cases;
      if (!st.inflation(Morphism::zero(0, k))) c.fail("0 -> " + std::to_string(k));
      if (!st.deflation(Morphism::zero(k, 0))) c.fail(std::to_string(k) + " -> 0");
    }
  }
  {  // (ii)
    auto& c = report.add("(ii) closed under composition, contains isomorphisms");
    for (int a = 0; a <= n; ++a) {
      for (const auto& iso : permutations(a)) {
        ++c.cases;
        if (!st.inflation(iso) || !st.deflation(iso)) c.fail("iso " + iso.to_string());
      }
      for (int b = 0; b <= n; ++b)
        for (int d = 0; d <= n; ++d) {
          for (const auto& f : homs.inf(a, b))
            for (const auto& g : homs.inf(b, d)) {
              ++c.cases;
              if (!st.inflation(compose(g, f)))
                c.fail("inflations " + g.to_string() + " ∘ " + f.to_string());
            }
          for (const auto& f : homs.def(a, b))
            for (const auto& g : homs.def(b, d)) {
              ++c.cases;
              if (!st.deflation(compose(g, f)))
                c.fail("deflations " + g.to_string() + " ∘ " + f.to_string());
            }
        }
    }
  }

  // (iii): cartesian <=> cocartesian, over all commuting squares.
  std::vector<Morphism> tops;
  for (int u = 0; u <= n; ++u)
    for (int v = 0; v <= n; ++v)
      for (const auto& a : homs.inf(u, v)) tops.push_back(a);
  std::vector<CheckResult> part3(tops.size()), part3e(tops.size());
  std::vector<std::vector<Square>> bicart(tops.size());
  parallel_for(tops.size(), opt.jobs, [&](std::size_t k) {
    for_each_square_with_top(homs, st, tops[k], [&](const Square& s) {
      ++part3[k].cases;
      std::string why;
      const bool cart = is_cartesian(s, probe, &why);
      const bool cocart = is_cocartesian(s, probe, &why);
      if (cart != cocart)
        part3[k].fail(s.to_string() + (cart ? " cartesian" : " cocartesian") + " only: " + why);
      if (cart && cocart) bicart[k].push_back(s);
      if (st.is_standard()) {
        ++part3e[k].cases;
        if (satisfies_element_criterion(s) != (cart && cocart))
          part3e[k].fail(s.to_string() + " element criterion disagrees with universal property");
      }
    });
  });
  {
    auto& c = report.add("(iii) cartesian iff cocartesian");
    for (const auto& p : part3) c.merge(p);
  }
  if (st.is_standard()) {
    auto& c = report.add("(iii) element criterion matches universal property");
    for (const auto& p : part3e) c.merge(p);
  }

  {  // (iv)
    auto& c = report.add("(iv) W >-> X <<- V completes to a bicartesian square");
    for (int x = 0; x <= n; ++x)
      for (int w = 0; w <= n; ++w)
        for (int v = 0; v <= n; ++v)
          for (const auto& d : homs.inf(w, x))
            for (const auto& r : homs.def(v, x)) {
              ++c.cases;
              bool found = false;
              if (is_inflation(d) && is_deflation(r)) {
                const Square s = complete_pullback(d, r);
                found = detail::in_classes(s, st) && detail::up_bicartesian(s, probe, nullptr);
              }
              for (int u = 0; u <= n && !found; ++u)
                for (const auto& a : homs.inf(u, v)) {
                  if (found) break;
                  for (const auto& b : homs.def(u, w)) {
                    const Square s{a, b, r, d};
                    if (s.commutes() && detail::up_bicartesian(s, probe, nullptr)) {
                      found = true;
                      break;
                    }
                  }
                }
              if (!found) c.fail("no bicartesian completion of " + d.to_string() + " , " + r.to_string());
            }
  }
  {  // (v)
    auto& c = report.add("(v) W <<- U >-> V completes to a bicartesian square");
    for (int u = 0; u <= n; ++u)
      for (int w = 0; w <= n; ++w)
        for (int v = 0; v <= n; ++v)
          for (const auto& b : homs.def(u, w))
            for (const auto& a : homs.inf(u, v)) {
              ++c.cases;
              bool found = false;
              if (is_deflation(b) && is_inflation(a) && w + v - a.rank() <= n) {
                const Square s = complete_pushout(b, a);
                found = detail::in_classes(s, st) && detail::up_bicartesian(s, probe, nullptr);
              }
              for (int x = 0; x <= n && !found; ++x)
                for (const auto& r : homs.def(v, x)) {
                  if (found) break;
                  for (const auto& d : homs.inf(w, x)) {
                    const Square s{a, b, r, d};
                    if (s.commutes() && detail::up_bicartesian(s, probe, nullptr)) {
                      found = true;
                      break;
                    }
                  }
                }
              if (!found) c.fail("no bicartesian completion of " + b.to_string() + " , " + a.to_string());
            }
  }
  if (st.is_standard()) {
    auto& c = report.add("(iv)/(v) canonical completions satisfy the element criterion");
    for (int x = 0; x <= n; ++x)
      for (int w = 0; w <= x; ++w)
        for (int v = 0; v <= n; ++v)
          for (const auto& d : homs.inf(w, x))
            for (const auto& r : homs.def(v, x)) {
              ++c.cases;
              const Square s = complete_pullback(d, r);
              if (!satisfies_element_criterion(s)) c.fail("pullback " + s.to_string());
              const Square t = complete_pushout(s.left, s.top);
              if (!satisfies_element_criterion(t) || !squares_isomorphic(s, t))
                c.fail("pushout of the pullback legs " + t.to_string());
            }
  }

  {  // DS1
    auto& c = report.add("(DS1) 0 is the monoidal unit");
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (const auto& f : homs.all(a, b)) {
          ++c.cases;
          const Morphism id0 = Morphism::identity(0);
          if (direct_sum(f, id0) != f || direct_sum(id0, f) != f) c.fail(f.to_string());
        }
  }
  {  // DS2
    auto& c = report.add("(DS2) direct sum is proto-exact");
    ++c.cases;
    if (direct_sum(0, 0) != 0) c.fail("0 (+) 0 != 0");
    for (int u = 0; u <= n; ++u)
      for (int v = 0; u + v <= n; ++v) {
        ++c.cases;
        if (!st.inflation(inclusion_first(u, v)) || !st.inflation(inclusion_second(u, v)))
          c.fail("i_U not an inflation for sizes " + std::to_string(u) + "," + std::to_string(v));
        if (!st.deflation(projection_first(u, v)) || !st.deflation(projection_second(u, v)))
          c.fail("pi_U not a deflation for sizes " + std::to_string(u) + "," + std::to_string(v));
      }
    std::vector<Square> all_bicart;
    for (const auto& b : bicart) all_bicart.insert(all_bicart.end(), b.begin(), b.end());
    for (const auto& s1 : all_bicart)
      for (const auto& s2 : all_bicart) {
        if (s1.v() + s2.v() > n) continue;
        ++c.cases;
        const Square sum{direct_sum(s1.top, s2.top), direct_sum(s1.left, s2.left),
                         direct_sum(s1.right, s2.right), direct_sum(s1.bottom, s2.bottom)};
        std::string why;
        if (!detail::in_classes(sum, st) || !detail::up_bicartesian(sum, probe, &why))
          c.fail("sum of bicartesian squares " + s1.to_string() + " (+) " + s2.to_string() + ": " + why);
      }
    // bifunctor, strict associativity, natural symmetry
    const int m = std::min(n, 2);
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b)
        for (int a2 = 0; a2 <= m; ++a2)
          for (int b2 = 0; b2 <= m; ++b2)
            for (const auto& f : homs.all(a, b))
              for (const auto& g : homs.all(a2, b2)) {
                ++c.cases;
                if (compose(braiding(b, b2), direct_sum(f, g)) != compose(direct_sum(g, f), braiding(a, a2)))
                  c.fail("symmetry not natural at " + f.to_string() + ", " + g.to_string());
                for (const auto& h : homs.all(b, a))
                  for (const auto& k : homs.all(b2, a2))
                    if (compose(direct_sum(h, k), direct_sum(f, g)) != direct_sum(compose(h, f), compose(k, g)))
                      c.fail("not a bifunctor at " + f.to_string() + ", " + g.to_string());
                for (const auto& h : homs.all(a, b))
                  if (direct_sum(direct_sum(f, g), h) != direct_sum(f, direct_sum(g, h)))
                    c.fail("not associative");
              }
  }
  {  // DS3
    auto& c = report.add("(DS3) restriction maps are injective");
    for (int u = 0; u <= n; ++u)
      for (int v = 0; u + v <= n; ++v)
        for (int w = 0; w <= n; ++w) {
          ++c.cases;
          std::set<std::pair<Morphism, Morphism>> seen_out, seen_in;
          const auto iu = inclusion_first(u, v), iv = inclusion_second(u, v);
          const auto pu = projection_first(u, v), pv = projection_second(u, v);
          for (const auto& f : homs.all(u + v, w))
            if (!seen_out.insert({compose(f, iu), compose(f, iv)}).second)
              c.fail("Hom(U(+)V,W) restriction not injective at " + f.to_string());
          for (const auto& f : homs.all(w, u + v))
            if (!seen_in.insert({compose(pu, f), compose(pv, f)}).second)
              c.fail("Hom(W,U(+)V) restriction not injective at " + f.to_string());
        }
  }
  {  // DS4
    auto& c = report.add("(DS4) sections and retractions give unique splittings");
    for (int x = 0; x <= n; ++x)
      for (int u = 0; u <= x; ++u)
        for (int v = 0; v <= n; ++v)
          for (const auto& i : homs.inf(u, x))
            for (const auto& p : homs.def(x, v)) {
              const Square sq{i, Morphism::zero(u, 0), p, Morphism::zero(0, v)};
              if (!sq.commutes() || !detail::up_bicartesian(sq, probe, nullptr)) continue;
              const auto isos = u + v == x ? permutations(x) : std::vector<Morphism>{};
              const auto iu = inclusion_first(u, v), iv = inclusion_second(u, v);
              const auto pu = projection_first(u, v), pv = projection_second(u, v);
              const Conflation conf{i, p};
              for (const auto& s : homs.all(v, x)) {
                if (compose(p, s) != Morphism::identity(v)) continue;
                ++c.cases;
                int count = 0;
                for (const auto& phi : isos)
                  if (compose(phi, iu) == i && compose(phi, iv) == s) ++count;
                if (count != 1)
                  c.fail(conf.to_string() + " section " + s.to_string() + ": " +
                         std::to_string(count) + " isomorphisms");
              }
              for (const auto& r : homs.all(x, u)) {
                if (compose(r, i) != Morphism::identity(u)) continue;
                ++c.cases;
                int count = 0;
                for (const auto& psi : isos)
                  if (compose(r, psi) == pu && compose(p, psi) == pv) ++count;
                if (count != 1)
                  c.fail(conf.to_string() + " retraction " + r.to_string() + ": " +
                         std::to_string(count) + " isomorphisms");
              }
            }
  }
  {  // direct-sum restriction lemma
    auto& c = report.add("direct-sum restriction squares commute; f1(+)f2 iso iff both iso");
    for (int u1 = 0; u1 <= n; ++u1)
      for (int u2 = 0; u1 + u2 <= n; ++u2)
        for (int v1 = 0; v1 <= n; ++v1)
          for (int v2 = 0; v1 + v2 <= n; ++v2)
            for (const auto& f1 : homs.all(u1, v1))
              for (const auto& f2 : homs.all(u2, v2)) {
                ++c.cases;
                const Morphism sum = direct_sum(f1, f2);
                if (compose(sum, inclusion_first(u1, u2)) != compose(inclusion_first(v1, v2), f1) ||
                    compose(projection_first(v1, v2), sum) != compose(f1, projection_first(u1, u2)))
                  c.fail("square fails for " + f1.to_string() + ", " + f2.to_string());
                if (is_iso(sum) != (is_iso(f1) && is_iso(f2)))
                  c.fail("iso criterion fails for " + f1.to_string() + ", " + f2.to_string());
              }
  }
  {  // pullback of direct sums
    auto& c = report.add("U(+)W = U x_V (V(+)W) square is bicartesian");
    for (int u = 0; u <= n; ++u)
      for (int v = u; v <= n; ++v)
        for (int w = 0; v + w <= n; ++w)
          for (const auto& j : homs.inf(u, v)) {
            ++c.cases;
            const Square s{direct_sum(j, Morphism::identity(w)), projection_first(u, w),
                           projection_first(v, w), j};
            std::string why;
            if (!detail::in_classes(s, st) || !detail::up_bicartesian(s, probe, &why) ||
                (st.is_standard() && !satisfies_element_criterion(s)))
              c.fail(s.to_string() + " " + why);
          }
  }
  return report;
}

}  // namespace kgw::f1
