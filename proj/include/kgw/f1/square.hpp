#pragma once

// Commutative squares
//
//     U --top--> V
//     |          |
//    left      right
//     v          v
//     W -bottom-> X
//
// with top, bottom inflations and left, right deflations, and their
// pullback/pushout completions.

#include <map>
#include <string>
#include <utility>

#include "kgw/f1/morphism.hpp"

namespace kgw::f1 {

struct Square {
  Morphism top;     // U >-> V
  Morphism left;    // U ->> W
  Morphism right;   // V ->> X
  Morphism bottom;  // W >-> X

  int u() const { return top.src(); }
  int v() const { return top.dst(); }
  int w() const { return left.dst(); }
  int x() const { return right.dst(); }

  bool well_typed() const {
    return top.src() == left.src() && top.dst() == right.src() && left.dst() == bottom.src() &&
           right.dst() == bottom.dst();
  }
  bool commutes() const {
    return well_typed() && compose(right, top) == compose(bottom, left);
  }
  std::string to_string() const {
    return "{top=" + top.to_string() + ", left=" + left.to_string() +
           ", right=" + right.to_string() + ", bottom=" + bottom.to_string() + "}";
  }
  // Image under the duality: the square of adjoints, read with X in the
  // top-left corner.
  Square dual() const {
    return Square{dualize(right), dualize(bottom), dualize(top), dualize(left)};
  }
  friend bool operator==(const Square&, const Square&) = default;
};

// Element-level criterion: the square commutes, has the right shape, and the
// image of U in V is exactly the preimage under V ->> X of the image of W.
inline bool satisfies_element_criterion(const Square& s) {
  if (!s.commutes()) return false;
  if (!is_inflation(s.top) || !is_inflation(s.bottom)) return false;
  if (!is_deflation(s.left) || !is_deflation(s.right)) return false;
  const Subset target = s.bottom.image();
  Subset preimage = 0;
  for (int e = 1; e <= s.v(); ++e) {
    const int y = s.right(e);
    if (y == 0 || (target & (1u << y))) preimage |= 1u << e;
  }
  return preimage == s.top.image();
}

namespace detail {
using MorphismPair = std::pair<Morphism, Morphism>;

inline std::string probe_witness(const char* what, int t, const Morphism& p, const Morphism& q,
                                 int count) {
  return std::string(what) + ": probe T=" + std::to_string(t) + " pair (" + p.to_string() +
         ", " + q.to_string() + ") has " + std::to_string(count) + " mediating maps";
}
}  // namespace detail

// Universal property of the pullback, tested against every probe object T of
// size <= probe_bound. On failure writes a witness if `witness` is non-null.
inline bool is_cartesian(const Square& s, int probe_bound, std::string* witness = nullptr) {
  if (!s.commutes()) {
    if (witness) *witness = "square does not commute";
    return false;
  }
  for (int t = 0; t <= probe_bound; ++t) {
    std::map<detail::MorphismPair, int> tally;
    for_each_morphism(t, s.u(), HomFilter::all, [&](const Morphism& m) {
      ++tally[{compose(s.top, m), compose(s.left, m)}];
    });
    std::multimap<Morphism, Morphism> by_image;  // d∘y -> y
    for_each_morphism(t, s.w(), HomFilter::all,
                      [&](const Morphism& y) { by_image.emplace(compose(s.bottom, y), y); });
    bool ok = true;
    for_each_morphism(t, s.v(), HomFilter::all, [&](const Morphism& x) {
      if (!ok) return;
      auto [lo, hi] = by_image.equal_range(compose(s.right, x));
      for (auto it = lo; it != hi; ++it) {
        auto found = tally.find({x, it->second});
        const int count = found == tally.end() ? 0 : found->second;
        if (count != 1) {
          if (witness) *witness = detail::probe_witness("not cartesian", t, x, it->second, count);
          ok = false;
          return;
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

// Universal property of the pushout, dual to is_cartesian.
inline bool is_cocartesian(const Square& s, int probe_bound, std::string* witness = nullptr) {
  if (!s.commutes()) {
    if (witness) *witness = "square does not commute";
    return false;
  }
  for (int t = 0; t <= probe_bound; ++t) {
    std::map<detail::MorphismPair, int> tally;
    for_each_morphism(s.x(), t, HomFilter::all, [&](const Morphism& m) {
      ++tally[{compose(m, s.right), compose(m, s.bottom)}];
    });
    std::multimap<Morphism, Morphism> by_image;  // l∘b -> l
    for_each_morphism(s.w(), t, HomFilter::all,
                      [&](const Morphism& l) { by_image.emplace(compose(l, s.left), l); });
    bool ok = true;
    for_each_morphism(s.v(), t, HomFilter::all, [&](const Morphism& r) {
      if (!ok) return;
      auto [lo, hi] = by_image.equal_range(compose(r, s.top));
      for (auto it = lo; it != hi; ++it) {
        auto found = tally.find({r, it->second});
        const int count = found == tally.end() ? 0 : found->second;
        if (count != 1) {
          if (witness)
            *witness = detail::probe_witness("not cocartesian", t, r, it->second, count);
          ok = false;
          return;
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

// Default probe bound for universal-property checks. Maps out of (into) a
// pointed set are determined element by element, so size-1 probes already
// see every failure.
inline constexpr int kDefaultProbeBound = 2;

inline bool is_bicartesian(const Square& s, int probe_bound = kDefaultProbeBound) {
  return satisfies_element_criterion(s) && is_cartesian(s, probe_bound) &&
         is_cocartesian(s, probe_bound);
}

// Completes W >-> X <<- V to a bicartesian square. U is the preimage of the
// image of W, kept as a subset of V with ascending labels.
inline Square complete_pullback(const Morphism& w_into_x, const Morphism& v_onto_x) {
  if (!is_inflation(w_into_x)) throw NotAnInflation(w_into_x.to_string());
  if (!is_deflation(v_onto_x)) throw NotADeflation(v_onto_x.to_string());
  if (w_into_x.dst() != v_onto_x.dst())
    throw TypeMismatch("pullback of " + w_into_x.to_string() + " and " + v_onto_x.to_string());
  const Morphism w_back = dualize(w_into_x);  // inverse on the image
  Subset s = 0;
  for (int e = 1; e <= v_onto_x.src(); ++e) {
    const int y = v_onto_x(e);
    if (y == 0 || (w_into_x.image() & (1u << y))) s |= 1u << e;
  }
  Morphism top = subset_inclusion(s, v_onto_x.src());
  Morphism left = compose(w_back, v_onto_x, top);
  return Square{std::move(top), std::move(left), v_onto_x, w_into_x};
}

// Completes W <<- U >-> V to a bicartesian square. X lists the elements of W
// first, then the elements of V outside the image of U, ascending.
inline Square complete_pushout(const Morphism& u_onto_w, const Morphism& u_into_v) {
  if (!is_deflation(u_onto_w)) throw NotADeflation(u_onto_w.to_string());
  if (!is_inflation(u_into_v)) throw NotAnInflation(u_into_v.to_string());
  if (u_onto_w.src() != u_into_v.src())
    throw TypeMismatch("pushout of " + u_onto_w.to_string() + " and " + u_into_v.to_string());
  const int w = u_onto_w.dst();
  const int v = u_into_v.dst();
  const Subset img = u_into_v.image();
  const int x = w + (v - popcount(img));
  check_size(x);
  const Morphism u_back = dualize(u_into_v);
  std::array<std::uint8_t, kMaxSize + 1> right{};
  int next = w;
  for (int e = 1; e <= v; ++e) {
    if (img & (1u << e))
      right[e] = static_cast<std::uint8_t>(u_onto_w(u_back(e)));
    else
      right[e] = static_cast<std::uint8_t>(++next);
  }
  Morphism bottom = inclusion_first(w, x - w);
  return Square{u_into_v, u_onto_w, Morphism::from_table_unchecked(v, x, right), std::move(bottom)};
}

// True if the squares agree up to isomorphisms of the U and X corners:
// a.top = b.top∘iu, a.left = b.left∘iu, b.right = ix∘a.right, b.bottom = ix∘a.bottom.
inline bool squares_isomorphic(const Square& a, const Square& b) {
  if (!a.well_typed() || !b.well_typed()) return false;
  if (a.u() != b.u() || a.v() != b.v() || a.w() != b.w() || a.x() != b.x()) return false;
  const auto corner_u = permutations(a.u());
  const auto corner_x = permutations(a.x());
  for (const auto& iu : corner_u) {
    if (compose(b.top, iu) != a.top || compose(b.left, iu) != a.left) continue;
    for (const auto& ix : corner_x)
      if (compose(ix, a.right) == b.right && compose(ix, a.bottom) == b.bottom) return true;
  }
  return false;
}

}  // namespace kgw::f1
