#pragma once

// Finite pointed sets and base-point-preserving partial injections.
//
// Objects are skeletal: the pointed set {0, 1, ..., n} with base point 0 is
// identified with its size n. A morphism f: n -> m is stored as the table
// f(0..n), with f(0) = 0 and f injective away from the fibre over 0.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "kgw/util/error.hpp"

namespace kgw::f1 {

// Largest pointed set the fixed-capacity representation can hold.
inline constexpr int kMaxSize = 15;

// Subset of {1..n} as a bit mask; bit k stands for element k.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return __builtin_popcount(s); }
inline Subset full_subset(int n) { return n == 0 ? 0u : (((1u << n) - 1u) << 1); }

inline std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int k = 1; k <= kMaxSize; ++k)
    if (s & (1u << k)) out.push_back(k);
  return out;
}

inline void check_size(int n) {
  if (n < 0 || n > kMaxSize)
    throw SizeLimit("pointed set size " + std::to_string(n) + " outside [0," +
                    std::to_string(kMaxSize) + "]");
}

class Morphism {
 public:
  Morphism() = default;  // the unique map 0 -> 0

  Morphism(int src, int dst, std::span<const int> values) : src_(src), dst_(dst) {
    check_size(src);
    check_size(dst);
    if (static_cast<int>(values.size()) != src + 1)
      throw InvalidMorphism("table of length " + std::to_string(values.size()) +
                            " for source size " + std::to_string(src));
    if (values[0] != 0) throw InvalidMorphism("base point must map to base point");
    Subset hit = 0;
    for (int i = 1; i <= src; ++i) {
      const int v = values[i];
      if (v < 0 || v > dst)
        throw InvalidMorphism("value " + std::to_string(v) + " outside target 0.." +
                              std::to_string(dst));
      if (v != 0) {
        if (hit & (1u << v))
          throw InvalidMorphism("not injective outside the fibre over 0 (value " +
                                std::to_string(v) + ")");
        hit |= 1u << v;
      }
      map_[i] = static_cast<std::uint8_t>(v);
    }
  }
  Morphism(int src, int dst, std::initializer_list<int> values)
      : Morphism(src, dst, std::span<const int>(values.begin(), values.size())) {}
  Morphism(int src, int dst, const std::vector<int>& values)
      : Morphism(src, dst, std::span<const int>(values)) {}

  static Morphism identity(int n) {
    check_size(n);
    Morphism f;
    f.src_ = f.dst_ = static_cast<std::uint8_t>(n);
    for (int i = 1; i <= std::min(n, kMaxSize); ++i) f.map_[i] = static_cast<std::uint8_t>(i);
    return f;
  }
  static Morphism zero(int src, int dst) {
    check_size(src);
    check_size(dst);
    Morphism f;
    f.src_ = static_cast<std::uint8_t>(src);
    f.dst_ = static_cast<std::uint8_t>(dst);
    return f;
  }
  // Trusted constructor for tables produced by the library itself.
  static Morphism from_table_unchecked(int src, int dst, const std::array<std::uint8_t, kMaxSize + 1>& t) {
    Morphism f;
    f.src_ = static_cast<std::uint8_t>(src);
    f.dst_ = static_cast<std::uint8_t>(dst);
    f.map_ = t;
    for (int i = src + 1; i <= kMaxSize; ++i) f.map_[i] = 0;
    f.map_[0] = 0;
    return f;
  }

  int src() const { return src_; }
  int dst() const { return dst_; }
  int operator()(int x) const { return map_[x]; }
  const std::array<std::uint8_t, kMaxSize + 1>& table() const { return map_; }

  std::vector<int> values() const {
    std::vector<int> v(src_ + 1);
    for (int i = 0; i <= src_; ++i) v[i] = map_[i];
    return v;
  }

  // Nonzero elements of the target hit by f.
  Subset image() const {
    Subset s = 0;
    for (int i = 1; i <= src_; ++i)
      if (map_[i]) s |= 1u << map_[i];
    return s;
  }
  // Nonzero elements of the source sent to the base point.
  Subset kernel() const {
    Subset s = 0;
    for (int i = 1; i <= src_; ++i)
      if (!map_[i]) s |= 1u << i;
    return s;
  }
  int rank() const { return popcount(image()); }
  bool is_zero() const { return image() == 0; }

  // "[0,2,0]:2->2"
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i <= src_; ++i) os << (i ? "," : "") << int(map_[i]);
    os << "]:" << int(src_) << "->" << int(dst_);
    return os.str();
  }

  friend auto operator<=>(const Morphism&, const Morphism&) = default;
  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::uint8_t src_ = 0;
  std::uint8_t dst_ = 0;
  std::array<std::uint8_t, kMaxSize + 1> map_{};
};

struct MorphismHash {
  std::size_t operator()(const Morphism& f) const noexcept {
    std::size_t h = static_cast<std::size_t>(f.src()) * 131 + f.dst();
    for (int i = 1; i <= f.src(); ++i) h = h * 17 + f(i);
    return h;
  }
};

inline Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.dst() != g.src())
    throw TypeMismatch("cannot compose " + g.to_string() + " after " + f.to_string());
  std::array<std::uint8_t, kMaxSize + 1> t{};
  for (int i = 1; i <= f.src(); ++i) t[i] = static_cast<std::uint8_t>(g(f(i)));
  return Morphism::from_table_unchecked(f.src(), g.dst(), t);
}

template <class... Rest>
Morphism compose(const Morphism& h, const Morphism& g, const Morphism& f, const Rest&... rest) {
  return compose(h, compose(g, f, rest...));
}

// Wedge sum of objects: block convention, elements of the first summand first.
inline int direct_sum(int a, int b) {
  check_size(a + b);
  return a + b;
}

inline Morphism direct_sum(const Morphism& f, const Morphism& g) {
  const int src = direct_sum(f.src(), g.src());
  const int dst = direct_sum(f.dst(), g.dst());
  std::array<std::uint8_t, kMaxSize + 1> t{};
  for (int i = 1; i <= f.src(); ++i) t[i] = static_cast<std::uint8_t>(f(i));
  for (int i = 1; i <= g.src(); ++i)
    t[f.src() + i] = static_cast<std::uint8_t>(g(i) ? g(i) + f.dst() : 0);
  return Morphism::from_table_unchecked(src, dst, t);
}

template <class... Rest>
Morphism direct_sum(const Morphism& f, const Morphism& g, const Morphism& h, const Rest&... rest) {
  return direct_sum(direct_sum(f, g), h, rest...);
}

// i_U : U -> U (+) V and i_V : V -> U (+) V.
inline Morphism inclusion_first(int u, int v) {
  return direct_sum(Morphism::identity(u), Morphism::zero(0, v));
}
inline Morphism inclusion_second(int u, int v) {
  return direct_sum(Morphism::zero(0, u), Morphism::identity(v));
}
// pi_U : U (+) V -> U and pi_V : U (+) V -> V.
inline Morphism projection_first(int u, int v) {
  return direct_sum(Morphism::identity(u), Morphism::zero(v, 0));
}
inline Morphism projection_second(int u, int v) {
  return direct_sum(Morphism::zero(u, 0), Morphism::identity(v));
}

// Symmetry U (+) V -> V (+) U.
inline Morphism braiding(int u, int v) {
  std::array<std::uint8_t, kMaxSize + 1> t{};
  for (int i = 1; i <= u; ++i) t[i] = static_cast<std::uint8_t>(v + i);
  for (int i = 1; i <= v; ++i) t[u + i] = static_cast<std::uint8_t>(i);
  return Morphism::from_table_unchecked(u + v, u + v, t);
}

// Adjoint f^ad : N -> M with f^ad(n) = m if n = f(m), and 0 off the image.
inline Morphism dualize(const Morphism& f) {
  std::array<std::uint8_t, kMaxSize + 1> t{};
  for (int i = 1; i <= f.src(); ++i)
    if (f(i)) t[f(i)] = static_cast<std::uint8_t>(i);
  return Morphism::from_table_unchecked(f.dst(), f.src(), t);
}

enum class MorphismClass { iso, inflation, deflation, generic };

inline const char* to_string(MorphismClass c) {
  switch (c) {
    case MorphismClass::iso: return "iso";
    case MorphismClass::inflation: return "inflation";
    case MorphismClass::deflation: return "deflation";
    case MorphismClass::generic: return "generic";
  }
  return "?";
}

// Inflations are the everywhere-injective maps, deflations the maps onto all
// nonzero elements of the target.
inline bool is_inflation(const Morphism& f) { return f.kernel() == 0; }
inline bool is_deflation(const Morphism& f) { return f.image() == full_subset(f.dst()); }
inline bool is_iso(const Morphism& f) { return is_inflation(f) && is_deflation(f); }

inline MorphismClass classify(const Morphism& f) {
  const bool inf = is_inflation(f), def = is_deflation(f);
  if (inf && def) return MorphismClass::iso;
  if (inf) return MorphismClass::inflation;
  if (def) return MorphismClass::deflation;
  return MorphismClass::generic;
}

inline Morphism inverse(const Morphism& f) {
  if (!is_iso(f)) throw InvalidMorphism(f.to_string() + " is not an isomorphism");
  return dualize(f);
}

// Ascending inclusion of a subset of {1..n}.
inline Morphism subset_inclusion(Subset s, int n) {
  std::array<std::uint8_t, kMaxSize + 1> t{};
  int k = 0;
  for (int e = 1; e <= n; ++e)
    if (s & (1u << e)) t[++k] = static_cast<std::uint8_t>(e);
  return Morphism::from_table_unchecked(k, n, t);
}

// Deflation n ->> |complement| collapsing s and relabelling the rest ascending.
inline Morphism subset_cokernel(Subset s, int n) {
  std::array<std::uint8_t, kMaxSize + 1> t{};
  int k = 0;
  for (int e = 1; e <= n; ++e)
    if (!(s & (1u << e))) t[e] = static_cast<std::uint8_t>(++k);
  return Morphism::from_table_unchecked(n, k, t);
}

enum class HomFilter { all, inflations, deflations, isos };

// Visits every morphism n -> m of the requested class, in lexicographic order
// of the value table.
template <class Fn>
void for_each_morphism(int n, int m, HomFilter filter, Fn&& fn) {
  check_size(n);
  check_size(m);
  if ((filter == HomFilter::inflations || filter == HomFilter::isos) && n > m) return;
  if ((filter == HomFilter::deflations || filter == HomFilter::isos) && n < m) return;
  if (filter == HomFilter::isos && n != m) return;
  std::array<std::uint8_t, kMaxSize + 1> t{};
  const bool allow_zero = filter == HomFilter::all || filter == HomFilter::deflations;
  const bool must_cover = filter == HomFilter::deflations || filter == HomFilter::isos;
  Subset used = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      if (!must_cover || used == full_subset(m)) fn(Morphism::from_table_unchecked(n, m, t));
      return;
    }
    if (must_cover && (n - i + 1) < m - popcount(used)) return;
    if (allow_zero) {
      t[i] = 0;
      rec(i + 1);
    }
    for (int v = 1; v <= m; ++v) {
      if (used & (1u << v)) continue;
      used |= 1u << v;
      t[i] = static_cast<std::uint8_t>(v);
      rec(i + 1);
      used &= ~(1u << v);
    }
    t[i] = 0;
  };
  rec(1);
}

inline std::vector<Morphism> hom(int n, int m, HomFilter filter = HomFilter::all) {
  std::vector<Morphism> out;
  for_each_morphism(n, m, filter, [&](const Morphism& f) { out.push_back(f); });
  return out;
}
inline std::vector<Morphism> inflations(int n, int m) { return hom(n, m, HomFilter::inflations); }
inline std::vector<Morphism> deflations(int n, int m) { return hom(n, m, HomFilter::deflations); }
inline std::vector<Morphism> permutations(int n) { return hom(n, n, HomFilter::isos); }

}  // namespace kgw::f1
