#pragma once

// Conflations U >-> X ->> V, their splittings, and the combinatorial
// decomposition of inflations and deflations into direct sums.

#include <string>
#include <utility>
#include <vector>

#include "kgw/f1/morphism.hpp"
#include "kgw/f1/square.hpp"

namespace kgw::f1 {

struct Conflation {
  Morphism inflation;  // i : U >-> X
  Morphism deflation;  // p : X ->> V

  int u() const { return inflation.src(); }
  int x() const { return inflation.dst(); }
  int v() const { return deflation.dst(); }

  // The bicartesian square with corner W = 0.
  Square as_square() const {
    return Square{inflation, Morphism::zero(u(), 0), deflation, Morphism::zero(0, v())};
  }

  bool valid() const {
    return inflation.dst() == deflation.src() && is_inflation(inflation) &&
           is_deflation(deflation) && deflation.kernel() == inflation.image();
  }
  void validate() const {
    if (!valid()) throw NotAConflation(to_string());
  }
  std::string to_string() const {
    return inflation.to_string() + " ; " + deflation.to_string();
  }

  // U >-> U (+) V ->> V.
  static Conflation canonical(int u, int v) {
    return Conflation{inclusion_first(u, v), projection_second(u, v)};
  }
  // Kernel of a deflation: ker(p) >-> X ->> V.
  static Conflation from_deflation(const Morphism& p) {
    if (!is_deflation(p)) throw NotADeflation(p.to_string());
    return Conflation{subset_inclusion(p.kernel(), p.src()), p};
  }
  // Cokernel of an inflation: U >-> X ->> X/U.
  static Conflation from_inflation(const Morphism& i) {
    if (!is_inflation(i)) throw NotAnInflation(i.to_string());
    return Conflation{i, subset_cokernel(i.image(), i.dst())};
  }

  friend auto operator<=>(const Conflation&, const Conflation&) = default;
  friend bool operator==(const Conflation&, const Conflation&) = default;
};

// All conflations with middle term of size x, ordered by (inflation, deflation).
inline std::vector<Conflation> conflations(int x) {
  std::vector<Conflation> out;
  for (int u = 0; u <= x; ++u) {
    const int v = x - u;
    for_each_morphism(u, x, HomFilter::inflations, [&](const Morphism& i) {
      const Subset rest = full_subset(x) & ~i.image();
      // deflations killing exactly image(i): bijections rest -> {1..v}
      for (const auto& sigma : permutations(v)) {
        std::array<std::uint8_t, kMaxSize + 1> t{};
        int k = 0;
        for (int e = 1; e <= x; ++e)
          if (rest & (1u << e)) t[e] = static_cast<std::uint8_t>(sigma(++k));
        out.push_back(Conflation{i, Morphism::from_table_unchecked(x, v, t)});
      }
    });
  }
  return out;
}

// The isomorphism phi : U (+) V -> X with phi∘i_U = i and p∘phi = pi_V.
inline Morphism split_conflation(const Conflation& c) {
  c.validate();
  const Morphism section = dualize(c.deflation);  // picks the unique preimage
  return Morphism::from_table_unchecked(
      c.x(), c.x(), [&] {
        std::array<std::uint8_t, kMaxSize + 1> t{};
        for (int k = 1; k <= c.u(); ++k) t[k] = static_cast<std::uint8_t>(c.inflation(k));
        for (int k = 1; k <= c.v(); ++k) t[c.u() + k] = static_cast<std::uint8_t>(section(k));
        return t;
      }());
}

inline bool is_splitting(const Conflation& c, const Morphism& phi) {
  return phi.src() == c.u() + c.v() && phi.dst() == c.x() && is_iso(phi) &&
         compose(phi, inclusion_first(c.u(), c.v())) == c.inflation &&
         compose(c.deflation, phi) == projection_second(c.u(), c.v());
}

// Exhaustive search over all isomorphisms U (+) V -> X.
inline std::vector<Morphism> all_splittings(const Conflation& c) {
  std::vector<Morphism> out;
  for (const auto& phi : permutations(c.x()))
    if (is_splitting(c, phi)) out.push_back(phi);
  return out;
}

// Sections s of the deflation (p∘s = id_V), by enumeration of Hom(V, X).
inline std::vector<Morphism> sections(const Conflation& c) {
  std::vector<Morphism> out;
  const Morphism id = Morphism::identity(c.v());
  for_each_morphism(c.v(), c.x(), HomFilter::all, [&](const Morphism& s) {
    if (compose(c.deflation, s) == id) out.push_back(s);
  });
  return out;
}

// Retractions r of the inflation (r∘i = id_U), by enumeration of Hom(X, U).
inline std::vector<Morphism> retractions(const Conflation& c) {
  std::vector<Morphism> out;
  const Morphism id = Morphism::identity(c.u());
  for_each_morphism(c.x(), c.u(), HomFilter::all, [&](const Morphism& r) {
    if (compose(r, c.inflation) == id) out.push_back(r);
  });
  return out;
}

// Unique h : E1 -> E2 with h∘i1 = i2∘f and p2∘h = g∘p1.
inline Morphism fill_conflation_morphism(const Conflation& top, const Conflation& bottom,
                                         const Morphism& f, const Morphism& g) {
  if (!top.valid() || !bottom.valid())
    throw NoFill("rows must be conflations: " + top.to_string() + " / " + bottom.to_string());
  if (f.src() != top.u() || f.dst() != bottom.u() || g.src() != top.v() || g.dst() != bottom.v())
    throw NoFill("end maps " + f.to_string() + ", " + g.to_string() + " do not match the rows");
  const Morphism phi1 = split_conflation(top);
  const Morphism phi2 = split_conflation(bottom);
  Morphism h = compose(phi2, direct_sum(f, g), inverse(phi1));
  if (compose(h, top.inflation) != compose(bottom.inflation, f) ||
      compose(bottom.deflation, h) != compose(g, top.deflation))
    throw NoFill("constructed fill does not commute");
  return h;
}

inline std::vector<Morphism> all_fills(const Conflation& top, const Conflation& bottom,
                                       const Morphism& f, const Morphism& g) {
  std::vector<Morphism> out;
  const Morphism left = compose(bottom.inflation, f);
  const Morphism right = compose(g, top.deflation);
  for_each_morphism(top.x(), bottom.x(), HomFilter::all, [&](const Morphism& h) {
    if (compose(h, top.inflation) == left && compose(bottom.deflation, h) == right)
      out.push_back(h);
  });
  return out;
}

// i = (i1 (+) i2) ∘ f for an inflation i : U >-> X1 (+) X2.
struct InflationDecomposition {
  Morphism first;   // i1 : U1 >-> X1, U1 = "U ∩ X1"
  Morphism second;  // i2 : U2 >-> X2
  Morphism sort;    // f : U -> U1 (+) U2
};

inline InflationDecomposition decompose_inflation(const Morphism& i, int x1) {
  if (!is_inflation(i)) throw NotAnInflation(i.to_string());
  if (x1 < 0 || x1 > i.dst()) throw TypeMismatch("block size " + std::to_string(x1));
  const int x2 = i.dst() - x1;
  std::vector<int> in_first, in_second;  // elements of U by landing block
  for (int e = 1; e <= i.src(); ++e) (i(e) <= x1 ? in_first : in_second).push_back(e);
  const int u1 = static_cast<int>(in_first.size());
  const int u2 = static_cast<int>(in_second.size());
  std::array<std::uint8_t, kMaxSize + 1> f{}, t1{}, t2{};
  for (int k = 0; k < u1; ++k) {
    f[in_first[k]] = static_cast<std::uint8_t>(k + 1);
    t1[k + 1] = static_cast<std::uint8_t>(i(in_first[k]));
  }
  for (int k = 0; k < u2; ++k) {
    f[in_second[k]] = static_cast<std::uint8_t>(u1 + k + 1);
    t2[k + 1] = static_cast<std::uint8_t>(i(in_second[k]) - x1);
  }
  return {Morphism::from_table_unchecked(u1, x1, t1), Morphism::from_table_unchecked(u2, x2, t2),
          Morphism::from_table_unchecked(i.src(), i.src(), f)};
}

// p = g ∘ (p1 (+) p2) for a deflation p : X1 (+) X2 ->> U.
struct DeflationDecomposition {
  Morphism first;   // p1 : X1 ->> U1
  Morphism second;  // p2 : X2 ->> U2
  Morphism sort;    // g : U1 (+) U2 -> U
};

inline DeflationDecomposition decompose_deflation(const Morphism& p, int x1) {
  if (!is_deflation(p)) throw NotADeflation(p.to_string());
  if (x1 < 0 || x1 > p.src()) throw TypeMismatch("block size " + std::to_string(x1));
  // Dual to decompose_inflation through the adjoint.
  const InflationDecomposition d = decompose_inflation(dualize(p), x1);
  return {dualize(d.first), dualize(d.second), dualize(d.sort)};
}

}  // namespace kgw::f1
