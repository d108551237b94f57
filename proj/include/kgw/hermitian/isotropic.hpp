#pragma once

// Isotropic subobjects, isotropic reduction, and the splitting constructions:
// metabolic forms are hyperbolic, nondegenerate subforms split off, and an
// isotropic subobject splits off a hyperbolic summand.

#include <string>
#include <vector>

#include "kgw/f1/conflation.hpp"
#include "kgw/hermitian/form.hpp"

namespace kgw::herm {

using f1::Subset;

// U^⊥ = ker(P(i)∘psi): elements whose partner lies outside i(U).
inline Subset orthogonal(const SymmetricForm& s, const Morphism& i) {
  const Morphism d = f1::compose(f1::dualize(i), s.psi());
  return d.kernel();
}

struct IsotropicInflation {
  SymmetricForm form;
  Morphism inclusion;  // i : U >-> M

  int u() const { return inclusion.src(); }
  Subset subset() const { return inclusion.image(); }
  Subset perp() const { return orthogonal(form, inclusion); }
  bool is_lagrangian() const { return perp() == subset(); }
};

// Checks every clause of isotropy, including that U -> U^⊥ is an inflation.
inline IsotropicInflation make_isotropic(const SymmetricForm& s, const Morphism& i) {
  if (i.dst() != s.size()) throw TypeMismatch(i.to_string() + " does not land in " + s.to_string());
  if (!f1::is_inflation(i)) throw NotAnInflation(i.to_string());
  if (!f1::compose(f1::dualize(i), s.psi(), i).is_zero())
    throw NotIsotropic(i.to_string() + " in " + s.to_string());
  const Subset perp = orthogonal(s, i);
  const Morphism k = f1::compose(f1::dualize(f1::subset_inclusion(perp, s.size())), i);
  if (!f1::is_inflation(k)) throw NotIsotropic(i.to_string() + ": induced map into the orthogonal is not an inflation");
  return {s, i};
}

inline bool is_isotropic_subset(const SymmetricForm& s, Subset t) {
  for (int x = 1; x <= s.size(); ++x)
    if ((t & (1u << x)) && (t & (1u << s(x)))) return false;
  return true;
}

// Elements of a subset in ascending order, compared lexicographically.
inline bool subset_lex_less(Subset a, Subset b) {
  return f1::subset_elements(a) < f1::subset_elements(b);
}

// All isotropic subsets (including 0) as ascending inclusions, in
// lexicographic order of their element lists.
inline std::vector<IsotropicInflation> isotropic_subobjects(const SymmetricForm& s) {
  std::vector<Subset> subsets;
  for (Subset t = 0; t <= f1::full_subset(s.size()); t += 2)
    if (is_isotropic_subset(s, t)) subsets.push_back(t);
  std::sort(subsets.begin(), subsets.end(), subset_lex_less);
  std::vector<IsotropicInflation> out;
  for (Subset t : subsets) out.push_back(make_isotropic(s, f1::subset_inclusion(t, s.size())));
  return out;
}

inline bool is_isotropically_simple(const SymmetricForm& s) {
  for (int x = 1; x <= s.size(); ++x)
    if (s(x) != x) return false;  // {x} is isotropic
  return true;
}

inline bool is_metabolic(const SymmetricForm& s) {
  for (const auto& u : isotropic_subobjects(s))
    if (u.is_lagrangian()) return true;
  return false;
}

struct Reduction {
  SymmetricForm form;  // psi on M // U
  Morphism perp;       // j : U^⊥ >-> M
  Morphism quotient;   // pi : U^⊥ ->> M // U
};

// M // U = U^⊥ / U with survivors relabelled ascending. The induced form is
// checked to be an involution and to satisfy P(pi)∘psi'∘pi = P(j)∘psi∘j.
inline Reduction isotropic_reduction(const IsotropicInflation& u) {
  const SymmetricForm& s = u.form;
  make_isotropic(s, u.inclusion);
  const Subset perp = u.perp();
  const Morphism j = f1::subset_inclusion(perp, s.size());
  const Morphism k = f1::compose(f1::dualize(j), u.inclusion);
  const Morphism pi = f1::subset_cokernel(k.image(), j.src());
  const Morphism restricted = f1::compose(f1::dualize(j), s.psi(), j);
  const Morphism induced = f1::compose(pi, restricted, f1::dualize(pi));
  SymmetricForm reduced;
  try {
    reduced = SymmetricForm(induced);
  } catch (const InvalidForm& e) {
    throw InvalidForm(std::string("reduction is degenerate: ") + e.what());
  }
  if (f1::compose(f1::dualize(pi), reduced.psi(), pi) != restricted)
    throw InvalidForm("induced form does not restrict correctly on " + u.inclusion.to_string());
  return {reduced, j, pi};
}

// Isometry H(U) -> S for a Lagrangian U, from the unique splitting of
// U >-> S ->> P(U).
inline Isometry metabolic_to_hyperbolic(const IsotropicInflation& lagrangian) {
  make_isotropic(lagrangian.form, lagrangian.inclusion);
  if (!lagrangian.is_lagrangian())
    throw NotLagrangian(lagrangian.inclusion.to_string() + " in " + lagrangian.form.to_string());
  const SymmetricForm& s = lagrangian.form;
  const Morphism& i = lagrangian.inclusion;
  const f1::Conflation c{i, f1::compose(f1::dualize(i), s.psi())};
  const Morphism phi = f1::split_conflation(c);
  return Isometry::make(hyperbolic(lagrangian.u()), s, phi);
}

struct SplitOff {
  SymmetricForm restricted;   // psi_M = P(i)∘psi_N∘i
  SymmetricForm complement;   // M'
  Isometry isometry;          // N -> M (+) M', carrying i to i_M
};

inline SplitOff split_off_form(const SymmetricForm& n, const Morphism& i) {
  if (i.dst() != n.size()) throw TypeMismatch(i.to_string() + " does not land in " + n.to_string());
  if (!f1::is_inflation(i)) throw NotAnInflation(i.to_string());
  const Morphism psi_m = f1::compose(f1::dualize(i), n.psi(), i);
  SymmetricForm m;
  try {
    m = SymmetricForm(psi_m);
  } catch (const InvalidForm&) {
    throw RestrictionDegenerate(i.to_string() + " in " + n.to_string());
  }
  const Morphism pi = f1::compose(f1::inverse(psi_m), f1::dualize(i), n.psi());
  const f1::Conflation c = f1::Conflation::from_deflation(pi);  // M' >-> N ->> M
  const Morphism& j = c.inflation;
  const SymmetricForm mp(f1::compose(f1::dualize(j), n.psi(), j));
  // M (+) M' -> N sending the blocks to i and j
  std::array<std::uint8_t, f1::kMaxSize + 1> t{};
  for (int k = 1; k <= m.size(); ++k) t[k] = static_cast<std::uint8_t>(i(k));
  for (int k = 1; k <= mp.size(); ++k) t[m.size() + k] = static_cast<std::uint8_t>(j(k));
  const Morphism back = Morphism::from_table_unchecked(n.size(), n.size(), t);
  Isometry iso = Isometry::make(n, direct_sum(m, mp), f1::inverse(back));
  if (f1::compose(iso.map, i) != f1::inclusion_first(m.size(), mp.size()))
    throw InvalidForm("split-off isometry does not carry the subform to the first summand");
  return {m, mp, iso};
}

namespace detail {
// U (+) M (+) P(U) -> U (+) P(U) (+) M on blocks of sizes u, m, u.
inline Morphism swap_last_blocks(int u, int m) {
  std::array<std::uint8_t, f1::kMaxSize + 1> t{};
  for (int k = 1; k <= u; ++k) t[k] = static_cast<std::uint8_t>(k);
  for (int k = 1; k <= m; ++k) t[u + k] = static_cast<std::uint8_t>(2 * u + k);
  for (int k = 1; k <= u; ++k) t[u + m + k] = static_cast<std::uint8_t>(u + k);
  return Morphism::from_table_unchecked(2 * u + m, 2 * u + m, t);
}
}  // namespace detail

struct IsotropicSplitting {
  Reduction reduction;
  Isometry isometry;  // N -> H(U) (+) N // U
};

// Follows the two-step splitting: U >-> U^⊥ ->> M, then U (+) M >-> N ->> P(U),
// then split off M and identify the rest with H(U).
inline IsotropicSplitting isotropic_splitting(const IsotropicInflation& u) {
  const SymmetricForm& n = u.form;
  const Reduction red = isotropic_reduction(u);
  const SymmetricForm& m = red.form;
  const int nu = u.u(), nm = m.size();
  const Morphism& j = red.perp;
  const Morphism k = f1::compose(f1::dualize(j), u.inclusion);
  const Morphism sigma = f1::split_conflation({k, red.quotient});  // U (+) M -> U^⊥
  const Morphism jp = f1::compose(j, sigma);                       // U (+) M >-> N
  const f1::Conflation outer{jp, f1::compose(f1::dualize(u.inclusion), n.psi())};
  const Morphism phi0 = f1::split_conflation(outer);  // (U (+) M) (+) P(U) -> N
  const Morphism phi = f1::compose(detail::swap_last_blocks(nu, nm), f1::inverse(phi0));  // N -> U (+) P(U) (+) M
  const SymmetricForm psi_prime(f1::compose(f1::dualize(f1::inverse(phi)), n.psi(), f1::inverse(phi)));
  const Isometry to_prime = Isometry::make(n, psi_prime, phi);

  const SplitOff so = split_off_form(psi_prime, f1::inclusion_second(2 * nu, nm));
  if (so.restricted != m) throw InvalidForm("split-off summand differs from the reduction");
  // swap M (+) M'' to M'' (+) M
  const Isometry swap = Isometry::make(so.isometry.target, direct_sum(so.complement, m),
                                       f1::braiding(nm, 2 * nu));
  const Isometry to_sum = compose(swap, compose(so.isometry, to_prime));
  // Lagrangian: U inside M''
  const Morphism lag = f1::compose(f1::projection_first(2 * nu, nm), to_sum.map, u.inclusion);
  const Isometry hyp = metabolic_to_hyperbolic(make_isotropic(so.complement, lag));
  const Isometry result =
      compose(direct_sum(hyp.inverse(), Isometry::identity(m)), to_sum);  // N -> H(U) (+) M
  // U >-> U^⊥ >-> N goes to U >-> U (+) M >-> H(U) (+) M
  if (f1::compose(result.map, u.inclusion) != f1::inclusion_first(nu, nu + nm))
    throw InvalidForm("isotropic splitting does not carry U to the standard Lagrangian");
  const Morphism standard = f1::direct_sum(f1::inclusion_first(nu, nu), Morphism::identity(nm));
  if (f1::compose(result.map, jp) != standard)
    throw InvalidForm("isotropic splitting does not carry U^⊥ to U (+) M");
  return {red, result};
}

}  // namespace kgw::herm
