#pragma once

// tau : S_H -> Q_H sending an isometry phi : M -> N to M <<- M >-> N, the comma
// category M \ tau, and H^M : S -> M \ tau certified as an equivalence inside
// a window.

#include <memory>
#include <string>
#include <vector>

#include "kgw/constructions/qh.hpp"
#include "kgw/constructions/support.hpp"

namespace kgw::cons {

using herm::Isometry;

// The groupoid of hyperbolic forms of size <= n and their isometries.
using SHCategory = cat::Enumerated<SymmetricForm, Isometry>;

inline std::vector<Isometry> isometries(const SymmetricForm& s, const SymmetricForm& t) {
  std::vector<Isometry> out;
  const auto phi = herm::find_isometry(s, t);
  if (!phi) return out;
  for (const auto& g : herm::isometry_group(s)) out.push_back({s, t, f1::compose(*phi, g)});
  std::sort(out.begin(), out.end());
  return out;
}

inline SHCategory hyperbolic_groupoid(int max_size) {
  std::vector<SymmetricForm> objects;
  for (const auto& s : forms_up_to(max_size))
    if (s.fixed_points() == 0) objects.push_back(s);
  return cat::build_category<SymmetricForm, Isometry>(
      objects, isometries, [](const Isometry& g, const Isometry& f) { return herm::compose(g, f); },
      Isometry::identity, [](const SymmetricForm& s) { return s.to_string(); },
      [](const Isometry& i) { return i.map.to_string(); });
}

inline QhMorphism tau(const Isometry& phi) {
  return {phi.source, phi.target, QSpan::make(f1::inverse(phi.map), Morphism::identity(phi.target.size()))};
}

// H^M(V) = (M (+) H(V), M <<- M (+) V >-> M (+) H(V))
inline QhMorphism h_m(const SymmetricForm& m, int v) {
  const Morphism j = f1::direct_sum(Morphism::identity(m.size()), f1::inclusion_first(v, v));
  return {m, herm::direct_sum(m, herm::hyperbolic(v)), QSpan::make(f1::projection_first(m.size(), v), j)};
}

inline Isometry h_m(const SymmetricForm& m, const Morphism& psi) {
  const int v = psi.src();
  const SymmetricForm n = herm::direct_sum(m, herm::hyperbolic(v));
  return {n, n, f1::direct_sum(Morphism::identity(m.size()), f1::direct_sum(psi, psi))};
}

inline SuiteReport comma_tau_suite(const SymmetricForm& m, int max_size) {
  if (m.fixed_points() != 0) throw NotHyperbolic(m.to_string() + " has fixed points");
  SuiteReport report{"comma_tau[M=" + m.to_string() + ",max_size=" + std::to_string(max_size) + "]"};
  auto& tau_functor = report.add("tau is a functor");
  auto& equivalence = report.add("H^M : S -> M\\tau is an equivalence");
  auto& faithful = report.add("distinct automorphisms give distinct comma morphisms");

  const SHCategory sh = hyperbolic_groupoid(max_size);
  const QhCategory qh = qh_hyperbolic_category(max_size);
  const SCategory s = s_groupoid(std::max(0, (max_size - m.size()) / 2));
  detail::guarded(tau_functor, "tau", [&] {
    const cat::Functor t = tabulate_between(sh, qh, [](const SymmetricForm& x) { return x; }, tau);
    const cat::FunctorCheck fc = cat::check_functor(t, cat::FunctorMode::functoriality);
    tau_functor.cases += sh.cat.num_morphisms();
    if (!fc.holds) tau_functor.fail(fc.witness);

    const cat::CommaCategory comma = cat::comma_category(t, qh.id_of(m));
    auto object_of = [&](int v) {
      const QhMorphism alpha = h_m(m, v);
      return comma.find(sh.id_of(alpha.dst), qh.id_of_morphism(alpha));
    };
    const cat::Functor h = cat::Functor::tabulate(
        s.cat, comma.cat, [&](cat::Id a) { return object_of(s.objects[a]); },
        [&](cat::Id f) -> cat::Id {
          const Morphism& psi = s.morphisms[f];
          const cat::Id x = object_of(psi.src());
          const cat::Id u = sh.id_of_morphism(h_m(m, psi));
          for (cat::Id k : comma.cat.homs(x, x))
            if (comma.underlying[k] == u) return k;
          throw UnknownObject("H^M of " + psi.to_string() + " is not a comma morphism");
        });
    detail::record_equivalence(equivalence, h, "H^M");

    for (cat::Id a = 0; a < s.cat.num_objects(); ++a) {
      std::set<cat::Id> images;
      for (cat::Id f : s.cat.homs(a, a)) images.insert(h.on_morphism(f));
      ++faithful.cases;
      if (images.size() != s.cat.homs(a, a).size()) faithful.fail("V = " + std::to_string(s.objects[a]));
    }
  });
  if (!tau_functor.passed) {
    equivalence.fail("tau failed");
    faithful.fail("tau failed");
  }
  return report;
}

}  // namespace kgw::cons
