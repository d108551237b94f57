#pragma once

// The category of conflations E with its projection g to Q, the fibres E_C,
// the groupoid S of pointed sets and the functors F_C, z_C^*, p_C^*, p_C*
// and the S-action, all truncated at a carrier size.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "kgw/category/functor.hpp"
#include "kgw/constructions/q.hpp"
#include "kgw/constructions/support.hpp"
#include "kgw/f1/conflation.hpp"
#include "kgw/util/report.hpp"

namespace kgw::cons {

using f1::Conflation;

// A morphism (A' >-> B' ->> C') -> (A >-> B ->> C). The three-row diagram is
// determined by beta : B' >-> B; the middle row is A >-> B' ->> C_1 with C_1
// the cokernel of beta^-1(A) in ascending labels.
struct EMorphism {
  Conflation source;
  Conflation target;
  Morphism beta;

  Morphism alpha() const {  // A >-> A'
    return f1::compose(f1::dualize(f1::compose(beta, source.inflation)), target.inflation);
  }
  Morphism middle_deflation() const {  // B' ->> C_1
    return f1::subset_cokernel(f1::compose(source.inflation, alpha()).image(), source.x());
  }
  Morphism to_source_quotient() const {  // C_1 ->> C'
    return f1::compose(source.deflation, f1::dualize(middle_deflation()));
  }
  Morphism to_target_quotient() const {  // C_1 >-> C
    return f1::compose(target.deflation, beta, f1::dualize(middle_deflation()));
  }
  // g(m) = C' <<- C_1 >-> C
  QSpan base() const { return QSpan::make(to_source_quotient(), to_target_quotient()); }

  std::string to_string() const { return beta.to_string(); }
  friend auto operator<=>(const EMorphism&, const EMorphism&) = default;
  friend bool operator==(const EMorphism&, const EMorphism&) = default;
};

inline bool is_e_morphism(const Conflation& src, const Conflation& tgt, const Morphism& beta) {
  if (beta.src() != src.x() || beta.dst() != tgt.x() || !f1::is_inflation(beta)) return false;
  const Subset a = tgt.inflation.image();
  return (f1::compose(beta, src.inflation).image() & a) == a;
}

inline std::vector<EMorphism> e_hom(const Conflation& src, const Conflation& tgt) {
  std::vector<EMorphism> out;
  for (const auto& b : f1::inflations(src.x(), tgt.x()))
    if (is_e_morphism(src, tgt, b)) out.push_back({src, tgt, b});
  return out;
}

inline EMorphism e_compose(const EMorphism& g, const EMorphism& f) {
  if (f.target != g.source) throw TypeMismatch("conflation morphisms are not composable");
  return {f.source, g.target, f1::compose(g.beta, f.beta)};
}

inline EMorphism e_identity(const Conflation& c) { return {c, c, Morphism::identity(c.x())}; }

using ECategory = cat::Enumerated<Conflation, EMorphism>;

inline std::string conflation_label(const Conflation& c) { return c.to_string(); }

inline ECategory e_category_on(const std::vector<Conflation>& objects,
                               const std::function<bool(const EMorphism&)>& keep = {}) {
  auto hom = [&](const Conflation& a, const Conflation& b) {
    auto h = e_hom(a, b);
    if (keep) h.erase(std::remove_if(h.begin(), h.end(), [&](const EMorphism& m) { return !keep(m); }), h.end());
    return h;
  };
  return cat::build_category<Conflation, EMorphism>(objects, hom, e_compose, e_identity, conflation_label,
                                                    [](const EMorphism& m) { return m.to_string(); });
}

inline std::vector<Conflation> conflations_up_to(int max_size) {
  std::vector<Conflation> out;
  for (int x = 0; x <= max_size; ++x)
    for (const auto& c : f1::conflations(x)) out.push_back(c);
  return out;
}

inline ECategory conflation_category(int max_size) { return e_category_on(conflations_up_to(max_size)); }

// E_C: conflations ending in C and morphisms over id_C.
inline ECategory conflation_fibre(int c, int max_size) {
  std::vector<Conflation> objects;
  for (const auto& x : conflations_up_to(max_size))
    if (x.v() == c) objects.push_back(x);
  return e_category_on(objects, [c](const EMorphism& m) { return m.base() == QSpan::identity(c); });
}

// Object and morphism rules of the functors between fibres.
namespace efun {

// F_C(A) = A >-> C (+) A ->> C
inline Conflation fc(int c, int a) { return {f1::inclusion_second(c, a), f1::projection_first(c, a)}; }
inline EMorphism fc(int c, const Morphism& phi) {
  return {fc(c, phi.src()), fc(c, phi.dst()), f1::direct_sum(Morphism::identity(c), phi)};
}

// z_C^*(A >-> B ->> C) = A = A ->> 0
inline Conflation z_star(const Conflation& x) { return {Morphism::identity(x.u()), Morphism::zero(x.u(), 0)}; }
inline EMorphism z_star(const EMorphism& m) {
  return {z_star(m.source), z_star(m.target), f1::inverse(m.alpha())};
}

// p_C^*(A >-> B ->> C) = B = B ->> 0
inline Conflation p_star(const Conflation& x) { return {Morphism::identity(x.x()), Morphism::zero(x.x(), 0)}; }
inline EMorphism p_star(const EMorphism& m) { return {p_star(m.source), p_star(m.target), m.beta}; }

// p_C*(A >-> B ->> 0) = A >-> C (+) B ->> C
inline Conflation p_push(int c, const Conflation& x) {
  return {f1::compose(f1::inclusion_second(c, x.x()), x.inflation), f1::projection_first(c, x.x())};
}
inline EMorphism p_push(int c, const EMorphism& m) {
  return {p_push(c, m.source), p_push(c, m.target), f1::direct_sum(Morphism::identity(c), m.beta)};
}

// A'.(A >-> B ->> C) = A' (+) A >-> A' (+) B ->> C
inline Conflation act(int a, const Conflation& x) {
  return {f1::direct_sum(Morphism::identity(a), x.inflation), f1::compose(x.deflation, f1::projection_second(a, x.x()))};
}
inline EMorphism act(int a, const EMorphism& m) {
  return {act(a, m.source), act(a, m.target), f1::direct_sum(Morphism::identity(a), m.beta)};
}

}  // namespace efun

// Functoriality of g, fibres of g against the direct construction, and lifts
// of Q-morphisms along g.
inline SuiteReport conflation_suite(int max_size) {
  SuiteReport report{"conflations[max_size=" + std::to_string(max_size) + "]"};
  auto& functor = report.add("g : E -> Q is a functor");
  auto& fibres = report.add("fibre of g over C equals E_C");
  auto& lifts = report.add("Q-morphisms into g(X) lift to morphisms into X");
  const ECategory e = conflation_category(max_size);
  const QCategory q = q_category(max_size);
  const cat::Functor g = cat::Functor::tabulate(
      e.cat, q.cat, [&](cat::Id a) { return q.id_of(e.objects[a].v()); },
      [&](cat::Id m) { return q.id_of_morphism(e.morphisms[m].base()); });
  const cat::FunctorCheck fc = cat::check_functor(g, cat::FunctorMode::functoriality);
  functor.cases += e.cat.num_morphisms();
  if (!fc.holds) functor.fail(fc.witness);

  for (int c = 0; c <= max_size; ++c) {
    ++fibres.cases;
    const ECategory direct = conflation_fibre(c, max_size);
    std::set<EMorphism> over;
    std::size_t objects = 0;
    for (const auto& x : e.objects) objects += x.v() == c;
    for (const auto& m : e.morphisms)
      if (m.source.v() == c && m.target.v() == c && m.base() == QSpan::identity(c)) over.insert(m);
    const std::set<EMorphism> built(direct.morphisms.begin(), direct.morphisms.end());
    if (objects != direct.objects.size() || over != built) fibres.fail("C = " + std::to_string(c));
  }

  std::set<std::pair<cat::Id, QSpan>> reached;
  for (cat::Id m = 0; m < e.cat.num_morphisms(); ++m) reached.insert({e.cat.dst(m), e.morphisms[m].base()});
  for (cat::Id x = 0; x < e.cat.num_objects(); ++x)
    for (int c2 = 0; c2 <= max_size; ++c2)
      for (const auto& f : q_hom(c2, e.objects[x].v())) {
        if (e.objects[x].u() + f.middle() > max_size) continue;  // lift leaves the truncation
        ++lifts.cases;
        if (!reached.count({x, f})) lifts.fail(f.to_string() + " into " + e.objects[x].to_string());
      }
  return report;
}

// For each C of size <= max_c: F_C and z_C^* are equivalences, z_C^* F_C = F_0,
// C. = p_C^* p_C* on E_0 and C. = p_C* p_C^* on E_C, with explicit natural
// isomorphisms; for C = 0 the three functors are isomorphic to identities.
inline SuiteReport base_change_suite(int max_size, int max_c = 2) {
  SuiteReport report{"base_change[max_size=" + std::to_string(max_size) + "]"};
  auto& f_equiv = report.add("F_C : S -> E_C is an equivalence");
  auto& z_equiv = report.add("z_C^* : E_C -> E_0 is an equivalence");
  auto& z_f = report.add("z_C^* F_C = F_0 naturally");
  auto& act0 = report.add("C. = p_C^* p_C* on E_0 naturally");
  auto& actc = report.add("C. = p_C* p_C^* on E_C naturally");
  auto& trivial = report.add("for C = 0, z^*, p^*, p_* are isomorphic to identities");

  for (int c = 0; c <= std::min(max_c, max_size); ++c) {
    const std::string tag = "C = " + std::to_string(c);
    const int rest = max_size - c;
    const auto ec = std::make_shared<const ECategory>(conflation_fibre(c, max_size));
    const auto ec_small = std::make_shared<const ECategory>(conflation_fibre(c, rest));
    const auto e0 = std::make_shared<const ECategory>(conflation_fibre(0, max_size));
    const auto e0_small = std::make_shared<const ECategory>(conflation_fibre(0, rest));
    const SCategory s = s_groupoid(rest);

    detail::guarded(f_equiv, tag, [&] {
      const cat::Functor f = tabulate_between(s, *ec, [&](int a) { return efun::fc(c, a); },
                                              [&](const Morphism& phi) { return efun::fc(c, phi); });
      detail::record_equivalence(f_equiv, f, tag);
    });
    detail::guarded(z_equiv, tag, [&] {
      const cat::Functor z = tabulate_between(*ec, *e0_small, [](const Conflation& x) { return efun::z_star(x); },
                                              [](const EMorphism& m) { return efun::z_star(m); });
      detail::record_equivalence(z_equiv, z, tag);
    });
    detail::guarded(z_f, tag, [&] {
      const cat::Functor zf = tabulate_between(
          s, *e0_small, [&](int a) { return efun::z_star(efun::fc(c, a)); },
          [&](const Morphism& phi) { return efun::z_star(efun::fc(c, phi)); });
      const cat::Functor f0 = tabulate_between(s, *e0_small, [](int a) { return efun::fc(0, a); },
                                               [](const Morphism& phi) { return efun::fc(0, phi); });
      std::vector<cat::Id> eta;
      for (int a : s.objects) eta.push_back(e0_small->id_of_morphism(e_identity(efun::fc(0, a))));
      detail::record_natural(z_f, zf, f0, eta, tag);
    });
    detail::guarded(act0, tag, [&] {
      const cat::Functor act = tabulate_between(*e0_small, *e0, [&](const Conflation& x) { return efun::act(c, x); },
                                                [&](const EMorphism& m) { return efun::act(c, m); });
      const cat::Functor pp = tabulate_between(
          *e0_small, *e0, [&](const Conflation& x) { return efun::p_star(efun::p_push(c, x)); },
          [&](const EMorphism& m) { return efun::p_star(efun::p_push(c, m)); });
      std::vector<cat::Id> eta;
      for (const auto& x : e0_small->objects)
        eta.push_back(e0->id_of_morphism(
            {efun::act(c, x), efun::p_star(efun::p_push(c, x)), Morphism::identity(c + x.x())}));
      detail::record_natural(act0, act, pp, eta, tag);
    });
    detail::guarded(actc, tag, [&] {
      const cat::Functor act = tabulate_between(*ec_small, *ec, [&](const Conflation& x) { return efun::act(c, x); },
                                                [&](const EMorphism& m) { return efun::act(c, m); });
      const cat::Functor pp = tabulate_between(
          *ec_small, *ec, [&](const Conflation& x) { return efun::p_push(c, efun::p_star(x)); },
          [&](const EMorphism& m) { return efun::p_push(c, efun::p_star(m)); });
      std::vector<cat::Id> eta;
      for (const auto& x : ec_small->objects) {
        // C (+) B -> C (+) B: the C block goes to the section of x, A stays
        // in B, the rest of B goes to C through the deflation.
        const Morphism phi = f1::split_conflation(x);  // A (+) C -> B
        const int b = x.x();
        std::array<std::uint8_t, f1::kMaxSize + 1> t{};
        for (int k = 1; k <= c; ++k) t[k] = static_cast<std::uint8_t>(c + phi(x.u() + k));
        for (int y = 1; y <= b; ++y) {
          const int img = x.deflation(y);
          t[c + y] = static_cast<std::uint8_t>(img ? img : c + y);
        }
        const Morphism beta = Morphism::from_table_unchecked(c + b, c + b, t);
        eta.push_back(ec->id_of_morphism({efun::act(c, x), efun::p_push(c, efun::p_star(x)), beta}));
      }
      detail::record_natural(actc, act, pp, eta, tag);
    });
    if (c == 0) {
      detail::guarded(trivial, tag, [&] {
        const cat::Functor id = cat::Functor::identity(e0->cat);
        const cat::Functor z = tabulate_between(*e0, *e0, [](const Conflation& x) { return efun::z_star(x); },
                                                [](const EMorphism& m) { return efun::z_star(m); });
        const cat::Functor ps = tabulate_between(*e0, *e0, [](const Conflation& x) { return efun::p_star(x); },
                                                 [](const EMorphism& m) { return efun::p_star(m); });
        const cat::Functor pu = tabulate_between(*e0, *e0, [](const Conflation& x) { return efun::p_push(0, x); },
                                                 [](const EMorphism& m) { return efun::p_push(0, m); });
        std::vector<cat::Id> to_z, to_ps, to_pu;
        for (const auto& x : e0->objects) {
          to_z.push_back(e0->id_of_morphism({x, efun::z_star(x), f1::inverse(x.inflation)}));
          to_ps.push_back(e0->id_of_morphism({x, efun::p_star(x), Morphism::identity(x.x())}));
          to_pu.push_back(e0->id_of_morphism({x, efun::p_push(0, x), Morphism::identity(x.x())}));
        }
        detail::record_natural(trivial, id, z, to_z, "z^*");
        detail::record_natural(trivial, id, ps, to_ps, "p^*");
        detail::record_natural(trivial, id, pu, to_pu, "p_*");
      });
    }
  }
  return report;
}

}  // namespace kgw::cons
