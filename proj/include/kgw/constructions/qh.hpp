#pragma once

// The hermitian Q-construction truncated at a carrier size, its forgetful
// functor to Q, its connected components, and the splitting of the component
// of an isotropically simple S as BG_S x Q_H.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "kgw/category/functor.hpp"
#include "kgw/category/homotopy.hpp"
#include "kgw/constructions/q.hpp"
#include "kgw/hermitian/isotropic.hpp"
#include "kgw/util/report.hpp"

namespace kgw::cons {

using herm::SymmetricForm;

struct QhMorphism {
  SymmetricForm src;
  SymmetricForm dst;
  QSpan span;

  std::string to_string() const { return src.to_string() + " => " + dst.to_string() + " via " + span.to_string(); }
  friend auto operator<=>(const QhMorphism&, const QhMorphism&) = default;
  friend bool operator==(const QhMorphism&, const QhMorphism&) = default;
};

// j coisotropic, and E, N, M, P(E) bicartesian.
inline bool is_qh_morphism(const SymmetricForm& m, const SymmetricForm& n, const QSpan& s) {
  if (s.src != m.size() || s.dst != n.size()) return false;
  const Morphism j = s.j();
  const Morphism pj_psi = f1::compose(f1::dualize(j), n.psi());
  const Morphism u = f1::subset_inclusion(pj_psi.kernel(), n.size());
  try {
    herm::make_isotropic(n, u);
  } catch (const NotIsotropic&) {
    return false;
  }
  const f1::Square sq{j, s.p, pj_psi, f1::compose(f1::dualize(s.p), m.psi())};
  return f1::is_bicartesian(sq);
}

inline std::vector<QhMorphism> qh_hom(const SymmetricForm& m, const SymmetricForm& n) {
  std::vector<QhMorphism> out;
  for (const auto& s : q_hom(m.size(), n.size()))
    if (is_qh_morphism(m, n, s)) out.push_back({m, n, s});
  return out;
}

inline QhMorphism qh_compose(const QhMorphism& g, const QhMorphism& f) {
  if (f.dst != g.src) throw TypeMismatch("Q_h morphisms are not composable");
  return {f.src, g.dst, q_compose(g.span, f.span)};
}

inline QhMorphism qh_identity(const SymmetricForm& m) { return {m, m, QSpan::identity(m.size())}; }

using QhCategory = cat::Enumerated<SymmetricForm, QhMorphism>;

inline QhCategory qh_category_on(const std::vector<SymmetricForm>& objects) {
  return cat::build_category<SymmetricForm, QhMorphism>(
      objects, qh_hom, qh_compose, qh_identity, [](const SymmetricForm& s) { return s.to_string(); },
      [](const QhMorphism& m) { return m.span.to_string(); });
}

inline std::vector<SymmetricForm> forms_up_to(int max_size) {
  std::vector<SymmetricForm> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& s : herm::enumerate_forms(n)) out.push_back(s);
  return out;
}

inline QhCategory qh_category(int max_size) { return qh_category_on(forms_up_to(max_size)); }

// Q_H: the hyperbolic (fixed-point-free) forms.
inline QhCategory qh_hyperbolic_category(int max_size) {
  std::vector<SymmetricForm> objects;
  for (const auto& s : forms_up_to(max_size))
    if (s.fixed_points() == 0) objects.push_back(s);
  return qh_category_on(objects);
}

// Q_h with Q and the forgetful functor, kept at stable addresses.
struct HermitianQ {
  std::shared_ptr<const QhCategory> qh;
  std::shared_ptr<const QCategory> q;
  cat::Functor forget;
};

inline HermitianQ hermitian_q(int max_size) {
  HermitianQ h;
  h.qh = std::make_shared<const QhCategory>(qh_category(max_size));
  h.q = std::make_shared<const QCategory>(q_category(max_size));
  const auto& qh = *h.qh;
  const auto& q = *h.q;
  h.forget = cat::Functor::tabulate(
      qh.cat, q.cat, [&](cat::Id a) { return q.id_of(qh.objects[a].size()); },
      [&](cat::Id m) { return q.id_of_morphism(qh.morphisms[m].span); });
  return h;
}

struct QhComponents {
  cat::Components components;
  std::vector<int> fixed_points;  // per component, -1 if mixed
  bool labels_distinct = true;
};

inline QhComponents qh_components(const QhCategory& qh) {
  QhComponents out;
  out.components = cat::pi0(qh.cat);
  std::set<int> seen;
  for (const auto& members : out.components.members) {
    int fp = qh.objects[members.front()].fixed_points();
    for (cat::Id a : members)
      if (qh.objects[a].fixed_points() != fp) fp = -1;
    out.fixed_points.push_back(fp);
    if (fp < 0 || !seen.insert(fp).second) out.labels_distinct = false;
  }
  return out;
}

inline QhComponents qh_components(int max_size) { return qh_components(qh_category(max_size)); }

// Aut(S) as a one-object groupoid with the identity at index 0.
struct IsometryGroupoid {
  cat::FiniteCategory cat;
  std::vector<Morphism> elements;
};

inline IsometryGroupoid isometry_groupoid(const SymmetricForm& s) {
  IsometryGroupoid g;
  g.elements = herm::isometry_group(s);
  auto id = std::find(g.elements.begin(), g.elements.end(), Morphism::identity(s.size()));
  std::rotate(g.elements.begin(), id, id + 1);
  std::map<Morphism, int> index;
  for (std::size_t k = 0; k < g.elements.size(); ++k) index[g.elements[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> mult(g.elements.size(), std::vector<int>(g.elements.size()));
  for (std::size_t a = 0; a < g.elements.size(); ++a)
    for (std::size_t b = 0; b < g.elements.size(); ++b)
      mult[a][b] = index.at(f1::compose(g.elements[a], g.elements[b]));
  g.cat = cat::one_object_groupoid(mult, s.to_string());
  return g;
}

// eta : BG_S x Q_H -> Q^S, (phi, E) |-> (id_S (+) pi, phi (+) j), certified as
// an equivalence. Q^S is the full subcategory of forms isometric to S (+) H(V)
// within the truncation.
inline SuiteReport eta_suite(const SymmetricForm& s, int max_size) {
  if (!herm::is_isotropically_simple(s)) throw InvalidForm(s.to_string() + " is not isotropically simple");
  SuiteReport report{"eta[S=" + s.to_string() + ",max_size=" + std::to_string(max_size) + "]"};
  auto& functor = report.add("eta is a functor");
  auto& full = report.add("eta is full");
  auto& faithful = report.add("eta is faithful");
  auto& ess = report.add("eta is essentially surjective");
  auto& sizes = report.add("|Aut(S)| = |S|!");

  std::vector<SymmetricForm> qs_objects, qh_objects;
  for (const auto& f : forms_up_to(max_size)) {
    if (f.fixed_points() == s.size()) qs_objects.push_back(f);
    if (f.fixed_points() == 0 && f.size() + s.size() <= max_size) qh_objects.push_back(f);
  }
  const QhCategory qs = qh_category_on(qs_objects);
  const QhCategory qhyp = qh_category_on(qh_objects);
  const IsometryGroupoid bg = isometry_groupoid(s);
  ++sizes.cases;
  std::size_t fact = 1;
  for (int k = 2; k <= s.size(); ++k) fact *= static_cast<std::size_t>(k);
  if (bg.elements.size() != fact) sizes.fail(std::to_string(bg.elements.size()));
  const cat::FiniteCategory prod = cat::product(bg.cat, qhyp.cat);

  // product ids: object (0, c) is c; morphism (g, f) in insertion order
  std::vector<std::pair<cat::Id, cat::Id>> prod_mor;
  for (cat::Id c = 0; c < qhyp.cat.num_objects(); ++c)
    for (cat::Id c2 = 0; c2 < qhyp.cat.num_objects(); ++c2)
      for (cat::Id g : bg.cat.homs(0, 0))
        for (cat::Id f : qhyp.cat.homs(c, c2)) prod_mor.emplace_back(g, f);
  cat::Functor eta;
  try {
    eta = cat::Functor::tabulate(
      prod, qs.cat, [&](cat::Id a) { return qs.id_of(herm::direct_sum(s, qhyp.objects[a])); },
      [&](cat::Id m) {
        const auto [g, f] = prod_mor.at(m);
        const QhMorphism& h = qhyp.morphisms[f];
        const QSpan sp = QSpan::make(f1::direct_sum(Morphism::identity(s.size()), h.span.p),
                                     f1::direct_sum(bg.elements[g], h.span.j()));
        return qs.id_of_morphism({herm::direct_sum(s, h.src), herm::direct_sum(s, h.dst), sp});
      });
  } catch (const UnknownObject& err) {
    functor.fail(err.what());
    return report;
  }
  const cat::EquivalenceCheck e = cat::check_equivalence(eta);
  for (auto [check, result] : {std::pair{&functor, &e.functoriality}, {&full, &e.full}, {&faithful, &e.faithful},
                               {&ess, &e.ess_surjective}}) {
    check->cases += prod.num_morphisms();
    if (!result->holds) check->fail(result->witness);
  }
  return report;
}

}  // namespace kgw::cons
