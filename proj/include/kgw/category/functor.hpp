#pragma once

// Functors between finite categories, exhaustive equivalence checks, natural
// transformations and comma categories.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "kgw/category/finite_category.hpp"

namespace kgw::cat {

struct Functor {
  const FiniteCategory* source = nullptr;
  const FiniteCategory* target = nullptr;
  std::vector<Id> object_map;
  std::vector<Id> morphism_map;

  Id operator()(Id object) const { return object_map.at(object); }
  Id on_morphism(Id f) const { return morphism_map.at(f); }

  // Tabulates F from callbacks on ids.
  template <class ObjFn, class MorFn>
  static Functor tabulate(const FiniteCategory& s, const FiniteCategory& t, ObjFn&& obj, MorFn&& mor) {
    Functor f{&s, &t, {}, {}};
    f.object_map.reserve(s.num_objects());
    for (Id a = 0; a < s.num_objects(); ++a) f.object_map.push_back(obj(a));
    f.morphism_map.reserve(s.num_morphisms());
    for (Id m = 0; m < s.num_morphisms(); ++m) f.morphism_map.push_back(mor(m));
    return f;
  }
  static Functor identity(const FiniteCategory& c) {
    return tabulate(c, c, [](Id a) { return a; }, [](Id m) { return m; });
  }
};

inline Functor compose(const Functor& g, const Functor& f) {
  if (f.target != g.source) throw TypeMismatch("functors are not composable");
  return Functor::tabulate(*f.source, *g.target, [&](Id a) { return g(f(a)); },
                           [&](Id m) { return g.on_morphism(f.on_morphism(m)); });
}

enum class FunctorMode { functoriality, full, faithful, ess_surjective };

inline const char* to_string(FunctorMode m) {
  switch (m) {
    case FunctorMode::functoriality: return "functoriality";
    case FunctorMode::full: return "full";
    case FunctorMode::faithful: return "faithful";
    case FunctorMode::ess_surjective: return "essentially surjective";
  }
  return "?";
}

struct FunctorCheck {
  FunctorMode mode;
  bool holds = true;
  std::string witness;
};

// Isomorphism classes of objects: component label per object.
inline std::vector<Id> isomorphism_classes(const FiniteCategory& c) {
  std::vector<Id> cls(c.num_objects(), kNoId);
  for (Id a = 0; a < c.num_objects(); ++a) {
    if (cls[a] != kNoId) continue;
    cls[a] = a;
    for (Id b = a + 1; b < c.num_objects(); ++b) {
      if (cls[b] != kNoId) continue;
      for (Id f : c.homs(a, b))
        if (c.is_isomorphism(f)) {
          cls[b] = a;
          break;
        }
    }
  }
  return cls;
}

inline FunctorCheck check_functor(const Functor& F, FunctorMode mode) {
  FunctorCheck r{mode, true, {}};
  const FiniteCategory& s = *F.source;
  const FiniteCategory& t = *F.target;
  auto fail = [&](std::string w) {
    if (r.holds) r.witness = std::move(w);
    r.holds = false;
  };
  if (F.object_map.size() != s.num_objects() || F.morphism_map.size() != s.num_morphisms()) {
    fail("functor tables do not cover the source category");
    return r;
  }
  switch (mode) {
    case FunctorMode::functoriality: {
      for (Id a = 0; a < s.num_objects() && r.holds; ++a) {
        if (F(a) >= t.num_objects()) fail("object " + s.object_label(a) + " maps outside the target");
        else if (F.on_morphism(s.identity(a)) != t.identity(F(a)))
          fail("identity of " + s.object_label(a) + " not preserved");
      }
      for (Id m = 0; m < s.num_morphisms() && r.holds; ++m) {
        const Id fm = F.on_morphism(m);
        if (fm >= t.num_morphisms() || t.src(fm) != F(s.src(m)) || t.dst(fm) != F(s.dst(m)))
          fail("morphism " + s.morphism_label(m) + " is sent to a morphism of the wrong type");
      }
      if (!r.holds) return r;
      s.for_each_composable([&](Id g, Id f) {
        if (!r.holds) return;
        if (F.on_morphism(s.compose(g, f)) != t.compose(F.on_morphism(g), F.on_morphism(f)))
          fail("composition not preserved on (" + s.morphism_label(g) + ", " + s.morphism_label(f) + ")");
      });
      break;
    }
    case FunctorMode::full:
    case FunctorMode::faithful: {
      for (Id a = 0; a < s.num_objects() && r.holds; ++a)
        for (Id b = 0; b < s.num_objects() && r.holds; ++b) {
          std::set<Id> image;
          for (Id m : s.homs(a, b)) image.insert(F.on_morphism(m));
          if (mode == FunctorMode::faithful && image.size() != s.homs(a, b).size())
            fail("two morphisms " + s.object_label(a) + " -> " + s.object_label(b) + " have the same image");
          if (mode == FunctorMode::full && image.size() != t.homs(F(a), F(b)).size())
            fail("Hom(" + s.object_label(a) + ", " + s.object_label(b) + ") misses " +
                 std::to_string(t.homs(F(a), F(b)).size() - image.size()) + " target morphisms");
        }
      break;
    }
    case FunctorMode::ess_surjective: {
      const auto cls = isomorphism_classes(t);
      std::set<Id> hit;
      for (Id a = 0; a < s.num_objects(); ++a) hit.insert(cls.at(F(a)));
      for (Id b = 0; b < t.num_objects(); ++b)
        if (!hit.count(cls[b])) {
          fail("object " + t.object_label(b) + " is not isomorphic to any image");
          break;
        }
      break;
    }
  }
  return r;
}

struct EquivalenceCheck {
  FunctorCheck functoriality{FunctorMode::functoriality, true, {}};
  FunctorCheck full{FunctorMode::full, true, {}};
  FunctorCheck faithful{FunctorMode::faithful, true, {}};
  FunctorCheck ess_surjective{FunctorMode::ess_surjective, true, {}};
  bool is_equivalence() const {
    return functoriality.holds && full.holds && faithful.holds && ess_surjective.holds;
  }
  std::string witness() const {
    for (const auto* c : {&functoriality, &full, &faithful, &ess_surjective})
      if (!c->holds) return std::string(to_string(c->mode)) + ": " + c->witness;
    return {};
  }
};

inline EquivalenceCheck check_equivalence(const Functor& F) {
  EquivalenceCheck e;
  e.functoriality = check_functor(F, FunctorMode::functoriality);
  if (!e.functoriality.holds) return e;
  e.full = check_functor(F, FunctorMode::full);
  e.faithful = check_functor(F, FunctorMode::faithful);
  e.ess_surjective = check_functor(F, FunctorMode::ess_surjective);
  return e;
}

// eta : F => G with eta[a] : F(a) -> G(a). Empty string on success, else a
// witness.
inline std::string check_natural_transformation(const Functor& F, const Functor& G,
                                                const std::vector<Id>& eta, bool require_iso) {
  const FiniteCategory& s = *F.source;
  const FiniteCategory& t = *F.target;
  if (G.source != F.source || G.target != F.target) return "functors have different source or target";
  if (eta.size() != s.num_objects()) return "one component per object required";
  for (Id a = 0; a < s.num_objects(); ++a) {
    if (eta[a] >= t.num_morphisms() || t.src(eta[a]) != F(a) || t.dst(eta[a]) != G(a))
      return "component at " + s.object_label(a) + " has the wrong type";
    if (require_iso && !t.is_isomorphism(eta[a])) return "component at " + s.object_label(a) + " is not invertible";
  }
  for (Id m = 0; m < s.num_morphisms(); ++m) {
    const Id a = s.src(m), b = s.dst(m);
    if (t.compose(G.on_morphism(m), eta[a]) != t.compose(eta[b], F.on_morphism(m)))
      return "naturality fails at " + s.morphism_label(m);
  }
  return {};
}

// Right comma category d / F: objects (c, alpha : d -> F(c)), morphisms
// u : c -> c' with F(u)∘alpha = alpha'.
struct CommaCategory {
  FiniteCategory cat;
  std::vector<std::pair<Id, Id>> objects;  // (c, alpha)
  std::vector<Id> underlying;              // morphism -> u in the source
  Id find(Id c, Id alpha) const {
    for (Id k = 0; k < objects.size(); ++k)
      if (objects[k] == std::pair{c, alpha}) return k;
    throw UnknownObject("comma object");
  }
};

inline CommaCategory comma_category(const Functor& F, Id d) {
  const FiniteCategory& s = *F.source;
  const FiniteCategory& t = *F.target;
  t.check_object(d);
  CommaCategory out;
  CategoryBuilder b;
  for (Id c = 0; c < s.num_objects(); ++c)
    for (Id alpha : t.homs(d, F(c))) {
      out.objects.emplace_back(c, alpha);
      b.add_object("(" + s.object_label(c) + "," + t.morphism_label(alpha) + ")");
    }
  const Id n = static_cast<Id>(out.objects.size());
  std::vector<std::vector<Id>> hom(static_cast<std::size_t>(n) * n);
  std::map<std::pair<Id, Id>, Id> by_endpoints_u;  // (source comma object, u) -> id
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      const auto [c, alpha] = out.objects[x];
      const auto [c2, alpha2] = out.objects[y];
      for (Id u : s.homs(c, c2))
        if (t.compose(F.on_morphism(u), alpha) == alpha2) {
          const Id m = b.add_morphism(x, y, s.morphism_label(u));
          out.underlying.push_back(u);
          hom[x * n + y].push_back(m);
          by_endpoints_u[{x, u}] = m;
        }
    }
  for (Id x = 0; x < n; ++x) b.set_identity(x, by_endpoints_u.at({x, s.identity(out.objects[x].first)}));
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      for (Id f : hom[x * n + y])
        for (Id z = 0; z < n; ++z)
          for (Id g : hom[y * n + z])
            b.set_composite(g, f, by_endpoints_u.at({x, s.compose(out.underlying[g], out.underlying[f])}));
  out.cat = std::move(b).build();
  return out;
}

// Coslice d \ C computed directly: objects are arrows out of d.
inline FiniteCategory coslice(const FiniteCategory& c, Id d) {
  c.check_object(d);
  CategoryBuilder b;
  std::vector<Id> arrows;
  for (Id x = 0; x < c.num_objects(); ++x)
    for (Id a : c.homs(d, x)) {
      arrows.push_back(a);
      b.add_object(c.morphism_label(a));
    }
  std::map<std::pair<Id, Id>, Id> mor;  // (source arrow index, u)
  for (Id i = 0; i < arrows.size(); ++i)
    for (Id j = 0; j < arrows.size(); ++j)
      for (Id u : c.homs(c.dst(arrows[i]), c.dst(arrows[j])))
        if (c.compose(u, arrows[i]) == arrows[j]) mor[{i, u}] = b.add_morphism(i, j, c.morphism_label(u));
  for (Id i = 0; i < arrows.size(); ++i) b.set_identity(i, mor.at({i, c.identity(c.dst(arrows[i]))}));
  for (const auto& [iu, m] : mor) {
    const Id mid = [&] {
      const Id tgt = c.compose(iu.second, arrows[iu.first]);
      return static_cast<Id>(std::find(arrows.begin(), arrows.end(), tgt) - arrows.begin());
    }();
    for (Id v = 0; v < c.num_morphisms(); ++v) {
      if (c.src(v) != c.dst(iu.second)) continue;
      auto it = mor.find({mid, v});
      if (it != mor.end()) b.set_composite(it->second, m, mor.at({iu.first, c.compose(v, iu.second)}));
    }
  }
  return std::move(b).build();
}

}  // namespace kgw::cat
