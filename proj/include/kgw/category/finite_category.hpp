#pragma once

// Explicitly enumerated finite categories with dense integer ids.

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgw/util/error.hpp"

namespace kgw::cat {

using Id = std::uint32_t;
inline constexpr Id kNoId = static_cast<Id>(-1);

// structural skips the cubic associativity sweep; closure and units are still
// checked.
enum class Validation { full, structural };

class FiniteCategory {
 public:
  std::size_t num_objects() const { return object_labels_.size(); }
  std::size_t num_morphisms() const { return src_.size(); }

  const std::string& object_label(Id a) const { return object_labels_.at(a); }
  const std::string& morphism_label(Id f) const { return morphism_labels_.at(f); }
  Id src(Id f) const { return src_.at(f); }
  Id dst(Id f) const { return dst_.at(f); }
  Id identity(Id a) const { return identity_.at(a); }
  bool is_identity(Id f) const { return identity_[src_.at(f)] == f; }

  // Morphisms a -> b in increasing id order.
  const std::vector<Id>& homs(Id a, Id b) const {
    check_object(a);
    check_object(b);
    return hom_[a * num_objects() + b];
  }

  Id compose(Id g, Id f) const {
    if (dst(f) != src(g))
      throw TypeMismatch("morphisms " + std::to_string(g) + " and " + std::to_string(f) +
                         " are not composable");
    auto it = comp_.find(key(g, f));
    if (it == comp_.end())
      throw CompositionViolation("no composite recorded for (" + std::to_string(g) + "," +
                                 std::to_string(f) + ")");
    return it->second;
  }

  void check_object(Id a) const {
    if (a >= num_objects()) throw UnknownObject("object id " + std::to_string(a));
  }
  Id find_object(const std::string& label) const {
    for (Id a = 0; a < num_objects(); ++a)
      if (object_labels_[a] == label) return a;
    throw UnknownObject(label);
  }

  // Composable pairs in (g, f) order of ids.
  template <class Fn>
  void for_each_composable(Fn&& fn) const {
    for (Id f = 0; f < num_morphisms(); ++f)
      for (Id c = 0; c < num_objects(); ++c)
        for (Id g : homs(dst_[f], c)) fn(g, f);
  }

  bool is_isomorphism(Id f) const {
    for (Id g : homs(dst(f), src(f)))
      if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(dst(f))) return true;
    return false;
  }

  // Exhaustive associativity, unit and closure checks.
  void validate(Validation level = Validation::full) const {
    for (Id a = 0; a < num_objects(); ++a) {
      const Id e = identity_[a];
      if (e >= num_morphisms() || src_[e] != a || dst_[e] != a)
        throw UnitViolation("identity of object " + object_labels_[a] + " is not an endomorphism");
    }
    for (Id f = 0; f < num_morphisms(); ++f) {
      const Id a = src_[f], b = dst_[f];
      if (compose(identity_[b], f) != f || compose(f, identity_[a]) != f)
        throw UnitViolation("identities do not act trivially on morphism " + morphism_labels_[f]);
    }
    for_each_composable([&](Id g, Id f) {
      const Id h = compose(g, f);
      if (src_[h] != src_[f] || dst_[h] != dst_[g])
        throw CompositionViolation("composite of (" + morphism_labels_[g] + "," + morphism_labels_[f] +
                                   ") has the wrong type");
    });
    if (level == Validation::structural) return;
    for_each_composable([&](Id g, Id f) {
      const Id gf = compose(g, f);
      for (Id c = 0; c < num_objects(); ++c)
        for (Id h : homs(dst_[g], c))
          if (compose(h, gf) != compose(compose(h, g), f))
            throw AssociativityViolation("triple (" + morphism_labels_[h] + "," + morphism_labels_[g] +
                                         "," + morphism_labels_[f] + ")");
    });
  }

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.object_labels_ == b.object_labels_ && a.morphism_labels_ == b.morphism_labels_ &&
           a.src_ == b.src_ && a.dst_ == b.dst_ && a.identity_ == b.identity_ && a.comp_ == b.comp_;
  }

 private:
  friend class CategoryBuilder;
  static std::uint64_t key(Id g, Id f) { return (static_cast<std::uint64_t>(g) << 32) | f; }

  std::vector<std::string> object_labels_;
  std::vector<std::string> morphism_labels_;
  std::vector<Id> src_, dst_;
  std::vector<Id> identity_;
  std::vector<std::vector<Id>> hom_;
  std::unordered_map<std::uint64_t, Id> comp_;
};

// Low-level construction from explicit tables.
class CategoryBuilder {
 public:
  Id add_object(std::string label) {
    c_.object_labels_.push_back(std::move(label));
    c_.identity_.push_back(kNoId);
    return static_cast<Id>(c_.object_labels_.size() - 1);
  }
  Id add_morphism(Id src, Id dst, std::string label) {
    if (src >= c_.num_objects() || dst >= c_.num_objects())
      throw UnknownObject("morphism " + label + " between unknown objects");
    c_.src_.push_back(src);
    c_.dst_.push_back(dst);
    c_.morphism_labels_.push_back(std::move(label));
    return static_cast<Id>(c_.src_.size() - 1);
  }
  void set_identity(Id object, Id morphism) { c_.identity_.at(object) = morphism; }
  void set_composite(Id g, Id f, Id gf) {
    if (g >= c_.num_morphisms() || f >= c_.num_morphisms() || gf >= c_.num_morphisms())
      throw UnknownObject("composite refers to an unknown morphism");
    c_.comp_[FiniteCategory::key(g, f)] = gf;
  }
  std::size_t num_objects() const { return c_.num_objects(); }

  // Indexes hom-sets and verifies the category axioms.
  FiniteCategory build(Validation level = Validation::full) && {
    const std::size_t n = c_.num_objects();
    c_.hom_.assign(n * n, {});
    for (Id f = 0; f < c_.num_morphisms(); ++f) c_.hom_[c_.src_[f] * n + c_.dst_[f]].push_back(f);
    for (Id a = 0; a < n; ++a)
      if (c_.identity_[a] == kNoId) throw UnitViolation("object " + c_.object_labels_[a] + " has no identity");
    c_.for_each_composable([&](Id g, Id f) {
      if (!c_.comp_.count(FiniteCategory::key(g, f)))
        throw CompositionViolation("composition undefined on (" + c_.morphism_labels_[g] + "," +
                                   c_.morphism_labels_[f] + ")");
    });
    if (c_.comp_.size() != count_composable())
      throw CompositionViolation("composite recorded for a non-composable pair");
    c_.validate(level);
    return std::move(c_);
  }

 private:
  std::size_t count_composable() const {
    std::size_t k = 0;
    c_.for_each_composable([&](Id, Id) { ++k; });
    return k;
  }
  FiniteCategory c_;
};

// A category enumerated from value types: objects of type O, morphisms of type
// M, with lookup tables both ways.
template <class O, class M>
struct Enumerated {
  FiniteCategory cat;
  std::vector<O> objects;
  std::vector<M> morphisms;
  std::map<O, Id> object_index;
  std::map<M, Id> morphism_index;

  Id id_of(const O& o) const {
    auto it = object_index.find(o);
    if (it == object_index.end()) throw UnknownObject("object not in the truncation");
    return it->second;
  }
  Id id_of_morphism(const M& m) const {
    auto it = morphism_index.find(m);
    if (it == morphism_index.end()) throw UnknownObject("morphism not in the truncation");
    return it->second;
  }
  bool contains_morphism(const M& m) const { return morphism_index.count(m) != 0; }
};

struct NoLabel {
  template <class T>
  std::string operator()(const T&) const { return {}; }
};

// Builds and validates a category from a hom rule, a composition rule and
// identities. Morphism values must be distinct across the whole category.
template <class O, class M, class HomFn, class CompFn, class IdFn, class OLabel, class MLabel>
Enumerated<O, M> build_category(const std::vector<O>& objects, HomFn&& hom, CompFn&& comp,
                                IdFn&& identity, OLabel&& object_label, MLabel&& morphism_label,
                                Validation level = Validation::full) {
  Enumerated<O, M> out;
  CategoryBuilder b;
  out.objects = objects;
  for (const auto& o : objects) {
    if (!out.object_index.emplace(o, b.add_object(object_label(o))).second)
      throw UnknownObject("duplicate object " + object_label(o));
  }
  std::vector<std::vector<Id>> by_src(objects.size());
  std::vector<Id> src_of, dst_of;
  for (Id a = 0; a < objects.size(); ++a)
    for (Id c = 0; c < objects.size(); ++c)
      for (const M& m : hom(objects[a], objects[c])) {
        const Id id = b.add_morphism(a, c, morphism_label(m));
        if (!out.morphism_index.emplace(m, id).second)
          throw CompositionViolation("duplicate morphism " + morphism_label(m));
        out.morphisms.push_back(m);
        src_of.push_back(a);
        dst_of.push_back(c);
        by_src[a].push_back(id);
      }
  for (Id a = 0; a < objects.size(); ++a) {
    auto it = out.morphism_index.find(identity(objects[a]));
    if (it == out.morphism_index.end()) throw UnitViolation("identity of " + object_label(objects[a]) + " missing");
    b.set_identity(a, it->second);
  }
  for (Id f = 0; f < out.morphisms.size(); ++f)
    for (Id g : by_src[dst_of[f]]) {
      const M h = comp(out.morphisms[g], out.morphisms[f]);
      auto it = out.morphism_index.find(h);
      if (it == out.morphism_index.end() || src_of[it->second] != src_of[f] || dst_of[it->second] != dst_of[g])
        throw CompositionViolation("composite of " + morphism_label(out.morphisms[g]) + " and " +
                                   morphism_label(out.morphisms[f]) + " leaves the hom-set");
      b.set_composite(g, f, it->second);
    }
  out.cat = std::move(b).build(level);
  return out;
}

template <class O, class M, class HomFn, class CompFn, class IdFn>
Enumerated<O, M> build_category(const std::vector<O>& objects, HomFn&& hom, CompFn&& comp, IdFn&& identity) {
  return build_category<O, M>(objects, hom, comp, identity, NoLabel{}, NoLabel{});
}

// One object, morphisms the elements of a group given by its multiplication
// table mult[g][h] = g*h with identity element 0.
inline FiniteCategory one_object_groupoid(const std::vector<std::vector<int>>& mult,
                                          const std::string& name = "*") {
  CategoryBuilder b;
  const Id o = b.add_object(name);
  for (std::size_t g = 0; g < mult.size(); ++g) b.add_morphism(o, o, "g" + std::to_string(g));
  b.set_identity(o, 0);
  for (std::size_t g = 0; g < mult.size(); ++g)
    for (std::size_t h = 0; h < mult.size(); ++h)
      b.set_composite(static_cast<Id>(g), static_cast<Id>(h), static_cast<Id>(mult[g][h]));
  return std::move(b).build();
}

// Objects only, identities only.
inline FiniteCategory discrete_category(std::size_t n) {
  CategoryBuilder b;
  for (std::size_t k = 0; k < n; ++k) {
    const Id o = b.add_object("x" + std::to_string(k));
    const Id e = b.add_morphism(o, o, "id" + std::to_string(k));
    b.set_identity(o, e);
    b.set_composite(e, e, e);
  }
  return std::move(b).build();
}

inline FiniteCategory terminal_category() { return discrete_category(1); }

// Full subcategory on the objects for which keep(a) is true.
inline FiniteCategory full_subcategory(const FiniteCategory& c, const std::function<bool(Id)>& keep,
                                       std::vector<Id>* object_ids = nullptr) {
  CategoryBuilder b;
  std::vector<Id> new_obj(c.num_objects(), kNoId), new_mor(c.num_morphisms(), kNoId);
  std::vector<Id> kept;
  for (Id a = 0; a < c.num_objects(); ++a)
    if (keep(a)) {
      new_obj[a] = b.add_object(c.object_label(a));
      kept.push_back(a);
    }
  for (Id a : kept)
    for (Id d : kept)
      for (Id f : c.homs(a, d)) new_mor[f] = b.add_morphism(new_obj[a], new_obj[d], c.morphism_label(f));
  for (Id a : kept) b.set_identity(new_obj[a], new_mor[c.identity(a)]);
  for (Id a : kept)
    for (Id d : kept)
      for (Id f : c.homs(a, d))
        for (Id e : kept)
          for (Id g : c.homs(d, e)) b.set_composite(new_mor[g], new_mor[f], new_mor[c.compose(g, f)]);
  if (object_ids) *object_ids = kept;
  return std::move(b).build();
}

inline FiniteCategory product(const FiniteCategory& x, const FiniteCategory& y) {
  CategoryBuilder b;
  const std::size_t ny = y.num_objects();
  for (Id a = 0; a < x.num_objects(); ++a)
    for (Id c = 0; c < ny; ++c) b.add_object("(" + x.object_label(a) + "," + y.object_label(c) + ")");
  std::map<std::pair<Id, Id>, Id> id;
  for (Id a = 0; a < x.num_objects(); ++a)
    for (Id c = 0; c < ny; ++c)
      for (Id a2 = 0; a2 < x.num_objects(); ++a2)
        for (Id c2 = 0; c2 < ny; ++c2)
          for (Id f : x.homs(a, a2))
            for (Id g : y.homs(c, c2))
              id[{f, g}] = b.add_morphism(a * static_cast<Id>(ny) + c, a2 * static_cast<Id>(ny) + c2,
                                          "(" + x.morphism_label(f) + "," + y.morphism_label(g) + ")");
  for (Id a = 0; a < x.num_objects(); ++a)
    for (Id c = 0; c < ny; ++c) b.set_identity(a * static_cast<Id>(ny) + c, id.at({x.identity(a), y.identity(c)}));
  for (const auto& [fg, m] : id)
    for (Id f2 = 0; f2 < x.num_morphisms(); ++f2) {
      if (x.src(f2) != x.dst(fg.first)) continue;
      for (Id c = 0; c < ny; ++c)
        for (Id g2 : y.homs(y.dst(fg.second), c))
          b.set_composite(id.at({f2, g2}), m, id.at({x.compose(f2, fg.first), y.compose(g2, fg.second)}));
    }
  return std::move(b).build();
}

}  // namespace kgw::cat
