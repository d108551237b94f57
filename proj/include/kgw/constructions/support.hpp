#pragma once

// Helpers for suites that tabulate functors between enumerated categories and
// record equivalence and naturality certificates.

#include <string>
#include <vector>

#include "kgw/category/functor.hpp"
#include "kgw/util/error.hpp"
#include "kgw/util/report.hpp"

namespace kgw::cons {

// Tabulates a functor from value-level rules on objects and morphisms.
template <class S, class T, class ObjFn, class MorFn>
cat::Functor tabulate_between(const S& s, const T& t, ObjFn&& obj, MorFn&& mor) {
  return cat::Functor::tabulate(
      s.cat, t.cat, [&](cat::Id a) { return t.id_of(obj(s.objects[a])); },
      [&](cat::Id m) { return t.id_of_morphism(mor(s.morphisms[m])); });
}

namespace detail {
inline void record_equivalence(CheckResult& r, const cat::Functor& f, const std::string& what) {
  const cat::EquivalenceCheck e = cat::check_equivalence(f);
  r.cases += f.source->num_morphisms() + f.source->num_objects();
  if (!e.is_equivalence()) r.fail(what + ": " + e.witness());
}
inline void record_natural(CheckResult& r, const cat::Functor& f, const cat::Functor& g,
                           const std::vector<cat::Id>& eta, const std::string& what) {
  r.cases += f.source->num_morphisms();
  const std::string w = cat::check_natural_transformation(f, g, eta, true);
  if (!w.empty()) r.fail(what + ": " + w);
}
template <class Fn>
void guarded(CheckResult& r, const std::string& what, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    r.fail(what + ": " + e.what());
  }
}
}  // namespace detail

}  // namespace kgw::cons
