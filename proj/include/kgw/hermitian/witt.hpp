#pragma once

// The Witt monoid: isometry classes of forms modulo metabolic forms, computed
// over all forms up to a size bound.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "kgw/category/algebra.hpp"
#include "kgw/hermitian/decomposition.hpp"

namespace kgw::herm {

// Indexed by the size of the isotropically simple part, which is an identity
// form for pointed sets.
struct WittClass {
  int fixed_point_count = 0;
  friend auto operator<=>(const WittClass&, const WittClass&) = default;
};

inline WittClass witt_class(const SymmetricForm& s) {
  return {iso_simple_decomposition(s).simple.size()};
}

// Isometry classes of all forms up to a size, keyed by value.
class IsometryClasses {
 public:
  explicit IsometryClasses(int max_size) : max_size_(max_size) {
    for (int n = 0; n <= max_size; ++n)
      for (const auto& s : enumerate_forms(n)) {
        const SymmetricForm c = canonical_representative(s);
        auto [it, fresh] = index_.try_emplace(c.psi(), static_cast<int>(reps_.size()));
        if (fresh) reps_.push_back(c);
        class_of_[s.psi()] = it->second;
      }
  }
  int max_size() const { return max_size_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const SymmetricForm& representative(int k) const { return reps_.at(k); }
  int class_of(const SymmetricForm& s) const {
    auto it = class_of_.find(s.psi());
    if (it == class_of_.end()) throw SizeLimit(s.to_string() + " exceeds the enumerated range");
    return it->second;
  }

 private:
  int max_size_;
  std::vector<SymmetricForm> reps_;
  std::map<Morphism, int> index_;
  std::map<Morphism, int> class_of_;
};

struct WittMonoid {
  int max_size = 0;
  std::vector<SymmetricForm> elements;       // least representative per element, ascending size
  std::vector<int> element_of_class;         // isometry class -> element
  std::vector<SymmetricForm> generator_forms;
  cat::CommMonoidPresentation presentation;
  std::vector<std::vector<std::int64_t>> coordinates;  // element -> first vector reaching it
  bool complete = true;                                // every element is reached by a vector
};

// M ~ N iff M (+) A ≅ N (+) B for metabolic A, B; only sums of total size at
// most max_size are seen. Generators are the nonzero elements that are not a
// sum of two nonzero elements; relations are distinct generator vectors that
// land on the same element.
inline WittMonoid witt_monoid(int max_size) {
  f1::check_size(max_size);
  const IsometryClasses classes(max_size);
  const int nc = classes.size();
  std::vector<bool> metabolic(nc);
  for (int k = 0; k < nc; ++k) metabolic[k] = is_metabolic(classes.representative(k));

  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a), b = find(b);
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };
  auto sum_class = [&](int a, int b) {
    return classes.class_of(direct_sum(classes.representative(a), classes.representative(b)));
  };
  auto size_of = [&](int k) { return classes.representative(k).size(); };
  for (int m = 0; m < nc; ++m)
    for (int a = 0; a < nc; ++a)
      if (metabolic[a] && size_of(m) + size_of(a) <= max_size) unite(m, sum_class(m, a));

  WittMonoid w;
  w.max_size = max_size;
  w.element_of_class.assign(nc, -1);
  std::vector<int> root_element(nc, -1);
  for (int k = 0; k < nc; ++k) {  // classes arrive in ascending size
    const int r = find(k);
    if (root_element[r] < 0) {
      root_element[r] = static_cast<int>(w.elements.size());
      w.elements.push_back(classes.representative(k));
    }
    w.element_of_class[k] = root_element[r];
  }
  const int ne = static_cast<int>(w.elements.size());
  auto element_of = [&](const SymmetricForm& s) { return w.element_of_class[classes.class_of(s)]; };
  const int zero = element_of(SymmetricForm::zero());

  std::vector<bool> decomposable(ne, false);
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      if (size_of(a) + size_of(b) > max_size) continue;
      if (w.element_of_class[a] == zero || w.element_of_class[b] == zero) continue;
      decomposable[w.element_of_class[sum_class(a, b)]] = true;
    }
  for (int e = 0; e < ne; ++e)
    if (e != zero && !decomposable[e]) {
      w.generator_forms.push_back(w.elements[e]);
      w.presentation.generators.push_back(w.elements[e].to_string());
    }

  // all generator vectors whose realising form fits in max_size
  const std::size_t ng = w.generator_forms.size();
  w.coordinates.assign(ne, {});
  std::vector<bool> reached(ne, false);
  std::vector<std::int64_t> v(ng, 0);
  std::function<void(std::size_t, const SymmetricForm&)> rec = [&](std::size_t g, const SymmetricForm& acc) {
    if (g == ng) {
      const int e = element_of(acc);
      if (!reached[e]) w.coordinates[e] = v;
      reached[e] = true;
      w.presentation.add_relation(w.coordinates[e], v);
      return;
    }
    SymmetricForm cur = acc;
    for (std::int64_t k = 0;; ++k) {
      v[g] = k;
      rec(g + 1, cur);
      if (cur.size() + w.generator_forms[g].size() > max_size) break;
      cur = direct_sum(cur, w.generator_forms[g]);
    }
    v[g] = 0;
  };
  rec(0, SymmetricForm::zero());
  w.complete = std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
  return w;
}

}  // namespace kgw::herm
