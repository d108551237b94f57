#pragma once

// Connected components and fundamental groups of classifying spaces of finite
// categories, read off the 2-skeleton of the nerve.

#include <algorithm>
#include <deque>
#include <numeric>
#include <vector>

#include "kgw/category/algebra.hpp"
#include "kgw/category/finite_category.hpp"

namespace kgw::cat {

struct Components {
  std::vector<Id> component_of;            // object -> component index
  std::vector<std::vector<Id>> members;    // ascending; members[k][0] is the representative

  std::size_t size() const { return members.size(); }
  Id representative(Id object) const { return members.at(component_of.at(object)).front(); }
};

inline Components pi0(const FiniteCategory& c) {
  std::vector<Id> parent(c.num_objects());
  std::iota(parent.begin(), parent.end(), Id{0});
  auto find = [&](Id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Id f = 0; f < c.num_morphisms(); ++f) {
    Id a = find(c.src(f)), b = find(c.dst(f));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // keep the least id as root
  }
  Components out;
  out.component_of.assign(c.num_objects(), kNoId);
  std::vector<Id> index_of_root(c.num_objects(), kNoId);
  for (Id a = 0; a < c.num_objects(); ++a) {
    const Id r = find(a);
    if (index_of_root[r] == kNoId) {
      index_of_root[r] = static_cast<Id>(out.members.size());
      out.members.emplace_back();
    }
    out.component_of[a] = index_of_root[r];
    out.members[index_of_root[r]].push_back(a);
  }
  return out;
}

// Generators: the morphisms of the basepoint's component, in id order.
// Relations: identities, edges of the BFS spanning tree (neighbours visited by
// least morphism id), and f·g·(g∘f)^-1 for every composable pair.
inline GroupPresentation pi1_presentation(const FiniteCategory& c, Id basepoint) {
  c.check_object(basepoint);
  const Components comps = pi0(c);
  const Id comp = comps.component_of[basepoint];
  std::vector<Id> gen_of(c.num_morphisms(), kNoId);
  GroupPresentation p;
  for (Id f = 0; f < c.num_morphisms(); ++f)
    if (comps.component_of[c.src(f)] == comp) {
      gen_of[f] = static_cast<Id>(p.generators.size());
      p.generators.push_back(c.morphism_label(f).empty() ? "m" + std::to_string(f) : c.morphism_label(f));
    }
  auto letter = [&](Id f) { return static_cast<int>(gen_of[f]) + 1; };

  // incident morphisms per object, ascending
  std::vector<std::vector<Id>> incident(c.num_objects());
  for (Id f = 0; f < c.num_morphisms(); ++f)
    if (gen_of[f] != kNoId) {
      incident[c.src(f)].push_back(f);
      if (c.dst(f) != c.src(f)) incident[c.dst(f)].push_back(f);
    }
  for (auto& v : incident) std::sort(v.begin(), v.end());
  std::vector<bool> seen(c.num_objects(), false);
  std::deque<Id> queue{basepoint};
  seen[basepoint] = true;
  while (!queue.empty()) {
    const Id x = queue.front();
    queue.pop_front();
    for (Id f : incident[x]) {
      const Id y = c.src(f) == x ? c.dst(f) : c.src(f);
      if (seen[y]) continue;
      seen[y] = true;
      p.relations.push_back({letter(f)});
      queue.push_back(y);
    }
  }
  for (Id a : comps.members[comp]) p.relations.push_back({letter(c.identity(a))});
  c.for_each_composable([&](Id g, Id f) {
    if (gen_of[f] == kNoId) return;
    p.relations.push_back({letter(f), letter(g), -letter(c.compose(g, f))});
  });
  return p;
}

}  // namespace kgw::cat
