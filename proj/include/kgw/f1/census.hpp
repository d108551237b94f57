#pragma once

// Census of conflations: unique splittings, sections and retractions, and the
// combinatorial decomposition of inflations.

#include <string>

#include "kgw/f1/conflation.hpp"
#include "kgw/util/report.hpp"

namespace kgw::f1 {

inline SuiteReport splitting_census(int max_size) {
  SuiteReport report{"splitting[max_size=" + std::to_string(max_size) + "]"};
  auto& unique = report.add("every conflation has exactly one splitting");
  auto& bij = report.add("sections, retractions and splittings correspond");
  for (int x = 0; x <= max_size; ++x)
    for (const auto& c : conflations(x)) {
      ++unique.cases;
      const auto splits = all_splittings(c);
      if (splits.size() != 1) {
        unique.fail(c.to_string() + " has " + std::to_string(splits.size()) + " splittings");
        continue;
      }
      if (splits[0] != split_conflation(c)) unique.fail(c.to_string() + " constructed splitting differs");
      ++bij.cases;
      const auto secs = sections(c);
      const auto rets = retractions(c);
      const Morphism& phi = splits[0];
      if (secs.size() != 1 || rets.size() != 1 ||
          secs[0] != compose(phi, inclusion_second(c.u(), c.v())) ||
          rets[0] != compose(projection_first(c.u(), c.v()), inverse(phi)))
        bij.fail(c.to_string() + ": " + std::to_string(secs.size()) + " sections, " +
                 std::to_string(rets.size()) + " retractions");
    }
  auto& comb = report.add("inflations and deflations decompose blockwise");
  auto& piso = report.add("pi_X∘phi inflation implies pi_Y∘phi = 0");
  for (int x1 = 0; x1 <= max_size; ++x1)
    for (int x2 = 0; x1 + x2 <= max_size; ++x2)
      for (int u = 0; u <= x1 + x2; ++u)
        for_each_morphism(u, x1 + x2, HomFilter::inflations, [&](const Morphism& i) {
          ++comb.cases;
          const auto d = decompose_inflation(i, x1);
          if (compose(direct_sum(d.first, d.second), d.sort) != i || !is_iso(d.sort))
            comb.fail("inflation " + i.to_string());
          const Morphism p = dualize(i);
          const auto e = decompose_deflation(p, x1);
          if (compose(e.sort, direct_sum(e.first, e.second)) != p || !is_deflation(e.first) ||
              !is_deflation(e.second))
            comb.fail("deflation " + p.to_string());
          ++piso.cases;
          if (is_inflation(compose(projection_first(x1, x2), i)) &&
              !compose(projection_second(x1, x2), i).is_zero())
            piso.fail(i.to_string());
          if (is_deflation(compose(p, inclusion_first(x1, x2))) &&
              !compose(p, inclusion_second(x1, x2)).is_zero())
            piso.fail("dual " + p.to_string());
        });
  return report;
}

}  // namespace kgw::f1
