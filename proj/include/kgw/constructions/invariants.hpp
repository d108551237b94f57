#pragma once

// K_0, K_0 of the monoid of direct sums, GW_0 = W_0 x GW_H,0, and the
// abelianised fundamental group of the truncated BQ.

#include <algorithm>
#include <string>
#include <vector>

#include "kgw/category/algebra.hpp"
#include "kgw/category/homotopy.hpp"
#include "kgw/constructions/qh.hpp"
#include "kgw/f1/conflation.hpp"
#include "kgw/hermitian/witt.hpp"
#include "kgw/util/report.hpp"

namespace kgw::cons {

// Generators [0], ..., [n]; one relation [X] = [U] + [V] per conflation.
inline cat::AbelianGroupSNF k0(int max_size) {
  f1::check_size(max_size);
  const std::size_t cols = static_cast<std::size_t>(max_size) + 1;
  cat::Matrix rel;
  for (int x = 0; x <= max_size; ++x)
    for (const auto& c : f1::conflations(x)) {
      std::vector<std::int64_t> row(cols, 0);
      row[x] += 1;
      row[c.u()] -= 1;
      row[c.v()] -= 1;
      rel.push_back(std::move(row));
    }
  return cat::cokernel(rel, cols);
}

// pi_0 of the groupoid of sizes <= n under (+): generators 1..n, e_a + e_b = e_{a+b}.
inline cat::CommMonoidPresentation size_monoid(int max_size) {
  f1::check_size(max_size);
  cat::CommMonoidPresentation p;
  for (int k = 1; k <= max_size; ++k) p.generators.push_back(std::to_string(k));
  for (int a = 1; a <= max_size; ++a)
    for (int b = a; a + b <= max_size; ++b) {
      std::vector<std::int64_t> lhs(max_size, 0), rhs(max_size, 0);
      lhs[a - 1] += 1;
      lhs[b - 1] += 1;
      rhs[a + b - 1] = 1;
      p.add_relation(lhs, rhs);
    }
  return p;
}

inline cat::AbelianGroupSNF k0_oplus(int max_size) { return cat::grothendieck_group(size_monoid(max_size)); }

// Abelianised pi_1 of BQ truncated at max_size, based at 0.
inline cat::AbelianGroupSNF bq_pi1(int max_size) {
  const QCategory q = q_category(max_size);
  return cat::abelianize(cat::pi1_presentation(q.cat, q.id_of(0)));
}

struct GW0 {
  int max_size = 0;
  herm::WittMonoid witt;
  cat::CommMonoidPresentation hyperbolic;  // isometry classes of hyperbolic forms under (+)
  cat::AbelianGroupSNF gw_h;
  std::size_t qh_component_count = 0;
  SuiteReport checks;

  // "N x Z" when W_0 is free on one generator and GW_H,0 = Z.
  std::string description() const {
    const bool w_free_one = witt.generator_forms.size() == 1 && witt.presentation.is_free();
    std::string w = w_free_one ? "N" : witt.elements.size() == 1 ? "0" : "W";
    return w + " x " + gw_h.to_string();
  }
};

inline GW0 gw0(int max_size) {
  GW0 out;
  out.max_size = max_size;
  out.witt = herm::witt_monoid(max_size);

  const herm::IsometryClasses classes(max_size);
  std::vector<int> hyp;  // class ids of nonzero hyperbolic classes
  for (int k = 0; k < classes.size(); ++k) {
    const auto& s = classes.representative(k);
    if (s.size() > 0 && s.fixed_points() == 0) {
      hyp.push_back(k);
      out.hyperbolic.generators.push_back(s.to_string());
    }
  }
  auto index_of = [&](int cls) { return static_cast<std::size_t>(std::find(hyp.begin(), hyp.end(), cls) - hyp.begin()); };
  for (std::size_t a = 0; a < hyp.size(); ++a)
    for (std::size_t b = a; b < hyp.size(); ++b) {
      const auto sum = herm::direct_sum(classes.representative(hyp[a]), classes.representative(hyp[b]));
      if (sum.size() > max_size) continue;
      std::vector<std::int64_t> lhs(hyp.size(), 0), rhs(hyp.size(), 0);
      lhs[a] += 1;
      lhs[b] += 1;
      rhs[index_of(classes.class_of(sum))] = 1;
      out.hyperbolic.add_relation(lhs, rhs);
    }
  out.gw_h = cat::grothendieck_group(out.hyperbolic);

  auto& w_check = out.checks.add("W_0 is free on the point with elements 0..n");
  ++w_check.cases;
  const bool w_ok = out.witt.complete && static_cast<int>(out.witt.elements.size()) == max_size + 1 &&
                    (max_size == 0 || (out.witt.generator_forms.size() == 1 &&
                                       out.witt.generator_forms[0] == herm::SymmetricForm::identity(1) &&
                                       out.witt.presentation.is_free()));
  if (!w_ok) w_check.fail("W_0 has " + std::to_string(out.witt.elements.size()) + " elements");

  auto& orders = out.checks.add("|Aut| of each Witt representative is n!");
  for (const auto& e : out.witt.elements) {
    ++orders.cases;
    std::size_t fact = 1;
    for (int k = 2; k <= e.size(); ++k) fact *= static_cast<std::size_t>(k);
    if (herm::isometry_group(e).size() != fact) orders.fail(e.to_string());
  }

  auto& h_check = out.checks.add("GW_H,0 is generated by H(pt)");
  ++h_check.cases;
  const cat::AbelianGroupSNF z{1, {}};
  const bool h_ok = max_size < 2 ? out.gw_h.is_trivial()
                                 : out.gw_h == z && out.hyperbolic.generators.front() == herm::hyperbolic(1).to_string();
  if (!h_ok) h_check.fail("GW_H,0 = " + out.gw_h.to_string());

  auto& comp = out.checks.add("pi_0(Q_h) matches the realizable Witt classes");
  const QhComponents qc = qh_components(max_size);
  out.qh_component_count = qc.components.size();
  ++comp.cases;
  if (qc.components.size() != out.witt.elements.size() || !qc.labels_distinct)
    comp.fail(std::to_string(qc.components.size()) + " components for " +
              std::to_string(out.witt.elements.size()) + " Witt classes");
  out.checks.suite = "gw0[max_size=" + std::to_string(max_size) + "]";
  return out;
}

}  // namespace kgw::cons
