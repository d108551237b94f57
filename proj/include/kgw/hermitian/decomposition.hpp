#pragma once

// M ≅ H(U) (+) N with N isotropically simple, by repeatedly splitting off a
// hyperbolic summand.

#include <functional>
#include <string>
#include <vector>

#include "kgw/hermitian/isotropic.hpp"
#include "kgw/util/parallel.hpp"
#include "kgw/util/report.hpp"

namespace kgw::herm {

struct Decomposition {
  int hyperbolic_rank = 0;   // |U|
  SymmetricForm simple;      // N
  Isometry isometry;         // S -> H(U) (+) N

  SymmetricForm target() const { return direct_sum(hyperbolic(hyperbolic_rank), simple); }
  // "H(1) ⊕ id_1", "H(0)", "id_3"
  std::string to_string() const {
    std::string n = "id_" + std::to_string(simple.size());
    if (hyperbolic_rank == 0) return simple.size() ? n : "H(0)";
    std::string h = "H(" + std::to_string(hyperbolic_rank) + ")";
    return simple.size() ? h + " ⊕ " + n : h;
  }
};

// H(A) (+) H(B) -> H(A (+) B): blocks A, P(A), B, P(B) to A, B, P(A), P(B).
inline Isometry hyperbolic_shuffle(int a, int b) {
  std::array<std::uint8_t, f1::kMaxSize + 1> t{};
  for (int k = 1; k <= a; ++k) {
    t[k] = static_cast<std::uint8_t>(k);
    t[a + k] = static_cast<std::uint8_t>(a + b + k);
  }
  for (int k = 1; k <= b; ++k) {
    t[2 * a + k] = static_cast<std::uint8_t>(a + k);
    t[2 * a + b + k] = static_cast<std::uint8_t>(2 * a + b + k);
  }
  return Isometry::make(direct_sum(hyperbolic(a), hyperbolic(b)), hyperbolic(a + b),
                        Morphism::from_table_unchecked(2 * (a + b), 2 * (a + b), t));
}

// Picks the isotropic subobject to split off next from the nonzero ones.
using IsotropicChooser = std::function<std::size_t(const std::vector<IsotropicInflation>&)>;

inline std::size_t choose_lex_least(const std::vector<IsotropicInflation>&) { return 0; }

inline Decomposition iso_simple_decomposition(const SymmetricForm& s,
                                              const IsotropicChooser& choose = choose_lex_least) {
  std::vector<IsotropicInflation> nonzero;
  for (auto& u : isotropic_subobjects(s))
    if (u.u() > 0) nonzero.push_back(std::move(u));
  if (nonzero.empty()) return {0, s, Isometry::identity(s)};
  const std::size_t pick = choose(nonzero);
  if (pick >= nonzero.size()) throw InvalidForm("isotropic chooser out of range");
  const IsotropicSplitting split = isotropic_splitting(nonzero[pick]);
  const int a = nonzero[pick].u();
  const Decomposition rest = iso_simple_decomposition(split.reduction.form, choose);
  // S -> H(a) (+) R -> H(a) (+) H(b) (+) N -> H(a + b) (+) N
  const Isometry step = compose(direct_sum(Isometry::identity(hyperbolic(a)), rest.isometry), split.isometry);
  const Isometry shuffle =
      direct_sum(hyperbolic_shuffle(a, rest.hyperbolic_rank), Isometry::identity(rest.simple));
  return {a + rest.hyperbolic_rank, rest.simple, compose(shuffle, step)};
}

// Every (u, N) with N isotropically simple and S ≅ H(u) (+) N, by exhaustive
// isometry search over all candidates.
inline std::vector<std::pair<int, SymmetricForm>> all_decompositions(const SymmetricForm& s) {
  std::vector<std::pair<int, SymmetricForm>> out;
  for (int u = 0; 2 * u <= s.size(); ++u)
    for (const auto& n : enumerate_forms(s.size() - 2 * u)) {
      if (!is_isotropically_simple(n)) continue;
      if (find_isometry(s, direct_sum(hyperbolic(u), n))) out.emplace_back(u, n);
    }
  return out;
}

// Decomposition, round trip, uniqueness against exhaustive search, and
// independence of the isotropic picks, over all forms up to max_size.
inline SuiteReport decomposition_suite(int max_size, unsigned jobs = 1) {
  SuiteReport report{"decomposition[max_size=" + std::to_string(max_size) + "]"};
  auto& round = report.add("isometry S -> H(U) (+) N round-trips psi");
  auto& simple = report.add("N is isotropically simple");
  auto& unique = report.add("decomposition unique up to isometry (exhaustive search)");
  auto& picks = report.add("every sequence of isotropic picks gives the same (|U|, N)");
  std::vector<SymmetricForm> forms;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& s : enumerate_forms(n)) forms.push_back(s);
  std::vector<CheckResult> r1(forms.size()), r2(forms.size()), r3(forms.size()), r4(forms.size());
  parallel_for(forms.size(), jobs, [&](std::size_t k) {
    const SymmetricForm& s = forms[k];
    const Decomposition d = iso_simple_decomposition(s);
    ++r1[k].cases;
    const SymmetricForm t = d.target();
    if (d.isometry.source != s || d.isometry.target != t ||
        f1::compose(f1::inverse(d.isometry.map), t.psi(), d.isometry.map) != s.psi())
      r1[k].fail(s.to_string());
    ++r2[k].cases;
    if (!is_isotropically_simple(d.simple)) r2[k].fail(s.to_string() + " -> " + d.simple.to_string());
    ++r3[k].cases;
    const auto all = all_decompositions(s);
    if (all.size() != 1 || all[0].first != d.hyperbolic_rank || all[0].second != d.simple)
      r3[k].fail(s.to_string() + " has " + std::to_string(all.size()) + " decompositions");
    // branch over every choice sequence
    std::function<void(const SymmetricForm&, int)> branch = [&](const SymmetricForm& f, int acc) {
      std::vector<IsotropicInflation> nz;
      for (auto& u : isotropic_subobjects(f))
        if (u.u() > 0) nz.push_back(std::move(u));
      if (nz.empty()) {
        ++r4[k].cases;
        if (acc != d.hyperbolic_rank || find_isometry(f, d.simple) == std::nullopt)
          r4[k].fail(s.to_string() + " reaches H(" + std::to_string(acc) + ") + " + f.to_string());
        return;
      }
      for (const auto& u : nz) branch(isotropic_reduction(u).form, acc + u.u());
    };
    if (s.size() <= 5) branch(s, 0);
    else {
      // size 6: every first pick, then the default continuation
      std::vector<IsotropicInflation> nz;
      for (auto& u : isotropic_subobjects(s))
        if (u.u() > 0) nz.push_back(std::move(u));
      for (std::size_t p = 0; p < nz.size(); ++p) {
        ++r4[k].cases;
        const Decomposition alt = iso_simple_decomposition(s, [p, first = true](const auto&) mutable {
          const std::size_t c = first ? p : 0;
          first = false;
          return c;
        });
        if (alt.hyperbolic_rank != d.hyperbolic_rank || alt.simple != d.simple)
          r4[k].fail(s.to_string() + " first pick " + std::to_string(p));
      }
      if (nz.empty()) ++r4[k].cases;
    }
  });
  for (std::size_t k = 0; k < forms.size(); ++k) {
    round.merge(r1[k]);
    simple.merge(r2[k]);
    unique.merge(r3[k]);
    picks.merge(r4[k]);
  }
  return report;
}

}  // namespace kgw::herm
