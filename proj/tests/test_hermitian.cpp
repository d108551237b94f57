#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "kgw/hermitian/decomposition.hpp"
#include "kgw/hermitian/witt.hpp"

using namespace kgw;
using namespace kgw::herm;
using f1::Morphism;

namespace {

// Oracle: all permutations of {1..n} via std::next_permutation, filtered by
// p(p(x)) = x.
std::vector<std::vector<int>> brute_involutions(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int x = 0; x < n; ++x) ok &= p[p[x] - 1] == x + 1;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> table_of(const SymmetricForm& s) {
  std::vector<int> t;
  for (int x = 1; x <= s.size(); ++x) t.push_back(s(x));
  return t;
}

// Oracle: isometry test straight from the element description, psi_t(g(x)) =
// g(psi_s(x)) for a permutation g.
bool brute_isometric(const SymmetricForm& s, const SymmetricForm& t) {
  if (s.size() != t.size()) return false;
  std::vector<int> g(s.size());
  std::iota(g.begin(), g.end(), 1);
  do {
    bool ok = true;
    for (int x = 1; x <= s.size() && ok; ++x) ok = t(g[x - 1]) == g[s(x) - 1];
    if (ok) return true;
  } while (std::next_permutation(g.begin(), g.end()));
  return false;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

SymmetricForm F(const char* s) { return parse_form(s); }

void expect_isometry(const Isometry& iso) {
  EXPECT_TRUE(is_isometry(iso.source, iso.target, iso.map)) << iso.map.to_string();
  EXPECT_EQ(f1::compose(f1::dualize(iso.map), iso.target.psi(), iso.map), iso.source.psi());
}

}  // namespace

TEST(Forms, InvolutionCountsMatchPermutationFilter) {
  const int expected[] = {1, 1, 2, 4, 10, 26, 76};
  for (int n = 0; n <= 6; ++n) {
    const auto forms = enumerate_forms(n);
    const auto brute = brute_involutions(n);
    ASSERT_EQ(forms.size(), brute.size()) << n;
    EXPECT_EQ(static_cast<int>(forms.size()), expected[n]);
    for (std::size_t k = 0; k < forms.size(); ++k) EXPECT_EQ(table_of(forms[k]), brute[k]);
  }
}

TEST(Forms, RejectsNonInvolutions) {
  EXPECT_THROW(SymmetricForm(Morphism(3, 3, {0, 2, 3, 1})), InvalidForm);
  EXPECT_THROW(SymmetricForm(Morphism(2, 2, {0, 1, 0})), InvalidForm);
  EXPECT_NO_THROW(SymmetricForm(Morphism(2, 2, {0, 2, 1})));
}

TEST(Forms, Hyperbolic) {
  EXPECT_EQ(hyperbolic(0), SymmetricForm::zero());
  EXPECT_EQ(hyperbolic(1), F("inv:(1 2)"));
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(hyperbolic(n).fixed_points(), 0);
  EXPECT_EQ(hyperbolic(2).to_string(), "inv:(1 3)(2 4)");
}

TEST(Forms, LiteralRoundTrip) {
  EXPECT_EQ(F("inv:(1 2)(3)").to_string(), "inv:(1 2)(3)");
  EXPECT_EQ(F("inv:(3)").size(), 3);
  EXPECT_TRUE(F("inv:(3)").is_identity());
  EXPECT_EQ(F("inv:"), SymmetricForm::zero());
  EXPECT_EQ(F("  inv: (2 1) (4) "), F("inv:(1 2)(3)(4)"));
  for (int n = 0; n <= 5; ++n)
    for (const auto& s : enumerate_forms(n))
      if (n) {
        EXPECT_EQ(parse_form(s.to_string()), s);
      }
  EXPECT_THROW(F("(1 2)"), ParseError);
  EXPECT_THROW(F("inv:(1 2 3)"), ParseError);
  EXPECT_THROW(F("inv:(1)(1 2)"), ParseError);
  EXPECT_THROW(F("inv:(0)"), ParseError);
  EXPECT_THROW(F("inv:(1 2"), ParseError);
  EXPECT_THROW(F("inv:(16)"), SizeLimit);
}

TEST(Forms, IsometryGroupOrders) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(static_cast<int>(isometry_group(SymmetricForm::identity(n)).size()), factorial(n));
  EXPECT_EQ(isometry_group(hyperbolic(1)).size(), 2u);
  EXPECT_EQ(isometry_group(SymmetricForm::zero()).size(), 1u);
  // centralizer of t transpositions and f fixed points: 2^t t! f!
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_forms(n)) {
      const int t = s.transpositions(), f = s.fixed_points();
      EXPECT_EQ(static_cast<int>(isometry_group(s).size()), (1 << t) * factorial(t) * factorial(f)) << s.to_string();
    }
}

TEST(Forms, CanonicalRepresentativeMatchesBruteIsometry) {
  for (int n = 0; n <= 5; ++n) {
    const auto forms = enumerate_forms(n);
    for (const auto& a : forms)
      for (const auto& b : forms)
        EXPECT_EQ(canonical_representative(a) == canonical_representative(b), brute_isometric(a, b));
  }
}

// Oracle: least conjugate g psi g^-1 over all permutations g.
TEST(Forms, CanonicalRepresentativeIsLeastConjugate) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_forms(n)) {
      Morphism best = s.psi();
      for (const auto& g : f1::permutations(n)) best = std::min(best, f1::compose(g, s.psi(), f1::inverse(g)));
      EXPECT_EQ(canonical_representative(s).psi(), best) << s.to_string();
    }
}

TEST(Isotropic, Subobjects) {
  EXPECT_EQ(isotropic_subobjects(SymmetricForm::identity(4)).size(), 1u);
  const auto h1 = isotropic_subobjects(hyperbolic(1));
  ASSERT_EQ(h1.size(), 3u);
  EXPECT_EQ(h1[0].u(), 0);
  EXPECT_EQ(h1[1].subset(), 1u << 1);
  EXPECT_EQ(h1[2].subset(), 1u << 2);
  EXPECT_EQ(isotropic_subobjects(hyperbolic(2)).size(), 9u);
  // oracle: 3^t subsets, each transposition contributes none/one/other
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_forms(n)) {
      std::size_t brute = 0;
      for (f1::Subset t = 0; t <= f1::full_subset(n); t += 2) {
        bool ok = true;
        for (int x : f1::subset_elements(t)) ok &= !(t & (1u << s(x)));
        brute += ok;
      }
      const auto subs = isotropic_subobjects(s);
      EXPECT_EQ(subs.size(), brute);
      int pow3 = 1;
      for (int k = 0; k < s.transpositions(); ++k) pow3 *= 3;
      EXPECT_EQ(static_cast<int>(subs.size()), pow3);
      for (std::size_t k = 1; k < subs.size(); ++k)
        EXPECT_LT(f1::subset_elements(subs[k - 1].subset()), f1::subset_elements(subs[k].subset()));
    }
}

TEST(Isotropic, MakeRejectsNonIsotropic) {
  const auto s = F("inv:(1 2)(3)");
  EXPECT_THROW(make_isotropic(s, f1::subset_inclusion(0b0110, 3)), NotIsotropic);
  EXPECT_THROW(make_isotropic(s, f1::subset_inclusion(0b1000, 3)), NotIsotropic);
  EXPECT_THROW(make_isotropic(s, Morphism(1, 3, {0, 0})), NotAnInflation);
  EXPECT_NO_THROW(make_isotropic(s, Morphism(1, 3, {0, 2})));
}

TEST(Isotropic, ReductionExamples) {
  const auto zero_red = isotropic_reduction(make_isotropic(F("inv:(1 2)(3)"), Morphism::zero(0, 3)));
  EXPECT_EQ(zero_red.form, F("inv:(1 2)(3)"));
  EXPECT_EQ(isotropic_reduction(make_isotropic(hyperbolic(1), Morphism(1, 2, {0, 1}))).form, SymmetricForm::zero());
  EXPECT_EQ(isotropic_reduction(make_isotropic(F("inv:(1 2)(3)"), Morphism(1, 3, {0, 1}))).form, F("inv:(1)"));
  // (1 4)(2 5)(3) // {1}: survivors 2, 3, 5 relabelled 1, 2, 3
  const auto r = isotropic_reduction(make_isotropic(F("inv:(1 4)(2 5)(3)"), Morphism(1, 5, {0, 1})));
  EXPECT_EQ(r.form, F("inv:(1 3)(2)"));
  EXPECT_EQ(r.perp.image(), f1::Subset{0b101110});
}

TEST(Isotropic, ReductionAssumptionHoldsEverywhere) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_forms(n))
      for (const auto& u : isotropic_subobjects(s)) {
        const Reduction r = isotropic_reduction(u);
        EXPECT_EQ(r.form.size(), n - 2 * u.u());
        EXPECT_EQ(f1::compose(f1::dualize(r.quotient), r.form.psi(), r.quotient),
                  f1::compose(f1::dualize(r.perp), s.psi(), r.perp));
      }
}

TEST(Isotropic, MetabolicToHyperbolic) {
  const auto h = metabolic_to_hyperbolic(make_isotropic(hyperbolic(1), Morphism(1, 2, {0, 1})));
  EXPECT_EQ(h.map, Morphism::identity(2));
  const auto s = F("inv:(1 2)(3 4)");
  const auto iso = metabolic_to_hyperbolic(make_isotropic(s, f1::subset_inclusion(0b1010, 4)));
  EXPECT_EQ(iso.source, hyperbolic(2));
  EXPECT_EQ(iso.target, s);
  expect_isometry(iso);
  EXPECT_EQ(f1::compose(iso.map, f1::inclusion_first(2, 2)), f1::subset_inclusion(0b1010, 4));
  EXPECT_THROW(metabolic_to_hyperbolic(make_isotropic(s, f1::subset_inclusion(0b0010, 4))), NotLagrangian);
  EXPECT_THROW(metabolic_to_hyperbolic(make_isotropic(F("inv:(1 2)(3)"), Morphism(1, 3, {0, 1}))), NotLagrangian);
}

TEST(Isotropic, EveryMetabolicFormIsHyperbolic) {
  int metabolic = 0;
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_forms(n))
      for (const auto& u : isotropic_subobjects(s)) {
        if (!u.is_lagrangian()) continue;
        ++metabolic;
        const auto iso = metabolic_to_hyperbolic(u);
        expect_isometry(iso);
        EXPECT_EQ(iso.source, hyperbolic(n / 2));
        EXPECT_EQ(s.fixed_points(), 0);
        EXPECT_TRUE(brute_isometric(s, hyperbolic(n / 2)));
      }
  EXPECT_GT(metabolic, 0);
}

TEST(Isotropic, SplitOffForm) {
  const auto a = split_off_form(F("inv:(1 2)(3)"), Morphism::identity(3));
  EXPECT_EQ(a.complement, SymmetricForm::zero());
  const auto b = split_off_form(SymmetricForm::identity(2), Morphism(1, 2, {0, 1}));
  EXPECT_EQ(b.complement, SymmetricForm::identity(1));
  expect_isometry(b.isometry);
  const auto c = split_off_form(F("inv:(1 2)(3)"), Morphism(1, 3, {0, 3}));
  EXPECT_EQ(c.complement, hyperbolic(1));
  EXPECT_EQ(c.restricted, SymmetricForm::identity(1));
  expect_isometry(c.isometry);
  EXPECT_THROW(split_off_form(F("inv:(1 2)(3)"), Morphism(1, 3, {0, 1})), RestrictionDegenerate);
}

TEST(Isotropic, SplitOffEveryNondegenerateSubform) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& s : enumerate_forms(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& i : f1::inflations(m, n)) {
          const Morphism r = f1::compose(f1::dualize(i), s.psi(), i);
          if (!f1::is_iso(r)) {
            EXPECT_THROW(split_off_form(s, i), RestrictionDegenerate);
            continue;
          }
          const auto so = split_off_form(s, i);
          expect_isometry(so.isometry);
          EXPECT_EQ(so.isometry.target, direct_sum(so.restricted, so.complement));
          EXPECT_EQ(f1::compose(so.isometry.map, i), f1::inclusion_first(m, n - m));
        }
}

TEST(Isotropic, SplittingExamples) {
  const auto s = F("inv:(1 2)(3)");
  const auto z = isotropic_splitting(make_isotropic(s, Morphism::zero(0, 3)));
  EXPECT_EQ(z.isometry.map, Morphism::identity(3));
  const auto h = isotropic_splitting(make_isotropic(hyperbolic(1), Morphism(1, 2, {0, 1})));
  EXPECT_EQ(h.isometry.target, hyperbolic(1));
  EXPECT_EQ(h.reduction.form, SymmetricForm::zero());
  const auto a = isotropic_splitting(make_isotropic(s, Morphism(1, 3, {0, 1})));
  EXPECT_EQ(a.isometry.target, direct_sum(hyperbolic(1), SymmetricForm::identity(1)));
  expect_isometry(a.isometry);
  EXPECT_EQ(a.isometry.map, Morphism::identity(3));
  const auto b = isotropic_splitting(make_isotropic(s, Morphism(1, 3, {0, 2})));
  EXPECT_EQ(b.isometry.map, Morphism(3, 3, {0, 2, 1, 3}));
}

TEST(Isotropic, SplittingCarriesStandardInclusions) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_forms(n))
      for (const auto& u : isotropic_subobjects(s)) {
        const auto sp = isotropic_splitting(u);
        expect_isometry(sp.isometry);
        EXPECT_EQ(sp.isometry.target, direct_sum(hyperbolic(u.u()), sp.reduction.form));
        EXPECT_EQ(f1::compose(sp.isometry.map, u.inclusion), f1::inclusion_first(u.u(), n - u.u()));
        // U^⊥ lands in U (+) (N // U)
        const f1::Subset image = f1::compose(sp.isometry.map, sp.reduction.perp).image();
        const f1::Subset expected = f1::full_subset(n) & ~(f1::full_subset(u.u()) << u.u());
        EXPECT_EQ(image, expected) << s.to_string();
      }
}

TEST(Decomposition, Examples) {
  const auto id = iso_simple_decomposition(SymmetricForm::identity(4));
  EXPECT_EQ(id.hyperbolic_rank, 0);
  EXPECT_EQ(id.simple, SymmetricForm::identity(4));
  const auto ffp = iso_simple_decomposition(F("inv:(1 4)(2 6)(3 5)"));
  EXPECT_EQ(ffp.hyperbolic_rank, 3);
  EXPECT_EQ(ffp.simple, SymmetricForm::zero());
  const auto d = iso_simple_decomposition(F("inv:(1 2)(3)"));
  EXPECT_EQ(d.to_string(), "H(1) ⊕ id_1");
  EXPECT_EQ(iso_simple_decomposition(SymmetricForm::zero()).to_string(), "H(0)");
  EXPECT_EQ(iso_simple_decomposition(SymmetricForm::identity(3)).to_string(), "id_3");
}

TEST(Decomposition, AllFormsUpToSix) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_forms(n)) {
      const auto d = iso_simple_decomposition(s);
      EXPECT_EQ(d.hyperbolic_rank, s.transpositions());
      EXPECT_EQ(d.simple, SymmetricForm::identity(s.fixed_points()));
      expect_isometry(d.isometry);
      EXPECT_EQ(d.isometry.source, s);
      EXPECT_EQ(d.isometry.target, d.target());
      EXPECT_TRUE(brute_isometric(s, d.target()));
    }
}

TEST(Decomposition, ChooserDoesNotChangeTheResult) {
  const auto s = F("inv:(1 4)(2 5)(3)(6)");
  const auto a = iso_simple_decomposition(s);
  const auto last = iso_simple_decomposition(s, [](const auto& v) { return v.size() - 1; });
  EXPECT_EQ(a.hyperbolic_rank, last.hyperbolic_rank);
  EXPECT_EQ(a.simple, last.simple);
  expect_isometry(last.isometry);
  EXPECT_THROW(iso_simple_decomposition(s, [](const auto& v) { return v.size(); }), InvalidForm);
}

TEST(Decomposition, SumOfSimpleAndHyperbolicIsBijectiveOnClasses) {
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::pair<int, int>> seen;
    for (const auto& s : enumerate_forms(n)) {
      const auto all = all_decompositions(s);
      ASSERT_EQ(all.size(), 1u) << s.to_string();
      seen.emplace_back(all[0].first, all[0].second.size());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    EXPECT_EQ(static_cast<int>(seen.size()), n / 2 + 1);
  }
}

TEST(Decomposition, SuitePasses) {
  const auto r = decomposition_suite(5, 2);
  EXPECT_TRUE(r.passed()) << r;
  for (const auto& c : r.checks) EXPECT_GT(c.cases, 0u) << c.name;
}

TEST(Witt, Monoid) {
  for (int max : {0, 1, 2, 4, 6}) {
    const auto w = witt_monoid(max);
    EXPECT_EQ(static_cast<int>(w.elements.size()), max + 1);
    EXPECT_TRUE(w.complete);
    if (max == 0) {
      EXPECT_TRUE(w.presentation.generators.empty());
      continue;
    }
    ASSERT_EQ(w.presentation.generators.size(), 1u);
    EXPECT_EQ(w.generator_forms[0], SymmetricForm::identity(1));
    EXPECT_TRUE(w.presentation.is_free());
    for (int e = 0; e <= max; ++e) EXPECT_EQ(w.coordinates[e], std::vector<std::int64_t>{e});
  }
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(witt_class(hyperbolic(n)).fixed_point_count, 0);
  EXPECT_EQ(witt_class(F("inv:(1 2)(3)(4)")).fixed_point_count, 2);
}
