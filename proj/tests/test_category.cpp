#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "kgw/category/algebra.hpp"
#include "kgw/category/finite_category.hpp"
#include "kgw/category/functor.hpp"
#include "kgw/category/homotopy.hpp"
#include "kgw/category/serialize.hpp"

using namespace kgw;
using namespace kgw::cat;

namespace {

using Perm = std::vector<int>;

// Closure of a generating set of permutations; element 0 is the identity.
std::vector<std::vector<int>> group_table(const std::vector<Perm>& gens, int degree) {
  Perm e(degree);
  std::iota(e.begin(), e.end(), 0);
  std::vector<Perm> elems{e};
  std::map<Perm, int> index{{e, 0}};
  auto mul = [&](const Perm& a, const Perm& b) {  // a after b
    Perm r(degree);
    for (int k = 0; k < degree; ++k) r[k] = a[b[k]];
    return r;
  };
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm p = mul(g, elems[k]);
      if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
    }
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(mul(elems[a], elems[b]));
  return t;
}

Perm cycle(int degree, std::vector<int> c) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  return p;
}

bool same_structure(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
  for (Id f = 0; f < a.num_morphisms(); ++f)
    if (a.src(f) != b.src(f) || a.dst(f) != b.dst(f)) return false;
  for (Id x = 0; x < a.num_objects(); ++x)
    if (a.identity(x) != b.identity(x)) return false;
  bool same = true;
  a.for_each_composable([&](Id g, Id f) { same = same && a.compose(g, f) == b.compose(g, f); });
  return same;
}

// Oracle: product of the first k SNF entries = gcd of all k x k minors.
std::int64_t det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::int64_t d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return d;
}

std::int64_t minor_gcd(const Matrix& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = m[0].size();
  std::int64_t g = 0;
  for (unsigned rs = 0; rs < (1u << rows); ++rs) {
    if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
    for (unsigned cs = 0; cs < (1u << cols); ++cs) {
      if (static_cast<std::size_t>(__builtin_popcount(cs)) != k) continue;
      Matrix sub;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!(rs & (1u << i))) continue;
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < cols; ++j)
          if (cs & (1u << j)) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      g = std::gcd(g, std::llabs(det(sub)));
    }
  }
  return g;
}

FiniteCategory idempotent_monoid() {
  CategoryBuilder b;
  const Id o = b.add_object("*");
  const Id id = b.add_morphism(o, o, "id");
  const Id e = b.add_morphism(o, o, "e");
  b.set_identity(o, id);
  b.set_composite(id, id, id);
  b.set_composite(id, e, e);
  b.set_composite(e, id, e);
  b.set_composite(e, e, e);
  return std::move(b).build();
}

}  // namespace

TEST(FiniteCategory, TerminalAndDiscrete) {
  const auto t = terminal_category();
  EXPECT_EQ(t.num_objects(), 1u);
  EXPECT_EQ(t.num_morphisms(), 1u);
  const auto d = discrete_category(2);
  EXPECT_EQ(pi0(d).size(), 2u);
  EXPECT_EQ(pi0(discrete_category(3)).size(), 3u);
}

TEST(FiniteCategory, RejectsBrokenTables) {
  // three endomorphisms: id, a, b with a∘a = b, a∘b = a, b∘a = b, b∘b = b:
  // (a∘a)∘b = b∘b = b but a∘(a∘b) = a∘a = b, fine; a∘(b∘a) = a∘b = a but
  // (a∘b)∘a = a∘a = b.
  CategoryBuilder b;
  const Id o = b.add_object("*");
  const Id id = b.add_morphism(o, o, "id");
  const Id a = b.add_morphism(o, o, "a");
  const Id bb = b.add_morphism(o, o, "b");
  b.set_identity(o, id);
  for (Id f : {id, a, bb}) {
    b.set_composite(id, f, f);
    b.set_composite(f, id, f);
  }
  b.set_composite(a, a, bb);
  b.set_composite(a, bb, a);
  b.set_composite(bb, a, bb);
  b.set_composite(bb, bb, bb);
  EXPECT_THROW(std::move(b).build(), AssociativityViolation);

  CategoryBuilder u;
  const Id x = u.add_object("x");
  const Id f = u.add_morphism(x, x, "f");
  const Id g = u.add_morphism(x, x, "g");
  u.set_identity(x, f);
  u.set_composite(f, f, f);
  u.set_composite(f, g, f);
  u.set_composite(g, f, g);
  u.set_composite(g, g, g);
  EXPECT_THROW(std::move(u).build(), UnitViolation);

  CategoryBuilder m;
  const Id y = m.add_object("y");
  m.set_identity(y, m.add_morphism(y, y, "id"));
  EXPECT_THROW(std::move(m).build(), CompositionViolation);
}

TEST(FiniteCategory, BuildFromValues) {
  // the poset 0 < 1 < 2 as pairs (a, b) with a <= b
  const std::vector<int> objs{0, 1, 2};
  auto cat = build_category<int, std::pair<int, int>>(
      objs,
      [](int a, int b) {
        return a <= b ? std::vector<std::pair<int, int>>{{a, b}} : std::vector<std::pair<int, int>>{};
      },
      [](std::pair<int, int> g, std::pair<int, int> f) { return std::pair{f.first, g.second}; },
      [](int a) { return std::pair{a, a}; });
  EXPECT_EQ(cat.cat.num_morphisms(), 6u);
  EXPECT_EQ(pi0(cat.cat).size(), 1u);
  EXPECT_TRUE(abelianize(pi1_presentation(cat.cat, 0)).is_trivial());
  EXPECT_EQ(cat.id_of(2), 2u);
  EXPECT_THROW(cat.id_of(7), UnknownObject);
}

TEST(Functor, IdentityIsEquivalence) {
  const auto g = one_object_groupoid(group_table({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3));
  const auto e = check_equivalence(Functor::identity(g));
  EXPECT_TRUE(e.is_equivalence()) << e.witness();
}

TEST(Functor, ConstantFunctorNotEssentiallySurjective) {
  const auto s = terminal_category();
  const auto t = discrete_category(2);
  const auto F = Functor::tabulate(s, t, [](Id) { return Id{0}; }, [](Id) { return Id{0}; });
  EXPECT_TRUE(check_functor(F, FunctorMode::functoriality).holds);
  EXPECT_TRUE(check_functor(F, FunctorMode::full).holds);
  EXPECT_TRUE(check_functor(F, FunctorMode::faithful).holds);
  const auto es = check_functor(F, FunctorMode::ess_surjective);
  EXPECT_FALSE(es.holds);
  EXPECT_FALSE(es.witness.empty());
}

TEST(Functor, DetectsBrokenFunctoriality) {
  const auto z2 = one_object_groupoid({{0, 1}, {1, 0}});
  const auto F = Functor::tabulate(z2, z2, [](Id) { return Id{0}; }, [](Id) { return Id{1}; });
  EXPECT_FALSE(check_functor(F, FunctorMode::functoriality).holds);
  const auto trivial = Functor::tabulate(z2, z2, [](Id) { return Id{0}; }, [](Id) { return Id{0}; });
  EXPECT_TRUE(check_functor(trivial, FunctorMode::functoriality).holds);
  EXPECT_FALSE(check_functor(trivial, FunctorMode::faithful).holds);
  EXPECT_FALSE(check_functor(trivial, FunctorMode::full).holds);
}

TEST(Functor, NaturalTransformations) {
  const auto c = discrete_category(2);
  const auto id = Functor::identity(c);
  EXPECT_EQ(check_natural_transformation(id, id, {c.identity(0), c.identity(1)}, true), "");
  const auto z2 = one_object_groupoid({{0, 1}, {1, 0}});
  const auto idz = Functor::identity(z2);
  // conjugation by the generator is trivial in an abelian group
  EXPECT_EQ(check_natural_transformation(idz, idz, {1}, true), "");
}

TEST(Comma, IdentityOnTerminalIsTerminal) {
  const auto t = terminal_category();
  const auto c = comma_category(Functor::identity(t), 0);
  EXPECT_EQ(c.cat.num_objects(), 1u);
  EXPECT_EQ(c.cat.num_morphisms(), 1u);
}

TEST(Comma, EmptyWhenNoArrows) {
  const auto s = terminal_category();
  const auto t = discrete_category(2);
  const auto F = Functor::tabulate(s, t, [](Id) { return Id{0}; }, [](Id) { return Id{0}; });
  EXPECT_EQ(comma_category(F, 1).cat.num_objects(), 0u);
  EXPECT_THROW(comma_category(F, 5), UnknownObject);
}

TEST(Comma, IdentityCommaMatchesCoslice) {
  const std::vector<int> objs{0, 1, 2, 3};
  // divisibility-free toy: the poset of subsets of {0,1} under inclusion
  auto cat = build_category<int, std::pair<int, int>>(
      objs,
      [](int a, int b) {
        return (a & ~b) == 0 ? std::vector<std::pair<int, int>>{{a, b}} : std::vector<std::pair<int, int>>{};
      },
      [](std::pair<int, int> g, std::pair<int, int> f) { return std::pair{f.first, g.second}; },
      [](int a) { return std::pair{a, a}; });
  for (Id d = 0; d < 4; ++d) {
    const auto comma = comma_category(Functor::identity(cat.cat), d);
    EXPECT_TRUE(same_structure(comma.cat, coslice(cat.cat, d)));
  }
  const auto g = one_object_groupoid(group_table({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3));
  const auto comma = comma_category(Functor::identity(g), 0);
  EXPECT_TRUE(same_structure(comma.cat, coslice(g, 0)));
  EXPECT_EQ(comma.cat.num_objects(), 6u);
  EXPECT_EQ(pi0(comma.cat).size(), 1u);
}

TEST(Homotopy, Pi0Representatives) {
  CategoryBuilder b;
  const Id a = b.add_object("a"), e = b.add_object("e"), c = b.add_object("b"), z = b.add_object("z");
  Id ids[4];
  for (Id o : {a, e, c, z}) {
    ids[o] = b.add_morphism(o, o, "id");
    b.set_identity(o, ids[o]);
  }
  const Id l = b.add_morphism(e, a, "l");
  const Id r = b.add_morphism(e, c, "r");
  for (Id o : {a, e, c, z}) b.set_composite(ids[o], ids[o], ids[o]);
  b.set_composite(l, ids[e], l);
  b.set_composite(ids[a], l, l);
  b.set_composite(r, ids[e], r);
  b.set_composite(ids[c], r, r);
  const auto span = std::move(b).build();
  const auto p = pi0(span);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.representative(c), a);
  EXPECT_EQ(p.representative(z), z);
  EXPECT_TRUE(abelianize(pi1_presentation(span, e)).is_trivial());
}

TEST(Homotopy, Pi1Examples) {
  EXPECT_TRUE(abelianize(pi1_presentation(terminal_category(), 0)).is_trivial());
  EXPECT_TRUE(abelianize(pi1_presentation(idempotent_monoid(), 0)).is_trivial());
  const auto z2 = one_object_groupoid({{0, 1}, {1, 0}});
  EXPECT_EQ(abelianize(pi1_presentation(z2, 0)), (AbelianGroupSNF{0, {2}}));
  EXPECT_THROW(pi1_presentation(z2, 3), UnknownObject);
  // a loop that is not filled: two parallel arrows x => y
  CategoryBuilder b;
  const Id x = b.add_object("x"), y = b.add_object("y");
  const Id ix = b.add_morphism(x, x, "ix"), iy = b.add_morphism(y, y, "iy");
  const Id f = b.add_morphism(x, y, "f"), g = b.add_morphism(x, y, "g");
  b.set_identity(x, ix);
  b.set_identity(y, iy);
  b.set_composite(ix, ix, ix);
  b.set_composite(iy, iy, iy);
  for (Id m : {f, g}) {
    b.set_composite(m, ix, m);
    b.set_composite(iy, m, m);
  }
  EXPECT_EQ(abelianize(pi1_presentation(std::move(b).build(), y)), (AbelianGroupSNF{1, {}}));
}

TEST(Homotopy, GroupoidsAbelianizeToAbelianization) {
  struct Case {
    std::vector<Perm> gens;
    int degree;
    std::size_t order;
    AbelianGroupSNF ab;
  };
  std::vector<Case> cases = {
      {{cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3, 6, {0, {2}}},                   // S3
      {{cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})}, 4, 24, {0, {2}}},               // S4
      {{cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})}, 4, 8, {0, {2, 2}}},             // D4
      {{cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})}, 4, 12, {0, {3}}},               // A4
      {{cycle(6, {0, 1}), cycle(6, {2, 3, 4, 5})}, 6, 8, {0, {2, 4}}},             // Z2 x Z4
      {{cycle(5, {0, 1, 2}), cycle(5, {3, 4})}, 5, 6, {0, {6}}},                   // Z6
  };
  for (int n = 1; n <= 24; ++n) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    cases.push_back({{cycle(n, c)}, n, static_cast<std::size_t>(n),
                     n == 1 ? AbelianGroupSNF{} : AbelianGroupSNF{0, {n}}});
  }
  for (const auto& k : cases) {
    const auto table = group_table(k.gens, k.degree);
    ASSERT_EQ(table.size(), k.order);
    const auto g = one_object_groupoid(table);
    EXPECT_EQ(abelianize(pi1_presentation(g, 0)), k.ab) << k.order;
  }
}

TEST(Algebra, AbelianizeExamples) {
  EXPECT_EQ(abelianize({{"a"}, {{1, 1}}}), (AbelianGroupSNF{0, {2}}));
  EXPECT_EQ(abelianize({{"a", "b"}, {}}), (AbelianGroupSNF{2, {}}));
  EXPECT_EQ(abelianize({{"a", "b"}, {{1, 2, -1, -2}, {1, 1, -2, -2, -2, -2}}}), (AbelianGroupSNF{1, {2}}));
  EXPECT_THROW(abelianize({{"a"}, {{2}}}), TypeMismatch);
  EXPECT_EQ((AbelianGroupSNF{2, {2, 4}}).to_string(), "Z^2 x Z/2 x Z/4");
  EXPECT_EQ(AbelianGroupSNF{}.to_string(), "0");
}

TEST(Algebra, SmithMatchesMinorOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const int r = dim(rng), c = dim(rng);
    Matrix m(r, std::vector<std::int64_t>(c));
    for (auto& row : m)
      for (auto& x : row) x = trial % 3 == 0 ? val(rng) / 3 : val(rng);
    const auto d = smith_diagonal(m);
    std::int64_t prod = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(std::min(r, c)); ++k) {
      const std::int64_t g = minor_gcd(m, k);
      if (k <= d.size()) {
        prod *= d[k - 1];
        EXPECT_EQ(prod, g) << "trial " << trial << " k " << k;
        if (k > 1) {
          EXPECT_EQ(d[k - 1] % d[k - 2], 0);
        }
      } else {
        EXPECT_EQ(g, 0);
      }
    }
  }
}

TEST(Algebra, SmithOverflowIsReported) {
  const std::int64_t big = std::int64_t{1} << 62;
  Matrix m{{big, 3}, {3, big}};
  EXPECT_THROW(smith_diagonal(m), SizeLimit);
}

TEST(Algebra, GrothendieckGroupOfMonoid) {
  CommMonoidPresentation p;
  p.generators = {"1", "2", "3"};
  p.add_relation({2, 0, 0}, {0, 1, 0});
  p.add_relation({1, 1, 0}, {0, 0, 1});
  p.add_relation({0, 0, 1}, {1, 1, 0});  // duplicate up to symmetry
  EXPECT_EQ(p.relations.size(), 2u);
  EXPECT_TRUE(p.has_relation({0, 1, 0}, {2, 0, 0}));
  EXPECT_EQ(grothendieck_group(p), (AbelianGroupSNF{1, {}}));
  EXPECT_EQ(direct_sum(AbelianGroupSNF{1, {2}}, AbelianGroupSNF{0, {3}}), (AbelianGroupSNF{1, {6}}));
}

TEST(Serialize, JsonRoundTrip) {
  const auto g = one_object_groupoid(group_table({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3));
  const auto j = to_json(g);
  EXPECT_EQ(j["objects"].size(), 1u);
  EXPECT_EQ(j["homs"]["0,0"].size(), 6u);
  EXPECT_EQ(j["comp"].size(), 36u);
  const auto back = category_from_json(j);
  EXPECT_TRUE(back == g);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_THROW(category_from_json(nlohmann::json::parse(R"({"objects":[]})")), ParseError);
}

TEST(Serialize, DotClustersPerComponent) {
  const auto dot = to_dot(discrete_category(3), "D");
  EXPECT_NE(dot.find("cluster_2"), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}
