#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "fdr/errors.hpp"
#include "fdr/generalized.hpp"

using namespace fdr;
using namespace fdr::test;

namespace {

BiIndex bi(const Chart &c, std::vector<int> x, std::vector<int> y)
{
   return BiIndex(c.n, c.k, std::move(x), std::move(y));
}

Rat transpose_sign(int R) { return R % 2 ? -1 : 1; }

} // namespace

TEST_CASE("pairing examples")
{
   Chart c20{2, 0, 4};
   PwPoly B = PwPoly::bspline(3, 1) * Rat(7, 2);
   auto eta = DensityCurrent::basis(c20, bi(c20, {1}, {}), DensityCoeff::term(1, {B, B}, {}));
   FormalForm dx2 = FormalForm::monomial(c20, bi(c20, {2}, {}), Poly::constant(2, 1));
   CHECK(pair(dx2, eta) == -B.integral() * B.integral());

   Chart c11{1, 1, 4};
   auto e2 = DensityCurrent::basis(c11, bi(c11, {1}, {1}),
                                   DensityCoeff::term(1, {PwPoly::default_bump()}, {2}));
   CHECK(pair(FormalForm::function(c11, Poly::monomial(2, {0, 2})), e2) == 2);
   CHECK(pair(FormalForm::function(c11, Poly::monomial(2, {0, 1})), e2) == 0);

   Chart c10{1, 0, 4};
   FormalForm x2 = FormalForm::function(c10, Poly::monomial(1, {2}));
   DeltaCurrent d0(c10, 0), d1(c10, 0);
   d0.add(DeltaKey{bi(c10, {1}, {}), {Rat(0)}, {1}, {}}, 1);
   d1.add(DeltaKey{bi(c10, {1}, {}), {Rat(1)}, {1}, {}}, 1);
   CHECK(pair(x2, d0) == 0);
   CHECK(pair(x2, d1) == 2);
   CHECK_THROWS_AS(pair(FormalForm::monomial(c10, bi(c10, {1}, {}), Poly::constant(1, 1)), d1),
                   DegreeMismatch);
}

TEST_CASE("d_density examples")
{
   Chart c10{1, 0, 4};
   PwPoly B = PwPoly::default_bump();
   auto eta = DensityCurrent::basis(c10, bi(c10, {}, {}), DensityCoeff::term(1, {B}, {}));
   auto expect = DensityCurrent::basis(c10, bi(c10, {1}, {}), DensityCoeff::term(1, {B.derivative()}, {}));
   CHECK(d_density(eta) == expect);

   Chart c01{0, 1, 6};
   for (int i = 0; i <= 4; ++i)
   {
      auto e = DensityCurrent::basis(c01, bi(c01, {}, {}), DensityCoeff::term(1, {}, {i}));
      auto de = d_density(e);
      auto want = DensityCurrent::basis(c01, bi(c01, {}, {1}), DensityCoeff::term(-1, {}, {i + 1}));
      CHECK(de == want);
      // the sign solves <d eta, y^(i+1)> = - <eta, d y^(i+1)>
      FormalForm w = FormalForm::function(c01, Poly::monomial(1, {i + 1}));
      CHECK(pair(w, de) == -pair(d(w), e));
   }
}

TEST_CASE("d_density squares to zero and transposes d")
{
   Rng rng(31);
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart c{n, k, 3};
         for (int R = 0; R <= c.dim(); ++R)
         {
            DensityCurrent e = random_density(rng, c, R);
            CHECK(d_density(d_density(e)).is_zero());
            if (R == 0)
               continue;
            DensityCurrent de = d_density(e);
            for (const auto &w : monomial_battery(c, R - 1, 2))
               CHECK(pair(w, de) == transpose_sign(R) * pair(d(w), e));
         }
      }
}

TEST_CASE("d_distribution")
{
   Chart c10{1, 0, 4};
   for (Rat a : {Rat(0), Rat(1, 2), Rat(-3)})
   {
      DeltaCurrent e(c10, 1);
      e.add(DeltaKey{bi(c10, {}, {}), {a}, {0}, {}}, 1);
      DeltaCurrent de = d_distribution(e);
      for (int m = 1; m <= 3; ++m)
      {
         Poly f = Poly::monomial(1, {m});
         Rat fprime = f.partial(0).eval({a});
         CHECK(pair(FormalForm::function(c10, f), de) == -fprime);
      }
   }

   Rng rng(32);
   int count = 0;
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart c{n, k, 3};
         for (int R = 0; R <= c.dim(); ++R)
            for (int rep = 0; rep < 4; ++rep, ++count)
            {
               DeltaCurrent e = random_delta(rng, c, R);
               CHECK(d_distribution(d_distribution(e)).is_zero());
            }
      }
   CHECK(count >= 100);
}

TEST_CASE("embed commutes with d weakly")
{
   Rng rng(33);
   for (int i = 0; i < 50; ++i)
   {
      Chart c{uniform(rng, 0, 2), uniform(rng, 0, 1), 3};
      int R = uniform(rng, 1, std::max(1, c.dim()));
      if (R > c.dim())
         continue;
      DensityCurrent e = random_density(rng, c, R);
      Functional de = embed(d_density(e));
      Functional ed = embed(e);
      Functional ed_then_d{c, R - 1, [&](const FormalForm &w) -> Rat { return transpose_sign(R) * ed(d(w)); }};
      CHECK(agree_on_battery(de, ed_then_d, 2));
   }
}

TEST_CASE("embed")
{
   Rng rng(34);
   Chart c{1, 1, 3};
   DensityCurrent zero(c, 1);
   for (const auto &w : monomial_battery(c, 1, 2))
      CHECK(embed(zero)(w) == 0);
   for (int i = 0; i < 50; ++i)
   {
      int r = uniform(rng, 0, 2);
      DensityCurrent e = random_density(rng, c, r);
      FormalForm w = random_form(rng, c, r);
      CHECK(embed(e)(w) == pair(w, e));
   }
   for (int i = 0; i < 20; ++i)
   {
      DensityCurrent a = random_density(rng, c, 1), b = random_density(rng, c, 1);
      Rat s = small_rat(rng);
      FormalForm w = random_form(rng, c, 1);
      CHECK(embed(a + b * s)(w) == embed(a)(w) + s * embed(b)(w));
   }
}

TEST_CASE("zeta")
{
   Chart c{2, 1, 3};
   BiIndex vol = bi(c, {1, 2}, {1});
   PwPoly B = PwPoly::default_bump();
   CHECK(zeta(DensityCurrent::basis(c, vol, DensityCoeff::term(1, {B, B}, {0}))) == 1);
   CHECK(zeta(DensityCurrent::basis(c, vol, DensityCoeff::term(1, {B, B}, {1}))) == 0);
   Rng rng(35);
   for (int i = 0; i < 50; ++i)
      CHECK(zeta(d_density(random_density(rng, c, 1))) == 0);
}

TEST_CASE("current weight truncation")
{
   Chart c{0, 2, 2};
   // dual weight |L| + k - |J| = 2 + 2 - 0 > 2
   auto e = DensityCurrent::basis(c, bi(c, {}, {}), DensityCoeff::term(1, {}, {1, 1}));
   CHECK(e.is_zero());
   CHECK(dual_weight({1, 0}, bi(c, {}, {1})) == 2);
}

TEST_CASE("generalized functions")
{
   Rng rng(36);
   Chart c{1, 1, 3};
   for (int r = 0; r <= 2; ++r)
   {
      FormalForm w = random_form(rng, c, r);
      GenFunction T = GenFunction::regular_part(w);
      DensityCurrent e = random_density(rng, c, r);
      CHECK(apply(T, e) == pair(w, e));
      CHECK(d_generalized(d_generalized(T)).is_zero());
   }
   // <dT, v> = (-1)^r <T, dv> for point terms too
   Chart c10{1, 0, 3};
   GenFunction T(c10, 0);
   T.add_singular(SingularKey{bi(c10, {}, {}), {Rat(1, 2)}, {0}, {}}, 3);
   GenFunction dT = d_generalized(T);
   for (int i = 0; i < 10; ++i)
   {
      DensityCurrent v = random_density(rng, c10, 1);
      CHECK(apply(dT, v) == apply(T, d_density(v)));
   }
}
