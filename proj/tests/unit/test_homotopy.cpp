#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "fdr/errors.hpp"
#include "fdr/homotopy.hpp"

using namespace fdr;
using namespace fdr::test;

namespace {

FormalForm basis(const Chart &c, std::vector<int> x, std::vector<int> y, const Poly &p)
{
   return FormalForm::monomial(c, BiIndex(c.n, c.k, std::move(x), std::move(y)), p);
}

} // namespace

TEST_CASE("formal y contraction")
{
   auto c = contract_formal_y(1, 4);
   Chart ch{0, 1, 4};
   Poly y = var(ch, 0);
   CHECK(c.h(basis(ch, {}, {1}, y * y)) == FormalForm::function(ch, y.pow(3) * Rat(1, 3)));
   FormalForm y2 = FormalForm::function(ch, y * y);
   CHECK(c.augment_out(y2) == 0);
   CHECK(c.d(c.h(y2)) + c.h(c.d(y2)) == y2);

   auto c0 = contract_formal_y(0, 4);
   Chart p{0, 0, 4};
   FormalForm five = FormalForm::function(p, Poly::constant(0, 5));
   CHECK(c0.h(five).is_zero());
   CHECK(c0.augment_out(five) == 5);
   CHECK(c0.augment_in(5) == five);
}

TEST_CASE("radial x contraction")
{
   auto c1 = contract_radial_x(1, 4);
   Chart ch{1, 0, 4};
   Poly x = var(ch, 0);
   for (int m = 0; m <= 4; ++m)
      CHECK(c1.h(basis(ch, {1}, {}, x.pow(m))) ==
            FormalForm::function(ch, x.pow(m + 1) * Rat(1, m + 1)));

   auto c2 = contract_radial_x(2, 4);
   Chart p{2, 0, 4};
   Poly x1 = var(p, 0), x2 = var(p, 1);
   FormalForm vol = basis(p, {1, 2}, {}, Poly::constant(2, 1));
   FormalForm expect = basis(p, {2}, {}, x1 * Rat(1, 2)) - basis(p, {1}, {}, x2 * Rat(1, 2));
   CHECK(c2.h(vol) == expect);
   CHECK(d(c2.h(vol)) == vol);

   FormalForm one = FormalForm::function(p, Poly::constant(2, 1));
   CHECK(homotopy_defect(c2, one).is_zero());
   CHECK(c2.augment_out(one) == 1);
}

TEST_CASE("forms contraction identities")
{
   Rng rng(51);
   for (int n = 0; n <= 3; ++n)
      for (int k = 0; k + n <= 4; ++k)
      {
         Chart c{n, k, 3};
         auto ct = contract_forms(c);
         CHECK(ct.augment_out(ct.augment_in(Rat(7, 3))) == Rat(7, 3));
         for (int r = 0; r <= c.dim(); ++r)
         {
            FormalForm w = random_form(rng, c, r);
            CHECK(homotopy_defect(ct, w).is_zero());
            CHECK(d(ct.h(d(w))) == d(w));
         }
      }
}

TEST_CASE("tensor contraction")
{
   Rng rng(52);
   auto ca = contract_radial_x(1, 3), cb = contract_formal_y(1, 3);
   auto ct = tensor_contraction(ca, cb);
   Chart cx{1, 0, 3}, cy{0, 1, 3};
   Chart pc = product_chart(cx, cy, 3);
   auto direct = contract_forms(pc);
   for (int i = 0; i < 100; ++i)
   {
      int r1 = uniform(rng, 0, 1), r2 = uniform(rng, 0, 1);
      TensorElement<FormalForm, FormalForm> t(random_form(rng, cx, r1), random_form(rng, cy, r2));
      CHECK(psi(homotopy_defect(ct, t), pc).is_zero());
      if (i < 50)
         CHECK(psi(ct.h(t), pc) == direct.h(psi(t, pc)));
   }

   auto t0 = tensor_contraction(contract_formal_y(0, 3), contract_formal_y(0, 3));
   Chart c0{0, 0, 3};
   TensorElement<FormalForm, FormalForm> one(FormalForm::function(c0, Poly::constant(0, 2)),
                                             FormalForm::function(c0, Poly::constant(0, 1)));
   CHECK(t0.h(one).empty());
   CHECK(t0.augment_out(one) == 2);
}

TEST_CASE("density contraction")
{
   auto c1 = contract_density(1, 0, {}, 3);
   Chart ch{1, 0, 3};
   BiIndex vol(1, 0, {1}, {});
   PwPoly f = PwPoly::triangle() * Rat(5);
   auto eta = DensityCurrent::basis(ch, vol, DensityCoeff::term(1, {f}, {}));
   CHECK(c1.d(c1.h(eta)) == eta - c1.augment_in(zeta(eta)));
   CHECK(c1.augment_out(c1.augment_in(Rat(3, 4))) == Rat(3, 4));

   Rng rng(53);
   auto c11 = contract_density(1, 1, {}, 3);
   Chart p{1, 1, 3};
   for (int i = 0; i < 50; ++i)
   {
      DensityCurrent e = random_density(rng, p, uniform(rng, 0, 2));
      CHECK(homotopy_defect(c11, e).is_zero());
   }

   PwPoly tri = PwPoly::triangle();
   auto custom = contract_density(2, 0, {tri, PwPoly::bspline(3, -1)}, 3);
   for (int i = 0; i < 10; ++i)
   {
      DensityCurrent e = random_density(rng, Chart{2, 0, 3}, uniform(rng, 0, 2));
      CHECK(homotopy_defect(custom, e).is_zero());
   }
   CHECK_THROWS_AS(contract_density(1, 0, {tri * Rat(2)}, 3), NonUnitBump);
   CHECK_THROWS_AS(contract_density(2, 0, {tri}, 3), ArityMismatch);
}

TEST_CASE("transposed contractions")
{
   Rng rng(54);
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 1; ++k)
      {
         Chart c{n, k, 3};
         auto cf = contract_forms(c);
         auto ct = transpose_contraction(cf);
         for (int R = 0; R < c.dim(); ++R)
         {
            DeltaCurrent eta = random_delta(rng, c, R, true);
            DeltaCurrent heta = ct.h(eta);
            for (const auto &v : monomial_battery(c, R + 1, 2))
               CHECK(pair(v, heta) == pair(cf.h(v), eta) * Rat((R + 1) % 2 ? -1 : 1));
         }
         for (int i = 0; i < 10; ++i)
         {
            DeltaCurrent e = random_delta(rng, c, uniform(rng, 0, c.dim()), true);
            Functional zero{c, e.degree(), [](const FormalForm &) { return Rat(0); }};
            CHECK(agree_on_battery(embed(homotopy_defect(ct, e)), zero, 3));
         }

         auto cd = contract_density(n, k, {}, 3);
         auto cg = transpose_contraction(cd);
         for (int R = 1; R <= c.dim(); ++R)
         {
            GenFunction T = GenFunction::regular_part(random_form(rng, c, R));
            GenFunction hT = cg.h(T);
            for (int i = 0; i < 3; ++i)
            {
               DensityCurrent v = random_density(rng, c, R - 1);
               CHECK(apply(hT, v) == apply(T, cd.h(v)) * Rat((R - 1) % 2 ? -1 : 1));
            }
            CHECK(homotopy_defect(cg, T).is_zero());
         }
      }

   auto trivial = transpose_contraction(contract_forms(Chart{0, 0, 3}));
   DeltaCurrent pt(Chart{0, 0, 3}, 0);
   pt.add(DeltaKey{BiIndex(0, 0, {}, {}), {}, {}, {}}, 4);
   CHECK(trivial.h(pt).is_zero());
   CHECK(trivial.augment_out(pt) == 4);
}

TEST_CASE("transposed homotopy refuses points away from the origin")
{
   Chart c{1, 0, 3};
   auto ct = transpose_contraction(contract_forms(c));
   DeltaCurrent e(c, 0);
   e.add(DeltaKey{BiIndex(1, 0, {1}, {}), {Rat(1)}, {0}, {}}, 1);
   CHECK_THROWS_AS(ct.h(e), RepresentationOverflow);
}
