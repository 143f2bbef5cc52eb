#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "fdr/errors.hpp"
#include "fdr/kunneth.hpp"

using namespace fdr;
using namespace fdr::test;

namespace {

using FF = TensorElement<FormalForm, FormalForm>;

FormalForm basis(const Chart &c, std::vector<int> x, std::vector<int> y, const Poly &p)
{
   return FormalForm::monomial(c, BiIndex(c.n, c.k, std::move(x), std::move(y)), p);
}

const Chart kCharts[] = {{1, 0, 3}, {0, 1, 3}, {1, 1, 3}, {2, 0, 3}};

} // namespace

TEST_CASE("d_tensor Koszul signs")
{
   Chart cx{1, 0, 3}, cy{0, 1, 3};
   Chart pc = product_chart(cx, cy, 3);
   FormalForm x = FormalForm::function(cx, var(cx, 0));
   FormalForm y = FormalForm::function(cy, var(cy, 0));
   FormalForm dx = d(x), dy = d(y);

   FF expect(dx, y);
   expect.add(x, dy);
   CHECK(psi(d_tensor(FF(x, y)), pc) == psi(expect, pc));

   FF t(dx, y);
   FF want(dx * Rat(-1), dy);
   CHECK(psi(d_tensor(t), pc) == psi(want, pc));

   Rng rng(41);
   for (int i = 0; i < 100; ++i)
   {
      const Chart &c1 = kCharts[uniform(rng, 0, 3)], &c2 = kCharts[uniform(rng, 0, 3)];
      FF e(random_form(rng, c1, uniform(rng, 0, c1.dim())),
           random_form(rng, c2, uniform(rng, 0, c2.dim())));
      CHECK(psi(d_tensor(d_tensor(e)), product_chart(c1, c2, 3)).is_zero());
   }
}

TEST_CASE("psi")
{
   Chart c0{0, 0, 3};
   FormalForm one = FormalForm::function(c0, Poly::constant(0, 1));
   CHECK(psi(one, one, 3) == FormalForm::function(c0, Poly::constant(0, 1)));

   Chart cy{0, 1, 3}, cx{1, 0, 3};
   Chart pc = product_chart(cy, cx, 3);
   FormalForm dy = basis(cy, {}, {1}, Poly::constant(1, 1));
   FormalForm dx = basis(cx, {1}, {}, Poly::constant(1, 1));
   CHECK(psi(dy, dx, 3) == basis(pc, {1}, {1}, Poly::constant(2, -1)));

   Rng rng(42);
   for (int i = 0; i < 100; ++i)
   {
      const Chart &c1 = kCharts[uniform(rng, 0, 3)], &c2 = kCharts[uniform(rng, 0, 3)];
      Chart p = product_chart(c1, c2, 3);
      FF e(random_form(rng, c1, uniform(rng, 0, c1.dim())),
           random_form(rng, c2, uniform(rng, 0, c2.dim())));
      CHECK(d(psi(e, p)) == psi(d_tensor(e), p));
   }
}

TEST_CASE("psi_inverse")
{
   Rng rng(43);
   for (int i = 0; i < 40; ++i)
   {
      const Chart &c1 = kCharts[uniform(rng, 0, 3)], &c2 = kCharts[uniform(rng, 0, 3)];
      Chart p = product_chart(c1, c2, 3);
      FormalForm w = random_form(rng, p, uniform(rng, 0, p.dim()));
      CHECK(psi(psi_inverse(w, c1, c2), p) == w);
   }
}

TEST_CASE("boxtimes")
{
   Chart c1{1, 1, 3}, c2{1, 0, 3};
   PwPoly B = PwPoly::default_bump(), T = PwPoly::triangle() * Rat(3);
   auto e1 = DensityCurrent::basis(c1, BiIndex(1, 1, {1}, {1}), DensityCoeff::term(2, {B}, {0}));
   auto e2 = DensityCurrent::basis(c2, BiIndex(1, 0, {1}, {}), DensityCoeff::term(1, {T}, {}));
   CHECK(zeta(boxtimes(e1, e2, 3)) == zeta(e1) * zeta(e2));
   CHECK(zeta(boxtimes(e1, e2, 3)) == 6);

   Rng rng(44);
   for (int i = 0; i < 50; ++i)
   {
      const Chart &a = kCharts[uniform(rng, 0, 3)], &b = kCharts[uniform(rng, 0, 3)];
      int r1 = uniform(rng, 1, a.dim()), r2 = uniform(rng, 0, b.dim());
      DensityCurrent x = random_density(rng, a, r1), y = random_density(rng, b, r2);
      Chart p = product_chart(a, b, 3);
      DensityCurrent lhs = d_density(boxtimes(x, y, 3));
      DensityCurrent rhs = boxtimes(d_density(x), y, 3);
      if (r2 > 0)
         rhs += boxtimes(x, d_density(y), 3) * Rat(r1 % 2 ? -1 : 1);
      CHECK(agree_on_battery(embed(lhs), embed(rhs), 2));
   }
}

TEST_CASE("boxtimes on deltas and inverse")
{
   Rng rng(45);
   for (int i = 0; i < 30; ++i)
   {
      const Chart &a = kCharts[uniform(rng, 0, 3)], &b = kCharts[uniform(rng, 0, 3)];
      int r1 = uniform(rng, 0, a.dim()), r2 = uniform(rng, 0, b.dim());
      DeltaCurrent x = random_delta(rng, a, r1), y = random_delta(rng, b, r2);
      FormalForm w1 = random_form(rng, a, r1), w2 = random_form(rng, b, r2);
      Rat lhs = pair(psi(w1, w2, 3), boxtimes(x, y, 3));
      CHECK(lhs == pair(w1, x) * pair(w2, y) * Rat((r1 * r2) % 2 ? -1 : 1));

      DensityCurrent e = random_density(rng, product_chart(a, b, 3), uniform(rng, 0, a.dim() + b.dim()));
      CHECK(boxtimes(boxtimes_inverse(e, a, b), product_chart(a, b, 3)) == e);
   }
}

TEST_CASE("sign exponent")
{
   CHECK(boxtimes_exponent(0, 0, 0, 0, 0, 0, 0, 0) == 0);
   CHECK(boxtimes_sign(BiIndex(1, 0, {1}, {}), BiIndex(1, 0, {1}, {})) == 1);
}
