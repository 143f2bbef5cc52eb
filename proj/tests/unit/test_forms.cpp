#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "fdr/errors.hpp"
#include "fdr/forms.hpp"

using namespace fdr;
using namespace fdr::test;

namespace {

BiIndex bi(const Chart &c, std::vector<int> x, std::vector<int> y)
{
   return BiIndex(c.n, c.k, std::move(x), std::move(y));
}

FormalForm fn(const Chart &c, const Poly &p) { return FormalForm::function(c, p); }

FormalForm basis(const Chart &c, std::vector<int> x, std::vector<int> y, const Poly &p)
{
   return FormalForm::monomial(c, bi(c, std::move(x), std::move(y)), p);
}

Poly one(const Chart &c) { return Poly::constant(c.dim(), 1); }

} // namespace

TEST_CASE("d on functions")
{
   Chart c10{1, 0, 4};
   Poly x = var(c10, 0);
   CHECK(d(fn(c10, x * x)) == basis(c10, {1}, {}, x * Rat(2)));

   Chart c01{0, 1, 6};
   Poly y = var(c01, 0);
   for (int i = 1; i <= 5; ++i)
      CHECK(d(fn(c01, y.pow(i))) == basis(c01, {}, {1}, y.pow(i - 1) * Rat(i)));

   Chart c11{1, 1, 4};
   Poly X = var(c11, 0), Y = var(c11, 1);
   FormalForm dxy = d(fn(c11, X * Y));
   CHECK(dxy == basis(c11, {1}, {}, Y) + basis(c11, {}, {1}, X));
   CHECK(d(dxy).is_zero());
}

TEST_CASE("d squares to zero")
{
   Rng rng(21);
   for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart c{n, k, 3};
         for (int r = 0; r <= c.dim(); ++r)
            CHECK(d(d(random_form(rng, c, r))).is_zero());
      }
}

TEST_CASE("wedge")
{
   Chart c{1, 1, 4};
   Poly u = one(c), X = var(c, 0), Y = var(c, 1);
   FormalForm dx = basis(c, {1}, {}, u), dy = basis(c, {}, {1}, u);
   CHECK(wedge(dx, dy) == -wedge(dy, dx));
   CHECK(wedge(dx, dx).is_zero());
   CHECK(wedge(basis(c, {1}, {}, X), basis(c, {}, {1}, Y)) == basis(c, {1}, {1}, X * Y));
   CHECK(wedge(fn(c, X), fn(c, Y)) == fn(c, X * Y));
}

TEST_CASE("graded commutativity and Leibniz")
{
   Rng rng(22);
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart c{n, k, 3};
         for (int r = 0; r <= c.dim(); ++r)
            for (int s = 0; r + s <= c.dim(); ++s)
            {
               FormalForm a = random_form(rng, c, r), b = random_form(rng, c, s);
               FormalForm ba = wedge(b, a);
               if ((r * s) % 2)
                  ba = -ba;
               CHECK(wedge(a, b) == ba);
               FormalForm rhs = wedge(d(a), b) + wedge(a, d(b)) * Rat(r % 2 ? -1 : 1);
               CHECK(d(wedge(a, b)) == rhs);
            }
      }
}

TEST_CASE("weight truncation")
{
   Chart c{0, 1, 2};
   Poly y = var(c, 0);
   FormalForm w = fn(c, y.pow(3));
   CHECK(w.is_zero());
   CHECK(w.truncated());
   // y^2 dy has weight 3 > 2
   CHECK(basis(c, {}, {1}, y * y).is_zero());
   CHECK(d(fn(c, y * y)) == basis(c, {}, {1}, y * Rat(2)));
}

TEST_CASE("eval_on_derivations")
{
   Chart c{1, 1, 4};
   Poly u = one(c);
   Derivation dX = Derivation::basis(c, Axis::x(1)), dY = Derivation::basis(c, Axis::y(1));
   FormalForm dx = basis(c, {1}, {}, u);
   CHECK(eval_on_derivations(dx, {dX}).poly() == u);
   CHECK(eval_on_derivations(dx, {dY}).is_zero());
   FormalForm dxdy = basis(c, {1}, {1}, u);
   CHECK(eval_on_derivations(dxdy, {dX, dY}).poly() == u);
   CHECK(eval_on_derivations(dxdy, {dY, dX}).poly() == -u);
   CHECK_THROWS_AS(eval_on_derivations(dxdy, {dX}), ArityMismatch);

   Rng rng(23);
   Chart c2{2, 1, 3};
   for (int i = 0; i < 20; ++i)
   {
      FormalForm w = random_form(rng, c2, 2);
      Derivation X{{random_poly(rng, 3, 1), random_poly(rng, 3, 1), random_poly(rng, 3, 1)}};
      CHECK(eval_on_derivations(w, {X, X}).is_zero());
   }
}

TEST_CASE("pullback")
{
   Rng rng(24);
   Chart c{2, 1, 3};
   ChartMorphism id = ChartMorphism::identity(c);
   for (int i = 0; i < 30; ++i)
   {
      int r = uniform(rng, 0, c.dim());
      FormalForm w = random_form(rng, c, r);
      CHECK(pullback(id, w) == w);
   }

   Chart c10{1, 0, 4};
   Poly x = var(c10, 0);
   ChartMorphism sq{c10, c10, {x * x}, {}};
   CHECK(pullback(sq, basis(c10, {1}, {}, one(c10))) == basis(c10, {1}, {}, x * Rat(2)));

   // a map with a genuine y-mixing: x -> x1 + y1^2, y -> y1 + x1 y1
   Chart src{1, 1, 3};
   Poly X = var(src, 0), Y = var(src, 1);
   ChartMorphism phi{src, src, {X + Y * Y}, {Y + X * Y}};
   for (int i = 0; i < 30; ++i)
   {
      int r = uniform(rng, 0, src.dim());
      FormalForm w = random_form(rng, src, r);
      CHECK(pullback(phi, d(w)) == d(pullback(phi, w)));
   }
   ChartMorphism bad{src, src, {X}, {X + Y}};
   CHECK_THROWS_AS(pullback(bad, fn(src, X)), TruncationUnsafe);
}

TEST_CASE("form structure")
{
   Chart c{1, 1, 3};
   CHECK_THROWS_AS(FormalForm::monomial(c, BiIndex(2, 1, {2}, {}), one(c)), IndexOutOfChart);
   FormalForm w(c, 1);
   CHECK_THROWS_AS(w.add(bi(c, {1}, {1}), one(c)), DegreeMismatch);
   FormalForm a1 = basis(c, {1}, {}, one(c)), a2 = basis(c, {1}, {1}, one(c));
   CHECK_THROWS_AS(a1 + a2, DegreeMismatch);
   CHECK_THROWS_AS(w + FormalForm(Chart{2, 0, 3}, 1), DimensionMismatch);
   CHECK((a1 - a1).is_zero());
   CHECK((a1 - a1).terms().empty());
}
