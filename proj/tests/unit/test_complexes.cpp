#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "fdr/complexes.hpp"
#include "fdr/errors.hpp"

#include <algorithm>

using namespace fdr;
using namespace fdr::test;

namespace {

bool all_zero(const std::vector<int> &v)
{
   return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

RatMatrix from_rows(std::vector<std::vector<int>> rows)
{
   RatMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
   for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
         m(i, j) = rows[i][j];
   return m;
}

} // namespace

TEST_CASE("rank and solve")
{
   CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
   CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
   CHECK(rank(RatMatrix::identity(5)) == 5);
   RatMatrix m = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
   auto inv = inverse(m);
   REQUIRE(inv);
   CHECK(*inv * m == RatMatrix::identity(3));
   CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})));
   auto x = solve(m, {Rat(1), Rat(2), Rat(3)});
   REQUIRE(x);
   CHECK(m(0, 0) * (*x)[0] + m(0, 1) * (*x)[1] == 1);
   CHECK_FALSE(solve(from_rows({{1, 1}, {1, 1}}), {Rat(1), Rat(2)}));

   // block-diagonal matrices are ranked block by block
   Rng rng(61);
   RatMatrix big(12, 12);
   for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 3; ++i)
         for (int j = 0; j < 4; ++j)
            big(4 * b + i, 4 * b + j) = small_rat(rng);
   CHECK(rank(big) == rank(big.transposed()));
   CHECK(rank(big) <= 9);
}

TEST_CASE("assembled forms complex")
{
   FiniteComplex c = assemble(1, 0, 2, 4, ComplexKind::Forms, false);
   CHECK(c.lo == 0);
   CHECK(c.dim(0) == 3);
   CHECK(c.dim(1) == 2);
   // d(1) = 0, d(x) = dx, d(x^2) = 2x dx
   RatMatrix d0 = c.coboundary(0);
   CHECK(rank(d0) == 2);
   CHECK(c.d_squared_zero());

   FiniteComplex z = assemble(0, 0, 2, 2, ComplexKind::Forms, true);
   CHECK(z.dim(-1) == 1);
   CHECK(z.dim(0) == 1);
   CHECK(all_zero(betti(z)));
}

TEST_CASE("assembled matrices are d on monomials")
{
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart chart{n, k, 3};
         FormBasis basis(chart, 3);
         FiniteComplex c = assemble(n, k, 3, 3, ComplexKind::Forms, false);
         for (int r = 0; r < chart.dim(); ++r)
         {
            RatMatrix m = c.coboundary(r);
            const auto &elems = basis.elements(r);
            for (std::size_t j = 0; j < elems.size(); ++j)
            {
               auto v = basis.coords(d(elems[j]));
               for (int i = 0; i < m.rows(); ++i)
                  CHECK(m(i, static_cast<int>(j)) == v[i]);
            }
         }
      }
}

TEST_CASE("betti numbers")
{
   CHECK(all_zero(betti(assemble(1, 1, 2, 2, ComplexKind::Forms, true))));
   CHECK(betti(assemble(1, 1, 2, 2, ComplexKind::Forms, false)) == std::vector<int>{1, 0, 0});

   FiniteComplex zero;
   zero.lo = 0;
   zero.labels = {{"a", "b"}, {"c"}};
   zero.d = {RatMatrix(1, 2), RatMatrix(0, 1)};
   CHECK(betti(zero) == std::vector<int>{2, 1});

   for (auto kind : {ComplexKind::Forms, ComplexKind::Densities, ComplexKind::Distributions,
                     ComplexKind::Generalized})
   {
      FiniteComplex c = assemble(1, 1, 3, 3, kind, true);
      CHECK(c.d_squared_zero());
      CHECK(all_zero(betti(c)));
   }
   CHECK_THROWS_AS(assemble(1, 1, 2, 2, ComplexKind::Tensor, true), UnsupportedKind);
}

TEST_CASE("transpose")
{
   FiniteComplex c = assemble(1, 1, 2, 2, ComplexKind::Forms, false);
   FiniteComplex t = transpose(c);
   CHECK(t.lo == -c.hi());
   auto b = betti(c), bt = betti(t);
   std::reverse(bt.begin(), bt.end());
   CHECK(b == bt);
   CHECK(t.d_squared_zero());

   FiniteComplex tt = transpose(t);
   CHECK(tt.lo == c.lo);
   for (int i = 0; i < c.size(); ++i)
   {
      int deg = c.lo + i;
      RatMatrix m = c.coboundary(deg) * Rat(-1);
      CHECK(tt.coboundary(deg) == m);
   }

   FiniteComplex two;
   two.lo = 0;
   two.labels = {{"u"}, {"v"}};
   two.d = {from_rows({{3}}), RatMatrix(0, 1)};
   FiniteComplex tw = transpose(two);
   CHECK(tw.lo == -1);
   CHECK(tw.coboundary(-1)(0, 0) == -3);
}

TEST_CASE("certify strong exactness")
{
   FiniteComplex cy = assemble(0, 2, 3, 3, ComplexKind::Forms, true);
   auto hy = homotopy_matrices(contract_forms(Chart{0, 2, 3}), 3, true);
   CHECK(certify_strong_exactness(cy, hy).ok);

   FiniteComplex cd = assemble(1, 1, 3, 3, ComplexKind::Densities, true);
   auto hd = homotopy_matrices(contract_density(1, 1, {}, 3), 5, true);
   CHECK(certify_strong_exactness(cd, hd).ok);

   Rng rng(62);
   HomotopyMatrices bad = hy;
   for (auto &m : bad)
      for (int i = 0; i < m.rows(); ++i)
         for (int j = 0; j < m.cols(); ++j)
            m(i, j) = small_rat(rng);
   CertifyReport rep = certify_strong_exactness(cy, bad);
   CHECK_FALSE(rep.ok);
   CHECK_FALSE(rep.witness.empty());
   CHECK_FALSE(rep.witness_label.empty());

   HomotopyMatrices short_h(hy.begin(), hy.end() - 1);
   CHECK_THROWS_AS(certify_strong_exactness(cy, short_h), ShapeMismatch);

   // unaugmented complex: id - P with P the projection onto constants
   FiniteComplex cu = assemble(0, 1, 3, 3, ComplexKind::Forms, false);
   auto hu = homotopy_matrices(contract_forms(Chart{0, 1, 3}), 3, false);
   std::vector<RatMatrix> proj;
   for (int i = 0; i < cu.size(); ++i)
      proj.emplace_back(cu.dim(cu.lo + i), cu.dim(cu.lo + i));
   proj[0](0, 0) = 1;
   CHECK(certify_strong_exactness(cu, hu, proj).ok);
   CHECK_FALSE(certify_strong_exactness(cu, hu).ok);
}

TEST_CASE("spline coordinates")
{
   auto c = spline_coords(PwPoly::bspline(2, 1), 2, 5);
   REQUIRE(c);
   CHECK((*c)[1] == 1);
   CHECK_FALSE(spline_coords(PwPoly::bspline(2, -1), 2, 5));
   CHECK_FALSE(spline_coords(PwPoly::indicator(0, 1), 2, 5));
   DensityBasis db(Chart{1, 0, 2}, 5);
   CHECK(db.elements(0).size() == 3);
   CHECK(db.elements(1).size() == 2);
}
