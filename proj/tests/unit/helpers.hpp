#ifndef FDR_TEST_HELPERS_HPP
#define FDR_TEST_HELPERS_HPP

#include "fdr/currents.hpp"
#include "fdr/generalized.hpp"

#include <random>

namespace fdr::test {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi)
{
   return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat small_rat(Rng &rng)
{
   int num = uniform(rng, -5, 5);
   Rat q(num == 0 ? 1 : num, uniform(rng, 1, 4));
   q.canonicalize();
   return q;
}

inline Poly random_poly(Rng &rng, int nvars, int maxdeg, int terms = 3)
{
   Poly p(nvars);
   for (int t = 0; t < terms; ++t)
   {
      Exp e(nvars, 0);
      for (auto &v : e)
         v = uniform(rng, 0, maxdeg);
      p.add_term(e, small_rat(rng));
   }
   return p;
}

inline FormalForm random_form(Rng &rng, const Chart &c, int r)
{
   FormalForm w(c, r);
   for (const auto &bi : enumerate_bi(c.n, c.k, r))
      if (uniform(rng, 0, 2))
         w.add(bi, random_poly(rng, c.dim(), 2, 2));
   return w;
}

inline PwPoly random_pw(Rng &rng)
{
   static const Rat lefts[] = {Rat(-2), Rat(-1), Rat(0), Rat(1, 3), Rat(1)};
   PwPoly f = PwPoly::bspline(uniform(rng, 2, 3), lefts[uniform(rng, 0, 4)],
                              uniform(rng, 0, 1) ? Rat(1) : Rat(1, 2)) *
              small_rat(rng);
   if (uniform(rng, 0, 1))
      f += PwPoly::bspline(2, lefts[uniform(rng, 0, 4)]) * small_rat(rng);
   return f.is_zero() ? PwPoly::default_bump() : f;
}

inline DensityCurrent random_density(Rng &rng, const Chart &c, int r)
{
   DensityCurrent e(c, r);
   for (const auto &dual : enumerate_bi(c.n, c.k, c.dim() - r))
   {
      std::vector<PwPoly> axes;
      for (int i = 0; i < c.n; ++i)
         axes.push_back(random_pw(rng));
      Exp L(c.k);
      for (auto &v : L)
         v = uniform(rng, 0, 1);
      e.add(dual, DensityCoeff::term(small_rat(rng), axes, L));
   }
   return e;
}

inline DeltaCurrent random_delta(Rng &rng, const Chart &c, int r, bool at_origin = false)
{
   DeltaCurrent e(c, r);
   for (const auto &dual : enumerate_bi(c.n, c.k, c.dim() - r))
   {
      std::vector<Rat> p(c.n, 0);
      if (!at_origin)
         for (auto &v : p)
            v = small_rat(rng);
      Exp a(c.n), L(c.k);
      for (auto &v : a)
         v = uniform(rng, 0, 2);
      for (auto &v : L)
         v = uniform(rng, 0, 1);
      e.add(DeltaKey{dual, p, a, L}, small_rat(rng));
   }
   return e;
}

inline Poly var(const Chart &c, int i) { return Poly::variable(c.dim(), i); }

} // namespace fdr::test

#endif
