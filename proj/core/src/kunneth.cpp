#include "fdr/kunneth.hpp"
#include "fdr/errors.hpp"

namespace fdr {

Chart product_chart(const Chart &c1, const Chart &c2, int cap)
{
   return Chart{c1.n + c2.n, c1.k + c2.k, cap};
}

Poly relabel(const Poly &p, const Chart &from, const Chart &to, int xoff, int yoff)
{
   Poly r(to.dim());
   for (const auto &[e, c] : p.terms())
   {
      Exp f(to.dim(), 0);
      for (int i = 0; i < from.n; ++i)
         f[xoff + i] = e[i];
      for (int j = 0; j < from.k; ++j)
         f[to.n + yoff + j] = e[from.n + j];
      r.add_term(f, c);
   }
   return r;
}

FormalForm psi(const FormalForm &w1, const FormalForm &w2, int cap)
{
   const Chart &c1 = w1.chart(), &c2 = w2.chart();
   Chart pc = product_chart(c1, c2, cap);
   FormalForm out(pc, w1.degree() + w2.degree());
   int r = w1.degree() + w2.degree();
   for (const auto &[b1, f1] : w1.terms())
   {
      Poly g1 = relabel(f1, c1, pc, 0, 0);
      for (const auto &[b2, f2] : w2.terms())
      {
         auto [s, bi] = kunneth_reindex(r, b1, b2);
         out.add(bi, g1 * relabel(f2, c2, pc, c1.n, c1.k) * Rat(s));
      }
   }
   return out;
}

FormalForm psi(const TensorElement<FormalForm, FormalForm> &t, const Chart &product)
{
   FormalForm out(product, complex_degree(t));
   for (const auto &[u, v] : t.pairs)
   {
      FormalForm p = psi(u, v, product.cap);
      if (!(p.chart() == product))
         throw DimensionMismatch("psi: factors do not build the requested product chart");
      out += p;
   }
   return out;
}

TensorElement<FormalForm, FormalForm> psi_inverse(const FormalForm &w, const Chart &c1,
                                                 const Chart &c2)
{
   const Chart &pc = w.chart();
   if (pc.n != c1.n + c2.n || pc.k != c1.k + c2.k)
      throw DimensionMismatch("psi_inverse: factor charts do not match");
   TensorElement<FormalForm, FormalForm> out;
   for (const auto &[bi, f] : w.terms())
   {
      auto [s, parts] = kunneth_split(bi, c1.n, c1.k);
      const auto &[b1, b2] = parts;
      for (const auto &[e, c] : f.terms())
      {
         Exp e1(c1.dim()), e2(c2.dim());
         for (int i = 0; i < c1.n; ++i)
            e1[i] = e[i];
         for (int i = 0; i < c2.n; ++i)
            e2[i] = e[c1.n + i];
         for (int j = 0; j < c1.k; ++j)
            e1[c1.n + j] = e[pc.n + j];
         for (int j = 0; j < c2.k; ++j)
            e2[c2.n + j] = e[pc.n + c1.k + j];
         out.add(FormalForm::monomial(c1, b1, Poly::monomial(c1.dim(), e1, c * s)),
                 FormalForm::monomial(c2, b2, Poly::monomial(c2.dim(), e2)));
      }
   }
   return out;
}

int boxtimes_exponent(int n1, int k1, int r1, int t1, int n2, int k2, int r2, int t2)
{
   (void)k2;
   return t2 * k1 + n2 * r1 + n2 * t1 + r2 * k1 + n1 * r2 + r1 * t2 + t1 * t2;
}

Sign boxtimes_sign(const BiIndex &dual1, const BiIndex &dual2)
{
   int n1 = dual1.n(), k1 = dual1.k(), n2 = dual2.n(), k2 = dual2.k();
   int r1 = n1 + k1 - dual1.degree(), r2 = n2 + k2 - dual2.degree();
   int t1 = n1 - dual1.xpart().size(), t2 = n2 - dual2.xpart().size();
   return (boxtimes_exponent(n1, k1, r1, t1, n2, k2, r2, t2) % 2) ? -1 : 1;
}

namespace {

BiIndex concat_dual(const BiIndex &a, const BiIndex &b)
{
   return BiIndex(shift_concat(a.xpart(), b.xpart(), a.n()),
                  shift_concat(a.ypart(), b.ypart(), a.k()));
}

} // namespace

DensityCurrent boxtimes(const DensityCurrent &e1, const DensityCurrent &e2, int cap)
{
   Chart pc = product_chart(e1.chart(), e2.chart(), cap);
   DensityCurrent out(pc, e1.degree() + e2.degree());
   for (const auto &[b1, t1] : e1.terms())
      for (const auto &[b2, t2] : e2.terms())
         out.add(concat_dual(b1, b2), density_tensor(t1, t2) * Rat(boxtimes_sign(b1, b2)));
   return out;
}

DeltaCurrent boxtimes(const DeltaCurrent &e1, const DeltaCurrent &e2, int cap)
{
   Chart pc = product_chart(e1.chart(), e2.chart(), cap);
   DeltaCurrent out(pc, e1.degree() + e2.degree());
   for (const auto &[k1, c1] : e1.terms())
      for (const auto &[k2, c2] : e2.terms())
      {
         DeltaKey key{concat_dual(k1.dual, k2.dual), k1.point, k1.alpha, k1.L};
         key.point.insert(key.point.end(), k2.point.begin(), k2.point.end());
         key.alpha.insert(key.alpha.end(), k2.alpha.begin(), k2.alpha.end());
         key.L.insert(key.L.end(), k2.L.begin(), k2.L.end());
         out.add(key, c1 * c2 * boxtimes_sign(k1.dual, k2.dual));
      }
   return out;
}

DensityCurrent boxtimes(const TensorElement<DensityCurrent, DensityCurrent> &t,
                        const Chart &product)
{
   DensityCurrent out(product, -complex_degree(t));
   for (const auto &[u, v] : t.pairs)
      out += boxtimes(u, v, product.cap);
   return out;
}

TensorElement<DensityCurrent, DensityCurrent> boxtimes_inverse(const DensityCurrent &e,
                                                               const Chart &c1, const Chart &c2)
{
   const Chart &pc = e.chart();
   if (pc.n != c1.n + c2.n || pc.k != c1.k + c2.k)
      throw DimensionMismatch("boxtimes_inverse: factor charts do not match");
   TensorElement<DensityCurrent, DensityCurrent> out;
   for (const auto &[dual, tau] : e.terms())
   {
      auto parts = kunneth_split(dual, c1.n, c1.k).second;
      const auto &[b1, b2] = parts;
      Sign s = boxtimes_sign(b1, b2);
      for (const auto &t : tau.terms())
      {
         std::vector<PwPoly> a1(t.axes.begin(), t.axes.begin() + c1.n);
         std::vector<PwPoly> a2(t.axes.begin() + c1.n, t.axes.end());
         Exp L1(t.L.begin(), t.L.begin() + c1.k), L2(t.L.begin() + c1.k, t.L.end());
         out.add(DensityCurrent::basis(c1, b1, DensityCoeff::term(t.c * s, a1, L1)),
                 DensityCurrent::basis(c2, b2, DensityCoeff::term(1, a2, L2)));
      }
   }
   return out;
}

} // namespace fdr
