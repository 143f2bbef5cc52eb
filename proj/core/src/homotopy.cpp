#include "fdr/homotopy.hpp"
#include "fdr/errors.hpp"
#include "fdr/matrix.hpp"

#include <set>

namespace fdr {

std::string to_string(ComplexKind kind)
{
   switch (kind)
   {
   case ComplexKind::Forms: return "forms";
   case ComplexKind::Densities: return "densities";
   case ComplexKind::Distributions: return "distributions";
   case ComplexKind::Generalized: return "generalized";
   case ComplexKind::Tensor: return "tensor";
   }
   return "unknown";
}

namespace {

BiIndex empty_bi(const Chart &c) { return BiIndex(c.n, c.k, {}, {}); }

BiIndex full_bi(const Chart &c) { return empty_bi(c).complement(); }

Rat constant_term(const FormalForm &w)
{
   if (w.degree() != 0)
      return 0;
   return w.coeff_poly(empty_bi(w.chart())).constant_term();
}

Contraction<FormalForm> trivial_forms(const Chart &chart)
{
   Contraction<FormalForm> c;
   c.kind = ComplexKind::Forms;
   c.chart = chart;
   c.augment_in = [chart](const Rat &l) {
      return FormalForm::function(chart, Poly::constant(chart.dim(), l));
   };
   c.augment_out = constant_term;
   c.h = [chart](const FormalForm &w) { return FormalForm(chart, w.degree() - 1); };
   c.d = [](const FormalForm &w) { return d(w); };
   return c;
}

Contraction<DensityCurrent> trivial_densities(const Chart &chart)
{
   Contraction<DensityCurrent> c;
   c.kind = ComplexKind::Densities;
   c.chart = chart;
   c.augment_in = [chart](const Rat &l) {
      return DensityCurrent::basis(chart, full_bi(chart), DensityCoeff::term(l, {}, Exp(chart.k, 0)));
   };
   c.augment_out = [](const DensityCurrent &e) { return e.degree() == 0 ? zeta(e) : Rat(0); };
   c.h = [chart](const DensityCurrent &e) { return DensityCurrent(chart, e.degree() + 1); };
   c.d = [](const DensityCurrent &e) { return d_density(e); };
   return c;
}

template <class V, class A, class B, class To, class From>
Contraction<V> conjugate(const Contraction<TensorElement<A, B>> &ct, ComplexKind kind,
                         const Chart &chart, int step, To to, From from)
{
   Contraction<V> c;
   c.kind = kind;
   c.chart = chart;
   c.augment_in = [ct, to](const Rat &l) { return to(ct.augment_in(l)); };
   c.augment_out = [ct, from](const V &x) { return ct.augment_out(from(x)); };
   c.h = [ct, to, from, chart, step](const V &x) {
      V out = to(ct.h(from(x)));
      if (out.is_zero())
         return V(chart, x.degree() + step);
      return out;
   };
   c.d = [](const V &x) { return coboundary(x); };
   return c;
}

} // namespace

Contraction<FormalForm> contract_radial_x(int n, int cap)
{
   Chart chart{n, 0, cap};
   Contraction<FormalForm> c = trivial_forms(chart);
   c.h = [chart](const FormalForm &w) {
      int r = w.degree();
      FormalForm out(chart, r - 1);
      if (r <= 0)
         return out;
      for (const auto &[bi, f] : w.terms())
      {
         const auto &I = bi.xpart().entries();
         for (std::size_t q = 0; q < I.size(); ++q)
         {
            int i = I[q];
            Poly g(chart.dim());
            for (const auto &[e, coef] : f.terms())
            {
               Exp e2 = e;
               e2[i - 1] += 1;
               g.add_term(e2, coef / (exp_degree(e) + r));
            }
            if (q % 2)
               g *= Rat(-1);
            out.add(BiIndex(bi.xpart().without(i), bi.ypart()), g);
         }
      }
      return out;
   };
   return c;
}

Contraction<FormalForm> contract_formal_y(int k, int cap)
{
   if (k == 0)
      return trivial_forms(Chart{0, 0, cap});
   if (k > 1)
      return product_contraction(contract_formal_y(1, cap), contract_formal_y(k - 1, cap));
   Chart chart{0, 1, cap};
   Contraction<FormalForm> c = trivial_forms(chart);
   c.h = [chart](const FormalForm &w) {
      FormalForm out(chart, w.degree() - 1);
      if (w.degree() != 1)
         return out;
      Poly g(1), f = w.coeff_poly(BiIndex(0, 1, {}, {1}));
      for (const auto &[e, coef] : f.terms())
         g.add_term({e[0] + 1}, coef / (e[0] + 1));
      out.add(empty_bi(chart), g);
      return out;
   };
   return c;
}

Contraction<FormalForm> contract_forms(const Chart &chart)
{
   if (chart.n == 0)
      return contract_formal_y(chart.k, chart.cap);
   if (chart.k == 0)
      return contract_radial_x(chart.n, chart.cap);
   return product_contraction(contract_radial_x(chart.n, chart.cap),
                              contract_formal_y(chart.k, chart.cap));
}

Contraction<FormalForm> product_contraction(const Contraction<FormalForm> &ca,
                                            const Contraction<FormalForm> &cb)
{
   Chart c1 = ca.chart, c2 = cb.chart;
   Chart pc = product_chart(c1, c2, c1.cap);
   auto ct = tensor_contraction(ca, cb);
   using T = TensorElement<FormalForm, FormalForm>;
   auto to = [pc](const T &t) { return psi(t, pc); };
   auto from = [c1, c2](const FormalForm &w) { return psi_inverse(w, c1, c2); };
   return conjugate<FormalForm>(ct, ComplexKind::Forms, pc, -1, to, from);
}

Contraction<DensityCurrent> contract_density_axis(const PwPoly &bump, int cap)
{
   if (bump.integral() != 1)
      throw NonUnitBump("density contraction needs a bump of integral 1");
   Chart chart{1, 0, cap};
   Contraction<DensityCurrent> c = trivial_densities(chart);
   BiIndex top = full_bi(chart), none = empty_bi(chart);
   c.augment_in = [chart, top, bump](const Rat &l) {
      return DensityCurrent::basis(chart, top, DensityCoeff::term(l, {bump}, {}));
   };
   c.h = [chart, top, none, bump](const DensityCurrent &e) {
      DensityCurrent out(chart, e.degree() + 1);
      if (e.degree() != 0)
         return out;
      DensityCoeff g(1, 0), f = e.coeff(top);
      for (const auto &t : f.terms())
         g.add(DensityTerm{t.c, {pw_star(bump, t.axes[0])}, {}});
      out.add(none, g);
      return out;
   };
   return c;
}

Contraction<DensityCurrent> product_contraction(const Contraction<DensityCurrent> &ca,
                                                const Contraction<DensityCurrent> &cb)
{
   Chart c1 = ca.chart, c2 = cb.chart;
   Chart pc = product_chart(c1, c2, c1.cap);
   auto ct = tensor_contraction(ca, cb);
   using T = TensorElement<DensityCurrent, DensityCurrent>;
   auto to = [pc](const T &t) { return boxtimes(t, pc); };
   auto from = [c1, c2](const DensityCurrent &e) { return boxtimes_inverse(e, c1, c2); };
   return conjugate<DensityCurrent>(ct, ComplexKind::Densities, pc, 1, to, from);
}

Contraction<DensityCurrent> contract_density(int n, int k, const std::vector<PwPoly> &bumps,
                                             int cap)
{
   if (!bumps.empty() && static_cast<int>(bumps.size()) != n)
      throw ArityMismatch("contract_density: one bump per x-axis expected");
   if (n == 0)
   {
      Chart chart{0, k, cap};
      if (k == 0)
         return trivial_densities(chart);
      auto dist = transpose_contraction(contract_formal_y(k, cap));
      Contraction<DensityCurrent> c;
      c.kind = ComplexKind::Densities;
      c.chart = chart;
      c.augment_in = [dist](const Rat &l) { return as_density(dist.augment_in(l)); };
      c.augment_out = [dist](const DensityCurrent &e) { return dist.augment_out(as_delta(e)); };
      c.h = [dist](const DensityCurrent &e) { return as_density(dist.h(as_delta(e))); };
      c.d = [](const DensityCurrent &e) { return d_density(e); };
      return c;
   }
   PwPoly b0 = bumps.empty() ? PwPoly::default_bump() : bumps[0];
   std::vector<PwPoly> rest;
   if (!bumps.empty())
      rest.assign(bumps.begin() + 1, bumps.end());
   auto axis = contract_density_axis(b0, cap);
   if (n == 1 && k == 0)
      return axis;
   return product_contraction(axis, contract_density(n - 1, k, rest, cap));
}

Contraction<DeltaCurrent> transpose_contraction(const Contraction<FormalForm> &cf)
{
   Chart chart = cf.chart;
   Contraction<DeltaCurrent> c;
   c.kind = ComplexKind::Distributions;
   c.chart = chart;
   c.d = [](const DeltaCurrent &e) { return d_distribution(e); };
   c.augment_in = [cf, chart](const Rat &l) {
      DeltaCurrent out(chart, 0);
      Rat g = cf.augment_out(FormalForm::function(chart, Poly::constant(chart.dim(), 1)));
      out.add(DeltaKey{full_bi(chart), std::vector<Rat>(chart.n, 0), Exp(chart.n, 0),
                       Exp(chart.k, 0)},
              l * g);
      return out;
   };
   c.augment_out = [cf](const DeltaCurrent &e) {
      return e.degree() == 0 ? pair(cf.augment_in(1), e) : Rat(0);
   };
   c.h = [cf, chart](const DeltaCurrent &eta) {
      int R = eta.degree();
      DeltaCurrent out(chart, R + 1);
      if (R + 1 > chart.dim())
         return out;
      std::set<std::pair<int, int>> weights;
      for (const auto &[key, coef] : eta.terms())
      {
         for (const auto &p : key.point)
            if (p != 0)
               throw RepresentationOverflow(
                  "transposed homotopy only represents deltas at the origin");
         BiIndex P = key.dual.complement();
         weights.insert({exp_degree(key.alpha) + P.xpart().size(),
                         exp_degree(key.L) + P.ypart().size()});
      }
      Rat sign = (R + 1) % 2 ? -1 : 1;
      for (const auto &[wx, wy] : weights)
      {
         if (wy > chart.cap)
            continue;
         for (const auto &bi : enumerate_bi(chart.n, chart.k, R + 1))
         {
            int dx = wx - bi.xpart().size(), dy = wy - bi.ypart().size();
            if (dx < 0 || dy < 0)
               continue;
            BiIndex dual = bi.complement();
            Sign e = epsilon_sign(bi, dual, chart.n, chart.k);
            for (const auto &beta : exponents_of_degree(chart.n, dx))
               for (const auto &M : exponents_of_degree(chart.k, dy))
               {
                  Exp ex = beta;
                  ex.insert(ex.end(), M.begin(), M.end());
                  FormalForm v = FormalForm::monomial(chart, bi, Poly::monomial(chart.dim(), ex));
                  Rat val = pair(cf.h(v), eta);
                  if (val == 0)
                     continue;
                  Rat denom = Rat(multi_factorial(beta) * multi_factorial(M)) * e;
                  out.add(DeltaKey{dual, std::vector<Rat>(chart.n, 0), beta, M},
                          sign * val / denom);
               }
         }
      }
      return out;
   };
   return c;
}

namespace {

/** Moment matrix M[s][e] = integral of x^e against the probe bump shifted by s. */
RatMatrix probe_moments(int D)
{
   RatMatrix m(D + 1, D + 1);
   for (int s = 0; s <= D; ++s)
   {
      PwPoly b = PwPoly::bspline(2, s);
      for (int e = 0; e <= D; ++e)
         m(s, e) = b.moment(e);
   }
   return m;
}

} // namespace

Contraction<GenFunction> transpose_contraction(const Contraction<DensityCurrent> &cd)
{
   Chart chart = cd.chart;
   Contraction<GenFunction> c;
   c.kind = ComplexKind::Generalized;
   c.chart = chart;
   c.d = [](const GenFunction &t) { return d_generalized(t); };
   c.augment_in = [chart](const Rat &l) {
      return GenFunction::regular_part(
         FormalForm::function(chart, Poly::constant(chart.dim(), l)));
   };
   c.augment_out = [cd](const GenFunction &t) {
      return t.degree() == 0 ? apply(t, cd.augment_in(1)) : Rat(0);
   };
   c.h = [cd, chart](const GenFunction &T) {
      int R = T.degree();
      GenFunction out(chart, R - 1);
      if (T.is_zero() || R - 1 < 0)
         return out;
      if (!T.singular().empty())
         throw RepresentationOverflow(
            "transposed density homotopy only represents regular generalized functions");
      int D = 1;
      for (const auto &[bi, f] : T.regular().terms())
         for (int i = 0; i < chart.n; ++i)
            D = std::max(D, f.degree_in(i) + 1);
      RatMatrix minv = *inverse(probe_moments(D));
      Rat sign = (R - 1) % 2 ? -1 : 1;
      std::vector<Exp> shifts = exponents_up_to(chart.n, chart.n * D);
      std::erase_if(shifts, [D](const Exp &s) {
         for (int v : s)
            if (v > D)
               return true;
         return false;
      });
      FormalForm reg(chart, R - 1);
      for (const auto &bi : enumerate_bi(chart.n, chart.k, R - 1))
      {
         BiIndex dual = bi.complement();
         Sign e = epsilon_sign(bi, dual, chart.n, chart.k);
         for (const auto &L : exponents_up_to(chart.k, chart.cap - bi.ypart().size()))
         {
            // values of the unknown polynomial against each product probe
            std::map<Exp, Rat> vals;
            bool any = false;
            for (const auto &s : shifts)
            {
               std::vector<PwPoly> axes;
               for (int i = 0; i < chart.n; ++i)
                  axes.push_back(PwPoly::bspline(2, s[i]));
               DensityCurrent v = DensityCurrent::basis(chart, dual, DensityCoeff::term(1, axes, L));
               Rat val = sign * apply(T, cd.h(v));
               if (val != 0)
                  any = true;
               vals[s] = val / (Rat(multi_factorial(L)) * e);
            }
            if (!any)
               continue;
            // undo the moment matrix one axis at a time
            for (int i = 0; i < chart.n; ++i)
            {
               std::map<Exp, Rat> next;
               for (const auto &[s, val] : vals)
               {
                  if (val == 0)
                     continue;
                  for (int q = 0; q <= D; ++q)
                  {
                     Rat w = minv(q, s[i]);
                     if (w == 0)
                        continue;
                     Exp t = s;
                     t[i] = q;
                     next[t] += w * val;
                  }
               }
               vals = std::move(next);
            }
            Poly p(chart.dim());
            for (const auto &[beta, coef] : vals)
            {
               Exp ex = beta;
               ex.insert(ex.end(), L.begin(), L.end());
               p.add_term(ex, coef);
            }
            reg.add(bi, p);
         }
      }
      out.add_regular(reg);
      return out;
   };
   return c;
}

} // namespace fdr
