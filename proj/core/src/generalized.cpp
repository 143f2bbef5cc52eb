#include "fdr/generalized.hpp"
#include "fdr/errors.hpp"

#include <algorithm>

namespace fdr {

bool SingularKey::operator<(const SingularKey &o) const
{
   if (form_index != o.form_index)
      return form_index < o.form_index;
   if (point != o.point)
      return std::lexicographical_compare(point.begin(), point.end(), o.point.begin(),
                                          o.point.end());
   if (alpha != o.alpha)
      return alpha < o.alpha;
   return L < o.L;
}

bool SingularKey::operator==(const SingularKey &o) const
{
   return form_index == o.form_index && point == o.point && alpha == o.alpha && L == o.L;
}

GenFunction::GenFunction(const Chart &chart, int r)
   : chart_(chart), r_(r), regular_(chart, r) {}

GenFunction GenFunction::regular_part(const FormalForm &w)
{
   GenFunction T(w.chart(), w.degree());
   T.add_regular(w);
   return T;
}

void GenFunction::add_regular(const FormalForm &w)
{
   if (!(w.chart() == chart_))
      throw DimensionMismatch("generalized function: chart mismatch");
   if (!w.is_zero() && w.degree() != r_)
      throw DegreeMismatch("generalized function: regular part of wrong degree");
   regular_ += w;
}

void GenFunction::add_singular(const SingularKey &key, const Rat &c)
{
   if (key.form_index.n() != chart_.n || key.form_index.k() != chart_.k)
      throw IndexOutOfChart("singular term index does not live on the chart");
   if (key.form_index.degree() != r_)
      throw DegreeMismatch("singular term of wrong degree");
   if (static_cast<int>(key.point.size()) != chart_.n
       || static_cast<int>(key.alpha.size()) != chart_.n
       || static_cast<int>(key.L.size()) != chart_.k)
      throw DimensionMismatch("singular term has the wrong shape");
   if (c == 0 || exp_degree(key.L) + key.form_index.ypart().size() > chart_.cap)
      return;
   auto [it, fresh] = singular_.try_emplace(key, c);
   if (!fresh)
   {
      it->second += c;
      if (it->second == 0)
         singular_.erase(it);
   }
}

GenFunction &GenFunction::operator+=(const GenFunction &o)
{
   if (!(chart_ == o.chart_))
      throw DimensionMismatch("generalized functions on different charts");
   if (is_zero())
   {
      r_ = o.r_;
      regular_ = FormalForm(chart_, r_);
   }
   add_regular(o.regular_);
   for (const auto &[k, c] : o.singular_)
      add_singular(k, c);
   return *this;
}

GenFunction &GenFunction::operator-=(const GenFunction &o)
{
   GenFunction neg = o;
   neg *= Rat(-1);
   return *this += neg;
}

GenFunction &GenFunction::operator*=(const Rat &c)
{
   regular_ *= c;
   if (c == 0)
      singular_.clear();
   for (auto &kv : singular_)
      kv.second *= c;
   return *this;
}

bool GenFunction::operator==(const GenFunction &o) const
{
   if (is_zero() && o.is_zero())
      return chart_ == o.chart_;
   return chart_ == o.chart_ && r_ == o.r_ && regular_ == o.regular_ && singular_ == o.singular_;
}

Rat eval_density(const DensityCoeff &tau, const Exp &L, const Exp &alpha,
                 const std::vector<Rat> &point)
{
   Rat s = 0;
   for (const auto &t : tau.terms())
   {
      if (t.L != L)
         continue;
      Rat v = t.c;
      for (int a = 0; a < tau.n() && v != 0; ++a)
      {
         PwPoly f = t.axes[a];
         for (int q = 0; q < alpha[a]; ++q)
            f = f.derivative();
         v *= f.eval(point[a]);
      }
      s += v;
   }
   return s;
}

Rat apply(const GenFunction &T, const DensityCurrent &eta)
{
   if (!(T.chart() == eta.chart()))
      throw DimensionMismatch("apply: chart mismatch");
   if (T.degree() != eta.degree() && !T.is_zero() && !eta.is_zero())
      throw DegreeMismatch("apply: degree mismatch");
   const Chart &c = T.chart();
   Rat s = pair(T.regular(), eta);
   for (const auto &[key, coef] : T.singular())
   {
      BiIndex dual = key.form_index.complement();
      DensityCoeff tau = eta.coeff(dual);
      if (tau.terms().empty())
         continue;
      Sign e = epsilon_sign(key.form_index, dual, c.n, c.k);
      s += coef * Rat(multi_factorial(key.L)) * eval_density(tau, key.L, key.alpha, key.point) * e;
   }
   return s;
}

GenFunction d_generalized(const GenFunction &T)
{
   const Chart &c = T.chart();
   int i = T.degree();
   GenFunction out(c, i + 1);
   out.add_regular(-d(T.regular()));
   Sign gsign = (i % 2) ? -1 : 1;
   for (const auto &[key, coef] : T.singular())
   {
      BiIndex OP = key.form_index.complement();
      Sign e1 = epsilon_sign(key.form_index, OP, c.n, c.k);
      for (int a = 1; a <= c.n; ++a)
      {
         if (!OP.xpart().contains(a))
            continue;
         BiIndex O(OP.xpart().without(a), OP.ypart());
         BiIndex P2 = insert_axis(key.form_index, Axis::x(a));
         Sign sigma = dual_coboundary_sign(O, Axis::x(a));
         Sign e2 = epsilon_sign(P2, O, c.n, c.k);
         SingularKey nk{P2, key.point, key.alpha, key.L};
         nk.alpha[a - 1] += 1;
         out.add_singular(nk, coef * (-gsign * sigma * e1 * e2));
      }
      for (int b = 1; b <= c.k; ++b)
      {
         if (!OP.ypart().contains(b) || key.L[b - 1] == 0)
            continue;
         BiIndex O(OP.xpart(), OP.ypart().without(b));
         BiIndex P2 = insert_axis(key.form_index, Axis::y(b));
         Sign sigma = dual_coboundary_sign(O, Axis::y(b));
         Sign e2 = epsilon_sign(P2, O, c.n, c.k);
         SingularKey nk{P2, key.point, key.alpha, key.L};
         nk.L[b - 1] -= 1;
         out.add_singular(nk, coef * (gsign * sigma * e1 * e2 * key.L[b - 1]));
      }
   }
   return out;
}

} // namespace fdr
