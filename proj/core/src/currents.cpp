#include "fdr/currents.hpp"
#include "fdr/errors.hpp"

#include <algorithm>

namespace fdr {

int dual_weight(const Exp &L, const BiIndex &dual)
{
   return exp_degree(L) + dual.k() - dual.ypart().size();
}

DensityCurrent::DensityCurrent(const Chart &chart, int r) : chart_(chart), r_(r) {}

DensityCurrent DensityCurrent::basis(const Chart &chart, const BiIndex &dual,
                                     const DensityCoeff &tau)
{
   DensityCurrent eta(chart, chart.dim() - dual.degree());
   eta.add(dual, tau);
   return eta;
}

void DensityCurrent::add(const BiIndex &dual, const DensityCoeff &tau)
{
   if (dual.n() != chart_.n || dual.k() != chart_.k)
      throw IndexOutOfChart("dual index does not live on the chart");
   if (dual.degree() != chart_.dim() - r_)
      throw DegreeMismatch("density term has the wrong dual bidegree");
   if (tau.n() != chart_.n || tau.k() != chart_.k)
      throw DimensionMismatch("density coefficient on another chart");
   DensityCoeff kept =
      tau.filter_L([&](const Exp &L) { return dual_weight(L, dual) <= chart_.cap; });
   if (kept.terms().size() != tau.terms().size())
      truncated_ = true;
   auto it = terms_.find(dual);
   if (it == terms_.end())
   {
      if (!kept.is_zero())
         terms_.emplace(dual, kept);
      return;
   }
   it->second += kept;
   if (it->second.is_zero())
      terms_.erase(it);
}

DensityCoeff DensityCurrent::coeff(const BiIndex &dual) const
{
   auto it = terms_.find(dual);
   return it == terms_.end() ? DensityCoeff(chart_.n, chart_.k) : it->second;
}

void DensityCurrent::check_same(const DensityCurrent &o) const
{
   if (!(chart_ == o.chart_))
      throw DimensionMismatch("densities on different charts");
   if (r_ != o.r_ && !is_zero() && !o.is_zero())
      throw DegreeMismatch("adding densities of different degrees");
}

DensityCurrent &DensityCurrent::operator+=(const DensityCurrent &o)
{
   check_same(o);
   if (is_zero())
      r_ = o.r_;
   for (const auto &[bi, tau] : o.terms_)
      add(bi, tau);
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

DensityCurrent &DensityCurrent::operator-=(const DensityCurrent &o)
{
   check_same(o);
   if (is_zero())
      r_ = o.r_;
   for (const auto &[bi, tau] : o.terms_)
      add(bi, tau * Rat(-1));
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

DensityCurrent &DensityCurrent::operator*=(const Rat &c)
{
   if (c == 0)
      terms_.clear();
   for (auto &kv : terms_)
      kv.second *= c;
   return *this;
}

bool DensityCurrent::operator==(const DensityCurrent &o) const
{
   if (!(chart_ == o.chart_))
      return false;
   if (!is_zero() && !o.is_zero() && r_ != o.r_)
      return false;
   for (const auto &[bi, tau] : terms_)
      if (!(tau == o.coeff(bi)))
         return false;
   for (const auto &[bi, tau] : o.terms_)
      if (!terms_.count(bi) && !tau.is_zero())
         return false;
   return true;
}

bool DeltaKey::operator<(const DeltaKey &o) const
{
   if (dual != o.dual)
      return dual < o.dual;
   if (point != o.point)
      return std::lexicographical_compare(point.begin(), point.end(), o.point.begin(),
                                          o.point.end());
   if (alpha != o.alpha)
      return alpha < o.alpha;
   return L < o.L;
}

bool DeltaKey::operator==(const DeltaKey &o) const
{
   return dual == o.dual && point == o.point && alpha == o.alpha && L == o.L;
}

DeltaCurrent::DeltaCurrent(const Chart &chart, int r) : chart_(chart), r_(r) {}

void DeltaCurrent::add(const DeltaKey &key, const Rat &c)
{
   if (key.dual.n() != chart_.n || key.dual.k() != chart_.k)
      throw IndexOutOfChart("delta index does not live on the chart");
   if (key.dual.degree() != chart_.dim() - r_)
      throw DegreeMismatch("delta term has the wrong dual bidegree");
   if (static_cast<int>(key.point.size()) != chart_.n
       || static_cast<int>(key.alpha.size()) != chart_.n
       || static_cast<int>(key.L.size()) != chart_.k)
      throw DimensionMismatch("delta term has the wrong shape");
   if (c == 0)
      return;
   if (dual_weight(key.L, key.dual) > chart_.cap)
   {
      truncated_ = true;
      return;
   }
   auto [it, fresh] = terms_.try_emplace(key, c);
   if (!fresh)
   {
      it->second += c;
      if (it->second == 0)
         terms_.erase(it);
   }
}

void DeltaCurrent::check_same(const DeltaCurrent &o) const
{
   if (!(chart_ == o.chart_))
      throw DimensionMismatch("distributions on different charts");
   if (r_ != o.r_ && !is_zero() && !o.is_zero())
      throw DegreeMismatch("adding distributions of different degrees");
}

DeltaCurrent &DeltaCurrent::operator+=(const DeltaCurrent &o)
{
   check_same(o);
   if (is_zero())
      r_ = o.r_;
   for (const auto &[key, c] : o.terms_)
      add(key, c);
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

DeltaCurrent &DeltaCurrent::operator-=(const DeltaCurrent &o)
{
   check_same(o);
   if (is_zero())
      r_ = o.r_;
   for (const auto &[key, c] : o.terms_)
      add(key, -c);
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

DeltaCurrent &DeltaCurrent::operator*=(const Rat &c)
{
   if (c == 0)
      terms_.clear();
   for (auto &kv : terms_)
      kv.second *= c;
   return *this;
}

bool DeltaCurrent::operator==(const DeltaCurrent &o) const
{
   if (!(chart_ == o.chart_))
      return false;
   if (terms_.empty() && o.terms_.empty())
      return true;
   return r_ == o.r_ && terms_ == o.terms_;
}

Rat pair(const FormalForm &w, const DensityCurrent &eta)
{
   if (!(w.chart() == eta.chart()))
      throw DimensionMismatch("pair: chart mismatch");
   if (w.degree() != eta.degree() && !w.is_zero() && !eta.is_zero())
      throw DegreeMismatch("pair: form degree does not match the current");
   const Chart &c = w.chart();
   Rat s = 0;
   for (const auto &[dual, tau] : eta.terms())
   {
      BiIndex fi = dual.complement();
      auto it = w.terms().find(fi);
      if (it == w.terms().end())
         continue;
      Sign e = epsilon_sign(fi, dual, c.n, c.k);
      FormalFunction f(c.n, c.k, c.cap, it->second);
      s += integrate_density(tau, f) * e;
   }
   return s;
}

Rat pair(const FormalForm &w, const DeltaCurrent &eta)
{
   if (!(w.chart() == eta.chart()))
      throw DimensionMismatch("pair: chart mismatch");
   if (w.degree() != eta.degree() && !w.is_zero() && !eta.is_zero())
      throw DegreeMismatch("pair: form degree does not match the current");
   const Chart &c = w.chart();
   Rat s = 0;
   for (const auto &[key, coef] : eta.terms())
   {
      BiIndex fi = key.dual.complement();
      auto it = w.terms().find(fi);
      if (it == w.terms().end())
         continue;
      XPoly fl = FormalFunction(c.n, c.k, c.cap, it->second).y_coeff(key.L);
      for (int i = 0; i < c.n; ++i)
         for (int q = 0; q < key.alpha[i]; ++q)
            fl = fl.partial(i);
      Sign e = epsilon_sign(fi, key.dual, c.n, c.k);
      s += coef * Rat(multi_factorial(key.L)) * fl.eval(key.point) * e;
   }
   return s;
}

BiIndex insert_axis(const BiIndex &dual, Axis axis)
{
   std::vector<int> x = dual.xpart().entries(), y = dual.ypart().entries();
   auto &v = axis.kind == Axis::X ? x : y;
   if (std::find(v.begin(), v.end(), axis.index) != v.end())
      throw DegenerateIndex("insert_axis: axis already present");
   v.push_back(axis.index);
   std::sort(v.begin(), v.end());
   return BiIndex(dual.n(), dual.k(), x, y);
}

Sign dual_coboundary_sign(const BiIndex &dual, Axis axis)
{
   int n = dual.n(), k = dual.k();
   const MultiIndex &part = axis.kind == Axis::X ? dual.xpart() : dual.ypart();
   if (part.contains(axis.index))
      return 0;
   int R = n + k - dual.degree();
   BiIndex form = dual.complement();
   BiIndex rest = axis.kind == Axis::X ? BiIndex(form.xpart().without(axis.index), form.ypart())
                                      : BiIndex(form.xpart(), form.ypart().without(axis.index));
   BiIndex single = axis.kind == Axis::X ? BiIndex(n, k, {axis.index}, {})
                                         : BiIndex(n, k, {}, {axis.index});
   Sign ms = merge_sign(single, rest).first;
   Sign s = ((R % 2) ? -1 : 1) * epsilon_sign(form, dual, n, k) * ms
            * epsilon_sign(rest, insert_axis(dual, axis), n, k);
   return s;
}

DensityCurrent d_density(const DensityCurrent &eta)
{
   const Chart &c = eta.chart();
   DensityCurrent out(c, eta.degree() - 1);
   for (const auto &[dual, tau] : eta.terms())
   {
      for (int i = 1; i <= c.n; ++i)
      {
         Sign s = dual_coboundary_sign(dual, Axis::x(i));
         if (s != 0)
            out.add(insert_axis(dual, Axis::x(i)), tau.partial_x(i) * Rat(-s));
      }
      for (int j = 1; j <= c.k; ++j)
      {
         Sign s = dual_coboundary_sign(dual, Axis::y(j));
         if (s != 0)
            out.add(insert_axis(dual, Axis::y(j)), tau.mul_ystar(j) * Rat(s));
      }
   }
   return out;
}

DeltaCurrent d_distribution(const DeltaCurrent &eta)
{
   const Chart &c = eta.chart();
   DeltaCurrent out(c, eta.degree() - 1);
   for (const auto &[key, coef] : eta.terms())
   {
      for (int i = 1; i <= c.n; ++i)
      {
         Sign s = dual_coboundary_sign(key.dual, Axis::x(i));
         if (s == 0)
            continue;
         DeltaKey nk{insert_axis(key.dual, Axis::x(i)), key.point, key.alpha, key.L};
         nk.alpha[i - 1] += 1;
         out.add(nk, coef * s);
      }
      for (int j = 1; j <= c.k; ++j)
      {
         Sign s = dual_coboundary_sign(key.dual, Axis::y(j));
         if (s == 0)
            continue;
         DeltaKey nk{insert_axis(key.dual, Axis::y(j)), key.point, key.alpha, key.L};
         nk.L[j - 1] += 1;
         out.add(nk, coef * s);
      }
   }
   return out;
}

Rat zeta(const DensityCurrent &eta)
{
   if (eta.degree() != 0 && !eta.is_zero())
      throw DegreeMismatch("zeta: current must pair with 0-forms");
   const Chart &c = eta.chart();
   BiIndex top = BiIndex(c.n, c.k, {}, {}).complement();
   return eta.coeff(top).integral_L0();
}

Functional embed(const DensityCurrent &eta)
{
   return {eta.chart(), eta.degree(), [eta](const FormalForm &w) { return pair(w, eta); }};
}

Functional embed(const DeltaCurrent &eta)
{
   return {eta.chart(), eta.degree(), [eta](const FormalForm &w) { return pair(w, eta); }};
}

std::vector<FormalForm> monomial_battery(const Chart &chart, int r, int cap_x)
{
   std::vector<FormalForm> out;
   for (const auto &bi : enumerate_bi(chart.n, chart.k, r))
   {
      int ybudget = chart.cap - bi.ypart().size();
      for (const auto &bx : exponents_up_to(chart.n, cap_x))
         for (const auto &my : exponents_up_to(chart.k, ybudget))
         {
            Exp e = bx;
            e.insert(e.end(), my.begin(), my.end());
            out.push_back(FormalForm::monomial(chart, bi, Poly::monomial(chart.dim(), e)));
         }
   }
   return out;
}

bool agree_on_battery(const Functional &a, const Functional &b, int cap_x)
{
   if (!(a.chart == b.chart) || a.r != b.r)
      return false;
   for (const auto &w : monomial_battery(a.chart, a.r, cap_x))
      if (a(w) != b(w))
         return false;
   return true;
}

DeltaCurrent as_delta(const DensityCurrent &eta)
{
   const Chart &c = eta.chart();
   if (c.n != 0)
      throw UnsupportedKind("as_delta: only densities over R^0 are point functionals");
   DeltaCurrent out(c, eta.degree());
   for (const auto &[dual, tau] : eta.terms())
      for (const auto &t : tau.terms())
         out.add(DeltaKey{dual, {}, {}, t.L}, t.c);
   return out;
}

DensityCurrent as_density(const DeltaCurrent &eta)
{
   const Chart &c = eta.chart();
   if (c.n != 0)
      throw UnsupportedKind("as_density: only deltas over R^0 are densities");
   DensityCurrent out(c, eta.degree());
   for (const auto &[key, coef] : eta.terms())
      out.add(key.dual, DensityCoeff::term(coef, {}, key.L));
   return out;
}

} // namespace fdr
