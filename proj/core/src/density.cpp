#include "fdr/density.hpp"
#include "fdr/errors.hpp"

#include <algorithm>

namespace fdr {

DensityCoeff DensityCoeff::term(const Rat &c, std::vector<PwPoly> axes, Exp L)
{
   DensityCoeff d(static_cast<int>(axes.size()), static_cast<int>(L.size()));
   d.add({c, std::move(axes), std::move(L)});
   return d;
}

bool DensityCoeff::is_zero() const
{
   return *this == DensityCoeff(n_, k_);
}

void DensityCoeff::add(const DensityTerm &t)
{
   if (static_cast<int>(t.axes.size()) != n_ || static_cast<int>(t.L.size()) != k_)
      throw DimensionMismatch("density term has wrong shape");
   if (t.c == 0)
      return;
   for (const auto &a : t.axes)
      if (a.is_zero())
         return;
   for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (it->L == t.L && it->axes == t.axes)
      {
         it->c += t.c;
         if (it->c == 0)
            terms_.erase(it);
         return;
      }
   terms_.push_back(t);
}

void DensityCoeff::check_same(const DensityCoeff &o) const
{
   if (n_ != o.n_ || k_ != o.k_)
      throw DimensionMismatch("densities on different charts");
}

DensityCoeff &DensityCoeff::operator+=(const DensityCoeff &o)
{
   check_same(o);
   for (const auto &t : o.terms_)
      add(t);
   return *this;
}

DensityCoeff &DensityCoeff::operator-=(const DensityCoeff &o)
{
   check_same(o);
   for (auto t : o.terms_)
   {
      t.c = -t.c;
      add(t);
   }
   return *this;
}

DensityCoeff &DensityCoeff::operator*=(const Rat &c)
{
   if (c == 0)
      terms_.clear();
   for (auto &t : terms_)
      t.c *= c;
   return *this;
}

DensityCoeff DensityCoeff::partial_x(int i) const
{
   if (i < 1 || i > n_)
      throw AxisOutOfRange("density partial: axis out of range");
   DensityCoeff r(n_, k_);
   for (auto t : terms_)
   {
      t.axes[i - 1] = t.axes[i - 1].derivative();
      r.add(t);
   }
   return r;
}

DensityCoeff DensityCoeff::mul_ystar(int j) const
{
   if (j < 1 || j > k_)
      throw AxisOutOfRange("density y* multiplication: axis out of range");
   DensityCoeff r(n_, k_);
   for (auto t : terms_)
   {
      t.L[j - 1] += 1;
      r.add(t);
   }
   return r;
}

DensityCoeff DensityCoeff::filter_L(const std::function<bool(const Exp &)> &keep) const
{
   DensityCoeff r(n_, k_);
   for (const auto &t : terms_)
      if (keep(t.L))
         r.terms_.push_back(t);
   return r;
}

Rat DensityCoeff::integral_L0() const
{
   Rat s = 0;
   for (const auto &t : terms_)
   {
      if (exp_degree(t.L) != 0)
         continue;
      Rat v = t.c;
      for (const auto &a : t.axes)
         v *= a.integral();
      s += v;
   }
   return s;
}

int DensityCoeff::max_ystar_degree() const
{
   int d = -1;
   for (const auto &t : terms_)
      d = std::max(d, exp_degree(t.L));
   return d;
}

int DensityCoeff::max_x_degree() const
{
   int d = -1;
   for (const auto &t : terms_)
      for (const auto &a : t.axes)
         d = std::max(d, a.max_degree());
   return d;
}

bool DensityCoeff::operator==(const DensityCoeff &o) const
{
   if (n_ != o.n_ || k_ != o.k_)
      return false;
   std::map<Exp, std::vector<DensityTerm>> diff;
   for (const auto &t : terms_)
      diff[t.L].push_back(t);
   for (auto t : o.terms_)
   {
      t.c = -t.c;
      diff[t.L].push_back(t);
   }
   for (const auto &[L, ts] : diff)
   {
      if (n_ == 0)
      {
         Rat s = 0;
         for (const auto &t : ts)
            s += t.c;
         if (s != 0)
            return false;
         continue;
      }
      std::vector<std::vector<Rat>> grid(n_);
      for (const auto &t : ts)
         for (int a = 0; a < n_; ++a)
            grid[a] = merge_grids(grid[a], t.axes[a].breaks());
      std::vector<std::vector<std::vector<UPoly>>> local(ts.size());
      for (std::size_t q = 0; q < ts.size(); ++q)
         for (int a = 0; a < n_; ++a)
            local[q].push_back(ts[q].axes[a].pieces_on(grid[a]));
      std::vector<std::size_t> cell(n_, 0);
      bool empty = false;
      for (int a = 0; a < n_; ++a)
         empty = empty || grid[a].size() < 2;
      while (!empty)
      {
         Poly sum(n_);
         for (std::size_t q = 0; q < ts.size(); ++q)
         {
            Poly prod = Poly::constant(n_, ts[q].c);
            for (int a = 0; a < n_ && !prod.is_zero(); ++a)
            {
               const UPoly &u = local[q][a][cell[a]];
               Poly pa(n_);
               for (int i = 0; i <= u.degree(); ++i)
               {
                  Exp e(n_, 0);
                  e[a] = i;
                  pa.add_term(e, u.coeff(i));
               }
               prod = prod * pa;
            }
            sum += prod;
         }
         if (!sum.is_zero())
            return false;
         int a = 0;
         for (; a < n_; ++a)
         {
            if (++cell[a] + 1 < grid[a].size())
               break;
            cell[a] = 0;
         }
         if (a == n_)
            break;
      }
   }
   return true;
}

Rat integrate_density(const DensityCoeff &tau, const std::map<Exp, XPoly> &fexp)
{
   Rat s = 0;
   int n = tau.n();
   for (const auto &t : tau.terms())
   {
      auto it = fexp.find(t.L);
      if (it == fexp.end())
         continue;
      Rat acc = 0;
      for (const auto &[beta, c] : it->second.terms())
      {
         Rat v = c;
         for (int a = 0; a < n && v != 0; ++a)
            v *= t.axes[a].moment(beta[a]);
         acc += v;
      }
      s += acc * t.c * Rat(multi_factorial(t.L));
   }
   return s;
}

Rat integrate_density(const DensityCoeff &tau, const FormalFunction &f)
{
   if (tau.n() != f.n() || tau.k() != f.k())
      throw DimensionMismatch("integrate_density: chart mismatch");
   return integrate_density(tau, f.y_expansion());
}

DensityCoeff density_tensor(const DensityCoeff &a, const DensityCoeff &b)
{
   DensityCoeff r(a.n() + b.n(), a.k() + b.k());
   for (const auto &ta : a.terms())
      for (const auto &tb : b.terms())
      {
         DensityTerm t{ta.c * tb.c, ta.axes, ta.L};
         t.axes.insert(t.axes.end(), tb.axes.begin(), tb.axes.end());
         t.L.insert(t.L.end(), tb.L.begin(), tb.L.end());
         r.add(t);
      }
   return r;
}

} // namespace fdr
