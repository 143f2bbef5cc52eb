#include "fdr/forms.hpp"
#include "fdr/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fdr {

int form_weight(const Exp &e, const BiIndex &bi, int n)
{
   return exp_degree(e, n, static_cast<int>(e.size())) + bi.ypart().size();
}

FormalForm::FormalForm(const Chart &chart, int r) : chart_(chart), r_(r)
{
   if (chart.n < 0 || chart.k < 0 || chart.cap < 0)
      throw DimensionMismatch("chart with negative dimension or cap");
}

FormalForm FormalForm::function(const Chart &chart, const Poly &f)
{
   return monomial(chart, BiIndex(chart.n, chart.k, {}, {}), f);
}

FormalForm FormalForm::monomial(const Chart &chart, const BiIndex &bi, const Poly &f)
{
   FormalForm w(chart, bi.degree());
   w.add(bi, f);
   return w;
}

void FormalForm::add(const BiIndex &bi, const Poly &f)
{
   if (bi.degree() != r_)
      throw DegreeMismatch("form term of degree " + std::to_string(bi.degree())
                           + " added to a " + std::to_string(r_) + "-form");
   if (bi.n() != chart_.n || bi.k() != chart_.k)
      throw IndexOutOfChart("form index does not live on the chart");
   if (f.nvars() != chart_.dim())
      throw DimensionMismatch("form coefficient ring mismatch");
   if (f.is_zero())
      return;
   int budget = chart_.cap - bi.ypart().size();
   int n = chart_.n, k = chart_.k;
   Poly kept = f.filter([&](const Exp &e) { return exp_degree(e, n, n + k) <= budget; });
   if (kept.size() != f.size())
      truncated_ = true;
   if (kept.is_zero())
      return;
   auto [it, fresh] = terms_.try_emplace(bi, kept);
   if (!fresh)
   {
      it->second += kept;
      if (it->second.is_zero())
         terms_.erase(it);
   }
}

Poly FormalForm::coeff_poly(const BiIndex &bi) const
{
   auto it = terms_.find(bi);
   return it == terms_.end() ? Poly(chart_.dim()) : it->second;
}

FormalFunction FormalForm::coeff(const BiIndex &bi) const
{
   return FormalFunction(chart_.n, chart_.k, chart_.cap, coeff_poly(bi));
}

void FormalForm::check_same(const FormalForm &o) const
{
   if (!(chart_ == o.chart_))
      throw DimensionMismatch("forms on different charts");
   if (r_ != o.r_ && !is_zero() && !o.is_zero())
      throw DegreeMismatch("adding forms of different degrees");
}

FormalForm &FormalForm::operator+=(const FormalForm &o)
{
   check_same(o);
   if (is_zero())
      r_ = o.r_;
   for (const auto &[bi, f] : o.terms_)
      add(bi, f);
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

FormalForm &FormalForm::operator-=(const FormalForm &o)
{
   check_same(o);
   if (is_zero())
      r_ = o.r_;
   for (const auto &[bi, f] : o.terms_)
      add(bi, -f);
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

FormalForm &FormalForm::operator*=(const Rat &c)
{
   if (c == 0)
      terms_.clear();
   for (auto &kv : terms_)
      kv.second *= c;
   return *this;
}

FormalForm FormalForm::operator-() const
{
   FormalForm w = *this;
   w *= Rat(-1);
   return w;
}

bool FormalForm::operator==(const FormalForm &o) const
{
   if (!(chart_ == o.chart_))
      return false;
   if (terms_.empty() && o.terms_.empty())
      return true;
   return r_ == o.r_ && terms_ == o.terms_;
}

FormalForm d(const FormalForm &w)
{
   const Chart &c = w.chart();
   FormalForm out(c, w.degree() + 1);
   for (const auto &[bi, f] : w.terms())
   {
      for (int i = 1; i <= c.n; ++i)
      {
         auto [s, nb] = merge_sign(BiIndex(c.n, c.k, {i}, {}), bi);
         if (s != 0)
            out.add(nb, f.partial(i - 1) * Rat(s));
      }
      for (int j = 1; j <= c.k; ++j)
      {
         auto [s, nb] = merge_sign(BiIndex(c.n, c.k, {}, {j}), bi);
         if (s != 0)
            out.add(nb, f.partial(c.n + j - 1) * Rat(s));
      }
   }
   return out;
}

FormalForm wedge(const FormalForm &a, const FormalForm &b)
{
   if (!(a.chart() == b.chart()))
      throw DimensionMismatch("wedge: chart mismatch");
   FormalForm out(a.chart(), a.degree() + b.degree());
   for (const auto &[ba, fa] : a.terms())
      for (const auto &[bb, fb] : b.terms())
      {
         auto [s, nb] = merge_sign(ba, bb);
         if (s != 0)
            out.add(nb, fa * fb * Rat(s));
      }
   return out;
}

Derivation Derivation::basis(const Chart &chart, Axis which)
{
   Derivation X;
   X.coeffs.assign(chart.dim(), Poly(chart.dim()));
   int slot = which.kind == Axis::X ? which.index - 1 : chart.n + which.index - 1;
   if (which.index < 1 || slot >= (which.kind == Axis::X ? chart.n : chart.dim()))
      throw AxisOutOfRange("derivation basis axis out of range");
   X.coeffs[slot] = Poly::constant(chart.dim(), 1);
   return X;
}

namespace {

Poly determinant(const std::vector<std::vector<const Poly *>> &m, int nvars)
{
   int r = static_cast<int>(m.size());
   std::vector<int> perm(r);
   std::iota(perm.begin(), perm.end(), 0);
   Poly sum(nvars);
   do
   {
      Sign s = permutation_sign(perm);
      Poly t = Poly::constant(nvars, s);
      for (int a = 0; a < r && !t.is_zero(); ++a)
         t = t * *m[a][perm[a]];
      sum += t;
   } while (std::next_permutation(perm.begin(), perm.end()));
   return sum;
}

} // namespace

FormalFunction eval_on_derivations(const FormalForm &w, const std::vector<Derivation> &fields)
{
   const Chart &c = w.chart();
   if (static_cast<int>(fields.size()) != w.degree() && !w.is_zero())
      throw ArityMismatch("eval_on_derivations: expected " + std::to_string(w.degree())
                          + " fields, got " + std::to_string(fields.size()));
   for (const auto &X : fields)
      if (static_cast<int>(X.coeffs.size()) != c.dim())
         throw DimensionMismatch("derivation has wrong number of components");
   Poly sum(c.dim());
   for (const auto &[bi, f] : w.terms())
   {
      std::vector<int> slots;
      for (int i : bi.xpart().entries())
         slots.push_back(i - 1);
      for (int j : bi.ypart().entries())
         slots.push_back(c.n + j - 1);
      std::vector<std::vector<const Poly *>> m(slots.size());
      for (std::size_t a = 0; a < slots.size(); ++a)
         for (const auto &X : fields)
            m[a].push_back(&X.coeffs[slots[a]]);
      sum += f * determinant(m, c.dim());
   }
   return FormalFunction(c.n, c.k, c.cap, sum);
}

ChartMorphism ChartMorphism::identity(const Chart &chart)
{
   ChartMorphism phi{chart, chart, {}, {}};
   for (int i = 0; i < chart.n; ++i)
      phi.x_images.push_back(Poly::variable(chart.dim(), i));
   for (int j = 0; j < chart.k; ++j)
      phi.y_images.push_back(Poly::variable(chart.dim(), chart.n + j));
   return phi;
}

namespace {

void validate(const ChartMorphism &phi)
{
   const Chart &s = phi.source;
   if (static_cast<int>(phi.x_images.size()) != phi.target.n
       || static_cast<int>(phi.y_images.size()) != phi.target.k)
      throw DimensionMismatch("chart morphism: wrong number of coordinate images");
   for (const auto *imgs : {&phi.x_images, &phi.y_images})
      for (const auto &p : *imgs)
         if (p.nvars() != s.dim())
            throw DimensionMismatch("chart morphism: image not on the source chart");
   for (const auto &p : phi.y_images)
      for (const auto &kv : p.terms())
         if (exp_degree(kv.first, s.n, s.dim()) == 0)
            throw TruncationUnsafe("chart morphism: y-image has a y-order-0 part");
}

Poly truncate_to_cap(const Poly &p, const Chart &c)
{
   return p.filter([&](const Exp &e) { return exp_degree(e, c.n, c.dim()) <= c.cap; });
}

} // namespace

Poly pullback_function(const ChartMorphism &phi, const Poly &f)
{
   validate(phi);
   std::vector<Poly> images = phi.x_images;
   for (const auto &y : phi.y_images)
      images.push_back(truncate_to_cap(y, phi.source));
   return truncate_to_cap(f.substitute(images), phi.source);
}

FormalForm pullback(const ChartMorphism &phi, const FormalForm &w)
{
   validate(phi);
   if (!(w.chart() == phi.target))
      throw DimensionMismatch("pullback: form does not live on the target chart");
   const Chart &s = phi.source;
   std::vector<FormalForm> dx, dy;
   for (const auto &p : phi.x_images)
      dx.push_back(d(FormalForm::function(s, p)));
   for (const auto &p : phi.y_images)
      dy.push_back(d(FormalForm::function(s, p)));
   FormalForm out(s, w.degree());
   for (const auto &[bi, f] : w.terms())
   {
      FormalForm t = FormalForm::function(s, pullback_function(phi, f));
      for (int i : bi.xpart().entries())
         t = wedge(t, dx[i - 1]);
      for (int j : bi.ypart().entries())
         t = wedge(t, dy[j - 1]);
      if (!t.is_zero())
         out += t;
   }
   return out;
}

} // namespace fdr
