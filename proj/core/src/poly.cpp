#include "fdr/poly.hpp"
#include "fdr/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fdr {

int exp_degree(const Exp &e)
{
   return std::accumulate(e.begin(), e.end(), 0);
}

int exp_degree(const Exp &e, int from, int to)
{
   return std::accumulate(e.begin() + from, e.begin() + to, 0);
}

namespace {

void fill_exponents(Exp &cur, int var, int left, bool exact, std::vector<Exp> &out)
{
   if (var == static_cast<int>(cur.size()))
   {
      if (!exact || left == 0)
         out.push_back(cur);
      return;
   }
   for (int e = 0; e <= left; ++e)
   {
      cur[var] = e;
      fill_exponents(cur, var + 1, left - e, exact, out);
   }
   cur[var] = 0;
}

} // namespace

std::vector<Exp> exponents_up_to(int nvars, int maxdeg)
{
   std::vector<Exp> out;
   if (maxdeg < 0)
      return out;
   Exp cur(nvars, 0);
   fill_exponents(cur, 0, maxdeg, false, out);
   return out;
}

std::vector<Exp> exponents_of_degree(int nvars, int deg)
{
   std::vector<Exp> out;
   if (deg < 0)
      return out;
   Exp cur(nvars, 0);
   fill_exponents(cur, 0, deg, true, out);
   return out;
}

Poly Poly::constant(int nvars, const Rat &c)
{
   return monomial(nvars, Exp(nvars, 0), c);
}

Poly Poly::monomial(int nvars, const Exp &e, const Rat &c)
{
   if (static_cast<int>(e.size()) != nvars)
      throw DimensionMismatch("monomial exponent length mismatch");
   Poly p(nvars);
   p.add_term(e, c);
   return p;
}

Poly Poly::variable(int nvars, int var)
{
   if (var < 0 || var >= nvars)
      throw AxisOutOfRange("variable out of range");
   Exp e(nvars, 0);
   e[var] = 1;
   return monomial(nvars, e);
}

Rat Poly::coeff(const Exp &e) const
{
   auto it = terms_.find(e);
   return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const
{
   return coeff(Exp(nvars_, 0));
}

void Poly::add_term(const Exp &e, const Rat &c)
{
   if (c == 0)
      return;
   auto [it, fresh] = terms_.try_emplace(e, c);
   if (!fresh)
   {
      it->second += c;
      if (it->second == 0)
         terms_.erase(it);
   }
}

Poly &Poly::operator+=(const Poly &o)
{
   if (o.nvars_ != nvars_)
      throw DimensionMismatch("polynomial ring mismatch");
   for (const auto &[e, c] : o.terms_)
      add_term(e, c);
   return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
   if (o.nvars_ != nvars_)
      throw DimensionMismatch("polynomial ring mismatch");
   for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
   return *this;
}

Poly &Poly::operator*=(const Rat &c)
{
   if (c == 0)
      terms_.clear();
   else
      for (auto &kv : terms_)
         kv.second *= c;
   return *this;
}

Poly Poly::operator-() const
{
   Poly r = *this;
   r *= Rat(-1);
   return r;
}

Poly operator*(const Poly &a, const Poly &b)
{
   if (a.nvars_ != b.nvars_)
      throw DimensionMismatch("polynomial ring mismatch");
   Poly r(a.nvars_);
   Exp e(a.nvars_);
   for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_)
      {
         for (int i = 0; i < a.nvars_; ++i)
            e[i] = ea[i] + eb[i];
         r.add_term(e, ca * cb);
      }
   return r;
}

Poly Poly::partial(int var) const
{
   if (var < 0 || var >= nvars_)
      throw AxisOutOfRange("partial: variable out of range");
   Poly r(nvars_);
   for (const auto &[e, c] : terms_)
   {
      if (e[var] == 0)
         continue;
      Exp f = e;
      f[var] -= 1;
      r.add_term(f, c * e[var]);
   }
   return r;
}

Rat Poly::eval(const std::vector<Rat> &point) const
{
   if (static_cast<int>(point.size()) != nvars_)
      throw DimensionMismatch("eval: point dimension mismatch");
   Rat sum = 0;
   for (const auto &[e, c] : terms_)
   {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
         for (int p = 0; p < e[i]; ++p)
            t *= point[i];
      sum += t;
   }
   return sum;
}

Poly Poly::pow(int e) const
{
   Poly r = constant(nvars_, 1);
   Poly base = *this;
   while (e > 0)
   {
      if (e & 1)
         r = r * base;
      e >>= 1;
      if (e)
         base = base * base;
   }
   return r;
}

Poly Poly::substitute(const std::vector<Poly> &images) const
{
   if (static_cast<int>(images.size()) != nvars_)
      throw DimensionMismatch("substitute: wrong number of images");
   int m = images.empty() ? 0 : images.front().nvars();
   for (const auto &im : images)
      if (im.nvars() != m)
         throw DimensionMismatch("substitute: images in different rings");
   std::vector<std::vector<Poly>> powers(nvars_);
   Poly r(m);
   for (const auto &[e, c] : terms_)
   {
      Poly t = constant(m, c);
      for (int i = 0; i < nvars_; ++i)
      {
         if (e[i] == 0)
            continue;
         auto &pw = powers[i];
         if (pw.empty())
            pw.push_back(constant(m, 1));
         while (static_cast<int>(pw.size()) <= e[i])
            pw.push_back(pw.back() * images[i]);
         t = t * pw[e[i]];
      }
      r += t;
   }
   return r;
}

Poly Poly::filter(const std::function<bool(const Exp &)> &keep) const
{
   Poly r(nvars_);
   for (const auto &[e, c] : terms_)
      if (keep(e))
         r.terms_.emplace(e, c);
   return r;
}

Poly Poly::embed(int nvars, int offset) const
{
   if (offset < 0 || offset + nvars_ > nvars)
      throw DimensionMismatch("embed: target ring too small");
   Poly r(nvars);
   for (const auto &[e, c] : terms_)
   {
      Exp f(nvars, 0);
      std::copy(e.begin(), e.end(), f.begin() + offset);
      r.terms_.emplace(std::move(f), c);
   }
   return r;
}

int Poly::total_degree() const
{
   int d = -1;
   for (const auto &kv : terms_)
      d = std::max(d, exp_degree(kv.first));
   return d;
}

int Poly::degree_in(int var) const
{
   int d = -1;
   for (const auto &kv : terms_)
      d = std::max(d, kv.first[var]);
   return d;
}

bool print_order_less(const Exp &a, const Exp &b)
{
   int da = exp_degree(a), db = exp_degree(b);
   if (da != db)
      return da > db;
   return a > b;
}

std::string to_string(const Poly &p, const std::function<std::string(int)> &name)
{
   if (p.is_zero())
      return "0";
   std::vector<const Poly::Terms::value_type *> order;
   for (const auto &kv : p.terms())
      order.push_back(&kv);
   std::sort(order.begin(), order.end(),
             [](auto *a, auto *b) { return print_order_less(a->first, b->first); });
   std::string out;
   bool first = true;
   for (const auto *kv : order)
   {
      const Exp &e = kv->first;
      Rat c = kv->second;
      bool neg = c < 0;
      if (neg)
         c = -c;
      if (first)
         out += neg ? "-" : "";
      else
         out += neg ? " - " : " + ";
      first = false;
      std::string mono;
      for (int i = 0; i < p.nvars(); ++i)
      {
         if (e[i] == 0)
            continue;
         if (!mono.empty())
            mono += '*';
         mono += name(i);
         if (e[i] > 1)
            mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
         out += to_string(c);
      else if (c == 1)
         out += mono;
      else
         out += to_string(c) + "*" + mono;
   }
   return out;
}

} // namespace fdr
