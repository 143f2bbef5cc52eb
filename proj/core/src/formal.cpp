#include "fdr/formal.hpp"
#include "fdr/errors.hpp"

namespace fdr {

Poly truncate_y(const Poly &p, int n, int k, int cap, bool &dropped)
{
   Poly kept = p.filter([&](const Exp &e) { return exp_degree(e, n, n + k) <= cap; });
   dropped = kept.size() != p.size();
   return kept;
}

std::string xy_name(int n, int var)
{
   return var < n ? "x" + std::to_string(var + 1) : "y" + std::to_string(var - n + 1);
}

FormalFunction::FormalFunction(int n, int k, int cap)
   : n_(n), k_(k), cap_(cap), p_(n + k)
{
   if (n < 0 || k < 0 || cap < 0)
      throw DimensionMismatch("formal function: negative dimension or cap");
}

FormalFunction::FormalFunction(int n, int k, int cap, const Poly &p)
   : FormalFunction(n, k, cap)
{
   if (p.nvars() != n + k)
      throw DimensionMismatch("formal function: polynomial ring mismatch");
   p_ = truncate_y(p, n, k, cap, truncated_);
}

FormalFunction FormalFunction::constant(int n, int k, int cap, const Rat &c)
{
   return FormalFunction(n, k, cap, Poly::constant(n + k, c));
}

XPoly FormalFunction::y_coeff(const Exp &L) const
{
   if (static_cast<int>(L.size()) != k_)
      throw DimensionMismatch("y_coeff: exponent length mismatch");
   XPoly r(n_);
   for (const auto &[e, c] : p_.terms())
      if (std::equal(L.begin(), L.end(), e.begin() + n_))
         r.add_term(Exp(e.begin(), e.begin() + n_), c);
   return r;
}

std::map<Exp, XPoly> FormalFunction::y_expansion() const
{
   std::map<Exp, XPoly> out;
   for (const auto &[e, c] : p_.terms())
   {
      Exp L(e.begin() + n_, e.end());
      auto it = out.try_emplace(L, XPoly(n_)).first;
      it->second.add_term(Exp(e.begin(), e.begin() + n_), c);
   }
   return out;
}

void FormalFunction::check_same(const FormalFunction &o) const
{
   if (n_ != o.n_ || k_ != o.k_ || cap_ != o.cap_)
      throw DimensionMismatch("formal functions on different charts");
}

FormalFunction &FormalFunction::operator+=(const FormalFunction &o)
{
   check_same(o);
   p_ += o.p_;
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

FormalFunction &FormalFunction::operator-=(const FormalFunction &o)
{
   check_same(o);
   p_ -= o.p_;
   truncated_ = truncated_ || o.truncated_;
   return *this;
}

FormalFunction &FormalFunction::operator*=(const Rat &c)
{
   p_ *= c;
   return *this;
}

bool FormalFunction::operator==(const FormalFunction &o) const
{
   return n_ == o.n_ && k_ == o.k_ && cap_ == o.cap_ && p_ == o.p_;
}

FormalFunction ff_mul(const FormalFunction &a, const FormalFunction &b)
{
   if (a.n() != b.n() || a.k() != b.k() || a.cap() != b.cap())
      throw DimensionMismatch("ff_mul: chart mismatch");
   FormalFunction r(a.n(), a.k(), a.cap(), a.poly() * b.poly());
   if (a.truncated() || b.truncated())
      r.mark_truncated();
   return r;
}

FormalFunction ff_partial(const FormalFunction &f, Axis which)
{
   int var;
   if (which.kind == Axis::X)
   {
      if (which.index < 1 || which.index > f.n())
         throw AxisOutOfRange("ff_partial: x axis out of range");
      var = which.index - 1;
   }
   else
   {
      if (which.index < 1 || which.index > f.k())
         throw AxisOutOfRange("ff_partial: y axis out of range");
      var = f.n() + which.index - 1;
   }
   FormalFunction r(f.n(), f.k(), f.cap(), f.poly().partial(var));
   if (f.truncated())
      r.mark_truncated();
   return r;
}

} // namespace fdr
