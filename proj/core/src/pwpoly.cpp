#include "fdr/pwpoly.hpp"
#include "fdr/errors.hpp"

#include <algorithm>

namespace fdr {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs))
{
   trim();
}

void UPoly::trim()
{
   while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
}

Rat UPoly::eval(const Rat &a) const
{
   Rat r = 0;
   for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      r = r * a + *it;
   return r;
}

UPoly UPoly::derivative() const
{
   std::vector<Rat> d;
   for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * static_cast<long>(i));
   return UPoly(std::move(d));
}

UPoly UPoly::antiderivative() const
{
   if (c_.empty())
      return UPoly();
   std::vector<Rat> a(c_.size() + 1);
   for (std::size_t i = 0; i < c_.size(); ++i)
      a[i + 1] = c_[i] / static_cast<long>(i + 1);
   return UPoly(std::move(a));
}

UPoly &UPoly::operator+=(const UPoly &o)
{
   if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
   for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
   trim();
   return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
   if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
   for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
   trim();
   return *this;
}

UPoly &UPoly::operator*=(const Rat &s)
{
   for (auto &c : c_)
      c *= s;
   trim();
   return *this;
}

UPoly operator*(const UPoly &a, const UPoly &b)
{
   if (a.is_zero() || b.is_zero())
      return UPoly();
   std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
   for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
         r[i + j] += a.c_[i] * b.c_[j];
   return UPoly(std::move(r));
}

PwPoly::PwPoly(std::vector<Rat> breaks, std::vector<UPoly> pieces)
   : breaks_(std::move(breaks)), pieces_(std::move(pieces))
{
   if (breaks_.empty() && pieces_.empty())
      return;
   if (pieces_.size() + 1 != breaks_.size())
      throw DimensionMismatch("pw: need one piece per breakpoint interval");
   for (std::size_t j = 1; j < breaks_.size(); ++j)
      if (!(breaks_[j - 1] < breaks_[j]))
         throw Error("pw: breakpoints must be strictly increasing");
   normalize();
}

void PwPoly::normalize()
{
   std::vector<Rat> b{breaks_.front()};
   std::vector<UPoly> p;
   for (std::size_t j = 0; j < pieces_.size(); ++j)
   {
      if (!p.empty() && p.back() == pieces_[j])
         b.back() = breaks_[j + 1];
      else
      {
         p.push_back(pieces_[j]);
         b.push_back(breaks_[j + 1]);
      }
   }
   std::size_t lo = 0, hi = p.size();
   while (lo < hi && p[lo].is_zero())
      ++lo;
   while (hi > lo && p[hi - 1].is_zero())
      --hi;
   if (lo == hi)
   {
      breaks_.clear();
      pieces_.clear();
      smooth_ = kSmooth;
      return;
   }
   breaks_.assign(b.begin() + lo, b.begin() + hi + 1);
   pieces_.assign(p.begin() + lo, p.begin() + hi);
   compute_smoothness();
}

void PwPoly::compute_smoothness()
{
   int maxdeg = max_degree();
   std::vector<UPoly> cur = pieces_;
   smooth_ = -1;
   for (int order = 0; order <= maxdeg; ++order)
   {
      for (std::size_t j = 0; j < breaks_.size(); ++j)
      {
         Rat left = j == 0 ? Rat(0) : cur[j - 1].eval(breaks_[j]);
         Rat right = j == cur.size() ? Rat(0) : cur[j].eval(breaks_[j]);
         if (left != right)
            return;
      }
      smooth_ = order;
      for (auto &c : cur)
         c = c.derivative();
   }
}

int PwPoly::max_degree() const
{
   int d = -1;
   for (const auto &p : pieces_)
      d = std::max(d, p.degree());
   return d;
}

PwPoly PwPoly::indicator(const Rat &a, const Rat &b)
{
   return PwPoly({a, b}, {UPoly::constant(1)});
}

PwPoly PwPoly::bspline(int degree, const Rat &left, const Rat &h)
{
   if (degree < 0 || h <= 0)
      throw Error("bspline: bad degree or spacing");
   std::vector<PwPoly> level;
   for (int j = 0; j <= degree; ++j)
      level.push_back(indicator(left + j * h, left + (j + 1) * h));
   for (int p = 1; p <= degree; ++p)
   {
      std::vector<PwPoly> next;
      for (std::size_t j = 0; j + 1 < level.size(); ++j)
      {
         Rat tj = left + static_cast<long>(j) * h;
         Rat tend = left + static_cast<long>(j + p + 1) * h;
         Rat s = Rat(1) / (p * h);
         UPoly up({-tj * s, s});
         UPoly down({tend * s, -s});
         next.push_back(level[j].mul(up) + level[j + 1].mul(down));
      }
      level = std::move(next);
   }
   return level.front();
}

PwPoly PwPoly::default_bump()
{
   return bspline(2, 0);
}

PwPoly PwPoly::triangle()
{
   return bspline(1, 0);
}

Rat PwPoly::eval(const Rat &a) const
{
   if (pieces_.empty() || a < breaks_.front() || a >= breaks_.back())
      return 0;
   auto it = std::upper_bound(breaks_.begin(), breaks_.end(), a);
   return pieces_[(it - breaks_.begin()) - 1].eval(a);
}

PwPoly PwPoly::derivative() const
{
   if (is_zero())
      return {};
   std::vector<UPoly> d;
   for (const auto &p : pieces_)
      d.push_back(p.derivative());
   return PwPoly(breaks_, std::move(d));
}

Rat PwPoly::integral() const
{
   return integral_against(UPoly::constant(1));
}

Rat PwPoly::moment(int e) const
{
   std::vector<Rat> c(e + 1);
   c[e] = 1;
   return integral_against(UPoly(std::move(c)));
}

Rat PwPoly::integral_against(const UPoly &w) const
{
   Rat s = 0;
   for (std::size_t j = 0; j < pieces_.size(); ++j)
   {
      UPoly a = (pieces_[j] * w).antiderivative();
      s += a.eval(breaks_[j + 1]) - a.eval(breaks_[j]);
   }
   return s;
}

std::vector<Rat> merge_grids(const std::vector<Rat> &a, const std::vector<Rat> &b)
{
   std::vector<Rat> g;
   std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(g));
   g.erase(std::unique(g.begin(), g.end()), g.end());
   return g;
}

std::vector<UPoly> PwPoly::pieces_on(const std::vector<Rat> &grid) const
{
   std::vector<UPoly> out;
   std::size_t j = 0;
   for (std::size_t c = 0; c + 1 < grid.size(); ++c)
   {
      const Rat &lo = grid[c];
      if (pieces_.empty() || lo < breaks_.front() || lo >= breaks_.back())
      {
         out.emplace_back();
         continue;
      }
      while (breaks_[j + 1] <= lo)
         ++j;
      if (grid[c + 1] > breaks_[j + 1])
         throw Error("pw: grid does not refine breakpoints");
      out.push_back(pieces_[j]);
   }
   return out;
}

namespace {

template <class Op>
PwPoly combine(const PwPoly &a, const PwPoly &b, Op op)
{
   auto grid = merge_grids(a.breaks(), b.breaks());
   if (grid.size() < 2)
      return {};
   auto pa = a.pieces_on(grid), pb = b.pieces_on(grid);
   std::vector<UPoly> out;
   for (std::size_t c = 0; c < pa.size(); ++c)
      out.push_back(op(pa[c], pb[c]));
   return PwPoly(std::move(grid), std::move(out));
}

} // namespace

PwPoly &PwPoly::operator+=(const PwPoly &o)
{
   return *this = combine(*this, o, [](const UPoly &x, const UPoly &y) { return x + y; });
}

PwPoly &PwPoly::operator-=(const PwPoly &o)
{
   return *this = combine(*this, o, [](const UPoly &x, const UPoly &y) { return x - y; });
}

PwPoly operator*(const PwPoly &a, const PwPoly &b)
{
   return combine(a, b, [](const UPoly &x, const UPoly &y) { return x * y; });
}

PwPoly &PwPoly::operator*=(const Rat &s)
{
   if (s == 0)
      return *this = PwPoly();
   for (auto &p : pieces_)
      p *= s;
   return *this;
}

PwPoly PwPoly::mul(const UPoly &w) const
{
   if (is_zero())
      return {};
   std::vector<UPoly> out;
   for (const auto &p : pieces_)
      out.push_back(p * w);
   return PwPoly(breaks_, std::move(out));
}

bool PwPoly::operator<(const PwPoly &o) const
{
   if (breaks_ != o.breaks_)
      return std::lexicographical_compare(breaks_.begin(), breaks_.end(), o.breaks_.begin(),
                                          o.breaks_.end());
   for (std::size_t j = 0; j < pieces_.size(); ++j)
   {
      const auto &a = pieces_[j].coeffs(), &b = o.pieces_[j].coeffs();
      if (a != b)
         return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
   }
   return false;
}

Rat PwAntideriv::eval(const Rat &a) const
{
   return a >= end ? tail : core.eval(a);
}

PwAntideriv pw_antideriv(const PwPoly &f)
{
   if (f.is_zero())
      return {PwPoly(), Rat(0), Rat(0)};
   const auto &b = f.breaks();
   std::vector<UPoly> pieces;
   Rat acc = 0;
   for (std::size_t j = 0; j < f.pieces().size(); ++j)
   {
      UPoly P = f.pieces()[j].antiderivative();
      Rat base = P.eval(b[j]);
      pieces.push_back(P + UPoly::constant(acc - base));
      acc += P.eval(b[j + 1]) - base;
   }
   return {PwPoly(b, std::move(pieces)), acc, b.back()};
}

PwPoly pw_star(const PwPoly &f1, const PwPoly &f2)
{
   auto F1 = pw_antideriv(f1), F2 = pw_antideriv(f2);
   const Rat &I1 = F1.tail, &I2 = F2.tail;
   PwPoly r = F2.core * I1 - F1.core * I2;
   Rat jump = I1 * I2;
   if (jump != 0 && F1.end != F2.end)
   {
      // I1 I2 (H(a - end2) - H(a - end1))
      if (F1.end < F2.end)
         r -= PwPoly::indicator(F1.end, F2.end) * jump;
      else
         r += PwPoly::indicator(F2.end, F1.end) * jump;
   }
   return r;
}

std::string to_string(const UPoly &p, const std::string &var)
{
   if (p.is_zero())
      return "0";
   std::string out;
   for (int i = p.degree(); i >= 0; --i)
   {
      Rat c = p.coeff(i);
      if (c == 0)
         continue;
      bool neg = c < 0;
      if (neg)
         c = -c;
      if (out.empty())
         out += neg ? "-" : "";
      else
         out += neg ? " - " : " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty())
         out += to_string(c);
      else if (c == 1)
         out += mono;
      else
         out += to_string(c) + "*" + mono;
   }
   return out;
}

std::string to_string(const PwPoly &f, int axis)
{
   std::string out = "pw";
   if (axis > 0)
      out += std::to_string(axis);
   out += "[(";
   for (std::size_t j = 0; j < f.breaks().size(); ++j)
   {
      if (j)
         out += ',';
      out += to_string(f.breaks()[j]);
   }
   out += ")";
   for (const auto &p : f.pieces())
      out += ";" + to_string(p, "x");
   out += "]";
   return out;
}

} // namespace fdr
