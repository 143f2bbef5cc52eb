#include "selftest.hpp"

#include "fdr/complexes.hpp"
#include "fdr/errors.hpp"
#include "fdr/text.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace fdr::selftest {

namespace {

using Rng = std::mt19937_64;

/** Tallies checks and keeps the first failure. */
struct Tally
{
   Tally(int id, std::string name)
   {
      r.id = id;
      r.name = std::move(name);
   }

   SuiteResult r;

   void expect(bool cond, const std::string &what)
   {
      ++r.checks;
      if (!cond && r.ok)
      {
         r.ok = false;
         r.detail = what;
      }
   }
};

int uniform(Rng &rng, int lo, int hi)
{
   return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat small_rat(Rng &rng)
{
   int num = uniform(rng, -4, 4);
   if (num == 0)
      num = 1;
   Rat q(num, uniform(rng, 1, 3));
   q.canonicalize();
   return q;
}

std::string chart_tag(const Chart &c)
{
   return "(" + std::to_string(c.n) + "," + std::to_string(c.k) + ")";
}

/** A few random monomial terms per basis index, inside the weight cap. */
FormalForm random_form(Rng &rng, const Chart &c, int r, int max_x = 2, int per_index = 2)
{
   FormalForm w(c, r);
   for (const auto &bi : enumerate_bi(c.n, c.k, r))
      for (int t = 0; t < per_index; ++t)
      {
         if (uniform(rng, 0, 3) == 0)
            continue;
         Exp e(c.dim(), 0);
         for (int i = 0; i < c.n; ++i)
            e[i] = uniform(rng, 0, max_x);
         int budget = c.cap - bi.ypart().size();
         for (int j = 0; j < c.k && budget > 0; ++j)
         {
            e[c.n + j] = uniform(rng, 0, budget);
            budget -= e[c.n + j];
         }
         w.add(bi, Poly::monomial(c.dim(), e, small_rat(rng)));
      }
   return w;
}

/** C^1 piecewise polynomial: a combination of shifted quadratic and cubic B-splines. */
PwPoly random_pw(Rng &rng)
{
   static const Rat lefts[] = {Rat(-1), Rat(0), Rat(1, 2), Rat(1), Rat(3, 2)};
   PwPoly f;
   int parts = uniform(rng, 1, 2);
   for (int p = 0; p < parts; ++p)
   {
      Rat h = uniform(rng, 0, 1) ? Rat(1) : Rat(1, 2);
      f += PwPoly::bspline(uniform(rng, 2, 3), lefts[uniform(rng, 0, 4)], h) * small_rat(rng);
   }
   if (f.is_zero())
      f = PwPoly::default_bump();
   return f;
}

DensityCurrent random_density(Rng &rng, const Chart &c, int r)
{
   DensityCurrent e(c, r);
   for (const auto &dual : enumerate_bi(c.n, c.k, c.dim() - r))
      for (int t = 0; t < 2; ++t)
      {
         std::vector<PwPoly> axes;
         for (int i = 0; i < c.n; ++i)
            axes.push_back(random_pw(rng));
         Exp L(c.k, 0);
         for (int j = 0; j < c.k; ++j)
            L[j] = uniform(rng, 0, 1);
         e.add(dual, DensityCoeff::term(small_rat(rng), axes, L));
      }
   return e;
}

DeltaCurrent random_delta(Rng &rng, const Chart &c, int r, bool at_origin)
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

/** Parity of inversions, 0 on repeats. Independent of the library's index code. */
int oracle_perm_sign(const std::vector<int> &v)
{
   int inv = 0;
   for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
      {
         if (v[i] == v[j])
            return 0;
         if (v[i] > v[j])
            ++inv;
      }
   return inv % 2 ? -1 : 1;
}

/** Axes of a basis covector as 1..n (x) and n+1..n+k (y). */
std::vector<int> axes_of(const BiIndex &bi)
{
   std::vector<int> v = bi.xpart().entries();
   for (int j : bi.ypart().entries())
      v.push_back(bi.n() + j);
   return v;
}


/** Determinant convention: value of dx_A on the basis vectors e_v. */
int covector_value(const std::vector<int> &A, const std::vector<int> &v)
{
   if (A.size() != v.size())
      return 0;
   std::vector<int> pos;
   for (int a : v)
   {
      auto it = std::find(A.begin(), A.end(), a);
      if (it == A.end())
         return 0;
      pos.push_back(static_cast<int>(it - A.begin()));
   }
   return oracle_perm_sign(pos);
}

template <class F>
double timed(F &&f)
{
   auto t0 = std::chrono::steady_clock::now();
   f();
   return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

SuiteResult differential_laws(std::uint64_t seed)
{
   Tally t(1, "differential laws");
   Rng rng(seed ^ 0x1);
   for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 3; ++k)
         for (int cap = 2; cap <= 4; cap += 2)
         {
            Chart c{n, k, cap};
            int top = c.dim();
            for (int rep = 0; rep < 2; ++rep)
               for (int r = 0; r <= top; ++r)
               {
                  FormalForm w = random_form(rng, c, r);
                  t.expect(d(d(w)).is_zero(), "d(d w) != 0 on " + chart_tag(c) + " degree " +
                                                  std::to_string(r));
                  int r2 = uniform(rng, 0, top - r);
                  FormalForm v = random_form(rng, c, r2);
                  FormalForm lhs = d(wedge(w, v));
                  FormalForm rhs = wedge(d(w), v);
                  FormalForm tail = wedge(w, d(v));
                  if (r % 2)
                     rhs -= tail;
                  else
                     rhs += tail;
                  t.expect(lhs == rhs, "Leibniz fails on " + chart_tag(c) + " degrees " +
                                           std::to_string(r) + "," + std::to_string(r2));
               }
         }
   return t.r;
}

SuiteResult wedge_oracle()
{
   Tally t(2, "wedge oracle");
   for (int n = 0; n <= 4; ++n)
      for (int k = 0; n + k <= 4; ++k)
      {
         Chart c{n, k, 4};
         int dim = c.dim();
         for (int r1 = 0; r1 <= dim; ++r1)
            for (int r2 = 0; r1 + r2 <= std::min(dim, 4); ++r2)
            {
               Rat norm = Rat(1) / Rat(factorial(r1) * factorial(r2));
               for (const auto &a : enumerate_bi(n, k, r1))
                  for (const auto &b : enumerate_bi(n, k, r2))
                  {
                     auto A = axes_of(a), B = axes_of(b);
                     FormalForm expect(c, r1 + r2);
                     for (const auto &K : enumerate_bi(n, k, r1 + r2))
                     {
                        std::vector<int> perm = axes_of(K);
                        Rat sum = 0;
                        do
                        {
                           std::vector<int> head(perm.begin(), perm.begin() + r1);
                           std::vector<int> rest(perm.begin() + r1, perm.end());
                           int s = covector_value(A, head) * covector_value(B, rest);
                           if (s == 0)
                              continue;
                           std::vector<int> pos;
                           auto sorted = axes_of(K);
                           for (int p : perm)
                              pos.push_back(static_cast<int>(
                                 std::find(sorted.begin(), sorted.end(), p) - sorted.begin()));
                           sum += Rat(s * oracle_perm_sign(pos));
                        } while (std::next_permutation(perm.begin(), perm.end()));
                        sum *= norm;
                        if (sum != 0)
                           expect.add(K, Poly::constant(dim, sum));
                     }
                     FormalForm wa = FormalForm::monomial(c, a, Poly::constant(dim, 1));
                     FormalForm wb = FormalForm::monomial(c, b, Poly::constant(dim, 1));
                     t.expect(wedge(wa, wb) == expect,
                              "wedge " + to_string(a) + " ^ " + to_string(b) + " on " + chart_tag(c));
                  }
            }
      }
   return t.r;
}

SuiteResult duality_transpose(std::uint64_t seed)
{
   Tally t(3, "duality transpose");
   Rng rng(seed ^ 0x3);
   const int cap_x = 3;
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart c{n, k, 3};
         for (int R = 1; R <= c.dim(); ++R)
         {
            Rat sgn = R % 2 ? -1 : 1;
            auto battery = monomial_battery(c, R - 1, cap_x);
            for (const auto &dual : enumerate_bi(n, k, c.dim() - R))
               for (const auto &L : exponents_up_to(k, c.cap))
               {
                  if (dual_weight(L, dual) > c.cap)
                     continue;
                  std::vector<PwPoly> axes;
                  for (int i = 0; i < n; ++i)
                     axes.push_back(random_pw(rng));
                  auto eta = DensityCurrent::basis(c, dual, DensityCoeff::term(1, axes, L));
                  DeltaCurrent del(c, R);
                  std::vector<Rat> p;
                  Exp a;
                  for (int i = 0; i < n; ++i)
                  {
                     p.push_back(small_rat(rng));
                     a.push_back(uniform(rng, 0, 2));
                  }
                  del.add(DeltaKey{dual, p, a, L}, 1);
                  auto deta = d_density(eta);
                  auto ddel = d_distribution(del);
                  for (const auto &w : battery)
                  {
                     FormalForm dw = d(w);
                     t.expect(pair(w, deta) == sgn * pair(dw, eta),
                              "density transpose on " + chart_tag(c) + " dual " +
                                 to_string(dual, true));
                     t.expect(pair(w, ddel) == sgn * pair(dw, del),
                              "delta transpose on " + chart_tag(c) + " dual " +
                                 to_string(dual, true));
                  }
               }
         }
      }

   // k = 0: a compactly supported form f dx_I is the density f dx*_I.
   for (int n = 1; n <= 2; ++n)
   {
      Chart c{n, 0, 3};
      for (int r = 0; r <= n; ++r)
         for (const auto &I : enumerate_bi(n, 0, r))
         {
            std::vector<PwPoly> f;
            for (int i = 0; i < n; ++i)
               f.push_back(random_pw(rng));
            DensityCoeff tau = DensityCoeff::term(1, f, {});
            auto iota = DensityCurrent::basis(c, I, tau);

            // d(f dx_I) = sum_i d_i f dx_i ^ dx_I
            DensityCurrent iota_d(c, n - r - 1);
            std::vector<int> Iv = I.xpart().entries();
            for (int i = 1; i <= n; ++i)
            {
               if (I.xpart().contains(i))
                  continue;
               std::vector<int> seq{i};
               seq.insert(seq.end(), Iv.begin(), Iv.end());
               std::vector<int> sorted = seq;
               std::sort(sorted.begin(), sorted.end());
               iota_d.add(BiIndex(n, 0, sorted, {}),
                          tau.partial_x(i) * Rat(oracle_perm_sign(seq)));
            }
            if (r < n)
               t.expect(d_density(iota) == iota_d,
                        "k=0 chain map fails for dx" + to_string(I) + " on " + chart_tag(c));

            // <w, iota(f dx_I)> = integral of w ^ f dx_I
            for (const auto &w : monomial_battery(c, n - r, 2))
            {
               Rat expect = 0;
               for (const auto &[K, g] : w.terms())
               {
                  std::vector<int> seq = K.xpart().entries();
                  seq.insert(seq.end(), Iv.begin(), Iv.end());
                  int s = oracle_perm_sign(seq);
                  if (s)
                     expect += integrate_density(tau, FormalFunction(n, 0, c.cap, g)) * s;
               }
               t.expect(pair(w, iota) == expect,
                        "k=0 pairing is not the integral of w ^ f dx" + to_string(I));
            }
         }
   }
   return t.r;
}

SuiteResult kunneth_signs(std::uint64_t seed)
{
   Tally t(4, "kunneth signs");
   Rng rng(seed ^ 0x4);

   // (a) psi on the monomial bases: a signed permutation commuting with d.
   const int cap = 2, cap_x = 2;
   for (int n1 = 0; n1 <= 2; ++n1)
      for (int k1 = 0; k1 <= 2; ++k1)
         for (int n2 = 0; n2 <= 2; ++n2)
            for (int k2 = 0; k2 <= 2; ++k2)
            {
               Chart c1{n1, k1, cap}, c2{n2, k2, cap};
               Chart pc = product_chart(c1, c2, cap);
               FormBasis b1(c1, cap_x), b2(c2, cap_x), bp(pc, cap_x);
               std::string tag = chart_tag(c1) + "x" + chart_tag(c2);
               for (int r = 0; r <= pc.dim(); ++r)
               {
                  std::vector<int> hits(bp.elements(r).size(), 0);
                  for (int r1 = std::max(0, r - c2.dim()); r1 <= std::min(r, c1.dim()); ++r1)
                  {
                     int r2 = r - r1;
                     for (const auto &w1 : b1.elements(r1))
                        for (const auto &w2 : b2.elements(r2))
                        {
                           const auto &[bi1, p1] = *w1.terms().begin();
                           const auto &[bi2, p2] = *w2.terms().begin();
                           const Exp &e1 = p1.terms().begin()->first;
                           const Exp &e2 = p2.terms().begin()->first;
                           int xs = exp_degree(e1, 0, n1) + bi1.xpart().size() +
                                    exp_degree(e2, 0, n2) + bi2.xpart().size();
                           int ys = exp_degree(e1, n1, n1 + k1) + bi1.ypart().size() +
                                    exp_degree(e2, n2, n2 + k2) + bi2.ypart().size();
                           FormalForm img = psi(w1, w2, cap);
                           if (xs > cap_x || ys > cap)
                           {
                              if (ys > cap)
                                 t.expect(img.is_zero(), "psi keeps an overweight pair on " + tag);
                              continue;
                           }
                           auto v = bp.coords(img);
                           int nz = 0;
                           bool unit = true;
                           for (std::size_t i = 0; i < v.size(); ++i)
                              if (v[i] != 0)
                              {
                                 ++nz;
                                 unit = unit && (v[i] == 1 || v[i] == -1);
                                 ++hits[i];
                              }
                           t.expect(nz == 1 && unit, "psi image is not a signed basis vector on " + tag);
                        }
                  }
                  for (int h : hits)
                     t.expect(h == 1, "psi is not a bijection of bases on " + tag + " degree " +
                                         std::to_string(r));
               }

               for (int r1 = 0; r1 <= c1.dim(); ++r1)
                  for (int r2 = 0; r2 <= c2.dim(); ++r2)
                  {
                     TensorElement<FormalForm, FormalForm> te(random_form(rng, c1, r1, 2, 1),
                                                              random_form(rng, c2, r2, 2, 1));
                     if (te.empty())
                        continue;
                     FormalForm lhs = d(psi(te, pc));
                     FormalForm rhs = psi(d_tensor(te), pc);
                     t.expect(lhs == rhs, "d psi != psi d on " + tag);
                  }
            }

   // (b) <psi(w1 (x) w2), e1 [x] e2> = (-1)^(r1 r2) <w1, e1> <w2, e2> for every basis pair.
   const int pcap = 4;
   std::set<std::vector<int>> seen;
   for (int n1 = 0; n1 <= 2; ++n1)
      for (int k1 = 0; k1 <= 2; ++k1)
         for (int n2 = 0; n2 <= 2; ++n2)
            for (int k2 = 0; k2 <= 2; ++k2)
            {
               Chart c1{n1, k1, pcap}, c2{n2, k2, pcap};
               std::string tag = chart_tag(c1) + "x" + chart_tag(c2);
               std::vector<PwPoly> ax1, ax2;
               for (int i = 0; i < n1; ++i)
                  ax1.push_back(PwPoly::bspline(2 + i % 2, Rat(i)));
               for (int i = 0; i < n2; ++i)
                  ax2.push_back(PwPoly::bspline(3 - i % 2, Rat(-i)) * Rat(2));
               for (int r1 = 0; r1 <= c1.dim(); ++r1)
                  for (int r2 = 0; r2 <= c2.dim(); ++r2)
                     for (const auto &bi1 : enumerate_bi(n1, k1, r1))
                        for (const auto &bi2 : enumerate_bi(n2, k2, r2))
                        {
                           auto w1 = FormalForm::monomial(c1, bi1, Poly::constant(c1.dim(), 1));
                           auto w2 = FormalForm::monomial(c2, bi2, Poly::constant(c2.dim(), 1));
                           BiIndex o1 = bi1.complement(), o2 = bi2.complement();
                           auto e1 = DensityCurrent::basis(c1, o1, DensityCoeff::term(1, ax1, Exp(k1, 0)));
                           auto e2 = DensityCurrent::basis(c2, o2, DensityCoeff::term(1, ax2, Exp(k2, 0)));
                           Rat rhs = pair(w1, e1) * pair(w2, e2) * ((r1 * r2) % 2 ? -1 : 1);
                           FormalForm pw = psi(w1, w2, pcap);
                           DensityCurrent box = boxtimes(e1, e2, pcap);
                           Rat lhs = pair(pw, box);
                           t.expect(lhs == rhs, "pairing law fails on " + tag + " for " +
                                                   to_string(bi1) + " (x) " + to_string(bi2));
                           int t1 = n1 - o1.xpart().size(), t2 = n2 - o2.xpart().size();
                           Rat unsigned_pair = lhs * Rat(boxtimes_sign(o1, o2));
                           if (unsigned_pair != 0)
                           {
                              int a = boxtimes_exponent(n1, k1, r1, t1, n2, k2, r2, t2);
                              Rat want = rhs / unsigned_pair;
                              t.expect(want == (a % 2 ? -1 : 1),
                                       "sign exponent disagrees with the pairing law on " + tag);
                           }
                           seen.insert({n1, k1, n2, k2, r1, r2, t1, t2});
                        }
            }
   t.r.detail = t.r.ok ? std::to_string(seen.size()) + " sign configurations" : t.r.detail;
   return t.r;
}

SuiteResult poincare_forms(std::uint64_t seed)
{
   Tally t(5, "poincare forms/distributions");
   Rng rng(seed ^ 0x5);
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart c{n, k, 4};
         std::string tag = chart_tag(c);
         auto ct = contract_forms(c);
         for (Rat l : {Rat(1), Rat(-3, 2)})
            t.expect(ct.augment_out(ct.augment_in(l)) == l, "g(eps(l)) != l on " + tag);
         for (int r = 0; r <= c.dim(); ++r)
            for (int rep = 0; rep < 2; ++rep)
            {
               FormalForm w = random_form(rng, c, r, 3);
               t.expect(homotopy_defect(ct, w).is_zero(),
                        "dh + hd != id - eps g on " + tag + " degree " + std::to_string(r));
               t.expect(d(ct.h(d(w))) == d(w), "dhd != d on " + tag);
            }

         auto cx = assemble(n, k, 4, 4, ComplexKind::Forms, true);
         auto b = betti(cx);
         t.expect(std::all_of(b.begin(), b.end(), [](int v) { return v == 0; }),
                  "augmented forms complex not exact on " + tag);
         auto h = homotopy_matrices(ct, 4, true);
         auto rep = certify_strong_exactness(cx, h);
         t.expect(rep.ok, "forms certificate fails on " + tag + " (" + rep.failure + ")");

         auto tx = transpose(cx);
         auto tb = betti(tx);
         std::reverse(tb.begin(), tb.end());
         t.expect(tb == b, "transpose changes Betti numbers on " + tag);
         auto trep = certify_strong_exactness(tx, transpose(cx, h));
         t.expect(trep.ok, "transposed certificate fails on " + tag + " (" + trep.failure + ")");

         auto dt = transpose_contraction(ct);
         for (int r = 0; r <= c.dim(); ++r)
         {
            DeltaCurrent e = random_delta(rng, c, r, true);
            DeltaCurrent defect = homotopy_defect(dt, e);
            Functional zero{c, r, [](const FormalForm &) { return Rat(0); }};
            t.expect(agree_on_battery(embed(defect), zero, 3),
                     "distribution homotopy defect pairs nonzero on " + tag);
         }
      }
   return t.r;
}

SuiteResult poincare_densities(std::uint64_t seed)
{
   Tally t(6, "poincare densities/generalized");
   Rng rng(seed ^ 0x6);

   for (int rep = 0; rep < 40; ++rep)
   {
      PwPoly f = random_pw(rng), g = random_pw(rng);
      if (uniform(rng, 0, 2) == 0)
         f = PwPoly::indicator(Rat(-uniform(rng, 1, 3)) / 2, Rat(2)) * small_rat(rng);
      PwPoly lhs = pw_star(f, g).derivative();
      PwPoly rhs = g * f.integral() - f * g.integral();
      t.expect(lhs == rhs, "(f * g)' != (int f) g - (int g) f");
   }

   int currents = 0;
   for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k)
      {
         Chart c{n, k, 4};
         std::string tag = chart_tag(c);
         auto ct = contract_density(n, k, {}, 4);
         for (Rat l : {Rat(1), Rat(5, 3)})
            t.expect(ct.augment_out(ct.augment_in(l)) == l, "zeta(alpha(l)) != l on " + tag);
         for (int r = 0; r <= c.dim(); ++r)
            for (int rep = 0; rep < 4; ++rep)
            {
               DensityCurrent e = random_density(rng, c, r);
               ++currents;
               t.expect(homotopy_defect(ct, e).is_zero(),
                        "dh + hd != id - alpha zeta on " + tag + " degree " + std::to_string(r));
            }

         if (c.dim() <= 3)
         {
            auto gt = transpose_contraction(ct);
            for (int r = 0; r <= c.dim(); ++r)
            {
               GenFunction T = GenFunction::regular_part(random_form(rng, c, r, 2, 1));
               t.expect(homotopy_defect(gt, T).is_zero(),
                        "generalized homotopy defect on " + tag + " degree " + std::to_string(r));
            }
         }

         auto cx = assemble(n, k, 4, 4, ComplexKind::Densities, true);
         auto b = betti(cx);
         t.expect(std::all_of(b.begin(), b.end(), [](int v) { return v == 0; }),
                  "augmented spline complex not exact on " + tag);
         auto rep = certify_strong_exactness(cx, homotopy_matrices(ct, 5, true));
         t.expect(rep.ok, "spline certificate fails on " + tag + " (" + rep.failure + ")");
      }
   t.expect(currents >= 100, "fewer than 100 random currents");
   return t.r;
}

SuiteResult cli_goldens(const CliRunner &run)
{
   Tally t(7, "cli goldens");
   struct Golden
   {
      std::vector<std::string> argv;
      std::string out;
   };
   const std::vector<Golden> goldens = {
      {{"d", "--chart", "0,1", "y1^3"}, "(3*y1^2) dy1\n"},
      {{"pair", "--chart", "0,1", "--cap", "3", "y1^2", "pw-unit*(ys1^2)"}, "2\n"},
      {{"pair", "--chart", "2,0", "dx2", "pw-unit dxs1"}, "-1\n"},
   };
   for (const auto &g : goldens)
   {
      std::string out;
      int code = run(g.argv, out);
      std::string cmd;
      for (const auto &a : g.argv)
         cmd += (cmd.empty() ? "" : " ") + a;
      t.expect(code == 0 && out == g.out, "`" + cmd + "` printed \"" + out + "\"");
   }
   return t.r;
}

SuiteResult round_trip(std::uint64_t seed)
{
   Tally t(0, "round trip");
   Rng rng(seed ^ 0x9);
   for (int rep = 0; rep < 500; ++rep)
   {
      Chart c{uniform(rng, 0, 2), uniform(rng, 0, 2), 3};
      int r = uniform(rng, 0, c.dim());
      try
      {
         switch (rep % 3)
         {
         case 0:
         {
            FormalForm w = random_form(rng, c, r, 3);
            std::string s = to_string(w);
            t.expect(parse_form(s, c) == w, "form round trip: " + s);
            break;
         }
         case 1:
         {
            DensityCurrent e = random_density(rng, c, r);
            std::string s = to_string(e);
            t.expect(parse_density(s, c, r) == e, "density round trip: " + s);
            break;
         }
         default:
         {
            DeltaCurrent e = random_delta(rng, c, r, uniform(rng, 0, 1));
            std::string s = to_string(e);
            t.expect(parse_delta(s, c, r) == e, "delta round trip: " + s);
         }
         }
      }
      catch (const Error &ex)
      {
         t.expect(false, std::string("round trip threw: ") + ex.what());
      }
   }
   return t.r;
}

double time_limit(int id)
{
   static const double limits[] = {5, 5, 10, 10, 30, 20, 20, 1, 60};
   return id >= 0 && id <= 8 ? limits[id] : 0;
}

std::vector<SuiteResult> run_all(std::uint64_t seed, const CliRunner &run, std::ostream &out,
                                 int only)
{
   out << "seed=" << seed << "\n";
   std::vector<std::function<SuiteResult()>> suites = {
      [&] { return round_trip(seed); },
      [&] { return differential_laws(seed); },
      [] { return wedge_oracle(); },
      [&] { return duality_transpose(seed); },
      [&] { return kunneth_signs(seed); },
      [&] { return poincare_forms(seed); },
      [&] { return poincare_densities(seed); },
      [&] { return cli_goldens(run); },
   };
   std::vector<SuiteResult> results;
   for (int id = 0; id < static_cast<int>(suites.size()); ++id)
   {
      if (only >= 0 && only != id)
         continue;
      SuiteResult r;
      double s = timed([&] {
         try
         {
            r = suites[id]();
         }
         catch (const std::exception &ex)
         {
            r.id = id;
            r.name = "suite " + std::to_string(id);
            r.ok = false;
            r.detail = ex.what();
         }
      });
      r.seconds = s;
      out << (r.ok ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " checks=" << r.checks;
      std::ostringstream secs;
      secs.precision(3);
      secs << std::fixed << r.seconds;
      out << " time=" << secs.str() << "s";
      if (!r.detail.empty())
         out << " : " << r.detail;
      out << "\n";
      results.push_back(r);
   }
   return results;
}

} // namespace fdr::selftest
