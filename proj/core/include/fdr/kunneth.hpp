#ifndef FDR_KUNNETH_HPP
#define FDR_KUNNETH_HPP

#include "fdr/currents.hpp"
#include "fdr/generalized.hpp"

#include <utility>
#include <vector>

namespace fdr {

inline int complex_degree(const FormalForm &w) { return w.degree(); }
inline int complex_degree(const DensityCurrent &e) { return -e.degree(); }
inline int complex_degree(const DeltaCurrent &e) { return -e.degree(); }
inline int complex_degree(const GenFunction &t) { return t.degree(); }

inline FormalForm coboundary(const FormalForm &w) { return d(w); }
inline DensityCurrent coboundary(const DensityCurrent &e) { return d_density(e); }
inline DeltaCurrent coboundary(const DeltaCurrent &e) { return d_distribution(e); }
inline GenFunction coboundary(const GenFunction &t) { return d_generalized(t); }

/**
 * Finite sum of pure tensors u (x) v. Scalars live in the left factor. Pairs
 * of different bidegrees may be mixed, since homotopies shift one factor.
 */
template <class A, class B>
struct TensorElement
{
   std::vector<std::pair<A, B>> pairs;

   TensorElement() = default;
   TensorElement(A a, B b) { add(std::move(a), std::move(b)); }

   void add(A a, B b)
   {
      if (!a.is_zero() && !b.is_zero())
         pairs.emplace_back(std::move(a), std::move(b));
   }
   bool empty() const { return pairs.empty(); }

   TensorElement &operator+=(const TensorElement &o)
   {
      pairs.insert(pairs.end(), o.pairs.begin(), o.pairs.end());
      return *this;
   }
   TensorElement &operator*=(const Rat &c)
   {
      if (c == 0)
         pairs.clear();
      for (auto &p : pairs)
         p.first *= c;
      return *this;
   }
   TensorElement &operator-=(const TensorElement &o)
   {
      TensorElement neg = o;
      neg *= Rat(-1);
      return *this += neg;
   }
   friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
   friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
   friend TensorElement operator*(TensorElement a, const Rat &c) { return a *= c; }
};

/** Degree of the first pair (the element is assumed homogeneous), 0 when empty. */
template <class A, class B>
int complex_degree(const TensorElement<A, B> &t)
{
   if (t.pairs.empty())
      return 0;
   return complex_degree(t.pairs.front().first) + complex_degree(t.pairs.front().second);
}

/** d(u (x) v) = du (x) v + (-1)^{deg u} u (x) dv. */
template <class A, class B>
TensorElement<A, B> d_tensor(const TensorElement<A, B> &t)
{
   TensorElement<A, B> out;
   for (const auto &[u, v] : t.pairs)
   {
      out.add(coboundary(u), v);
      A su = u;
      if (complex_degree(u) % 2)
         su *= Rat(-1);
      out.add(std::move(su), coboundary(v));
   }
   return out;
}

template <class A, class B>
TensorElement<A, B> coboundary(const TensorElement<A, B> &t)
{
   return d_tensor(t);
}

/** Product chart (n1+n2, k1+k2) with the given cap. */
Chart product_chart(const Chart &c1, const Chart &c2, int cap);

/** Relabels a polynomial of chart a into the product ring, x shifted by xoff and y by yoff. */
Poly relabel(const Poly &p, const Chart &from, const Chart &to, int xoff, int yoff);

/** p1^# w1 ^ p2^# w2 on the product chart. */
FormalForm psi(const FormalForm &w1, const FormalForm &w2, int cap);
FormalForm psi(const TensorElement<FormalForm, FormalForm> &t, const Chart &product);

/** Inverse of psi: monomial-by-monomial split into factor charts c1, c2. */
TensorElement<FormalForm, FormalForm> psi_inverse(const FormalForm &w, const Chart &c1,
                                                 const Chart &c2);

/**
 * Sign exponent of the product of currents: a = t2 k1 + n2 r1 + n2 t1 + r2 k1
 * + n1 r2 + r1 t2 + t1 t2, where r_i is the form degree and t_i the number of
 * x-factors of the complementary form index.
 */
int boxtimes_exponent(int n1, int k1, int r1, int t1, int n2, int k2, int r2, int t2);
Sign boxtimes_sign(const BiIndex &dual1, const BiIndex &dual2);

DensityCurrent boxtimes(const DensityCurrent &e1, const DensityCurrent &e2, int cap);
DeltaCurrent boxtimes(const DeltaCurrent &e1, const DeltaCurrent &e2, int cap);
DensityCurrent boxtimes(const TensorElement<DensityCurrent, DensityCurrent> &t,
                        const Chart &product);

TensorElement<DensityCurrent, DensityCurrent> boxtimes_inverse(const DensityCurrent &e,
                                                               const Chart &c1, const Chart &c2);

} // namespace fdr

#endif
