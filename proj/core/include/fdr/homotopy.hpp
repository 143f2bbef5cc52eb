#ifndef FDR_HOMOTOPY_HPP
#define FDR_HOMOTOPY_HPP

#include "fdr/kunneth.hpp"

#include <functional>
#include <string>

namespace fdr {

enum class ComplexKind { Forms, Densities, Distributions, Generalized, Tensor };

std::string to_string(ComplexKind kind);

/**
 * Contraction data for an augmented complex: augment_in (epsilon or alpha)
 * from scalars into degree 0, augment_out (g or zeta) back to scalars, and a
 * degree -1 homotopy h with d h + h d = id - in(out(.)) on degree 0 and
 * d h + h d = id elsewhere. Degrees are complex degrees (currents sit at -r).
 */
template <class V>
struct Contraction
{
   ComplexKind kind = ComplexKind::Forms;
   Chart chart;
   std::function<V(const Rat &)> augment_in;
   std::function<Rat(const V &)> augment_out;
   std::function<V(const V &)> h;
   std::function<V(const V &)> d;
};

/** d h x + h d x - x + in(out(x)) (the last term only in complex degree 0). */
template <class V>
V homotopy_defect(const Contraction<V> &c, const V &x)
{
   V lhs = c.d(c.h(x)) + c.h(c.d(x));
   V rhs = x;
   if (complex_degree(x) == 0)
      rhs -= c.augment_in(c.augment_out(x));
   return lhs - rhs;
}

Contraction<FormalForm> contract_radial_x(int n, int cap);
Contraction<FormalForm> contract_formal_y(int k, int cap);
/** Chart contraction built as the tensor of the radial and formal ones, conjugated by psi. */
Contraction<FormalForm> contract_forms(const Chart &chart);

/** Contraction of the one-axis density complex on (R^1)^(0) with the given bump. */
Contraction<DensityCurrent> contract_density_axis(const PwPoly &bump, int cap);
/**
 * Density contraction on (R^n)^(k): one-axis contractions tensored together with
 * the transposed formal-y contraction. bumps may be empty (default bump on
 * every axis) or give one unit-integral bump per axis.
 */
Contraction<DensityCurrent> contract_density(int n, int k, const std::vector<PwPoly> &bumps,
                                             int cap);

/** Distribution complex: transpose of a forms contraction whose h preserves bi-weight. */
Contraction<DeltaCurrent> transpose_contraction(const Contraction<FormalForm> &c);
/** Generalized-function complex: transpose of a density contraction. */
Contraction<GenFunction> transpose_contraction(const Contraction<DensityCurrent> &c);

/** h_AB = h_A (x) id + (in_A out_A) (x) h_B with Koszul signs. */
template <class A, class B>
Contraction<TensorElement<A, B>> tensor_contraction(const Contraction<A> &ca,
                                                    const Contraction<B> &cb)
{
   using T = TensorElement<A, B>;
   Contraction<T> c;
   c.kind = ComplexKind::Tensor;
   c.chart = product_chart(ca.chart, cb.chart, ca.chart.cap);
   c.d = [](const T &t) { return d_tensor(t); };
   c.augment_in = [ca, cb](const Rat &l) { return T(ca.augment_in(1), cb.augment_in(l)); };
   c.augment_out = [ca, cb](const T &t) {
      Rat s = 0;
      for (const auto &[u, v] : t.pairs)
         if (complex_degree(u) == 0 && complex_degree(v) == 0)
            s += ca.augment_out(u) * cb.augment_out(v);
      return s;
   };
   c.h = [ca, cb](const T &t) {
      T out;
      for (const auto &[u, v] : t.pairs)
      {
         out.add(ca.h(u), v);
         if (complex_degree(u) == 0)
         {
            Rat gu = ca.augment_out(u);
            if (gu != 0)
               out.add(ca.augment_in(gu), cb.h(v));
         }
      }
      return out;
   };
   return c;
}

/** Product-chart contraction: the tensor contraction transported along psi. */
Contraction<FormalForm> product_contraction(const Contraction<FormalForm> &ca,
                                            const Contraction<FormalForm> &cb);
/** Product-chart contraction transported along the product of densities. */
Contraction<DensityCurrent> product_contraction(const Contraction<DensityCurrent> &ca,
                                                const Contraction<DensityCurrent> &cb);

} // namespace fdr

#endif
