#ifndef FDR_GENERALIZED_HPP
#define FDR_GENERALIZED_HPP

#include "fdr/currents.hpp"

#include <map>

namespace fdr {

/** Point functional on densities: tau -> L! (d^alpha tau_{O,L})(point) eps(P, O), O = complement of P. */
struct SingularKey
{
   BiIndex form_index;
   std::vector<Rat> point;
   Exp alpha;
   Exp L;

   bool operator<(const SingularKey &o) const;
   bool operator==(const SingularKey &o) const;
};

/**
 * Generalized function of degree r: a functional on densities pairing with
 * r-forms, written as a regular form part plus finitely many point terms.
 * Point terms evaluate piecewise polynomials right-continuously.
 */
class GenFunction
{
public:
   using Singular = std::map<SingularKey, Rat>;

   GenFunction() = default;
   GenFunction(const Chart &chart, int r);
   static GenFunction regular_part(const FormalForm &w);

   const Chart &chart() const { return chart_; }
   int degree() const { return r_; }
   const FormalForm &regular() const { return regular_; }
   const Singular &singular() const { return singular_; }
   bool is_zero() const { return regular_.is_zero() && singular_.empty(); }

   void add_regular(const FormalForm &w);
   void add_singular(const SingularKey &key, const Rat &c);

   GenFunction &operator+=(const GenFunction &o);
   GenFunction &operator-=(const GenFunction &o);
   GenFunction &operator*=(const Rat &c);
   friend GenFunction operator+(GenFunction a, const GenFunction &b) { return a += b; }
   friend GenFunction operator-(GenFunction a, const GenFunction &b) { return a -= b; }
   friend GenFunction operator*(GenFunction a, const Rat &c) { return a *= c; }
   bool operator==(const GenFunction &o) const;

private:
   Chart chart_;
   int r_ = 0;
   FormalForm regular_;
   Singular singular_;
};

/** T(eta) for a density eta of the same degree. */
Rat apply(const GenFunction &T, const DensityCurrent &eta);

/** Coboundary of the transposed density complex: <dT, v> = (-1)^r <T, dv>. */
GenFunction d_generalized(const GenFunction &T);

/** Value of a density coefficient, summed over terms with exponent L, at a point after d^alpha. */
Rat eval_density(const DensityCoeff &tau, const Exp &L, const Exp &alpha,
                 const std::vector<Rat> &point);

} // namespace fdr

#endif
