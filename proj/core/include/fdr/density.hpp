#ifndef FDR_DENSITY_HPP
#define FDR_DENSITY_HPP

#include "fdr/formal.hpp"
#include "fdr/pwpoly.hpp"

#include <vector>

namespace fdr {

/** c * f_1(x_1) * ... * f_n(x_n) * (y*)^L */
struct DensityTerm
{
   Rat c;
   std::vector<PwPoly> axes;
   Exp L;
};

/**
 * Finite sum of elementary tensors of per-axis piecewise polynomials with
 * y*-monomials. Kept as a simplified list; equality is decided by expanding
 * both sides onto a common grid.
 */
class DensityCoeff
{
public:
   DensityCoeff() = default;
   DensityCoeff(int n, int k) : n_(n), k_(k) {}

   static DensityCoeff term(const Rat &c, std::vector<PwPoly> axes, Exp L);

   int n() const { return n_; }
   int k() const { return k_; }
   const std::vector<DensityTerm> &terms() const { return terms_; }
   bool is_zero() const;

   void add(const DensityTerm &t);
   DensityCoeff &operator+=(const DensityCoeff &o);
   DensityCoeff &operator-=(const DensityCoeff &o);
   DensityCoeff &operator*=(const Rat &c);
   friend DensityCoeff operator+(DensityCoeff a, const DensityCoeff &b) { return a += b; }
   friend DensityCoeff operator-(DensityCoeff a, const DensityCoeff &b) { return a -= b; }
   friend DensityCoeff operator*(DensityCoeff a, const Rat &c) { return a *= c; }

   /** Pointwise derivative along x_i (1-based) of the axis factor. */
   DensityCoeff partial_x(int i) const;
   /** Multiplication by y_j^* (1-based). */
   DensityCoeff mul_ystar(int j) const;
   /** Keeps only terms whose y* degree passes keep. */
   DensityCoeff filter_L(const std::function<bool(const Exp &)> &keep) const;

   /** Integral over R^n of the y*-constant part. */
   Rat integral_L0() const;
   int max_ystar_degree() const;
   int max_x_degree() const;

   /** Exact equality as functions. */
   bool operator==(const DensityCoeff &o) const;

private:
   void check_same(const DensityCoeff &o) const;

   int n_ = 0, k_ = 0;
   std::vector<DensityTerm> terms_;
};

/** Sum over L of L! * integral of f_L tau_L over R^n. */
Rat integrate_density(const DensityCoeff &tau, const FormalFunction &f);
/** Same with the formal function given as its y expansion. */
Rat integrate_density(const DensityCoeff &tau, const std::map<Exp, XPoly> &fexp);

/** Outer product: axes and y* exponents concatenated. */
DensityCoeff density_tensor(const DensityCoeff &a, const DensityCoeff &b);

} // namespace fdr

#endif
