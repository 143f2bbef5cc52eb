#ifndef FDR_FORMAL_HPP
#define FDR_FORMAL_HPP

#include "fdr/poly.hpp"

#include <map>
#include <string>

namespace fdr {

/** Polynomial in x_1..x_n only. */
using XPoly = Poly;

/** Partial-derivative direction: x_i or y_j, 1-based. */
struct Axis
{
   enum Kind { X, Y };
   Kind kind;
   int index;

   static Axis x(int i) { return {X, i}; }
   static Axis y(int j) { return {Y, j}; }
};

/**
 * Element of Q[x_1..x_n][y_1..y_k] with y-degree at most cap. Stored as one
 * polynomial in n+k variables, x first. The truncation flag is sticky and
 * records that some nonzero term was discarded on the way here.
 */
class FormalFunction
{
public:
   FormalFunction() = default;
   FormalFunction(int n, int k, int cap);
   /** Truncates p at cap, raising the flag if anything nonzero is dropped. */
   FormalFunction(int n, int k, int cap, const Poly &p);

   static FormalFunction constant(int n, int k, int cap, const Rat &c);

   int n() const { return n_; }
   int k() const { return k_; }
   int cap() const { return cap_; }
   const Poly &poly() const { return p_; }
   bool truncated() const { return truncated_; }
   bool is_zero() const { return p_.is_zero(); }
   void mark_truncated() { truncated_ = true; }

   /** Coefficient f_L of y^L, as a polynomial in x. */
   XPoly y_coeff(const Exp &L) const;
   std::map<Exp, XPoly> y_expansion() const;

   FormalFunction &operator+=(const FormalFunction &o);
   FormalFunction &operator-=(const FormalFunction &o);
   FormalFunction &operator*=(const Rat &c);
   friend FormalFunction operator+(FormalFunction a, const FormalFunction &b) { return a += b; }
   friend FormalFunction operator-(FormalFunction a, const FormalFunction &b) { return a -= b; }
   friend FormalFunction operator*(FormalFunction a, const Rat &c) { return a *= c; }

   /** Value equality; the truncation flag is ignored. */
   bool operator==(const FormalFunction &o) const;

private:
   void check_same(const FormalFunction &o) const;

   int n_ = 0, k_ = 0, cap_ = 0;
   Poly p_;
   bool truncated_ = false;
};

/** Product truncated at cap; flag set iff a discarded cross term is nonzero. */
FormalFunction ff_mul(const FormalFunction &a, const FormalFunction &b);
FormalFunction ff_partial(const FormalFunction &f, Axis which);

/** Truncates p to y-degree at most cap (cap < 0 drops everything). */
Poly truncate_y(const Poly &p, int n, int k, int cap, bool &dropped);

/** Names x1..xn, y1..yk for polynomials in n+k variables. */
std::string xy_name(int n, int var);

} // namespace fdr

#endif
