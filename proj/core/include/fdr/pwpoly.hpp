#ifndef FDR_PWPOLY_HPP
#define FDR_PWPOLY_HPP

#include "fdr/rational.hpp"

#include <climits>
#include <string>
#include <vector>

namespace fdr {

/** Dense univariate polynomial, c[i] the coefficient of x^i, trailing zeros trimmed. */
class UPoly
{
public:
   UPoly() = default;
   explicit UPoly(std::vector<Rat> coeffs);
   static UPoly constant(const Rat &c) { return UPoly({c}); }
   static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

   const std::vector<Rat> &coeffs() const { return c_; }
   int degree() const { return static_cast<int>(c_.size()) - 1; }
   bool is_zero() const { return c_.empty(); }
   Rat coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }

   Rat eval(const Rat &a) const;
   UPoly derivative() const;
   /** Antiderivative vanishing at 0. */
   UPoly antiderivative() const;

   UPoly &operator+=(const UPoly &o);
   UPoly &operator-=(const UPoly &o);
   UPoly &operator*=(const Rat &s);
   friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
   friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
   friend UPoly operator*(UPoly a, const Rat &s) { return a *= s; }
   friend UPoly operator*(const UPoly &a, const UPoly &b);
   bool operator==(const UPoly &o) const { return c_ == o.c_; }

private:
   void trim();
   std::vector<Rat> c_;
};

/**
 * Compactly supported piecewise polynomial: pieces[j] lives on [b_j, b_{j+1}),
 * zero outside [b_0, b_m). Normalized on construction: adjacent equal pieces
 * merged, zero end pieces trimmed. The zero function has no breakpoints.
 */
class PwPoly
{
public:
   static constexpr int kSmooth = INT_MAX;

   PwPoly() = default;
   PwPoly(std::vector<Rat> breaks, std::vector<UPoly> pieces);

   static PwPoly indicator(const Rat &a, const Rat &b);
   /** Uniform B-spline of the given degree with knots left, left+h, ..., left+(degree+1)h. */
   static PwPoly bspline(int degree, const Rat &left, const Rat &h = 1);
   /** Quadratic B-spline on [0,3], unit integral. */
   static PwPoly default_bump();
   /** Pieces x and 2-x on [0,2]. */
   static PwPoly triangle();

   const std::vector<Rat> &breaks() const { return breaks_; }
   const std::vector<UPoly> &pieces() const { return pieces_; }
   bool is_zero() const { return pieces_.empty(); }
   /** Highest verified continuity order, -1 if discontinuous, kSmooth for zero. */
   int smoothness() const { return smooth_; }
   int max_degree() const;

   /** Right-continuous evaluation. */
   Rat eval(const Rat &a) const;
   /** Pointwise derivative of each piece (jumps are not seen). */
   PwPoly derivative() const;
   Rat integral() const;
   /** Integral of x^e times this function. */
   Rat moment(int e) const;
   Rat integral_against(const UPoly &w) const;

   /** Same function on a refined breakpoint grid (grid must contain our breakpoints). */
   std::vector<UPoly> pieces_on(const std::vector<Rat> &grid) const;

   PwPoly &operator+=(const PwPoly &o);
   PwPoly &operator-=(const PwPoly &o);
   PwPoly &operator*=(const Rat &s);
   friend PwPoly operator+(PwPoly a, const PwPoly &b) { return a += b; }
   friend PwPoly operator-(PwPoly a, const PwPoly &b) { return a -= b; }
   friend PwPoly operator*(PwPoly a, const Rat &s) { return a *= s; }
   friend PwPoly operator*(const PwPoly &a, const PwPoly &b);
   PwPoly mul(const UPoly &w) const;
   bool operator==(const PwPoly &o) const { return breaks_ == o.breaks_ && pieces_ == o.pieces_; }
   bool operator<(const PwPoly &o) const;

private:
   void normalize();
   void compute_smoothness();

   std::vector<Rat> breaks_;
   std::vector<UPoly> pieces_;
   int smooth_ = kSmooth;
};

std::vector<Rat> merge_grids(const std::vector<Rat> &a, const std::vector<Rat> &b);

/** a -> integral of f over (-inf, a]: core on [b_0, b_m), plus tail for a >= b_m. */
struct PwAntideriv
{
   PwPoly core;
   Rat tail;
   Rat end;

   Rat eval(const Rat &a) const;
};

PwAntideriv pw_antideriv(const PwPoly &f);

/** (f1 * f2)(a) = int f1 * int_{-inf}^a f2 - int f2 * int_{-inf}^a f1. */
PwPoly pw_star(const PwPoly &f1, const PwPoly &f2);

/** "pw[(0,1,2);x;-x + 2]" style text, with the axis number after pw when axis > 0. */
std::string to_string(const PwPoly &f, int axis = 0);
std::string to_string(const UPoly &p, const std::string &var);

} // namespace fdr

#endif
