#ifndef FDR_FORMS_HPP
#define FDR_FORMS_HPP

#include "fdr/formal.hpp"
#include "fdr/index.hpp"

#include <map>
#include <vector>

namespace fdr {

/** Coordinate patch (R^n)^(k) with y-truncation cap. */
struct Chart
{
   int n = 0;
   int k = 0;
   int cap = 4;

   int dim() const { return n + k; }
   bool operator==(const Chart &o) const = default;
};

/**
 * Differential form of degree r: sum of f_{I,J} dx_I dy_J with coefficients
 * polynomials in x_1..x_n, y_1..y_k. A term is kept only while its weight
 * (y-degree of the monomial plus |J|) is at most chart.cap; this makes the
 * truncation an ideal stable under d, wedge and pullback.
 */
class FormalForm
{
public:
   using Terms = std::map<BiIndex, Poly>;

   FormalForm() = default;
   FormalForm(const Chart &chart, int r);

   static FormalForm function(const Chart &chart, const Poly &f);
   static FormalForm monomial(const Chart &chart, const BiIndex &bi, const Poly &f);

   const Chart &chart() const { return chart_; }
   int degree() const { return r_; }
   const Terms &terms() const { return terms_; }
   bool is_zero() const { return terms_.empty(); }
   bool truncated() const { return truncated_; }

   /** Adds f dx_I dy_J, dropping monomials above the weight cap. */
   void add(const BiIndex &bi, const Poly &f);
   FormalFunction coeff(const BiIndex &bi) const;
   Poly coeff_poly(const BiIndex &bi) const;

   FormalForm &operator+=(const FormalForm &o);
   FormalForm &operator-=(const FormalForm &o);
   FormalForm &operator*=(const Rat &c);
   FormalForm operator-() const;
   friend FormalForm operator+(FormalForm a, const FormalForm &b) { return a += b; }
   friend FormalForm operator-(FormalForm a, const FormalForm &b) { return a -= b; }
   friend FormalForm operator*(FormalForm a, const Rat &c) { return a *= c; }
   friend FormalForm operator*(const Rat &c, FormalForm a) { return a *= c; }

   /** Value equality (chart, degree, terms); the truncation flag is ignored. */
   bool operator==(const FormalForm &o) const;

private:
   void check_same(const FormalForm &o) const;

   Chart chart_;
   int r_ = 0;
   Terms terms_;
   bool truncated_ = false;
};

int form_weight(const Exp &e, const BiIndex &bi, int n);

FormalForm d(const FormalForm &w);
FormalForm wedge(const FormalForm &a, const FormalForm &b);

/** A derivation sum_i a_i d/dx_i + sum_j b_j d/dy_j; coeffs has length n+k. */
struct Derivation
{
   std::vector<Poly> coeffs;

   static Derivation basis(const Chart &chart, Axis which);
};

/** Alternating multilinear evaluation (determinant convention). */
FormalFunction eval_on_derivations(const FormalForm &w, const std::vector<Derivation> &fields);

/**
 * Map of charts given by pulled-back coordinates: x_images[i] and y_images[j]
 * are polynomials on the source chart. y-images must have y-order at least 1.
 */
struct ChartMorphism
{
   Chart source;
   Chart target;
   std::vector<Poly> x_images;
   std::vector<Poly> y_images;

   static ChartMorphism identity(const Chart &chart);
};

Poly pullback_function(const ChartMorphism &phi, const Poly &f);
FormalForm pullback(const ChartMorphism &phi, const FormalForm &w);

} // namespace fdr

#endif
