#ifndef FDR_CURRENTS_HPP
#define FDR_CURRENTS_HPP

#include "fdr/density.hpp"
#include "fdr/forms.hpp"

#include <functional>
#include <map>

namespace fdr {

/**
 * Compactly supported formal density pairing with r-forms: a sum of
 * tau_{I,J} dx*_I dy*_J over dual indices of bidegree n+k-r. Terms whose dual
 * weight |L| + k - |J| exceeds chart.cap are dropped, mirroring forms.
 */
class DensityCurrent
{
public:
   using Terms = std::map<BiIndex, DensityCoeff>;

   DensityCurrent() = default;
   DensityCurrent(const Chart &chart, int r);

   static DensityCurrent basis(const Chart &chart, const BiIndex &dual, const DensityCoeff &tau);

   const Chart &chart() const { return chart_; }
   /** Degree of the forms this current pairs with. */
   int degree() const { return r_; }
   const Terms &terms() const { return terms_; }
   bool is_zero() const { return terms_.empty(); }
   bool truncated() const { return truncated_; }

   void add(const BiIndex &dual, const DensityCoeff &tau);
   DensityCoeff coeff(const BiIndex &dual) const;

   DensityCurrent &operator+=(const DensityCurrent &o);
   DensityCurrent &operator-=(const DensityCurrent &o);
   DensityCurrent &operator*=(const Rat &c);
   friend DensityCurrent operator+(DensityCurrent a, const DensityCurrent &b) { return a += b; }
   friend DensityCurrent operator-(DensityCurrent a, const DensityCurrent &b) { return a -= b; }
   friend DensityCurrent operator*(DensityCurrent a, const Rat &c) { return a *= c; }
   bool operator==(const DensityCurrent &o) const;

private:
   void check_same(const DensityCurrent &o) const;

   Chart chart_;
   int r_ = 0;
   Terms terms_;
   bool truncated_ = false;
};

/** One derivative-of-Dirac functional: f dx_{I'} dy_{J'} -> L! (d^alpha f_L)(point) eps. */
struct DeltaKey
{
   BiIndex dual;
   std::vector<Rat> point;
   Exp alpha;
   Exp L;

   bool operator<(const DeltaKey &o) const;
   bool operator==(const DeltaKey &o) const;
};

/** Finite combination of derivative-of-Dirac functionals on r-forms, in normal form. */
class DeltaCurrent
{
public:
   using Terms = std::map<DeltaKey, Rat>;

   DeltaCurrent() = default;
   DeltaCurrent(const Chart &chart, int r);

   const Chart &chart() const { return chart_; }
   int degree() const { return r_; }
   const Terms &terms() const { return terms_; }
   bool is_zero() const { return terms_.empty(); }
   bool truncated() const { return truncated_; }

   void add(const DeltaKey &key, const Rat &c);

   DeltaCurrent &operator+=(const DeltaCurrent &o);
   DeltaCurrent &operator-=(const DeltaCurrent &o);
   DeltaCurrent &operator*=(const Rat &c);
   friend DeltaCurrent operator+(DeltaCurrent a, const DeltaCurrent &b) { return a += b; }
   friend DeltaCurrent operator-(DeltaCurrent a, const DeltaCurrent &b) { return a -= b; }
   friend DeltaCurrent operator*(DeltaCurrent a, const Rat &c) { return a *= c; }
   bool operator==(const DeltaCurrent &o) const;

private:
   void check_same(const DeltaCurrent &o) const;

   Chart chart_;
   int r_ = 0;
   Terms terms_;
   bool truncated_ = false;
};

int dual_weight(const Exp &L, const BiIndex &dual);

Rat pair(const FormalForm &w, const DensityCurrent &eta);
Rat pair(const FormalForm &w, const DeltaCurrent &eta);

/**
 * Sign attached to the term produced from dual index `dual` along `axis` by
 * the transpose of d: (-1)^R eps(O',O) merge(axis, O' - axis) eps(O' - axis, N)
 * with R = n+k-|O|, O' the complement and N = O + axis. Zero when axis is in O.
 */
Sign dual_coboundary_sign(const BiIndex &dual, Axis axis);

/** Dual index with one more factor; requires the axis to be absent. */
BiIndex insert_axis(const BiIndex &dual, Axis axis);

/** d: D(Omega^{r}) -> D(Omega^{r-1}), the transpose of d with the graded sign. */
DensityCurrent d_density(const DensityCurrent &eta);
DeltaCurrent d_distribution(const DeltaCurrent &eta);

/** Integral of the y*-constant part of the top coefficient; eta must pair with 0-forms. */
Rat zeta(const DensityCurrent &eta);

/** A linear functional on r-forms. */
struct Functional
{
   Chart chart;
   int r = 0;
   std::function<Rat(const FormalForm &)> apply;

   Rat operator()(const FormalForm &w) const { return apply(w); }
};

Functional embed(const DensityCurrent &eta);
Functional embed(const DeltaCurrent &eta);

/** Monomial forms x^b y^M dx_I dy_J of degree r with |b| <= cap_x and weight <= cap. */
std::vector<FormalForm> monomial_battery(const Chart &chart, int r, int cap_x);

/** True when both functionals agree on the whole battery of their degree. */
bool agree_on_battery(const Functional &a, const Functional &b, int cap_x);

/** Densities over R^0 and deltas over R^0 are the same thing. */
DeltaCurrent as_delta(const DensityCurrent &eta);
DensityCurrent as_density(const DeltaCurrent &eta);

} // namespace fdr

#endif
