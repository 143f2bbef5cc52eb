#ifndef FDR_POLY_HPP
#define FDR_POLY_HPP

#include "fdr/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fdr {

using Exp = std::vector<int>;

int exp_degree(const Exp &e);
int exp_degree(const Exp &e, int from, int to);

/** All exponent tuples of length nvars with total degree at most maxdeg. */
std::vector<Exp> exponents_up_to(int nvars, int maxdeg);
/** All exponent tuples of length nvars with total degree exactly deg. */
std::vector<Exp> exponents_of_degree(int nvars, int deg);

/**
 * Sparse multivariate polynomial with rational coefficients in a fixed number
 * of variables. No zero coefficients are stored.
 */
class Poly
{
public:
   using Terms = std::map<Exp, Rat>;

   Poly() = default;
   explicit Poly(int nvars) : nvars_(nvars) {}

   static Poly constant(int nvars, const Rat &c);
   static Poly monomial(int nvars, const Exp &e, const Rat &c = 1);
   static Poly variable(int nvars, int var);

   int nvars() const { return nvars_; }
   const Terms &terms() const { return terms_; }
   bool is_zero() const { return terms_.empty(); }
   std::size_t size() const { return terms_.size(); }

   Rat coeff(const Exp &e) const;
   Rat constant_term() const;
   void add_term(const Exp &e, const Rat &c);

   Poly &operator+=(const Poly &o);
   Poly &operator-=(const Poly &o);
   Poly &operator*=(const Rat &c);
   Poly operator-() const;

   friend Poly operator+(Poly a, const Poly &b) { return a += b; }
   friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
   friend Poly operator*(Poly a, const Rat &c) { return a *= c; }
   friend Poly operator*(const Rat &c, Poly a) { return a *= c; }
   friend Poly operator*(const Poly &a, const Poly &b);
   bool operator==(const Poly &o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

   Poly partial(int var) const;
   Rat eval(const std::vector<Rat> &point) const;

   /** Composition: variable i replaced by images[i]; all images share one ring. */
   Poly substitute(const std::vector<Poly> &images) const;
   Poly pow(int e) const;

   /** Keeps the terms selected by keep. */
   Poly filter(const std::function<bool(const Exp &)> &keep) const;

   /** Embeds into a ring with more variables, placing ours at offset. */
   Poly embed(int nvars, int offset) const;

   int total_degree() const;
   int degree_in(int var) const;

private:
   int nvars_ = 0;
   Terms terms_;
};

/** Variable names are produced by name(i) for 0-based i. */
std::string to_string(const Poly &p, const std::function<std::string(int)> &name);

/** Ordering used when printing: total degree descending, then exponent descending. */
bool print_order_less(const Exp &a, const Exp &b);

} // namespace fdr

#endif
