#ifndef FDR_COMPLEXES_HPP
#define FDR_COMPLEXES_HPP

#include "fdr/homotopy.hpp"
#include "fdr/matrix.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace fdr {

/**
 * Finite cochain complex over Q occupying degrees lo .. lo + size() - 1.
 * d[i] maps degree lo+i to lo+i+1 (dims[i+1] rows, dims[i] columns); the
 * last entry maps into the zero space.
 */
struct FiniteComplex
{
   int lo = 0;
   std::vector<std::vector<std::string>> labels;
   std::vector<RatMatrix> d;

   int size() const { return static_cast<int>(labels.size()); }
   int hi() const { return lo + size() - 1; }
   /** Dimension in a degree, 0 outside the range. */
   int dim(int degree) const;
   /** Coboundary leaving a degree (a zero matrix of the right shape outside the range). */
   RatMatrix coboundary(int degree) const;

   /** Throws ShapeMismatch when consecutive matrices do not chain. */
   void validate() const;
   bool d_squared_zero() const;
};

/** Monomial basis of truncated forms: |b| + |I| <= cap_x and |M| + |J| <= chart.cap. */
class FormBasis
{
public:
   FormBasis(const Chart &chart, int cap_x);

   const Chart &chart() const { return chart_; }
   int cap_x() const { return cap_x_; }
   const std::vector<FormalForm> &elements(int r) const { return elems_.at(r); }
   const std::vector<std::string> &labels(int r) const { return labels_.at(r); }
   /** Coordinates of w; RepresentationOverflow if w leaves the span. */
   std::vector<Rat> coords(const FormalForm &w) const;

private:
   Chart chart_;
   int cap_x_;
   std::vector<std::vector<FormalForm>> elems_;
   std::vector<std::vector<std::string>> labels_;
   std::vector<std::map<std::pair<BiIndex, Exp>, int>> index_;
};

/**
 * Spline basis of densities on the window [0, W]^n: along an axis carrying
 * dx*_i the quadratic B-splines with integer knots, otherwise the cubic ones;
 * y*-monomials up to the dual weight cap.
 */
class DensityBasis
{
public:
   DensityBasis(const Chart &chart, int window);

   const Chart &chart() const { return chart_; }
   int window() const { return window_; }
   /** Elements pairing with r-forms. */
   const std::vector<DensityCurrent> &elements(int r) const { return elems_.at(r); }
   const std::vector<std::string> &labels(int r) const { return labels_.at(r); }
   std::vector<Rat> coords(const DensityCurrent &e) const;

private:
   struct Key
   {
      BiIndex dual;
      std::vector<int> splines;
      Exp L;
      auto operator<=>(const Key &) const = default;
   };

   Chart chart_;
   int window_;
   struct Cache
   {
      std::mutex lock;
      std::map<std::pair<int, PwPoly>, std::optional<std::vector<Rat>>> coords;
   };

   const std::optional<std::vector<Rat>> &axis_coords(int degree, const PwPoly &f) const;

   std::vector<std::vector<DensityCurrent>> elems_;
   std::vector<std::vector<std::string>> labels_;
   std::vector<std::map<Key, int>> index_;
   std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/** Coordinates of f in the integer-knot B-splines of the given degree on [0, W]; nullopt outside. */
std::optional<std::vector<Rat>> spline_coords(const PwPoly &f, int degree, int window);

/**
 * Truncated de Rham complex of a chart. Forms sit in degrees 0..n+k and, when
 * augmented, Q in degree -1 via epsilon. Densities sit in degrees -(n+k)..0
 * and, when augmented, Q in degree 1 via zeta. Distributions and generalized
 * functions are the transposes of these.
 */
FiniteComplex assemble(int n, int k, int cap_x, int cap_y, ComplexKind kind, bool augmented,
                       int window = 5);

/** Betti numbers, one per degree from lo. */
std::vector<int> betti(const FiniteComplex &c);

/** Degrees negated; the matrix at degree i is (-1)^i times the transpose of d at -i-1. */
FiniteComplex transpose(const FiniteComplex &c);

/** h[i] maps degree lo+i to lo+i-1 (dims[i-1] rows); h[0] has no rows. */
using HomotopyMatrices = std::vector<RatMatrix>;

/** Homotopy of the transposed complex: (-1)^(j-1) h^T from the degree 1-j slot. */
HomotopyMatrices transpose(const FiniteComplex &c, const HomotopyMatrices &h);

/** Matrices of a contraction on the assembled (augmented) forms complex. */
HomotopyMatrices homotopy_matrices(const Contraction<FormalForm> &c, int cap_x, bool augmented);
/** Matrices of a contraction on the assembled (augmented) spline density complex. */
HomotopyMatrices homotopy_matrices(const Contraction<DensityCurrent> &c, int window,
                                   bool augmented);

struct CertifyReport
{
   bool ok = true;
   int degree = 0;
   /** "dh+hd" or "dhd". */
   std::string failure;
   std::vector<Rat> witness;
   std::string witness_label;
};

/**
 * Checks d h + h d = id - P and d h d = d in every degree, where P is the
 * optional projector per degree (empty: P = 0, as for augmented complexes).
 */
CertifyReport certify_strong_exactness(const FiniteComplex &c, const HomotopyMatrices &h,
                                       const std::vector<RatMatrix> &projector = {});

} // namespace fdr

#endif
