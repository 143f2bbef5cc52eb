#ifndef FDR_MATRIX_HPP
#define FDR_MATRIX_HPP

#include "fdr/rational.hpp"

#include <optional>
#include <vector>

namespace fdr {

/** Dense row-major rational matrix. */
class RatMatrix
{
public:
   RatMatrix() = default;
   RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

   static RatMatrix identity(int n);

   int rows() const { return rows_; }
   int cols() const { return cols_; }
   Rat &operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
   const Rat &operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

   bool is_zero() const;
   RatMatrix transposed() const;
   std::vector<Rat> column(int j) const;

   RatMatrix &operator+=(const RatMatrix &o);
   RatMatrix &operator-=(const RatMatrix &o);
   RatMatrix &operator*=(const Rat &c);
   friend RatMatrix operator+(RatMatrix a, const RatMatrix &b) { return a += b; }
   friend RatMatrix operator-(RatMatrix a, const RatMatrix &b) { return a -= b; }
   friend RatMatrix operator*(RatMatrix a, const Rat &c) { return a *= c; }
   friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
   bool operator==(const RatMatrix &o) const = default;

private:
   int rows_ = 0, cols_ = 0;
   std::vector<Rat> a_;
};

/**
 * Rank by fraction-free Bareiss elimination on the denominator-cleared integer
 * matrix, run separately on each connected block of the row/column incidence graph.
 */
int rank(const RatMatrix &m);

/** Inverse of a square matrix, or nullopt when singular. */
std::optional<RatMatrix> inverse(const RatMatrix &m);

/** Some x with m x = b, or nullopt when inconsistent. */
std::optional<std::vector<Rat>> solve(const RatMatrix &m, const std::vector<Rat> &b);

} // namespace fdr

#endif
