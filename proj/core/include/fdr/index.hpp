#ifndef FDR_INDEX_HPP
#define FDR_INDEX_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace fdr {

/** -1, 0 or +1. Zero marks a degenerate (repeated index) configuration. */
using Sign = int;

/**
 * Strictly increasing tuple of 1-based indices bounded by an ambient dimension.
 */
class MultiIndex
{
public:
   MultiIndex() = default;
   MultiIndex(std::vector<int> entries, int ambient);

   const std::vector<int> &entries() const { return entries_; }
   int ambient() const { return ambient_; }
   int size() const { return static_cast<int>(entries_.size()); }
   bool empty() const { return entries_.empty(); }
   bool contains(int i) const;
   int max() const { return entries_.empty() ? 0 : entries_.back(); }

   /** Entries of {1..ambient} not in this index. */
   MultiIndex complement() const;
   MultiIndex without(int i) const;

   bool operator==(const MultiIndex &o) const { return entries_ == o.entries_; }
   auto operator<=>(const MultiIndex &o) const { return entries_ <=> o.entries_; }

private:
   std::vector<int> entries_;
   int ambient_ = 0;
};

/**
 * Element (I,J) of the index set of bidegree |I|+|J|. I lives in {1..n}, J in {1..k}.
 * Ordering: bidegree, then |J|, then I, then J (matches enumerate_bi).
 */
class BiIndex
{
public:
   BiIndex() = default;
   BiIndex(MultiIndex x, MultiIndex y) : x_(std::move(x)), y_(std::move(y)) {}
   BiIndex(int n, int k, std::vector<int> x, std::vector<int> y)
      : x_(std::move(x), n), y_(std::move(y), k) {}

   const MultiIndex &xpart() const { return x_; }
   const MultiIndex &ypart() const { return y_; }
   int n() const { return x_.ambient(); }
   int k() const { return y_.ambient(); }
   int degree() const { return x_.size() + y_.size(); }

   BiIndex complement() const { return BiIndex(x_.complement(), y_.complement()); }

   bool operator==(const BiIndex &o) const { return x_ == o.x_ && y_ == o.y_; }
   std::strong_ordering operator<=>(const BiIndex &o) const;

private:
   MultiIndex x_;
   MultiIndex y_;
};

std::vector<BiIndex> enumerate_bi(int n, int k, int r);

/** (i1, offset + i2). Throws DegenerateIndex when max(i1) > offset. */
MultiIndex shift_concat(const MultiIndex &i1, const MultiIndex &i2, int offset);

/**
 * Sign s with dx_a dy_a ^ dx_b dy_b = s * dx_1..dx_n dy_1..dy_k, or 0 when the
 * two indices overlap or fail to cover.
 */
Sign epsilon_sign(const BiIndex &a, const BiIndex &b, int n, int k);

/** Sign and sorted union of the wedge of two basis monomials; sign 0 on collision. */
std::pair<Sign, BiIndex> merge_sign(const BiIndex &a, const BiIndex &b);

/**
 * Basis bijection for the product chart: ((I1, n1+I2), (J1, k1+J2)) with sign
 * (-1)^{|J1| |I2|}. r must equal the sum of the bidegrees.
 */
std::pair<Sign, BiIndex> kunneth_reindex(int r, const BiIndex &bi1, const BiIndex &bi2);

/** Inverse of kunneth_reindex: splits an index of the product chart. */
std::pair<Sign, std::pair<BiIndex, BiIndex>> kunneth_split(const BiIndex &bi, int n1, int k1);

/** Parity of the number of inversions of a sequence; 0 if any value repeats. */
Sign permutation_sign(const std::vector<int> &seq);

/** e.g. "dx1^dx3^dy2", or "dxs1^dys2" when dual. Empty string for the empty index. */
std::string to_string(const BiIndex &bi, bool dual = false);

} // namespace fdr

#endif
