#include "fdr/index.hpp"
#include "fdr/errors.hpp"

#include <algorithm>

namespace fdr {

MultiIndex::MultiIndex(std::vector<int> entries, int ambient)
   : entries_(std::move(entries)), ambient_(ambient)
{
   for (std::size_t q = 0; q < entries_.size(); ++q)
   {
      if (entries_[q] < 1 || entries_[q] > ambient_)
         throw IndexOutOfChart("index " + std::to_string(entries_[q]) + " outside 1.."
                               + std::to_string(ambient_));
      if (q > 0 && entries_[q] <= entries_[q - 1])
         throw DegenerateIndex("multi-index entries must be strictly increasing");
   }
}

bool MultiIndex::contains(int i) const
{
   return std::binary_search(entries_.begin(), entries_.end(), i);
}

MultiIndex MultiIndex::complement() const
{
   std::vector<int> out;
   for (int i = 1; i <= ambient_; ++i)
      if (!contains(i))
         out.push_back(i);
   return MultiIndex(std::move(out), ambient_);
}

MultiIndex MultiIndex::without(int i) const
{
   std::vector<int> out;
   for (int e : entries_)
      if (e != i)
         out.push_back(e);
   return MultiIndex(std::move(out), ambient_);
}

std::strong_ordering BiIndex::operator<=>(const BiIndex &o) const
{
   if (auto c = degree() <=> o.degree(); c != 0)
      return c;
   if (auto c = y_.size() <=> o.y_.size(); c != 0)
      return c;
   if (auto c = x_ <=> o.x_; c != 0)
      return c;
   return y_ <=> o.y_;
}

namespace {

void subsets(int n, int s, int start, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
   if (static_cast<int>(cur.size()) == s)
   {
      out.push_back(cur);
      return;
   }
   for (int i = start; i <= n; ++i)
   {
      cur.push_back(i);
      subsets(n, s, i + 1, cur, out);
      cur.pop_back();
   }
}

std::vector<std::vector<int>> all_subsets(int n, int s)
{
   std::vector<std::vector<int>> out;
   if (s < 0 || s > n)
      return out;
   std::vector<int> cur;
   subsets(n, s, 1, cur, out);
   return out;
}

std::vector<int> positions(const BiIndex &a, int n)
{
   std::vector<int> seq = a.xpart().entries();
   for (int j : a.ypart().entries())
      seq.push_back(j + n);
   return seq;
}

} // namespace

std::vector<BiIndex> enumerate_bi(int n, int k, int r)
{
   std::vector<BiIndex> out;
   if (n < 0 || k < 0 || r < 0 || r > n + k)
      return out;
   for (int ys = 0; ys <= r; ++ys)
   {
      auto xs = all_subsets(n, r - ys);
      auto yss = all_subsets(k, ys);
      for (const auto &x : xs)
         for (const auto &y : yss)
            out.emplace_back(MultiIndex(x, n), MultiIndex(y, k));
   }
   return out;
}

MultiIndex shift_concat(const MultiIndex &i1, const MultiIndex &i2, int offset)
{
   if (i1.max() > offset)
      throw DegenerateIndex("shift_concat: max(i1) exceeds offset");
   std::vector<int> out = i1.entries();
   for (int e : i2.entries())
      out.push_back(e + offset);
   return MultiIndex(std::move(out), offset + i2.ambient());
}

Sign permutation_sign(const std::vector<int> &seq)
{
   int inv = 0;
   for (std::size_t p = 0; p < seq.size(); ++p)
      for (std::size_t q = p + 1; q < seq.size(); ++q)
      {
         if (seq[p] == seq[q])
            return 0;
         if (seq[p] > seq[q])
            ++inv;
      }
   return (inv % 2) ? -1 : 1;
}

Sign epsilon_sign(const BiIndex &a, const BiIndex &b, int n, int k)
{
   if (a.degree() + b.degree() != n + k)
      return 0;
   for (const BiIndex *p : {&a, &b})
      if (p->xpart().max() > n || p->ypart().max() > k)
         return 0;
   std::vector<int> seq = positions(a, n);
   auto tail = positions(b, n);
   seq.insert(seq.end(), tail.begin(), tail.end());
   return permutation_sign(seq);
}

std::pair<Sign, BiIndex> merge_sign(const BiIndex &a, const BiIndex &b)
{
   if (a.n() != b.n() || a.k() != b.k())
      throw DimensionMismatch("merge_sign: ambient mismatch");
   int n = a.n();
   std::vector<int> seq = positions(a, n);
   auto tail = positions(b, n);
   seq.insert(seq.end(), tail.begin(), tail.end());
   Sign s = permutation_sign(seq);
   if (s == 0)
      return {0, BiIndex()};
   std::vector<int> x = a.xpart().entries(), y = a.ypart().entries();
   x.insert(x.end(), b.xpart().entries().begin(), b.xpart().entries().end());
   y.insert(y.end(), b.ypart().entries().begin(), b.ypart().entries().end());
   std::sort(x.begin(), x.end());
   std::sort(y.begin(), y.end());
   return {s, BiIndex(MultiIndex(x, a.n()), MultiIndex(y, a.k()))};
}

std::pair<Sign, BiIndex> kunneth_reindex(int r, const BiIndex &bi1, const BiIndex &bi2)
{
   if (bi1.degree() + bi2.degree() != r)
      throw DegreeMismatch("kunneth_reindex: bidegrees do not sum to r");
   MultiIndex x = shift_concat(bi1.xpart(), bi2.xpart(), bi1.n());
   MultiIndex y = shift_concat(bi1.ypart(), bi2.ypart(), bi1.k());
   Sign s = ((bi1.ypart().size() * bi2.xpart().size()) % 2) ? -1 : 1;
   return {s, BiIndex(std::move(x), std::move(y))};
}

std::pair<Sign, std::pair<BiIndex, BiIndex>> kunneth_split(const BiIndex &bi, int n1, int k1)
{
   int n2 = bi.n() - n1, k2 = bi.k() - k1;
   if (n2 < 0 || k2 < 0)
      throw DimensionMismatch("kunneth_split: factor larger than product");
   std::vector<int> x1, x2, y1, y2;
   for (int i : bi.xpart().entries())
      (i <= n1 ? x1 : x2).push_back(i <= n1 ? i : i - n1);
   for (int j : bi.ypart().entries())
      (j <= k1 ? y1 : y2).push_back(j <= k1 ? j : j - k1);
   BiIndex a(n1, k1, x1, y1);
   BiIndex b(n2, k2, x2, y2);
   Sign s = ((a.ypart().size() * b.xpart().size()) % 2) ? -1 : 1;
   return {s, {std::move(a), std::move(b)}};
}

std::string to_string(const BiIndex &bi, bool dual)
{
   std::string out;
   auto emit = [&](const char *stem, int i) {
      if (!out.empty())
         out += '^';
      out += stem;
      out += std::to_string(i);
   };
   for (int i : bi.xpart().entries())
      emit(dual ? "dxs" : "dx", i);
   for (int j : bi.ypart().entries())
      emit(dual ? "dys" : "dy", j);
   return out;
}

} // namespace fdr
