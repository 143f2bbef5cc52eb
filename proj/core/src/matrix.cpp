#include "fdr/matrix.hpp"
#include "fdr/errors.hpp"

#include <map>
#include <utility>

namespace fdr {

RatMatrix RatMatrix::identity(int n)
{
   RatMatrix m(n, n);
   for (int i = 0; i < n; ++i)
      m(i, i) = 1;
   return m;
}

bool RatMatrix::is_zero() const
{
   for (const auto &x : a_)
      if (x != 0)
         return false;
   return true;
}

RatMatrix RatMatrix::transposed() const
{
   RatMatrix t(cols_, rows_);
   for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
         t(j, i) = (*this)(i, j);
   return t;
}

std::vector<Rat> RatMatrix::column(int j) const
{
   std::vector<Rat> c(rows_);
   for (int i = 0; i < rows_; ++i)
      c[i] = (*this)(i, j);
   return c;
}

RatMatrix &RatMatrix::operator+=(const RatMatrix &o)
{
   if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeMismatch("matrix sum shape mismatch");
   for (std::size_t i = 0; i < a_.size(); ++i)
      a_[i] += o.a_[i];
   return *this;
}

RatMatrix &RatMatrix::operator-=(const RatMatrix &o)
{
   if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeMismatch("matrix difference shape mismatch");
   for (std::size_t i = 0; i < a_.size(); ++i)
      a_[i] -= o.a_[i];
   return *this;
}

RatMatrix &RatMatrix::operator*=(const Rat &c)
{
   for (auto &x : a_)
      x *= c;
   return *this;
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b)
{
   if (a.cols_ != b.rows_)
      throw ShapeMismatch("matrix product shape mismatch");
   std::vector<std::vector<int>> nz(b.rows_);
   for (int l = 0; l < b.rows_; ++l)
      for (int j = 0; j < b.cols_; ++j)
         if (b(l, j) != 0)
            nz[l].push_back(j);
   RatMatrix r(a.rows_, b.cols_);
   for (int i = 0; i < a.rows_; ++i)
      for (int l = 0; l < a.cols_; ++l)
      {
         const Rat &x = a(i, l);
         if (x == 0)
            continue;
         for (int j : nz[l])
            r(i, j) += x * b(l, j);
      }
   return r;
}

namespace {

int bareiss_rank(std::vector<std::vector<Int>> a)
{
   int R = static_cast<int>(a.size()), C = R ? static_cast<int>(a[0].size()) : 0;
   int rk = 0;
   Int prev = 1;
   for (int col = 0; col < C && rk < R; ++col)
   {
      int piv = -1;
      for (int i = rk; i < R; ++i)
         if (a[i][col] != 0)
         {
            piv = i;
            break;
         }
      if (piv < 0)
         continue;
      std::swap(a[piv], a[rk]);
      for (int i = rk + 1; i < R; ++i)
      {
         for (int j = col + 1; j < C; ++j)
         {
            a[i][j] = a[rk][col] * a[i][j] - a[i][col] * a[rk][j];
            mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
         }
         a[i][col] = 0;
      }
      prev = a[rk][col];
      ++rk;
   }
   return rk;
}

int find(std::vector<int> &parent, int x)
{
   while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
   return x;
}

} // namespace

int rank(const RatMatrix &m)
{
   int R = m.rows(), C = m.cols();
   // rows 0..R-1 and columns R..R+C-1 joined by nonzero entries
   std::vector<int> parent(R + C);
   for (int i = 0; i < R + C; ++i)
      parent[i] = i;
   for (int i = 0; i < R; ++i)
      for (int j = 0; j < C; ++j)
         if (m(i, j) != 0)
            parent[find(parent, i)] = find(parent, R + j);
   std::map<int, std::pair<std::vector<int>, std::vector<int>>> blocks;
   for (int i = 0; i < R; ++i)
      blocks[find(parent, i)].first.push_back(i);
   for (int j = 0; j < C; ++j)
      blocks[find(parent, R + j)].second.push_back(j);
   int total = 0;
   for (const auto &[root, rc] : blocks)
   {
      const auto &[rows, cols] = rc;
      if (rows.empty() || cols.empty())
         continue;
      std::vector<std::vector<Int>> a(rows.size(), std::vector<Int>(cols.size()));
      for (std::size_t i = 0; i < rows.size(); ++i)
      {
         Int l = 1;
         for (int j : cols)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(rows[i], j).get_den_mpz_t());
         for (std::size_t j = 0; j < cols.size(); ++j)
         {
            const Rat &x = m(rows[i], cols[j]);
            a[i][j] = x.get_num() * (l / x.get_den());
         }
      }
      total += bareiss_rank(std::move(a));
   }
   return total;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns pivot columns.
std::vector<int> reduce(RatMatrix &m, RatMatrix &rhs)
{
   std::vector<int> pivots;
   int r = 0;
   for (int col = 0; col < m.cols() && r < m.rows(); ++col)
   {
      int piv = -1;
      for (int i = r; i < m.rows(); ++i)
         if (m(i, col) != 0)
         {
            piv = i;
            break;
         }
      if (piv < 0)
         continue;
      for (int j = 0; j < m.cols(); ++j)
         std::swap(m(piv, j), m(r, j));
      for (int j = 0; j < rhs.cols(); ++j)
         std::swap(rhs(piv, j), rhs(r, j));
      Rat inv = 1 / m(r, col);
      for (int j = 0; j < m.cols(); ++j)
         m(r, j) *= inv;
      for (int j = 0; j < rhs.cols(); ++j)
         rhs(r, j) *= inv;
      for (int i = 0; i < m.rows(); ++i)
      {
         if (i == r || m(i, col) == 0)
            continue;
         Rat f = m(i, col);
         for (int j = 0; j < m.cols(); ++j)
            m(i, j) -= f * m(r, j);
         for (int j = 0; j < rhs.cols(); ++j)
            rhs(i, j) -= f * rhs(r, j);
      }
      pivots.push_back(col);
      ++r;
   }
   return pivots;
}

} // namespace

std::optional<RatMatrix> inverse(const RatMatrix &m)
{
   if (m.rows() != m.cols())
      throw ShapeMismatch("inverse of a non-square matrix");
   RatMatrix a = m, b = RatMatrix::identity(m.rows());
   if (static_cast<int>(reduce(a, b).size()) != m.rows())
      return std::nullopt;
   return b;
}

std::optional<std::vector<Rat>> solve(const RatMatrix &m, const std::vector<Rat> &b)
{
   if (static_cast<int>(b.size()) != m.rows())
      throw ShapeMismatch("solve: right-hand side length mismatch");
   RatMatrix a = m, rhs(m.rows(), 1);
   for (int i = 0; i < m.rows(); ++i)
      rhs(i, 0) = b[i];
   auto piv = reduce(a, rhs);
   for (int i = static_cast<int>(piv.size()); i < m.rows(); ++i)
      if (rhs(i, 0) != 0)
         return std::nullopt;
   std::vector<Rat> x(m.cols());
   for (std::size_t r = 0; r < piv.size(); ++r)
      x[piv[r]] = rhs(static_cast<int>(r), 0);
   return x;
}

} // namespace fdr
