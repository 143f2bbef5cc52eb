#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdr/errors.hpp"
#include "fdr/index.hpp"

#include <algorithm>

using namespace fdr;

namespace {

BiIndex bi(int n, int k, std::vector<int> x, std::vector<int> y)
{
   return BiIndex(n, k, std::move(x), std::move(y));
}

int inversions_sign(const std::vector<int> &v)
{
   int inv = 0;
   for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
      {
         if (v[i] == v[j])
            return 0;
         inv += v[i] > v[j];
      }
   return inv % 2 ? -1 : 1;
}

} // namespace

TEST_CASE("multi-index invariants")
{
   CHECK_THROWS_AS(MultiIndex({2, 1}, 3), DegenerateIndex);
   CHECK_THROWS_AS(MultiIndex({1, 1}, 3), DegenerateIndex);
   CHECK_THROWS_AS(MultiIndex({4}, 3), IndexOutOfChart);
   MultiIndex m({1, 3}, 4);
   CHECK(m.complement().entries() == std::vector<int>{2, 4});
   CHECK(m.without(1).entries() == std::vector<int>{3});
}

TEST_CASE("enumerate_bi")
{
   auto v = enumerate_bi(2, 1, 2);
   REQUIRE(v.size() == 3);
   CHECK(v[0] == bi(2, 1, {1, 2}, {}));
   CHECK(v[1] == bi(2, 1, {1}, {1}));
   CHECK(v[2] == bi(2, 1, {2}, {1}));
   CHECK(enumerate_bi(0, 0, 0).size() == 1);
   CHECK(enumerate_bi(1, 1, 3).empty());

   // brute force over subsets
   for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 3; ++k)
      {
         std::size_t total = 0;
         for (int r = 0; r <= n + k; ++r)
         {
            auto list = enumerate_bi(n, k, r);
            total += list.size();
            CHECK(std::is_sorted(list.begin(), list.end()));
            for (const auto &b : list)
               CHECK(b.degree() == r);
         }
         CHECK(total == (std::size_t(1) << (n + k)));
      }
}

TEST_CASE("shift_concat")
{
   CHECK(shift_concat(MultiIndex({1}, 2), MultiIndex({1, 2}, 2), 2).entries() ==
         std::vector<int>{1, 3, 4});
   CHECK(shift_concat(MultiIndex({}, 5), MultiIndex({}, 0), 5).entries().empty());
   CHECK(shift_concat(MultiIndex({1, 2}, 2), MultiIndex({1}, 1), 2).entries() ==
         std::vector<int>{1, 2, 3});
   CHECK_THROWS_AS(shift_concat(MultiIndex({3}, 3), MultiIndex({1}, 1), 2), DegenerateIndex);
}

TEST_CASE("epsilon_sign")
{
   CHECK(epsilon_sign(bi(2, 0, {1}, {}), bi(2, 0, {2}, {}), 2, 0) == 1);
   CHECK(epsilon_sign(bi(2, 0, {2}, {}), bi(2, 0, {1}, {}), 2, 0) == -1);
   CHECK(epsilon_sign(bi(1, 1, {1}, {}), bi(1, 1, {1}, {}), 1, 1) == 0);
   CHECK(epsilon_sign(bi(1, 1, {}, {1}), bi(1, 1, {1}, {}), 1, 1) == -1);
}

TEST_CASE("epsilon_sign agrees with the inversion count of the concatenation")
{
   for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 2; ++k)
         for (int r = 0; r <= n + k; ++r)
            for (const auto &a : enumerate_bi(n, k, r))
               for (const auto &b : enumerate_bi(n, k, n + k - r))
               {
                  std::vector<int> seq = a.xpart().entries();
                  for (int j : a.ypart().entries())
                     seq.push_back(n + j);
                  for (int i : b.xpart().entries())
                     seq.push_back(i);
                  for (int j : b.ypart().entries())
                     seq.push_back(n + j);
                  CHECK(epsilon_sign(a, b, n, k) == inversions_sign(seq));
               }
}

TEST_CASE("merge_sign")
{
   auto [s1, m1] = merge_sign(bi(2, 0, {1}, {}), bi(2, 0, {2}, {}));
   CHECK(s1 == 1);
   CHECK(m1 == bi(2, 0, {1, 2}, {}));
   auto [s2, m2] = merge_sign(bi(1, 1, {}, {1}), bi(1, 1, {1}, {}));
   CHECK(s2 == -1);
   CHECK(m2 == bi(1, 1, {1}, {1}));
   CHECK(merge_sign(bi(1, 0, {1}, {}), bi(1, 0, {1}, {})).first == 0);
}

TEST_CASE("kunneth_reindex")
{
   auto [s1, b1] = kunneth_reindex(2, bi(0, 1, {}, {1}), bi(1, 0, {1}, {}));
   CHECK(s1 == -1);
   CHECK(b1 == bi(1, 1, {1}, {1}));
   auto [s2, b2] = kunneth_reindex(0, bi(0, 0, {}, {}), bi(0, 0, {}, {}));
   CHECK(s2 == 1);
   CHECK(b2.degree() == 0);
   auto [s3, b3] = kunneth_reindex(2, bi(1, 0, {1}, {}), bi(0, 1, {}, {1}));
   CHECK(s3 == 1);
   CHECK(b3 == bi(1, 1, {1}, {1}));
   CHECK_THROWS_AS(kunneth_reindex(1, bi(1, 0, {1}, {}), bi(0, 1, {}, {1})), DegreeMismatch);
}

TEST_CASE("kunneth_split inverts kunneth_reindex")
{
   for (int n1 = 0; n1 <= 2; ++n1)
      for (int k1 = 0; k1 <= 2; ++k1)
         for (int r1 = 0; r1 <= n1 + k1; ++r1)
            for (const auto &a : enumerate_bi(n1, k1, r1))
               for (const auto &b : enumerate_bi(1, 1, 1))
               {
                  auto [s, p] = kunneth_reindex(r1 + 1, a, b);
                  auto [t, parts] = kunneth_split(p, n1, k1);
                  CHECK(s * t == 1);
                  CHECK(parts.first == a);
                  CHECK(parts.second == b);
               }
}

TEST_CASE("permutation_sign and printing")
{
   CHECK(permutation_sign({1, 2, 3}) == 1);
   CHECK(permutation_sign({2, 1, 3}) == -1);
   CHECK(permutation_sign({3, 1, 2}) == 1);
   CHECK(permutation_sign({1, 1}) == 0);
   CHECK(to_string(bi(3, 2, {1, 3}, {2})) == "dx1^dx3^dy2");
   CHECK(to_string(bi(1, 2, {1}, {2}), true) == "dxs1^dys2");
   CHECK(to_string(bi(1, 2, {}, {})).empty());
}
