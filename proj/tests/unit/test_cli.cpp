#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "cli.hpp"
#include "fdr/errors.hpp"
#include "fdr/text.hpp"

#include <json.hpp>

#include <sstream>

using namespace fdr;
using namespace fdr::test;

namespace {

struct Outcome
{
   int code;
   std::string out;
   std::string err;
};

Outcome run(std::vector<std::string> args)
{
   std::ostringstream out, err;
   int code = cli::run(args, out, err);
   return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parse_form")
{
   Chart c{1, 1, 4};
   FormalForm w = parse_form("(2*x1*y1) dx1^dy1", c);
   CHECK(w == FormalForm::monomial(c, BiIndex(1, 1, {1}, {1}), Poly::monomial(2, {1, 1}, 2)));
   FormalForm z = parse_form("dx1^dx1", c);
   CHECK(z.is_zero());
   CHECK(z.degree() == 2);
   CHECK_THROWS_AS(parse_form("dy2", c), IndexOutOfChart);
   CHECK(parse_form("dy1^dx1", c) == -parse_form("dx1^dy1", c));
   CHECK(parse_form("(x1 + y1)^2", c) == parse_form("x1^2 + 2*x1*y1 + y1^2", c));
   CHECK(parse_form("3/6*x1", c) == parse_form("x1/2", c));
   CHECK(to_string(parse_form("(2*x1*y1) dx1^dy1 + (1/3) dx1^dy1", c)) ==
         "(2*x1*y1 + 1/3) dx1^dy1");
   CHECK(to_string(FormalForm(c, 1)) == "0");
}

TEST_CASE("parse errors carry positions")
{
   Chart c{1, 1, 4};
   try
   {
      parse_form("x1 + * 2", c);
      FAIL("no error");
   }
   catch (const ParseError &e)
   {
      CHECK(e.position() == 5);
   }
   CHECK_THROWS_AS(parse_form("x1 + dx1", c), DegreeMismatch);
   CHECK_THROWS_AS(parse_form("x1 +", c), ParseError);
   CHECK_THROWS_AS(parse_current("delta[p=(0);a=(0);L=(0)]*pw-unit dxs1", c), KindMismatch);
}

TEST_CASE("currents text")
{
   Chart c01{0, 1, 3};
   auto e = parse_current("pw-unit*(ys1^2)", c01, 0);
   REQUIRE(std::holds_alternative<DensityCurrent>(e));
   CHECK(pair(parse_form("y1^2", c01), std::get<DensityCurrent>(e)) == 2);

   Chart c11{1, 1, 4};
   auto dd = parse_density("-3/2*pw1[(0,1,2);x;-x + 2]*(ys1^2) dxs1 + pw-unit dys1", c11);
   CHECK(parse_density(to_string(dd), c11) == dd);
   auto dl = parse_delta("2*delta[p=(1/2);a=(1);L=(2)] dxs1 - delta[p=(0);a=(0);L=(0)] dys1", c11);
   CHECK(parse_delta(to_string(dl), c11) == dl);
   CHECK(parse_pw("pw[(0,1,2);x;2-x]") == PwPoly::triangle());
}

TEST_CASE("printer/parser round trip")
{
   Rng rng(71);
   for (int i = 0; i < 500; ++i)
   {
      Chart c{uniform(rng, 0, 2), uniform(rng, 0, 2), 3};
      int r = uniform(rng, 0, c.dim());
      switch (i % 3)
      {
      case 0:
      {
         FormalForm w = random_form(rng, c, r);
         CHECK(parse_form(to_string(w), c) == w);
         break;
      }
      case 1:
      {
         DensityCurrent e = random_density(rng, c, r);
         CHECK(parse_density(to_string(e), c, r) == e);
         break;
      }
      default:
      {
         DeltaCurrent e = random_delta(rng, c, r);
         CHECK(parse_delta(to_string(e), c, r) == e);
      }
      }
   }
}

TEST_CASE("cli goldens")
{
   auto a = run({"d", "--chart", "0,1", "y1^3"});
   CHECK(a.code == 0);
   CHECK(a.out == "(3*y1^2) dy1\n");
   auto b = run({"pair", "--chart", "0,1", "--cap", "3", "y1^2", "pw-unit*(ys1^2)"});
   CHECK(b.code == 0);
   CHECK(b.out == "2\n");
   auto e = run({"pair", "--chart", "2,0", "dx2", "pw-unit dxs1"});
   CHECK(e.out == "-1\n");
}

TEST_CASE("cli commands")
{
   CHECK(run({"wedge", "--chart", "1,1", "x1 dx1", "y1 dy1"}).out == "(x1*y1) dx1^dy1\n");
   CHECK(run({"pullback", "--chart", "1,0", "--target", "1,0", "--map", "x1^2", "dx1"}).out ==
         "(2*x1) dx1\n");
   CHECK(run({"kunneth", "psi", "dy1", "dx1", "--charts", "0,1,1,0"}).out == "(-1) dx1^dy1\n");
   auto prim = run({"primitive", "--complex", "forms", "--chart", "0,1", "y1^2 dy1"});
   CHECK(prim.code == 0);
   CHECK(prim.out == "primitive: (1/3*y1^3)\nresidual: 0\n");
   auto open = run({"primitive", "--chart", "1,1", "x1 dy1"});
   CHECK(open.code == 1);
   auto betti = run({"betti", "--chart", "1,1", "--capx", "2", "--capy", "2", "--augmented", "--certify"});
   CHECK(betti.code == 0);
   CHECK(betti.out.find("betti=0,0,0,0\n") != std::string::npos);
   CHECK(betti.out.find("certified=true\n") != std::string::npos);
}

TEST_CASE("cli exit codes")
{
   CHECK(run({}).code == 2);
   CHECK(run({"nope"}).code == 2);
   CHECK(run({"d", "--chart", "1,1", "dy2"}).code == 2);
   CHECK(run({"d", "--chart", "1", "x1"}).code == 2);
   CHECK(run({"d", "--chart", "1,1", "x1 +"}).code == 2);
   auto bad_bump = run({"pair", "--chart", "1,0", "x1", "pw[(0,1);x] dxs1"});
   CHECK(bad_bump.code == 0);
   CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli json")
{
   auto a = run({"--format", "json", "betti", "--chart", "1,0", "--capx", "2"});
   CHECK(a.code == 0);
   auto doc = nlohmann::json::parse(a.out);
   CHECK(doc["dims"] == nlohmann::json::array({3, 2}));
   CHECK(doc["betti"] == nlohmann::json::array({1, 0}));
   auto b = run({"--format", "json", "d", "--chart", "0,1", "y1^3"});
   CHECK(nlohmann::json::parse(b.out)["result"] == "(3*y1^2) dy1");
}

TEST_CASE("cli output is a function of argv")
{
   std::vector<std::string> args = {"primitive", "--complex", "density", "--chart", "1,1",
                                    "pw[(0,1,2);x;2-x]*ys1 dxs1^dys1"};
   CHECK(run(args).out == run(args).out);
}
