#include "fdr/rational.hpp"
#include "fdr/errors.hpp"


namespace fdr {

Int factorial(unsigned n)
{
   Int r;
   mpz_fac_ui(r.get_mpz_t(), n);
   return r;
}

Int multi_factorial(const std::vector<int> &exps)
{
   Int r = 1;
   for (int e : exps)
      r *= factorial(static_cast<unsigned>(e));
   return r;
}

std::string to_string(const Rat &q)
{
   return q.get_str();
}

Rat parse_rat(std::string_view s)
{
   std::string t(s);
   Rat q;
   if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0)
      throw Error("malformed rational '" + t + "'");
   q.canonicalize();
   return q;
}

} // namespace fdr
