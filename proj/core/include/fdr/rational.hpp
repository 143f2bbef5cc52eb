#ifndef FDR_RATIONAL_HPP
#define FDR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fdr {

/** Exact scalar field. mpq_class keeps values canonical after each operation. */
using Rat = mpq_class;
using Int = mpz_class;

Int factorial(unsigned n);

/** l1! * l2! * ... for an exponent tuple. */
Int multi_factorial(const std::vector<int> &exps);

std::string to_string(const Rat &q);

/** Accepts "3", "-7", "3/4", "-1/2". Throws fdr::Error on malformed input. */
Rat parse_rat(std::string_view s);

} // namespace fdr

#endif
