#ifndef FDR_TEXT_HPP
#define FDR_TEXT_HPP

#include "fdr/generalized.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace fdr {

/**
 * Text grammar shared by the parsers:
 *
 *    expr    := ['-'] product (('+' | '-') product)*
 *    product := power (('*' | '/' | '^' | juxtaposition) power)*
 *    power   := atom ['^' integer]
 *
 * '^' followed directly by an integer is a power, otherwise a wedge. All
 * products are wedge products; '/' divides by a rational constant.
 * Form atoms: integers, x1.., y1.., dx1.., dy1... Current atoms: integers,
 * ys1.., dxs1.., dys1.., pw[...] (axis 1), pwN[...] (axis N), pw-unit (the
 * default bump on every axis not given explicitly) and
 * delta[p=(..);a=(..);L=(..)].
 */
FormalForm parse_form(std::string_view src, const Chart &chart);

using Current = std::variant<DensityCurrent, DeltaCurrent>;

/**
 * A density or a delta current, decided by the atoms used. With pairs_with = 0
 * and no dual covector written anywhere, every term carries the full dual
 * volume dxs1^..^dysk (the usual way of writing densities against functions).
 */
Current parse_current(std::string_view src, const Chart &chart, int pairs_with = -1);
DensityCurrent parse_density(std::string_view src, const Chart &chart, int pairs_with = -1);
DeltaCurrent parse_delta(std::string_view src, const Chart &chart, int pairs_with = -1);

/** Polynomial in the given variable names. */
Poly parse_poly(std::string_view src, const std::vector<std::string> &names);

/** "pw[(0,1,2);x;-x + 2]", also with an axis number after pw. */
PwPoly parse_pw(std::string_view src);

/** Printed as "(poly) basis" terms joined by " + "; 0-forms as "(poly)"; zero as "0". */
std::string to_string(const FormalForm &w);
std::string to_string(const FormalFunction &f);
/** Terms "c*pw1[..]*pw2[..]*(ys1^2) dxs1" joined by " + " or " - ". */
std::string to_string(const DensityCurrent &e);
/** Terms "c*delta[p=(..);a=(..);L=(..)] dxs1" joined by " + " or " - ". */
std::string to_string(const DeltaCurrent &e);
/** Regular part followed by point terms "c*ev[p=(..);a=(..);L=(..)] dx1". */
std::string to_string(const GenFunction &t);
std::string to_string(const Current &c);

} // namespace fdr

#endif
