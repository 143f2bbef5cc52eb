#ifndef FDR_SELFTEST_HPP
#define FDR_SELFTEST_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fdr::selftest {

struct SuiteResult
{
   int id = 0;
   std::string name;
   bool ok = true;
   long checks = 0;
   /** First failure, empty when ok. */
   std::string detail;
   double seconds = 0;
};

/** Runs argv through the command-line front end; returns the exit code, fills out. */
using CliRunner = std::function<int(const std::vector<std::string> &argv, std::string &out)>;

SuiteResult differential_laws(std::uint64_t seed);
SuiteResult wedge_oracle();
SuiteResult duality_transpose(std::uint64_t seed);
SuiteResult kunneth_signs(std::uint64_t seed);
SuiteResult poincare_forms(std::uint64_t seed);
SuiteResult poincare_densities(std::uint64_t seed);
SuiteResult cli_goldens(const CliRunner &run);
/** Printer/parser round trip on random expressions. */
SuiteResult round_trip(std::uint64_t seed);

/** Wall-clock limit of a numbered suite in seconds. */
double time_limit(int id);

/** Runs every suite, or only the one with the given id, printing one line each. */
std::vector<SuiteResult> run_all(std::uint64_t seed, const CliRunner &run, std::ostream &out,
                                 int only = -1);

} // namespace fdr::selftest

#endif
