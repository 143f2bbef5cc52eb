/**
 * Acceptance run: one PASS/FAIL line per criterion with its wall-clock limit.
 * Criteria 7 and 8 drive the installed command-line tool as a subprocess.
 *
 *   fdr_acceptance [seed]
 */

#include "selftest.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef FDR_BINARY
#error "FDR_BINARY must name the fdr executable"
#endif

namespace {

using Clock = std::chrono::steady_clock;

struct Proc
{
   int code = -1;
   std::string out;
};

std::string quote(const std::string &s)
{
   std::string q = "'";
   for (char c : s)
      q += c == '\'' ? std::string("'\\''") : std::string(1, c);
   return q + "'";
}

Proc run_tool(const std::vector<std::string> &args)
{
   std::string cmd = quote(FDR_BINARY);
   for (const auto &a : args)
      cmd += " " + quote(a);
   cmd += " 2>/dev/null";
   Proc p;
   FILE *f = popen(cmd.c_str(), "r");
   if (!f)
      return p;
   std::array<char, 4096> buf;
   std::size_t got;
   while ((got = fread(buf.data(), 1, buf.size(), f)) > 0)
      p.out.append(buf.data(), got);
   int status = pclose(f);
   p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
   return p;
}

bool report(int id, const std::string &name, bool ok, double secs, const std::string &detail)
{
   double limit = fdr::selftest::time_limit(id);
   bool pass = ok && secs < limit;
   std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " ("
             << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0)
             << limit << " s)";
   if (!ok && !detail.empty())
      std::cout << " : " << detail;
   else if (ok && secs >= limit)
      std::cout << " : over the time limit";
   std::cout << std::endl;
   return pass;
}

} // namespace

int main(int argc, char **argv)
{
   std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
   std::cout << "seed=" << seed << std::endl;
   bool all = true;

   using Suite = fdr::selftest::SuiteResult (*)(std::uint64_t);
   const std::vector<Suite> suites = {
      fdr::selftest::differential_laws,
      [](std::uint64_t) { return fdr::selftest::wedge_oracle(); },
      fdr::selftest::duality_transpose,
      fdr::selftest::kunneth_signs,
      fdr::selftest::poincare_forms,
      fdr::selftest::poincare_densities,
   };
   for (std::size_t i = 0; i < suites.size(); ++i)
   {
      auto t0 = Clock::now();
      fdr::selftest::SuiteResult r = suites[i](seed);
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      all &= report(static_cast<int>(i) + 1,
                    r.name + ", " + std::to_string(r.checks) + " checks", r.ok, secs, r.detail);
   }

   {
      auto t0 = Clock::now();
      fdr::selftest::SuiteResult r = fdr::selftest::cli_goldens(
         [](const std::vector<std::string> &args, std::string &out) {
            Proc p = run_tool(args);
            out = p.out;
            return p.code;
         });
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      all &= report(7, r.name + " via " + std::string(FDR_BINARY), r.ok, secs, r.detail);
   }

   {
      auto t0 = Clock::now();
      Proc p = run_tool({"selftest", "--seed", std::to_string(seed)});
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      std::string detail = "exit code " + std::to_string(p.code);
      if (p.code != 0)
         detail += "\n" + p.out;
      all &= report(8, "full selftest, exit code 0", p.code == 0, secs, detail);
   }
   return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
