#include "cli.hpp"

#include "selftest.hpp"

#include "fdr/complexes.hpp"
#include "fdr/errors.hpp"
#include "fdr/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fdr::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error
{
public:
   using std::runtime_error::runtime_error;
};

/** Signals a mathematical failure whose report is already printed. */
struct Failed
{
};

std::vector<int> parse_ints(const std::string &s, std::size_t count, const std::string &what)
{
   std::vector<int> v;
   std::stringstream ss(s);
   std::string item;
   while (std::getline(ss, item, ','))
   {
      try
      {
         std::size_t used = 0;
         v.push_back(std::stoi(item, &used));
         if (used != item.size())
            throw UsageError(what);
      }
      catch (const std::logic_error &)
      {
         throw UsageError("bad " + what + " '" + s + "'");
      }
   }
   if (v.size() != count || std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
      throw UsageError("bad " + what + " '" + s + "', expected " + std::to_string(count) +
                       " non-negative integers separated by commas");
   return v;
}

Chart parse_chart(const std::string &s, int cap)
{
   auto v = parse_ints(s, 2, "chart");
   return Chart{v[0], v[1], cap};
}

std::string join(const std::vector<int> &v)
{
   std::string s;
   for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
   return s;
}

std::vector<std::string> split(const std::string &s, char sep)
{
   std::vector<std::string> out;
   std::stringstream ss(s);
   std::string item;
   while (std::getline(ss, item, sep))
      out.push_back(item);
   return out;
}

struct Printer
{
   std::ostream &out;
   bool json;
   Json doc = Json::object();

   void field(const std::string &key, const std::string &text)
   {
      if (json)
         doc[key] = text;
      else
         out << text << "\n";
   }
   void labelled(const std::string &key, const std::string &text)
   {
      if (json)
         doc[key] = text;
      else
         out << key << ": " << text << "\n";
   }
   void flush()
   {
      if (json)
         out << doc.dump(2) << "\n";
   }
};

std::string current_text(const Current &c) { return to_string(c); }

template <class V>
void primitive_of(const Contraction<V> &c, const V &x, Printer &p)
{
   V dx = c.d(x);
   bool closed = dx.is_zero();
   V prim = c.h(x);
   V residual = x;
   residual -= x;
   if (complex_degree(x) == 0)
      residual = c.augment_in(c.augment_out(x));
   if (p.json)
      p.doc["closed"] = closed;
   if (!closed)
   {
      p.labelled("not closed", to_string(dx));
      p.flush();
      throw Failed{};
   }
   p.labelled("primitive", to_string(prim));
   p.labelled("residual", to_string(residual));
   V check = c.d(prim) + residual;
   bool ok = check == x;
   if (p.json)
      p.doc["verified"] = ok;
   p.flush();
   if (!ok)
      throw Failed{};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
   CLI::App app{"fdr: exact formal de Rham calculus on charts (R^n)^(k)", "fdr"};
   app.require_subcommand(1);
   std::string format = "text";
   app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

   std::string chart_s, target_s, charts_s, map_s, kind = "form", complex = "forms";
   int cap = 4, capx = 6, capy = 4, window = 5, only = -1;
   std::uint64_t seed = 20240611;
   bool augmented = false, certify = false;
   std::string a, b, mode;

   auto *d_cmd = app.add_subcommand("d", "Exterior derivative of a form or current");
   d_cmd->add_option("--chart", chart_s, "n,k")->required();
   d_cmd->add_option("--cap", cap, "y weight cap");
   d_cmd->add_option("--kind", kind, "form or current")->check(CLI::IsMember({"form", "current"}));
   d_cmd->add_option("expr", a)->required();

   auto *wedge_cmd = app.add_subcommand("wedge", "Wedge product of two forms");
   wedge_cmd->add_option("--chart", chart_s, "n,k")->required();
   wedge_cmd->add_option("--cap", cap, "y weight cap");
   wedge_cmd->add_option("lhs", a)->required();
   wedge_cmd->add_option("rhs", b)->required();

   auto *pair_cmd = app.add_subcommand("pair", "Pairing of a form with a current");
   pair_cmd->add_option("--chart", chart_s, "n,k")->required();
   pair_cmd->add_option("--cap", cap, "y weight cap");
   pair_cmd->add_option("form", a)->required();
   pair_cmd->add_option("current", b)->required();

   auto *pull_cmd = app.add_subcommand("pullback", "Pullback of a form along a chart map");
   pull_cmd->add_option("--chart", chart_s, "source n,k")->required();
   pull_cmd->add_option("--target", target_s, "target m,l")->required();
   pull_cmd->add_option("--map", map_s, "images of x1..xm, y1..yl separated by ';'")->required();
   pull_cmd->add_option("--cap", cap, "y weight cap");
   pull_cmd->add_option("form", a)->required();

   auto *kun_cmd = app.add_subcommand("kunneth", "Product of forms (psi) or currents (box)");
   kun_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"psi", "box"}));
   kun_cmd->add_option("first", a)->required();
   kun_cmd->add_option("second", b)->required();
   kun_cmd->add_option("--charts", charts_s, "n1,k1,n2,k2")->required();
   kun_cmd->add_option("--cap", cap, "y weight cap of all charts");

   auto *prim_cmd = app.add_subcommand("primitive", "Primitive of a closed element");
   prim_cmd->add_option("expr", a)->required();
   prim_cmd->add_option("--complex", complex, "forms, density, dist or gen")
      ->check(CLI::IsMember({"forms", "density", "dist", "gen"}));
   prim_cmd->add_option("--chart", chart_s, "n,k")->required();
   prim_cmd->add_option("--cap", cap, "y weight cap");

   auto *betti_cmd = app.add_subcommand("betti", "Betti numbers of a truncated complex");
   betti_cmd->add_option("--chart", chart_s, "n,k")->required();
   betti_cmd->add_option("--capx", capx, "x degree cap");
   betti_cmd->add_option("--capy", capy, "y weight cap");
   betti_cmd->add_option("--kind", complex, "forms, density, dist or gen")
      ->check(CLI::IsMember({"forms", "density", "dist", "gen"}));
   betti_cmd->add_flag("--augmented", augmented, "Include the augmentation");
   betti_cmd->add_option("--window", window, "Spline window of densities");
   betti_cmd->add_flag("--certify", certify, "Certify strong exactness with the contraction");

   auto *self_cmd = app.add_subcommand("selftest", "Run the acceptance suites");
   self_cmd->add_option("--seed", seed, "Random seed");
   self_cmd->add_option("--only", only, "Run a single suite");

   try
   {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
   }
   catch (const CLI::ParseError &e)
   {
      int code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
   }

   Printer p{out, format == "json"};
   try
   {
      if (d_cmd->parsed())
      {
         Chart c = parse_chart(chart_s, cap);
         p.doc["command"] = "d";
         if (kind == "form")
            p.field("result", to_string(d(parse_form(a, c))));
         else
         {
            Current cur = parse_current(a, c);
            Current dc = std::visit([](const auto &e) { return Current(coboundary(e)); }, cur);
            p.field("result", current_text(dc));
         }
         p.flush();
      }
      else if (wedge_cmd->parsed())
      {
         Chart c = parse_chart(chart_s, cap);
         p.doc["command"] = "wedge";
         p.field("result", to_string(wedge(parse_form(a, c), parse_form(b, c))));
         p.flush();
      }
      else if (pair_cmd->parsed())
      {
         Chart c = parse_chart(chart_s, cap);
         FormalForm w = parse_form(a, c);
         Current cur = parse_current(b, c, w.degree());
         Rat v = std::visit([&](const auto &e) { return pair(w, e); }, cur);
         p.doc["command"] = "pair";
         p.field("result", to_string(v));
         p.flush();
      }
      else if (pull_cmd->parsed())
      {
         Chart src = parse_chart(chart_s, cap), tgt = parse_chart(target_s, cap);
         auto images = split(map_s, ';');
         if (static_cast<int>(images.size()) != tgt.dim())
            throw UsageError("--map needs " + std::to_string(tgt.dim()) + " images, got " +
                             std::to_string(images.size()));
         std::vector<std::string> names;
         for (int i = 0; i < src.dim(); ++i)
            names.push_back(xy_name(src.n, i));
         ChartMorphism phi{src, tgt, {}, {}};
         for (int i = 0; i < tgt.dim(); ++i)
            (i < tgt.n ? phi.x_images : phi.y_images).push_back(parse_poly(images[i], names));
         p.doc["command"] = "pullback";
         p.field("result", to_string(pullback(phi, parse_form(a, tgt))));
         p.flush();
      }
      else if (kun_cmd->parsed())
      {
         auto v = parse_ints(charts_s, 4, "charts");
         Chart c1{v[0], v[1], cap}, c2{v[2], v[3], cap};
         p.doc["command"] = "kunneth";
         p.doc["mode"] = mode;
         if (mode == "psi")
            p.field("result", to_string(psi(parse_form(a, c1), parse_form(b, c2), cap)));
         else
         {
            Current e1 = parse_current(a, c1), e2 = parse_current(b, c2);
            if (e1.index() != e2.index())
               throw KindMismatch("box: both factors must be densities or both deltas");
            Current prod = std::visit(
               [&](const auto &x) -> Current {
                  using T = std::decay_t<decltype(x)>;
                  return boxtimes(x, std::get<T>(e2), cap);
               },
               e1);
            p.field("result", current_text(prod));
         }
         p.flush();
      }
      else if (prim_cmd->parsed())
      {
         Chart c = parse_chart(chart_s, cap);
         p.doc["command"] = "primitive";
         p.doc["complex"] = complex;
         if (complex == "forms")
            primitive_of(contract_forms(c), parse_form(a, c), p);
         else if (complex == "density")
            primitive_of(contract_density(c.n, c.k, {}, cap), parse_density(a, c), p);
         else if (complex == "dist")
            primitive_of(transpose_contraction(contract_forms(c)), parse_delta(a, c), p);
         else
            primitive_of(transpose_contraction(contract_density(c.n, c.k, {}, cap)),
                         GenFunction::regular_part(parse_form(a, c)), p);
      }
      else if (betti_cmd->parsed())
      {
         Chart c = parse_chart(chart_s, capy);
         ComplexKind ck = complex == "forms"     ? ComplexKind::Forms
                          : complex == "density" ? ComplexKind::Densities
                          : complex == "dist"    ? ComplexKind::Distributions
                                                 : ComplexKind::Generalized;
         FiniteComplex fc = assemble(c.n, c.k, capx, capy, ck, augmented, window);
         std::vector<int> dims, b = betti(fc);
         for (int j = fc.lo; j <= fc.hi(); ++j)
            dims.push_back(fc.dim(j));
         bool exact = std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
         std::optional<CertifyReport> rep;
         if (certify)
         {
            if (!augmented)
               throw UsageError("--certify needs --augmented");
            HomotopyMatrices h;
            if (ck == ComplexKind::Forms || ck == ComplexKind::Distributions)
            {
               FiniteComplex base = assemble(c.n, c.k, capx, capy, ComplexKind::Forms, true);
               h = homotopy_matrices(contract_forms(c), capx, true);
               if (ck == ComplexKind::Distributions)
                  h = transpose(base, h);
            }
            else
            {
               FiniteComplex base = assemble(c.n, c.k, capx, capy, ComplexKind::Densities, true,
                                             window);
               h = homotopy_matrices(contract_density(c.n, c.k, {}, capy), window, true);
               if (ck == ComplexKind::Generalized)
                  h = transpose(base, h);
            }
            rep = certify_strong_exactness(fc, h);
         }
         if (p.json)
         {
            p.doc["command"] = "betti";
            p.doc["kind"] = to_string(ck);
            p.doc["chart"] = {c.n, c.k};
            p.doc["capx"] = capx;
            p.doc["capy"] = capy;
            p.doc["augmented"] = augmented;
            p.doc["lo"] = fc.lo;
            p.doc["dims"] = dims;
            p.doc["betti"] = b;
            p.doc["exact"] = exact;
            if (rep)
            {
               p.doc["certified"] = rep->ok;
               if (!rep->ok)
               {
                  p.doc["failure"] = rep->failure;
                  p.doc["failure_degree"] = rep->degree;
                  p.doc["witness"] = rep->witness_label;
               }
            }
         }
         else
         {
            out << "kind=" << to_string(ck) << "\n";
            out << "chart=" << c.n << "," << c.k << "\n";
            out << "capx=" << capx << "\ncapy=" << capy << "\n";
            out << "augmented=" << (augmented ? "true" : "false") << "\n";
            out << "lo=" << fc.lo << "\n";
            out << "dims=" << join(dims) << "\n";
            out << "betti=" << join(b) << "\n";
            out << "exact=" << (exact ? "true" : "false") << "\n";
            if (rep)
            {
               out << "certified=" << (rep->ok ? "true" : "false") << "\n";
               if (!rep->ok)
                  out << "failure=" << rep->failure << "\nfailure_degree=" << rep->degree
                      << "\nwitness=" << rep->witness_label << "\n";
            }
         }
         p.flush();
         if (rep && !rep->ok)
            return kMathFailure;
      }
      else if (self_cmd->parsed())
      {
         selftest::CliRunner runner = [](const std::vector<std::string> &argv, std::string &text) {
            std::ostringstream o, e;
            int code = run(argv, o, e);
            text = o.str();
            return code;
         };
         std::ostringstream log;
         auto results = selftest::run_all(seed, runner, p.json ? log : out, only);
         bool ok = std::all_of(results.begin(), results.end(),
                               [](const selftest::SuiteResult &r) { return r.ok; });
         if (p.json)
         {
            Json suites = Json::array();
            for (const auto &r : results)
               suites.push_back({{"id", r.id},
                                 {"name", r.name},
                                 {"ok", r.ok},
                                 {"checks", r.checks},
                                 {"seconds", r.seconds},
                                 {"detail", r.detail}});
            p.doc["command"] = "selftest";
            p.doc["seed"] = seed;
            p.doc["suites"] = suites;
            p.doc["ok"] = ok;
            p.flush();
         }
         return ok ? kOk : kMathFailure;
      }
   }
   catch (const Failed &)
   {
      return kMathFailure;
   }
   catch (const UsageError &e)
   {
      err << "error: " << e.what() << "\n";
      return kUsage;
   }
   catch (const ParseError &e)
   {
      err << "parse error: " << e.what() << "\n";
      return kUsage;
   }
   catch (const IndexOutOfChart &e)
   {
      err << "error: " << e.what() << "\n";
      return kUsage;
   }
   catch (const KindMismatch &e)
   {
      err << "error: " << e.what() << "\n";
      return kUsage;
   }
   catch (const DegreeMismatch &e)
   {
      err << "error: " << e.what() << "\n";
      return kUsage;
   }
   catch (const Error &e)
   {
      err << "failure: " << e.what() << "\n";
      return kMathFailure;
   }
   return kOk;
}

} // namespace fdr::cli
