#include "fdr/text.hpp"
#include "fdr/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace fdr {

namespace {

enum class Tok { Num, Ident, Pw, Unit, Delta, Plus, Minus, Star, Slash, Wedge, Pow, LParen, RParen, End };

struct Token
{
   Tok kind;
   std::string text;
   std::size_t pos;
   int value = 0;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::size_t closing_bracket(std::string_view s, std::size_t open)
{
   std::size_t close = s.find(']', open);
   if (close == std::string_view::npos)
      throw ParseError("unterminated '['", open);
   return close;
}

std::vector<Token> lex(std::string_view s)
{
   std::vector<Token> out;
   std::size_t i = 0;
   while (i < s.size())
   {
      char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c)))
      {
         ++i;
         continue;
      }
      std::size_t start = i;
      if (is_digit(c))
      {
         while (i < s.size() && is_digit(s[i]))
            ++i;
         out.push_back({Tok::Num, std::string(s.substr(start, i - start)), start});
         continue;
      }
      if (is_alpha(c))
      {
         if (s.substr(i).starts_with("pw-unit"))
         {
            i += 7;
            out.push_back({Tok::Unit, "pw-unit", start});
            continue;
         }
         while (i < s.size() && (is_alpha(s[i]) || is_digit(s[i])))
            ++i;
         std::string word(s.substr(start, i - start));
         bool is_pw = word.size() >= 2 && word.compare(0, 2, "pw") == 0
                      && std::all_of(word.begin() + 2, word.end(), is_digit);
         if (is_pw || word == "delta")
         {
            if (i >= s.size() || s[i] != '[')
               throw ParseError("expected '[' after " + word, i);
            std::size_t close = closing_bracket(s, i);
            Token t{is_pw ? Tok::Pw : Tok::Delta, std::string(s.substr(i + 1, close - i - 1)), start};
            if (is_pw)
               t.value = word.size() > 2 ? std::stoi(word.substr(2)) : 1;
            out.push_back(std::move(t));
            i = close + 1;
            continue;
         }
         out.push_back({Tok::Ident, word, start});
         continue;
      }
      ++i;
      switch (c)
      {
      case '+': out.push_back({Tok::Plus, "+", start}); break;
      case '-': out.push_back({Tok::Minus, "-", start}); break;
      case '*': out.push_back({Tok::Star, "*", start}); break;
      case '/': out.push_back({Tok::Slash, "/", start}); break;
      case '(': out.push_back({Tok::LParen, "(", start}); break;
      case ')': out.push_back({Tok::RParen, ")", start}); break;
      case '^':
         if (i < s.size() && is_digit(s[i]))
         {
            std::size_t b = i;
            while (i < s.size() && is_digit(s[i]))
               ++i;
            Token t{Tok::Pow, std::string(s.substr(b, i - b)), start};
            t.value = std::stoi(t.text);
            out.push_back(std::move(t));
         }
         else
            out.push_back({Tok::Wedge, "^", start});
         break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
   }
   out.push_back({Tok::End, "", s.size()});
   return out;
}

/** Recursive descent over a value algebra. */
template <class Alg>
class Parser
{
public:
   using V = typename Alg::V;

   Parser(std::string_view src, Alg &alg) : toks_(lex(src)), alg_(alg) {}

   V parse()
   {
      V v = expr();
      if (peek().kind != Tok::End)
         throw ParseError("unexpected '" + peek().text + "'", peek().pos);
      return v;
   }

private:
   const Token &peek() const { return toks_[at_]; }
   const Token &next() { return toks_[at_++]; }
   bool accept(Tok k)
   {
      if (peek().kind != k)
         return false;
      ++at_;
      return true;
   }

   static bool starts_atom(Tok k)
   {
      return k == Tok::Num || k == Tok::Ident || k == Tok::Pw || k == Tok::Unit || k == Tok::Delta
             || k == Tok::LParen;
   }

   V expr()
   {
      bool neg = accept(Tok::Minus);
      V v = product();
      if (neg)
         v = alg_.neg(v);
      for (;;)
      {
         if (accept(Tok::Plus))
            v = alg_.add(v, product());
         else if (accept(Tok::Minus))
            v = alg_.add(v, alg_.neg(product()));
         else
            return v;
      }
   }

   V product()
   {
      V v = power();
      for (;;)
      {
         if (accept(Tok::Star) || accept(Tok::Wedge))
            v = alg_.mul(v, power());
         else if (peek().kind == Tok::Slash)
         {
            ++at_;
            const Token &t = next();
            if (t.kind != Tok::Num)
               throw ParseError("expected an integer divisor", t.pos);
            Rat q{Int(t.text)};
            if (q == 0)
               throw ParseError("division by zero", t.pos);
            v = alg_.scale(v, 1 / q);
         }
         else if (starts_atom(peek().kind))
            v = alg_.mul(v, power());
         else
            return v;
      }
   }

   V power()
   {
      V v = atom();
      while (peek().kind == Tok::Pow)
      {
         const Token &t = next();
         v = alg_.pow(v, t.value, t.pos);
      }
      return v;
   }

   V atom()
   {
      const Token &t = next();
      switch (t.kind)
      {
      case Tok::Num: return alg_.number(Rat(Int(t.text)));
      case Tok::Ident: return alg_.ident(t.text, t.pos);
      case Tok::Pw: return alg_.pw(t.value, t.text, t.pos);
      case Tok::Unit: return alg_.unit(t.pos);
      case Tok::Delta: return alg_.delta(t.text, t.pos);
      case Tok::LParen:
      {
         V v = expr();
         if (!accept(Tok::RParen))
            throw ParseError("expected ')'", peek().pos);
         return v;
      }
      default:
         throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'",
                          t.pos);
      }
   }

   std::vector<Token> toks_;
   std::size_t at_ = 0;
   Alg &alg_;
};

/** Stem and trailing number of an identifier, index -1 when absent. */
std::pair<std::string, int> split_ident(const std::string &w)
{
   std::size_t d = w.size();
   while (d > 0 && is_digit(w[d - 1]))
      --d;
   if (d == w.size())
      return {w, -1};
   return {w.substr(0, d), std::stoi(w.substr(d))};
}

int checked_index(int idx, int bound, const std::string &w, std::size_t pos)
{
   if (idx < 1 || idx > bound)
      throw IndexOutOfChart("'" + w + "' at position " + std::to_string(pos) + " is outside the chart");
   return idx;
}

/** Atoms the algebra does not know. */
struct NoAtoms
{
   [[noreturn]] static void bad(const std::string &what, std::size_t pos)
   {
      throw ParseError("unexpected " + what, pos);
   }
};

struct PolyAlg : NoAtoms
{
   using V = Poly;
   const std::vector<std::string> &names;

   V number(const Rat &c) const { return Poly::constant(static_cast<int>(names.size()), c); }
   V ident(const std::string &w, std::size_t pos) const
   {
      for (std::size_t i = 0; i < names.size(); ++i)
         if (names[i] == w)
            return Poly::variable(static_cast<int>(names.size()), static_cast<int>(i));
      bad("name '" + w + "'", pos);
   }
   V pw(int, const std::string &, std::size_t pos) const { bad("pw literal", pos); }
   V unit(std::size_t pos) const { bad("pw-unit", pos); }
   V delta(const std::string &, std::size_t pos) const { bad("delta literal", pos); }
   V add(const V &a, const V &b) const { return a + b; }
   V neg(const V &a) const { return -a; }
   V mul(const V &a, const V &b) const { return a * b; }
   V scale(const V &a, const Rat &c) const { return a * c; }
   V pow(const V &a, int e, std::size_t) const { return a.pow(e); }
};

struct FormAlg : NoAtoms
{
   using V = FormalForm;
   Chart chart;

   V number(const Rat &c) const { return FormalForm::function(chart, Poly::constant(chart.dim(), c)); }
   V ident(const std::string &w, std::size_t pos) const
   {
      auto [stem, idx] = split_ident(w);
      if (idx >= 0)
      {
         if (stem == "x")
            return FormalForm::function(chart, Poly::variable(chart.dim(), checked_index(idx, chart.n, w, pos) - 1));
         if (stem == "y")
            return FormalForm::function(
               chart, Poly::variable(chart.dim(), chart.n + checked_index(idx, chart.k, w, pos) - 1));
         Poly one = Poly::constant(chart.dim(), 1);
         if (stem == "dx")
            return FormalForm::monomial(chart, BiIndex(chart.n, chart.k, {checked_index(idx, chart.n, w, pos)}, {}), one);
         if (stem == "dy")
            return FormalForm::monomial(chart, BiIndex(chart.n, chart.k, {}, {checked_index(idx, chart.k, w, pos)}), one);
      }
      bad("name '" + w + "' in a form", pos);
   }
   V pw(int, const std::string &, std::size_t pos) const { bad("pw literal in a form", pos); }
   V unit(std::size_t pos) const { bad("pw-unit in a form", pos); }
   V delta(const std::string &, std::size_t pos) const { bad("delta literal in a form", pos); }
   V add(const V &a, const V &b) const { return a + b; }
   V neg(const V &a) const { return -a; }
   V mul(const V &a, const V &b) const { return wedge(a, b); }
   V scale(const V &a, const Rat &c) const { return a * c; }
   V pow(const V &a, int e, std::size_t pos) const
   {
      if (a.degree() != 0 && !a.is_zero())
         bad("power of a form of positive degree", pos);
      V out = number(1);
      for (int q = 0; q < e; ++q)
         out = wedge(out, a);
      return out;
   }
};

std::vector<std::string> split(std::string_view s, char sep)
{
   std::vector<std::string> out;
   std::size_t b = 0;
   for (std::size_t i = 0; i <= s.size(); ++i)
      if (i == s.size() || s[i] == sep)
      {
         out.emplace_back(s.substr(b, i - b));
         b = i + 1;
      }
   return out;
}

std::string trim(const std::string &s)
{
   std::size_t b = s.find_first_not_of(" \t\n"), e = s.find_last_not_of(" \t\n");
   return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<Rat> parse_tuple(const std::string &src, std::size_t pos)
{
   std::string s = trim(src);
   if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw ParseError("expected a parenthesized tuple", pos);
   std::vector<Rat> out;
   std::string inner = trim(s.substr(1, s.size() - 2));
   if (inner.empty())
      return out;
   for (const auto &part : split(inner, ','))
   {
      try
      {
         out.push_back(parse_rat(trim(part)));
      }
      catch (const Error &)
      {
         throw ParseError("malformed number '" + trim(part) + "'", pos);
      }
   }
   return out;
}

Exp to_exp(const std::vector<Rat> &v, std::size_t pos)
{
   Exp e;
   for (const auto &q : v)
   {
      if (q.get_den() != 1 || q < 0)
         throw ParseError("expected nonnegative integers", pos);
      e.push_back(static_cast<int>(q.get_num().get_si()));
   }
   return e;
}

PwPoly pw_from_content(const std::string &content, std::size_t pos)
{
   auto parts = split(content, ';');
   std::vector<Rat> breaks = parse_tuple(parts[0], pos);
   if (breaks.empty() && parts.size() == 1)
      return PwPoly();
   if (parts.size() != breaks.size())
      throw ParseError("pw literal needs one piece per interval", pos);
   std::vector<UPoly> pieces;
   static const std::vector<std::string> xname{"x"};
   for (std::size_t j = 1; j < parts.size(); ++j)
   {
      Poly p = parse_poly(parts[j], xname);
      std::vector<Rat> c(p.total_degree() + 1);
      for (const auto &[e, v] : p.terms())
         c[e[0]] = v;
      pieces.emplace_back(std::move(c));
   }
   try
   {
      return PwPoly(std::move(breaks), std::move(pieces));
   }
   catch (const Error &err)
   {
      throw ParseError(err.what(), pos);
   }
}

struct CTerm
{
   Rat c = 1;
   std::map<int, PwPoly> axes;
   bool unit = false;
   Exp L;
   BiIndex dual;
   bool delta = false;
   std::vector<Rat> point;
   Exp alpha;
   std::size_t pos = 0;
};

struct CurrentAlg : NoAtoms
{
   using V = std::vector<CTerm>;
   Chart chart;

   CTerm one(std::size_t pos) const
   {
      CTerm t;
      t.L = Exp(chart.k, 0);
      t.dual = BiIndex(chart.n, chart.k, {}, {});
      t.pos = pos;
      return t;
   }
   V number(const Rat &c) const
   {
      CTerm t = one(0);
      t.c = c;
      return {t};
   }
   V ident(const std::string &w, std::size_t pos) const
   {
      auto [stem, idx] = split_ident(w);
      CTerm t = one(pos);
      if (idx >= 0 && stem == "ys")
         t.L[checked_index(idx, chart.k, w, pos) - 1] = 1;
      else if (idx >= 0 && stem == "dxs")
         t.dual = BiIndex(chart.n, chart.k, {checked_index(idx, chart.n, w, pos)}, {});
      else if (idx >= 0 && stem == "dys")
         t.dual = BiIndex(chart.n, chart.k, {}, {checked_index(idx, chart.k, w, pos)});
      else
         bad("name '" + w + "' in a current", pos);
      return {t};
   }
   V pw(int axis, const std::string &content, std::size_t pos) const
   {
      CTerm t = one(pos);
      t.axes[checked_index(axis, chart.n, "pw" + std::to_string(axis), pos)] = pw_from_content(content, pos);
      return {t};
   }
   V unit(std::size_t pos) const
   {
      CTerm t = one(pos);
      t.unit = true;
      return {t};
   }
   V delta(const std::string &content, std::size_t pos) const
   {
      CTerm t = one(pos);
      t.delta = true;
      t.point.assign(chart.n, 0);
      t.alpha.assign(chart.n, 0);
      for (const auto &raw : split(content, ';'))
      {
         std::string f = trim(raw);
         auto eq = f.find('=');
         if (eq == std::string::npos)
            throw ParseError("delta field needs '='", pos);
         std::string key = trim(f.substr(0, eq));
         auto vals = parse_tuple(f.substr(eq + 1), pos);
         std::size_t want = key == "L" ? chart.k : chart.n;
         if (vals.size() != want)
            throw ParseError("delta field '" + key + "' has the wrong length", pos);
         if (key == "p")
            t.point = vals;
         else if (key == "a")
            t.alpha = to_exp(vals, pos);
         else if (key == "L")
            t.L = to_exp(vals, pos);
         else
            throw ParseError("unknown delta field '" + key + "'", pos);
      }
      return {t};
   }
   V add(V a, const V &b) const
   {
      a.insert(a.end(), b.begin(), b.end());
      return a;
   }
   V neg(V a) const
   {
      for (auto &t : a)
         t.c = -t.c;
      return a;
   }
   V scale(V a, const Rat &c) const
   {
      for (auto &t : a)
         t.c *= c;
      return a;
   }
   V mul(const V &a, const V &b) const
   {
      V out;
      for (const auto &x : a)
         for (const auto &y : b)
         {
            auto [s, dual] = merge_sign(x.dual, y.dual);
            if (s == 0 || x.c == 0 || y.c == 0)
               continue;
            CTerm t = x;
            t.c = x.c * y.c * s;
            t.dual = dual;
            for (const auto &[i, f] : y.axes)
            {
               auto it = t.axes.find(i);
               if (it == t.axes.end())
                  t.axes.emplace(i, f);
               else
                  it->second = it->second * f;
            }
            t.unit = x.unit || y.unit;
            for (int j = 0; j < chart.k; ++j)
               t.L[j] += y.L[j];
            if ((x.delta && exp_degree(y.L) > 0) || (y.delta && exp_degree(x.L) > 0))
               throw KindMismatch("delta literal multiplied by a ys factor");
            if (y.delta)
            {
               if (x.delta)
                  throw KindMismatch("product of two delta literals");
               t.delta = true;
               t.point = y.point;
               t.alpha = y.alpha;
            }
            if (t.delta && (!t.axes.empty() || t.unit))
               throw KindMismatch("delta literal multiplied by a pw factor");
            out.push_back(std::move(t));
         }
      return out;
   }
   V pow(const V &a, int e, std::size_t) const
   {
      V out = number(1);
      for (int q = 0; q < e; ++q)
         out = mul(out, a);
      return out;
   }
};

std::vector<CTerm> parse_terms(std::string_view src, const Chart &chart, int pairs_with)
{
   CurrentAlg alg;
   alg.chart = chart;
   Parser<CurrentAlg> p(src, alg);
   auto terms = p.parse();
   std::erase_if(terms, [](const CTerm &t) { return t.c == 0; });
   bool bare = std::all_of(terms.begin(), terms.end(), [](const CTerm &t) { return t.dual.degree() == 0; });
   if (pairs_with == 0 && bare)
      for (auto &t : terms)
         t.dual = BiIndex(chart.n, chart.k, {}, {}).complement();
   return terms;
}

int common_degree(const std::vector<CTerm> &terms, const Chart &chart)
{
   int r = -1;
   for (const auto &t : terms)
   {
      int rt = chart.dim() - t.dual.degree();
      if (r >= 0 && rt != r)
         throw DegreeMismatch("current terms pair with forms of different degrees");
      r = rt;
   }
   return r < 0 ? 0 : r;
}

DensityCurrent density_from(const std::vector<CTerm> &terms, const Chart &chart)
{
   DensityCurrent out(chart, common_degree(terms, chart));
   for (const auto &t : terms)
   {
      if (t.delta)
         throw KindMismatch("delta term in a density");
      std::vector<PwPoly> axes;
      for (int i = 1; i <= chart.n; ++i)
      {
         auto it = t.axes.find(i);
         if (it != t.axes.end())
            axes.push_back(it->second);
         else if (t.unit)
            axes.push_back(PwPoly::default_bump());
         else
            throw ParseError("density term gives no factor for axis " + std::to_string(i), t.pos);
      }
      out.add(t.dual, DensityCoeff::term(t.c, std::move(axes), t.L));
   }
   return out;
}

DeltaCurrent delta_from(const std::vector<CTerm> &terms, const Chart &chart)
{
   DeltaCurrent out(chart, common_degree(terms, chart));
   for (const auto &t : terms)
   {
      if (!t.delta)
         throw KindMismatch("density term in a delta current");
      out.add(DeltaKey{t.dual, t.point, t.alpha, t.L}, t.c);
   }
   return out;
}

std::string tuple_string(const std::vector<Rat> &v)
{
   std::string s = "(";
   for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + to_string(v[i]);
   return s + ")";
}

std::string tuple_string(const Exp &v)
{
   std::string s = "(";
   for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
   return s + ")";
}

std::string ystar_monomial(const Exp &L)
{
   std::string s;
   for (std::size_t j = 0; j < L.size(); ++j)
   {
      if (L[j] == 0)
         continue;
      if (!s.empty())
         s += '*';
      s += "ys" + std::to_string(j + 1);
      if (L[j] > 1)
         s += "^" + std::to_string(L[j]);
   }
   return s;
}

/** Appends "c*f1*f2 basis" with the sign folded into the separator. */
void append_term(std::string &out, const Rat &c, std::vector<std::string> factors,
                 const std::string &basis)
{
   Rat a = abs(c);
   if (a != 1 || factors.empty())
      factors.insert(factors.begin(), to_string(a));
   if (out.empty())
      out += c < 0 ? "-" : "";
   else
      out += c < 0 ? " - " : " + ";
   for (std::size_t i = 0; i < factors.size(); ++i)
      out += (i ? "*" : "") + factors[i];
   if (!basis.empty())
      out += " " + basis;
}

} // namespace

Poly parse_poly(std::string_view src, const std::vector<std::string> &names)
{
   PolyAlg alg{{}, names};
   Parser<PolyAlg> p(src, alg);
   return p.parse();
}

PwPoly parse_pw(std::string_view src)
{
   auto toks = lex(src);
   if (toks.size() != 2 || toks[0].kind != Tok::Pw)
      throw ParseError("expected a single pw literal", 0);
   return pw_from_content(toks[0].text, toks[0].pos);
}

FormalForm parse_form(std::string_view src, const Chart &chart)
{
   FormAlg alg;
   alg.chart = chart;
   Parser<FormAlg> p(src, alg);
   return p.parse();
}

Current parse_current(std::string_view src, const Chart &chart, int pairs_with)
{
   auto terms = parse_terms(src, chart, pairs_with);
   bool any_delta = std::any_of(terms.begin(), terms.end(), [](const CTerm &t) { return t.delta; });
   if (any_delta)
      return delta_from(terms, chart);
   return density_from(terms, chart);
}

DensityCurrent parse_density(std::string_view src, const Chart &chart, int pairs_with)
{
   return density_from(parse_terms(src, chart, pairs_with), chart);
}

DeltaCurrent parse_delta(std::string_view src, const Chart &chart, int pairs_with)
{
   return delta_from(parse_terms(src, chart, pairs_with), chart);
}

std::string to_string(const FormalForm &w)
{
   if (w.is_zero())
      return "0";
   const Chart &c = w.chart();
   auto name = [&](int v) { return xy_name(c.n, v); };
   std::string out;
   for (const auto &[bi, f] : w.terms())
   {
      if (!out.empty())
         out += " + ";
      out += "(" + to_string(f, name) + ")";
      if (bi.degree() > 0)
         out += " " + to_string(bi);
   }
   return out;
}

std::string to_string(const FormalFunction &f)
{
   int n = f.n();
   return "(" + to_string(f.poly(), [n](int v) { return xy_name(n, v); }) + ")";
}

std::string to_string(const DensityCurrent &e)
{
   std::string out;
   for (const auto &[dual, tau] : e.terms())
      for (const auto &t : tau.terms())
      {
         std::vector<std::string> factors;
         for (std::size_t i = 0; i < t.axes.size(); ++i)
            factors.push_back(to_string(t.axes[i], static_cast<int>(i) + 1));
         std::string ys = ystar_monomial(t.L);
         if (!ys.empty())
            factors.push_back("(" + ys + ")");
         append_term(out, t.c, std::move(factors), to_string(dual, true));
      }
   return out.empty() ? "0" : out;
}

std::string to_string(const DeltaCurrent &e)
{
   std::string out;
   for (const auto &[key, c] : e.terms())
      append_term(out, c,
                  {"delta[p=" + tuple_string(key.point) + ";a=" + tuple_string(key.alpha)
                   + ";L=" + tuple_string(key.L) + "]"},
                  to_string(key.dual, true));
   return out.empty() ? "0" : out;
}

std::string to_string(const GenFunction &t)
{
   std::string out = t.regular().is_zero() ? "" : to_string(t.regular());
   for (const auto &[key, c] : t.singular())
      append_term(out, c,
                  {"ev[p=" + tuple_string(key.point) + ";a=" + tuple_string(key.alpha)
                   + ";L=" + tuple_string(key.L) + "]"},
                  to_string(key.form_index));
   return out.empty() ? "0" : out;
}

std::string to_string(const Current &c)
{
   return std::visit([](const auto &x) { return to_string(x); }, c);
}

} // namespace fdr
