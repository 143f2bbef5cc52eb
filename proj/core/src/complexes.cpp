#include "fdr/complexes.hpp"
#include "fdr/errors.hpp"

namespace fdr {

int FiniteComplex::dim(int degree) const
{
   if (degree < lo || degree > hi())
      return 0;
   return static_cast<int>(labels[degree - lo].size());
}

RatMatrix FiniteComplex::coboundary(int degree) const
{
   if (degree < lo || degree > hi())
      return RatMatrix(dim(degree + 1), dim(degree));
   return d[degree - lo];
}

void FiniteComplex::validate() const
{
   if (d.size() != labels.size())
      throw ShapeMismatch("complex needs one coboundary per degree");
   for (int j = lo; j <= hi(); ++j)
   {
      const RatMatrix &m = d[j - lo];
      if (m.rows() != dim(j + 1) || m.cols() != dim(j))
         throw ShapeMismatch("coboundary in degree " + std::to_string(j) + " has the wrong shape");
   }
}

bool FiniteComplex::d_squared_zero() const
{
   for (int j = lo; j < hi(); ++j)
      if (!(coboundary(j + 1) * coboundary(j)).is_zero())
         return false;
   return true;
}

namespace {

std::string monomial_label(const Chart &c, const Exp &e, const BiIndex &bi)
{
   std::string m = to_string(Poly::monomial(c.dim(), e), [&](int v) { return xy_name(c.n, v); });
   if (bi.degree() == 0)
      return m;
   return m + " " + to_string(bi);
}

} // namespace

FormBasis::FormBasis(const Chart &chart, int cap_x) : chart_(chart), cap_x_(cap_x)
{
   int top = chart.dim();
   elems_.resize(top + 1);
   labels_.resize(top + 1);
   index_.resize(top + 1);
   for (int r = 0; r <= top; ++r)
      for (const auto &bi : enumerate_bi(chart.n, chart.k, r))
      {
         int bx = cap_x - bi.xpart().size(), by = chart.cap - bi.ypart().size();
         if (bx < 0 || by < 0)
            continue;
         for (const auto &beta : exponents_up_to(chart.n, bx))
            for (const auto &M : exponents_up_to(chart.k, by))
            {
               Exp e = beta;
               e.insert(e.end(), M.begin(), M.end());
               index_[r][{bi, e}] = static_cast<int>(elems_[r].size());
               elems_[r].push_back(FormalForm::monomial(chart, bi, Poly::monomial(chart.dim(), e)));
               labels_[r].push_back(monomial_label(chart, e, bi));
            }
      }
}

std::vector<Rat> FormBasis::coords(const FormalForm &w) const
{
   int r = w.degree();
   if (w.is_zero())
      return std::vector<Rat>(r >= 0 && r < static_cast<int>(elems_.size()) ? elems_[r].size() : 0);
   if (!(w.chart() == chart_))
      throw DimensionMismatch("form basis: chart mismatch");
   std::vector<Rat> out(elems_.at(r).size());
   for (const auto &[bi, f] : w.terms())
      for (const auto &[e, c] : f.terms())
      {
         auto it = index_[r].find({bi, e});
         if (it == index_[r].end())
            throw RepresentationOverflow("form leaves the truncated basis");
         out[it->second] += c;
      }
   return out;
}

std::optional<std::vector<Rat>> spline_coords(const PwPoly &f, int degree, int window)
{
   int m = window - degree;
   if (m <= 0)
      return std::nullopt;
   if (f.is_zero())
      return std::vector<Rat>(m);
   std::vector<Rat> grid;
   for (int t = 0; t <= window; ++t)
      grid.push_back(t);
   for (const auto &b : f.breaks())
      if (b.get_den() != 1 || b < 0 || b > window)
         return std::nullopt;
   int stride = degree + 1;
   auto flatten = [&](const PwPoly &g) -> std::optional<std::vector<Rat>> {
      std::vector<Rat> v;
      for (const auto &p : g.pieces_on(grid))
      {
         if (p.degree() > degree)
            return std::nullopt;
         for (int q = 0; q < stride; ++q)
            v.push_back(p.coeff(q));
      }
      return v;
   };
   auto rhs = flatten(f);
   if (!rhs)
      return std::nullopt;
   RatMatrix a(window * stride, m);
   for (int j = 0; j < m; ++j)
   {
      auto col = *flatten(PwPoly::bspline(degree, j));
      for (int i = 0; i < a.rows(); ++i)
         a(i, j) = col[i];
   }
   return solve(a, *rhs);
}

DensityBasis::DensityBasis(const Chart &chart, int window) : chart_(chart), window_(window)
{
   int top = chart.dim();
   elems_.resize(top + 1);
   labels_.resize(top + 1);
   index_.resize(top + 1);
   for (int r = 0; r <= top; ++r)
      for (const auto &dual : enumerate_bi(chart.n, chart.k, top - r))
      {
         int ybudget = chart.cap - (chart.k - dual.ypart().size());
         if (ybudget < 0)
            continue;
         std::vector<int> degs(chart.n), counts(chart.n);
         for (int i = 0; i < chart.n; ++i)
         {
            degs[i] = dual.xpart().contains(i + 1) ? 2 : 3;
            counts[i] = std::max(0, window - degs[i]);
         }
         std::vector<std::vector<int>> tuples{{}};
         for (int i = 0; i < chart.n; ++i)
         {
            std::vector<std::vector<int>> next;
            for (const auto &t : tuples)
               for (int j = 0; j < counts[i]; ++j)
               {
                  auto u = t;
                  u.push_back(j);
                  next.push_back(std::move(u));
               }
            tuples = std::move(next);
         }
         for (const auto &sp : tuples)
            for (const auto &L : exponents_up_to(chart.k, ybudget))
            {
               std::vector<PwPoly> axes;
               std::string lbl;
               for (int i = 0; i < chart.n; ++i)
               {
                  axes.push_back(PwPoly::bspline(degs[i], sp[i]));
                  lbl += (lbl.empty() ? "" : "*") + std::string("N") + std::to_string(degs[i]) + "_"
                         + std::to_string(sp[i]) + "(x" + std::to_string(i + 1) + ")";
               }
               for (int j = 0; j < chart.k; ++j)
                  if (L[j] > 0)
                     lbl += (lbl.empty() ? "" : "*") + std::string("ys") + std::to_string(j + 1)
                            + (L[j] > 1 ? "^" + std::to_string(L[j]) : "");
               if (lbl.empty())
                  lbl = "1";
               if (dual.degree() > 0)
                  lbl += " " + to_string(dual, true);
               index_[r][Key{dual, sp, L}] = static_cast<int>(elems_[r].size());
               elems_[r].push_back(DensityCurrent::basis(chart, dual, DensityCoeff::term(1, axes, L)));
               labels_[r].push_back(lbl);
            }
      }
}

const std::optional<std::vector<Rat>> &DensityBasis::axis_coords(int degree, const PwPoly &f) const
{
   std::lock_guard<std::mutex> g(cache_->lock);
   auto key = std::make_pair(degree, f);
   auto it = cache_->coords.find(key);
   if (it == cache_->coords.end())
      it = cache_->coords.emplace(key, spline_coords(f, degree, window_)).first;
   return it->second;
}

std::vector<Rat> DensityBasis::coords(const DensityCurrent &e) const
{
   int r = e.degree();
   if (e.is_zero())
      return std::vector<Rat>(r >= 0 && r < static_cast<int>(elems_.size()) ? elems_[r].size() : 0);
   if (!(e.chart() == chart_))
      throw DimensionMismatch("density basis: chart mismatch");
   std::vector<Rat> out(elems_.at(r).size());
   for (const auto &[dual, tau] : e.terms())
      for (const auto &t : tau.terms())
      {
         std::vector<std::map<int, Rat>> per_axis;
         for (int i = 0; i < chart_.n; ++i)
         {
            const auto &c = axis_coords(dual.xpart().contains(i + 1) ? 2 : 3, t.axes[i]);
            if (!c)
               throw RepresentationOverflow("density leaves the spline window basis");
            std::map<int, Rat> nz;
            for (std::size_t j = 0; j < c->size(); ++j)
               if ((*c)[j] != 0)
                  nz[static_cast<int>(j)] = (*c)[j];
            per_axis.push_back(std::move(nz));
         }
         std::vector<std::pair<std::vector<int>, Rat>> acc{{{}, t.c}};
         for (const auto &nz : per_axis)
         {
            std::vector<std::pair<std::vector<int>, Rat>> next;
            for (const auto &[sp, c] : acc)
               for (const auto &[j, v] : nz)
               {
                  auto u = sp;
                  u.push_back(j);
                  next.emplace_back(std::move(u), c * v);
               }
            acc = std::move(next);
         }
         for (const auto &[sp, c] : acc)
         {
            auto it = index_[r].find(Key{dual, sp, t.L});
            if (it == index_[r].end())
               throw RepresentationOverflow("density leaves the spline window basis");
            out[it->second] += c;
         }
      }
   return out;
}

namespace {

template <class Elems, class Fn>
RatMatrix columns(int rows, const Elems &elems, Fn image)
{
   RatMatrix m(rows, static_cast<int>(elems.size()));
   for (int j = 0; j < m.cols(); ++j)
   {
      std::vector<Rat> v = image(elems[j]);
      if (static_cast<int>(v.size()) != rows)
         throw ShapeMismatch("image has the wrong number of coordinates");
      for (int i = 0; i < rows; ++i)
         m(i, j) = v[i];
   }
   return m;
}

FiniteComplex assemble_forms(const Chart &chart, int cap_x, bool augmented)
{
   FormBasis fb(chart, cap_x);
   int top = chart.dim();
   FiniteComplex c;
   c.lo = augmented ? -1 : 0;
   if (augmented)
   {
      c.labels.push_back({"1"});
      RatMatrix eps(static_cast<int>(fb.elements(0).size()), 1);
      auto v = fb.coords(FormalForm::function(chart, Poly::constant(chart.dim(), 1)));
      for (int i = 0; i < eps.rows(); ++i)
         eps(i, 0) = v[i];
      c.d.push_back(eps);
   }
   for (int r = 0; r <= top; ++r)
   {
      c.labels.push_back(fb.labels(r));
      int rows = r < top ? static_cast<int>(fb.elements(r + 1).size()) : 0;
      if (r < top)
         c.d.push_back(columns(rows, fb.elements(r), [&](const FormalForm &w) { return fb.coords(d(w)); }));
      else
         c.d.emplace_back(0, static_cast<int>(fb.elements(r).size()));
   }
   return c;
}

FiniteComplex assemble_density(const Chart &chart, int window, bool augmented)
{
   DensityBasis db(chart, window);
   int top = chart.dim();
   FiniteComplex c;
   c.lo = -top;
   for (int r = top; r >= 0; --r)
   {
      c.labels.push_back(db.labels(r));
      int cols = static_cast<int>(db.elements(r).size());
      if (r > 0)
      {
         int rows = static_cast<int>(db.elements(r - 1).size());
         c.d.push_back(columns(rows, db.elements(r), [&](const DensityCurrent &e) {
            return db.coords(d_density(e));
         }));
      }
      else if (augmented)
         c.d.push_back(columns(1, db.elements(0), [](const DensityCurrent &e) {
            return std::vector<Rat>{zeta(e)};
         }));
      else
         c.d.emplace_back(0, cols);
   }
   if (augmented)
   {
      c.labels.push_back({"1"});
      c.d.emplace_back(0, 1);
   }
   return c;
}

} // namespace

FiniteComplex assemble(int n, int k, int cap_x, int cap_y, ComplexKind kind, bool augmented,
                       int window)
{
   if (n < 0 || k < 0 || cap_x < 0 || cap_y < 0 || window < 0)
      throw DimensionMismatch("assemble: negative dimension or cap");
   Chart chart{n, k, cap_y};
   FiniteComplex c;
   switch (kind)
   {
   case ComplexKind::Forms: c = assemble_forms(chart, cap_x, augmented); break;
   case ComplexKind::Densities: c = assemble_density(chart, window, augmented); break;
   case ComplexKind::Distributions: c = transpose(assemble_forms(chart, cap_x, augmented)); break;
   case ComplexKind::Generalized: c = transpose(assemble_density(chart, window, augmented)); break;
   default: throw UnsupportedKind("assemble: unsupported complex kind " + to_string(kind));
   }
   c.validate();
   return c;
}

std::vector<int> betti(const FiniteComplex &c)
{
   std::vector<int> ranks;
   for (const auto &m : c.d)
      ranks.push_back(rank(m));
   std::vector<int> b;
   for (int i = 0; i < c.size(); ++i)
      b.push_back(c.dim(c.lo + i) - ranks[i] - (i > 0 ? ranks[i - 1] : 0));
   return b;
}

FiniteComplex transpose(const FiniteComplex &c)
{
   c.validate();
   FiniteComplex t;
   t.lo = -c.hi();
   for (int j = t.lo; j <= -c.lo; ++j)
   {
      std::vector<std::string> lbl;
      for (const auto &s : c.labels[-j - c.lo])
         lbl.push_back("<" + s + ">*");
      t.labels.push_back(std::move(lbl));
      RatMatrix m = c.coboundary(-j - 1).transposed();
      if (j % 2)
         m *= Rat(-1);
      t.d.push_back(std::move(m));
   }
   return t;
}

namespace {

RatMatrix h_at(const FiniteComplex &c, const HomotopyMatrices &h, int degree)
{
   if (degree < c.lo || degree > c.hi())
      return RatMatrix(c.dim(degree - 1), c.dim(degree));
   return h[degree - c.lo];
}

} // namespace

HomotopyMatrices transpose(const FiniteComplex &c, const HomotopyMatrices &h)
{
   if (static_cast<int>(h.size()) != c.size())
      throw ShapeMismatch("homotopy needs one matrix per degree");
   HomotopyMatrices out;
   for (int j = -c.hi(); j <= -c.lo; ++j)
   {
      RatMatrix m = h_at(c, h, 1 - j).transposed();
      if ((j - 1) % 2)
         m *= Rat(-1);
      out.push_back(std::move(m));
   }
   return out;
}

HomotopyMatrices homotopy_matrices(const Contraction<FormalForm> &c, int cap_x, bool augmented)
{
   FormBasis fb(c.chart, cap_x);
   int top = c.chart.dim();
   HomotopyMatrices h;
   if (augmented)
      h.emplace_back(0, 1);
   for (int r = 0; r <= top; ++r)
   {
      const auto &el = fb.elements(r);
      if (r == 0)
      {
         if (augmented)
            h.push_back(columns(1, el, [&](const FormalForm &w) {
               return std::vector<Rat>{c.augment_out(w)};
            }));
         else
            h.emplace_back(0, static_cast<int>(el.size()));
         continue;
      }
      int rows = static_cast<int>(fb.elements(r - 1).size());
      h.push_back(columns(rows, el, [&](const FormalForm &w) { return fb.coords(c.h(w)); }));
   }
   return h;
}

HomotopyMatrices homotopy_matrices(const Contraction<DensityCurrent> &c, int window,
                                   bool augmented)
{
   DensityBasis db(c.chart, window);
   int top = c.chart.dim();
   HomotopyMatrices h;
   for (int r = top; r >= 0; --r)
   {
      const auto &el = db.elements(r);
      if (r == top)
      {
         h.emplace_back(0, static_cast<int>(el.size()));
         continue;
      }
      int rows = static_cast<int>(db.elements(r + 1).size());
      h.push_back(columns(rows, el, [&](const DensityCurrent &e) { return db.coords(c.h(e)); }));
   }
   if (augmented)
   {
      auto v = db.coords(c.augment_in(1));
      RatMatrix alpha(static_cast<int>(v.size()), 1);
      for (int i = 0; i < alpha.rows(); ++i)
         alpha(i, 0) = v[i];
      h.push_back(alpha);
   }
   return h;
}

CertifyReport certify_strong_exactness(const FiniteComplex &c, const HomotopyMatrices &h,
                                       const std::vector<RatMatrix> &projector)
{
   c.validate();
   if (static_cast<int>(h.size()) != c.size())
      throw ShapeMismatch("homotopy needs one matrix per degree");
   if (!projector.empty() && static_cast<int>(projector.size()) != c.size())
      throw ShapeMismatch("projector needs one matrix per degree");
   for (int j = c.lo; j <= c.hi(); ++j)
   {
      const RatMatrix &hj = h[j - c.lo];
      if (hj.rows() != c.dim(j - 1) || hj.cols() != c.dim(j))
         throw ShapeMismatch("homotopy in degree " + std::to_string(j) + " has the wrong shape");
   }
   auto fail = [&](int j, const char *what, const RatMatrix &defect) {
      CertifyReport rep;
      rep.ok = false;
      rep.degree = j;
      rep.failure = what;
      for (int col = 0; col < defect.cols(); ++col)
      {
         bool nz = false;
         for (int i = 0; i < defect.rows() && !nz; ++i)
            nz = defect(i, col) != 0;
         if (nz)
         {
            rep.witness.assign(defect.cols(), 0);
            rep.witness[col] = 1;
            rep.witness_label = c.labels[j - c.lo][col];
            break;
         }
      }
      return rep;
   };
   for (int j = c.lo; j <= c.hi(); ++j)
   {
      RatMatrix dj = c.coboundary(j);
      RatMatrix lhs = c.coboundary(j - 1) * h_at(c, h, j) + h_at(c, h, j + 1) * dj;
      RatMatrix rhs = RatMatrix::identity(c.dim(j));
      if (!projector.empty())
      {
         const RatMatrix &p = projector[j - c.lo];
         if (p.rows() != c.dim(j) || p.cols() != c.dim(j))
            throw ShapeMismatch("projector in degree " + std::to_string(j) + " has the wrong shape");
         rhs -= p;
      }
      if (!(lhs == rhs))
         return fail(j, "dh+hd", lhs - rhs);
      RatMatrix dhd = dj * h_at(c, h, j + 1) * dj;
      if (!(dhd == dj))
         return fail(j, "dhd", dhd - dj);
   }
   return {};
}

} // namespace fdr
