#include "quiverfg/homology.hpp"

#include <limits>

#include "quiverfg/error.hpp"

namespace qfg {

// ---------------------------------------------------------------- free modules

std::vector<std::size_t> free_offsets(const FDAlgebra& a, const std::vector<std::size_t>& gens, std::size_t v) {
  std::vector<std::size_t> off(gens.size() + 1, 0);
  for (std::size_t k = 0; k < gens.size(); ++k) off[k + 1] = off[k] + a.words_between(gens[k], v).size();
  return off;
}

std::size_t free_dim_at(const FDAlgebra& a, const std::vector<std::size_t>& gens, std::size_t v) {
  std::size_t d = 0;
  for (auto g : gens) d += a.words_between(g, v).size();
  return d;
}

Vector free_left_multiply(const FDAlgebra& a, const std::vector<std::size_t>& gens, const SparseVector& s,
                          std::size_t from, const Vector& y, std::size_t to) {
  const Field& f = a.field();
  auto off_from = free_offsets(a, gens, from);
  auto off_to = free_offsets(a, gens, to);
  Vector out(off_to.back());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& words = a.words_between(gens[k], from);
    for (std::size_t p = 0; p < words.size(); ++p) {
      const Scalar& c = y[off_from[k] + p];
      if (sgn(c) == 0) continue;
      for (const auto& [si, sc] : s) {
        if (a.basis(si).source != from || a.basis(si).target != to) continue;
        Scalar cc = f.mul(c, sc);
        for (const auto& [r, rc] : a.product(si, words[p])) f.add_mul(out[off_to[k] + a.position_between(r)], cc, rc);
      }
    }
  }
  return out;
}

Vector evaluate_on_free(const FDAlgebra& a, const std::vector<std::size_t>& gens, std::size_t v, const Vector& y,
                        const FDModule& n, const std::vector<Vector>& values) {
  const Field& f = a.field();
  auto off = free_offsets(a, gens, v);
  Vector out(n.dim(v));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& words = a.words_between(gens[k], v);
    for (std::size_t p = 0; p < words.size(); ++p) {
      const Scalar& c = y[off[k] + p];
      if (sgn(c) == 0) continue;
      Vector img = n.action(words[p]).apply(values[k]);
      for (std::size_t i = 0; i < img.size(); ++i)
        if (sgn(img[i]) != 0) f.add_mul(out[i], c, img[i]);
    }
  }
  return out;
}

Matrix free_map_block(const FDAlgebra& a, const FreeMap& fm, std::size_t v) {
  const Field& f = a.field();
  auto off_s = free_offsets(a, fm.source, v);
  auto off_t = free_offsets(a, fm.target, v);
  Matrix m(f, off_t.back(), off_s.back());
  for (std::size_t k = 0; k < fm.source.size(); ++k) {
    const auto& words = a.words_between(fm.source[k], v);
    for (std::size_t p = 0; p < words.size(); ++p)
      for (std::size_t l = 0; l < fm.target.size(); ++l)
        for (const auto& [e, c] : fm.entries[k][l])
          for (const auto& [r, rc] : a.product(words[p], e)) {
            Scalar& slot = m(off_t[l] + a.position_between(r), off_s[k] + p);
            f.add_mul(slot, c, rc);
          }
  }
  return m;
}

Vector apply_free_map(const FDAlgebra& a, const FreeMap& fm, std::size_t v, const Vector& y) {
  const Field& f = a.field();
  auto off_s = free_offsets(a, fm.source, v);
  auto off_t = free_offsets(a, fm.target, v);
  Vector out(off_t.back());
  for (std::size_t k = 0; k < fm.source.size(); ++k) {
    const auto& words = a.words_between(fm.source[k], v);
    for (std::size_t p = 0; p < words.size(); ++p) {
      const Scalar& yc = y[off_s[k] + p];
      if (sgn(yc) == 0) continue;
      for (std::size_t l = 0; l < fm.target.size(); ++l)
        for (const auto& [e, c] : fm.entries[k][l]) {
          Scalar cc = f.mul(yc, c);
          for (const auto& [r, rc] : a.product(words[p], e)) f.add_mul(out[off_t[l] + a.position_between(r)], cc, rc);
        }
    }
  }
  return out;
}

std::vector<SparseVector> decode_free_element(const FDAlgebra& a, const std::vector<std::size_t>& gens,
                                              std::size_t v, const Vector& y) {
  auto off = free_offsets(a, gens, v);
  std::vector<SparseVector> out(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& words = a.words_between(gens[k], v);
    for (std::size_t p = 0; p < words.size(); ++p)
      if (sgn(y[off[k] + p]) != 0) out[k].push_back({words[p], y[off[k] + p]});
  }
  return out;
}

namespace {

SparseVector sparse_product(const FDAlgebra& a, const SparseVector& x, const SparseVector& y) {
  const Field& f = a.field();
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, c] : x)
    for (const auto& [j, d] : y)
      for (const auto& [k, e] : a.product(i, j)) {
        Scalar& s = acc[k];
        s = f.add(s, f.mul(f.mul(c, d), e));
      }
  SparseVector out;
  for (auto& [k, s] : acc)
    if (sgn(s) != 0) out.push_back({k, s});
  return out;
}

void sparse_add(const Field& f, SparseVector& acc, const SparseVector& x) {
  std::map<std::size_t, Scalar> m;
  for (const auto& [k, s] : acc) m[k] = s;
  for (const auto& [k, s] : x) m[k] = f.add(m[k], s);
  acc.clear();
  for (auto& [k, s] : m)
    if (sgn(s) != 0) acc.push_back({k, s});
}

}  // namespace

FreeMap compose_free(const FDAlgebra& a, const FreeMap& first, const FreeMap& second) {
  FreeMap out;
  out.source = first.source;
  out.target = second.target;
  out.entries.assign(first.source.size(), std::vector<SparseVector>(second.target.size()));
  for (std::size_t k = 0; k < first.source.size(); ++k)
    for (std::size_t l = 0; l < first.target.size(); ++l) {
      if (first.entries[k][l].empty()) continue;
      for (std::size_t m = 0; m < second.target.size(); ++m) {
        if (second.entries[l][m].empty()) continue;
        sparse_add(a.field(), out.entries[k][m], sparse_product(a, first.entries[k][l], second.entries[l][m]));
      }
    }
  return out;
}

ModuleMap free_map_to_module_map(const AlgebraPtr& a, const FreeMap& f, const FDModule& src, const FDModule& tgt) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) blocks.push_back(free_map_block(*a, f, v));
  return ModuleMap(src, tgt, std::move(blocks));
}

// ---------------------------------------------------------------- resolutions

const std::vector<std::size_t>& ProjResolution::gens(std::size_t n) const {
  static const std::vector<std::size_t> empty;
  if (n >= gens_.size()) {
    if (!complete_) throw Error(ErrorCode::DegreeOverflow, "resolution term " + std::to_string(n) + " not computed");
    return empty;
  }
  return gens_[n];
}

FDModule ProjResolution::term(std::size_t n) const {
  auto it = cache_->terms.find(n);
  if (it != cache_->terms.end()) return it->second;
  FDModule t = free_module(algebra(), gens(n));
  cache_->terms.emplace(n, t);
  return t;
}

FDModule ProjResolution::syzygy(std::size_t n) const {
  if (n == 0) return module_;
  if (n >= syzygies_.size()) {
    if (complete_) return FDModule::zero(algebra());
    throw Error(ErrorCode::DegreeOverflow, "syzygy " + std::to_string(n) + " not computed");
  }
  return submodule(term(n - 1), syzygies_[n]).module;
}

ModuleMap ProjResolution::augmentation_map() const {
  return free_map_from_images(algebra(), gens(0), term(0), module_, augmentation_);
}

const LinearSolver& ProjResolution::solver(std::size_t n, std::size_t v) const {
  auto key = std::make_pair(n, v);
  auto it = cache_->solvers.find(key);
  if (it != cache_->solvers.end()) return it->second;
  Matrix block;
  if (n == 0) {
    block = augmentation_map().block(v);
  } else if (n < length()) {
    block = free_map_block(*algebra(), d_[n], v);
  } else {
    gens(n);  // throws when not computed
    block = Matrix(module_.field(), free_dim_at(*algebra(), gens(n - 1), v), 0);
  }
  return cache_->solvers.emplace(key, LinearSolver(block)).first->second;
}

ProjResolution ProjResolution::from_data(FDModule m, std::vector<std::vector<std::size_t>> gens, std::vector<FreeMap> d,
                                         std::vector<Vector> augmentation, bool complete) {
  ProjResolution r;
  r.module_ = std::move(m);
  r.gens_ = std::move(gens);
  r.d_ = std::move(d);
  r.augmentation_ = std::move(augmentation);
  r.complete_ = complete;
  return r;
}

ProjResolution min_proj_resolution(const FDModule& m, std::size_t cap) {
  ProjResolution r;
  r.module_ = m;
  const AlgebraPtr& a = m.algebra();
  r.syzygies_.push_back(full_subspace(m));
  auto tops = top_generators(m);
  std::vector<std::size_t> g0;
  for (auto& [v, vec] : tops) {
    g0.push_back(v);
    r.augmentation_.push_back(vec);
  }
  r.gens_.push_back(g0);
  r.d_.emplace_back();
  if (g0.empty()) {
    r.gens_.clear();
    r.complete_ = true;
    return r;
  }
  Subspace omega = kernel_subspace(r.augmentation_map());
  r.syzygies_.push_back(omega);
  for (std::size_t n = 1; n <= cap; ++n) {
    if (subspace_dim(omega) == 0) {
      r.complete_ = true;
      return r;
    }
    FDModule prev = r.term(n - 1);
    auto gens = relative_generators(prev, omega, zero_subspace(prev));
    FreeMap d;
    d.target = r.gens_[n - 1];
    for (auto& [v, vec] : gens) {
      d.source.push_back(v);
      d.entries.push_back(decode_free_element(*a, d.target, v, vec));
    }
    r.gens_.push_back(d.source);
    Subspace next;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) next.push_back(kernel_matrix(free_map_block(*a, d, v)));
    r.d_.push_back(std::move(d));
    omega = std::move(next);
    r.syzygies_.push_back(omega);
  }
  if (subspace_dim(omega) == 0) r.complete_ = true;
  return r;
}

ResolutionCheck verify_resolution(const ProjResolution& r) {
  ResolutionCheck c;
  const auto& a = *r.algebra();
  if (r.length() == 0) {
    c.exact = r.module().total_dim() == 0;
    return c;
  }
  ModuleMap eps = r.augmentation_map();
  if (!eps.is_surjective()) c.exact = false;
  for (std::size_t n = 1; n < r.length(); ++n) {
    const FreeMap& d = r.differential(n);
    for (const auto& row : d.entries)
      for (const auto& e : row)
        for (const auto& [i, s] : e)
          if (i < a.num_vertices() && sgn(s) != 0) c.minimal = false;
    std::size_t rk = 0, ker_prev = 0;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
      Matrix b = free_map_block(a, d, v);
      rk += rank(b);
      if (n == 1) {
        if (!(eps.block(v) * b).is_zero()) c.complexes = false;
        ker_prev += eps.block(v).cols() - rank(eps.block(v));
      } else {
        Matrix prev = free_map_block(a, r.differential(n - 1), v);
        if (!(prev * b).is_zero()) c.complexes = false;
        ker_prev += prev.cols() - rank(prev);
      }
    }
    if (rk != ker_prev) c.exact = false;
  }
  if (r.complete()) {
    // The last differential (or the augmentation) must be injective.
    std::size_t last = r.length() - 1;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
      Matrix b = last == 0 ? eps.block(v) : free_map_block(a, r.differential(last), v);
      if (rank(b) != b.cols()) c.exact = false;
    }
  }
  return c;
}

// ---------------------------------------------------------------- Ext

ExtComputer::ExtComputer(const ProjResolution& res, FDModule n) : res_(res), n_(std::move(n)) {
  if (!res_.algebra()->same_as(*n_.algebra())) throw Error(ErrorCode::AlgebraMismatch, "Ext over different algebras");
}

std::size_t ExtComputer::max_degree() const {
  if (res_.complete()) return std::numeric_limits<std::size_t>::max() / 2;
  return res_.length() < 2 ? 0 : res_.length() - 2;
}

std::size_t ExtComputer::cochain_dim(std::size_t deg) const {
  std::size_t d = 0;
  for (auto v : res_.gens(deg)) d += n_.dim(v);
  return d;
}

std::vector<Vector> ExtComputer::split(std::size_t deg, const Vector& cochain) const {
  std::vector<Vector> out;
  std::size_t pos = 0;
  for (auto v : res_.gens(deg)) {
    out.emplace_back(cochain.begin() + static_cast<long>(pos), cochain.begin() + static_cast<long>(pos + n_.dim(v)));
    pos += n_.dim(v);
  }
  return out;
}

Vector ExtComputer::join(std::size_t deg, const std::vector<Vector>& values) const {
  Vector out;
  (void)deg;
  for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Matrix ExtComputer::coboundary(std::size_t deg) const {
  auto it = coboundaries_.find(deg);
  if (it != coboundaries_.end()) return it->second;
  if (deg == 0) throw Error(ErrorCode::DegreeOverflow, "no coboundary into degree 0");
  const auto& rows_g = res_.gens(deg);
  const auto& cols_g = res_.gens(deg - 1);
  Matrix m(n_.field(), cochain_dim(deg), cochain_dim(deg - 1));
  if (deg < res_.length()) {
    const FreeMap& d = res_.differential(deg);
    std::size_t r0 = 0;
    for (std::size_t k = 0; k < rows_g.size(); ++k) {
      std::size_t c0 = 0;
      for (std::size_t l = 0; l < cols_g.size(); ++l) {
        if (!d.entries[k][l].empty()) m.set_block(r0, c0, n_.action_of(d.entries[k][l], cols_g[l], rows_g[k]));
        c0 += n_.dim(cols_g[l]);
      }
      r0 += n_.dim(rows_g[k]);
    }
  }
  coboundaries_.emplace(deg, m);
  return m;
}

const ExtComputer::Degree& ExtComputer::degree(std::size_t deg) const {
  auto it = cache_.find(deg);
  if (it != cache_.end()) return it->second;
  if (!res_.has_term(deg + 1))
    throw Error(ErrorCode::DegreeOverflow, "Ext^" + std::to_string(deg) + " needs a longer resolution");
  const Field& f = n_.field();
  const std::size_t cd = cochain_dim(deg);
  std::vector<Vector> z = kernel_basis(coboundary(deg + 1));
  Degree d;
  std::vector<Vector> cols;
  if (deg >= 1) {
    Matrix b = image_matrix(coboundary(deg));
    for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
  }
  d.boundary_rank = cols.size();
  SpanBasis span(f, cd);
  for (const auto& c : cols) span.add(c);
  for (auto& v : z)
    if (span.add(v)) d.reps.push_back(v);
  for (const auto& r : d.reps) cols.push_back(r);
  d.boundary_and_reps = Matrix::from_columns(f, cd, cols);
  d.solver.emplace(d.boundary_and_reps);
  return cache_.emplace(deg, std::move(d)).first->second;
}

std::size_t ExtComputer::dim(std::size_t deg) const { return degree(deg).reps.size(); }

const std::vector<Vector>& ExtComputer::basis(std::size_t deg) const { return degree(deg).reps; }

Vector ExtComputer::class_of(std::size_t deg, const Vector& cocycle) const {
  const Degree& d = degree(deg);
  auto sol = d.solver->solve(cocycle);
  if (!sol) throw Error(ErrorCode::InvalidMap, "cochain is not a cocycle");
  return Vector(sol->begin() + static_cast<long>(d.boundary_rank), sol->end());
}

bool ExtComputer::is_coboundary(std::size_t deg, const Vector& cocycle) const { return is_zero(class_of(deg, cocycle)); }

bool ExtComputer::is_cocycle(std::size_t deg, const Vector& cochain) const {
  if (!res_.has_term(deg + 1)) throw Error(ErrorCode::DegreeOverflow, "cocycle test needs a longer resolution");
  return is_zero(coboundary(deg + 1).apply(cochain));
}

ExtTable ext_dims(const FDModule& m, const FDModule& n, std::size_t cap) {
  ProjResolution r = min_proj_resolution(m, cap + 1);
  ExtComputer e(r, n);
  ExtTable t;
  for (std::size_t i = 0; i <= cap; ++i) t.dims.push_back(e.dim(i));
  return t;
}

// ---------------------------------------------------------------- Yoneda

ChainLift lift_cocycle(const ProjResolution& source, std::size_t p, const std::vector<Vector>& phi,
                       const ProjResolution& target, std::size_t steps) {
  const auto& a = *source.algebra();
  ChainLift lifts(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    if (!source.has_term(p + i) || !target.has_term(i))
      throw Error(ErrorCode::DegreeOverflow, "lift beyond the computed resolutions");
    const auto& sg = source.gens(p + i);
    lifts[i].resize(sg.size());
    for (std::size_t k = 0; k < sg.size(); ++k) {
      const std::size_t v = sg[k];
      Vector z;
      if (i == 0) {
        z = phi[k];
      } else {
        const auto& prev_gens = target.gens(i - 1);
        z = Vector(free_dim_at(a, prev_gens, v));
        const FreeMap& d = source.differential(p + i);
        const auto& src_prev = source.gens(p + i - 1);
        for (std::size_t l = 0; l < src_prev.size(); ++l) {
          if (d.entries[k][l].empty()) continue;
          z = add(a.field(), z, free_left_multiply(a, prev_gens, d.entries[k][l], src_prev[l], lifts[i - 1][l], v));
        }
      }
      if (is_zero(z)) {
        lifts[i][k] = Vector(free_dim_at(a, target.gens(i), v));
        continue;
      }
      auto sol = target.solver(i, v).solve(z);
      if (!sol) throw Error(ErrorCode::InvalidMap, "map does not lift: input is not a cocycle");
      lifts[i][k] = std::move(*sol);
    }
  }
  return lifts;
}

std::vector<Vector> yoneda_compose(const ProjResolution& pm, std::size_t p, const std::vector<Vector>& eta,
                                   const ProjResolution& qn, std::size_t q, const std::vector<Vector>& theta,
                                   const FDModule& l) {
  ChainLift lifts = lift_cocycle(pm, p, eta, qn, q);
  const auto& a = *pm.algebra();
  const auto& g = pm.gens(p + q);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < g.size(); ++k) out.push_back(evaluate_on_free(a, qn.gens(q), g[k], lifts[q][k], l, theta));
  return out;
}

// ---------------------------------------------------------------- dimensions

std::string ProjDimResult::to_string() const {
  switch (kind) {
    case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
    case Kind::AtLeast: return "AtLeast(" + std::to_string(value) + ")";
    case Kind::InfinitePeriodic:
      return "InfinitePeriodic(period=" + std::to_string(period) + ", offset=" + std::to_string(offset) + ")";
  }
  return "?";
}

ProjDimResult projdim_of(const ProjResolution& r, std::size_t cap) {
  if (r.complete()) return ProjDimResult::finite(r.length() == 0 ? 0 : r.length() - 1);
  std::vector<FDModule> syz;
  for (std::size_t j = 0; j < r.syzygies_computed(); ++j) {
    syz.push_back(r.syzygy(j));
    for (std::size_t i = 0; i < j; ++i)
      if (syz[i].dims() == syz[j].dims() && is_isomorphic(syz[i], syz[j])) return ProjDimResult::periodic(j - i, i);
  }
  return ProjDimResult::at_least(cap);
}

ProjDimResult projdim(const FDModule& m, std::size_t cap) { return projdim_of(min_proj_resolution(m, cap), cap); }

ProjDimResult injdim(const FDModule& m, std::size_t cap) { return projdim(dual(m), cap); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

GorensteinResult is_gorenstein(const AlgebraPtr& a, std::size_t cap) {
  GorensteinResult g;
  g.cap = cap;
  g.left = projdim(dual(regular_module(a)), cap);
  g.right = projdim(dual(regular_module(a->opposite())), cap);
  if (g.left.is_finite() && g.right.is_finite()) g.verdict = Verdict::Yes;
  else if (g.left.is_infinite() || g.right.is_infinite()) g.verdict = Verdict::No;
  else g.verdict = Verdict::Unknown;
  return g;
}

}  // namespace qfg
