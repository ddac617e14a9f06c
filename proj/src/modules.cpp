#include "quiverfg/modules.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "quiverfg/error.hpp"

namespace qfg {

namespace {

std::mutex& action_mutex() {
  static std::mutex m;
  return m;
}

Matrix span_matrix(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
  if (cols.empty()) return Matrix(f, rows, 0);
  return image_matrix(Matrix::from_columns(f, rows, cols));
}

}  // namespace

// ---------------------------------------------------------------- FDModule

FDModule::FDModule(AlgebraPtr a, std::vector<std::size_t> dims, std::vector<Matrix> arrows, bool validate) {
  if (!a) throw Error(ErrorCode::AlgebraMismatch, "module without algebra");
  if (dims.size() != a->num_vertices()) throw Error(ErrorCode::DimensionMismatch, "dimension vector length");
  if (arrows.size() != a->num_arrows()) throw Error(ErrorCode::DimensionMismatch, "number of arrow matrices");
  for (std::size_t x = 0; x < arrows.size(); ++x) {
    const auto& ar = a->quiver().arrows[x];
    if (arrows[x].rows() != dims[ar.target] || arrows[x].cols() != dims[ar.source])
      throw Error(ErrorCode::DimensionMismatch, "matrix of arrow '" + ar.label + "' has the wrong shape");
    if (!(arrows[x].field() == a->field())) throw Error(ErrorCode::FieldMismatch, "arrow matrix field");
  }
  d_ = std::make_shared<Data>();
  d_->algebra = std::move(a);
  d_->dims = std::move(dims);
  d_->arrows = std::move(arrows);
  d_->offsets.resize(d_->dims.size());
  for (std::size_t v = 0; v < d_->dims.size(); ++v) {
    d_->offsets[v] = d_->total;
    d_->total += d_->dims[v];
  }
  d_->actions.resize(d_->algebra->dim());
  if (validate && !check_relations())
    throw Error(ErrorCode::InvalidMap, "arrow matrices do not satisfy the relations of the algebra");
}

FDModule FDModule::zero(AlgebraPtr a) {
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < a->num_arrows(); ++x) arrows.emplace_back(a->field(), 0, 0);
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  return FDModule(std::move(a), std::move(dims), std::move(arrows), false);
}

FDModule FDModule::named(std::string n) const {
  FDModule m = *this;
  auto copy = std::make_shared<Data>(*d_);
  copy->name = std::move(n);
  m.d_ = std::move(copy);
  return m;
}

const Matrix& FDModule::action(std::size_t i) const {
  {
    std::lock_guard<std::mutex> lock(action_mutex());
    if (d_->actions[i]) return *d_->actions[i];
  }
  const auto& a = *d_->algebra;
  const auto& b = a.basis(i);
  Matrix m;
  if (b.word.empty()) {
    m = Matrix::identity(field(), d_->dims[b.source]);
  } else if (a.prefix(i) < a.dim()) {
    m = d_->arrows[b.word.back()] * action(a.prefix(i));
  } else {
    m = Matrix::identity(field(), d_->dims[b.source]);
    for (auto x : b.word) m = d_->arrows[x] * m;
  }
  std::lock_guard<std::mutex> lock(action_mutex());
  if (!d_->actions[i]) d_->actions[i] = std::move(m);
  return *d_->actions[i];
}

Vector FDModule::apply(std::size_t i, const Vector& v) const {
  Vector r = v;
  for (auto x : d_->algebra->basis(i).word) r = d_->arrows[x].apply(r);
  return r;
}

Matrix FDModule::action_of(const SparseVector& s, std::size_t from, std::size_t to) const {
  Matrix m(field(), d_->dims[to], d_->dims[from]);
  const auto& a = *d_->algebra;
  for (const auto& [i, c] : s) {
    if (a.basis(i).source != from || a.basis(i).target != to || sgn(c) == 0) continue;
    const Matrix& act = action(i);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t k = 0; k < m.cols(); ++k)
        if (sgn(act(r, k)) != 0) field().add_mul(m(r, k), c, act(r, k));
  }
  return m;
}

Matrix FDModule::total_action(const Vector& element) const {
  Matrix m(field(), d_->total, d_->total);
  const auto& a = *d_->algebra;
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (sgn(element[i]) == 0) continue;
    const auto& b = a.basis(i);
    const Matrix& act = action(i);
    for (std::size_t r = 0; r < act.rows(); ++r)
      for (std::size_t k = 0; k < act.cols(); ++k)
        if (sgn(act(r, k)) != 0)
          field().add_mul(m(d_->offsets[b.target] + r, d_->offsets[b.source] + k), element[i], act(r, k));
  }
  return m;
}

bool FDModule::check_relations() const {
  const auto& a = *d_->algebra;
  for (std::size_t x = 0; x < a.num_arrows(); ++x) {
    const auto& ar = a.quiver().arrows[x];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.basis(i).target != ar.source) continue;
      std::size_t s = a.basis(i).source;
      Matrix lhs = d_->arrows[x] * action(i);
      Matrix rhs = action_of(a.product(a.arrow_basis_index(x), i), s, ar.target);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(FDModule source, FDModule target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  if (!source_.algebra()->same_as(*target_.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "module map between modules over different algebras");
  if (blocks_.size() != source_.dims().size()) throw Error(ErrorCode::DimensionMismatch, "module map block count");
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v))
      throw Error(ErrorCode::DimensionMismatch, "module map block shape");
}

ModuleMap ModuleMap::zero(const FDModule& source, const FDModule& target) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.dims().size(); ++v) blocks.emplace_back(source.field(), target.dim(v), source.dim(v));
  return ModuleMap(source, target, std::move(blocks));
}

ModuleMap ModuleMap::identity(const FDModule& m) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < m.dims().size(); ++v) blocks.push_back(Matrix::identity(m.field(), m.dim(v)));
  return ModuleMap(m, m, std::move(blocks));
}

Matrix ModuleMap::total() const {
  Matrix m(source_.field(), target_.total_dim(), source_.total_dim());
  for (std::size_t v = 0; v < blocks_.size(); ++v) m.set_block(target_.offset(v), source_.offset(v), blocks_[v]);
  return m;
}

ModuleMap ModuleMap::after(const ModuleMap& other) const {
  if (other.target_.total_dim() != source_.total_dim() || other.target_.dims() != source_.dims())
    throw Error(ErrorCode::DimensionMismatch, "composition of incompatible maps");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] * other.blocks_[v]);
  return ModuleMap(other.source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + o.blocks_[v]);
  return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] - o.blocks_[v]);
  return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::scaled(const Scalar& s) const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
  return ModuleMap(source_, target_, std::move(blocks));
}

bool ModuleMap::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

bool ModuleMap::commutes() const {
  const auto& a = *source_.algebra();
  for (std::size_t x = 0; x < a.num_arrows(); ++x) {
    const auto& ar = a.quiver().arrows[x];
    if (target_.arrow(x) * blocks_[ar.source] != blocks_[ar.target] * source_.arrow(x)) return false;
  }
  return true;
}

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += qfg::rank(b);
  return r;
}

bool ModuleMap::is_injective() const { return rank() == source_.total_dim(); }
bool ModuleMap::is_surjective() const { return rank() == target_.total_dim(); }
bool ModuleMap::is_isomorphism() const {
  return source_.total_dim() == target_.total_dim() && rank() == source_.total_dim();
}

// ---------------------------------------------------------------- standard modules

FDModule simple(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->num_vertices()) throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> arrows;
  for (const auto& ar : a->quiver().arrows) arrows.emplace_back(a->field(), dims[ar.target], dims[ar.source]);
  return FDModule(a, dims, std::move(arrows), false).named("S" + a->quiver().vertices[v]);
}

FDModule free_module(const AlgebraPtr& a, const std::vector<std::size_t>& gens) {
  const std::size_t n = a->num_vertices();
  std::vector<std::size_t> dims(n, 0);
  std::vector<std::vector<std::size_t>> off(gens.size(), std::vector<std::size_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      off[k][j] = dims[j];
      dims[j] += a->words_between(gens[k], j).size();
    }
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < a->num_arrows(); ++x) {
    const auto& ar = a->quiver().arrows[x];
    Matrix m(a->field(), dims[ar.target], dims[ar.source]);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& words = a->words_between(gens[k], ar.source);
      for (std::size_t p = 0; p < words.size(); ++p)
        for (const auto& [w, c] : a->product(a->arrow_basis_index(x), words[p]))
          m(off[k][ar.target] + a->position_between(w), off[k][ar.source] + p) = c;
    }
    arrows.push_back(std::move(m));
  }
  return FDModule(a, dims, std::move(arrows), false);
}

FDModule projective(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->num_vertices()) throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
  return free_module(a, {v}).named("P" + a->quiver().vertices[v]);
}

FDModule injective(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->num_vertices()) throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
  return dual(projective(a->opposite(), v)).named("I" + a->quiver().vertices[v]);
}

FDModule regular_module(const AlgebraPtr& a) {
  std::vector<std::size_t> gens(a->num_vertices());
  std::iota(gens.begin(), gens.end(), 0);
  return free_module(a, gens).named("A");
}

DirectSum direct_sum(const std::vector<FDModule>& parts) {
  if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "direct sum of nothing");
  const AlgebraPtr& a = parts[0].algebra();
  const std::size_t n = a->num_vertices();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    if (!p.algebra()->same_as(*a)) throw Error(ErrorCode::AlgebraMismatch, "direct sum over different algebras");
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < a->num_arrows(); ++x) {
    const auto& ar = a->quiver().arrows[x];
    Matrix m(a->field(), dims[ar.target], dims[ar.source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.arrow(x));
      r += p.dim(ar.target);
      c += p.dim(ar.source);
    }
    arrows.push_back(std::move(m));
  }
  DirectSum out;
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "+") + p.name();
  out.sum = FDModule(a, dims, std::move(arrows), false).named(name);
  std::vector<std::size_t> pos(n, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inc, proj;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix i(a->field(), dims[v], p.dim(v));
      for (std::size_t k = 0; k < p.dim(v); ++k) i(pos[v] + k, k) = 1;
      proj.push_back(i.transpose());
      inc.push_back(std::move(i));
      pos[v] += p.dim(v);
    }
    out.inclusions.emplace_back(p, out.sum, std::move(inc));
    out.projections.emplace_back(out.sum, p, std::move(proj));
  }
  return out;
}

FDModule direct_sum_module(const std::vector<FDModule>& parts) { return direct_sum(parts).sum; }

// ---------------------------------------------------------------- Hom

std::vector<ModuleMap> hom_basis(const FDModule& m, const FDModule& n) {
  if (!m.algebra()->same_as(*n.algebra())) throw Error(ErrorCode::AlgebraMismatch, "hom between different algebras");
  const auto& a = *m.algebra();
  const Field& f = m.field();
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = off[nv];
  if (unknowns == 0) return {};
  std::size_t eqs = 0;
  for (const auto& ar : a.quiver().arrows) eqs += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(f, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t x = 0; x < a.num_arrows(); ++x) {
    const auto& ar = a.quiver().arrows[x];
    const std::size_t s = ar.source, t = ar.target;
    const Matrix& nx = n.arrow(x);
    const Matrix& mx = m.arrow(x);
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
        // (N_x F_s)(r, c) - (F_t M_x)(r, c)
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (sgn(nx(r, k)) != 0) sys(row, off[s] + k * m.dim(s) + c) = f.add(sys(row, off[s] + k * m.dim(s) + c), nx(r, k));
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (sgn(mx(k, c)) != 0) sys(row, off[t] + r * m.dim(t) + k) = f.sub(sys(row, off[t] + r * m.dim(t) + k), mx(k, c));
      }
  }
  std::vector<ModuleMap> out;
  for (const auto& v : kernel_basis(sys)) {
    std::vector<Matrix> blocks;
    for (std::size_t u = 0; u < nv; ++u) {
      Matrix b(f, n.dim(u), m.dim(u));
      for (std::size_t r = 0; r < n.dim(u); ++r)
        for (std::size_t c = 0; c < m.dim(u); ++c) b(r, c) = v[off[u] + r * m.dim(u) + c];
      blocks.push_back(std::move(b));
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

std::size_t hom_dim(const FDModule& m, const FDModule& n) { return hom_basis(m, n).size(); }

ModuleMap combine(const std::vector<ModuleMap>& basis, const Vector& coeffs, const FDModule& m, const FDModule& n) {
  ModuleMap out = ModuleMap::zero(m, n);
  std::vector<Matrix> blocks = out.blocks();
  const Field& f = m.field();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    for (std::size_t v = 0; v < blocks.size(); ++v) {
      const Matrix& b = basis[i].block(v);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (sgn(b(r, c)) != 0) f.add_mul(blocks[v](r, c), coeffs[i], b(r, c));
    }
  }
  return ModuleMap(m, n, std::move(blocks));
}

// ---------------------------------------------------------------- subspaces

Subspace full_subspace(const FDModule& m) {
  Subspace s;
  for (std::size_t v = 0; v < m.dims().size(); ++v) s.push_back(Matrix::identity(m.field(), m.dim(v)));
  return s;
}

Subspace zero_subspace(const FDModule& m) {
  Subspace s;
  for (std::size_t v = 0; v < m.dims().size(); ++v) s.emplace_back(m.field(), m.dim(v), 0);
  return s;
}

std::size_t subspace_dim(const Subspace& s) {
  std::size_t d = 0;
  for (const auto& b : s) d += b.cols();
  return d;
}

Subspace subspace_sum(const FDModule& m, const Subspace& a, const Subspace& b) {
  Subspace s;
  for (std::size_t v = 0; v < a.size(); ++v) s.push_back(image_matrix(Matrix::hstack(a[v], b[v])));
  (void)m;
  return s;
}

Subspace subspace_intersection(const FDModule& m, const Subspace& a, const Subspace& b) {
  Subspace s;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v].cols() == 0 || b[v].cols() == 0) {
      s.emplace_back(m.field(), m.dim(v), 0);
      continue;
    }
    // [A | -B] (x; y) = 0  =>  A x lies in both.
    Matrix nb = b[v].scaled(m.field().neg(Scalar(1)));
    auto ker = kernel_basis(Matrix::hstack(a[v], nb));
    std::vector<Vector> cols;
    for (const auto& k : ker) {
      Vector x(k.begin(), k.begin() + static_cast<long>(a[v].cols()));
      cols.push_back(a[v].apply(x));
    }
    s.push_back(span_matrix(m.field(), m.dim(v), cols));
  }
  return s;
}

Subspace radical_of(const FDModule& m, const Subspace& s) {
  const auto& a = *m.algebra();
  std::vector<std::vector<Vector>> cols(a.num_vertices());
  for (std::size_t x = 0; x < a.num_arrows(); ++x) {
    const auto& ar = a.quiver().arrows[x];
    if (s[ar.source].cols() == 0 || m.dim(ar.target) == 0) continue;
    Matrix img = m.arrow(x) * s[ar.source];
    for (std::size_t c = 0; c < img.cols(); ++c) cols[ar.target].push_back(img.column(c));
  }
  Subspace out;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) out.push_back(span_matrix(m.field(), m.dim(v), cols[v]));
  return out;
}

Subspace generated_subspace(const FDModule& m, const Subspace& gens) {
  const auto& a = *m.algebra();
  const Field& f = m.field();
  std::vector<SpanBasis> spans;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) spans.emplace_back(f, m.dim(v));
  std::deque<std::pair<std::size_t, Vector>> queue;
  for (std::size_t v = 0; v < gens.size(); ++v)
    for (std::size_t c = 0; c < gens[v].cols(); ++c) {
      Vector col = gens[v].column(c);
      if (spans[v].add(col)) queue.emplace_back(v, std::move(col));
    }
  while (!queue.empty()) {
    auto [v, vec] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < a.num_arrows(); ++x) {
      const auto& ar = a.quiver().arrows[x];
      if (ar.source != v || m.dim(ar.target) == 0) continue;
      Vector w = m.arrow(x).apply(vec);
      if (spans[ar.target].add(w)) queue.emplace_back(ar.target, std::move(w));
    }
  }
  Subspace out;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    out.push_back(Matrix::from_columns(f, m.dim(v), spans[v].generators()));
  return out;
}

bool is_closed(const FDModule& m, const Subspace& s) {
  Subspace r = radical_of(m, s);
  for (std::size_t v = 0; v < s.size(); ++v)
    if (rank(Matrix::hstack(s[v], r[v])) != rank(s[v])) return false;
  return true;
}

SubModule submodule(const FDModule& m, const Subspace& s) {
  const auto& a = m.algebra();
  const Field& f = m.field();
  std::vector<std::size_t> dims;
  std::vector<LinearSolver> solvers;
  for (std::size_t v = 0; v < s.size(); ++v) {
    dims.push_back(s[v].cols());
    solvers.emplace_back(s[v]);
    if (solvers.back().rank() != s[v].cols()) throw Error(ErrorCode::DimensionMismatch, "subspace basis is dependent");
  }
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < a->num_arrows(); ++x) {
    const auto& ar = a->quiver().arrows[x];
    Matrix r(f, dims[ar.target], dims[ar.source]);
    if (dims[ar.source] && dims[ar.target]) {
      Matrix img = m.arrow(x) * s[ar.source];
      for (std::size_t c = 0; c < img.cols(); ++c) {
        auto sol = solvers[ar.target].solve(img.column(c));
        if (!sol) throw Error(ErrorCode::InvalidMap, "subspace is not a submodule");
        r.set_column(c, *sol);
      }
    } else if (dims[ar.source] && !(m.arrow(x) * s[ar.source]).is_zero()) {
      throw Error(ErrorCode::InvalidMap, "subspace is not a submodule");
    }
    arrows.push_back(std::move(r));
  }
  SubModule out;
  out.module = FDModule(a, dims, std::move(arrows), false);
  out.inclusion = ModuleMap(out.module, m, s);
  return out;
}

QuotientModule quotient(const FDModule& m, const Subspace& s) {
  const auto& a = m.algebra();
  const Field& f = m.field();
  const std::size_t n = a->num_vertices();
  std::vector<Matrix> proj, comp;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < n; ++v) {
    SpanBasis span(f, m.dim(v));
    for (std::size_t c = 0; c < s[v].cols(); ++c) span.add(s[v].column(c));
    std::vector<Vector> complement;
    for (std::size_t i = 0; i < m.dim(v); ++i) {
      Vector e(m.dim(v));
      e[i] = 1;
      if (span.add(e)) complement.push_back(std::move(e));
    }
    Matrix c = Matrix::from_columns(f, m.dim(v), complement);
    Matrix full = Matrix::hstack(s[v], c);
    auto inv = inverse(full);
    if (!inv) throw Error(ErrorCode::DimensionMismatch, "subspace basis is dependent");
    proj.push_back(inv->block(s[v].cols(), 0, complement.size(), m.dim(v)));
    dims.push_back(complement.size());
    comp.push_back(std::move(c));
  }
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < a->num_arrows(); ++x) {
    const auto& ar = a->quiver().arrows[x];
    arrows.push_back(proj[ar.target] * m.arrow(x) * comp[ar.source]);
  }
  QuotientModule out;
  out.module = FDModule(a, dims, std::move(arrows), false);
  out.projection = ModuleMap(m, out.module, std::move(proj));
  return out;
}

Subspace kernel_subspace(const ModuleMap& f) {
  Subspace s;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) s.push_back(kernel_matrix(f.block(v)));
  return s;
}

Subspace image_subspace(const ModuleMap& f) {
  Subspace s;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) s.push_back(image_matrix(f.block(v)));
  return s;
}

SubModule kernel(const ModuleMap& f) { return submodule(f.source(), kernel_subspace(f)); }
SubModule image(const ModuleMap& f) { return submodule(f.target(), image_subspace(f)); }
QuotientModule cokernel(const ModuleMap& f) { return quotient(f.target(), image_subspace(f)); }

SubModule radical(const FDModule& m) { return submodule(m, radical_of(m, full_subspace(m))); }
QuotientModule top(const FDModule& m) { return quotient(m, radical_of(m, full_subspace(m))); }

SubModule socle(const FDModule& m) {
  const auto& a = *m.algebra();
  Subspace s;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    Matrix stacked(m.field(), 0, m.dim(v));
    for (std::size_t x = 0; x < a.num_arrows(); ++x)
      if (a.quiver().arrows[x].source == v) stacked = Matrix::vstack(stacked, m.arrow(x));
    s.push_back(kernel_matrix(stacked));
  }
  return submodule(m, s);
}

std::vector<std::vector<std::size_t>> radical_layers(const FDModule& m) {
  std::vector<std::vector<std::size_t>> layers;
  Subspace s = full_subspace(m);
  while (subspace_dim(s) > 0) {
    Subspace r = radical_of(m, s);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < s.size(); ++v) layer.push_back(s[v].cols() - r[v].cols());
    layers.push_back(std::move(layer));
    s = std::move(r);
  }
  return layers;
}

std::size_t loewy_length(const FDModule& m) { return radical_layers(m).size(); }

std::vector<std::size_t> top_dims(const FDModule& m) {
  auto layers = radical_layers(m);
  if (layers.empty()) return std::vector<std::size_t>(m.dims().size(), 0);
  return layers[0];
}

bool is_projective(const FDModule& m) {
  auto t = top_dims(m);
  const auto& a = *m.algebra();
  std::size_t cover = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    std::size_t pv = 0;
    for (std::size_t j = 0; j < a.num_vertices(); ++j) pv += a.words_between(v, j).size();
    cover += t[v] * pv;
  }
  return cover == m.total_dim();
}

std::vector<std::pair<std::size_t, Vector>> relative_generators(const FDModule& m, const Subspace& s,
                                                                 const Subspace& w) {
  Subspace r = radical_of(m, s);
  std::vector<std::pair<std::size_t, Vector>> gens;
  for (std::size_t v = 0; v < s.size(); ++v) {
    SpanBasis span(m.field(), m.dim(v));
    for (std::size_t c = 0; c < r[v].cols(); ++c) span.add(r[v].column(c));
    for (std::size_t c = 0; c < w[v].cols(); ++c) span.add(w[v].column(c));
    for (std::size_t c = 0; c < s[v].cols(); ++c) {
      Vector col = s[v].column(c);
      if (span.add(col)) gens.emplace_back(v, std::move(col));
    }
  }
  return gens;
}

std::vector<std::pair<std::size_t, Vector>> top_generators(const FDModule& m) {
  return relative_generators(m, full_subspace(m), zero_subspace(m));
}

ModuleMap free_map_from_images(const AlgebraPtr& a, const std::vector<std::size_t>& gens, const FDModule& free,
                               const FDModule& target, const std::vector<Vector>& images) {
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < a->num_vertices(); ++j) {
    Matrix b(a->field(), target.dim(j), free.dim(j));
    std::size_t col = 0;
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (auto w : a->words_between(gens[k], j)) b.set_column(col++, target.apply(w, images[k]));
    blocks.push_back(std::move(b));
  }
  return ModuleMap(free, target, std::move(blocks));
}

// ---------------------------------------------------------------- duality

FDModule dual(const FDModule& m) {
  AlgebraPtr op = m.algebra()->opposite();
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < op->num_arrows(); ++x) arrows.push_back(m.arrow(x).transpose());
  std::string name = m.name().empty() ? std::string() : "D(" + m.name() + ")";
  return FDModule(op, m.dims(), std::move(arrows), false).named(name);
}

ModuleMap dual(const ModuleMap& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(b.transpose());
  return ModuleMap(dual(f.target()), dual(f.source()), std::move(blocks));
}

// ---------------------------------------------------------------- polynomials

std::vector<Scalar> minimal_polynomial(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t k = m.rows();
  auto flatten = [&](const Matrix& p) {
    Vector v(k * k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) v[r * k + c] = p(r, c);
    return v;
  };
  SpanBasis span(f, k * k);
  Matrix power = Matrix::identity(f, k);
  for (std::size_t deg = 0;; ++deg) {
    Vector v = flatten(power);
    if (auto coords = span.coordinates(v)) {
      std::vector<Scalar> poly(deg + 1);
      for (std::size_t i = 0; i < deg; ++i) poly[i] = f.neg((*coords)[i]);
      poly[deg] = 1;
      return poly;
    }
    span.add(v);
    power = power * m;
  }
}

namespace {

Scalar eval_poly(const Field& f, const std::vector<Scalar>& c, const Scalar& t) {
  Scalar r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = f.add(f.mul(r, t), *it);
  return r;
}

bool divisors(mpz_class n, std::vector<mpz_class>& out) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) return false;
  unsigned long long v = n.get_ui();
  std::vector<unsigned long long> small, large;
  for (unsigned long long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      small.push_back(d);
      if (d != v / d) large.push_back(v / d);
    }
  for (auto d : small) out.emplace_back(static_cast<unsigned long>(d));
  for (auto d : large) out.emplace_back(static_cast<unsigned long>(d));
  return true;
}

}  // namespace

RootSearch field_roots(const Field& f, const std::vector<Scalar>& coeffs) {
  RootSearch rs;
  std::vector<Scalar> c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.size() <= 1) return rs;
  if (f.is_prime_field()) {
    long p = f.characteristic();
    if (p > 200000) {
      rs.complete = false;
      return rs;
    }
    for (long t = 0; t < p; ++t)
      if (sgn(eval_poly(f, c, Scalar(t))) == 0) rs.roots.emplace_back(t);
    return rs;
  }
  // Rational root test on the primitive integer polynomial.
  mpz_class l = 1;
  for (const auto& x : c) l = lcm(l, x.get_den());
  std::vector<mpz_class> ic;
  for (const auto& x : c) ic.push_back(x.get_num() * (l / x.get_den()));
  std::size_t shift = 0;
  while (ic[shift] == 0) ++shift;
  if (shift > 0) rs.roots.emplace_back(0);
  std::vector<mpz_class> ps, qs;
  if (ic.size() - shift <= 1) return rs;
  if (!divisors(ic[shift], ps) || !divisors(ic.back(), qs)) {
    rs.complete = false;
    return rs;
  }
  std::vector<Scalar> trimmed(c.begin() + static_cast<long>(shift), c.end());
  std::vector<Scalar> found;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        Scalar t(p * sign, q);
        t.canonicalize();
        if (std::find(found.begin(), found.end(), t) != found.end()) continue;
        if (sgn(eval_poly(f, trimmed, t)) == 0) found.push_back(t);
      }
  std::sort(found.begin(), found.end());
  for (auto& t : found) rs.roots.push_back(t);
  return rs;
}

// ---------------------------------------------------------------- decomposition

namespace {

Vector random_coeffs(const Field& f, std::size_t n, std::mt19937_64& rng, long box) {
  std::uniform_int_distribution<long> dist(-box, box);
  Vector v(n);
  for (auto& x : v) x = f.from_int(dist(rng));
  return v;
}

Matrix matrix_power(const Matrix& m, std::size_t e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * m;
  return r;
}

// Projection of the total space onto the first summand of s1 (+) s2.
std::vector<Matrix> split_projection(const Field& f, const Subspace& s1, const Subspace& s2) {
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < s1.size(); ++v) {
    Matrix full = Matrix::hstack(s1[v], s2[v]);
    if (full.rows() == 0) {
      out.emplace_back(f, s1[v].cols(), 0);
      continue;
    }
    auto inv = inverse(full);
    if (!inv) throw Error(ErrorCode::DimensionMismatch, "Fitting decomposition is not direct");
    out.push_back(inv->block(0, 0, s1[v].cols(), full.rows()));
  }
  return out;
}

struct Splitter {
  std::mt19937_64 rng;
  std::vector<Summand> run(const FDModule& x) {
    if (x.total_dim() == 0) return {};
    auto end = hom_basis(x, x);
    const Field& f = x.field();
    if (end.size() > 1) {
      bool irrational = false;
      std::vector<std::size_t> order;
      for (std::size_t v = 0; v < x.dims().size(); ++v)
        if (x.dim(v) > 0) order.push_back(v);
      std::stable_sort(order.begin(), order.end(), [&](auto p, auto q) { return x.dim(p) < x.dim(q); });
      for (int trial = 0; trial < 24; ++trial) {
        ModuleMap g = combine(end, random_coeffs(f, end.size(), rng, 10), x, x);
        for (auto v : order) {
          auto rs = field_roots(f, minimal_polynomial(g.block(v)));
          if (rs.roots.empty()) irrational = true;
          for (const auto& lambda : rs.roots) {
            std::vector<Matrix> powered;
            for (std::size_t u = 0; u < x.dims().size(); ++u) {
              Matrix h = g.block(u) - Matrix::identity(f, x.dim(u)).scaled(lambda);
              powered.push_back(matrix_power(h, x.dim(u)));
            }
            ModuleMap p(x, x, powered);
            Subspace ker = kernel_subspace(p), img = image_subspace(p);
            if (subspace_dim(ker) == 0 || subspace_dim(img) == 0) continue;
            return combine_split(x, ker, img);
          }
        }
      }
      if (irrational)
        throw Error(ErrorCode::FieldTooSmall, "endomorphism ring does not split over " + f.to_string());
    }
    return {Summand{x, ModuleMap::identity(x), ModuleMap::identity(x)}};
  }

  std::vector<Summand> combine_split(const FDModule& x, const Subspace& s1, const Subspace& s2) {
    const Field& f = x.field();
    std::vector<Summand> out;
    for (int side = 0; side < 2; ++side) {
      const Subspace& a = side == 0 ? s1 : s2;
      const Subspace& b = side == 0 ? s2 : s1;
      SubModule sub = submodule(x, a);
      ModuleMap proj(x, sub.module, split_projection(f, a, b));
      for (auto& piece : run(sub.module)) {
        out.push_back(Summand{piece.module, sub.inclusion.after(piece.inclusion), piece.projection.after(proj)});
      }
    }
    return out;
  }
};

}  // namespace

std::vector<Summand> decompose(const FDModule& m, std::uint64_t seed) {
  Splitter s{std::mt19937_64(seed)};
  auto parts = s.run(m);
  // Deterministic order: by dimension vector, then by discovery order.
  std::stable_sort(parts.begin(), parts.end(), [](const Summand& a, const Summand& b) {
    return std::vector<std::size_t>(a.module.dims()) > std::vector<std::size_t>(b.module.dims());
  });
  return parts;
}

bool is_indecomposable(const FDModule& m, std::uint64_t seed) { return m.total_dim() > 0 && decompose(m, seed).size() == 1; }

std::optional<ModuleMap> find_isomorphism(const FDModule& m, const FDModule& n, std::uint64_t seed) {
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.total_dim() == 0) return ModuleMap::zero(m, n);
  auto h = hom_basis(m, n);
  if (h.empty()) return std::nullopt;
  for (const auto& g : h)
    if (g.is_isomorphism()) return g;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 24; ++trial) {
    ModuleMap g = combine(h, random_coeffs(m.field(), h.size(), rng, 50), m, n);
    if (g.is_isomorphism()) return g;
  }
  return std::nullopt;
}

bool is_isomorphic(const FDModule& m, const FDModule& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

std::vector<IsoClass> isoclasses(const FDModule& m, std::uint64_t seed) {
  std::vector<IsoClass> out;
  for (auto& s : decompose(m, seed)) {
    bool found = false;
    for (auto& c : out)
      if (is_isomorphic(c.module, s.module, seed)) {
        ++c.multiplicity;
        found = true;
        break;
      }
    if (!found) out.push_back({s.module, 1});
  }
  return out;
}

Scalar local_eigenvalue(const ModuleMap& f) {
  const FDModule& x = f.source();
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    if (x.dim(v) == 0) continue;
    auto rs = field_roots(x.field(), minimal_polynomial(f.block(v)));
    if (rs.roots.size() != 1) throw Error(ErrorCode::FieldTooSmall, "endomorphism is not scalar plus nilpotent");
    return rs.roots[0];
  }
  return Scalar(0);
}

std::vector<ModuleMap> radical_hom_basis(const FDModule& x, const FDModule& y, std::uint64_t seed) {
  auto h = hom_basis(x, y);
  auto iso = find_isomorphism(x, y, seed);
  if (!iso) return h;
  std::vector<Matrix> inv_blocks;
  for (const auto& b : iso->blocks()) inv_blocks.push_back(b.rows() ? *inverse(b) : b);
  ModuleMap inv(y, x, std::move(inv_blocks));
  const Field& f = x.field();
  std::vector<ModuleMap> out;
  SpanBasis span(f, x.total_dim() * y.total_dim());
  auto flatten = [&](const ModuleMap& g) {
    Matrix t = g.total();
    Vector v;
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t c = 0; c < t.cols(); ++c) v.push_back(t(r, c));
    return v;
  };
  for (const auto& g : h) {
    Scalar lambda = local_eigenvalue(inv.after(g));
    ModuleMap r = g - iso->scaled(lambda);
    if (!r.is_zero() && span.add(flatten(r))) out.push_back(r);
  }
  return out;
}

std::string describe_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ")";
  return os.str();
}

}  // namespace qfg
