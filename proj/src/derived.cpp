#include "quiverfg/derived.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "quiverfg/error.hpp"

namespace qfg {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return out;
}

void add_block(Matrix& m, std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& s) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (sgn(b(r, c)) != 0) m(r0 + r, c0 + c) += s * b(r, c);
}

Scalar sign(long k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

// g : U -> V with image inside the submodule k; returns U -> K.
ModuleMap corestrict(const ModuleMap& g, const SubModule& k) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < g.source().dims().size(); ++v) {
    const Matrix& inc = k.inclusion.block(v);
    Matrix b(g.source().field(), k.module.dim(v), g.source().dim(v));
    if (inc.cols() > 0) {
      LinearSolver s(inc);
      for (std::size_t c = 0; c < b.cols(); ++c) {
        auto y = s.solve(g.block(v).column(c));
        if (!y) throw Error(ErrorCode::InvalidMap, "map does not factor through the submodule");
        b.set_column(c, *y);
      }
    }
    blocks.push_back(std::move(b));
  }
  return ModuleMap(g.source(), k.module, std::move(blocks));
}

Vector flatten(const ModuleMap& f) {
  Matrix t = f.total();
  Vector v;
  v.reserve(t.rows() * t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) v.push_back(t(r, c));
  return v;
}

}  // namespace

// ---------------------------------------------------------------- complexes

BddComplex::BddComplex(AlgebraPtr a, long lo, std::vector<FDModule> terms, std::vector<ModuleMap> d)
    : a_(std::move(a)), lo_(lo), terms_(std::move(terms)), d_(std::move(d)) {
  if (!terms_.empty() && d_.size() + 1 != terms_.size())
    throw Error(ErrorCode::DimensionMismatch, "complex needs one differential between consecutive terms");
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (d_[i].source().dims() != terms_[i].dims() || d_[i].target().dims() != terms_[i + 1].dims())
      throw Error(ErrorCode::DimensionMismatch, "differential does not match the terms");
}

BddComplex BddComplex::stalk(const FDModule& m, long degree) { return BddComplex(m.algebra(), degree, {m}, {}); }

BddComplex BddComplex::zero(AlgebraPtr a) { return BddComplex(std::move(a), 0, {}, {}); }

BddComplex BddComplex::contractible(const FDModule& n, long degree) {
  return BddComplex(n.algebra(), degree, {n, n}, {ModuleMap::identity(n)});
}

FDModule BddComplex::term(long i) const {
  if (i < lo_ || i > hi()) return FDModule::zero(a_);
  return terms_[static_cast<std::size_t>(i - lo_)];
}

ModuleMap BddComplex::differential(long i) const {
  if (i >= lo_ && i < hi()) return d_[static_cast<std::size_t>(i - lo_)];
  return ModuleMap::zero(term(i), term(i + 1));
}

BddComplex BddComplex::shifted(long k) const {
  std::vector<ModuleMap> d;
  for (const auto& m : d_) d.push_back(k % 2 == 0 ? m : m.scaled(Scalar(-1)));
  return BddComplex(a_, lo_ - k, terms_, std::move(d));
}

BddComplex BddComplex::truncated_below(long v) const {
  if (terms_.empty() || v <= lo_) return *this;
  if (v > hi()) return zero(a_);
  QuotientModule c = cokernel(differential(v - 1));
  std::vector<FDModule> terms{c.module};
  std::vector<ModuleMap> d;
  for (long i = v + 1; i <= hi(); ++i) terms.push_back(term(i));
  if (v < hi()) {
    // d^v factors through the projection onto the cokernel.
    const ModuleMap& dv = d_[static_cast<std::size_t>(v - lo_)];
    std::vector<Matrix> blocks;
    for (std::size_t x = 0; x < a_->num_vertices(); ++x) {
      const Matrix& pr = c.projection.block(x);
      LinearSolver s(pr);
      Matrix b(a_->field(), dv.target().dim(x), pr.rows());
      for (std::size_t col = 0; col < pr.rows(); ++col) {
        Vector e = zero_vector(a_->field(), pr.rows());
        e[col] = 1;
        b.set_column(col, dv.block(x).apply(*s.solve(e)));
      }
      blocks.push_back(std::move(b));
    }
    d.emplace_back(c.module, terms[1], std::move(blocks));
    for (long i = v + 1; i < hi(); ++i) d.push_back(d_[static_cast<std::size_t>(i - lo_)]);
  }
  return BddComplex(a_, v, std::move(terms), std::move(d));
}

bool BddComplex::check() const {
  for (const auto& m : terms_)
    if (!m.check_relations()) return false;
  for (const auto& d : d_)
    if (!d.commutes()) return false;
  for (std::size_t i = 0; i + 1 < d_.size(); ++i)
    if (!d_[i + 1].after(d_[i]).is_zero()) return false;
  return true;
}

FDModule BddComplex::homology(long i) const {
  SubModule z = kernel(differential(i));
  ModuleMap into = corestrict(differential(i - 1), z);
  return cokernel(into).module;
}

std::vector<std::size_t> BddComplex::homology_dims(long from, long to) const {
  std::vector<std::size_t> out;
  for (long i = from; i <= to; ++i) {
    if (i < lo_ || i > hi()) {
      out.push_back(0);
      continue;
    }
    ModuleMap in = differential(i - 1), outm = differential(i);
    std::size_t h = 0;
    for (std::size_t v = 0; v < a_->num_vertices(); ++v)
      h += term(i).dim(v) - qfg::rank(outm.block(v)) - qfg::rank(in.block(v));
    out.push_back(h);
  }
  return out;
}

std::optional<std::pair<FDModule, long>> BddComplex::stalk_form() const {
  if (terms_.empty()) return std::nullopt;
  auto h = homology_dims(lo_, hi());
  std::optional<long> deg;
  for (long i = lo_; i <= hi(); ++i)
    if (h[static_cast<std::size_t>(i - lo_)] != 0) {
      if (deg) return std::nullopt;
      deg = i;
    }
  if (!deg) return std::nullopt;
  return std::make_pair(homology(*deg), *deg);
}

BddComplex direct_sum(const BddComplex& x, const BddComplex& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  long lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
  std::vector<FDModule> terms;
  std::vector<ModuleMap> d;
  for (long i = lo; i <= hi; ++i) terms.push_back(direct_sum_module({x.term(i), y.term(i)}));
  for (long i = lo; i < hi; ++i) {
    ModuleMap dx = x.differential(i), dy = y.differential(i);
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < x.algebra()->num_vertices(); ++v)
      blocks.push_back(Matrix::direct_sum(dx.block(v), dy.block(v)));
    const std::size_t k = static_cast<std::size_t>(i - lo);
    d.emplace_back(terms[k], terms[k + 1], std::move(blocks));
  }
  return BddComplex(x.algebra(), lo, std::move(terms), std::move(d));
}

// ---------------------------------------------------------------- projective replacement

const std::vector<std::size_t>& ProjComplex::gens_at(long i) const {
  static const std::vector<std::size_t> none;
  if (i < lo || i > hi()) return none;
  return gens[static_cast<std::size_t>(i - lo)];
}

BddComplex ProjComplex::as_complex() const {
  if (gens.empty()) return BddComplex::zero(algebra);
  std::vector<FDModule> terms;
  for (const auto& g : gens) terms.push_back(free_module(algebra, g));
  std::vector<ModuleMap> d;
  for (std::size_t i = 0; i + 1 < gens.size(); ++i)
    d.push_back(free_map_to_module_map(algebra, this->d[i], terms[i], terms[i + 1]));
  return BddComplex(algebra, lo, std::move(terms), std::move(d));
}

ProjComplex projective_replacement(const BddComplex& x, long lowest) {
  const AlgebraPtr& a = x.algebra();
  const Field& f = a->field();
  const std::size_t nv = a->num_vertices();
  ProjComplex out;
  out.algebra = a;
  out.lo = lowest;
  if (x.empty()) return out;

  std::vector<std::vector<std::size_t>> gens_rev;
  std::vector<FreeMap> d_rev;
  std::vector<std::vector<Vector>> img_rev;
  std::vector<std::size_t> g1, g2;  // generators in degrees i + 1 and i + 2
  FreeMap d1;                       // P^{i+1} -> P^{i+2}
  std::vector<Vector> img1;         // images of P^{i+1} generators in X^{i+1}
  long i = x.hi();
  for (; i >= lowest; --i) {
    FDModule p1 = free_module(a, g1);
    FDModule xi = x.term(i), x1 = x.term(i + 1);
    FDModule cone = direct_sum_module({p1, xi});
    FDModule next = direct_sum_module({free_module(a, g2), x1});
    ModuleMap f1 = free_map_from_images(a, g1, p1, x1, img1);
    ModuleMap dx = x.differential(i), dprev = x.differential(i - 1);
    std::vector<Matrix> blocks;
    Subspace w;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix m(f, next.dim(v), cone.dim(v));
      const std::size_t top = next.dim(v) - x1.dim(v);
      if (!g1.empty()) {
        add_block(m, 0, 0, free_map_block(*a, d1, v), Scalar(-1));
        m.set_block(top, 0, f1.block(v));
      }
      m.set_block(top, p1.dim(v), dx.block(v));
      blocks.push_back(std::move(m));
      Matrix im = image_matrix(dprev.block(v));
      Matrix wv(f, cone.dim(v), im.cols());
      wv.set_block(p1.dim(v), 0, im);
      w.push_back(std::move(wv));
    }
    Subspace z = kernel_subspace(ModuleMap(cone, next, std::move(blocks)));
    auto gens = relative_generators(cone, z, w);
    if (i < x.lo() && gens.empty()) break;

    std::vector<std::size_t> g0;
    FreeMap d0;
    std::vector<Vector> img0;
    d0.target = g1;
    for (const auto& [v, vec] : gens) {
      g0.push_back(v);
      const std::size_t pd = p1.dim(v);
      Vector p(vec.begin(), vec.begin() + static_cast<long>(pd));
      d0.entries.push_back(decode_free_element(*a, g1, v, scale(f, Scalar(-1), p)));
      img0.emplace_back(vec.begin() + static_cast<long>(pd), vec.end());
    }
    d0.source = g0;
    gens_rev.push_back(g0);
    d_rev.push_back(d0);
    img_rev.push_back(img0);
    g2 = std::move(g1);
    g1 = std::move(g0);
    d1 = std::move(d0);
    img1 = std::move(img0);
  }
  out.lo = i + 1;
  out.gens.assign(gens_rev.rbegin(), gens_rev.rend());
  out.d.assign(d_rev.rbegin(), d_rev.rend());
  out.images.assign(img_rev.rbegin(), img_rev.rend());
  return out;
}

// ---------------------------------------------------------------- hyper-Hom

std::vector<std::size_t> hyper_hom_dims(const BddComplex& x, const BddComplex& y, long from, long to) {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max<long>(0, to - from + 1)), 0);
  if (x.empty() || y.empty() || out.empty()) return out;
  const AlgebraPtr& a = x.algebra();
  const Field& f = a->field();
  ProjComplex p = projective_replacement(x, y.lo() - to - 1);
  if (p.gens.empty()) return out;

  // Offsets of the (i, k) components of Hom^n.
  auto layout = [&](long n) {
    std::map<std::pair<long, std::size_t>, std::size_t> off;
    std::size_t total = 0;
    for (long i = p.lo; i <= p.hi(); ++i) {
      FDModule yi = y.term(i + n);
      const auto& g = p.gens_at(i);
      for (std::size_t k = 0; k < g.size(); ++k) {
        off[{i, k}] = total;
        total += yi.dim(g[k]);
      }
    }
    return std::make_pair(off, total);
  };
  auto coboundary = [&](long n) {
    auto [src, ns] = layout(n);
    auto [tgt, nt] = layout(n + 1);
    Matrix m(f, nt, ns);
    for (long i = p.lo; i <= p.hi(); ++i) {
      ModuleMap dy = y.differential(i + n);
      FDModule yt = y.term(i + n + 1);
      const auto& g = p.gens_at(i);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const std::size_t r0 = tgt.at({i, k});
        m.set_block(r0, src.at({i, k}), dy.block(g[k]));
        if (i + 1 > p.hi()) continue;
        const FreeMap& dp = p.d[static_cast<std::size_t>(i - p.lo)];
        for (std::size_t l = 0; l < dp.target.size(); ++l) {
          if (dp.entries[k][l].empty()) continue;
          add_block(m, r0, src.at({i + 1, l}), yt.action_of(dp.entries[k][l], dp.target[l], g[k]), -sign(n));
        }
      }
    }
    return m;
  };
  std::size_t prev_rank = qfg::rank(coboundary(from - 1));
  for (long n = from; n <= to; ++n) {
    std::size_t r = qfg::rank(coboundary(n));
    out[static_cast<std::size_t>(n - from)] = layout(n).second - r - prev_rank;
    prev_rank = r;
  }
  return out;
}

// ---------------------------------------------------------------- derived tensor

DerivedTensor derived_tensor(const BddComplex& l, const BddComplex& m, long valid_from) {
  const AlgebraPtr& la = l.algebra();
  const AlgebraPtr& ma = m.algebra();
  if (!la->tensor_factors() || !ma->tensor_factors())
    throw Error(ErrorCode::Unsupported, "derived tensor needs complexes over tensor product algebras");
  const auto& lf = *la->tensor_factors();
  const auto& mf = *ma->tensor_factors();
  const AlgebraPtr& A = lf.left;
  const AlgebraPtr& B = mf.left;
  const AlgebraPtr& Cop = mf.right;
  if (!lf.right->same_as(*B->opposite()))
    throw Error(ErrorCode::AlgebraMismatch, "inner algebras of the tensor product differ");
  const Field& f = A->field();
  AlgebraPtr oa = tensor(A, Cop);
  DerivedTensor r;
  r.valid_from = valid_from;
  r.complex = BddComplex::zero(oa);
  if (l.empty() || m.empty()) return r;
  ProjComplex p = projective_replacement(l, valid_from - m.hi() - 1);
  if (p.gens.empty()) return r;

  const std::size_t nA = A->num_vertices(), nB = B->num_vertices(), nC = Cop->num_vertices();
  const std::size_t aA = A->num_arrows(), aB = B->num_arrows(), aC = Cop->num_arrows();
  const std::size_t dCop = Cop->dim();
  const std::size_t nOut = oa->num_vertices();

  struct Block {
    long i, j;
    std::size_t k, u, w;
  };
  const long lo = p.lo + m.lo(), hi = p.hi() + m.hi();
  std::vector<std::vector<Block>> blocks;
  std::vector<std::vector<std::vector<std::size_t>>> offsets;  // [n][vertex][block]
  std::vector<FDModule> terms;
  for (long n = lo; n <= hi; ++n) {
    std::vector<Block> bl;
    for (long i = p.lo; i <= p.hi(); ++i) {
      long j = n - i;
      if (j < m.lo() || j > m.hi()) continue;
      const auto& g = p.gens_at(i);
      for (std::size_t k = 0; k < g.size(); ++k) bl.push_back({i, j, k, g[k] / nB, g[k] % nB});
    }
    std::vector<std::vector<std::size_t>> off(nOut, std::vector<std::size_t>(bl.size() + 1, 0));
    std::vector<std::size_t> dims(nOut, 0);
    for (std::size_t u = 0; u < nA; ++u)
      for (std::size_t c = 0; c < nC; ++c) {
        const std::size_t v = u * nC + c;
        for (std::size_t b = 0; b < bl.size(); ++b) {
          FDModule mj = m.term(bl[b].j);
          off[v][b + 1] = off[v][b] + A->words_between(bl[b].u, u).size() * mj.dim(bl[b].w * nC + c);
        }
        dims[v] = off[v][bl.size()];
      }
    std::vector<Matrix> arrows;
    for (std::size_t x = 0; x < aA; ++x) {
      const auto& ar = A->quiver().arrows[x];
      for (std::size_t c = 0; c < nC; ++c) {
        const std::size_t s = ar.source * nC + c, t = ar.target * nC + c;
        Matrix am(f, dims[t], dims[s]);
        for (std::size_t b = 0; b < bl.size(); ++b) {
          const auto& ws = A->words_between(bl[b].u, ar.source);
          const auto& wt = A->words_between(bl[b].u, ar.target);
          Matrix left(f, wt.size(), ws.size());
          for (std::size_t q = 0; q < ws.size(); ++q)
            for (const auto& [e, co] : A->product(A->arrow_basis_index(x), ws[q])) left(A->position_between(e), q) += co;
          const std::size_t md = m.term(bl[b].j).dim(bl[b].w * nC + c);
          am.set_block(off[t][b], off[s][b], kron(left, Matrix::identity(f, md)));
        }
        arrows.push_back(std::move(am));
      }
    }
    for (std::size_t u = 0; u < nA; ++u)
      for (std::size_t y = 0; y < aC; ++y) {
        const auto& ar = Cop->quiver().arrows[y];
        const std::size_t s = u * nC + ar.source, t = u * nC + ar.target;
        Matrix am(f, dims[t], dims[s]);
        for (std::size_t b = 0; b < bl.size(); ++b) {
          const std::size_t words = A->words_between(bl[b].u, u).size();
          const FDModule mj = m.term(bl[b].j);
          const Matrix& act = mj.arrow(aB * nC + bl[b].w * aC + y);
          am.set_block(off[t][b], off[s][b], kron(Matrix::identity(f, words), act));
        }
        arrows.push_back(std::move(am));
      }
    terms.emplace_back(oa, std::move(dims), std::move(arrows), false);
    blocks.push_back(std::move(bl));
    offsets.push_back(std::move(off));
  }

  std::vector<ModuleMap> d;
  for (long n = lo; n < hi; ++n) {
    const std::size_t s = static_cast<std::size_t>(n - lo);
    const auto& src = blocks[s];
    const auto& tgt = blocks[s + 1];
    std::map<std::tuple<long, long, std::size_t>, std::size_t> where;
    for (std::size_t b = 0; b < tgt.size(); ++b) where[{tgt[b].i, tgt[b].j, tgt[b].k}] = b;
    std::vector<Matrix> dblocks;
    for (std::size_t u = 0; u < nA; ++u)
      for (std::size_t c = 0; c < nC; ++c) {
        const std::size_t v = u * nC + c;
        Matrix dm(f, terms[s + 1].dim(v), terms[s].dim(v));
        for (std::size_t b = 0; b < src.size(); ++b) {
          const Block& bk = src[b];
          const auto& wa = A->words_between(bk.u, u);
          FDModule mj = m.term(bk.j);
          if (bk.j < m.hi()) {
            auto it = where.find({bk.i, bk.j + 1, bk.k});
            const ModuleMap dmj = m.differential(bk.j);
            const Matrix& dmb = dmj.block(bk.w * nC + c);
            add_block(dm, offsets[s + 1][v][it->second], offsets[s][v][b], kron(Matrix::identity(f, wa.size()), dmb),
                      sign(bk.i));
          }
          if (bk.i >= p.hi()) continue;
          const FreeMap& dp = p.d[static_cast<std::size_t>(bk.i - p.lo)];
          for (std::size_t lidx = 0; lidx < dp.target.size(); ++lidx) {
            if (dp.entries[bk.k][lidx].empty()) continue;
            const std::size_t ul = dp.target[lidx] / nB;
            const auto& wb = A->words_between(ul, u);
            const std::size_t row0 = offsets[s + 1][v][where.at({bk.i + 1, bk.j, lidx})];
            for (const auto& [e, co] : dp.entries[bk.k][lidx]) {
              auto [ai, bi] = lf.index_to_pair[e];
              Matrix left(f, wb.size(), wa.size());
              for (std::size_t q = 0; q < wa.size(); ++q)
                for (const auto& [g, gc] : A->product(wa[q], ai)) left(A->position_between(g), q) += gc;
              if (left.is_zero()) continue;
              Matrix right = mj.action(mf.pair_to_index[bi * dCop + c]);
              add_block(dm, row0, offsets[s][v][b], kron(left, right), co);
            }
          }
        }
        dblocks.push_back(std::move(dm));
      }
    d.emplace_back(terms[s], terms[s + 1], std::move(dblocks));
  }
  r.complex = BddComplex(oa, lo, std::move(terms), std::move(d)).truncated_below(valid_from);
  return r;
}

AssocReport assoc_check(const BddComplex& l, const BddComplex& m, const BddComplex& n, long from, long to) {
  AssocReport r;
  r.from = from;
  r.to = to;
  const long hn = n.empty() ? 0 : n.hi();
  const long hl = l.empty() ? 0 : l.hi();
  BddComplex lm = derived_tensor(l, m, from - hn).complex;
  r.left = derived_tensor(lm, n, from).complex.homology_dims(from, to);
  BddComplex mn = derived_tensor(m, n, from - hl).complex;
  r.right = derived_tensor(l, mn, from).complex.homology_dims(from, to);
  r.equal = r.left == r.right;
  return r;
}

// ---------------------------------------------------------------- tilting functor

TiltingFunctor::TiltingFunctor(const FDModule& t, std::uint64_t seed) {
  TiltingReport rep = check_tilting(t, 10, seed);
  if (rep.verdict != Verdict::Yes) throw Error(ErrorCode::TiltingNotVerified, "module is not a verified tilting module");
  pd_ = rep.axiom_i.value;
  endo_ = endomorphism_algebra(t, EndoConvention::Opposite, seed);
}

TiltingFunctor::HomSpace TiltingFunctor::hom_space(const FDModule& m) const {
  const AlgebraPtr& b = endo_.algebra;
  const Field& f = b->field();
  HomSpace h;
  std::vector<std::size_t> dims;
  for (const auto& s : endo_.summands) {
    auto basis = hom_basis(s, m);
    std::vector<Vector> cols;
    for (const auto& phi : basis) cols.push_back(flatten(phi));
    h.solvers.emplace_back(Matrix::from_columns(f, s.total_dim() * m.total_dim(), cols));
    dims.push_back(basis.size());
    h.basis.push_back(std::move(basis));
  }
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < b->num_arrows(); ++x) {
    const auto& ar = b->quiver().arrows[x];
    const Vector& coeff = endo_.word_in_maps[b->arrow_basis_index(x)];
    Matrix am(f, dims[ar.target], dims[ar.source]);
    for (std::size_t c = 0; c < dims[ar.source]; ++c) {
      const ModuleMap& phi = h.basis[ar.source][c];
      ModuleMap psi = ModuleMap::zero(endo_.summands[ar.target], m);
      for (std::size_t k = 0; k < coeff.size(); ++k)
        if (sgn(coeff[k]) != 0 && endo_.map_source[k] == ar.target && endo_.map_target[k] == ar.source)
          psi = psi + phi.after(endo_.maps[k]).scaled(coeff[k]);
      auto y = h.solvers[ar.target].solve(flatten(psi));
      if (!y) throw Error(ErrorCode::InvalidMap, "composite outside the Hom basis");
      am.set_column(c, *y);
    }
    arrows.push_back(std::move(am));
  }
  h.module = FDModule(b, std::move(dims), std::move(arrows));
  return h;
}

Matrix TiltingFunctor::hom_map(const HomSpace& src, const HomSpace& tgt, const ModuleMap& fm, std::size_t i) const {
  Matrix out(fm.source().field(), tgt.basis[i].size(), src.basis[i].size());
  for (std::size_t c = 0; c < src.basis[i].size(); ++c) {
    auto y = tgt.solvers[i].solve(flatten(fm.after(src.basis[i][c])));
    if (!y) throw Error(ErrorCode::InvalidMap, "composite outside the Hom basis");
    out.set_column(c, *y);
  }
  return out;
}

FDModule TiltingFunctor::hom_from_t(const FDModule& m) const { return hom_space(m).module; }

BddComplex TiltingFunctor::apply(const BddComplex& x) const {
  const AlgebraPtr& b = endo_.algebra;
  if (x.empty()) return BddComplex::zero(b);
  const long top = x.hi() + static_cast<long>(pd_);
  AlgebraPtr op = x.algebra()->opposite();

  // D X over the opposite algebra, replaced by free modules; dualising back
  // gives an injective complex quasi-isomorphic to X.
  std::vector<FDModule> dterms;
  std::vector<ModuleMap> dd;
  for (long i = -x.hi(); i <= -x.lo(); ++i) dterms.push_back(dual(x.term(-i)));
  for (long i = -x.hi(); i < -x.lo(); ++i) {
    const std::size_t k = static_cast<std::size_t>(i + x.hi());
    ModuleMap g = dual(x.differential(-i - 1));
    dd.emplace_back(dterms[k], dterms[k + 1], g.blocks());
  }
  BddComplex q = projective_replacement(BddComplex(op, -x.hi(), dterms, dd), -(top + 1)).as_complex();
  if (q.empty()) return BddComplex::zero(b);

  const long jlo = -q.hi(), jhi = top + 1;
  std::vector<FDModule> inj;
  for (long j = jlo; j <= jhi; ++j) inj.push_back(dual(q.term(-j)));
  std::vector<HomSpace> hs;
  for (const auto& m : inj) hs.push_back(hom_space(m));
  std::vector<ModuleMap> hd;
  for (long j = jlo; j < jhi; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - jlo);
    ModuleMap g = dual(q.differential(-j - 1));
    ModuleMap dj(inj[k], inj[k + 1], g.blocks());
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < endo_.summands.size(); ++i) blocks.push_back(hom_map(hs[k], hs[k + 1], dj, i));
    hd.emplace_back(hs[k].module, hs[k + 1].module, std::move(blocks));
  }
  // Good truncation in degree top.
  std::vector<FDModule> terms;
  for (std::size_t k = 0; k + 1 < hs.size(); ++k) terms.push_back(hs[k].module);
  SubModule z = kernel(hd.back());
  terms.back() = z.module;
  hd.pop_back();
  if (!hd.empty()) hd.back() = corestrict(hd.back(), z);
  return BddComplex(b, jlo, std::move(terms), std::move(hd));
}

BddComplex rhom_tilting(const FDModule& t, const BddComplex& x) { return TiltingFunctor(t).apply(x); }

// ---------------------------------------------------------------- invariance

InvarianceReport invariance_suite(const FDModule& t, const std::vector<FDModule>& modules,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs, long window_from,
                                  long window_to, std::size_t hh_cap, std::size_t fingerprint_cap) {
  InvarianceReport r;
  r.window_from = window_from;
  r.window_to = window_to;
  r.hh_cap = hh_cap;
  TiltingFunctor func(t);
  const AlgebraPtr& a = t.algebra();
  const AlgebraPtr& b = func.target_algebra();
  const std::size_t cap = std::max(hh_cap, fingerprint_cap);
  Hochschild ha(a, cap), hb(b, cap);
  auto da = ha.dims(), db = hb.dims();
  r.hh_a.assign(da.begin(), da.begin() + static_cast<long>(hh_cap + 1));
  r.hh_b.assign(db.begin(), db.begin() + static_cast<long>(hh_cap + 1));
  r.hh_equal = r.hh_a == r.hh_b;

  std::vector<BddComplex> images;
  for (const auto& m : modules) images.push_back(func.apply(m));
  for (const auto& [i, j] : pairs) {
    PairCheck pc;
    pc.m = i;
    pc.n = j;
    pc.a_side = hyper_hom_dims(BddComplex::stalk(modules[i]), BddComplex::stalk(modules[j]), window_from, window_to);
    pc.b_side = hyper_hom_dims(images[i], images[j], window_from, window_to);
    pc.equal = pc.a_side == pc.b_side;
    r.hyper_hom_equal = r.hyper_hom_equal && pc.equal;
    r.hyper_hom.push_back(std::move(pc));

    PairCheck fc;
    fc.m = i;
    fc.n = j;
    fc.a_side = support_fingerprint(ha, modules[i], 0, modules[j], 0, Selector::Even, fingerprint_cap).dims;
    auto si = images[i].stalk_form(), sj = images[j].stalk_form();
    if (si && sj)
      fc.b_side = support_fingerprint(hb, si->first, si->second, sj->first, sj->second, Selector::Even,
                                      fingerprint_cap).dims;
    fc.equal = si && sj && fc.a_side == fc.b_side;
    r.fingerprints_equal = r.fingerprints_equal && fc.equal;
    r.fingerprints.push_back(std::move(fc));
  }
  return r;
}

}  // namespace qfg
