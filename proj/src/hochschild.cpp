#include "quiverfg/hochschild.hpp"

#include <map>

#include "quiverfg/error.hpp"

namespace qfg {

bool selects(Selector s, const Field& f, std::size_t degree) {
  if (s == Selector::Full || f.characteristic() == 2) return true;
  return degree % 2 == 0;
}

std::string to_string(Selector s) { return s == Selector::Full ? "full" : "even"; }

FDModule regular_bimodule(const AlgebraPtr& a) {
  AlgebraPtr env = enveloping(a);
  const Field& f = a->field();
  const std::size_t n = a->num_vertices(), na = a->num_arrows();
  std::vector<std::size_t> dims(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) dims[u * n + w] = a->words_between(w, u).size();
  std::vector<Matrix> arrows;
  // Left multiplication by arrow x on e_s A e_w.
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t w = 0; w < n; ++w) {
      const auto& ar = a->quiver().arrows[x];
      const auto& cols = a->words_between(w, ar.source);
      Matrix m(f, a->words_between(w, ar.target).size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, s] : a->product(a->arrow_basis_index(x), cols[c])) m(a->position_between(r), c) = s;
      arrows.push_back(std::move(m));
    }
  // Right multiplication by arrow y : s -> t of A, e_u A e_t -> e_u A e_s.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t y = 0; y < na; ++y) {
      const auto& ar = a->quiver().arrows[y];
      const auto& cols = a->words_between(ar.target, u);
      Matrix m(f, a->words_between(ar.source, u).size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, s] : a->product(cols[c], a->arrow_basis_index(y))) m(a->position_between(r), c) = s;
      arrows.push_back(std::move(m));
    }
  return FDModule(env, std::move(dims), std::move(arrows), false).named("A");
}

// ---------------------------------------------------------------- HH

Hochschild::Hochschild(AlgebraPtr a, std::size_t cap)
    : a_(std::move(a)), bimodule_(regular_bimodule(a_)), cap_(cap) {
  env_ = bimodule_.algebra();
  res_ = min_proj_resolution(bimodule_, cap + 1);
  ext_ = std::make_shared<ExtComputer>(res_, bimodule_);
}

std::vector<std::size_t> Hochschild::dims() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= cap_; ++n) out.push_back(dim(n));
  return out;
}

Vector Hochschild::cocycle(std::size_t n, const Vector& cls) const {
  const Field& f = a_->field();
  const auto& b = ext_->basis(n);
  Vector out(ext_->cochain_dim(n));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (sgn(cls[i]) != 0)
      for (std::size_t j = 0; j < out.size(); ++j) f.add_mul(out[j], cls[i], b[i][j]);
  return out;
}

Vector Hochschild::cup(std::size_t p, const Vector& x, std::size_t q, const Vector& y) const {
  if (p + q > cap_) throw Error(ErrorCode::DegreeOverflow, "cup product beyond the degree cap");
  auto eta = ext_->split(p, cocycle(p, x));
  auto theta = ext_->split(q, cocycle(q, y));
  auto c = yoneda_compose(res_, p, eta, res_, q, theta, bimodule_);
  return ext_->class_of(p + q, ext_->join(p + q, c));
}

Vector Hochschild::unit() const { return ext_->class_of(0, ext_->join(0, res_.augmentation())); }

std::vector<std::size_t> hh_dims(const AlgebraPtr& a, std::size_t cap) { return Hochschild(a, cap).dims(); }

// ---------------------------------------------------------------- phi

PhiAction::PhiAction(const Hochschild& hh, FDModule n, std::size_t cap) : hh_(&hh), n_(std::move(n)), cap_(cap) {
  if (cap > hh.cap()) throw Error(ErrorCode::DegreeOverflow, "phi degree beyond the Hochschild cap");
  const AlgebraPtr& a = hh.algebra();
  const FDAlgebra& env = *hh.enveloping_algebra();
  const auto& tf = *env.tensor_factors();
  const std::size_t nv = a->num_vertices();
  const Field& f = a->field();
  const ProjResolution& p = hh.resolution();
  q_ = min_proj_resolution(n_, cap + 1);
  ext_ = std::make_shared<ExtComputer>(q_, n_);

  const std::size_t terms = std::min(p.length(), cap + 2);
  std::vector<std::vector<std::size_t>> gens(terms);
  t_gens_.assign(terms, {});
  for (std::size_t d = 0; d < terms; ++d) {
    const auto& pg = p.gens(d);
    for (std::size_t k = 0; k < pg.size(); ++k) {
      std::size_t u = pg[k] / nv, w = pg[k] % nv;
      for (std::size_t b = 0; b < n_.dim(w); ++b) {
        gens[d].push_back(u);
        t_gens_[d].push_back({k, b});
      }
    }
  }
  std::vector<FreeMap> diffs(terms);
  for (std::size_t d = 1; d < terms; ++d) {
    FreeMap& fm = diffs[d];
    fm.source = gens[d];
    fm.target = gens[d - 1];
    fm.entries.assign(fm.source.size(), std::vector<SparseVector>(fm.target.size()));
    const FreeMap& pd = p.differential(d);
    // first T generator index of each P generator in degree d - 1
    std::vector<std::size_t> first(pd.target.size() + 1, 0);
    for (std::size_t l = 0; l < pd.target.size(); ++l) first[l + 1] = first[l] + n_.dim(pd.target[l] % nv);
    std::size_t row = 0;
    for (std::size_t k = 0; k < pd.source.size(); ++k) {
      const std::size_t wk = pd.source[k] % nv;
      for (std::size_t b = 0; b < n_.dim(wk); ++b, ++row) {
        for (std::size_t l = 0; l < pd.target.size(); ++l) {
          std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;  // (b', i) -> coefficient
          for (const auto& [idx, c] : pd.entries[k][l]) {
            auto [i, j] = tf.index_to_pair[idx];
            const Matrix& rho = n_.action(j);
            for (std::size_t b2 = 0; b2 < rho.rows(); ++b2) {
              if (sgn(rho(b2, b)) == 0) continue;
              Scalar& s = acc[{b2, i}];
              s = f.add(s, f.mul(c, rho(b2, b)));
            }
          }
          for (auto& [key, s] : acc)
            if (sgn(s) != 0) fm.entries[row][first[l] + key.first].push_back({key.second, s});
        }
      }
    }
  }
  std::vector<Vector> aug;
  {
    const auto& pg = p.gens(0);
    for (std::size_t k = 0; k < pg.size(); ++k) {
      std::size_t u = pg[k] / nv, w = pg[k] % nv;
      const auto& words = a->words_between(w, u);
      for (std::size_t b = 0; b < n_.dim(w); ++b) {
        Vector nb(n_.dim(w));
        nb[b] = 1;
        Vector out(n_.dim(u));
        for (std::size_t pos = 0; pos < words.size(); ++pos) {
          const Scalar& c = p.augmentation()[k][pos];
          if (sgn(c) == 0) continue;
          out = add(f, out, scale(f, c, n_.apply(words[pos], nb)));
        }
        aug.push_back(std::move(out));
      }
    }
  }
  t_ = ProjResolution::from_data(n_, std::move(gens), std::move(diffs), std::move(aug), p.complete());
  const std::size_t steps = p.complete() ? cap : std::min(cap, terms - 1);
  comparison_ = lift_cocycle(q_, 0, q_.augmentation(), t_, steps);
}

std::vector<Vector> PhiAction::apply_cocycle(std::size_t d, const Vector& cocycle) const {
  if (d > cap_ || d >= comparison_.size()) throw Error(ErrorCode::DegreeOverflow, "phi beyond the comparison map");
  const AlgebraPtr& a = hh_->algebra();
  const Field& f = a->field();
  const std::size_t nv = a->num_vertices();
  auto eta = hh_->ext().split(d, cocycle);
  const auto& pg = hh_->resolution().gens(d);
  std::vector<Vector> values;
  for (const auto& [k, b] : d < t_gens_.size() ? t_gens_[d] : std::vector<std::pair<std::size_t, std::size_t>>{}) {
    std::size_t u = pg[k] / nv, w = pg[k] % nv;
    const auto& words = a->words_between(w, u);
    Vector nb(n_.dim(w));
    nb[b] = 1;
    Vector out(n_.dim(u));
    for (std::size_t pos = 0; pos < words.size(); ++pos)
      if (sgn(eta[k][pos]) != 0) out = add(f, out, scale(f, eta[k][pos], n_.apply(words[pos], nb)));
    values.push_back(std::move(out));
  }
  std::vector<Vector> result;
  const auto& qg = q_.gens(d);
  for (std::size_t g = 0; g < qg.size(); ++g)
    result.push_back(evaluate_on_free(*a, t_.gens(d), qg[g], comparison_[d][g], n_, values));
  return result;
}

Vector PhiAction::apply(std::size_t d, const Vector& cls) const {
  return ext_->class_of(d, ext_->join(d, apply_cocycle(d, hh_->cocycle(d, cls))));
}

// ---------------------------------------------------------------- Kunneth

KunnethReport kunneth_check(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t cap) {
  KunnethReport r;
  auto da = hh_dims(a, cap), db = hh_dims(b, cap);
  r.tensor_dims = hh_dims(tensor(a, b), cap);
  for (std::size_t n = 0; n <= cap; ++n) {
    std::size_t s = 0;
    for (std::size_t p = 0; p <= n; ++p) s += da[p] * db[n - p];
    r.convolution.push_back(s);
  }
  r.equal = r.convolution == r.tensor_dims;
  return r;
}

}  // namespace qfg
