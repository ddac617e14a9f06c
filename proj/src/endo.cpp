#include "quiverfg/endo.hpp"

#include <algorithm>
#include <map>

#include "quiverfg/error.hpp"

namespace qfg {

namespace {

Vector flatten(const ModuleMap& g) {
  Vector v;
  for (const auto& b : g.blocks())
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) v.push_back(b(r, c));
  return v;
}

}  // namespace

ModuleMap EndoAlgebra::as_map(const Vector& element) const {
  const FDModule& t = basic.sum;
  ModuleMap out = ModuleMap::zero(t, t);
  const Field& f = t.field();
  Vector coeffs(maps.size());
  for (std::size_t i = 0; i < element.size(); ++i)
    if (sgn(element[i]) != 0)
      for (std::size_t k = 0; k < maps.size(); ++k) f.add_mul(coeffs[k], element[i], word_in_maps[i][k]);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    ModuleMap g = basic.inclusions[map_target[k]].after(maps[k]).after(basic.projections[map_source[k]]);
    out = out + g.scaled(coeffs[k]);
  }
  return out;
}

EndoAlgebra endomorphism_algebra(const FDModule& t, EndoConvention convention, std::uint64_t seed) {
  if (t.is_zero()) throw Error(ErrorCode::Unsupported, "endomorphism algebra of the zero module");
  const Field& f = t.field();
  EndoAlgebra e;
  e.convention = convention;
  for (auto& c : isoclasses(t, seed)) {
    e.summands.push_back(c.module);
    e.multiplicities.push_back(c.multiplicity);
  }
  const std::size_t n = e.summands.size();
  e.basic = direct_sum(e.summands);
  for (std::size_t i = 0; i < n; ++i) {
    e.maps.push_back(ModuleMap::identity(e.summands[i]));
    e.map_source.push_back(i);
    e.map_target.push_back(i);
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r) {
      auto basis = s == r ? radical_hom_basis(e.summands[s], e.summands[r], seed) : hom_basis(e.summands[s], e.summands[r]);
      for (auto& g : basis) {
        e.maps.push_back(g);
        e.map_source.push_back(s);
        e.map_target.push_back(r);
      }
    }
  const std::size_t d = e.maps.size();
  // Coordinates of Hom(X_s, X_r) in the chosen basis (identity included on the diagonal).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> members;
  for (std::size_t k = 0; k < d; ++k) members[{e.map_source[k], e.map_target[k]}].push_back(k);
  std::map<std::pair<std::size_t, std::size_t>, LinearSolver> solvers;
  for (auto& [key, ks] : members) {
    std::vector<Vector> cols;
    for (auto k : ks) cols.push_back(flatten(e.maps[k]));
    solvers.emplace(key, LinearSolver(Matrix::from_columns(f, cols[0].size(), cols)));
  }
  const bool op = convention == EndoConvention::Opposite;
  std::vector<std::pair<std::size_t, std::size_t>> st;
  for (std::size_t k = 0; k < d; ++k)
    st.push_back(op ? std::make_pair(e.map_target[k], e.map_source[k]) : std::make_pair(e.map_source[k], e.map_target[k]));
  auto multiply = [&](std::size_t i, std::size_t j) {
    // ActOnLeft: b_i o b_j.  Opposite: b_j o b_i.
    std::size_t first = op ? i : j, second = op ? j : i;
    Vector out(d);
    if (e.map_target[first] != e.map_source[second]) return out;
    ModuleMap g = e.maps[second].after(e.maps[first]);
    std::pair<std::size_t, std::size_t> key{e.map_source[first], e.map_target[second]};
    auto it = members.find(key);
    if (it == members.end()) return out;
    auto sol = solvers.at(key).solve(flatten(g));
    if (!sol) throw Error(ErrorCode::InvalidMap, "composite outside the Hom basis");
    for (std::size_t p = 0; p < it->second.size(); ++p) out[it->second[p]] = (*sol)[p];
    return out;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  AdaptedAlgebra ad = algebra_from_adapted_basis(f, labels, st, multiply);
  e.algebra = ad.algebra;
  e.word_in_maps = ad.word_in_input;
  return e;
}

Presentation present_by_quiver(const AlgebraPtr& a, std::size_t cap) {
  const Field& f = a->field();
  const Quiver& q = a->quiver();
  const std::size_t ll = a->loewy_length();
  if (ll > cap) throw Error(ErrorCode::CapTooSmall, "Loewy length exceeds the path cap");
  // Paths of length <= ll, shortest first; each evaluated in A.
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) paths.push_back({v, {}});
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= ll; ++len) {
    std::size_t end = paths.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t x = 0; x < q.arrows.size(); ++x)
        if (q.arrows[x].source == paths[i].end(q)) {
          Path p = paths[i];
          p.arrows.push_back(x);
          paths.push_back(p);
        }
    begin = end;
  }
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].start, paths[i].arrows}] = i;
  auto evaluate = [&](const Path& p) {
    Vector v = a->basis_vector(p.start);
    for (auto x : p.arrows) v = a->multiply(a->basis_vector(a->arrow_basis_index(x)), v);
    return v;
  };
  std::vector<Vector> cols;
  for (const auto& p : paths) cols.push_back(evaluate(p));
  Matrix phi = Matrix::from_columns(f, a->dim(), cols);
  std::vector<Vector> kernel = kernel_basis(phi);

  // J K + K J inside kQ / J^{ll+1}.
  auto shift = [&](const Vector& k, std::size_t x, bool after) {
    Vector out(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (sgn(k[i]) == 0) continue;
      Path p = paths[i];
      if (after) {
        if (q.arrows[x].source != p.end(q)) continue;
        p.arrows.push_back(x);
      } else {
        if (q.arrows[x].target != p.start) continue;
        p.arrows.insert(p.arrows.begin(), x);
        p.start = q.arrows[x].source;
      }
      auto it = index.find({p.start, p.arrows});
      if (it != index.end()) out[it->second] = k[i];
    }
    return out;
  };
  SpanBasis span(f, paths.size());
  for (const auto& k : kernel)
    for (std::size_t x = 0; x < q.arrows.size(); ++x) {
      span.add(shift(k, x, true));
      span.add(shift(k, x, false));
    }
  Presentation pr;
  pr.quiver = q;
  pr.cap = cap;
  for (const auto& k : kernel) {
    if (!span.add(k)) continue;
    PathExpr rel;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (sgn(k[i]) != 0) rel.terms.push_back({k[i], paths[i]});
    pr.relations.push_back(std::move(rel));
  }
  try {
    pr.quotient = build_quotient(f, q, pr.relations, cap);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotFiniteDimensional) throw Error(ErrorCode::CapTooSmall, err.what());
    throw;
  }
  if (pr.quotient->dim() != a->dim() || pr.quotient->cartan_matrix() != a->cartan_matrix())
    throw Error(ErrorCode::CapTooSmall, "relations up to the cap do not present the algebra");
  for (std::size_t x = 0; x < q.arrows.size(); ++x) pr.arrow_images.push_back(pr.quotient->basis_vector(pr.quotient->arrow_basis_index(x)));
  return pr;
}

std::optional<std::vector<std::size_t>> cartan_match(const FDAlgebra& a, const FDAlgebra& b) {
  const std::size_t n = a.num_vertices();
  if (b.num_vertices() != n) return std::nullopt;
  auto ca = a.cartan_matrix(), cb = b.cartan_matrix();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = ca[p[i]][p[j]] == cb[i][j];
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

}  // namespace qfg
