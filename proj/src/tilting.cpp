#include "quiverfg/tilting.hpp"

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

std::size_t flat_size(const FDModule& x, const FDModule& y) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < x.dims().size(); ++v) s += x.dim(v) * y.dim(v);
  return s;
}

}  // namespace

Approximation left_add_approximation(const FDModule& x, const FDModule& m, std::uint64_t seed) {
  const Field& f = x.field();
  auto classes = isoclasses(m, seed);
  Approximation out;
  std::vector<std::vector<ModuleMap>> homs;
  for (const auto& c : classes) homs.push_back(hom_basis(x, c.module));
  std::vector<ModuleMap> chosen;
  std::vector<FDModule> parts;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const FDModule& mi = classes[i].module;
    SpanBasis span(f, flat_size(x, mi));
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (homs[j].empty()) continue;
      for (const auto& g : radical_hom_basis(classes[j].module, mi, seed))
        for (const auto& h : homs[j]) span.add(flatten(g.after(h)));
    }
    std::size_t copies = 0;
    for (const auto& h : homs[i])
      if (span.add(flatten(h))) {
        chosen.push_back(h);
        parts.push_back(mi);
        ++copies;
      }
    if (copies) {
      out.summands.push_back(mi);
      out.copies.push_back(copies);
    }
  }
  FDModule e = parts.empty() ? FDModule::zero(x.algebra()) : direct_sum_module(parts);
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    Matrix b(f, 0, x.dim(v));
    for (const auto& h : chosen) b = Matrix::vstack(b, h.block(v));
    blocks.push_back(std::move(b));
  }
  out.map = ModuleMap(x, e, std::move(blocks));
  return out;
}

bool factors_through(const ModuleMap& f, const ModuleMap& g) {
  const Field& fld = f.source().field();
  auto basis = hom_basis(f.target(), g.target());
  std::vector<Vector> cols;
  for (const auto& h : basis) cols.push_back(flatten(h.after(f)));
  Vector target = flatten(g);
  if (cols.empty()) return is_zero(target);
  return solve_right(Matrix::from_columns(fld, target.size(), cols), target).has_value();
}

TiltingReport check_tilting(const FDModule& t, std::size_t cap, std::uint64_t seed) {
  TiltingReport r;
  const AlgebraPtr& a = t.algebra();
  auto classes = isoclasses(t, seed);
  r.summands = classes.size();
  ProjResolution res = min_proj_resolution(t, std::max<std::size_t>(cap, 20));
  r.axiom_i = projdim_of(res, std::max<std::size_t>(cap, 20));
  if (!r.axiom_i.is_finite()) {
    r.verdict = r.axiom_i.is_infinite() ? Verdict::No : Verdict::Unknown;
    r.axiom_iii_note = "projective dimension not finite";
    return r;
  }
  r.axiom_ii_checked = r.axiom_i.value + a->loewy_length();
  ExtComputer ext(res, t);
  for (std::size_t n = 1; n <= r.axiom_ii_checked; ++n)
    if (ext.dim(n) != 0) {
      r.axiom_ii_failure = n;
      break;
    }
  // Coresolution of A by iterated approximation cokernels.
  FDModule x = regular_module(a);
  for (std::size_t step = 0; step < cap && !x.is_zero(); ++step) {
    Approximation ap = left_add_approximation(x, t, seed);
    if (!ap.map.is_injective()) {
      r.axiom_iii_note = "approximation at step " + std::to_string(step) + " is not injective";
      break;
    }
    r.coresolution.push_back(ap.map.target());
    x = cokernel(ap.map).module;
  }
  if (x.is_zero() && r.axiom_iii_note.empty()) r.axiom_iii = true;
  else if (r.axiom_iii_note.empty()) r.axiom_iii_note = "no coresolution within " + std::to_string(cap) + " steps";
  r.verdict = (!r.axiom_ii_failure && r.axiom_iii) ? Verdict::Yes : Verdict::No;
  if (!r.axiom_ii_failure && !r.axiom_iii && r.axiom_iii_note.rfind("no coresolution", 0) == 0)
    r.verdict = Verdict::Unknown;
  return r;
}

bool is_almost_complete(const FDModule& t, std::size_t cap, std::uint64_t seed) {
  const AlgebraPtr& a = t.algebra();
  if (isoclasses(t, seed).size() + 1 != a->num_vertices()) return false;
  ProjResolution res = min_proj_resolution(t, cap);
  ProjDimResult pd = projdim_of(res, cap);
  if (!pd.is_finite()) return false;
  ExtComputer ext(res, t);
  for (std::size_t n = 1; n <= pd.value; ++n)
    if (ext.dim(n) != 0) return false;
  return true;
}

Mutation mutate_complement(const FDModule& m, const FDModule& x, std::uint64_t seed) {
  if (!is_indecomposable(x, seed)) throw Error(ErrorCode::NotAComplement, "complement must be indecomposable");
  for (const auto& c : isoclasses(m, seed))
    if (is_isomorphic(c.module, x, seed)) throw Error(ErrorCode::NotAComplement, "complement lies in add M");
  Mutation mu;
  mu.approximation = left_add_approximation(x, m, seed);
  if (!mu.approximation.map.is_injective())
    throw Error(ErrorCode::ApproximationNotMono, "left add(M)-approximation has a kernel");
  mu.complement = cokernel(mu.approximation.map).module;
  return mu;
}

}  // namespace qfg
