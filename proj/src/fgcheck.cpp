#include "quiverfg/fgcheck.hpp"

#include <algorithm>
#include <map>

#include "quiverfg/error.hpp"

namespace qfg {

std::string to_string(FgVerdict v) {
  switch (v) {
    case FgVerdict::CertifiedYes: return "CertifiedYes";
    case FgVerdict::CertifiedNo: return "CertifiedNo";
    case FgVerdict::EvidenceYes: return "EvidenceYes";
    case FgVerdict::CounterSignal: return "CounterSignal";
  }
  return "?";
}

namespace {

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

std::size_t span_rank(const Field& f, std::size_t n, const std::vector<Vector>& vs) {
  SpanBasis s(f, n);
  for (const auto& v : vs) s.add(v);
  return s.dimension();
}

}  // namespace

// ---------------------------------------------------------------- fingerprints

SupportFingerprint support_fingerprint(const Hochschild& hh, const FDModule& m, long a, const FDModule& n, long b,
                                       Selector selector, std::size_t cap) {
  if (cap > hh.cap()) throw Error(ErrorCode::DegreeOverflow, "fingerprint degree beyond the Hochschild cap");
  const Field& f = m.field();
  SupportFingerprint fp;
  fp.selector = selector;
  fp.cap = cap;
  const long shift = a - b;
  PhiAction phi(hh, n, cap);
  const std::size_t top = static_cast<std::size_t>(std::max<long>(0, static_cast<long>(cap) + shift));
  ProjResolution p = min_proj_resolution(m, top + 1);
  ExtComputer ext(p, n);
  for (std::size_t d = 0; d <= cap; ++d) {
    if (!selects(selector, f, d) || hh.dim(d) == 0) {
      fp.h_dims.push_back(selects(selector, f, d) ? hh.dim(d) : 0);
      fp.dims.push_back(0);
      continue;
    }
    fp.h_dims.push_back(hh.dim(d));
    std::vector<std::vector<Vector>> images;
    for (std::size_t i = 0; i < hh.dim(d); ++i) images.push_back(phi.apply_cocycle(d, hh.cocycle(d, unit_vector(hh.dim(d), i))));
    // Columns: H_d basis; rows: action on each E_n basis element.
    std::vector<Vector> cols(hh.dim(d));
    for (long nn = std::min<long>(0, -shift); nn + static_cast<long>(d) <= static_cast<long>(cap); ++nn) {
      long k = nn + shift;
      if (k < 0) continue;
      const std::size_t ku = static_cast<std::size_t>(k);
      for (const auto& x : ext.basis(ku)) {
        auto xs = ext.split(ku, x);
        for (std::size_t i = 0; i < images.size(); ++i) {
          auto c = yoneda_compose(p, ku, xs, phi.resolution(), d, images[i], n);
          auto cls = ext.class_of(ku + d, ext.join(ku + d, c));
          cols[i].insert(cols[i].end(), cls.begin(), cls.end());
        }
      }
    }
    std::size_t rows = cols.empty() ? 0 : cols[0].size();
    fp.dims.push_back(rows == 0 ? 0 : rank(Matrix::from_columns(f, rows, cols)));
  }
  return fp;
}

SupportFingerprint support_fingerprint(const AlgebraPtr& alg, const FDModule& m, const FDModule& n, Selector selector,
                                       std::size_t cap) {
  Hochschild hh(alg, cap);
  return support_fingerprint(hh, m, 0, n, 0, selector, cap);
}

// ---------------------------------------------------------------- evidence

FgEvidence fg_evidence(const AlgebraPtr& a, Selector selector, std::size_t cap) {
  FgEvidence ev;
  ev.selector = selector;
  ev.cap = cap;
  ev.window = (cap + 2) / 3;
  if (is_nakayama(*a)) {
    auto cert = fg_certificate_nakayama(a, 20);
    ev.certificate = cert;
    if (cert.verdict != Verdict::Unknown) {
      ev.nakayama_route = true;
      ev.verdict = cert.verdict == Verdict::Yes ? FgVerdict::CertifiedYes : FgVerdict::CertifiedNo;
      return ev;
    }
  }
  const Field& f = a->field();
  Hochschild hh(a, cap);
  FDModule s = top(regular_module(a)).module;
  PhiAction phi(hh, s, cap);
  const auto& q = phi.resolution();
  const auto& ext = phi.ext();
  std::vector<std::vector<std::vector<Vector>>> h_images(cap + 1);
  for (std::size_t d = 0; d <= cap; ++d) {
    bool sel = selects(selector, f, d);
    ev.h_dims.push_back(sel ? hh.dim(d) : 0);
    if (sel && d > 0)
      for (std::size_t i = 0; i < hh.dim(d); ++i)
        h_images[d].push_back(phi.apply_cocycle(d, hh.cocycle(d, unit_vector(hh.dim(d), i))));
  }
  for (std::size_t d = 0; d <= cap; ++d) {
    if (d == 0 || ev.h_dims[d] == 0) {
      ev.ring_generators.push_back(ev.h_dims[d]);
      continue;
    }
    std::vector<Vector> prods;
    for (std::size_t p = 1; p < d; ++p) {
      std::size_t r = d - p;
      if (ev.h_dims[p] == 0 || ev.h_dims[r] == 0) continue;
      for (std::size_t i = 0; i < hh.dim(p); ++i)
        for (std::size_t j = 0; j < hh.dim(r); ++j)
          prods.push_back(hh.cup(p, unit_vector(hh.dim(p), i), r, unit_vector(hh.dim(r), j)));
    }
    ev.ring_generators.push_back(hh.dim(d) - span_rank(f, hh.dim(d), prods));
  }
  for (std::size_t nn = 0; nn <= cap; ++nn) {
    ev.e_dims.push_back(ext.dim(nn));
    std::vector<Vector> spanned;
    for (std::size_t d = 1; d <= nn; ++d)
      for (const auto& img : h_images[d])
        for (const auto& x : ext.basis(nn - d)) {
          auto c = yoneda_compose(q, nn - d, ext.split(nn - d, x), q, d, img, s);
          spanned.push_back(ext.class_of(nn, ext.join(nn, c)));
        }
    ev.module_generators.push_back(ext.dim(nn) - span_rank(f, ext.dim(nn), spanned));
  }
  for (std::size_t nn = cap + 1 - ev.window; nn <= cap; ++nn)
    if (ev.module_generators[nn] > 0) {
      ev.counter_degree = nn;
      break;
    }
  ev.verdict = ev.counter_degree ? FgVerdict::CounterSignal : FgVerdict::EvidenceYes;
  return ev;
}

// ---------------------------------------------------------------- eAe

FDModule ae_over_corner_op(const AlgebraPtr& a, const std::vector<std::size_t>& support, AlgebraPtr* corner_out) {
  const Field& f = a->field();
  const std::size_t ns = support.size();
  std::vector<std::size_t> local(a->num_vertices(), ns);
  for (std::size_t i = 0; i < ns; ++i) local[support[i]] = i;
  // Input basis: support idempotents, then the other words between support vertices.
  std::vector<std::size_t> input;
  std::vector<std::pair<std::size_t, std::size_t>> st;
  std::vector<std::string> labels;
  for (auto v : support) {
    input.push_back(v);
    st.push_back({local[v], local[v]});
    labels.push_back(a->quiver().vertices[v]);
  }
  for (std::size_t i = a->num_vertices(); i < a->dim(); ++i) {
    const auto& w = a->basis(i);
    if (local[w.source] < ns && local[w.target] < ns) {
      input.push_back(i);
      st.push_back({local[w.source], local[w.target]});
    }
  }
  std::vector<std::size_t> where(a->dim(), input.size());
  for (std::size_t k = 0; k < input.size(); ++k) where[input[k]] = k;
  auto mult = [&](std::size_t i, std::size_t j) {
    Vector out(input.size());
    for (const auto& [r, c] : a->product(input[i], input[j])) out[where[r]] = c;
    return out;
  };
  AdaptedAlgebra ad = algebra_from_adapted_basis(f, labels, st, mult);
  AlgebraPtr c = ad.algebra;
  if (corner_out) *corner_out = c;
  AlgebraPtr cop = c->opposite();
  // Space at local vertex i: A e_{support[i]}, words grouped by target.
  std::vector<std::vector<std::size_t>> words(ns);
  std::vector<std::size_t> dims(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t u = 0; u < a->num_vertices(); ++u)
      for (auto w : a->words_between(support[i], u)) words[i].push_back(w);
    dims[i] = words[i].size();
  }
  std::vector<Matrix> arrows;
  for (std::size_t y = 0; y < c->num_arrows(); ++y) {
    const auto& ar = c->quiver().arrows[y];
    // Right multiplication by the arrow element: A e_{target} -> A e_{source}.
    const Vector& elem = ad.word_in_input[c->arrow_basis_index(y)];
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t p = 0; p < words[ar.source].size(); ++p) pos[words[ar.source][p]] = p;
    Matrix m(f, dims[ar.source], dims[ar.target]);
    for (std::size_t col = 0; col < words[ar.target].size(); ++col)
      for (std::size_t k = 0; k < input.size(); ++k) {
        if (sgn(elem[k]) == 0) continue;
        for (const auto& [r, s] : a->product(words[ar.target][col], input[k])) {
          Scalar& slot = m(pos.at(r), col);
          slot = f.add(slot, f.mul(elem[k], s));
        }
      }
    arrows.push_back(std::move(m));
  }
  return FDModule(cop, dims, std::move(arrows)).named("Ae");
}

EAeReport eAe_reduction(const AlgebraPtr& a, const Vector& e, std::size_t cap) {
  if (!is_idempotent(*a, e)) throw Error(ErrorCode::NotIdempotent, "e is not idempotent");
  EAeReport r;
  r.support = idempotent_support(*a, e);
  if (r.support.empty()) throw Error(ErrorCode::Unsupported, "eAe reduction with e = 0");
  std::vector<bool> in(a->num_vertices(), false);
  for (auto v : r.support) in[v] = true;
  bool ok = true;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (!in[v]) {
      r.simple_projdims.push_back(projdim(simple(a, v), cap));
      ok = ok && r.simple_projdims.back().is_finite();
    }
  FDModule ae = ae_over_corner_op(a, r.support, &r.corner);
  r.ae_projdim = projdim(ae, cap);
  r.applicable = ok && r.ae_projdim.is_finite();
  return r;
}

}  // namespace qfg
