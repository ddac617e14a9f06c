#include "quiverfg/nakayama.hpp"

#include <algorithm>

#include "quiverfg/error.hpp"

namespace qfg {

namespace {

struct Degrees {
  std::vector<std::size_t> in, out;
  std::vector<std::size_t> next;  // target of the unique outgoing arrow, or n
  std::vector<bool> has_in;
};

Degrees degrees(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  Degrees d{std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, n), {}};
  for (const auto& ar : q.arrows) {
    ++d.out[ar.source];
    ++d.in[ar.target];
    d.next[ar.source] = ar.target;
  }
  return d;
}

}  // namespace

bool is_nakayama(const FDAlgebra& a) {
  auto d = degrees(a.quiver());
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (d.in[v] > 1 || d.out[v] > 1) return false;
  return true;
}

KupischSeries admissible_sequence(const FDAlgebra& a) {
  if (!is_nakayama(a)) throw Error(ErrorCode::NotNakayama, "a vertex has two incoming or two outgoing arrows");
  const std::size_t n = a.num_vertices();
  auto d = degrees(a.quiver());
  auto cartan = a.cartan_matrix();
  auto length = [&](std::size_t v) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += cartan[i][v];
    return s;
  };
  std::vector<bool> seen(n, false);
  KupischSeries k;
  std::size_t components = 0;
  bool any_cycle = false;
  for (std::size_t v0 = 0; v0 < n; ++v0) {
    if (seen[v0]) continue;
    ++components;
    // Walk back to a source, or around the cycle.
    std::vector<std::size_t> prev(n, n);
    for (const auto& ar : a.quiver().arrows) prev[ar.target] = ar.source;
    std::size_t start = v0;
    bool cycle = false;
    while (prev[start] != n) {
      start = prev[start];
      if (start == v0) {
        cycle = true;
        break;
      }
    }
    std::vector<std::size_t> verts;
    for (std::size_t v = start;;) {
      verts.push_back(v);
      seen[v] = true;
      v = d.next[v];
      if (v == n || v == start) break;
    }
    std::vector<std::size_t> lens;
    for (auto v : verts) lens.push_back(length(v));
    if (cycle) {
      any_cycle = true;
      std::size_t best = 0;
      auto rot = [&](std::size_t r) {
        std::vector<std::size_t> out(lens.begin() + r, lens.end());
        out.insert(out.end(), lens.begin(), lens.begin() + r);
        return out;
      };
      for (std::size_t r = 1; r < lens.size(); ++r)
        if (rot(r) < rot(best)) best = r;
      lens = rot(best);
      std::rotate(verts.begin(), verts.begin() + best, verts.end());
    }
    k.lengths.insert(k.lengths.end(), lens.begin(), lens.end());
    k.vertices.insert(k.vertices.end(), verts.begin(), verts.end());
  }
  k.cyclic = components == 1 && any_cycle;
  return k;
}

NakayamaCertificate fg_certificate_nakayama(const AlgebraPtr& a, std::size_t cap) {
  if (!is_nakayama(*a)) throw Error(ErrorCode::NotNakayama, "certificate needs a Nakayama algebra");
  NakayamaCertificate c;
  c.gorenstein = is_gorenstein(a, cap);
  c.verdict = c.gorenstein.verdict;
  return c;
}

}  // namespace qfg
