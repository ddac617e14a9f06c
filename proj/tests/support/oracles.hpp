#pragma once

// Independent reference computations used only by the tests.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "quiverfg/algebra.hpp"
#include "quiverfg/matrix.hpp"

namespace qfg::oracle {

// Hochschild cohomology from the reduced bar complex relative to the vertex
// idempotents: cochains are maps rad^{(x)n} -> A of bimodules over k^n.
inline std::vector<std::size_t> bar_hh_dims(const FDAlgebra& a, std::size_t cap) {
  const Field& f = a.field();
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> rad;
  for (std::size_t i = nv; i < a.dim(); ++i) rad.push_back(i);
  // Tuples (r_1, ..., r_n) with source(r_i) = target(r_{i+1}); degree 0 uses vertices.
  std::vector<std::vector<std::vector<std::size_t>>> tuples(cap + 2);
  for (std::size_t n = 1; n <= cap + 1; ++n) {
    if (n == 1) {
      for (auto r : rad) tuples[1].push_back({r});
      continue;
    }
    for (const auto& t : tuples[n - 1])
      for (auto r : rad)
        if (a.basis(t.back()).source == a.basis(r).target) {
          auto u = t;
          u.push_back(r);
          tuples[n].push_back(u);
        }
  }
  auto ends = [&](std::size_t n, std::size_t idx) -> std::pair<std::size_t, std::size_t> {
    if (n == 0) return {idx, idx};
    const auto& t = tuples[n][idx];
    return {a.basis(t.back()).source, a.basis(t.front()).target};
  };
  auto count = [&](std::size_t n) { return n == 0 ? nv : tuples[n].size(); };
  auto offsets = [&](std::size_t n) {
    std::vector<std::size_t> off(count(n) + 1, 0);
    for (std::size_t i = 0; i < count(n); ++i) {
      auto [s, t] = ends(n, i);
      off[i + 1] = off[i] + a.words_between(s, t).size();
    }
    return off;
  };
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(cap + 2);
  for (std::size_t n = 1; n <= cap + 1; ++n)
    for (std::size_t i = 0; i < tuples[n].size(); ++i) index[n][tuples[n][i]] = i;

  // Coboundary C^n -> C^{n+1}.
  auto delta = [&](std::size_t n) {
    auto off_n = offsets(n), off_m = offsets(n + 1);
    Matrix m(f, off_m.back(), off_n.back());
    // Column for basis cochain: tuple j, word w (value of f at tuple j is w).
    for (std::size_t i = 0; i < count(n + 1); ++i) {
      const auto& t = tuples[n + 1][i];
      auto add_term = [&](std::size_t j, const Scalar& sign, std::size_t left, std::size_t right) {
        // contribution left * f(tuple j) * right, left/right basis indices or npos
        auto [s, tt] = ends(n, j);
        const auto& words = a.words_between(s, tt);
        for (std::size_t p = 0; p < words.size(); ++p) {
          SparseVector v{{words[p], Scalar(1)}};
          if (left != std::size_t(-1)) {
            SparseVector nv2;
            for (auto& [k, c] : v)
              for (auto& [k2, c2] : a.product(left, k)) nv2.push_back({k2, f.mul(c, c2)});
            v = nv2;
          }
          if (right != std::size_t(-1)) {
            SparseVector nv2;
            for (auto& [k, c] : v)
              for (auto& [k2, c2] : a.product(k, right)) nv2.push_back({k2, f.mul(c, c2)});
            v = nv2;
          }
          for (auto& [k, c] : v) {
            Scalar& slot = m(off_m[i] + a.position_between(k), off_n[j] + p);
            slot = f.add(slot, f.mul(sign, c));
          }
        }
      };
      const std::size_t none = std::size_t(-1);
      // a_1 f(a_2 ...)
      if (n == 0) {
        add_term(a.basis(t[0]).source, Scalar(1), t[0], none);
        add_term(a.basis(t[0]).target, Scalar(-1), none, t[0]);
        continue;
      }
      add_term(index[n].at(std::vector<std::size_t>(t.begin() + 1, t.end())), Scalar(1), t[0], none);
      for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        Scalar sign((k + 1) % 2 == 0 ? 1 : -1);
        for (const auto& [pr, c] : a.product(t[k], t[k + 1])) {
          auto u = t;
          u[k] = pr;
          u.erase(u.begin() + static_cast<long>(k) + 1);
          add_term(index[n].at(u), f.mul(sign, c), none, none);
        }
      }
      Scalar last((n + 1) % 2 == 0 ? 1 : -1);
      add_term(index[n].at(std::vector<std::size_t>(t.begin(), t.end() - 1)), last, none, t.back());
    }
    return m;
  };
  std::vector<std::size_t> dims;
  std::size_t prev_rank = 0;
  for (std::size_t n = 0; n <= cap; ++n) {
    Matrix d = delta(n);
    std::size_t r = rank(d);
    dims.push_back(d.cols() - r - prev_rank);
    prev_rank = r;
  }
  return dims;
}

// Graded dimensions of a commutative monomial quotient k[x_1..x_m]/(monomials)
// with generator degrees deg, by enumeration of surviving monomials.
inline std::vector<std::size_t> monomial_quotient_dims(const std::vector<std::size_t>& deg,
                                                       const std::vector<std::vector<std::size_t>>& killed,
                                                       std::size_t cap) {
  std::vector<std::size_t> out(cap + 1, 0);
  std::vector<std::size_t> e(deg.size(), 0);
  // Enumerate exponent vectors with total degree <= cap (degree-0 generators are nilpotent here).
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t d) {
    if (i == deg.size()) {
      for (const auto& k : killed) {
        bool div = true;
        for (std::size_t j = 0; j < deg.size(); ++j) div = div && e[j] >= k[j];
        if (div) return;
      }
      ++out[d];
      return;
    }
    for (std::size_t x = 0;; ++x) {
      if (d + x * deg[i] > cap || x > cap + 1) break;
      e[i] = x;
      rec(i + 1, d + x * deg[i]);
      if (deg[i] == 0 && x > cap) break;
    }
    e[i] = 0;
  };
  rec(0, 0);
  return out;
}

}  // namespace qfg::oracle
