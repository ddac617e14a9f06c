#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverfg/hochschild.hpp"
#include "quiverfg/nakayama.hpp"

namespace qfg {

enum class FgVerdict { CertifiedYes, CertifiedNo, EvidenceYes, CounterSignal };
std::string to_string(FgVerdict v);

struct FgEvidence {
  FgVerdict verdict = FgVerdict::CounterSignal;
  Selector selector = Selector::Even;
  std::size_t cap = 0;
  std::size_t window = 0;  // top degrees inspected for new module generators
  bool nakayama_route = false;
  std::optional<NakayamaCertificate> certificate;
  std::vector<std::size_t> h_dims;            // dim H^d, d = 0..cap
  std::vector<std::size_t> ring_generators;   // new algebra generators of H per degree
  std::vector<std::size_t> e_dims;            // dim Ext^n(A/rad A, A/rad A)
  std::vector<std::size_t> module_generators; // dim (E / H_+ E)_n
  std::optional<std::size_t> counter_degree;
};

// (Fg) evidence for E = Ext^*(A/rad A, A/rad A) over H.  Nakayama algebras are
// decided by the Gorenstein criterion when it gives a verdict.
FgEvidence fg_evidence(const AlgebraPtr& a, Selector selector = Selector::Even, std::size_t cap = 8);

struct EAeReport {
  std::vector<std::size_t> support;          // vertices of e
  std::vector<ProjDimResult> simple_projdims;  // pd_A S_v for v outside the support
  ProjDimResult ae_projdim;                  // pd of Ae over (eAe)^op
  bool applicable = false;
  AlgebraPtr corner;
};

EAeReport eAe_reduction(const AlgebraPtr& a, const Vector& e, std::size_t cap = 20);
// Ae as a left module over (eAe)^op, where eAe is realised on the support of e.
FDModule ae_over_corner_op(const AlgebraPtr& a, const std::vector<std::size_t>& support, AlgebraPtr* corner_out = nullptr);

// Degreewise dims of H / Ann_H(E) with E_n = Hom(M[-a], N[-b][n]) = Ext^{n+a-b}(M, N),
// the annihilator taken over the degrees n with n + d <= cap.
struct SupportFingerprint {
  Selector selector = Selector::Even;
  std::size_t cap = 0;
  std::vector<std::size_t> h_dims;
  std::vector<std::size_t> dims;
};

SupportFingerprint support_fingerprint(const Hochschild& hh, const FDModule& m, long a, const FDModule& n, long b,
                                       Selector selector, std::size_t cap);
SupportFingerprint support_fingerprint(const AlgebraPtr& alg, const FDModule& m, const FDModule& n,
                                       Selector selector = Selector::Even, std::size_t cap = 4);

}  // namespace qfg
