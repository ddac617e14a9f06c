#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "quiverfg/homology.hpp"

namespace qfg {

// Which Hochschild degrees form the subalgebra H: all of them, or the even
// ones (all degrees in characteristic 2).
enum class Selector { Full, Even };
bool selects(Selector s, const Field& f, std::size_t degree);
std::string to_string(Selector s);

// A as a left module over A^e = A (x) A^op: the space at vertex (u, w) is
// e_u A e_w, A-arrows act on the left and A^op-arrows on the right.
FDModule regular_bimodule(const AlgebraPtr& a);

// HH^n(A) = Ext^n_{A^e}(A, A) from a minimal resolution of A over A^e.
class Hochschild {
 public:
  Hochschild(AlgebraPtr a, std::size_t cap);

  const AlgebraPtr& algebra() const { return a_; }
  const AlgebraPtr& enveloping_algebra() const { return env_; }
  const FDModule& bimodule() const { return bimodule_; }
  const ProjResolution& resolution() const { return res_; }
  const ExtComputer& ext() const { return *ext_; }
  std::size_t cap() const { return cap_; }

  std::size_t dim(std::size_t n) const { return ext_->dim(n); }
  std::vector<std::size_t> dims() const;
  // Cocycle representative of a class given in basis coordinates.
  Vector cocycle(std::size_t n, const Vector& cls) const;
  // Class of the cup product x . y: the Yoneda composite of y after x.
  Vector cup(std::size_t p, const Vector& x, std::size_t q, const Vector& y) const;
  // Class of the unit in HH^0.
  Vector unit() const;

 private:
  AlgebraPtr a_;
  AlgebraPtr env_;
  FDModule bimodule_;
  std::size_t cap_;
  ProjResolution res_;
  std::shared_ptr<ExtComputer> ext_;
};

std::vector<std::size_t> hh_dims(const AlgebraPtr& a, std::size_t cap);

// The action phi_N : HH^*(A) -> Ext^*_A(N, N), computed by tensoring the
// bimodule resolution with N and comparing with the minimal resolution of N.
class PhiAction {
 public:
  PhiAction(const Hochschild& hh, FDModule n, std::size_t cap);

  const ProjResolution& resolution() const { return q_; }
  const ExtComputer& ext() const { return *ext_; }
  // P_. (x)_A N as a (non-minimal) free resolution of N.
  const ProjResolution& tensored() const { return t_; }
  // Class in Ext^d(N, N) of phi applied to the HH^d class with coordinates cls.
  Vector apply(std::size_t d, const Vector& cls) const;
  // Cochain Q_d -> N representing phi of a bimodule cocycle.
  std::vector<Vector> apply_cocycle(std::size_t d, const Vector& cocycle) const;

 private:
  const Hochschild* hh_;
  FDModule n_;
  std::size_t cap_;
  ProjResolution q_;
  ProjResolution t_;
  // generator (k, basis vector of N at w_k) of T_d for each d
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> t_gens_;
  ChainLift comparison_;
  std::shared_ptr<ExtComputer> ext_;
};

// dim HH^n(A (x) B) = sum_{p+q=n} dim HH^p(A) dim HH^q(B) for n <= cap.
struct KunnethReport {
  std::vector<std::size_t> tensor_dims;
  std::vector<std::size_t> convolution;
  bool equal = false;
};
KunnethReport kunneth_check(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t cap);

}  // namespace qfg
