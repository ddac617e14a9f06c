#include "quiverfg/field.hpp"

#include "quiverfg/error.hpp"

namespace qfg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::ZeroQuotient: return "ZeroQuotient";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotNakayama: return "NotNakayama";
    case ErrorCode::NoQuiverProvenance: return "NoQuiverProvenance";
    case ErrorCode::ApproximationNotMono: return "ApproximationNotMono";
    case ErrorCode::NotAComplement: return "NotAComplement";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::TiltingNotVerified: return "TiltingNotVerified";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
  }
  return "Unknown";
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime(p)) throw Error(ErrorCode::Unsupported, "Fp(" + std::to_string(p) + ") is not a prime field");
  return Field(p);
}

void Field::reduce(Scalar& x) const {
  if (p_ == 0) return;
  if (x.get_den() != 1) {
    mpz_class den = x.get_den();
    mpz_class inv;
    mpz_class pp(p_);
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()) == 0)
      throw Error(ErrorCode::Unsupported, "denominator not invertible in " + to_string());
    mpz_class num = x.get_num() * inv;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    x = mpq_class(num);
    return;
  }
  mpz_class num = x.get_num();
  if (num >= 0 && num < p_) return;
  mpz_fdiv_r_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p_));
  x = mpq_class(num);
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar x = q;
  reduce(x);
  return x;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (p_ != 0 && r >= p_) r -= p_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (p_ != 0 && r < 0) r += p_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  reduce(r);
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Scalar(p_) - a;
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error(ErrorCode::Unsupported, "division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class pp(p_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), pp.get_mpz_t());
  return mpq_class(r);
}

void Field::sub_mul(Scalar& a, const Scalar& c, const Scalar& b) const {
  if (p_ == 0) {
    a -= c * b;
    return;
  }
  a -= c * b;
  reduce(a);
}

void Field::add_mul(Scalar& a, const Scalar& c, const Scalar& b) const {
  if (p_ == 0) {
    a += c * b;
    return;
  }
  a += c * b;
  reduce(a);
}

std::string Field::to_string() const {
  if (p_ == 0) return "Q";
  return "Fp(" + std::to_string(p_) + ")";
}

}  // namespace qfg
