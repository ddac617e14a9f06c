#include "quiverfg/catalog.hpp"

#include "quiverfg/error.hpp"

namespace qfg::catalog {

Quiver example4_quiver() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
  return q;
}

AlgebraPtr example4(Field f) {
  Quiver q = example4_quiver();
  return build_quotient(f, q, {PathExpr::from_function_order(q, "bacba"), PathExpr::from_function_order(q, "cbac")});
}

Quiver endo_quiver() {
  Quiver q;
  q.vertices = {"I", "II", "III"};
  q.arrows = {{"g", 0, 1}, {"d", 1, 0}, {"h", 1, 2}, {"t", 2, 0}};
  return q;
}

std::vector<PathExpr> endo_relations(const Quiver& q) {
  return {PathExpr::parse(q, "g*d*g"), PathExpr::parse(q, "g*h"), PathExpr::parse(q, "d*g*d - h*t"),
          PathExpr::parse(q, "t*g")};
}

AlgebraPtr endo_quotient(Field f) {
  Quiver q = endo_quiver();
  return build_quotient(f, q, endo_relations(q));
}

AlgebraPtr truncated_polynomial(std::size_t n, Field f) {
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "k[x]/(x^n) needs n >= 1");
  Quiver q;
  q.vertices = {"1"};
  if (n == 1) return build_quotient(f, q, {});
  q.arrows = {{"x", 0, 0}};
  std::string word = "x";
  for (std::size_t i = 1; i < n; ++i) word += "*x";
  return build_quotient(f, q, {PathExpr::parse(q, word)});
}

AlgebraPtr exterior_square(Field f) {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  return build_quotient(f, q, {PathExpr::parse(q, "x*x"), PathExpr::parse(q, "y*y"), PathExpr::parse(q, "x*y - y*x")});
}

AlgebraPtr linear_path(std::size_t n, Field f) {
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return build_quotient(f, q, {});
}

AlgebraPtr semisimple(std::size_t n, Field f) {
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  return build_quotient(f, q, {});
}

AlgebraPtr cyclic_nakayama(const std::vector<std::size_t>& kupisch, Field f) {
  const std::size_t n = kupisch.size();
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
  // P_i has Loewy length c_i: the path of length c_i starting at i vanishes.
  std::vector<PathExpr> rels;
  for (std::size_t i = 0; i < n; ++i) {
    if (kupisch[i] < 1) throw Error(ErrorCode::NotAdmissible, "Kupisch entries must be positive");
    Path p{i, {}};
    for (std::size_t k = 0; k < kupisch[i]; ++k) p.arrows.push_back((i + k) % n);
    if (p.length() < 2) throw Error(ErrorCode::NotAdmissible, "Kupisch entries must be at least 2 on a cycle");
    rels.push_back(PathExpr{{{Scalar(1), p}}});
  }
  return build_quotient(f, q, rels);
}

AlgebraPtr triangular2(Field f) { return linear_path(2, f); }

std::vector<std::string> names() {
  return {"example4", "endo4", "kx2", "kx3", "kxy", "A2", "A3", "k", "kxk"};
}

AlgebraPtr by_name(const std::string& name, Field f) {
  if (name == "example4") return example4(f);
  if (name == "endo4") return endo_quotient(f);
  if (name == "kx2") return truncated_polynomial(2, f);
  if (name == "kx3") return truncated_polynomial(3, f);
  if (name == "kxy") return exterior_square(f);
  if (name == "A2") return linear_path(2, f);
  if (name == "A3") return linear_path(3, f);
  if (name == "k") return semisimple(1, f);
  if (name == "kxk") return semisimple(2, f);
  throw Error(ErrorCode::UnknownScenario, "unknown algebra '" + name + "'");
}

}  // namespace qfg::catalog
