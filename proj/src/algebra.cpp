#include "quiverfg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "quiverfg/error.hpp"

namespace qfg {

// ---------------------------------------------------------------- Quiver

std::optional<std::size_t> Quiver::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return i;
  return std::nullopt;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw Error(ErrorCode::ParseError, "duplicate vertex label '" + v + "'");
  std::set<std::string> seen_arrows;
  for (const auto& a : arrows) {
    if (!seen_arrows.insert(a.label).second) throw Error(ErrorCode::ParseError, "duplicate arrow label '" + a.label + "'");
    if (a.source >= vertices.size() || a.target >= vertices.size())
      throw Error(ErrorCode::ParseError, "arrow '" + a.label + "' has an undeclared endpoint");
  }
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.start];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].label;
  }
  return s;
}

namespace {

bool parse_rational(std::string_view tok, mpq_class& out) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  if (tok[0] == '+' || tok[0] == '-') i = 1;
  if (i == tok.size()) return false;
  bool slash = false;
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (tok[j] == '/') {
      if (slash || j == i || j + 1 == tok.size()) return false;
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
      return false;
    }
  }
  try {
    out = mpq_class(std::string(tok));
    if (out.get_den() == 0) return false;
    out.canonicalize();
  } catch (...) {
    return false;
  }
  return true;
}

Path parse_path_word(const Quiver& q, std::string_view text) {
  Path p;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view tok = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    auto idx = q.arrow_index(tok);
    if (!idx) throw Error(ErrorCode::ParseError, "unknown arrow '" + std::string(tok) + "'");
    const Arrow& a = q.arrows[*idx];
    if (first) {
      p.start = a.source;
      first = false;
    } else if (q.arrows[p.arrows.back()].target != a.source) {
      throw Error(ErrorCode::ParseError, "path '" + std::string(text) + "' is not composable");
    }
    p.arrows.push_back(*idx);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return p;
}

}  // namespace

PathExpr PathExpr::parse(const Quiver& q, std::string_view text) {
  // Tokenise into sign-separated terms.
  PathExpr expr;
  std::string s(text);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw Error(ErrorCode::ParseError, "empty path expression");
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!expr.terms.empty()) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' in '" + s + "'");
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.pop_back();
    if (term.empty()) throw Error(ErrorCode::ParseError, "dangling sign in '" + s + "'");
    mpq_class coeff = 1;
    std::string word = term;
    // Optional leading coefficient separated by whitespace or '*'.
    std::size_t sep = term.find_first_of(" \t*");
    if (sep != std::string::npos) {
      std::string head = term.substr(0, sep);
      mpq_class c;
      if (!q.arrow_index(head) && parse_rational(head, c)) {
        coeff = c;
        word = term.substr(sep + 1);
        std::size_t b = word.find_first_not_of(" \t");
        word = b == std::string::npos ? std::string() : word.substr(b);
      }
    }
    // Remove interior whitespace around '*'.
    std::string compact;
    for (char ch : word)
      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    if (compact.empty()) throw Error(ErrorCode::ParseError, "term without a path in '" + s + "'");
    Path p = parse_path_word(q, compact);
    expr.terms.push_back({coeff * sign, std::move(p)});
  }
  return expr;
}

PathExpr PathExpr::from_function_order(const Quiver& q, std::string_view word) {
  std::string traversal;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!traversal.empty()) traversal += '*';
    traversal += *it;
  }
  return parse(q, traversal);
}

std::string PathExpr::to_string(const Quiver& q) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    mpq_class c = terms[i].coeff;
    if (i == 0) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) os << c << " ";
    os << path_to_string(q, terms[i].path);
  }
  return os.str();
}

// ---------------------------------------------------------------- FDAlgebra

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

FDAlgebra::FDAlgebra(Field field, Quiver quiver, std::vector<BasisWord> basis, std::vector<SparseVector> products,
                     std::optional<std::vector<PathExpr>> relations)
    : field_(field),
      quiver_(std::move(quiver)),
      basis_(std::move(basis)),
      products_(std::move(products)),
      relations_(std::move(relations)) {
  const std::size_t n = quiver_.num_vertices();
  const std::size_t d = basis_.size();
  if (products_.size() != d * d) throw Error(ErrorCode::DimensionMismatch, "structure constant table size");
  if (d < n + quiver_.arrows.size()) throw Error(ErrorCode::DimensionMismatch, "basis shorter than vertices + arrows");
  for (std::size_t v = 0; v < n; ++v)
    if (!basis_[v].word.empty() || basis_[v].source != v || basis_[v].target != v)
      throw Error(ErrorCode::DimensionMismatch, "basis must start with the vertex idempotents");
  for (std::size_t x = 0; x < quiver_.arrows.size(); ++x) {
    const auto& b = basis_[n + x];
    if (b.word.size() != 1 || b.word[0] != x) throw Error(ErrorCode::DimensionMismatch, "arrows must follow the idempotents");
  }
  between_.assign(n * n, {});
  position_.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    auto& list = between_[basis_[i].target * n + basis_[i].source];
    position_[i] = list.size();
    list.push_back(i);
  }
  prefix_.assign(d, d);
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[{basis_[i].source, basis_[i].word}] = i;
  for (std::size_t i = n; i < d; ++i) {
    auto w = basis_[i].word;
    w.pop_back();
    auto it = index.find({basis_[i].source, w});
    if (it != index.end()) prefix_[i] = it->second;
  }

  std::uint64_t h = mix(0, static_cast<std::uint64_t>(field_.characteristic()));
  h = mix(h, n);
  h = mix(h, d);
  for (const auto& a : quiver_.arrows) h = mix(mix(h, a.source), a.target);
  for (const auto& b : basis_) {
    h = mix(mix(h, b.source), b.target);
    for (auto x : b.word) h = mix(h, x + 1);
  }
  for (std::size_t k = 0; k < products_.size(); ++k) {
    for (const auto& [idx, c] : products_[k]) {
      h = mix(h, k);
      h = mix(h, idx);
      h = mix(h, static_cast<std::uint64_t>(c.get_num().get_si()));
      h = mix(h, static_cast<std::uint64_t>(c.get_den().get_si()));
    }
  }
  fingerprint_ = h;
}

Vector FDAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw Error(ErrorCode::DimensionMismatch, "algebra multiply");
  Vector r(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& p = product(i, j);
      if (p.empty()) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (const auto& [k, v] : p) field_.add_mul(r[k], c, v);
    }
  }
  return r;
}

Vector FDAlgebra::unit() const {
  Vector u(dim());
  for (std::size_t v = 0; v < num_vertices(); ++v) u[v] = 1;
  return u;
}

Vector FDAlgebra::basis_vector(std::size_t i) const {
  Vector u(dim());
  u[i] = 1;
  return u;
}

std::size_t FDAlgebra::loewy_length() const {
  if (loewy_length_ != 0) return loewy_length_;
  // rad^{k+1} = arrows * rad^k, computed as spans.
  std::vector<Vector> layer;
  for (std::size_t i = num_vertices(); i < dim(); ++i) layer.push_back(basis_vector(i));
  std::size_t ll = 1;
  while (!layer.empty()) {
    ++ll;
    SpanBasis next(field_, dim());
    for (std::size_t x = 0; x < num_arrows(); ++x) {
      Vector ax = basis_vector(arrow_basis_index(x));
      for (const auto& v : layer) next.add(multiply(ax, v));
    }
    layer = next.generators();
  }
  loewy_length_ = ll;
  return loewy_length_;
}

std::vector<std::vector<std::size_t>> FDAlgebra::cartan_matrix() const {
  const std::size_t n = num_vertices();
  std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = words_between(j, i).size();
  return c;
}

bool FDAlgebra::same_as(const FDAlgebra& other) const {
  if (this == &other) return true;
  return fingerprint_ == other.fingerprint_ && dim() == other.dim() && num_vertices() == other.num_vertices() &&
         field_ == other.field_;
}

bool FDAlgebra::check_associativity() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (basis_[i].source != basis_[j].target) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (basis_[j].source != basis_[k].target) continue;
        Vector left(d), right(d);
        for (const auto& [a, c] : product(i, j))
          for (const auto& [b, c2] : product(a, k)) field_.add_mul(left[b], c, c2);
        for (const auto& [a, c] : product(j, k))
          for (const auto& [b, c2] : product(i, a)) field_.add_mul(right[b], c, c2);
        if (left != right) return false;
      }
    }
  // Idempotent laws.
  for (std::size_t v = 0; v < num_vertices(); ++v)
    for (std::size_t i = 0; i < d; ++i) {
      const auto& l = product(v, i);
      bool expect = basis_[i].target == v;
      if (expect != (l.size() == 1 && l[0].first == i && l[0].second == 1) && !(expect == false && l.empty())) return false;
      const auto& r = product(i, v);
      bool expect_r = basis_[i].source == v;
      if (expect_r != (r.size() == 1 && r[0].first == i && r[0].second == 1) && !(expect_r == false && r.empty()))
        return false;
    }
  return true;
}

AlgebraPtr make_opposite(const FDAlgebra& a) {
  Quiver q;
  q.vertices = a.quiver().vertices;
  for (const auto& x : a.quiver().arrows) q.arrows.push_back({x.label, x.target, x.source});
  std::vector<BasisWord> basis;
  for (const auto& b : a.basis()) {
    BasisWord w{b.target, b.source, std::vector<std::size_t>(b.word.rbegin(), b.word.rend())};
    basis.push_back(std::move(w));
  }
  const std::size_t d = a.dim();
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i * d + j] = a.product(j, i);
  std::optional<std::vector<PathExpr>> rels;
  if (a.relations()) {
    rels.emplace();
    for (const auto& r : *a.relations()) {
      PathExpr e;
      for (const auto& t : r.terms) {
        Path p;
        p.start = t.path.end(a.quiver());
        p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
        e.terms.push_back({t.coeff, std::move(p)});
      }
      rels->push_back(std::move(e));
    }
  }
  return std::make_shared<FDAlgebra>(a.field(), std::move(q), std::move(basis), std::move(products), std::move(rels));
}

AlgebraPtr FDAlgebra::opposite() const {
  if (opposite_strong_) return opposite_strong_;
  if (auto sp = opposite_weak_.lock()) return sp;
  auto op = std::const_pointer_cast<FDAlgebra>(make_opposite(*this));
  op->opposite_weak_ = weak_from_this();
  opposite_strong_ = op;
  return op;
}

AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

// ---------------------------------------------------------------- build_quotient

namespace {

struct PathKeyLess {
  bool operator()(const Path& a, const Path& b) const {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.start < b.start;
  }
};

std::vector<Path> all_paths_up_to(const Quiver& q, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) layer.push_back(Path{v, {}});
  out = layer;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      std::size_t e = p.end(q);
      for (std::size_t x = 0; x < q.arrows.size(); ++x) {
        if (q.arrows[x].source != e) continue;
        Path np = p;
        np.arrows.push_back(x);
        next.push_back(std::move(np));
      }
    }
    layer = std::move(next);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end(), PathKeyLess{});
  return out;
}

Path concat(const Path& first, const Path& second) {
  Path p = first;
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  return p;
}

}  // namespace

AlgebraPtr build_quotient(Field field, const Quiver& q, const std::vector<PathExpr>& rels, std::size_t cap) {
  q.validate();
  // Split every relation into vertex-homogeneous components.
  std::vector<PathExpr> comps;
  for (const auto& r : rels) {
    std::map<std::pair<std::size_t, std::size_t>, PathExpr> by_ends;
    for (const auto& t : r.terms) {
      if (t.path.length() < 2)
        throw Error(ErrorCode::NotAdmissible, "relation has a component of length < 2: " + r.to_string(q));
      Scalar c = field.from_rational(t.coeff);
      if (sgn(c) == 0) continue;
      by_ends[{t.path.start, t.path.end(q)}].terms.push_back({c, t.path});
    }
    for (auto& [k, e] : by_ends) comps.push_back(std::move(e));
  }

  for (std::size_t L = 1; L <= cap; ++L) {
    std::vector<Path> paths = all_paths_up_to(q, L);
    const std::size_t np = paths.size();
    std::map<Path, std::size_t, PathKeyLess> col_of;  // column index, longest first
    for (std::size_t i = 0; i < np; ++i) col_of[paths[i]] = np - 1 - i;

    std::vector<Vector> gens;
    std::vector<std::vector<const Path*>> ending_at(q.num_vertices()), starting_at(q.num_vertices());
    for (const auto& p : paths) {
      ending_at[p.end(q)].push_back(&p);
      starting_at[p.start].push_back(&p);
    }
    for (const auto& r : comps) {
      std::size_t s = r.terms.front().path.start;
      std::size_t t = r.terms.front().path.end(q);
      std::size_t minlen = cap + 1;
      for (const auto& term : r.terms) minlen = std::min(minlen, term.path.length());
      if (minlen > L) continue;
      for (const Path* v : ending_at[s]) {
        if (v->length() + minlen > L) continue;
        for (const Path* u : starting_at[t]) {
          if (v->length() + u->length() + minlen > L) continue;
          Vector g(np);
          bool any = false;
          for (const auto& term : r.terms) {
            Path full = concat(concat(*v, term.path), *u);
            full.start = v->start;
            if (full.length() > L) continue;
            field.add_mul(g[col_of.at(full)], term.coeff, Scalar(1));
            any = true;
          }
          if (any && !is_zero(g)) gens.push_back(std::move(g));
        }
      }
    }
    Matrix gm = Matrix::from_columns(field, np, gens).transpose();
    RowEchelon e = rref(gm);
    std::vector<long> row_of_col(np, -1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) row_of_col[e.pivots[k]] = static_cast<long>(k);

    // A path of length L lies in the ideal iff it is a pivot whose row has no other entries.
    bool top_layer_zero = true;
    for (std::size_t i = 0; i < np && top_layer_zero; ++i) {
      if (paths[i].length() != L) continue;
      std::size_t c = col_of.at(paths[i]);
      if (row_of_col[c] < 0) {
        top_layer_zero = false;
        break;
      }
      for (std::size_t j = 0; j < np; ++j)
        if (j != c && sgn(e.reduced(static_cast<std::size_t>(row_of_col[c]), j)) != 0) {
          top_layer_zero = false;
          break;
        }
    }
    if (!top_layer_zero) continue;

    // Standard (non-pivot) paths form the basis.
    std::vector<std::size_t> std_paths;  // indices into `paths` (ascending order)
    for (std::size_t i = 0; i < np; ++i)
      if (row_of_col[col_of.at(paths[i])] < 0) std_paths.push_back(i);
    // Order: idempotents by vertex, arrows by index, then by path key.
    std::vector<Path> basis_paths;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) basis_paths.push_back(Path{v, {}});
    for (std::size_t x = 0; x < q.arrows.size(); ++x) basis_paths.push_back(Path{q.arrows[x].source, {x}});
    for (auto i : std_paths)
      if (paths[i].length() >= 2) basis_paths.push_back(paths[i]);
    std::map<Path, std::size_t, PathKeyLess> basis_index;
    for (std::size_t i = 0; i < basis_paths.size(); ++i) basis_index[basis_paths[i]] = i;
    if (basis_index.size() != basis_paths.size())
      throw Error(ErrorCode::NotAdmissible, "arrows or vertices vanish in the quotient");

    auto normal_form = [&](const Path& p) {
      SparseVector out;
      if (p.length() >= L) return out;
      std::size_t c = col_of.at(p);
      if (row_of_col[c] < 0) {
        out.push_back({basis_index.at(p), Scalar(1)});
        return out;
      }
      std::size_t r = static_cast<std::size_t>(row_of_col[c]);
      for (std::size_t j = 0; j < np; ++j) {
        if (j == c || sgn(e.reduced(r, j)) == 0) continue;
        const Path& other = paths[np - 1 - j];
        out.push_back({basis_index.at(other), field.neg(e.reduced(r, j))});
      }
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return out;
    };

    const std::size_t d = basis_paths.size();
    std::vector<BasisWord> basis;
    for (const auto& p : basis_paths) basis.push_back({p.start, p.end(q), p.arrows});
    std::vector<SparseVector> products(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (basis[i].source != basis[j].target) continue;
        // b_i * b_j: traverse b_j, then b_i.
        Path p = concat(basis_paths[j], basis_paths[i]);
        p.start = basis_paths[j].start;
        products[i * d + j] = normal_form(p);
      }
    return std::make_shared<FDAlgebra>(field, q, std::move(basis), std::move(products), rels);
  }
  throw Error(ErrorCode::NotFiniteDimensional,
              "paths of length " + std::to_string(cap) + " survive the relations (cap reached)");
}

// ---------------------------------------------------------------- tensor

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field() != b->field()) throw Error(ErrorCode::FieldMismatch, "tensor of algebras over different fields");
  const Field& f = a->field();
  const std::size_t nA = a->num_vertices(), nB = b->num_vertices();
  const std::size_t aA = a->num_arrows(), aB = b->num_arrows();
  const std::size_t dA = a->dim(), dB = b->dim();
  const std::size_t n = nA * nB;

  Quiver q;
  for (std::size_t u = 0; u < nA; ++u)
    for (std::size_t w = 0; w < nB; ++w)
      q.vertices.push_back("(" + a->quiver().vertices[u] + "," + b->quiver().vertices[w] + ")");
  for (std::size_t x = 0; x < aA; ++x)
    for (std::size_t w = 0; w < nB; ++w) {
      const auto& ar = a->quiver().arrows[x];
      q.arrows.push_back({"(" + ar.label + "," + b->quiver().vertices[w] + ")", ar.source * nB + w, ar.target * nB + w});
    }
  for (std::size_t u = 0; u < nA; ++u)
    for (std::size_t y = 0; y < aB; ++y) {
      const auto& ar = b->quiver().arrows[y];
      q.arrows.push_back({"(" + a->quiver().vertices[u] + "," + ar.label + ")", u * nB + ar.source, u * nB + ar.target});
    }
  auto a_arrow = [&](std::size_t x, std::size_t w) { return x * nB + w; };
  auto b_arrow = [&](std::size_t u, std::size_t y) { return aA * nB + u * aB + y; };

  std::vector<std::size_t> pair_to_index(dA * dB);
  std::vector<std::pair<std::size_t, std::size_t>> index_to_pair(dA * dB);
  std::size_t next = n + aA * nB + nA * aB;
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t j = 0; j < dB; ++j) {
      std::size_t idx;
      bool ia = i >= nA && i < nA + aA, jb = j >= nB && j < nB + aB;
      if (i < nA && j < nB) idx = i * nB + j;
      else if (ia && j < nB) idx = n + a_arrow(i - nA, j);
      else if (i < nA && jb) idx = n + b_arrow(i, j - nB);
      else idx = next++;
      pair_to_index[i * dB + j] = idx;
      index_to_pair[idx] = {i, j};
    }

  const std::size_t d = dA * dB;
  std::vector<BasisWord> basis(d);
  for (std::size_t idx = 0; idx < d; ++idx) {
    auto [i, j] = index_to_pair[idx];
    const auto& p = a->basis(i);
    const auto& r = b->basis(j);
    BasisWord w;
    w.source = p.source * nB + r.source;
    w.target = p.target * nB + r.target;
    for (auto y : r.word) w.word.push_back(b_arrow(p.source, y));
    for (auto x : p.word) w.word.push_back(a_arrow(x, r.target));
    basis[idx] = std::move(w);
  }

  std::vector<SparseVector> products(d * d);
  for (std::size_t I = 0; I < d; ++I) {
    auto [i, j] = index_to_pair[I];
    for (std::size_t J = 0; J < d; ++J) {
      if (basis[I].source != basis[J].target) continue;
      auto [k, l] = index_to_pair[J];
      const auto& pa = a->product(i, k);
      const auto& pb = b->product(j, l);
      if (pa.empty() || pb.empty()) continue;
      SparseVector out;
      for (const auto& [s, c1] : pa)
        for (const auto& [t, c2] : pb) out.push_back({pair_to_index[s * dB + t], f.mul(c1, c2)});
      std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      products[I * d + J] = std::move(out);
    }
  }

  std::optional<std::vector<PathExpr>> rels;
  if (a->relations() && b->relations()) {
    rels.emplace();
    for (const auto& r : *a->relations())
      for (std::size_t w = 0; w < nB; ++w) {
        PathExpr e;
        for (const auto& t : r.terms) {
          Path p{t.path.start * nB + w, {}};
          for (auto x : t.path.arrows) p.arrows.push_back(a_arrow(x, w));
          e.terms.push_back({t.coeff, std::move(p)});
        }
        rels->push_back(std::move(e));
      }
    for (const auto& r : *b->relations())
      for (std::size_t u = 0; u < nA; ++u) {
        PathExpr e;
        for (const auto& t : r.terms) {
          Path p{u * nB + t.path.start, {}};
          for (auto y : t.path.arrows) p.arrows.push_back(b_arrow(u, y));
          e.terms.push_back({t.coeff, std::move(p)});
        }
        rels->push_back(std::move(e));
      }
    for (std::size_t x = 0; x < aA; ++x)
      for (std::size_t y = 0; y < aB; ++y) {
        const auto& ax = a->quiver().arrows[x];
        const auto& by = b->quiver().arrows[y];
        // (x, t_y)(s_x, y) - (t_x, y)(x, s_y)
        PathExpr e;
        e.terms.push_back({Scalar(1), Path{ax.source * nB + by.source, {b_arrow(ax.source, y), a_arrow(x, by.target)}}});
        e.terms.push_back({Scalar(-1), Path{ax.source * nB + by.source, {a_arrow(x, by.source), b_arrow(ax.target, y)}}});
        rels->push_back(std::move(e));
      }
  }

  auto alg = std::make_shared<FDAlgebra>(f, std::move(q), std::move(basis), std::move(products), std::move(rels));
  alg->set_tensor_factors({a, b, std::move(pair_to_index), std::move(index_to_pair)});
  return alg;
}

AlgebraPtr enveloping(const AlgebraPtr& a) { return tensor(a, a->opposite()); }

// ---------------------------------------------------------------- idempotents

bool is_idempotent(const FDAlgebra& a, const Vector& e) {
  if (e.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "idempotent length");
  return a.multiply(e, e) == e;
}

std::vector<std::size_t> idempotent_support(const FDAlgebra& a, const Vector& e) {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (e[v] == 1) s.push_back(v);
    else if (sgn(e[v]) != 0) throw Error(ErrorCode::NotIdempotent, "idempotent coefficient is neither 0 nor 1");
  }
  return s;
}

Vector vertex_idempotent_sum(const FDAlgebra& a, const std::vector<std::size_t>& vertices) {
  Vector e(a.dim());
  for (auto v : vertices) {
    if (v >= a.num_vertices()) throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
    e[v] = 1;
  }
  return e;
}

namespace {

std::string word_label(const FDAlgebra& a, std::size_t i) {
  const auto& b = a.basis(i);
  if (b.word.empty()) return "e_" + a.quiver().vertices[b.source];
  std::string s;
  for (std::size_t k = 0; k < b.word.size(); ++k) {
    if (k) s += "*";
    s += a.quiver().arrows[b.word[k]].label;
  }
  return s;
}

}  // namespace

AlgebraPtr corner(const AlgebraPtr& a, const Vector& e) {
  if (!is_idempotent(*a, e)) throw Error(ErrorCode::NotIdempotent, "corner: e*e != e");
  auto support = idempotent_support(*a, e);
  if (support.size() == a->num_vertices()) return a;
  if (support.empty()) throw Error(ErrorCode::Unsupported, "corner of the zero idempotent");
  std::vector<long> new_vertex(a->num_vertices(), -1);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < support.size(); ++k) {
    new_vertex[support[k]] = static_cast<long>(k);
    labels.push_back(a->quiver().vertices[support[k]]);
  }
  std::vector<std::size_t> kept;
  for (auto v : support) kept.push_back(v);
  for (std::size_t i = a->num_vertices(); i < a->dim(); ++i)
    if (new_vertex[a->basis(i).source] >= 0 && new_vertex[a->basis(i).target] >= 0) kept.push_back(i);
  std::vector<long> new_index(a->dim(), -1);
  for (std::size_t k = 0; k < kept.size(); ++k) new_index[kept[k]] = static_cast<long>(k);
  std::vector<std::pair<std::size_t, std::size_t>> st;
  std::vector<std::string> hints;
  for (auto i : kept) {
    st.push_back({static_cast<std::size_t>(new_vertex[a->basis(i).source]),
                  static_cast<std::size_t>(new_vertex[a->basis(i).target])});
    hints.push_back(word_label(*a, i));
  }
  auto mult = [&](std::size_t i, std::size_t j) {
    Vector r(kept.size());
    for (const auto& [k, c] : a->product(kept[i], kept[j])) r[static_cast<std::size_t>(new_index[k])] = c;
    return r;
  };
  return algebra_from_adapted_basis(a->field(), labels, st, mult, hints).algebra;
}

AlgebraPtr quotient_by_idempotent(const AlgebraPtr& a, const Vector& e) {
  if (!is_idempotent(*a, e)) throw Error(ErrorCode::NotIdempotent, "quotient_by_idempotent: e*e != e");
  auto support = idempotent_support(*a, e);
  if (support.empty()) return a;
  if (support.size() == a->num_vertices()) throw Error(ErrorCode::ZeroQuotient, "<e> is the whole algebra");
  const Field& f = a->field();
  const std::size_t d = a->dim();
  std::vector<bool> in_s(a->num_vertices(), false);
  for (auto v : support) in_s[v] = true;
  // Ideal AeA: spanned by words touching S and by products through S.
  SpanBasis ideal(f, d);
  // Pivots are taken on the highest basis index, so reverse coordinates.
  auto rev = [&](const Vector& v) { return Vector(v.rbegin(), v.rend()); };
  for (std::size_t i = 0; i < d; ++i)
    if (in_s[a->basis(i).source] || in_s[a->basis(i).target]) ideal.add(rev(a->basis_vector(i)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (a->basis(i).source != a->basis(j).target || !in_s[a->basis(i).source]) continue;
      Vector p(d);
      for (const auto& [k, c] : a->product(i, j)) p[k] = c;
      if (!is_zero(p)) ideal.add(rev(p));
    }
  // Complement of the ideal spanned by basis elements, then coordinates
  // modulo the ideal are read off a joint span.
  SpanBasis joint = ideal;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < d; ++i)
    if (joint.add(rev(a->basis_vector(i)))) kept.push_back(i);
  const std::size_t base = ideal.dimension();
  std::vector<long> new_vertex(a->num_vertices(), -1);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (!in_s[v]) {
      new_vertex[v] = static_cast<long>(labels.size());
      labels.push_back(a->quiver().vertices[v]);
    }
  std::vector<std::pair<std::size_t, std::size_t>> st;
  std::vector<std::string> hints;
  for (auto i : kept) {
    st.push_back({static_cast<std::size_t>(new_vertex[a->basis(i).source]),
                  static_cast<std::size_t>(new_vertex[a->basis(i).target])});
    hints.push_back(word_label(*a, i));
  }
  auto mult = [&](std::size_t i, std::size_t j) {
    Vector p(d);
    for (const auto& [k, c] : a->product(kept[i], kept[j])) p[k] = c;
    Vector out(kept.size());
    if (is_zero(p)) return out;
    auto coords = joint.coordinates(rev(p));
    for (std::size_t k = 0; k < kept.size(); ++k) out[k] = (*coords)[base + k];
    return out;
  };
  return algebra_from_adapted_basis(f, labels, st, mult, hints).algebra;
}

std::size_t center_dimension(const FDAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t gens = a.num_vertices() + a.num_arrows();
  const Field& f = a.field();
  Matrix eq(f, gens * d, d);
  for (std::size_t g = 0; g < gens; ++g)
    for (std::size_t z = 0; z < d; ++z) {
      // coefficient of basis z in (b_z * g - g * b_z)
      for (const auto& [k, c] : a.product(z, g)) eq(g * d + k, z) = f.add(eq(g * d + k, z), c);
      for (const auto& [k, c] : a.product(g, z)) eq(g * d + k, z) = f.sub(eq(g * d + k, z), c);
    }
  return d - rank(eq);
}

// ---------------------------------------------------------------- adapted basis

AdaptedAlgebra algebra_from_adapted_basis(Field field, std::vector<std::string> vertex_labels,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& st,
                                          const std::function<Vector(std::size_t, std::size_t)>& multiply_basis,
                                          const std::vector<std::string>& hints) {
  const std::size_t n = vertex_labels.size();
  const std::size_t d = st.size();
  const Field& f = field;
  // Cache sparse products of input basis elements.
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (st[i].first != st[j].second) continue;
      Vector v = multiply_basis(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(v[k]) != 0) table[i * d + j].push_back({k, v[k]});
    }
  auto mult_vec = [&](const Vector& x, const Vector& y) {
    Vector r(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (sgn(y[j]) == 0) continue;
        const auto& p = table[i * d + j];
        if (p.empty()) continue;
        Scalar c = f.mul(x[i], y[j]);
        for (const auto& [k, v] : p) f.add_mul(r[k], c, v);
      }
    }
    return r;
  };
  auto unit_vec = [&](std::size_t i) {
    Vector v(d);
    v[i] = 1;
    return v;
  };

  SpanBasis rad2(f, d);
  for (std::size_t i = n; i < d; ++i)
    for (std::size_t j = n; j < d; ++j) {
      const auto& p = table[i * d + j];
      if (p.empty()) continue;
      Vector v(d);
      for (const auto& [k, c] : p) v[k] = c;
      rad2.add(v);
    }
  SpanBasis lifted = rad2;
  std::vector<std::size_t> arrow_inputs;
  for (std::size_t i = n; i < d; ++i)
    if (lifted.add(unit_vec(i))) arrow_inputs.push_back(i);

  Quiver q;
  q.vertices = std::move(vertex_labels);
  std::set<std::string> used;
  for (std::size_t k = 0; k < arrow_inputs.size(); ++k) {
    std::size_t i = arrow_inputs[k];
    std::string label = (i < hints.size() && !hints[i].empty()) ? hints[i] : "x" + std::to_string(k);
    // Arrow labels must be single tokens without '*'.
    for (auto& ch : label)
      if (ch == '*' || ch == ' ') ch = '.';
    while (!used.insert(label).second) label += "'";
    q.arrows.push_back({label, st[i].first, st[i].second});
  }

  std::vector<BasisWord> words;
  std::vector<Vector> vecs;
  SpanBasis span(f, d);
  for (std::size_t v = 0; v < n; ++v) {
    span.add(unit_vec(v));
    words.push_back({v, v, {}});
    vecs.push_back(unit_vec(v));
  }
  std::vector<std::size_t> frontier;
  for (std::size_t k = 0; k < arrow_inputs.size(); ++k) {
    if (!span.add(unit_vec(arrow_inputs[k]))) throw Error(ErrorCode::Unsupported, "dependent arrow lift");
    frontier.push_back(words.size());
    words.push_back({q.arrows[k].source, q.arrows[k].target, {k}});
    vecs.push_back(unit_vec(arrow_inputs[k]));
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto w : frontier) {
      for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        if (q.arrows[k].source != words[w].target) continue;
        Vector v = mult_vec(unit_vec(arrow_inputs[k]), vecs[w]);
        if (is_zero(v) || !span.add(v)) continue;
        BasisWord nw = words[w];
        nw.word.push_back(k);
        nw.target = q.arrows[k].target;
        next.push_back(words.size());
        words.push_back(std::move(nw));
        vecs.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  if (words.size() != d)
    throw Error(ErrorCode::FieldTooSmall, "algebra is not generated by lifted arrows (not basic or not split over " +
                                              f.to_string() + ")");

  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (words[i].source != words[j].target) continue;
      Vector p = mult_vec(vecs[i], vecs[j]);
      if (is_zero(p)) continue;
      auto c = span.coordinates(p);
      for (std::size_t k = 0; k < d; ++k)
        if (sgn((*c)[k]) != 0) products[i * d + j].push_back({k, (*c)[k]});
    }
  AdaptedAlgebra out;
  out.word_in_input = vecs;
  for (std::size_t j = 0; j < d; ++j) out.input_in_word.push_back(*span.coordinates(unit_vec(j)));
  out.algebra = std::make_shared<FDAlgebra>(f, std::move(q), std::move(words), std::move(products));
  return out;
}

}  // namespace qfg
