#include "quiverfg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "quiverfg/error.hpp"

namespace qfg {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Lines with comments stripped, paired with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string>> logical_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (!line.empty()) out.emplace_back(n, line);
  }
  return out;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  bool slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || j == i || j + 1 == s.size()) return false;
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      return false;
    }
  }
  return true;
}

Scalar parse_scalar(const Field& f, const std::string& s, std::size_t line) {
  if (!is_number(s)) fail(line, "bad number '" + s + "'");
  mpq_class q(s[0] == '+' ? s.substr(1) : s);
  if (q.get_den() == 0) fail(line, "zero denominator in '" + s + "'");
  q.canonicalize();
  try {
    return f.from_rational(q);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "expected a count, got '" + s + "'");
  return std::stoul(s);
}

std::string scalar_text(const Scalar& s) { return s.get_str(); }

}  // namespace

Field parse_field(std::string_view text) {
  std::string t = trim(text);
  if (t == "Q" || t == "QQ") return Field::rationals();
  if (t.size() > 4 && t.rfind("Fp(", 0) == 0 && t.back() == ')') {
    std::string p = t.substr(3, t.size() - 4);
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 9)
      throw Error(ErrorCode::ParseError, "bad characteristic in '" + t + "'");
    long v = std::stol(p);
    if (!is_prime(v)) throw Error(ErrorCode::ParseError, "characteristic " + p + " is not prime");
    return Field::prime(v);
  }
  throw Error(ErrorCode::ParseError, "unknown field '" + t + "' (expected Q or Fp(p))");
}

AlgebraSpec parse_algebra_spec(std::string_view text, std::optional<Field> field) {
  AlgebraSpec spec;
  bool have_vertices = false;
  std::vector<std::pair<std::size_t, std::string>> rels;
  for (const auto& [n, line] : logical_lines(text)) {
    auto ws = words(line);
    const std::string& key = ws[0];
    auto rest = [&, &line = line] {
      auto eq = line.find('=');
      if (eq == std::string::npos) fail(n, "expected '=' after '" + key + "'");
      return trim(std::string_view(line).substr(eq + 1));
    };
    if (key == "field" || key.rfind("field=", 0) == 0) {
      try {
        spec.field = parse_field(rest());
      } catch (const Error& e) {
        fail(n, e.what());
      }
    } else if (key == "vertices" || key.rfind("vertices=", 0) == 0) {
      if (have_vertices) fail(n, "vertices given twice");
      have_vertices = true;
      for (const auto& v : words(rest())) {
        if (spec.quiver.vertex_index(v)) fail(n, "duplicate vertex '" + v + "'");
        spec.quiver.vertices.push_back(v);
      }
      if (spec.quiver.vertices.empty()) fail(n, "no vertices");
    } else if (key == "arrow") {
      if (!have_vertices) fail(n, "arrow before vertices");
      // arrow a : 1 -> 2
      std::string body = trim(std::string_view(line).substr(5));
      auto colon = body.find(':'), to = body.find("->");
      if (colon == std::string::npos || to == std::string::npos || to < colon) fail(n, "expected 'arrow <label> : <v> -> <w>'");
      std::string label = trim(std::string_view(body).substr(0, colon));
      std::string s = trim(std::string_view(body).substr(colon + 1, to - colon - 1));
      std::string t = trim(std::string_view(body).substr(to + 2));
      if (label.empty() || label.find_first_of(" \t*+-") != std::string::npos) fail(n, "bad arrow label '" + label + "'");
      if (spec.quiver.arrow_index(label)) fail(n, "duplicate arrow '" + label + "'");
      auto si = spec.quiver.vertex_index(s), ti = spec.quiver.vertex_index(t);
      if (!si) fail(n, "unknown vertex '" + s + "'");
      if (!ti) fail(n, "unknown vertex '" + t + "'");
      spec.quiver.arrows.push_back({label, *si, *ti});
    } else if (key == "relation") {
      rels.emplace_back(n, trim(std::string_view(line).substr(8)));
    } else if (key == "cap" || key.rfind("cap=", 0) == 0) {
      spec.cap = parse_count(rest(), n);
    } else {
      fail(n, "unknown directive '" + key + "'");
    }
  }
  if (!have_vertices) throw Error(ErrorCode::ParseError, "missing 'vertices' line");
  for (const auto& [n, r] : rels) {
    try {
      spec.relations.push_back(PathExpr::parse(spec.quiver, r));
    } catch (const Error& e) {
      fail(n, e.what());
    }
  }
  if (field) spec.field = *field;
  return spec;
}

AlgebraPtr parse_algebra(std::string_view text, std::optional<Field> field) {
  AlgebraSpec spec = parse_algebra_spec(text, field);
  return build_quotient(spec.field, spec.quiver, spec.relations, spec.cap);
}

AlgebraPtr load_algebra(const std::string& path, std::optional<Field> field) {
  return parse_algebra(read_file(path), field);
}

std::string write_algebra(const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "field = " << spec.field.to_string() << "\n";
  os << "vertices =";
  for (const auto& v : spec.quiver.vertices) os << " " << v;
  os << "\n";
  for (const auto& a : spec.quiver.arrows)
    os << "arrow " << a.label << " : " << spec.quiver.vertices[a.source] << " -> " << spec.quiver.vertices[a.target]
       << "\n";
  for (const auto& r : spec.relations) os << "relation " << r.to_string(spec.quiver) << "\n";
  if (spec.cap != 30) os << "cap = " << spec.cap << "\n";
  return os.str();
}

std::string write_presentation(const Presentation& p, const Field& field) {
  AlgebraSpec spec;
  spec.field = field;
  spec.quiver = p.quiver;
  spec.relations = p.relations;
  spec.cap = p.cap;
  return write_algebra(spec);
}

FDModule parse_module(const AlgebraPtr& a, std::string_view text) {
  const Field& f = a->field();
  const Quiver& q = a->quiver();
  std::optional<std::vector<std::size_t>> dims;
  std::vector<std::optional<Matrix>> acts(q.arrows.size());
  for (const auto& [n, line] : logical_lines(text)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(n, "expected '='");
    auto lhs = words(std::string_view(line).substr(0, eq));
    std::string rhs = trim(std::string_view(line).substr(eq + 1));
    if (lhs.size() == 1 && lhs[0] == "dims") {
      if (dims) fail(n, "dims given twice");
      dims.emplace();
      for (const auto& w : words(rhs)) dims->push_back(parse_count(w, n));
      if (dims->size() != q.num_vertices())
        fail(n, "expected " + std::to_string(q.num_vertices()) + " dimensions");
    } else if (lhs.size() == 2 && lhs[0] == "action") {
      if (!dims) fail(n, "action before dims");
      auto x = q.arrow_index(lhs[1]);
      if (!x) fail(n, "unknown arrow '" + lhs[1] + "'");
      if (acts[*x]) fail(n, "action of '" + lhs[1] + "' given twice");
      const std::size_t rows = (*dims)[q.arrows[*x].target], cols = (*dims)[q.arrows[*x].source];
      Matrix m(f, rows, cols);
      std::vector<std::string> row_text;
      std::size_t start = 0;
      while (true) {
        auto semi = rhs.find(';', start);
        row_text.push_back(trim(std::string_view(rhs).substr(start, semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      if (rows * cols == 0) {
        for (const auto& r : row_text)
          if (!r.empty()) fail(n, "entries given for an empty matrix");
      } else {
        if (row_text.size() != rows) fail(n, "expected " + std::to_string(rows) + " rows");
        for (std::size_t r = 0; r < rows; ++r) {
          auto es = words(row_text[r]);
          if (es.size() != cols) fail(n, "expected " + std::to_string(cols) + " entries in row " + std::to_string(r + 1));
          for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(f, es[c], n);
        }
      }
      acts[*x] = std::move(m);
    } else {
      fail(n, "expected 'dims = ...' or 'action <arrow> = ...'");
    }
  }
  if (!dims) throw Error(ErrorCode::ParseError, "missing 'dims' line");
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < q.arrows.size(); ++x)
    arrows.push_back(acts[x] ? *acts[x] : Matrix(f, (*dims)[q.arrows[x].target], (*dims)[q.arrows[x].source]));
  return FDModule(a, *dims, std::move(arrows));
}

FDModule load_module(const AlgebraPtr& a, const std::string& path) { return parse_module(a, read_file(path)); }

std::string write_module(const FDModule& m) {
  const Quiver& q = m.algebra()->quiver();
  std::ostringstream os;
  os << "dims =";
  for (auto d : m.dims()) os << " " << d;
  os << "\n";
  for (std::size_t x = 0; x < q.arrows.size(); ++x) {
    const Matrix& a = m.arrow(x);
    if (a.empty() || a.is_zero()) continue;
    os << "action " << q.arrows[x].label << " =";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r) os << " ;";
      for (std::size_t c = 0; c < a.cols(); ++c) os << " " << scalar_text(a(r, c));
    }
    os << "\n";
  }
  return os.str();
}

FDModule module_ref(const AlgebraPtr& a, std::string_view ref) {
  std::vector<FDModule> parts;
  std::string text(ref);
  std::size_t start = 0;
  while (true) {
    auto plus = text.find('+', start);
    std::string term = trim(std::string_view(text).substr(start, plus - start));
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in module reference '" + text + "'");
    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    std::size_t mult = i ? std::stoul(term.substr(0, i)) : 1;
    std::string body = trim(std::string_view(term).substr(i));
    FDModule m;
    if (body == "A") {
      m = regular_module(a);
    } else if (!body.empty() && body[0] == '@') {
      m = load_module(a, body.substr(1));
    } else if (body.size() >= 2 && (body[0] == 'P' || body[0] == 'S' || body[0] == 'I')) {
      std::string label = body.substr(1);
      if (label.size() >= 2 && label.front() == '(' && label.back() == ')') label = label.substr(1, label.size() - 2);
      auto v = a->quiver().vertex_index(label);
      if (!v) throw Error(ErrorCode::ParseError, "unknown vertex '" + label + "' in '" + term + "'");
      m = body[0] == 'P' ? projective(a, *v) : body[0] == 'S' ? simple(a, *v) : injective(a, *v);
    } else {
      throw Error(ErrorCode::ParseError, "bad module term '" + term + "'");
    }
    for (std::size_t k = 0; k < mult; ++k) parts.push_back(m);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (parts.empty()) return FDModule::zero(a);
  return parts.size() == 1 ? parts[0] : direct_sum_module(parts);
}

}  // namespace qfg
