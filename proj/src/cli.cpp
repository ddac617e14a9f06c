#include "quiverfg/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "../vendor/CLI11.hpp"
#include "quiverfg/catalog.hpp"
#include "quiverfg/derived.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/fgcheck.hpp"
#include "quiverfg/hochschild.hpp"
#include "quiverfg/io.hpp"
#include "quiverfg/nakayama.hpp"
#include "quiverfg/tilting.hpp"

namespace qfg::cli {

namespace {

// Ordered key/value report.  Human mode prints "key: value" and check marks,
// machine mode prints "key = value" only.
class Report {
 public:
  explicit Report(bool machine) : machine_(machine) {}

  void kv(const std::string& key, const std::string& value) {
    if (machine_)
      os_ << key << " = " << value << "\n";
    else
      os_ << key << ": " << value << "\n";
  }
  void kv(const std::string& key, std::size_t v) { kv(key, std::to_string(v)); }
  void note(const std::string& text) {
    if (!machine_) os_ << text << "\n";
  }
  void check(const std::string& key, bool ok, const std::string& what) {
    ++checks_;
    if (!ok) ++failures_;
    if (machine_)
      os_ << "check." << key << " = " << (ok ? "pass" : "fail") << "\n";
    else
      os_ << (ok ? "[pass] " : "[FAIL] ") << what << "\n";
  }
  std::size_t failures() const { return failures_; }
  std::size_t checks() const { return checks_; }
  std::string str() const { return os_.str(); }

 private:
  bool machine_;
  std::ostringstream os_;
  std::size_t checks_ = 0, failures_ = 0;
};

std::string tuple(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Config {
  std::optional<std::string> field;
  std::optional<std::size_t> max_degree;
  std::optional<std::string> window;
  std::string selector = "even";
  unsigned long seed = 1;
  bool machine = false;

  std::optional<Field> field_value() const {
    if (!field) return std::nullopt;
    return parse_field(*field);
  }
  Selector selector_value() const {
    if (selector == "even") return Selector::Even;
    if (selector == "full") return Selector::Full;
    throw Error(ErrorCode::ParseError, "selector must be 'even' or 'full'");
  }
  std::size_t cap(std::size_t fallback) const { return max_degree.value_or(fallback); }
  std::pair<long, long> window_value(std::pair<long, long> fallback) const {
    if (!window) return fallback;
    auto dots = window->find("..");
    if (dots == std::string::npos) throw Error(ErrorCode::ParseError, "window must look like a..b");
    try {
      std::size_t used = 0;
      long a = std::stol(window->substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument("window");
      std::string rest = window->substr(dots + 2);
      long b = std::stol(rest, &used);
      if (used != rest.size() || b < a) throw std::invalid_argument("window");
      return {a, b};
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "window must look like a..b with a <= b");
    }
  }
};

AlgebraPtr load(const Config& c, const std::string& path) {
  if (!path.empty() && path[0] == ':') return catalog::by_name(path.substr(1), c.field_value().value_or(Field::rationals()));
  return load_algebra(path, c.field_value());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

std::string vertex_series(const FDAlgebra& a, const FDModule& m) {
  std::string s;
  for (const auto& layer : radical_layers(m))
    for (std::size_t v = 0; v < layer.size(); ++v)
      for (std::size_t k = 0; k < layer[v]; ++k) s += (s.empty() ? "" : " ") + a.quiver().vertices[v];
  return s;
}

// Multiset of arrow shapes of b, transported to a along the Cartan matching.
bool arrow_shapes_match(const FDAlgebra& a, const FDAlgebra& b) {
  auto p = cartan_match(a, b);
  if (!p || a.num_arrows() != b.num_arrows()) return false;
  std::vector<std::pair<std::size_t, std::size_t>> sa, sb;
  for (const auto& x : a.quiver().arrows) sa.emplace_back(x.source, x.target);
  for (const auto& x : b.quiver().arrows) sb.emplace_back((*p)[x.source], (*p)[x.target]);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

// dim of the degree-d part of k[x_1..x_r] (deg x_i = degrees[i]) modulo the
// monomials in `killed` (exponent vectors).
std::vector<std::size_t> monomial_ring_dims(const std::vector<std::size_t>& degrees,
                                            const std::vector<std::vector<std::size_t>>& killed, std::size_t cap) {
  std::vector<std::size_t> out(cap + 1, 0);
  std::vector<std::size_t> e(degrees.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t deg) {
    if (i == degrees.size()) {
      for (const auto& k : killed) {
        bool divides = true;
        for (std::size_t j = 0; j < e.size(); ++j) divides = divides && e[j] >= k[j];
        if (divides) return;
      }
      ++out[deg];
      return;
    }
    for (std::size_t x = 0; deg + x * degrees[i] <= cap; ++x) {
      e[i] = x;
      rec(i + 1, deg + x * degrees[i]);
      if (degrees[i] == 0 && x >= cap + 2) break;
    }
    e[i] = 0;
  };
  rec(0, 0);
  return out;
}

// Degrees of a minimal set of cup-product generators of HH^{>0}.
std::vector<std::size_t> hh_generator_counts(const Hochschild& hh, std::size_t cap) {
  const Field& f = hh.algebra()->field();
  std::vector<std::size_t> out{0};
  for (std::size_t d = 1; d <= cap; ++d) {
    SpanBasis span(f, hh.dim(d));
    for (std::size_t p = 1; p < d; ++p)
      for (std::size_t i = 0; i < hh.dim(p); ++i)
        for (std::size_t j = 0; j < hh.dim(d - p); ++j) {
          Vector x = zero_vector(f, hh.dim(p)), y = zero_vector(f, hh.dim(d - p));
          x[i] = 1;
          y[j] = 1;
          span.add(hh.cup(p, x, d - p, y));
        }
    out.push_back(hh.dim(d) - span.dimension());
  }
  return out;
}

// ---------------------------------------------------------------- subcommands

int cmd_build(const Config& c, Report& r, const std::string& path) {
  auto a = load(c, path);
  const Quiver& q = a->quiver();
  r.kv("field", a->field().to_string());
  r.kv("vertices", q.num_vertices());
  r.kv("arrows", q.arrows.size());
  r.kv("dim", a->dim());
  r.kv("loewy_length", a->loewy_length());
  auto cm = a->cartan_matrix();
  for (std::size_t j = 0; j < q.num_vertices(); ++j) {
    std::vector<std::size_t> col;
    for (std::size_t i = 0; i < q.num_vertices(); ++i) col.push_back(cm[i][j]);
    r.kv("cartan.column." + q.vertices[j], tuple(col));
  }
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    r.kv("projective." + q.vertices[v], vertex_series(*a, projective(a, v)));
  return kOk;
}

int cmd_nakayama(const Config& c, Report& r, const std::string& path) {
  auto a = load(c, path);
  bool nak = is_nakayama(*a);
  r.kv("nakayama", nak ? "true" : "false");
  if (!nak) return kNegative;
  auto ks = admissible_sequence(*a);
  r.kv("kupisch", tuple(ks.lengths));
  r.kv("cyclic", ks.cyclic ? "true" : "false");
  auto cert = fg_certificate_nakayama(a, c.cap(20));
  r.kv("gorenstein", to_string(cert.gorenstein.verdict));
  r.kv("injdim.left", cert.gorenstein.left.to_string());
  r.kv("injdim.right", cert.gorenstein.right.to_string());
  r.kv("fg", to_string(cert.verdict));
  return kOk;
}

int cmd_gorenstein(const Config& c, Report& r, const std::string& path) {
  auto a = load(c, path);
  auto g = is_gorenstein(a, c.cap(20));
  r.kv("cap", g.cap);
  r.kv("injdim.left", g.left.to_string());
  r.kv("injdim.right", g.right.to_string());
  r.kv("gorenstein", to_string(g.verdict));
  return g.verdict == Verdict::No ? kNegative : kOk;
}

int cmd_fg(const Config& c, Report& r, const std::string& path) {
  auto a = load(c, path);
  auto ev = fg_evidence(a, c.selector_value(), c.cap(8));
  r.kv("verdict", to_string(ev.verdict));
  r.kv("route", ev.nakayama_route ? "nakayama" : "evidence");
  r.kv("selector", to_string(ev.selector));
  r.kv("cap", ev.cap);
  r.kv("window", ev.window);
  if (ev.certificate) r.kv("gorenstein", to_string(ev.certificate->gorenstein.verdict));
  if (!ev.nakayama_route) {
    r.kv("h_dims", tuple(ev.h_dims));
    r.kv("ring_generators", tuple(ev.ring_generators));
    r.kv("ext_dims", tuple(ev.e_dims));
    r.kv("module_generators", tuple(ev.module_generators));
    if (ev.counter_degree) r.kv("counter_degree", *ev.counter_degree);
  }
  bool negative = ev.verdict == FgVerdict::CertifiedNo || ev.verdict == FgVerdict::CounterSignal;
  return negative ? kNegative : kOk;
}

int cmd_hochschild(const Config& c, Report& r, const std::string& path) {
  auto a = load(c, path);
  const std::size_t cap = c.cap(4);
  Hochschild hh(a, cap);
  r.kv("cap", cap);
  r.kv("dims", tuple(hh.dims()));
  r.kv("center", center_dimension(*a));
  r.kv("generators", tuple(hh_generator_counts(hh, cap)));
  return kOk;
}

int cmd_tilt_check(const Config& c, Report& r, const std::string& path, const std::string& module) {
  auto a = load(c, path);
  auto t = module_ref(a, module);
  auto rep = check_tilting(t, c.cap(10), c.seed);
  r.kv("summands", rep.summands);
  r.kv("vertices", a->num_vertices());
  r.kv("axiom_i.projdim", rep.axiom_i.to_string());
  r.kv("axiom_ii.checked_to", rep.axiom_ii_checked);
  r.kv("axiom_ii", rep.axiom_ii_failure ? "fails in degree " + std::to_string(*rep.axiom_ii_failure) : "holds");
  r.kv("axiom_iii", rep.axiom_iii ? "holds" : "fails");
  if (!rep.axiom_iii_note.empty()) r.kv("axiom_iii.note", rep.axiom_iii_note);
  for (std::size_t i = 0; i < rep.coresolution.size(); ++i)
    r.kv("coresolution." + std::to_string(i), describe_dims(rep.coresolution[i].dims()));
  r.kv("tilting", to_string(rep.verdict));
  return rep.verdict == Verdict::Yes ? kOk : kNegative;
}

int cmd_mutate(const Config& c, Report& r, const std::string& path, const std::string& module,
               const std::string& sequence) {
  auto a = load(c, path);
  std::vector<FDModule> summands;
  for (const auto& cl : isoclasses(module_ref(a, module), c.seed)) summands.push_back(cl.module);
  auto show = [&](const std::string& prefix) {
    for (std::size_t i = 0; i < summands.size(); ++i)
      r.kv(prefix + ".summand." + std::to_string(i + 1), describe_dims(summands[i].dims()));
  };
  show("start");
  std::size_t step = 0;
  for (const auto& tok : split(sequence, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "mutation sequence must be comma separated summand numbers");
    std::size_t k = std::stoul(tok);
    if (k == 0 || k > summands.size()) throw Error(ErrorCode::ParseError, "no summand " + tok);
    ++step;
    std::vector<FDModule> rest;
    for (std::size_t i = 0; i < summands.size(); ++i)
      if (i + 1 != k) rest.push_back(summands[i]);
    FDModule m = rest.empty() ? FDModule::zero(a) : direct_sum_module(rest);
    auto mu = mutate_complement(m, summands[k - 1], c.seed);
    summands[k - 1] = mu.complement;
    const std::string p = "step." + std::to_string(step);
    r.kv(p + ".removed", tok);
    r.kv(p + ".complement", describe_dims(mu.complement.dims()));
    auto rep = check_tilting(direct_sum_module(summands), 10, c.seed);
    r.kv(p + ".tilting", to_string(rep.verdict));
    if (rep.verdict != Verdict::Yes) return kNegative;
  }
  show("end");
  return kOk;
}

int cmd_endo(const Config& c, Report& r, std::string& raw, const std::string& path, const std::string& module) {
  auto a = load(c, path);
  auto t = module_ref(a, module);
  auto e = endomorphism_algebra(t, EndoConvention::Opposite, c.seed);
  auto p = present_by_quiver(e.algebra);
  if (c.machine) {
    r.kv("convention", "End_A(T)^op");
    r.kv("dim", e.algebra->dim());
    r.kv("vertices", e.algebra->num_vertices());
    r.kv("arrows", e.algebra->num_arrows());
    r.kv("relations", p.relations.size());
    return kOk;
  }
  std::ostringstream os;
  os << "# End_A(T)^op: vertex i is the i-th indecomposable summand of T, dimension " << e.algebra->dim() << "\n";
  for (std::size_t i = 0; i < e.summands.size(); ++i)
    os << "# summand " << e.algebra->quiver().vertices[i] << ": dims " << describe_dims(e.summands[i].dims())
       << ", multiplicity " << e.multiplicities[i] << "\n";
  os << write_presentation(p, a->field());
  raw = os.str();
  return kOk;
}

int cmd_fingerprint(const Config& c, Report& r, const std::string& path, const std::string& pair) {
  auto a = load(c, path);
  auto refs = split(pair, ',');
  if (refs.size() != 2) throw Error(ErrorCode::ParseError, "--pair expects M,N");
  auto m = module_ref(a, refs[0]), n = module_ref(a, refs[1]);
  auto fp = support_fingerprint(a, m, n, c.selector_value(), c.cap(4));
  r.kv("selector", to_string(fp.selector));
  r.kv("cap", fp.cap);
  r.kv("h_dims", tuple(fp.h_dims));
  r.kv("fingerprint", tuple(fp.dims));
  return kOk;
}

int cmd_derived_compare(const Config& c, Report& r, const std::string& path, const std::string& tilting,
                        const std::string& pairs) {
  auto a = load(c, path);
  auto t = module_ref(a, tilting);
  auto [w0, w1] = c.window_value({-1, 3});
  const std::size_t cap = c.cap(4);
  std::vector<std::string> names;
  std::vector<FDModule> mods;
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  auto index_of = [&](const std::string& ref) {
    auto it = std::find(names.begin(), names.end(), ref);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
    names.push_back(ref);
    mods.push_back(module_ref(a, ref));
    return names.size() - 1;
  };
  for (const auto& pr : split(pairs, ';')) {
    auto mn = split(pr, ',');
    if (mn.size() != 2) throw Error(ErrorCode::ParseError, "--pairs expects M,N;M,N;...");
    std::size_t i = index_of(mn[0]);
    std::size_t j = index_of(mn[1]);
    idx.emplace_back(i, j);
  }
  auto rep = invariance_suite(t, mods, idx, w0, w1, cap, cap);
  r.kv("convention", "B = End_A(T)^op, F = RHom_A(T, -) into left B-modules");
  r.kv("window", std::to_string(w0) + ".." + std::to_string(w1));
  r.kv("hh.a", tuple(rep.hh_a));
  r.kv("hh.b", tuple(rep.hh_b));
  r.check("hh", rep.hh_equal, "dim HH^n(A) = dim HH^n(B) for n <= " + std::to_string(cap));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::string p = names[idx[k].first] + "," + names[idx[k].second];
    r.kv("hom." + p + ".a", tuple(rep.hyper_hom[k].a_side));
    r.kv("hom." + p + ".b", tuple(rep.hyper_hom[k].b_side));
    r.check("hom." + p, rep.hyper_hom[k].equal, "hyper-Hom table of (" + p + ") preserved");
    r.kv("fingerprint." + p + ".a", tuple(rep.fingerprints[k].a_side));
    r.kv("fingerprint." + p + ".b", tuple(rep.fingerprints[k].b_side));
    r.check("fingerprint." + p, rep.fingerprints[k].equal, "HH^ev fingerprint of (" + p + ") preserved");
  }
  r.kv("invariance", rep.passed() ? "pass" : "fail");
  return rep.passed() ? kOk : kNegative;
}

// ---------------------------------------------------------------- scenarios

void scenario_example4(Report& r, unsigned long seed) {
  auto a = catalog::example4();
  r.note("== algebra A = kQ/(bacba, cbac)");
  r.kv("A.dim", a->dim());
  r.check("A.dim", a->dim() == 14, "dim A = 14");
  const std::vector<std::string> series{"1 2 3 1 2", "2 3 1 2 3", "3 1 2 3"};
  for (std::size_t v = 0; v < 3; ++v) {
    auto s = vertex_series(*a, projective(a, v));
    r.kv("A.projective." + std::to_string(v + 1), s);
    r.check("A.projective." + std::to_string(v + 1), s == series[v], "Loewy series of P" + std::to_string(v + 1));
  }
  auto cm = a->cartan_matrix();
  const std::vector<std::vector<std::size_t>> cols{{2, 2, 1}, {1, 2, 2}, {1, 1, 2}};
  bool cartan_ok = true;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) cartan_ok = cartan_ok && cm[i][j] == cols[j][i];
  r.check("A.cartan", cartan_ok, "Cartan columns (2,2,1), (1,2,2), (1,1,2)");

  r.note("== Nakayama, Gorenstein, (Fg)");
  r.check("A.nakayama", is_nakayama(*a), "A is Nakayama");
  auto ks = admissible_sequence(*a);
  r.kv("A.kupisch", tuple(ks.lengths));
  r.check("A.kupisch", ks.lengths == std::vector<std::size_t>{4, 5, 5}, "normalized admissible sequence (4,5,5)");
  auto g = is_gorenstein(a, 20);
  r.kv("A.gorenstein", to_string(g.verdict));
  r.check("A.gorenstein", g.verdict == Verdict::Yes, "A is Gorenstein");
  auto ev = fg_evidence(a);
  r.kv("A.fg", to_string(ev.verdict));
  r.check("A.fg", ev.verdict == FgVerdict::CertifiedYes, "A satisfies (Fg)");

  r.note("== tilting module T = P1 + P2 + S2");
  auto p1 = projective(a, 0), p2 = projective(a, 1), p3 = projective(a, 2);
  auto m = direct_sum_module({p1, p2});
  r.check("M.almost_complete", is_almost_complete(m, 20, seed), "P1 + P2 is almost complete");
  auto ap = left_add_approximation(p3, m, seed);
  bool into_p2 = ap.map.is_injective() && ap.summands.size() == 1 && ap.copies[0] == 1 &&
                 is_isomorphic(ap.summands[0], p2, seed);
  r.check("approximation", into_p2, "left add(M)-approximation of P3 is a mono into P2");
  auto mu = mutate_complement(m, p3, seed);
  r.kv("complement.dims", describe_dims(mu.complement.dims()));
  r.check("complement", mu.complement.total_dim() == 1 && is_isomorphic(mu.complement, simple(a, 1), seed),
          "complement is S2");
  auto t = direct_sum_module({p1, p2, mu.complement});
  auto tr = check_tilting(t, 10, seed);
  r.kv("T.tilting", to_string(tr.verdict));
  r.check("T.tilting", tr.verdict == Verdict::Yes, "T is tilting");

  r.note("== B = End_A(T)^op");
  auto e = endomorphism_algebra(t, EndoConvention::Opposite, seed);
  auto b = e.algebra;
  r.kv("B.dim", b->dim());
  r.check("B.dim", b->dim() == 10, "dim End_A(T) = 10");
  auto displayed = catalog::endo_quotient();
  r.check("B.quiver", b->num_vertices() == 3 && b->num_arrows() == 4 && arrow_shapes_match(*b, *displayed),
          "quiver of B: I->II, II->I, II->III, III->I");
  r.check("B.relations", displayed->dim() == 10 && cartan_match(*b, *displayed).has_value(),
          "kQ'/(gdg, gh, dgd - ht, tg) has dim 10 and the Cartan matrix of B");
  auto pres = present_by_quiver(b);
  r.kv("B.relations", pres.relations.size());

  r.note("== homological dimensions over B");
  bool all_inf = true;
  for (std::size_t v = 0; v < 3; ++v) {
    auto pd = projdim(simple(b, v), 20);
    r.kv("B.projdim.S" + std::to_string(v + 1), pd.to_string());
    all_inf = all_inf && pd.is_infinite();
  }
  r.check("B.simples", all_inf, "all simple B-modules have infinite projective dimension");
  bool none = true;
  for (std::size_t mask = 1; mask < 7; ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < 3; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    none = none && !eAe_reduction(b, vertex_idempotent_sum(*b, vs)).applicable;
  }
  r.check("B.eAe", none, "eAe reduction is inapplicable for every nontrivial vertex idempotent");

  r.note("== derived invariance under RHom_A(T, -)");
  std::vector<FDModule> simples{simple(a, 0), simple(a, 1), simple(a, 2)};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) pairs.emplace_back(i, j);
  auto inv = invariance_suite(t, simples, pairs, -1, 3, 4, 4);
  r.kv("HH.A", tuple(inv.hh_a));
  r.kv("HH.B", tuple(inv.hh_b));
  r.check("HH", inv.hh_equal, "dim HH^n(A) = dim HH^n(B), n <= 4");
  r.check("hyper_hom", inv.hyper_hom_equal, "hyper-Hom tables of (S_i, S_j) preserved, window -1..3");
  r.check("fingerprints", inv.fingerprints_equal, "HH^ev support fingerprints preserved to degree 4");
}

void scenario_hhsquare(Report& r) {
  auto d = catalog::truncated_polynomial(2);
  auto hd = hh_dims(d, 5);
  r.kv("HH.kx2", tuple(hd));
  r.check("HH.kx2", hd == std::vector<std::size_t>{2, 1, 1, 1, 1, 1}, "HH^n(k[x]/x^2) = (2,1,1,1,1,1)");
  // k[s,t,u]/(s^2, t^2, su, ut), deg s = 0, deg t = 1, deg u = 2
  auto ring = monomial_ring_dims({0, 1, 2}, {{2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}}, 5);
  r.kv("ring.dims", tuple(ring));
  bool even = true;
  for (std::size_t n = 0; n <= 5; n += 2) even = even && ring[n] == hd[n];
  r.check("HH.kx2.even", even, "even degrees agree with k[s,t,u]/(s^2, t^2, 2su, ut)");
  if (ring != hd) r.note("note: odd degrees of the presentation differ from the direct computation");

  auto kxy = catalog::exterior_square();
  auto kun = kunneth_check(d, d, 4);
  r.kv("kunneth.convolution", tuple(kun.convolution));
  r.kv("HH.kxy", tuple(kun.tensor_dims));
  r.check("kunneth", kun.equal, "HH of k[x]/x^2 (x) k[x]/x^2 is the convolution");
  auto direct = hh_dims(kxy, 4);
  r.check("kxy", direct == kun.convolution, "HH^n(k[x,y]/(x^2,y^2)) matches the convolution");
  r.kv("HH0.kxy", direct[0]);
  r.check("HH0", direct[0] == 4 && center_dimension(*kxy) == 4, "HH^0(k[x,y]/(x^2,y^2)) = 4");
  // k[s,u,s~,u~]/(s^2, s~^2, su, s~u~) in even degrees.
  auto pres = monomial_ring_dims({0, 2, 0, 2}, {{2, 0, 0, 0}, {0, 0, 2, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}}, 4);
  r.kv("presentation.even", "(" + std::to_string(pres[0]) + "," + std::to_string(pres[2]) + "," +
                                std::to_string(pres[4]) + ")");
  r.kv("HH.kxy.even", "(" + std::to_string(direct[0]) + "," + std::to_string(direct[2]) + "," +
                          std::to_string(direct[4]) + ")");
  for (std::size_t n = 2; n <= 4; n += 2)
    if (pres[n] != direct[n])
      r.note("note: degree " + std::to_string(n) + " differs (" + std::to_string(pres[n]) + " vs " +
             std::to_string(direct[n]) + "); the even presentation drops products of odd classes such as t t~");
  auto ev = fg_evidence(kxy, Selector::Even, 6);
  r.kv("fg.kxy", to_string(ev.verdict));
  r.check("fg.kxy", ev.verdict == FgVerdict::EvidenceYes, "k[x,y]/(x^2,y^2) shows (Fg) evidence over HH^ev");
}

RunResult finish(Report& r, bool scenario) {
  RunResult out;
  if (scenario) {
    if (r.failures() == 0)
      r.note("ALL CHECKS PASSED");
    else
      r.note("CHECKS FAILED: " + std::to_string(r.failures()) + " of " + std::to_string(r.checks()));
    r.kv("result", r.failures() == 0 ? "pass" : "fail");
  }
  out.text = r.str();
  out.exit_code = r.failures() == 0 ? kOk : kNegative;
  return out;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownScenario:
    case ErrorCode::NotFiniteDimensional:
    case ErrorCode::NotAdmissible:
    case ErrorCode::FieldMismatch:
    case ErrorCode::DimensionMismatch:
      return kUsage;
    case ErrorCode::NotNakayama:
    case ErrorCode::TiltingNotVerified:
    case ErrorCode::NotAComplement:
    case ErrorCode::ApproximationNotMono:
      return kNegative;
    default:
      return kInternal;
  }
}

}  // namespace

std::vector<std::string> scenarios() { return {"example4", "hhsquare"}; }

RunResult reproduce(const std::string& name, bool machine, unsigned long seed) {
  Report r(machine);
  r.kv("scenario", name);
  r.kv("seed", std::to_string(seed));
  if (name == "example4")
    scenario_example4(r, seed);
  else if (name == "hhsquare")
    scenario_hhsquare(r);
  else
    throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + name + "' (known: example4, hhsquare)");
  return finish(r, true);
}

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Finite generation, Hochschild cohomology and tilting for quiver algebras", "quiverfg"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--field", c.field, "Ground field override: Q or Fp(p)");
  app.add_option("--max-degree", c.max_degree, "Degree cap for resolutions and Hochschild cohomology");
  app.add_option("--window", c.window, "Degree window a..b for derived comparisons");
  app.add_option("--selector", c.selector, "Hochschild subalgebra: even or full");
  app.add_option("--seed", c.seed, "Seed for randomized choices");
  app.add_flag("--machine", c.machine, "Print key = value lines");

  std::string alg, module, sequence, pair, pairs, scenario;
  std::string raw;
  std::function<int(Report&)> action;
  auto algebra_arg = [&](CLI::App* s) { s->add_option("algebra", alg, "Algebra file, or :name for a built-in")->required(); };

  auto* build = app.add_subcommand("build", "Build an algebra and print its basic invariants");
  algebra_arg(build);
  build->callback([&] { action = [&](Report& r) { return cmd_build(c, r, alg); }; });
  auto* nak = app.add_subcommand("nakayama", "Nakayama detection, Kupisch series and (Fg) certificate");
  algebra_arg(nak);
  nak->callback([&] { action = [&](Report& r) { return cmd_nakayama(c, r, alg); }; });
  auto* gor = app.add_subcommand("gorenstein", "Injective dimensions of the regular module on both sides");
  algebra_arg(gor);
  gor->callback([&] { action = [&](Report& r) { return cmd_gorenstein(c, r, alg); }; });
  auto* fg = app.add_subcommand("fg", "(Fg) verdict or evidence");
  algebra_arg(fg);
  fg->callback([&] { action = [&](Report& r) { return cmd_fg(c, r, alg); }; });
  auto* hh = app.add_subcommand("hochschild", "Hochschild cohomology dimensions and generator degrees");
  algebra_arg(hh);
  hh->callback([&] { action = [&](Report& r) { return cmd_hochschild(c, r, alg); }; });
  auto* tilt = app.add_subcommand("tilt-check", "Check the tilting axioms for a module");
  algebra_arg(tilt);
  tilt->add_option("--module", module, "Module reference, e.g. P1+P2+S2")->required();
  tilt->callback([&] { action = [&](Report& r) { return cmd_tilt_check(c, r, alg, module); }; });
  auto* mut = app.add_subcommand("mutate", "Mutate a tilting module at a sequence of summands");
  algebra_arg(mut);
  mut->add_option("--module", module, "Tilting module reference")->required();
  mut->add_option("--sequence", sequence, "Comma separated summand numbers (1-based)")->required();
  mut->callback([&] { action = [&](Report& r) { return cmd_mutate(c, r, alg, module, sequence); }; });
  auto* endo = app.add_subcommand("endo", "Quiver presentation of End_A(T)^op as an algebra file");
  algebra_arg(endo);
  endo->add_option("--module", module, "Module reference")->required();
  endo->callback([&] { action = [&](Report& r) { return cmd_endo(c, r, raw, alg, module); }; });
  auto* fp = app.add_subcommand("fingerprint", "Support fingerprint of a pair of modules");
  algebra_arg(fp);
  fp->add_option("--pair", pair, "M,N")->required();
  fp->callback([&] { action = [&](Report& r) { return cmd_fingerprint(c, r, alg, pair); }; });
  auto* dc = app.add_subcommand("derived-compare", "Compare invariants across the equivalence RHom_A(T, -)");
  algebra_arg(dc);
  dc->add_option("--tilting", module, "Tilting module reference")->required();
  dc->add_option("--pairs", pairs, "M,N;M,N;...")->required();
  dc->callback([&] { action = [&](Report& r) { return cmd_derived_compare(c, r, alg, module, pairs); }; });
  auto* rep = app.add_subcommand("reproduce", "Run a named reproduction scenario");
  rep->add_option("scenario", scenario, "example4 or hhsquare")->required();

  RunResult out;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    int code = app.exit(e, os, es);
    out.text = os.str() + es.str();
    out.exit_code = code == 0 ? kOk : kUsage;
    return out;
  }
  try {
    c.selector_value();
    c.field_value();
    if (rep->parsed()) return reproduce(scenario, c.machine, c.seed);
    Report r(c.machine);
    r.kv("seed", std::to_string(c.seed));
    int code = action(r);
    out.text = raw.empty() ? r.str() : raw;
    out.exit_code = code;
  } catch (const Error& e) {
    out.text = std::string("error: ") + e.what() + "\n";
    out.exit_code = exit_for(e.code());
  } catch (const std::exception& e) {
    out.text = std::string("internal error: ") + e.what() + "\n";
    out.exit_code = kInternal;
  }
  return out;
}

}  // namespace qfg::cli
