#include "gca/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "gca/cohomology.hpp"
#include "gca/mpoly.hpp"
#include "json.hpp"

namespace gca {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Source positions

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

class Scanner {
 public:
  Scanner(std::string_view s, std::map<std::string, SourcePos>& out) : s_(s), out_(out) {}

  void value(const std::string& ptr) {
    ws();
    if (done()) return;
    out_.emplace(ptr, SourcePos{line_, col_});
    char c = s_[i_];
    if (c == '{') {
      adv();
      ws();
      if (!done() && s_[i_] == '}') return adv();
      while (!done()) {
        ws();
        std::string key = string();
        ws();
        adv();  // ':'
        value(ptr + "/" + escape_token(key));
        ws();
        if (done()) return;
        char sep = s_[i_];
        adv();
        if (sep != ',') return;
      }
    } else if (c == '[') {
      adv();
      ws();
      if (!done() && s_[i_] == ']') return adv();
      for (std::size_t k = 0; !done(); ++k) {
        value(ptr + "/" + std::to_string(k));
        ws();
        if (done()) return;
        char sep = s_[i_];
        adv();
        if (sep != ',') return;
      }
    } else if (c == '"') {
      string();
    } else {
      while (!done() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) adv();
    }
  }

 private:
  bool done() const { return i_ >= s_.size(); }
  void adv() {
    if (done()) return;
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[i_]))) adv();
  }
  std::string string() {
    std::string r;
    if (done() || s_[i_] != '"') return r;
    adv();
    while (!done() && s_[i_] != '"') {
      if (s_[i_] == '\\') {
        adv();
        if (done()) break;
        char e = s_[i_];
        r += e == 'n' ? '\n' : e == 't' ? '\t' : e;
      } else {
        r += s_[i_];
      }
      adv();
    }
    adv();
    return r;
  }

  std::string_view s_;
  std::map<std::string, SourcePos>& out_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

SourceMap SourceMap::build(std::string_view text) {
  SourceMap m;
  Scanner(text, m.pos_).value("");
  return m;
}

std::optional<SourcePos> SourceMap::find(std::string pointer) const {
  while (true) {
    if (auto it = pos_.find(pointer); it != pos_.end()) return it->second;
    if (pointer.empty()) return std::nullopt;
    pointer.erase(pointer.rfind('/'));
  }
}

std::string Diagnostic::str() const {
  std::string out(to_string(kind));
  out += " at " + (path.empty() ? std::string("/") : path);
  if (pos) out += " (line " + std::to_string(pos->line) + ", column " + std::to_string(pos->column) + ")";
  return out + ": " + message;
}

// ---------------------------------------------------------------------------
// Schema reader

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + escape_token(key); }
std::string join(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

class Reader {
 public:
  Reader(const SourceMap& map, GradingContext& ctx) : map_(map), ctx_(ctx) {}

  [[noreturn]] void fail(ErrorKind kind, const std::string& path, const std::string& message) const {
    throw InputError(Diagnostic{kind, path, map_.find(path), message});
  }

  // Runs f, turning library errors into diagnostics at path.
  template <typename F>
  auto at(const std::string& path, F&& f) const {
    try {
      return f();
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      std::string what = e.what();
      std::string prefix = std::string(to_string(e.kind())) + ": ";
      if (what.rfind(prefix, 0) == 0) what.erase(0, prefix.size());
      fail(e.kind(), path, what);
    }
  }

  void keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) const {
    if (!obj.is_object()) fail(ErrorKind::SchemaError, path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || a == k;
      if (!ok) fail(ErrorKind::SchemaError, join(path, k), "unknown field \"" + k + "\"");
    }
  }

  const json& field(const json& obj, const std::string& path, const std::string& key) const {
    if (!obj.contains(key)) fail(ErrorKind::SchemaError, path, "missing field \"" + key + "\"");
    return obj.at(key);
  }

  const json& array(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(ErrorKind::SchemaError, path, "expected an array");
    return v;
  }

  std::size_t count(const json& v, const std::string& path, std::size_t lo, std::size_t hi) const {
    if (!v.is_number_integer()) fail(ErrorKind::SchemaError, path, "expected an integer");
    auto n = v.get<long long>();
    if (n < static_cast<long long>(lo) || n > static_cast<long long>(hi))
      fail(ErrorKind::SchemaError, path,
           "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  /// 1-based index in [1, dim], returned 0-based.
  std::size_t index(const json& v, const std::string& path, std::size_t dim) const {
    if (dim == 0) fail(ErrorKind::SchemaError, path, "no basis to index");
    return count(v, path, 1, dim) - 1;
  }

  Rational rational(const json& v, const std::string& path) const {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
    if (v.is_string()) return at(path, [&] { return parse_rational(v.get<std::string>()); });
    fail(ErrorKind::SchemaError, path, "expected an integer or a rational string such as \"-3/4\"");
  }

  MPoly poly(const json& v, const std::string& path) const {
    if (v.is_string()) return at(path, [&] { return parse_mpoly(v.get<std::string>()); });
    return MPoly(rational(v, path));
  }

  Elem elem(const json& v, const std::string& path) const {
    std::string label;
    if (v.is_string()) label = v.get<std::string>();
    else if (v.is_number_integer()) label = std::to_string(v.get<long long>());
    else fail(ErrorKind::SchemaError, path, "expected a group element label");
    auto e = ctx_.group.find(label);
    if (!e) fail(ErrorKind::SchemaError, path, "unknown group element \"" + label + "\"");
    return *e;
  }

  Elem elem_or_identity(const json& obj, const std::string& path, const std::string& key) const {
    return obj.contains(key) ? elem(obj.at(key), join(path, key)) : ctx_.e();
  }

  std::vector<Elem> elems(const json& v, const std::string& path) const {
    array(v, path);
    std::vector<Elem> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(elem(v[k], join(path, k)));
    return out;
  }

  ElementSet elem_set(const json& v, const std::string& path) const {
    array(v, path);
    ElementSet out;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!out.insert(elem(v[k], join(path, k))).second)
        fail(ErrorKind::SchemaError, join(path, k), "element listed twice");
    return out;
  }

  /// [[a, b, value], ...] over the group, unlisted pairs get `fill`.
  PairTable pair_table(const json& v, const std::string& path, const Rational& fill) const {
    array(v, path);
    PairTable t(ctx_.group.order(), fill);
    std::set<std::pair<Elem, Elem>> seen;
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::string p = join(path, k);
      if (!v[k].is_array() || v[k].size() != 3) fail(ErrorKind::SchemaError, p, "expected [a, b, value]");
      Elem a = elem(v[k][0], join(p, 0)), b = elem(v[k][1], join(p, 1));
      if (!seen.emplace(a, b).second) fail(ErrorKind::SchemaError, p, "pair listed twice");
      t(a, b) = rational(v[k][2], join(p, 2));
    }
    return t;
  }

  QMatrix matrix(const json& v, const std::string& path, std::optional<std::size_t> size = std::nullopt) const {
    array(v, path);
    std::size_t rows = v.size();
    if (rows == 0) fail(ErrorKind::SchemaError, path, "empty matrix");
    std::size_t cols = array(v[0], join(path, 0)).size();
    if (size && (rows != *size || cols != *size))
      fail(ErrorKind::SchemaError, path, "expected a " + std::to_string(*size) + "x" + std::to_string(*size) + " matrix");
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::string pr = join(path, r);
      if (array(v[r], pr).size() != cols) fail(ErrorKind::SchemaError, pr, "rows have different lengths");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(v[r][c], join(pr, c));
    }
    return m;
  }

  const GradingContext& ctx() const { return ctx_; }

 private:
  const SourceMap& map_;
  GradingContext& ctx_;
};

FiniteGroup read_group(const Reader& rd, const json& doc) {
  if (!doc.contains("group")) return FiniteGroup::cyclic(1);
  const std::string path = "/group";
  const json& g = doc.at("group");
  rd.keys(g, path, {"cyclic", "symmetric", "trivial", "elements", "table"});
  if (g.contains("cyclic")) return FiniteGroup::cyclic(static_cast<int>(rd.count(g.at("cyclic"), path + "/cyclic", 1, 4096)));
  if (g.contains("symmetric")) {
    rd.count(g.at("symmetric"), path + "/symmetric", 3, 3);
    return FiniteGroup::symmetric3();
  }
  if (g.contains("trivial")) return FiniteGroup::cyclic(1);

  const json& el = rd.array(rd.field(g, path, "elements"), path + "/elements");
  std::vector<std::string> labels;
  std::map<std::string, Elem> index;
  for (std::size_t k = 0; k < el.size(); ++k) {
    std::string p = join(path + "/elements", k);
    if (!el[k].is_string()) rd.fail(ErrorKind::SchemaError, p, "element labels must be strings");
    labels.push_back(el[k].get<std::string>());
    if (!index.emplace(labels.back(), static_cast<Elem>(k)).second)
      rd.fail(ErrorKind::SchemaError, p, "duplicate element label \"" + labels.back() + "\"");
  }
  const std::string tp = path + "/table";
  const json& tj = rd.array(rd.field(g, path, "table"), tp);
  const std::size_t n = labels.size();
  if (tj.size() != n) rd.fail(ErrorKind::SchemaError, tp, "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Elem>> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::string pr = join(tp, r);
    if (rd.array(tj[r], pr).size() != n) rd.fail(ErrorKind::SchemaError, pr, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      std::string pc = join(pr, c);
      if (!tj[r][c].is_string()) rd.fail(ErrorKind::SchemaError, pc, "expected an element label");
      auto it = index.find(tj[r][c].get<std::string>());
      if (it == index.end()) rd.fail(ErrorKind::SchemaError, pc, "unknown element \"" + tj[r][c].get<std::string>() + "\"");
      table[r].push_back(it->second);
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t q = 0; q < c; ++q) {
        if (table[r][q] == table[r][c])
          rd.fail(ErrorKind::NotLatinSquare, join(join(tp, r), c),
                  "\"" + labels[table[r][c]] + "\" appears twice in row " + labels[r]);
        if (table[q][r] == table[c][r])
          rd.fail(ErrorKind::NotLatinSquare, join(join(tp, c), r),
                  "\"" + labels[table[c][r]] + "\" appears twice in column " + labels[r]);
      }
  return rd.at(tp, [&] { return FiniteGroup::from_table(labels, table); });
}

void read_context(const Reader& rd, const json& doc, GradingContext& ctx, std::vector<std::string>& checks) {
  ctx.group = read_group(rd, doc);
  checks.emplace_back("group axioms");
  const int n = ctx.group.order();
  ctx.sigma.assign(static_cast<std::size_t>(n), Rational(1));
  ctx.phi = PairTable(n);

  if (doc.contains("sigma")) {
    const json& s = doc.at("sigma");
    if (!s.is_object()) rd.fail(ErrorKind::SchemaError, "/sigma", "expected an object mapping labels to values");
    for (const auto& [k, v] : s.items()) {
      std::string p = join("/sigma", k);
      Elem a = rd.elem(json(k), p);
      ctx.sigma[static_cast<std::size_t>(a)] = rd.rational(v, p);
      if (is_zero(ctx.sigma[static_cast<std::size_t>(a)])) rd.fail(ErrorKind::InvalidArgument, p, "sigma must be nonzero");
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (ctx.sig(ctx.mul(a, b)) != ctx.sig(a) * ctx.sig(b))
          rd.fail(ErrorKind::InvalidArgument, "/sigma",
                  "sigma is not multiplicative: sigma(" + ctx.group.label(a) + " " + ctx.group.label(b) + ") = " +
                      to_string(ctx.sig(ctx.mul(a, b))) + " but sigma(" + ctx.group.label(a) + ")sigma(" +
                      ctx.group.label(b) + ") = " + to_string(ctx.sig(a) * ctx.sig(b)));
  }
  checks.emplace_back("sigma multiplicative");

  if (doc.contains("phi")) ctx.phi = rd.pair_table(doc.at("phi"), "/phi", Rational(0));
  if (auto v = find_cocycle_violation(ctx)) rd.fail(ErrorKind::NotACocycle, "/phi", v->describe(ctx.group));
  checks.emplace_back("phi cocycle condition");

  if (doc.contains("gamma0")) ctx.gamma0 = rd.elem_set(doc.at("gamma0"), "/gamma0");
}

std::string triple_str(const std::array<std::size_t, 3>& t) {
  return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")";
}

GradedAlgebraFD read_algebra(const Reader& rd, const json& a, const std::string& path) {
  const auto& ctx = rd.ctx();
  rd.keys(a, path, {"matrix_algebra", "degree", "group_algebra", "direct_sum", "degrees", "products", "matrices"});
  if (a.contains("matrix_algebra")) {
    std::size_t n = rd.count(a.at("matrix_algebra"), path + "/matrix_algebra", 1, 16);
    return GradedAlgebraFD::matrix_algebra(n, rd.elem_or_identity(a, path, "degree"));
  }
  if (a.contains("group_algebra")) {
    const std::string p = path + "/group_algebra";
    const json& ga = a.at("group_algebra");
    rd.keys(ga, p, {"subgroup", "theta"});
    const auto all = ctx.group.elements();
    ElementSet sub = ga.contains("subgroup") ? rd.elem_set(ga.at("subgroup"), p + "/subgroup")
                                              : ElementSet(all.begin(), all.end());
    if (!ctx.group.is_subgroup(sub)) rd.fail(ErrorKind::NotASubgroup, p + "/subgroup", "not closed under the group law");
    std::optional<PairTable> theta;
    if (ga.contains("theta")) {
      theta = rd.pair_table(ga.at("theta"), p + "/theta", Rational(1));
      if (!check_group_cocycle(ctx.group, sub, *theta))
        rd.fail(ErrorKind::NotACocycle, p + "/theta", "theta is not a normalized nowhere-zero 2-cocycle on the subgroup");
    }
    return rd.at(p, [&] { return GradedAlgebraFD::group_algebra(ctx.group, sub, theta); });
  }
  if (a.contains("direct_sum")) {
    const std::string p = path + "/direct_sum";
    const json& parts = rd.array(a.at("direct_sum"), p);
    if (parts.empty()) rd.fail(ErrorKind::SchemaError, p, "needs at least one summand");
    GradedAlgebraFD out = read_algebra(rd, parts[0], join(p, 0));
    for (std::size_t k = 1; k < parts.size(); ++k)
      out = GradedAlgebraFD::direct_sum(out, read_algebra(rd, parts[k], join(p, k)));
    return out;
  }
  if (a.contains("matrices")) {
    const std::string p = path + "/matrices";
    const json& ms = rd.array(a.at("matrices"), p);
    if (ms.empty()) rd.fail(ErrorKind::SchemaError, p, "needs at least one matrix");
    std::vector<QMatrix> basis;
    std::vector<Elem> degrees;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      std::string pk = join(p, k);
      rd.keys(ms[k], pk, {"degree", "matrix"});
      degrees.push_back(rd.elem_or_identity(ms[k], pk, "degree"));
      basis.push_back(rd.matrix(rd.field(ms[k], pk, "matrix"), pk + "/matrix",
                                basis.empty() ? std::nullopt : std::optional(basis[0].rows())));
      if (basis.back().rows() != basis.back().cols()) rd.fail(ErrorKind::SchemaError, pk + "/matrix", "matrix is not square");
    }
    return rd.at(p, [&] { return GradedAlgebraFD::from_matrices(basis, degrees); });
  }
  const std::vector<Elem> degrees = rd.elems(rd.field(a, path, "degrees"), path + "/degrees");
  const std::size_t d = degrees.size();
  if (d == 0) rd.fail(ErrorKind::SchemaError, path + "/degrees", "needs at least one basis element");
  std::vector<Rational> mult(d * d * d);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (a.contains("products")) {
    const std::string p = path + "/products";
    const json& ps = rd.array(a.at("products"), p);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      std::string pk = join(p, k);
      rd.keys(ps[k], pk, {"i", "j", "result"});
      std::size_t i = rd.index(rd.field(ps[k], pk, "i"), pk + "/i", d);
      std::size_t j = rd.index(rd.field(ps[k], pk, "j"), pk + "/j", d);
      if (!seen.emplace(i, j).second) rd.fail(ErrorKind::SchemaError, pk, "product listed twice");
      const json& res = rd.array(rd.field(ps[k], pk, "result"), pk + "/result");
      if (res.size() != d) rd.fail(ErrorKind::SchemaError, pk + "/result", "expected " + std::to_string(d) + " coefficients");
      for (std::size_t c = 0; c < d; ++c) mult[(i * d + j) * d + c] = rd.rational(res[c], join(pk + "/result", c));
    }
  }
  return GradedAlgebraFD(degrees, std::move(mult));
}

GradedConformalAlgebra read_conformal(const Reader& rd, const json& c, const std::optional<GradedAlgebraFD>& algebra) {
  const std::string path = "/conformal";
  const auto& ctx = rd.ctx();
  rd.keys(c, path, {"current", "allow_nonassociative", "degrees", "products", "transvect"});
  bool allow = false;
  if (c.contains("allow_nonassociative")) {
    if (!c.at("allow_nonassociative").is_boolean())
      rd.fail(ErrorKind::SchemaError, path + "/allow_nonassociative", "expected true or false");
    allow = c.at("allow_nonassociative").get<bool>();
  }
  std::optional<GradedConformalAlgebra> out;
  if (c.contains("current")) {
    if (c.at("current") != json(true)) rd.fail(ErrorKind::SchemaError, path + "/current", "expected true");
    if (!algebra) rd.fail(ErrorKind::SchemaError, path + "/current", "a current algebra needs an \"algebra\" section");
    out = rd.at(path, [&] { return cur(*algebra, ctx, allow); });
  } else {
    const std::vector<Elem> degrees = rd.elems(rd.field(c, path, "degrees"), path + "/degrees");
    const std::size_t n = degrees.size();
    if (n == 0) rd.fail(ErrorKind::SchemaError, path + "/degrees", "needs at least one basis element");
    std::vector<std::vector<MPoly>> s(n * n, std::vector<MPoly>(n));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (c.contains("products")) {
      const std::string p = path + "/products";
      const json& ps = rd.array(c.at("products"), p);
      for (std::size_t k = 0; k < ps.size(); ++k) {
        std::string pk = join(p, k);
        rd.keys(ps[k], pk, {"i", "j", "result"});
        std::size_t i = rd.index(rd.field(ps[k], pk, "i"), pk + "/i", n);
        std::size_t j = rd.index(rd.field(ps[k], pk, "j"), pk + "/j", n);
        if (!seen.emplace(i, j).second) rd.fail(ErrorKind::SchemaError, pk, "product listed twice");
        const json& res = rd.array(rd.field(ps[k], pk, "result"), pk + "/result");
        if (res.size() != n) rd.fail(ErrorKind::SchemaError, pk + "/result", "expected " + std::to_string(n) + " coefficients");
        for (std::size_t q = 0; q < n; ++q) s[i * n + j][q] = rd.poly(res[q], join(pk + "/result", q));
      }
    }
    out = rd.at(path, [&] { return GradedConformalAlgebra(ctx, degrees, std::move(s)); });
  }
  if (c.contains("transvect")) {
    const std::string p = path + "/transvect";
    const json& ts = rd.array(c.at("transvect"), p);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      std::string pk = join(p, k);
      rd.keys(ts[k], pk, {"i", "j", "p"});
      std::size_t i = rd.index(rd.field(ts[k], pk, "i"), pk + "/i", out->rank());
      std::size_t j = rd.index(rd.field(ts[k], pk, "j"), pk + "/j", out->rank());
      MPoly poly = rd.poly(rd.field(ts[k], pk, "p"), pk + "/p");
      out = rd.at(pk, [&] { return transvect(*out, i, j, poly); });
    }
  }
  return std::move(*out);
}

CendInput read_cend(const Reader& rd, const json& c) {
  const std::string path = "/cend";
  rd.keys(c, path, {"degrees", "bound", "mutate"});
  CendInput out;
  out.degrees = rd.elems(rd.field(c, path, "degrees"), path + "/degrees");
  if (out.degrees.empty()) rd.fail(ErrorKind::SchemaError, path + "/degrees", "needs at least one row degree");
  if (out.degrees.size() > 8) rd.fail(ErrorKind::SchemaError, path + "/degrees", "at most 8 rows are supported");
  if (c.contains("bound")) out.bound = static_cast<unsigned>(rd.count(c.at("bound"), path + "/bound", 0, 8));
  if (c.contains("mutate")) out.mutate = rd.count(c.at("mutate"), path + "/mutate", 0, 6);
  return out;
}

void check_homogeneous(const Reader& rd, const QMatrix& m, Elem deg, const std::vector<Elem>& vdeg,
                       const std::string& path) {
  const auto& g = rd.ctx().group;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c)) && vdeg[r] != g.mul(deg, vdeg[c]))
        rd.fail(ErrorKind::NotHomogeneous, join(join(path, r), c),
                "entry maps degree " + g.label(vdeg[c]) + " to " + g.label(vdeg[r]) + ", not a shift by " + g.label(deg));
}

RepresentationInput read_twisted(const Reader& rd, const json& t, const std::string& path) {
  const auto& ctx = rd.ctx();
  const auto& g = ctx.group;
  rd.keys(t, path, {"subgroup", "sizes", "theta", "iota"});
  ElementSet sub = rd.elem_set(rd.field(t, path, "subgroup"), path + "/subgroup");
  FineSubgroupData fine = rd.at(path + "/subgroup", [&] { return coset_decomposition(g, sub, ctx.gamma0); });

  const json& sj = rd.array(rd.field(t, path, "sizes"), path + "/sizes");
  if (sj.size() != static_cast<std::size_t>(fine.p()))
    rd.fail(ErrorKind::SchemaError, path + "/sizes",
            "expected one size per coset of the subgroup in the support (" + std::to_string(fine.p()) + ")");
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < sj.size(); ++k) sizes.push_back(rd.count(sj[k], join(path + "/sizes", k), 1, 8));

  PairTable theta(g.order(), Rational(1));
  if (t.contains("theta")) theta = rd.pair_table(t.at("theta"), path + "/theta", Rational(1));
  TwistedMatrixAlgebra tw = rd.at(path + "/theta", [&] { return build_twisted_matrix_algebra(g, fine, sizes, theta); });
  MultCocycleZ z = rd.at(path + "/theta", [&] { return chi_from_theta(g, theta, fine); });

  RepresentationInput out;
  FineStructure s{z, std::vector<QMatrix>(static_cast<std::size_t>(g.order()))};
  for (Elem x = 0; x < g.order(); ++x) {
    if (!fine.in_support(x)) continue;
    std::size_t nk = sizes[static_cast<std::size_t>(fine.coset_of[static_cast<std::size_t>(x)])];
    for (std::size_t i = 0; i < nk; ++i) out.v_degrees.push_back(x);
    s.iota[static_cast<std::size_t>(x)] = QMatrix::identity(nk);
  }
  if (t.contains("iota")) {
    const json& io = t.at("iota");
    if (!io.is_object()) rd.fail(ErrorKind::SchemaError, path + "/iota", "expected an object mapping labels to matrices");
    for (const auto& [k, v] : io.items()) {
      std::string p = join(path + "/iota", k);
      Elem x = rd.elem(json(k), p);
      if (!fine.in_support(x)) rd.fail(ErrorKind::SchemaError, p, "element is outside the support");
      QMatrix m = rd.matrix(v, p, s.iota[static_cast<std::size_t>(x)].rows());
      if (is_zero(determinant(m))) rd.fail(ErrorKind::SingularMatrix, p, "iota must be invertible");
      s.iota[static_cast<std::size_t>(x)] = std::move(m);
    }
  }
  out.basis = rd.at(path, [&] { return phi_isomorphism(g, tw, s, out.v_degrees); });
  out.degrees = tw.algebra.degrees();
  out.planted = std::move(s);
  return out;
}

RepresentationInput read_representation(const Reader& rd, const json& r) {
  const std::string path = "/representation";
  rd.keys(r, path, {"twisted", "v_degrees", "basis"});
  if (r.contains("twisted")) return read_twisted(rd, r.at("twisted"), path + "/twisted");
  RepresentationInput out;
  out.v_degrees = rd.elems(rd.field(r, path, "v_degrees"), path + "/v_degrees");
  const std::size_t n = out.v_degrees.size();
  if (n == 0) rd.fail(ErrorKind::SchemaError, path + "/v_degrees", "V must be nonzero");
  const std::string p = path + "/basis";
  const json& bs = rd.array(rd.field(r, path, "basis"), p);
  if (bs.empty()) rd.fail(ErrorKind::SchemaError, p, "needs at least one matrix");
  for (std::size_t k = 0; k < bs.size(); ++k) {
    std::string pk = join(p, k);
    rd.keys(bs[k], pk, {"degree", "matrix"});
    out.degrees.push_back(rd.elem_or_identity(bs[k], pk, "degree"));
    out.basis.push_back(rd.matrix(rd.field(bs[k], pk, "matrix"), pk + "/matrix", n));
    check_homogeneous(rd, out.basis.back(), out.degrees.back(), out.v_degrees, pk + "/matrix");
  }
  rd.at(p, [&] { return GradedAlgebraFD::from_matrices(out.basis, out.degrees); });
  return out;
}

}  // namespace

Model parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    SourcePos pos{1, 1};
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
    std::string msg = e.what();
    if (auto c = msg.find("; "); c != std::string::npos) msg.erase(0, c + 2);
    throw InputError(Diagnostic{ErrorKind::ParseError, "", pos, msg});
  }
  const SourceMap map = SourceMap::build(text);
  Model m;
  Reader rd(map, m.ctx);
  rd.keys(doc, "", {"description", "group", "sigma", "phi", "gamma0", "algebra", "conformal", "cend", "representation"});
  read_context(rd, doc, m.ctx, m.checks);

  if (doc.contains("algebra")) {
    m.algebra = read_algebra(rd, doc.at("algebra"), "/algebra");
    if (auto v = m.algebra->grading_violation(m.ctx.group))
      rd.fail(ErrorKind::NotHomogeneous, "/algebra",
              "product of basis elements " + std::to_string((*v)[0] + 1) + " and " + std::to_string((*v)[1] + 1) +
                  " has a component on basis element " + std::to_string((*v)[2] + 1) + " of the wrong degree");
    m.checks.emplace_back("algebra grading");
    bool allow = doc.contains("conformal") && doc.at("conformal").is_object() &&
                 doc.at("conformal").value("allow_nonassociative", false);
    if (!allow) {
      if (auto v = m.algebra->associativity_violation())
        rd.fail(ErrorKind::NotAssociative, "/algebra", "(e_i e_j) e_k != e_i (e_j e_k) at (i,j,k) = " + triple_str(*v));
      m.checks.emplace_back("algebra associativity");
    }
  }
  if (doc.contains("conformal")) {
    m.conformal = read_conformal(rd, doc.at("conformal"), m.algebra);
    m.checks.emplace_back("conformal structure shape");
  }
  if (doc.contains("cend")) {
    m.cend = read_cend(rd, doc.at("cend"));
    m.checks.emplace_back("cend degrees");
  }
  if (doc.contains("representation")) {
    m.representation = read_representation(rd, doc.at("representation"));
    m.checks.emplace_back("representation homogeneity and closure");
  }
  return m;
}

Model validate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(Diagnostic{ErrorKind::ParseError, "", std::nullopt, "cannot open " + path});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace gca
