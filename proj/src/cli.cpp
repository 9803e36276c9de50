#include "gca/cli.hpp"

#include <array>
#include <chrono>
#include <ostream>

#include "gca/cend.hpp"
#include "gca/cohomology.hpp"
#include "gca/conformal.hpp"
#include "gca/ideal.hpp"
#include "gca/io.hpp"
#include "gca/twisted.hpp"

namespace gca {

using Record = Report::Record;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands{{
    {Command::Validate, "validate"},
    {Command::CheckAxioms, "check-axioms"},
    {Command::ConstructCur, "construct-cur"},
    {Command::CendAssoc, "cend-assoc"},
    {Command::Trivialize, "trivialize"},
    {Command::Decompose, "decompose"},
    {Command::Recover, "recover"},
    {Command::Simplicity, "simplicity"},
}};

constexpr unsigned kDefaultCendBound = 3;

Record rat(const Rational& q) { return to_string(q); }

Record vec(const QVector& v) {
  Record out = Record::array();
  for (const auto& x : v) out.push_back(rat(x));
  return out;
}

Record vecs(const std::vector<QVector>& vs) {
  Record out = Record::array();
  for (const auto& v : vs) out.push_back(vec(v));
  return out;
}

Record mat(const QMatrix& m) {
  Record out = Record::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec(m.row(r)));
  return out;
}

Record poly_vec(const PolyVector& v) {
  Record out = Record::array();
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

Record labels(const FiniteGroup& g, const std::vector<Elem>& es) {
  Record out = Record::array();
  for (Elem e : es) out.push_back(g.label(e));
  return out;
}

Record labels(const FiniteGroup& g, const ElementSet& es) { return labels(g, std::vector<Elem>(es.begin(), es.end())); }

/// Nonzero entries as [a, b, value].
Record sparse(const FiniteGroup& g, const PairTable& t) {
  Record out = Record::array();
  for (Elem a = 0; a < t.size(); ++a)
    for (Elem b = 0; b < t.size(); ++b)
      if (!is_zero(t(a, b))) out.push_back({g.label(a), g.label(b), to_string(t(a, b))});
  return out;
}

Record error_record(const Diagnostic& d) {
  Record r;
  r["kind"] = std::string(to_string(d.kind));
  r["path"] = d.path.empty() ? "/" : d.path;
  if (d.pos) {
    r["line"] = d.pos->line;
    r["column"] = d.pos->column;
  }
  r["message"] = d.message;
  return r;
}

Record error_record(const Error& e, const std::string& path) {
  Record r;
  r["kind"] = std::string(to_string(e.kind()));
  r["path"] = path;
  std::string what = e.what(), prefix = std::string(to_string(e.kind())) + ": ";
  r["message"] = what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
  return r;
}

class Runner {
 public:
  Runner(const JobSpec& job, const Model& m, Report& rep) : job_(job), m_(m), rep_(rep), g_(m.ctx.group) {}

  int dispatch() {
    switch (job_.command) {
      case Command::Validate: return validate();
      case Command::CheckAxioms: return check_axioms_cmd();
      case Command::ConstructCur: return construct_cur();
      case Command::CendAssoc: return cend_assoc();
      case Command::Trivialize: return trivialize();
      case Command::Decompose: return decompose();
      case Command::Recover: return recover();
      case Command::Simplicity: return simplicity();
    }
    return kInputError;
  }

 private:
  int missing(const std::string& section) {
    rep_.add("error", {{"kind", "SchemaError"},
                       {"path", "/"},
                       {"message", "command " + std::string(to_string(job_.command)) + " needs a \"" + section +
                                       "\" section"}});
    return kInputError;
  }

  /// The conformal section if present, else Cur of the algebra section.
  std::optional<GradedConformalAlgebra> conformal(std::string& origin) {
    if (m_.conformal) {
      origin = "/conformal";
      return m_.conformal;
    }
    if (m_.algebra) {
      origin = "/algebra";
      return cur(*m_.algebra, m_.ctx);
    }
    return std::nullopt;
  }

  int validate() {
    Record r;
    r["checks"] = m_.checks;
    r["group_order"] = g_.order();
    if (m_.algebra) r["algebra_dim"] = m_.algebra->dim();
    if (m_.conformal) r["conformal_rank"] = m_.conformal->rank();
    if (m_.cend) r["cend_size"] = m_.cend->degrees.size();
    if (m_.representation) {
      r["representation_dim"] = m_.representation->v_degrees.size();
      r["representation_basis"] = m_.representation->basis.size();
    }
    rep_.add("validation", r);
    return kSuccess;
  }

  int axioms(const GradedConformalAlgebra& c, const std::string& origin) {
    AxiomReport a = check_axioms(c);
    Record r;
    r["source"] = origin;
    r["rank"] = c.rank();
    r["grading"] = a.grading;
    r["sesquilinearity"] = a.sesquilinearity;
    r["associativity"] = a.associativity;
    r["closure"] = a.closure;
    r["identities_checked"] = a.identities_checked;
    rep_.add("axioms", r);
    if (a.passed()) return kSuccess;
    Record v;
    std::string law = !a.grading ? "grading" : !a.sesquilinearity ? "sesquilinearity" : !a.associativity ? "associativity"
                                                                                                          : "closure";
    v["law"] = law;
    if (a.first_violation) {
      v["i"] = (*a.first_violation)[0] + 1;
      v["j"] = (*a.first_violation)[1] + 1;
      if (law != "sesquilinearity") v["k"] = (*a.first_violation)[2] + 1;
    }
    v["detail"] = a.failures.front();
    rep_.add("violation", v);
    return kMathFailure;
  }

  int check_axioms_cmd() {
    std::string origin;
    auto c = conformal(origin);
    if (!c) return missing("conformal\" or \"algebra");
    return axioms(*c, origin);
  }

  int construct_cur() {
    if (!m_.algebra) return missing("algebra");
    GradedConformalAlgebra c = cur(*m_.algebra, m_.ctx);
    rep_.add("basis", {{"rank", c.rank()}, {"degrees", labels(g_, c.degrees())}});
    Record products = Record::array();
    for (std::size_t i = 0; i < c.rank(); ++i)
      for (std::size_t j = 0; j < c.rank(); ++j)
        for (std::size_t k = 0; k < c.rank(); ++k)
          if (!c.structure(i, j)[k].is_zero()) products.push_back({i + 1, j + 1, k + 1, c.structure(i, j)[k].str()});
    rep_.add("structure", {{"entries", "[i, j, k, c_ijk(lambda, T)]"}, {"products", products}});
    return axioms(c, "/algebra");
  }

  int cend_assoc() {
    if (!m_.cend) return missing("cend");
    unsigned bound = job_.degree_bound.value_or(m_.cend->bound.value_or(kDefaultCendBound));
    CendFormula formula = m_.cend->mutate ? CendFormula::mutated(m_.cend->mutate - 1) : CendFormula{};
    auto a = check_cend_associativity(m_.ctx, m_.cend->degrees, bound, formula);
    Record r;
    r["degrees"] = labels(g_, m_.cend->degrees);
    r["degree_bound"] = bound;
    r["mutated_term"] = m_.cend->mutate;
    r["passed"] = a.passed;
    r["identities_checked"] = a.identities_checked;
    rep_.add("cend_associativity", r);
    if (a.passed) return kSuccess;
    rep_.add("violation", {{"law", "associativity"}, {"detail", a.failure.value_or("")}});
    return kMathFailure;
  }

  int trivialize() {
    try {
      OneCochain tau = find_trivializing_cochain(m_.ctx);
      Record t;
      for (Elem a = 0; a < g_.order(); ++a) t[g_.label(a)] = rat(tau[static_cast<std::size_t>(a)]);
      bool ok = coboundary_of(tau, m_.ctx) == m_.ctx.phi;
      rep_.add("cochain", {{"tau", t}, {"coboundary_matches_phi", ok}});
      return ok ? kSuccess : kMathFailure;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSolution) throw;
      auto w = coboundary_obstruction(m_.ctx, m_.ctx.phi);
      rep_.add("obstruction", {{"message", e.what()},
                               {"weights", w ? sparse(g_, *w) : Record::array()},
                               {"meaning", "sum of weight * phi is nonzero but vanishes on every coboundary"}});
      return kMathFailure;
    }
  }

  int decompose() {
    if (!m_.algebra) return missing("algebra");
    const auto& a = *m_.algebra;
    try {
      auto blocks = decompose_semisimple_graded(a, m_.ctx.e());
      rep_.add("decomposition", {{"algebra_dim", a.dim()}, {"blocks", blocks.size()}});
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        Record r;
        r["block"] = b + 1;
        r["dim"] = blocks[b].basis.size();
        r["degrees"] = labels(g_, blocks[b].algebra.degrees());
        r["idempotent"] = vec(blocks[b].idempotent);
        r["basis"] = vecs(blocks[b].basis);
        try {
          r["graded_simple"] = is_graded_simple(blocks[b].algebra, m_.ctx.e());
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SplitFieldRequired) throw;
          r["graded_simple"] = "undetermined over Q";
        }
        rep_.add("block", r);
      }
      return kSuccess;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotSemisimple) {
        rep_.add("radical", {{"message", e.what()}, {"basis", vecs(radical_fd(a))}});
        return kMathFailure;
      }
      if (e.kind() == ErrorKind::SplitFieldRequired) {
        rep_.add("error", error_record(e, "/algebra"));
        return kInputError;
      }
      throw;
    }
  }

  int recover() {
    if (!m_.representation) return missing("representation");
    const auto& rp = *m_.representation;
    const std::string path = "/representation";
    auto irr = graded_irreducible(g_, rp.basis, rp.degrees, rp.v_degrees, job_.seed);
    rep_.add("irreducibility", {{"verdict", std::string(to_string(irr.verdict))},
                                {"seed", job_.seed},
                                {"notes", irr.notes}});
    if (irr.verdict == Irreducibility::Reducible) {
      rep_.add("invariant_subspace", {{"dim", irr.certificate.size()}, {"basis", vecs(irr.certificate)}});
      return kMathFailure;
    }
    try {
      FineStructure s = recover_fine_structure(g_, rp.basis, rp.degrees, rp.v_degrees);
      const auto& f = s.fine();
      Record iota;
      for (Elem x = 0; x < g_.order(); ++x)
        if (f.in_support(x)) iota[g_.label(x)] = mat(s.iota[static_cast<std::size_t>(x)]);
      rep_.add("fine_structure", {{"subgroup", labels(g_, f.gamma1)},
                                  {"gamma0", labels(g_, f.gamma0)},
                                  {"coset_representatives", labels(g_, f.reps)},
                                  {"chi", sparse(g_, s.chi.chi)},
                                  {"iota", iota}});
      bool ok = reproduces(g_, s, rp.v_degrees, rp.basis, rp.degrees);
      rep_.add("reconstruction", {{"reproduces_input", ok}});
      return ok ? kSuccess : kMathFailure;
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::NotIrreducible:
        case ErrorKind::VerificationFailed:
          rep_.add("failure", error_record(e, path));
          return kMathFailure;
        case ErrorKind::SplitFieldRequired:
        case ErrorKind::InvalidArgument:
          rep_.add("error", error_record(e, path));
          return kInputError;
        default: throw;
      }
    }
  }

  int simplicity() {
    std::string origin;
    auto c = conformal(origin);
    if (!c) return missing("conformal\" or \"algebra");
    SimplicityReport s = conformal_simplicity_suite(*c);
    Record r;
    r["source"] = origin;
    r["verdict"] = std::string(to_string(s.verdict));
    r["nonzero_product"] = s.nonzero_product;
    r["seeds_checked"] = s.seeds_checked;
    if (s.current_verdict) r["finite_dimensional_verdict"] = *s.current_verdict ? "graded-simple" : "not graded-simple";
    r["notes"] = s.notes;
    rep_.add("simplicity", r);
    if (s.ideal) {
      Record gens = Record::array();
      for (const auto& v : s.ideal->generators()) gens.push_back(poly_vec(v));
      Record seed = Record::array();
      if (s.ideal_seed)
        for (const auto& p : *s.ideal_seed) seed.push_back(p.str());
      rep_.add("ideal", {{"rank", s.ideal->rank()}, {"ambient_rank", s.ideal->ambient_rank()},
                         {"generators", gens}, {"seed", seed}});
    }
    return s.verdict == Verdict::Simple ? kSuccess : kMathFailure;
  }

  const JobSpec& job_;
  const Model& m_;
  Report& rep_;
  const FiniteGroup& g_;
};

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [k, name] : kCommands)
    if (k == c) return name;
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [k, n] : kCommands)
    if (n == name) return k;
  return std::nullopt;
}

int run(const JobSpec& job, Report& report) {
  const auto start = std::chrono::steady_clock::now();
  Record header;
  header["tool"] = "gca";
  header["conventions"] = std::string(kConventionsVersion);
  header["command"] = std::string(to_string(job.command));
  header["input"] = job.input;
  header["seed"] = job.seed;
  header["degree_bound"] = job.degree_bound ? Record(*job.degree_bound) : Record(nullptr);
  report.add("header", header);
  report.add("conventions", {{"version", std::string(kConventionsVersion)},
                             {"group law of the line", "products become sums, inverses negation, e becomes 0"},
                             {"twist", "lambda^sigma(a) becomes sigma(a)*lambda"},
                             {"cocycle", "phi(ab,c) + sigma(c)phi(a,b) = phi(a,bc) + phi(b,c)"},
                             {"coboundary", "(d tau)(a,b) = sigma(b)tau(a) + tau(b) - tau(ab)"},
                             {"T on the left", "(h a)_lambda b = h(-sigma(a)(lambda + phi(a,a^-1))) (a_lambda b)"},
                             {"T on the right", "a_lambda (h b) = h(T + sigma(ab)lambda + phi(a^-1,ab)) (a_lambda b)"},
                             {"indices", "basis indices are 1-based"}});

  int status = kSuccess;
  try {
    Model m = validate_file(job.input);
    Record ctx;
    ctx["group_order"] = m.ctx.group.order();
    ctx["elements"] = m.ctx.group.labels();
    Record sig;
    for (Elem a = 0; a < m.ctx.group.order(); ++a) sig[m.ctx.group.label(a)] = rat(m.ctx.sig(a));
    ctx["sigma"] = sig;
    ctx["phi"] = sparse(m.ctx.group, m.ctx.phi);
    report.add("context", ctx);
    status = Runner(job, m, report).dispatch();
  } catch (const InputError& e) {
    report.add("error", error_record(e.diagnostic()));
    status = kInputError;
  } catch (const Error& e) {
    report.add("error", error_record(e, "/"));
    status = kInputError;
  } catch (const std::exception& e) {
    report.add("error", {{"kind", "InternalInconsistency"}, {"path", "/"}, {"message", e.what()}});
    status = kInputError;
  }

  static constexpr std::string_view kStatus[] = {"pass", "fail", "input-error"};
  Record verdict;
  verdict["status"] = std::string(kStatus[status]);
  verdict["exit"] = status;
  report.add("verdict", verdict);
  if (job.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    report.add("timing", {{"elapsed_ms", static_cast<double>(us) / 1000.0}});
  }
  return status;
}

int run(const JobSpec& job, std::ostream& out) {
  Report report;
  int status = run(job, report);
  report.write(out, job.format);
  return status;
}

}  // namespace gca
