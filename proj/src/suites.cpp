#include "matreg/suites.hpp"

#include <functional>
#include <map>
#include <random>

#include "matreg/arboricity.hpp"
#include "matreg/degree_lemmas.hpp"
#include "matreg/error.hpp"
#include "matreg/ideal.hpp"
#include "matreg/simplicial.hpp"

namespace matreg {

namespace {

std::string bases_text(const Matroid& m) { return "n=" + std::to_string(m.ground_size()) + " bases=" + SubsetFamily(m.ground_size(), m.bases()).to_string(); }

// Collects the failed claims of one instance.
class Instance {
 public:
  Instance(SuiteResult& r, std::string id, std::string witness)
      : r_(r), id_(std::move(id)), witness_(std::move(witness)) {}
  ~Instance() {
    ++r_.instances;
    if (ok_) ++r_.passes;
  }
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;

  void expect(bool holds, const std::string& claim, const std::string& expected, const std::string& observed,
              const std::string& extra = {}) {
    if (holds) return;
    ok_ = false;
    r_.findings.push_back({id_, claim, expected, observed, extra.empty() ? witness_ : witness_ + " " + extra});
  }
  void error(const Error& e, const std::string& claim) { expect(false, claim, "a value", e.what()); }
  bool ok() const { return ok_; }

 private:
  SuiteResult& r_;
  std::string id_;
  std::string witness_;
  bool ok_ = true;
};

std::string str(int v) { return std::to_string(v); }

void suite_arbor(const SuiteInput& in, const SuiteOptions&, SuiteResult& r) {
  r.columns = {"id", "n", "r", "a", "gamma_dual", "c_dual", "pass"};
  long long equal = 0;
  for (const auto& nm : in.matroids) {
    ArborRecord rec;
    try {
      rec = check_arbor(nm.matroid);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Inapplicable) throw;
      ++r.skipped;
      continue;
    }
    Instance inst(r, nm.id, bases_text(nm.matroid));
    inst.expect(rec.pass, "a(M) <= c(M*)", "<= " + str(rec.circumference_dual), str(rec.arboricity));
    inst.expect(rec.arboricity == rec.gamma_dual, "a(M) == gamma(M*)", str(rec.arboricity), str(rec.gamma_dual));
    if (rec.equality) ++equal;
    r.rows.push_back({nm.id, str(nm.matroid.ground_size()), str(nm.matroid.rank()), str(rec.arboricity),
                      str(rec.gamma_dual), str(rec.circumference_dual), rec.pass ? "1" : "0"});
  }
  r.notes.push_back("equality a(M) = c(M*) on " + std::to_string(equal) + " instances");
}

void suite_gamma(const SuiteInput& in, const SuiteOptions&, SuiteResult& r) {
  for (const auto& nm : in.matroids) {
    if (is_star(nm.matroid)) {
      ++r.skipped;
      continue;
    }
    Instance inst(r, nm.id, bases_text(nm.matroid));
    const CountWithCertificate g = gamma(nm.matroid);
    const int c = circumference(nm.matroid).value();
    inst.expect(g.value <= c, "gamma(M) <= c(M)", "<= " + str(c), str(g.value));
    inst.expect(validate_certificate(nm.matroid, g.certificate) && g.certificate.size() == g.value,
                "gamma certificate valid", "valid", "invalid");
  }
}

void suite_mb(const SuiteInput& in, const SuiteOptions&, SuiteResult& r) {
  for (const auto& nm : in.matroids) {
    if (is_star(nm.matroid)) {
      ++r.skipped;
      continue;
    }
    Instance inst(r, nm.id, bases_text(nm.matroid));
    const MbRecord rec = check_mb(nm.matroid);
    inst.expect(rec.pass, "c(M)(|V|-r(M)) >= |V|", ">= " + str(rec.rhs), str(rec.lhs));
  }
}

void suite_edmonds(const SuiteInput& in, const SuiteOptions&, SuiteResult& r) {
  for (const auto& nm : in.matroids) {
    if (!loops(nm.matroid).empty() || nm.matroid.rank() == 0) {
      ++r.skipped;
      continue;
    }
    Instance inst(r, nm.id, bases_text(nm.matroid));
    const CountWithCertificate exact = arboricity_exact(nm.matroid);
    const SubsetMaximizer ed = arboricity_edmonds(nm.matroid);
    inst.expect(exact.value == ed.value, "arboricity_exact == arboricity_edmonds", str(exact.value), str(ed.value),
                "A=" + ed.maximizer.to_string());
    inst.expect(validate_certificate(nm.matroid, exact.certificate) && exact.certificate.size() == exact.value,
                "cover certificate valid", "valid", "invalid");
  }
}

void suite_nashwilliams(const SuiteInput& in, const SuiteOptions&, SuiteResult& r) {
  long long equal = 0, bridgeless = 0, partition_over = 0;
  for (const Graph& g : in.graphs) {
    Instance inst(r, "G(" + str(g.vertex_count) + ":" + graph_label(g) + ")", "");
    const Matroid m = graphic(g);
    const int nw = nash_williams(g).value;
    const CountWithCertificate cover = min_forest_cover(g);
    const CountWithCertificate partition = min_forest_cover(g, true);
    const int exact = arboricity_exact(m).value;
    const int bond = largest_bond(g);
    inst.expect(nw == exact, "nash_williams == arboricity_exact(graphic)", str(exact), str(nw));
    inst.expect(cover.value == exact, "min_forest_cover == arboricity_exact(graphic)", str(exact), str(cover.value));
    inst.expect(partition.value == exact, "forest partition == forest cover", str(exact), str(partition.value));
    inst.expect(validate_certificate(m, cover.certificate), "forest certificate valid", "valid", "invalid");
    inst.expect(exact <= bond, "a(G) <= c*(G)", "<= " + str(bond), str(exact));
    if (exact == bond) ++equal;
    // Dual form: γ(M(G)) <= c(G) once M*(G) has no loops, i.e. G is bridgeless.
    const auto c = graph_circumference(g);
    if (c && bridges(g).empty()) {
      ++bridgeless;
      const int gm = gamma(m).value;
      inst.expect(gm <= *c, "gamma(M(G)) <= c(G) for bridgeless G", "<= " + str(*c), str(gm));
      if (arboricity_exact(dual(m)).value > *c) ++partition_over;
    }
  }
  r.notes.push_back("a(G) = c*(G) on " + std::to_string(equal) + " graphs");
  r.notes.push_back("bridgeless graphs checked for gamma(M(G)) <= c(G): " + std::to_string(bridgeless) +
                    "; a(M*(G)) > c(G) on " + std::to_string(partition_over));
}

void suite_cone_acyclic(const SuiteInput& in, const SuiteOptions& opt, SuiteResult& r) {
  for (const auto& nm : in.matroids) {
    Instance inst(r, nm.id, bases_text(nm.matroid));
    const SimplicialComplex c = independence_complex(nm.matroid);
    const bool cone = is_cone(c);
    std::optional<HomologyReport> first;
    for (int p : opt.primes) {
      const HomologyReport h = reduced_homology(c, p);
      inst.expect(cone == h.all_zero(), "cone <=> acyclic (p=" + str(p) + ")", cone ? "acyclic" : "not acyclic",
                  h.all_zero() ? "acyclic" : "not acyclic");
      if (!first) {
        first = h;
      } else {
        inst.expect(first->dims == h.dims, "homology independent of p", "same ranks", "differs at p=" + str(p));
      }
    }
    inst.expect(cone == is_star(nm.matroid), "cone <=> star", is_star(nm.matroid) ? "cone" : "no cone",
                cone ? "cone" : "no cone");
  }
}

ExponentVector random_vector(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> e(static_cast<std::size_t>(n));
  for (auto& x : e) x = d(rng);
  return ExponentVector(std::move(e));
}

void suite_degree_lemmas(const SuiteInput& in, const SuiteOptions& opt, SuiteResult& r) {
  std::vector<const NamedMatroid*> pool;
  for (const auto& nm : in.matroids) {
    if (circumference(nm.matroid) && nm.matroid.rank() >= 1) pool.push_back(&nm);
  }
  r.skipped = static_cast<long long>(in.matroids.size() - pool.size());
  if (pool.empty()) return;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> pick_t(1, 3);
  constexpr int kAttempts = 10'000;

  for (const auto& nm : in.matroids) {
    if (nm.matroid.rank() == 0) continue;
    Instance inst(r, nm.id, bases_text(nm.matroid));
    const auto x = find_circ_link_violation(nm.matroid);
    inst.expect(!x, "c(link(x)) <= c(M)", "holds for every x", "fails", x ? "x=" + str(*x) : "");
  }

  long long misses = 0;
  // Each trial resamples until the identity's hypotheses hold.
  auto trials = [&](const std::function<bool()>& attempt) {
    for (int s = 0; s < opt.samples; ++s) {
      bool done = false;
      for (int k = 0; k < kAttempts && !done; ++k) done = attempt();
      if (!done) ++misses;
    }
  };

  trials([&] {
    const NamedMatroid& nm = *pool[pick(rng)];
    const int t = pick_t(rng);
    const ExponentVector a = random_vector(rng, nm.matroid.ground_size(), 0, t);
    const SimplicialComplex gamma_c = degree_complex_matroid(nm.matroid, t, a);
    if (gamma_c.is_void() || gamma_c.vertices().empty()) return false;
    const auto verts = gamma_c.vertices().elements();
    const int v = verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)];
    const auto chk = check_link_identity(nm.matroid, t, a, v);
    if (!chk) return false;
    Instance inst(r, nm.id, bases_text(nm.matroid));
    inst.expect(chk->holds(), "lk_G(v) == D_b(I_lk^(t-r))", chk->rhs.to_string(), chk->lhs.to_string(),
                "t=" + str(t) + " a=(" + a.to_string() + ") v=" + str(v));
    return true;
  });

  // The restriction step keeps the rank only when M is not a star.
  std::vector<const NamedMatroid*> nonstar;
  for (const auto* nm : pool) {
    if (!is_star(nm->matroid)) nonstar.push_back(nm);
  }
  std::uniform_int_distribution<std::size_t> pick_nonstar(0, nonstar.empty() ? 0 : nonstar.size() - 1);
  if (!nonstar.empty()) trials([&] {
    const NamedMatroid& nm = *nonstar[pick_nonstar(rng)];
    const int t = pick_t(rng);
    const ExponentVector a = random_vector(rng, nm.matroid.ground_size(), 0, t);
    const int u = argmin_coordinate(a);
    const auto chk = check_restrict_identity(nm.matroid, t, a, u);
    if (!chk) return false;
    Instance inst(r, nm.id, bases_text(nm.matroid));
    inst.expect(chk->holds(), "G_{-u} == D_b(I_{D_{-u}}^(t-a_u))", chk->rhs.to_string(), chk->lhs.to_string(),
                "t=" + str(t) + " a=(" + a.to_string() + ") u=" + str(u));
    return true;
  });

  trials([&] {
    const NamedMatroid& nm = *pool[pick(rng)];
    const int t = pick_t(rng);
    const int c = circumference(nm.matroid).value();
    const ExponentVector a = random_vector(rng, nm.matroid.ground_size(), -1, t * c);
    if (!nm.matroid.is_independent(a.negative_support())) return false;
    Instance inst(r, nm.id, bases_text(nm.matroid));
    const SimplicialComplex lhs = degree_complex_matroid(nm.matroid, t, a);
    const SimplicialComplex rhs = degree_complex_general(symbolic_generators(nm.matroid, t), a);
    inst.expect(lhs == rhs, "basis form == localization form", rhs.to_string(), lhs.to_string(),
                "t=" + str(t) + " a=(" + a.to_string() + ")");
    return true;
  });
  if (misses) r.notes.push_back(std::to_string(misses) + " trials found no admissible sample");
}

// Formula, Takayama and the witness re-check for one (m, t, p).
void regsym_instance(const NamedMatroid& nm, int t, int p, const SuiteOptions& opt, SuiteResult& r) {
  Instance inst(r, nm.id + " t=" + str(t) + " p=" + str(p), bases_text(nm.matroid));
  try {
    const int formula = reg_formula(nm.matroid, t);
    const TakayamaResult tk = reg_takayama(nm.matroid, t, p, opt.search);
    const std::string w = "a=(" + tk.witness.to_string() + ")";
    inst.expect(tk.value == formula, "reg_takayama == reg_formula", str(formula), str(tk.value), w);
    const int c = circumference(nm.matroid).value();
    inst.expect(tk.search.value == c * (t - 1), "|witness| == c(M)(t-1)", str(c * (t - 1)), str(tk.search.value), w);
    inst.expect(!tk.search.negative_only, "top degree attained on N^n", "attained",
                "only with negative entries, max on N^n = " + str(tk.search.nonnegative_value), w);
    // Re-verify the witness through the generator-based degree complex.
    const Relabelled red = core(nm.matroid);
    const SimplicialComplex dc = degree_complex_general(symbolic_generators(red.matroid, t), tk.search.witness);
    const int d = red.matroid.rank();
    const int g = tk.search.witness.negative_support().size();
    inst.expect(reduced_homology(dc, p).at(d - g - 1) != 0, "witness has nonzero top homology", "nonzero", "zero", w);
  } catch (const Error& e) {
    inst.error(e, "reg_takayama == reg_formula");
  }
}

void suite_regsym(const SuiteInput& in, const SuiteOptions& opt, SuiteResult& r) {
  for (const auto& nm : in.matroids) {
    if (!circumference(nm.matroid)) {
      ++r.skipped;
      continue;
    }
    for (int t : opt.t_values) {
      for (int p : opt.primes) regsym_instance(nm, t, p, opt, r);
    }
  }
}

void suite_betti(const SuiteInput& in, const SuiteOptions& opt, SuiteResult& r) {
  for (const auto& nm : in.matroids) {
    if (!circumference(nm.matroid)) {
      ++r.skipped;
      continue;
    }
    for (int t : opt.t_values) {
      for (int p : opt.primes) {
        Instance inst(r, nm.id + " t=" + str(t) + " p=" + str(p), bases_text(nm.matroid));
        try {
          const MonomialIdeal ideal = symbolic_generators(nm.matroid, t);
          const auto table = betti_oracle(ideal, p, opt.box_cap);
          const int formula = reg_formula(nm.matroid, t);
          const int betti = reg_from_betti(table);
          inst.expect(betti == formula, "reg_from_betti == reg_formula", str(formula), str(betti));
          std::vector<ExponentVector> zeroth;
          for (const auto& e : table) {
            if (e.homological_degree == 0) {
              zeroth.push_back(e.degree);
              inst.expect(e.value == 1, "beta_0 entries are 1", "1", str(e.value), "a=(" + e.degree.to_string() + ")");
            }
          }
          inst.expect(zeroth == ideal.generators(), "beta_0 support == minimal generators", "generators", "differs");
        } catch (const Error& e) {
          inst.error(e, "reg_from_betti == reg_formula");
        }
      }
    }
  }
}

void suite_upper(const SuiteInput& in, const SuiteOptions& opt, SuiteResult& r) {
  for (const auto& nm : in.matroids) {
    if (!circumference(nm.matroid)) {
      ++r.skipped;
      continue;
    }
    const Matroid red = core(nm.matroid).matroid;
    for (int t : opt.t_values) {
      for (int p : opt.primes) {
        Instance inst(r, nm.id + " t=" + str(t) + " p=" + str(p), bases_text(nm.matroid));
        try {
          const UpperRecord rec = check_upper(red, t, p, opt.search);
          const std::string w = "core a=(" + rec.witness.to_string() + ")";
          inst.expect(rec.pass, "no non-acyclic degree complex above c(t-1)", "<= " + str(rec.bound),
                      str(rec.max_nonacyclic), w);
          inst.expect(rec.attained, "c(t-1) attained", str(rec.bound), str(rec.max_nonacyclic), w);
        } catch (const Error& e) {
          inst.error(e, "upper bound");
        }
      }
    }
  }
}

void suite_linear_uniform(const SuiteInput& in, const SuiteOptions& opt, SuiteResult& r) {
  long long outside = 0, outside_consistent = 0;
  for (const auto& nm : in.matroids) {
    if (!circumference(nm.matroid)) {
      ++r.skipped;
      continue;
    }
    for (int t : opt.t_values) {
      for (int p : opt.primes) {
        try {
          const UniformRecord rec = check_uniform_characterization(nm.matroid, t, p, opt.box_cap);
          if (!rec.in_hypothesis) {
            ++r.skipped;
            ++outside;
            if (rec.consistent) ++outside_consistent;
            continue;
          }
          Instance inst(r, nm.id + " t=" + str(t) + " p=" + str(p), bases_text(nm.matroid));
          inst.expect(rec.consistent, "linear resolution <=> core uniform", rec.uniform ? "linear" : "not linear",
                      rec.linear ? "linear" : "not linear");
        } catch (const Error& e) {
          Instance inst(r, nm.id + " t=" + str(t) + " p=" + str(p), bases_text(nm.matroid));
          inst.error(e, "linear resolution <=> core uniform");
        }
      }
    }
  }
  if (outside) {
    r.notes.push_back("rank-0 cores skipped: " + std::to_string(outside) + " (linear resolution there, " +
                      std::to_string(outside - outside_consistent) + " disagree with the uniform-of-positive-rank test)");
  }
}

void suite_cm_guard(const SuiteInput& in, const SuiteOptions& opt, SuiteResult& r) {
  r.notes.push_back("bounded evidence, not proof: vanishing checked on the search box only");
  for (const auto& nm : in.matroids) {
    if (!circumference(nm.matroid)) {
      ++r.skipped;
      continue;
    }
    const Matroid red = core(nm.matroid).matroid;
    for (int t : opt.t_values) {
      for (int p : opt.primes) {
        Instance inst(r, nm.id + " t=" + str(t) + " p=" + str(p), bases_text(nm.matroid));
        try {
          const CmGuardRecord rec = check_cm_guard(red, t, p, opt.search);
          std::string w;
          if (rec.first_violation) {
            w = "core a=(" + rec.first_violation->first.to_string() + ") i=" + str(rec.first_violation->second);
          }
          inst.expect(rec.pass(), "H^i_m(S/I^(t))_a = 0 for i < d", "0 violations", std::to_string(rec.violations), w);
        } catch (const Error& e) {
          inst.error(e, "H^i_m(S/I^(t))_a = 0 for i < d");
        }
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteInput&, const SuiteOptions&, SuiteResult&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"arbor", suite_arbor},
      {"gamma", suite_gamma},
      {"mb", suite_mb},
      {"edmonds", suite_edmonds},
      {"nashwilliams", suite_nashwilliams},
      {"cone_acyclic", suite_cone_acyclic},
      {"degree_lemmas", suite_degree_lemmas},
      {"upper", suite_upper},
      {"regsym", suite_regsym},
      {"betti", suite_betti},
      {"linear_uniform", suite_linear_uniform},
      {"cm_guard", suite_cm_guard},
  };
  return suites;
}

std::string tsv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += '\t';
    s += cells[i];
  }
  return s + "\n";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteInput& input, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::UnknownSuite, name);
  SuiteResult r;
  r.suite = name;
  it->second(input, options, r);
  return r;
}

std::string format_report(const SuiteResult& r) {
  std::string s;
  for (const auto& f : r.findings) {
    s += "FINDING " + f.id + ": " + f.claim + "; expected " + f.expected + ", observed " + f.observed;
    if (!f.witness.empty()) s += "; witness " + f.witness;
    s += "\n";
  }
  for (const auto& n : r.notes) s += "note: " + n + "\n";
  s += "suite " + r.suite + ": " + std::to_string(r.passes) + "/" + std::to_string(r.instances) + " pass";
  if (r.skipped) s += ", " + std::to_string(r.skipped) + " skipped";
  return s + "\n";
}

std::string format_tsv(const SuiteResult& r) {
  std::string s;
  if (!r.columns.empty()) {
    s += tsv_line(r.columns);
    for (const auto& row : r.rows) s += tsv_line(row);
    return s;
  }
  s += tsv_line({"id", "claim", "expected", "observed", "witness"});
  for (const auto& f : r.findings) s += tsv_line({f.id, f.claim, f.expected, f.observed, f.witness});
  return s;
}

}  // namespace matreg
