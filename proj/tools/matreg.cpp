// matreg: command-line front end for the matroid/regularity library.
//
// Exit codes: 0 success, 1 findings or a failed computation, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matreg/arboricity.hpp"
#include "matreg/error.hpp"
#include "matreg/families.hpp"
#include "matreg/ideal.hpp"
#include "matreg/io.hpp"
#include "matreg/regularity.hpp"
#include "matreg/simplicial.hpp"
#include "matreg/suites.hpp"

using namespace matreg;

namespace {

constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "1..3", "1,2,5"
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      if (const auto dots = part.find(".."); dots != std::string::npos) {
        const int lo = std::stoi(part.substr(0, dots)), hi = std::stoi(part.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range " + part);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(std::stoi(part));
      }
    }
  } catch (const std::logic_error&) {
    throw UsageError("cannot read integer list '" + text + "'");
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

SearchOptions search_options(const std::optional<int>& slack) {
  SearchOptions o;
  o.slack = slack;
  if (const char* env = std::getenv("MATREG_BUDGET")) {
    try {
      o.budget = std::stoll(env);
    } catch (const std::logic_error&) {
      throw UsageError("MATREG_BUDGET must be an integer");
    }
  }
  return o;
}

// A matroid file, or a graph file read as its cycle matroid.
struct Loaded {
  Matroid matroid;
  std::optional<Graph> graph;
};

Loaded load_matroid(const std::string& path) {
  Record rec = parse_record(read_file(path));
  if (auto* m = std::get_if<Matroid>(&rec)) return {*m, {}};
  if (auto* g = std::get_if<Graph>(&rec)) return {graphic(*g), *g};
  throw UsageError(path + " holds a complex, not a matroid or graph");
}

std::string join_sets(const std::vector<ElementSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? " " : "") + sets[i].to_string();
  return s;
}

void print_kv(bool tsv, const std::string& key, const std::string& value) {
  std::cout << key << (tsv ? "\t" : ": ") << value << "\n";
}

int cmd_analyze(const std::string& path, int t_max, bool tsv) {
  const Loaded in = load_matroid(path);
  const Matroid& m = in.matroid;
  const auto c = circumference(m);
  const Relabelled red = core(m);
  print_kv(tsv, "n", std::to_string(m.ground_size()));
  print_kv(tsv, "rank", std::to_string(m.rank()));
  print_kv(tsv, "bases", std::to_string(m.bases().size()));
  print_kv(tsv, "circuits", join_sets(circuits(m).members()));
  print_kv(tsv, "circumference", c ? std::to_string(*c) : "none");
  print_kv(tsv, "star_centers", star_centers(m).to_string());
  print_kv(tsv, "core_size", std::to_string(red.matroid.ground_size()));
  print_kv(tsv, "dual_rank", std::to_string(m.ground_size() - m.rank()));
  if (loops(m).empty()) {
    print_kv(tsv, "arboricity", std::to_string(arboricity_exact(m).value));
    print_kv(tsv, "arboricity_edmonds", m.rank() ? std::to_string(arboricity_edmonds(m).value) : "undefined");
  } else {
    print_kv(tsv, "arboricity", "undefined (loops " + loops(m).to_string() + ")");
  }
  print_kv(tsv, "gamma", is_star(m) ? "undefined (star)" : std::to_string(gamma(m).value));
  if (c) {
    for (int t = 1; t <= t_max; ++t) print_kv(tsv, "reg t=" + std::to_string(t), std::to_string(reg_formula(m, t)));
  }
  return 0;
}

int cmd_arbor(const std::string& path, bool tsv) {
  const Loaded in = load_matroid(path);
  SuiteInput si;
  si.matroids.push_back({path, in.matroid, in.graph});
  const SuiteResult r = run_suite("arbor", si, {});
  if (r.skipped) {
    std::cerr << "arbor: not applicable (loops or free matroid)\n";
    return kExitFindings;
  }
  if (tsv) {
    std::cout << format_tsv(r);
  } else {
    const auto& row = r.rows.front();
    std::cout << "a(M) = " << row[3] << ", gamma(M*) = " << row[4] << ", c(M*) = " << row[5]
              << (row[6] == "1" ? "  bound holds" : "  BOUND FAILS") << "\n";
  }
  return r.all_pass() ? 0 : kExitFindings;
}

int cmd_reg(const std::string& path, int t, const std::string& method, int p, const std::optional<int>& slack,
            bool tsv) {
  if (method != "formula" && method != "takayama" && method != "betti" && method != "all") {
    throw UsageError("unknown method " + method);
  }
  const Matroid m = load_matroid(path).matroid;
  const SearchOptions opts = search_options(slack);
  const int formula = reg_formula(m, t);
  struct Row {
    std::string method;
    int value;
    std::string witness;
  };
  std::vector<Row> rows;
  if (method == "formula" || method == "all") rows.push_back({"formula", formula, "-"});
  if (method == "takayama" || method == "all") {
    const TakayamaResult tk = reg_takayama(m, t, p, opts);
    rows.push_back({"takayama", tk.value, tk.witness.to_string()});
  }
  if (method == "betti" || method == "all") rows.push_back({"betti", reg_from_betti(symbolic_generators(m, t), p), "-"});
  bool all_agree = true;
  const char* sep = tsv ? "\t" : "  ";
  std::cout << "method" << sep << "value" << sep << "witness" << sep << "agree\n";
  for (const auto& r : rows) {
    const bool agree = r.value == formula;
    all_agree = all_agree && agree;
    std::cout << r.method << sep << r.value << sep << r.witness << sep << (agree ? "yes" : "NO") << "\n";
  }
  return all_agree ? 0 : kExitFindings;
}

int cmd_homology(const std::string& path, int p) {
  Record rec = parse_record(read_file(path));
  SimplicialComplex c;
  if (auto* cx = std::get_if<SimplicialComplex>(&rec)) {
    c = *cx;
  } else if (auto* m = std::get_if<Matroid>(&rec)) {
    c = independence_complex(*m);
  } else {
    c = independence_complex(graphic(std::get<Graph>(rec)));
  }
  const HomologyReport h = reduced_homology(c, p);
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    std::cout << "H~" << static_cast<int>(k) - 1 << " = " << h.dims[k] << "\n";
  }
  return 0;
}

int cmd_ideal(const std::string& path, int t, const std::string& emit) {
  const Matroid m = load_matroid(path).matroid;
  const MonomialIdeal ideal = symbolic_generators(m, t);
  if (emit == "generators") {
    for (const auto& g : ideal.generators()) std::cout << g.to_string() << "\n";
  } else if (emit == "complex") {
    std::cout << format_complex(radical_complex(ideal));
  } else {
    throw UsageError("unknown --emit " + emit);
  }
  return 0;
}

int cmd_enumerate(int n, const std::string& emit, const std::string& out_dir) {
  const auto all = enumerate_all_matroids(n);
  if (emit == "files") {
    if (out_dir.empty()) throw UsageError("--emit files needs --out");
    std::filesystem::create_directories(out_dir);
    for (const Matroid& m : all) {
      std::ofstream f(std::filesystem::path(out_dir) / (canonical_hash(m) + ".mat"));
      f << format_matroid(m);
      if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write into " + out_dir);
    }
    std::cout << all.size() << " matroids written to " << out_dir << "\n";
  } else if (emit == "list") {
    for (const Matroid& m : all) std::cout << canonical_hash(m) << "\t" << m.rank() << "\t" << join_sets(m.bases()) << "\n";
  } else if (emit == "count") {
    std::cout << all.size() << "\n";
  } else {
    throw UsageError("unknown --emit " + emit);
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> exhaustive_n;
  std::string family;
  std::vector<std::string> files;
  std::string t = "1..3";
  std::string p = "2";
  std::string k_range = "1..3";
  std::string n_range = "2..5";
  int samples = 200;
  std::uint64_t seed = 1;
  std::optional<int> slack;
  bool tsv = false;
};

SuiteInput verify_input(const VerifyArgs& a) {
  SuiteInput in;
  auto add = [&](std::vector<NamedMatroid> v) {
    for (auto& nm : v) {
      if (nm.graph) in.graphs.push_back(*nm.graph);
      in.matroids.push_back(std::move(nm));
    }
  };
  if (a.exhaustive_n) {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::Exhaustive;
    spec.exhaustive_n = *a.exhaustive_n;
    add(generate(spec));
  }
  std::stringstream ss(a.family);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (name == "curated") {
      add(curated_medium());
      continue;
    }
    const auto kind = family_kind(name);
    if (!kind || *kind == FamilySpec::Kind::FromFile) throw UsageError("unknown family " + name);
    FamilySpec spec;
    spec.kind = *kind;
    const auto ks = parse_int_list(a.k_range), ns = parse_int_list(a.n_range);
    spec.k_min = ks.front();
    spec.k_max = ks.back();
    spec.n_min = ns.front();
    spec.n_max = ns.back();
    add(generate(spec));
  }
  if (!a.files.empty()) {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::FromFile;
    spec.paths = a.files;
    add(generate(spec));
  }
  if (a.suite == "nashwilliams" && in.graphs.empty()) in.graphs = labeled_simple_graphs(5);
  if (in.matroids.empty() && in.graphs.empty()) {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::Exhaustive;
    add(generate(spec));
  }
  return in;
}

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions opt;
  opt.t_values = parse_int_list(a.t);
  opt.primes = parse_int_list(a.p);
  opt.samples = a.samples;
  opt.seed = a.seed;
  opt.search = search_options(a.slack);
  const SuiteInput in = verify_input(a);
  const SuiteResult r = run_suite(a.suite, in, opt);
  std::cout << (a.tsv ? format_tsv(r) : format_report(r));
  return r.all_pass() ? 0 : kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid invariants, symbolic powers and their regularity"};
  app.require_subcommand(1);
  bool tsv = false;
  app.add_flag("--tsv", tsv, "Tab-separated output");

  std::string path;
  int t = 2, p = 2, t_max = 3, n = 4;
  std::optional<int> slack;
  std::string method = "formula", emit, out_dir;

  auto* analyze = app.add_subcommand("analyze", "Summarize a matroid or graph file");
  analyze->add_option("file", path)->required();
  analyze->add_option("--t-max", t_max, "Largest t in the regularity table")->check(CLI::PositiveNumber);
  analyze->add_flag("--tsv", tsv);

  auto* arbor = app.add_subcommand("arbor", "Check a(M) <= c(M*) on one matroid");
  arbor->add_option("file", path)->required();
  arbor->add_flag("--tsv", tsv);

  auto* reg = app.add_subcommand("reg", "Regularity of the t-th symbolic power");
  reg->add_option("file", path)->required();
  reg->add_option("--t", t)->check(CLI::PositiveNumber);
  reg->add_option("--method", method, "formula|takayama|betti|all");
  reg->add_option("--p", p, "Prime characteristic");
  reg->add_option("--slack", slack, "Search beyond c(t-1); default c");
  reg->add_flag("--tsv", tsv);

  auto* homology = app.add_subcommand("homology", "Reduced homology over GF(p)");
  homology->add_option("file", path)->required();
  homology->add_option("--p", p);

  auto* ideal = app.add_subcommand("ideal", "Minimal generators of the t-th symbolic power");
  ideal->add_option("file", path)->required();
  ideal->add_option("--t", t)->check(CLI::PositiveNumber);
  std::string ideal_emit = "generators";
  ideal->add_option("--emit", ideal_emit, "generators|complex");

  auto* enumerate = app.add_subcommand("enumerate", "All labeled matroids on n elements");
  enumerate->add_option("--n", n)->required();
  std::string enum_emit = "list";
  enumerate->add_option("--emit", enum_emit, "files|list|count");
  enumerate->add_option("--out", out_dir);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", va.suite)->required();
  verify->add_option("--exhaustive-n", va.exhaustive_n, "All matroids on up to this many elements");
  verify->add_option("--family", va.family, "uniform,graphic,cographic,directsum,exhaustive,curated");
  verify->add_option("--k-range", va.k_range);
  verify->add_option("--n-range", va.n_range);
  verify->add_option("--t", va.t, "e.g. 1..3");
  verify->add_option("--p", va.p, "e.g. 2,3");
  verify->add_option("--samples", va.samples);
  verify->add_option("--seed", va.seed);
  verify->add_option("--slack", va.slack);
  verify->add_option("files", va.files, "Matroid files");
  verify->add_flag("--tsv", va.tsv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, t_max, tsv);
    if (*arbor) return cmd_arbor(path, tsv);
    if (*reg) return cmd_reg(path, t, method, p, slack, tsv);
    if (*homology) return cmd_homology(path, p);
    if (*ideal) return cmd_ideal(path, t, ideal_emit);
    if (*enumerate) return cmd_enumerate(n, enum_emit, out_dir);
    if (*verify) return cmd_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::UnknownSuite:
      case ErrorKind::InvalidArgument:
      case ErrorKind::OutOfRange:
      case ErrorKind::EmptyFamily:
      case ErrorKind::UnequalCardinality:
      case ErrorKind::ExchangeViolation:
      case ErrorKind::NotPrime:
        return kExitUsage;
      default:
        return kExitFindings;
    }
  }
  return 0;
}
