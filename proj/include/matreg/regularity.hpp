#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matreg/ideal.hpp"
#include "matreg/matroid.hpp"

namespace matreg {

/// Limits for the exhaustive degree searches. `budget` caps distinct homology
/// evaluations (cache misses); exceeding it throws BudgetExceeded.
struct SearchOptions {
  std::optional<int> slack;  // default: c(M)
  long long budget = 2'000'000;
};

/// c(M)(t-1) + r(core(M)) + 1. Throws NoCircuit.
int reg_formula(const Matroid& m, int t);

/// dim_K H^i_m(S/I^(t))_a through the degree complex; zero when G_a is not a face.
int local_cohomology_dim(const Matroid& m, int t, const ExponentVector& a, int i, int p);

struct ATopResult {
  /// max |a| with H^d_m(S/I^(t))_a != 0 over the searched vectors
  int value = 0;
  ExponentVector witness;
  /// Maximum over a ∈ N^n alone.
  int nonnegative_value = 0;
  /// The maximum was only reached with some negative entries.
  bool negative_only = false;
  /// Largest |a| inspected (c(t-1) + slack).
  int search_bound = 0;
  long long vectors_visited = 0;
  long long homology_evaluations = 0;
};

/// Top local-cohomology degree of S/I^(t) by exhaustive search over the box
/// |a| <= c(t-1) + slack, plus -1 patterns on every nonempty face.
/// Requires m == core(m). Throws NotCore, NoCircuit, BudgetExceeded.
ATopResult a_top_search(const Matroid& m, int t, int p, const SearchOptions& options = {});

struct TakayamaResult {
  int value = 0;
  ATopResult search;
  /// Witness on the original ground set (coloop coordinates are 0).
  ExponentVector witness;
};

/// a_top(core) + r(core) + 1, reading the regularity off the top cohomology.
TakayamaResult reg_takayama(const Matroid& m, int t, int p, const SearchOptions& options = {});

struct CmGuardRecord {
  long long vectors_checked = 0;
  long long violations = 0;
  /// first offending vector and cohomological degree
  std::optional<std::pair<ExponentVector, int>> first_violation;
  bool pass() const { return violations == 0; }
};

/// Box-bounded evidence that H^i_m(S/I^(t))_a = 0 for all i < d on the search box.
CmGuardRecord check_cm_guard(const Matroid& m, int t, int p, const SearchOptions& options = {});

struct BettiEntry {
  int homological_degree = 0;
  ExponentVector degree;
  int value = 0;
};

/// Nonzero multigraded Betti numbers of the ideal, from upper Koszul
/// complexes over the box under the generators' lcm. Throws ZeroIdeal, BoxTooLarge.
std::vector<BettiEntry> betti_oracle(const MonomialIdeal& ideal, int p, long long box_cap = 300'000);

/// The upper Koszul complex K^a(I) on supp(a).
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a);

int reg_from_betti(const std::vector<BettiEntry>& table);
int reg_from_betti(const MonomialIdeal& ideal, int p);
bool has_linear_resolution(const std::vector<BettiEntry>& table, const MonomialIdeal& ideal);
bool has_linear_resolution(const MonomialIdeal& ideal, int p);

struct UpperRecord {
  int bound = 0;        // c(t-1)
  int window_top = 0;   // c(t-1) + slack
  /// largest |a| (a >= 0, inside the window) with a non-acyclic degree complex
  int max_nonacyclic = -1;
  ExponentVector witness;
  bool attained = false;  // max_nonacyclic == bound
  bool pass = false;      // nothing above bound
};

/// Scans a ∈ N^n with |a| <= c(t-1) + slack for non-acyclic Δ_a(I^(t)). Requires m == core(m).
UpperRecord check_upper(const Matroid& m, int t, int p, const SearchOptions& options = {});

struct UniformRecord {
  bool linear = false;
  bool uniform = false;  // core is U_{k,n'} with 1 <= k < n'
  /// r(core) >= 1, the setting in which the characterization is claimed
  bool in_hypothesis = false;
  bool consistent = false;
};

UniformRecord check_uniform_characterization(const Matroid& m, int t, int p, long long box_cap = 300'000);

struct RegularityReport {
  std::string id;
  int t = 1;
  int d = 0;  // r(M)
  int c = 0;
  int core_rank = 0;
  int formula_value = 0;
  std::optional<int> takayama_value;
  std::optional<int> betti_value;
  ExponentVector witness;
  bool agree = true;
};

struct ReportMethods {
  bool takayama = true;
  bool betti = false;
};

RegularityReport regularity_report(const Matroid& m, const std::string& id, int t, int p, ReportMethods methods,
                                   const SearchOptions& options = {});

}  // namespace matreg
