#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "matreg/element_set.hpp"
#include "matreg/matroid.hpp"
#include "matreg/simplicial.hpp"

namespace matreg {

/// Integer vector a ∈ Z^n; doubles as a monomial exponent (entries >= 0) and as a multidegree.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}
  static ExponentVector zero(int n) { return ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int length() const { return static_cast<int>(entries_.size()); }
  /// 1-based access, matching element labels.
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const { return entries_; }
  /// |a|
  int total() const;
  /// G_a = {i : a_i < 0}
  ElementSet negative_support() const;
  ElementSet support() const;
  bool nonnegative() const { return negative_support().empty(); }
  /// componentwise <=
  bool divides(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  /// "1 8 3 2"
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Graded-lex: smaller total first, then lexicographically larger first.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

/// Monomial ideal in K[x_1..x_n] held by its minimal generators in graded-lex order.
/// No generators means the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Any generating set; reduced to the minimal one.
  MonomialIdeal(int n, std::vector<ExponentVector> generators);

  int ambient() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  /// x^a ∈ I for a >= 0
  bool contains(const ExponentVector& a) const;
  /// Componentwise maximum of the generators (exponent of their lcm).
  ExponentVector lcm_exponent() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<ExponentVector> generators_;
};

/// Minimal non-faces as indicator vectors. Throws VoidComplex.
MonomialIdeal stanley_reisner(const SimplicialComplex& c);

/// x^a ∈ I_Δ^(t) for the independence complex Δ of m: every basis B has Σ_{i∉B} a_i >= t.
bool symbolic_membership(const Matroid& m, const ExponentVector& a, int t);

/// Minimal generators of I_Δ^(t). Throws FreeMatroid (the ideal is zero).
MonomialIdeal symbolic_generators(const Matroid& m, int t);

/// Δ_a(I) = {F ⊆ [n] \ G_a : x^a ∉ I S_F}, evaluated from the generators. Throws ZeroIdeal.
SimplicialComplex degree_complex_general(const MonomialIdeal& ideal, const ExponentVector& a);

/// Facets of Δ_a(I_Δ^(t)) read off the bases: facets of lk_Δ(G_a) whose
/// complement sum (outside G_a) is at most t-1. Throws NegativeSupportNotFace.
SimplicialComplex degree_complex_matroid(const Matroid& m, int t, const ExponentVector& a);

/// Complex of √I: non-faces are the sets containing some generator support. Throws ZeroIdeal.
SimplicialComplex radical_complex(const MonomialIdeal& ideal);

}  // namespace matreg
