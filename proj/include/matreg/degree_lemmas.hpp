#pragma once

#include <optional>

#include "matreg/ideal.hpp"
#include "matreg/matroid.hpp"
#include "matreg/simplicial.hpp"

namespace matreg {

/// Both sides of a degree-complex identity, as complexes on the original ground set.
struct IdentityCheck {
  SimplicialComplex lhs;
  SimplicialComplex rhs;
  bool holds() const { return lhs == rhs; }
};

/// lk_Γ(v) against Δ_b(I_{lk_Δ(v)}^(t-r)), where Γ = Δ_a(I_Δ^(t)), P is the
/// vertex set of lk_Δ(v), b = a|_P and r sums a over [n] \ (P ∪ {v}).
/// Nothing when the hypotheses fail (a has a negative entry, v is not a
/// vertex of Γ, or P is empty).
std::optional<IdentityCheck> check_link_identity(const Matroid& m, int t, const ExponentVector& a, int v);

/// Γ_{-u} against Δ_b(I_{Δ_{-u}}^(t-a_u)) with b = a without coordinate u.
/// The identity is only claimed when a_u is a minimum of a; the check runs
/// for any u so the counterexample can be reproduced. Nothing when Γ is void,
/// a has a negative entry, n < 2 or m is free.
std::optional<IdentityCheck> check_restrict_identity(const Matroid& m, int t, const ExponentVector& a, int u);

/// Position of the first minimal coordinate.
int argmin_coordinate(const ExponentVector& a);

/// c(M') <= c(M) for the link matroid M' of every vertex x. Returns the first
/// x where it fails.
std::optional<int> find_circ_link_violation(const Matroid& m);

}  // namespace matreg
