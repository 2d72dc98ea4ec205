#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/brace.hpp"

namespace sbrace {

// <I * J> as a subgroup of (A, .).
Subset star_ideal(const SkewBrace& a, const Subset& i, const Subset& j);
// [I, J] in (A, .).
Subset dot_commutator(const SkewBrace& a, const Subset& i, const Subset& j);
// {a : a*b = b*a = [a,b] = 1 for all b}
Subset annihilator(const SkewBrace& a);

// Two names the literature overloads: StarSoluble is A_n = A_{n-1} * A_{n-1};
// the auxiliary term <lambda_a(v) v^-1 : v in L_{n-1}> of the L series is
// kept internal to LSeries.
enum class SeriesKind {
  AnnUpper,       // Ann_0 = 1, Ann_1, ...
  GammaLower,     // Gamma_1 = A, Gamma_n = <A*G, G*A, [A,G]>
  GammaBarLower,  // <A*G, [A,G]>
  LeftAn,         // A^1 = A, A^n = A * A^{n-1}
  RightAn,        // A^(n) = A^(n-1) * A
  StrongAn,       // A^[n] = < A^[i] * A^[n-i] >
  StarSoluble,    // A_1 = A, A_n = A_{n-1} * A_{n-1}
  LSeries,        // L_1 = A, L_n = <K_n, A*L_{n-1}, [A, L_{n-1}]>
  KSeries,        // K_1 = A, K_n = gamma_{n-1}(A, o) * A
};

const char* series_name(SeriesKind kind);
std::optional<SeriesKind> parse_series_kind(const std::string& name);

// Terms until stabilisation. Index 0 is Ann_0 for AnnUpper and the first
// term (n = 1) for the descending series.
std::vector<Subset> compute_series(const SkewBrace& a, SeriesKind kind);
// Term with the series' own indexing (Ann_n, Gamma_n, ...); stable tail repeats.
Subset series_term(const SkewBrace& a, SeriesKind kind, std::size_t n);

// Ann_n from the recursion through quotients, for cross-checking.
std::vector<Subset> ann_series_via_quotients(const SkewBrace& a);

// Classes: least c with Ann_c = A, and least c with the (c+1)-st descending
// term trivial. Absent when the series stabilises above 1.
struct NilpotencyReport {
  std::optional<std::size_t> central;
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
  std::optional<std::size_t> strong;
  std::optional<std::size_t> star_soluble;
};

NilpotencyReport nilpotency(const SkewBrace& a);

}  // namespace sbrace
