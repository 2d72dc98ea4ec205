#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "core/brace.hpp"
#include "core/isoclinism.hpp"

namespace sbrace {

// Factor set (alpha, mu) of K with values in the abelian group A (trivial action).
// Tables are |K| x |K|, row-major, entries are elements of A.
struct CocyclePair {
  SkewBrace k;
  GroupTable a;
  std::vector<Elem> alpha, mu;

  Elem alpha_at(Elem x, Elem y) const { return alpha[x * k.order() + y]; }
  Elem mu_at(Elem x, Elem y) const { return mu[x * k.order() + y]; }
};

enum class CocycleIdentity {
  NormalizationDot,
  NormalizationCirc,
  DotCocycle,
  CircCocycle,
  Compatibility,
  CompatibilityLambda,
};
const char* cocycle_identity_name(CocycleIdentity id);

// Throws NotAbelianCoefficients or IdentityFails (message names the identity and triple).
void validate_cocycle(const CocyclePair& p);

CocyclePair zero_cocycle(const SkewBrace& k, const GroupTable& a);
// (h(x)h(y)h(xy)^-1, h(x)h(y)h(x o y)^-1); h[0] must be the identity.
CocyclePair coboundary(const SkewBrace& k, const GroupTable& a, std::span<const Elem> h);
CocyclePair add_cocycles(const CocyclePair& p, const CocyclePair& q);
CocyclePair negate_cocycle(const CocyclePair& p);

std::optional<std::vector<Elem>> coboundary_witness(const CocyclePair& p);

namespace detail {
struct H2Data;
}

struct CohomologyPrime {
  std::int64_t p = 0;
  int z_exp = 0, b_exp = 0, h_exp = 0;  // |Z|, |B|, |H| as powers of p
};

struct CohomologyGroup {
  std::size_t k_order = 0;
  std::vector<std::int64_t> coefficient_factors;
  std::vector<std::int64_t> factors;  // prime powers, H = sum of Z/f
  std::vector<CohomologyPrime> primes;
  std::vector<CocyclePair> generators;  // generators[i] has class e_i
  std::shared_ptr<const detail::H2Data> data;

  std::uint64_t order() const;
};

CohomologyGroup h2_group(const SkewBrace& k, const GroupTable& a);
// Coordinates of [p] against the factors of h (p must use the same K and A).
std::vector<std::int64_t> cohomology_class(const CohomologyGroup& h, const CocyclePair& p);

struct AnnihilatorExtension {
  SkewBrace g;  // (a, k) -> k * |A| + a
  std::vector<Elem> inclusion, projection;
};
AnnihilatorExtension annihilator_extension(const CocyclePair& p);

enum class Transversal { Least, Greatest };

struct ExtensionData {
  CocyclePair cocycle;
  BraceQuotient quotient;        // K = G / A
  std::vector<Elem> members;     // A-element -> G-element
  std::vector<Elem> transversal; // K -> G
};
ExtensionData extension_data(const SkewBrace& g, const Subset& a, Transversal t = Transversal::Least);
CocyclePair extension_to_cocycle(const SkewBrace& g, const Subset& a, Transversal t = Transversal::Least);

// Characters of A are tuples c with chi_c(a) = sum_j c_j coords_j(a) m / d_j in Z/m.
struct TransgressionResult {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> dual_factors;
  CohomologyGroup h2;                             // H^2_b(K, Z/m)
  std::vector<std::vector<std::int64_t>> images;  // class of each basis character
  std::uint64_t image_order = 0, kernel_order = 0;
  std::vector<std::vector<std::int64_t>> kernel;
  std::size_t meet_order = 0;  // |A ∩ Gamma_2(G)|
  bool stable = false;         // same image order with modulus 2m
};

// modulus 0 picks exp(A) |K|. The image order is recomputed with 2m and compared.
TransgressionResult transgression(const SkewBrace& g, const Subset& a, std::int64_t modulus = 0);

struct TheoremAResult {
  bool equal = false;
  std::int64_t modulus = 0;
  std::uint64_t image_g = 0, image_h = 0;
  std::optional<Isoclinism> witness;
};

// xi: G/A -> H/B; searched for when absent.
TheoremAResult theorem_a_check(const SkewBrace& g, const Subset& a, const SkewBrace& h, const Subset& b,
                               const std::optional<Bijection>& xi = std::nullopt);

}  // namespace sbrace
