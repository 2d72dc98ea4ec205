#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/brace.hpp"
#include "core/series.hpp"

namespace sbrace {

inline constexpr std::size_t kMaxEnumerationOrder = 16;

struct EnumeratedBrace {
  SkewBrace brace;
  std::uint64_t automorphisms = 0;  // brace automorphism group order
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;      // complete lambda maps reached
  std::uint64_t raw_total = 0;   // sum of orbit sizes = all regular subgroups
};

// Skew braces with additive group g, one per isomorphism class, ordered by
// a canonical encoding. lambda: G -> Aut(G) is built by closing partial
// regular subgroups of Hol(G); Aut(G)-symmetry is broken by taking orbit
// representatives under the stabiliser of the partial assignment.
std::vector<EnumeratedBrace> enumerate_over_group(const GroupTable& g, EnumerationStats* stats = nullptr);

// Every lambda map of a skew brace on g (no symmetry reduction), each as an
// n x n table. For cross-checks on small groups.
std::vector<std::vector<Elem>> all_lambda_maps(const GroupTable& g);

// All skew braces of the order; order 16 needs allow_long.
std::vector<SkewBrace> enumerate_all(std::size_t order, bool allow_long);

struct CensusRow {
  std::size_t index = 0;
  std::string additive, multiplicative;
  bool symmetric = false;
  bool in_I2 = false;
  std::optional<std::pair<Elem, Elem>> i2_witness;
  std::size_t ann_size = 0, gamma2_size = 0;
  std::uint64_t automorphisms = 0;
  NilpotencyReport nilpotency;
  SkewBrace brace;
};

struct CensusSummary {
  std::size_t order = 0, total = 0, symmetric = 0, non_symmetric = 0, in_I2 = 0, not_in_I2 = 0;
};

struct CensusOptions {
  bool allow_long = false;
  unsigned threads = 1;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  CensusSummary summary;
};

CensusResult census(std::size_t order, const CensusOptions& opts);

}  // namespace sbrace
