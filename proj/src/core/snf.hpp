#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sbrace {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMatrix identity(std::size_t n);

  std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const IntMatrix&) const = default;
};

// Checked product; throws Overflow.
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

struct SNFResult {
  IntMatrix d, u, v;  // u * m * v == d
  std::vector<std::int64_t> diagonal() const;  // nonzero diagonal, each dividing the next
};

// Smith normal form over the integers with unimodular transforms.
SNFResult smith_normal_form(const IntMatrix& m);

// Smith form over Z/p^k. The diagonal holds p^{v_i} with v_i nondecreasing;
// entries with v_i = k are zero. Transforms are kept only on request.
struct ModSNF {
  std::int64_t p = 0;
  int k = 0;
  std::int64_t q = 0;
  std::vector<int> valuations;  // length min(rows, cols)
  IntMatrix u, uinv, v, vinv;   // u * m * v == d (mod q)
};

ModSNF smith_normal_form_mod(IntMatrix m, std::int64_t p, int k, bool want_u, bool want_v);

std::int64_t mod_reduce(std::int64_t x, std::int64_t q);
std::int64_t mod_inverse(std::int64_t x, std::int64_t q);  // x a unit mod q
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace sbrace
