#include "core/snf.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "core/error.hpp"

namespace sbrace {

namespace {

std::int64_t cmul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) fail(ErrorCode::Overflow, "integer overflow in Smith form");
  return r;
}

std::int64_t cadd(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) fail(ErrorCode::Overflow, "integer overflow in Smith form");
  return r;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {  // dst -= f*src
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j) m(dst, j) = cadd(m(dst, j), cmul(-f, m(src, j)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows; ++i) m(i, dst) = cadd(m(i, dst), cmul(-f, m(i, src)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(ErrorCode::InvalidArgument, "matrix shapes differ");
  IntMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) = cadd(r(i, j), cmul(x(i, k), y(k, j)));
    }
  return r;
}

std::vector<std::int64_t> SNFResult::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult r{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  IntMatrix& d = r.d;
  const std::size_t rows = m.rows, cols = m.cols;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // pivot: smallest nonzero absolute value in the trailing block
    std::size_t pi = rows, pj = cols;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (best == 0 || std::llabs(d(i, j)) < best)) {
          best = std::llabs(d(i, j));
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(d, t, pi);
    swap_rows(r.u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(r.v, t, pj);
    while (true) {
      bool again = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t f = d(i, t) / d(t, t);
        row_axpy(d, i, t, f);
        row_axpy(r.u, i, t, f);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(r.u, t, i);
          again = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t f = d(t, j) / d(t, t);
        col_axpy(d, j, t, f);
        col_axpy(r.v, j, t, f);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(r.v, t, j);
          again = true;
        }
      }
      if (again) continue;
      // the pivot must divide the whole trailing block
      for (std::size_t i = t + 1; i < rows && !again; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(d, t, i, -1);
            row_axpy(r.u, t, i, -1);
            again = true;
            break;
          }
      if (!again) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) r.u(t, j) = -r.u(t, j);
    }
  }
  return r;
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t q) {
  x %= q;
  return x < 0 ? x + q : x;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t q) {
  std::int64_t a = mod_reduce(x, q), b = q, s = 1, t = 0;
  while (b) {
    std::int64_t k = a / b;
    a -= k * b;
    std::swap(a, b);
    s -= k * t;
    std::swap(s, t);
  }
  if (a != 1) fail(ErrorCode::InvalidArgument, "not a unit");
  return mod_reduce(s, q);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

ModSNF smith_normal_form_mod(IntMatrix m, std::int64_t p, int k, bool want_u, bool want_v) {
  ModSNF r;
  r.p = p;
  r.k = k;
  r.q = 1;
  for (int i = 0; i < k; ++i) r.q *= p;
  const std::int64_t q = r.q;
  const std::size_t rows = m.rows, cols = m.cols;
  for (auto& x : m.a) x = mod_reduce(x, q);
  if (want_u) {
    r.u = IntMatrix::identity(rows);
    r.uinv = IntMatrix::identity(rows);
  }
  if (want_v) {
    r.v = IntMatrix::identity(cols);
    r.vinv = IntMatrix::identity(cols);
  }
  auto val = [&](std::int64_t x) {
    if (x == 0) return k;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  auto mm = [q](std::int64_t x, std::int64_t y) { return static_cast<std::int64_t>((static_cast<__int128>(x) * y) % q); };
  // dst -= f*src on rows of a (mod q)
  auto row_op = [&](IntMatrix& a, std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t j = 0; j < a.cols; ++j)
      if (a(src, j)) a(dst, j) = mod_reduce(a(dst, j) - mm(f, a(src, j)), q);
  };
  auto col_op = [&](IntMatrix& a, std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t i = 0; i < a.rows; ++i)
      if (a(i, src)) a(i, dst) = mod_reduce(a(i, dst) - mm(f, a(i, src)), q);
  };

  const std::size_t diag = std::min(rows, cols);
  r.valuations.assign(diag, k);
  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pi = rows, pj = cols;
    int best = k;
    for (std::size_t i = t; i < rows && best > 0; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        int v = val(m(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (best == k) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);
    if (want_u) {
      swap_rows(r.u, t, pi);
      swap_cols(r.uinv, t, pi);
    }
    if (want_v) {
      swap_cols(r.v, t, pj);
      swap_rows(r.vinv, t, pj);
    }
    std::int64_t pv = 1;
    for (int i = 0; i < best; ++i) pv *= p;
    std::int64_t unit = m(t, t) / pv;
    std::int64_t s = mod_inverse(unit, q);
    for (std::size_t j = 0; j < cols; ++j) m(t, j) = mm(m(t, j), s);
    if (want_u) {
      for (std::size_t j = 0; j < rows; ++j) r.u(t, j) = mm(r.u(t, j), s);
      for (std::size_t i = 0; i < rows; ++i) r.uinv(i, t) = mm(r.uinv(i, t), unit);
    }
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m(i, t) == 0) continue;
      std::int64_t f = m(i, t) / pv;
      row_op(m, i, t, f);
      if (want_u) {
        row_op(r.u, i, t, f);
        col_op(r.uinv, t, i, q - f);
      }
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m(t, j) == 0) continue;
      std::int64_t f = m(t, j) / pv;
      col_op(m, j, t, f);
      if (want_v) {
        col_op(r.v, j, t, f);
        row_op(r.vinv, t, j, q - f);
      }
    }
    r.valuations[t] = best;
  }
  return r;
}

}  // namespace sbrace
