#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "topo/integer_matrix.hpp"

namespace topo {

template <class T>
struct SmithForm {
  Matrix<T> diagonal;                 // S = left * M * right
  std::optional<Matrix<T>> left;      // unimodular, rows x rows
  std::optional<Matrix<T>> right;     // unimodular, cols x cols
  std::size_t rank = 0;
  std::vector<T> invariants;          // d_1 | d_2 | ... | d_rank, all positive
};

namespace detail {

template <class T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

/// g = gcd(a, b) >= 0 with x*a + y*b = g.
template <class T>
T extended_gcd(T a, T b, T& x, T& y) {
  T x0(1), y0(0), x1(0), y1(1);
  while (b != T(0)) {
    T q = a / b;
    T r = a - q * b;
    a = b;
    b = r;
    T nx = x0 - q * x1;
    x0 = x1;
    x1 = nx;
    T ny = y0 - q * y1;
    y0 = y1;
    y1 = ny;
  }
  if (a < T(0)) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

}  // namespace detail

/// Smith normal form by elementary integer row/column operations, pivoting on
/// the entry of minimal absolute value. Transforms are tracked when requested.
template <class T>
SmithForm<T> smith_normal_form(Matrix<T> a, bool with_transforms = true) {
  using detail::abs_value;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::optional<Matrix<T>> u, v;
  if (with_transforms) {
    u = Matrix<T>::identity(rows);
    v = Matrix<T>::identity(cols);
  }
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const T& q) {
    a.add_row(dst, src, q);
    if (u) u->add_row(dst, src, q);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const T& q) {
    a.add_col(dst, src, q);
    if (v) v->add_col(dst, src, q);
  };

  std::size_t t = 0;
  const std::size_t n = std::min(rows, cols);
  while (t < n) {
    // Pivot: minimal nonzero |entry| in the trailing block; stop early on a unit.
    std::size_t pi = rows, pj = cols;
    T best(0);
    for (std::size_t i = t; i < rows && best != T(1); ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const T& x = a(i, j);
        if (x == T(0)) continue;
        T ax = abs_value(x);
        if (pi == rows || ax < best) {
          best = ax;
          pi = i;
          pj = j;
          if (best == T(1)) break;
        }
      }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == T(0)) continue;
        T q = a(i, t) / a(t, t);
        add_row(i, t, -q);
        if (a(i, t) != T(0)) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == T(0)) continue;
        T q = a(t, j) / a(t, t);
        add_col(j, t, -q);
        if (a(t, j) != T(0)) clean = false;
      }
      if (clean) break;
      // A remainder smaller than the pivot survived; promote it.
      std::size_t bi = t, bj = t;
      T small = abs_value(a(t, t));
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != T(0) && abs_value(a(i, t)) < small) {
          small = abs_value(a(i, t));
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(t, j) != T(0) && abs_value(a(t, j)) < small) {
          small = abs_value(a(t, j));
          bi = t;
          bj = j;
        }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
    if (a(t, t) < T(0)) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
    ++t;
  }
  const std::size_t rank = t;

  // Enforce d_i | d_j via unimodular 2x2 moves: [[a,0],[0,b]] -> [[g,0],[0,ab/g]].
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      T di = a(i, i), dj = a(j, j);
      if (dj % di == T(0)) continue;
      T x, y;
      T g = detail::extended_gcd(di, dj, x, y);
      add_row(i, j, T(1));
      // (col_i, col_j) <- (x col_i + y col_j, -(dj/g) col_i + (di/g) col_j)
      auto mix = [&](Matrix<T>& m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
          T ci = m(r, i), cj = m(r, j);
          m(r, i) = x * ci + y * cj;
          m(r, j) = (dj / g) * -ci + (di / g) * cj;
        }
      };
      mix(a);
      if (v) mix(*v);
      add_row(j, i, -(a(j, i) / g));
    }

  SmithForm<T> out;
  out.rank = rank;
  for (std::size_t i = 0; i < rank; ++i) out.invariants.push_back(a(i, i));
  out.diagonal = std::move(a);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

struct SmithInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> invariants;
};

/// Rank and invariant factors, tried in checked 64-bit arithmetic first and
/// recomputed with arbitrary precision on overflow.
inline SmithInvariants smith_invariants(const IntegerMatrix& m) {
  SmithInvariants out;
  try {
    auto s = smith_normal_form(m.cast<CheckedInt64>(), false);
    out.rank = s.rank;
    for (auto d : s.invariants) out.invariants.push_back(to_big(d));
  } catch (const OverflowError&) {
    auto s = smith_normal_form(m, false);
    out.rank = s.rank;
    out.invariants = std::move(s.invariants);
  }
  return out;
}

}  // namespace topo
