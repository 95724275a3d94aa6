#include "monent/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monent::kernels {

SparseMatrix SparseMatrix::from_triples(std::size_t rows, std::size_t cols,
                                        std::vector<Triple> triples) {
  std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.row_start.assign(rows + 1, 0);
  std::size_t last_row = rows, last_col = cols;
  for (const Triple& t : triples) {
    if (t.row >= rows || t.col >= cols) {
      throw std::out_of_range("sparse matrix entry out of range");
    }
    if (t.weight == 0) continue;
    if (t.row == last_row && t.col == last_col) {
      m.weight.back() += t.weight;
      continue;
    }
    m.col.push_back(static_cast<std::uint32_t>(t.col));
    m.weight.push_back(t.weight);
    ++m.row_start[t.row + 1];
    last_row = t.row;
    last_col = t.col;
  }
  for (std::size_t r = 1; r <= rows; ++r) m.row_start[r] += m.row_start[r - 1];
  return m;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Triple> t;
  t.reserve(nonzeros());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = row_start[r]; k < row_start[r + 1]; ++k) {
      t.push_back({col[k], r, weight[k]});
    }
  }
  return from_triples(cols, rows, std::move(t));
}

namespace {

inline void row_product(const SparseMatrix& m, std::size_t r,
                        std::span<const mpz_class> in, mpz_class& acc) {
  acc = 0;
  for (std::size_t k = m.row_start[r]; k < m.row_start[r + 1]; ++k) {
    const std::uint64_t w = m.weight[k];
    if (w == 1) {
      acc += in[m.col[k]];
    } else {
      mpz_addmul_ui(acc.get_mpz_t(), in[m.col[k]].get_mpz_t(),
                    static_cast<unsigned long>(w));
    }
  }
}

inline long double row_product(const SparseMatrix& m, std::size_t r,
                               long double shift,
                               std::span<const long double> in) {
  long double acc = shift * in[r];
  for (std::size_t k = m.row_start[r]; k < m.row_start[r + 1]; ++k) {
    acc += static_cast<long double>(m.weight[k]) * in[m.col[k]];
  }
  return acc;
}

void check_shapes(const SparseMatrix& m, std::size_t in, std::size_t out) {
  if (in != m.cols || out != m.rows) {
    throw std::invalid_argument("kernel operand size mismatch");
  }
}

}  // namespace

void multiply_serial(const SparseMatrix& m, std::span<const mpz_class> in,
                     std::span<mpz_class> out) {
  check_shapes(m, in.size(), out.size());
  for (std::size_t r = 0; r < m.rows; ++r) row_product(m, r, in, out[r]);
}

void multiply_parallel(const SparseMatrix& m, std::span<const mpz_class> in,
                       std::span<mpz_class> out) {
  check_shapes(m, in.size(), out.size());
  const auto rows = static_cast<std::ptrdiff_t>(m.rows);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    row_product(m, static_cast<std::size_t>(r), in, out[r]);
  }
}

void multiply(const SparseMatrix& m, std::span<const mpz_class> in,
              std::span<mpz_class> out, Exec exec) {
  if (exec == Exec::parallel && m.rows >= kParallelThreshold) {
    multiply_parallel(m, in, out);
  } else {
    multiply_serial(m, in, out);
  }
}

void multiply_shifted_serial(const SparseMatrix& m, long double shift,
                             std::span<const long double> in,
                             std::span<long double> out) {
  check_shapes(m, in.size(), out.size());
  for (std::size_t r = 0; r < m.rows; ++r) out[r] = row_product(m, r, shift, in);
}

void multiply_shifted_parallel(const SparseMatrix& m, long double shift,
                               std::span<const long double> in,
                               std::span<long double> out) {
  check_shapes(m, in.size(), out.size());
  const auto rows = static_cast<std::ptrdiff_t>(m.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    out[r] = row_product(m, static_cast<std::size_t>(r), shift, in);
  }
}

void multiply_shifted(const SparseMatrix& m, long double shift,
                      std::span<const long double> in,
                      std::span<long double> out, Exec exec) {
  if (exec == Exec::parallel && m.rows >= kParallelThreshold) {
    multiply_shifted_parallel(m, shift, in, out);
  } else {
    multiply_shifted_serial(m, shift, in, out);
  }
}

std::vector<mpz_class> iterate_totals(const SparseMatrix& m,
                                      std::vector<mpz_class> start,
                                      std::size_t steps, Exec exec) {
  std::vector<mpz_class> totals;
  totals.reserve(steps + 1);
  std::vector<mpz_class> next(m.rows);
  auto sum = [](const std::vector<mpz_class>& v) {
    mpz_class s = 0;
    for (const auto& x : v) s += x;
    return s;
  };
  totals.push_back(sum(start));
  for (std::size_t i = 0; i < steps; ++i) {
    multiply(m, start, next, exec);
    std::swap(start, next);
    totals.push_back(sum(start));
  }
  return totals;
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace monent::kernels
