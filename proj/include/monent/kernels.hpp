#pragma once

// Row-parallel transfer kernels. Every kernel has a serial reference
// implementation and an OpenMP one; both produce bit-identical output (each
// output row is accumulated by one thread in a fixed order).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace monent::kernels {

enum class Exec { serial, parallel };

// Sparse non-negative integer matrix in compressed-row form. Row r of the
// product `out = M * in` is sum over k in [row_start[r], row_start[r+1]) of
// weight[k] * in[col[k]].
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_start{0};
  std::vector<std::uint32_t> col;
  std::vector<std::uint64_t> weight;

  std::size_t nonzeros() const noexcept { return col.size(); }

  // Entries given as (row, col, weight) triples in any order; duplicates add.
  struct Triple {
    std::size_t row;
    std::size_t col;
    std::uint64_t weight;
  };
  static SparseMatrix from_triples(std::size_t rows, std::size_t cols,
                                   std::vector<Triple> triples);
  SparseMatrix transposed() const;
};

// Rows below this count run serially even under Exec::parallel.
inline constexpr std::size_t kParallelThreshold = 64;

void multiply_serial(const SparseMatrix& m, std::span<const mpz_class> in,
                     std::span<mpz_class> out);
void multiply_parallel(const SparseMatrix& m, std::span<const mpz_class> in,
                       std::span<mpz_class> out);
void multiply(const SparseMatrix& m, std::span<const mpz_class> in,
              std::span<mpz_class> out, Exec exec = Exec::parallel);

// Floating-point variant used by power iteration: out = (M + shift*I) in.
void multiply_shifted_serial(const SparseMatrix& m, long double shift,
                             std::span<const long double> in,
                             std::span<long double> out);
void multiply_shifted_parallel(const SparseMatrix& m, long double shift,
                               std::span<const long double> in,
                               std::span<long double> out);
void multiply_shifted(const SparseMatrix& m, long double shift,
                      std::span<const long double> in,
                      std::span<long double> out, Exec exec = Exec::parallel);

// Iterates v_{k+1} = M v_k from `start` and returns the sums of all entries
// of v_0 .. v_steps.
std::vector<mpz_class> iterate_totals(const SparseMatrix& m,
                                      std::vector<mpz_class> start,
                                      std::size_t steps,
                                      Exec exec = Exec::parallel);

int max_threads() noexcept;

}  // namespace monent::kernels
