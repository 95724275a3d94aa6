#pragma once

// Brute-force linear algebra used to validate Groebner bases and syzygies.
// Nothing here calls the completion or reduction code: products are formed
// by direct concatenation and spans are row-reduced over the rationals.

#include <cstddef>
#include <vector>

#include "monent/core.hpp"
#include "monent/groebner.hpp"

namespace monent::oracle {

inline constexpr std::size_t kDefaultRowBudget = std::size_t{1} << 20;

// Leading monomials of J_e, J the right ideal generated by `gens`, sorted
// by the word order. For inhomogeneous generators of degree <= d the span
// of all products of degree <= e + d stands in for J, and its leading
// monomials of degree e are returned. Throws BudgetExceeded when more than
// `budget` rows are needed.
std::vector<Word> graded_oracle(const std::vector<Poly>& gens, std::size_t e,
                                const Presentation& p, const MonomialOrder& order,
                                std::size_t budget = kDefaultRowBudget);

// Degree-e words LM(g) q with q and LM(g) q normal, sorted.
std::vector<Word> predicted_leading_monomials(const GroebnerBasis& gb, std::size_t e,
                                              const Presentation& p);

struct KernelCheck {
  std::size_t degree = 0;
  std::size_t module_dim = 0;  // dim P_e
  std::size_t image_dim = 0;   // dim J_e reached by pi
  std::size_t kernel_dim = 0;
  std::size_t spanned_dim = 0;  // rank of the degree-e right multiples of S(i, m)
  bool in_kernel = true;        // every multiple maps to zero

  bool ok() const noexcept { return in_kernel && spanned_dim == kernel_dim; }
};

// Degree-e comparison of ker(P -> J) with the span of the syzygies' right
// multiples. Homogeneous bases only.
KernelCheck syzygy_kernel_check(const GroebnerBasis& gb, const SyzygySet& syz,
                                std::size_t e, const Presentation& p,
                                std::size_t budget = kDefaultRowBudget);

}  // namespace monent::oracle
