#pragma once

// Brute-force references shared by the unit tests. They enumerate every
// arrow sequence and test factors by naive search, so they share no code
// with the automaton or the transfer matrices.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "monent/core.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
  return std::string(MONENT_TEST_DATA) + "/" + name;
}

inline monent::Presentation fixture(const std::string& name) {
  return monent::load_presentation(data_path(name));
}

inline bool naive_path(const std::vector<monent::ArrowIndex>& w, const monent::Quiver& q) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (q.arrow(w[i]).target != q.arrow(w[i + 1]).source) return false;
  }
  return true;
}

inline bool naive_avoids(const std::vector<monent::ArrowIndex>& w,
                         const std::vector<std::vector<monent::ArrowIndex>>& forbidden) {
  for (const auto& f : forbidden) {
    if (f.size() > w.size()) continue;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < f.size() && match; ++j) match = w[i + j] == f[j];
      if (match) return false;
    }
  }
  return true;
}

// Every arrow sequence of length n, in lexicographic order.
inline std::vector<std::vector<monent::ArrowIndex>> all_sequences(std::size_t alphabet,
                                                                  std::size_t n) {
  std::vector<std::vector<monent::ArrowIndex>> out;
  if (alphabet == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<monent::ArrowIndex> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] + 1 == alphabet) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// Legal words of length n >= 1 over the quiver q avoiding `forbidden`.
inline std::vector<std::vector<monent::ArrowIndex>> brute_legal(
    const monent::Quiver& q, const std::vector<std::vector<monent::ArrowIndex>>& forbidden,
    std::size_t n) {
  std::vector<std::vector<monent::ArrowIndex>> out;
  for (auto& w : all_sequences(q.arrow_count(), n)) {
    if (naive_path(w, q) && naive_avoids(w, forbidden)) out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<std::vector<monent::ArrowIndex>> forbidden_of(const monent::Presentation& p) {
  std::vector<std::vector<monent::ArrowIndex>> out;
  for (const auto& w : p.forbidden()) out.push_back(w.arrows);
  return out;
}

inline mpz_class pow2(unsigned e) {
  mpz_class x;
  mpz_ui_pow_ui(x.get_mpz_t(), 2, e);
  return x;
}

}  // namespace testing
