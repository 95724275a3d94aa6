#include "monent/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "monent/errors.hpp"
#include "monent/language.hpp"

namespace monent::oracle {

namespace {

// Semi-echelon form: rows keyed by their largest coordinate under Less.
// Pivot coordinates of the stored rows are the leading coordinates of the
// span.
template <class Key, class Less>
class Echelon {
 public:
  using Row = std::map<Key, mpq_class, Less>;

  explicit Echelon(Less less) : less_(less), pivots_(less) {}

  Row empty_row() const { return Row(less_); }

  // True if the row was independent of the stored ones.
  bool insert(Row row) {
    while (!row.empty()) {
      auto lead = std::prev(row.end());
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        const mpq_class c = lead->second;
        for (auto& [k, v] : row) v /= c;
        Key key = lead->first;
        pivots_.emplace(std::move(key), std::move(row));
        return true;
      }
      const mpq_class c = lead->second;
      for (const auto& [k, v] : it->second) {
        auto [slot, inserted] = row.try_emplace(k, 0);
        slot->second -= c * v;
        if (slot->second == 0) row.erase(slot);
      }
    }
    return false;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::vector<Key> pivots() const {
    std::vector<Key> out;
    for (const auto& [k, row] : pivots_) out.push_back(k);
    return out;
  }

 private:
  Less less_;
  std::map<Key, Row, Less> pivots_;
};

struct WordLess {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

// f w by concatenation and a legality test.
std::map<Word, mpq_class> times_word(const Poly& f, const Word& w, const Presentation& p) {
  const Quiver& q = p.quiver();
  std::map<Word, mpq_class> out;
  for (const auto& [t, c] : f.terms()) {
    if (word_target(q, t) != word_source(q, w)) continue;
    Word prod = concat(t, w);
    if (!p.is_legal(prod)) continue;
    auto [slot, inserted] = out.try_emplace(prod, 0);
    slot->second += c;
    if (slot->second == 0) out.erase(slot);
  }
  return out;
}

// Normal paths of length n starting at v.
std::vector<Word> paths_from(const Presentation& p, VertexIndex v, std::size_t n) {
  if (n == 0) return {trivial_word(v)};
  std::vector<Word> out;
  for (Word& w : enumerate_legal(p, n)) {
    if (word_source(p.quiver(), w) == v) out.push_back(std::move(w));
  }
  return out;
}

void charge(std::size_t& rows, std::size_t budget) {
  if (++rows > budget) throw BudgetExceeded("oracle row budget exceeded");
}

}  // namespace

std::vector<Word> graded_oracle(const std::vector<Poly>& gens, std::size_t e,
                                const Presentation& p, const MonomialOrder& order,
                                std::size_t budget) {
  std::vector<Poly> normal;
  bool homogeneous = true;
  std::size_t d = 0;
  for (const Poly& g0 : gens) {
    Poly g = normal_form_free(g0, p);
    if (g.is_zero()) continue;
    homogeneous = homogeneous && g.is_homogeneous();
    d = std::max(d, g.degree());
    normal.push_back(std::move(g));
  }
  // Inhomogeneous ideals are filtered, not graded: span products up to
  // degree e + d and keep the leading monomials of degree exactly e.
  const std::size_t top = homogeneous ? e : e + d;
  WordLess less{&order};
  Echelon<Word, WordLess> ech(less);
  std::size_t rows = 0;
  for (const Poly& g : normal) {
    const std::size_t dg = g.degree();
    const std::size_t lo = homogeneous ? top : 0;
    for (std::size_t n = lo; n <= top; ++n) {
      if (n < dg) continue;
      for (const Word& w : enumerate_legal(p, n - dg)) {
        charge(rows, budget);
        auto row = ech.empty_row();
        for (auto& [t, c] : times_word(g, w, p)) row.emplace(t, c);
        ech.insert(std::move(row));
      }
    }
  }
  std::vector<Word> lms;
  for (Word& w : ech.pivots()) {
    if (w.length() == e) lms.push_back(std::move(w));
  }
  std::sort(lms.begin(), lms.end());
  return lms;
}

std::vector<Word> predicted_leading_monomials(const GroebnerBasis& gb, std::size_t e,
                                              const Presentation& p) {
  std::vector<Word> out;
  for (const Word& lm : gb.leading_monomials()) {
    if (lm.length() > e) continue;
    for (const Word& q : paths_from(p, word_target(p.quiver(), lm), e - lm.length())) {
      Word w = q.empty() ? lm : concat(lm, q);
      if (p.is_legal(w)) out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KernelCheck syzygy_kernel_check(const GroebnerBasis& gb, const SyzygySet& syz,
                                std::size_t e, const Presentation& p,
                                std::size_t budget) {
  const Quiver& q = p.quiver();
  if (!gb.homogeneous_input) throw InputError("kernel check needs a homogeneous basis");
  KernelCheck out;
  out.degree = e;
  std::size_t rows = 0;

  using Coord = std::pair<std::size_t, Word>;
  // Image of pi on the basis g^_i w of P_e.
  WordLess less{&gb.order};
  Echelon<Word, WordLess> image(less);
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Poly& g = gb.elements[i];
    const Word lm = g.leading_monomial(gb.order);
    if (lm.length() > e) continue;
    for (const Word& w : paths_from(p, word_target(q, lm), e - lm.length())) {
      charge(rows, budget);
      ++out.module_dim;
      auto row = image.empty_row();
      for (auto& [t, c] : times_word(g, w, p)) row.emplace(t, c);
      image.insert(std::move(row));
    }
  }
  out.image_dim = image.rank();
  out.kernel_dim = out.module_dim - out.image_dim;

  Echelon<Coord, std::less<Coord>> span{std::less<Coord>{}};
  for (const Syzygy& s : syz.generators) {
    if (s.degree > e) continue;
    for (const Word& w : paths_from(p, word_target(q, s.tail), e - s.degree)) {
      charge(rows, budget);
      auto row = span.empty_row();
      std::map<Word, mpq_class> total;
      for (std::size_t j = 0; j < s.element.components.size(); ++j) {
        for (auto& [t, c] : times_word(s.element.components[j], w, p)) {
          row.emplace(Coord{j, t}, c);
          for (auto& [u, d] : times_word(gb.elements[j], t, p)) {
            auto [slot, inserted] = total.try_emplace(u, 0);
            slot->second += c * d;
            if (slot->second == 0) total.erase(slot);
          }
        }
      }
      if (!total.empty()) out.in_kernel = false;
      span.insert(std::move(row));
    }
  }
  out.spanned_dim = span.rank();
  return out;
}

}  // namespace monent::oracle
