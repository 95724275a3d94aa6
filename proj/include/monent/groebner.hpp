#pragma once

// Right ideals of a monomial algebra A = kQ/(F) over the rationals: normal
// forms, the star product a * b = N(ab), Groebner bases with the d + l
// degree certificate, and syzygies presenting the ideal as a right module.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monent/core.hpp"

namespace monent {

// Degree-lexicographic order: longer words are larger; equal lengths compare
// letter by letter through the arrow precedence. Trivial paths are the
// smallest words and compare by vertex.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  // `precedence` lists every arrow once, smallest first.
  explicit MonomialOrder(std::vector<ArrowIndex> precedence);
  static MonomialOrder declaration(const Quiver& q);
  // Labels smallest first; must name every arrow of q exactly once.
  static MonomialOrder from_labels(const Quiver& q, std::span<const std::string> labels);

  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  std::span<const ArrowIndex> precedence() const noexcept { return precedence_; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.precedence_ == b.precedence_;
  }

 private:
  std::vector<ArrowIndex> precedence_;
  std::vector<std::uint32_t> rank_;
};

// A linear combination of paths with nonzero rational coefficients.
class Poly {
 public:
  using Terms = std::map<Word, mpq_class>;

  Poly() = default;
  static Poly monomial(Word w, mpq_class c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t degree() const;  // longest monomial; 0 for the zero poly
  bool is_homogeneous() const;

  void add_term(const Word& w, const mpq_class& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpq_class& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }

  // Leading monomial / coefficient under `order`. Precondition: nonzero.
  const Word& leading_monomial(const MonomialOrder& order) const;
  const mpq_class& leading_coefficient(const MonomialOrder& order) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

// Drops every monomial that is not a path or contains a forbidden factor.
Poly normal_form_free(const Poly& f, const Presentation& p);

// N(ab): concatenates composable monomial pairs and keeps the normal ones.
Poly star_multiply(const Poly& a, const Poly& b, const Presentation& p);
// f * w for a single monomial w.
Poly star_multiply(const Poly& f, const Word& w, const Presentation& p);

// Rational-coefficient expression over arrow labels, e.g. "y x + x",
// "2/3 xy - y". Labels of deleted (forbidden) arrows make their term zero.
// Returns the normal form. Throws InputError.
Poly parse_poly(std::string_view text, const Presentation& p);
// Comma separated list of expressions.
std::vector<Poly> parse_poly_list(std::string_view text, const Presentation& p);
std::string poly_to_text(const Poly& f, const Presentation& p,
                         const MonomialOrder& order);

// Minimal normal words m starting at target(w) such that w m has a
// forbidden factor (necessarily across the junction and ending at the last
// letter of m). They generate the right annihilator of w; |m| <= l.
std::vector<Word> annihilator_tails(const Word& w, const Presentation& p);

// True iff `prefix` left-divides `w` (w = prefix q); q is returned.
std::optional<Word> left_quotient(const Word& w, const Word& prefix, const Quiver& q);

struct GroebnerBasis {
  std::vector<Poly> elements;  // monic, ascending by leading monomial
  MonomialOrder order;
  std::size_t input_degree = 0;  // d
  std::size_t l = 0;
  std::size_t max_degree = 0;
  bool homogeneous_input = false;
  bool minimal = false;
  bool reduced = false;

  std::size_t bound() const noexcept { return input_degree + l; }
  std::vector<Word> leading_monomials() const;
};

// Completion of a finitely generated right ideal. Generators are replaced by
// their normal forms and split into components f e_v by target vertex. The
// result is the reduced (hence minimal) basis; its degree certificate
// max_degree <= d + l is checked and a violation throws CertificateError.
// Throws InputError when no nonzero generator remains.
GroebnerBasis right_gb(const std::vector<Poly>& gens, const MonomialOrder& order,
                       const Presentation& p);

// Full reduction: no monomial of the result is left-divisible by a basis
// leading monomial. Divisor ties are broken toward the largest LM.
Poly reduce(const Poly& f, const GroebnerBasis& gb, const Presentation& p);

bool ideal_member(const Poly& f, const GroebnerBasis& gb, const Presentation& p);

// An element of the free right module P = sum_i g^_i e_{t(g_i)} A, one
// component per basis element.
struct ModuleElement {
  std::vector<Poly> components;

  bool is_zero() const;
  ModuleElement times(const Word& q, const Presentation& p) const;
};

// S(i, m) = g^_i m - sum_j g^_{i_j} m_j, obtained from the descending-LM
// elimination g_i * m = sum_j g_{i_j} * m_j.
struct Syzygy {
  std::size_t index = 0;
  Word tail;
  ModuleElement element;
  std::size_t degree = 0;
};

struct SyzygySet {
  std::size_t rank = 0;  // number of basis elements
  std::vector<Syzygy> generators;
};

// Precondition: gb minimal. Throws CertificateError if a leading monomial
// met during elimination is not divisible by the basis.
SyzygySet syzygy_generators(const GroebnerBasis& gb, const Presentation& p);

// pi: P -> J, g^_i -> g_i.
Poly apply_presentation_map(const ModuleElement& x, const GroebnerBasis& gb,
                            const Presentation& p);

}  // namespace monent
