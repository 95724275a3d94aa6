#include "monent/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "monent/errors.hpp"

namespace monent {

// ---------------------------------------------------------------- order

MonomialOrder::MonomialOrder(std::vector<ArrowIndex> precedence)
    : precedence_(std::move(precedence)), rank_(precedence_.size()) {
  std::vector<bool> seen(precedence_.size(), false);
  for (std::size_t r = 0; r < precedence_.size(); ++r) {
    ArrowIndex a = precedence_[r];
    if (a >= precedence_.size() || seen[a]) {
      throw InputError("monomial order must list every arrow exactly once");
    }
    seen[a] = true;
    rank_[a] = static_cast<std::uint32_t>(r);
  }
}

MonomialOrder MonomialOrder::declaration(const Quiver& q) {
  std::vector<ArrowIndex> prec(q.arrow_count());
  std::iota(prec.begin(), prec.end(), ArrowIndex{0});
  return MonomialOrder(std::move(prec));
}

MonomialOrder MonomialOrder::from_labels(const Quiver& q,
                                         std::span<const std::string> labels) {
  std::vector<ArrowIndex> prec;
  for (const auto& s : labels) {
    auto a = q.find_arrow(s);
    if (!a) throw InputError("order names unknown arrow '" + s + "'");
    prec.push_back(*a);
  }
  if (prec.size() != q.arrow_count()) {
    throw InputError("order must name all " + std::to_string(q.arrow_count()) +
                     " arrows");
  }
  return MonomialOrder(std::move(prec));
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (auto c = rank_[a.arrows[i]] <=> rank_[b.arrows[i]]; c != 0) return c;
  }
  return a.base <=> b.base;
}

// ---------------------------------------------------------------- poly

Poly Poly::monomial(Word w, mpq_class c) {
  Poly f;
  f.add_term(w, c);
  return f;
}

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.length());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::size_t d = terms_.begin()->first.length();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.length() == d; });
}

void Poly::add_term(const Word& w, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

namespace {

Poly::Terms::const_iterator leading(const Poly::Terms& t, const MonomialOrder& order) {
  auto best = t.begin();
  for (auto it = t.begin(); it != t.end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return best;
}

}  // namespace

const Word& Poly::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero");
  return leading(terms_, order)->first;
}

const mpq_class& Poly::leading_coefficient(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
  return leading(terms_, order)->second;
}

// ---------------------------------------------------------------- products

Poly normal_form_free(const Poly& f, const Presentation& p) {
  Poly out;
  for (const auto& [w, c] : f.terms()) {
    if (is_path(w, p.quiver()) && p.is_legal(w)) out.add_term(w, c);
  }
  return out;
}

namespace {

std::optional<Word> normal_product(const Word& a, const Word& b, const Presentation& p) {
  const Quiver& q = p.quiver();
  if (word_target(q, a) != word_source(q, b)) return std::nullopt;
  if (b.empty()) return a;
  if (a.empty()) return b;
  Word w = concat(a, b);
  if (!p.is_legal(w)) return std::nullopt;
  return w;
}

}  // namespace

Poly star_multiply(const Poly& f, const Word& w, const Presentation& p) {
  Poly out;
  for (const auto& [t, c] : f.terms()) {
    if (auto prod = normal_product(t, w, p)) out.add_term(*prod, c);
  }
  return out;
}

Poly star_multiply(const Poly& a, const Poly& b, const Presentation& p) {
  Poly out;
  for (const auto& [u, c] : a.terms()) {
    for (const auto& [v, d] : b.terms()) {
      if (auto prod = normal_product(u, v, p)) out.add_term(*prod, c * d);
    }
  }
  return out;
}

// ---------------------------------------------------------------- text

namespace {

bool separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
         c == '*' || c == ',';
}

// One label of an expression monomial: a kept arrow, a deleted one (the
// term vanishes) or a trivial path e_v.
struct Letter {
  enum Kind { arrow, removed, trivial } kind;
  std::uint32_t index = 0;
};

std::optional<Letter> find_letter(std::string_view s, const Presentation& p) {
  const Quiver& q = p.quiver();
  if (auto a = q.find_arrow(s)) return Letter{Letter::arrow, *a};
  for (const Arrow& r : p.removed_arrows()) {
    if (r.label == s) return Letter{Letter::removed, 0};
  }
  if (s.size() > 2 && s.substr(0, 2) == "e_") {
    if (auto v = q.find_vertex(s.substr(2))) return Letter{Letter::trivial, *v};
  }
  return std::nullopt;
}

bool all_single_char(const Presentation& p) {
  if (!p.quiver().single_char_labels()) return false;
  return std::all_of(p.removed_arrows().begin(), p.removed_arrows().end(),
                     [](const Arrow& a) { return a.label.size() == 1; });
}

std::vector<Letter> resolve(std::string_view token, const Presentation& p) {
  if (auto l = find_letter(token, p)) return {*l};
  if (!all_single_char(p) || token.size() < 2) {
    throw InputError("unknown label '" + std::string(token) + "'");
  }
  std::vector<Letter> out;
  for (std::size_t i = 0; i < token.size(); ++i) {
    auto l = find_letter(token.substr(i, 1), p);
    if (!l) throw InputError("unknown label '" + std::string(token.substr(i, 1)) + "'");
    out.push_back(*l);
  }
  return out;
}

bool is_number(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '/';
  });
}

mpq_class parse_coefficient(std::string_view s) {
  auto slash = s.find('/');
  if (slash == 0 || slash + 1 == s.size() ||
      (slash != s.npos && s.find('/', slash + 1) != s.npos)) {
    throw InputError("malformed coefficient '" + std::string(s) + "'");
  }
  mpq_class c;
  try {
    c = mpq_class(std::string(s));
  } catch (const std::invalid_argument&) {
    throw InputError("malformed coefficient '" + std::string(s) + "'");
  }
  if (c.get_den() == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  c.canonicalize();
  return c;
}

// Adds one term (coefficient and label tokens) to f.
void add_parsed_term(Poly& f, mpq_class coef, const std::vector<std::string>& labels,
                     const Presentation& p) {
  const Quiver& q = p.quiver();
  std::vector<ArrowIndex> arrows;
  std::optional<VertexIndex> trivial;
  bool zero = false;
  std::size_t letters = 0;
  for (const auto& tok : labels) {
    for (const Letter& l : resolve(tok, p)) {
      ++letters;
      switch (l.kind) {
        case Letter::arrow: arrows.push_back(l.index); break;
        case Letter::removed: zero = true; break;
        case Letter::trivial: trivial = l.index; break;
      }
    }
  }
  if (letters == 0) throw InputError("constant terms are not supported; write e_<vertex>");
  if (trivial && letters > 1) throw InputError("a trivial path must stand alone");
  if (zero) return;
  Word w = trivial ? trivial_word(*trivial) : make_word(q, std::move(arrows));
  // Non-composable products and forbidden monomials are zero in A.
  if (!is_path(w, q) || !p.is_legal(w)) return;
  f.add_term(w, coef);
}

}  // namespace

Poly parse_poly(std::string_view text, const Presentation& p) {
  Poly f;
  std::size_t i = 0;
  bool any = false;
  bool expect_term = true;
  int sign = 1;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_space();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      expect_term = true;
      continue;
    }
    if (i >= text.size()) break;
    if (!expect_term) throw InputError("expected '+' or '-' in '" + std::string(text) + "'");
    mpq_class coef = sign;
    std::vector<std::string> labels;
    bool has_coef = false;
    while (true) {
      skip_space();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') {
        ++i;
        continue;
      }
      if (text[i] == ',') throw InputError("unexpected ',' inside an expression");
      std::size_t start = i;
      while (i < text.size() && !separator(text[i])) ++i;
      std::string_view tok = text.substr(start, i - start);
      // A coefficient may be written flush against its monomial: "2x".
      if (!is_number(tok) && std::isdigit(static_cast<unsigned char>(tok.front()))) {
        std::size_t k = 0;
        while (is_number(tok.substr(0, k + 1))) ++k;
        i = start + k;
        tok = tok.substr(0, k);
      }
      if (is_number(tok)) {
        if (has_coef || !labels.empty()) {
          throw InputError("misplaced coefficient '" + std::string(tok) + "'");
        }
        coef *= parse_coefficient(tok);
        has_coef = true;
      } else {
        labels.emplace_back(tok);
      }
    }
    add_parsed_term(f, coef, labels, p);
    any = true;
    sign = 1;
    expect_term = false;
  }
  if (!any) throw InputError("empty expression");
  if (expect_term) throw InputError("expression ends with a sign");
  return f;
}

std::vector<Poly> parse_poly_list(std::string_view text, const Presentation& p) {
  std::vector<Poly> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_poly(text.substr(start, comma == text.npos ? text.npos : comma - start), p));
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return out;
}

std::string poly_to_text(const Poly& f, const Presentation& p, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Word, mpq_class>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string out;
  for (const auto& [w, c] : terms) {
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + " ";
    out += word_to_text(w, p.quiver());
  }
  return out;
}

// ---------------------------------------------------------------- tails

std::vector<Word> annihilator_tails(const Word& w, const Presentation& p) {
  const Quiver& q = p.quiver();
  const FactorAutomaton& fa = p.automaton();
  std::vector<Word> out;
  auto state = fa.run(w.arrows);
  if (!state || p.is_free()) return out;
  std::vector<ArrowIndex> m;
  // Depth-first over extensions of length <= l; record the first dead hit.
  auto dfs = [&](auto&& self, FactorAutomaton::State s, VertexIndex v) -> void {
    for (ArrowIndex a : q.out_arrows(v)) {
      FactorAutomaton::State next = fa.step(s, a);
      m.push_back(a);
      if (fa.dead(next)) {
        Word tail = make_word(q, m);
        if (p.is_legal(tail)) out.push_back(std::move(tail));
      } else if (m.size() < p.l()) {
        self(self, next, q.arrow(a).target);
      }
      m.pop_back();
    }
  };
  dfs(dfs, *state, word_target(q, w));
  return out;
}

std::optional<Word> left_quotient(const Word& w, const Word& prefix, const Quiver& q) {
  if (prefix.empty()) {
    if (word_source(q, w) != prefix.base) return std::nullopt;
    return w;
  }
  if (prefix.length() > w.length() ||
      !std::equal(prefix.arrows.begin(), prefix.arrows.end(), w.arrows.begin())) {
    return std::nullopt;
  }
  if (prefix.length() == w.length()) return trivial_word(word_target(q, w));
  return make_word(q, {w.arrows.begin() + static_cast<std::ptrdiff_t>(prefix.length()),
                       w.arrows.end()});
}

// ---------------------------------------------------------------- completion

std::vector<Word> GroebnerBasis::leading_monomials() const {
  std::vector<Word> out;
  for (const auto& g : elements) out.push_back(g.leading_monomial(order));
  return out;
}

namespace {

struct Divisor {
  std::size_t index;
  Word cofactor;
};

// The applicable divisor with the largest leading monomial.
std::optional<Divisor> find_divisor(const Word& t, const std::vector<Word>& lms,
                                    const std::vector<bool>* skip,
                                    const MonomialOrder& order, const Quiver& q) {
  std::optional<Divisor> best;
  for (std::size_t j = 0; j < lms.size(); ++j) {
    if (skip && (*skip)[j]) continue;
    auto cof = left_quotient(t, lms[j], q);
    if (!cof) continue;
    if (!best || order.less(lms[best->index], lms[j])) best = Divisor{j, std::move(*cof)};
  }
  return best;
}

Poly reduce_by(Poly r, const std::vector<Poly>& basis, const std::vector<Word>& lms,
               const std::vector<bool>* skip, const MonomialOrder& order,
               const Presentation& p) {
  Poly result;
  while (!r.is_zero()) {
    const Word t = r.leading_monomial(order);
    const mpq_class c = r.leading_coefficient(order);
    if (auto d = find_divisor(t, lms, skip, order, p.quiver())) {
      const Poly& g = basis[d->index];
      r -= star_multiply(g, d->cofactor, p) * (c / g.leading_coefficient(order));
    } else {
      result.add_term(t, c);
      r.add_term(t, -c);
    }
  }
  return result;
}

void make_monic(Poly& f, const MonomialOrder& order) {
  const mpq_class lc = f.leading_coefficient(order);
  f *= 1 / lc;
}

bool left_divides(const Word& prefix, const Word& w, const Quiver& q) {
  return left_quotient(w, prefix, q).has_value();
}

class Completion {
 public:
  Completion(const MonomialOrder& order, const Presentation& p, std::size_t cap,
             bool homogeneous, std::size_t bound)
      : order_(order), p_(p), cap_(cap), homogeneous_(homogeneous), bound_(bound) {}

  void push(Poly f) {
    if (!f.is_zero()) queue_.push_back(std::move(f));
  }

  void run() {
    while (!queue_.empty()) {
      auto pick = queue_.begin();
      for (auto it = queue_.begin(); it != queue_.end(); ++it) {
        if (order_.less(it->leading_monomial(order_), pick->leading_monomial(order_))) {
          pick = it;
        }
      }
      Poly c = std::move(*pick);
      queue_.erase(pick);
      Poly r = reduce_by(std::move(c), basis_, lms_, nullptr, order_, p_);
      if (r.is_zero()) continue;
      make_monic(r, order_);
      adjoin(std::move(r));
    }
  }

  void interreduce() {
    std::vector<bool> skip(basis_.size(), false);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Word lm = lms_[i];
      Poly tail = basis_[i];
      tail.add_term(lm, -tail.leading_coefficient(order_));
      skip[i] = true;
      Poly reduced = reduce_by(std::move(tail), basis_, lms_, &skip, order_, p_);
      skip[i] = false;
      reduced.add_term(lm, 1);
      basis_[i] = std::move(reduced);
    }
  }

  // Pushes every nonzero remainder of g * m; true if there was none.
  bool closed() {
    bool clean = true;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (const Word& m : annihilator_tails(lms_[i], p_)) {
        Poly r = reduce_by(star_multiply(basis_[i], m, p_), basis_, lms_, nullptr, order_, p_);
        if (!r.is_zero()) {
          clean = false;
          push(std::move(r));
        }
      }
    }
    return clean;
  }

  std::vector<Poly> take() {
    std::vector<std::size_t> idx(basis_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order_.less(lms_[a], lms_[b]); });
    std::vector<Poly> out;
    for (std::size_t i : idx) out.push_back(std::move(basis_[i]));
    return out;
  }

 private:
  void adjoin(Poly r) {
    const Word lm = r.leading_monomial(order_);
    const std::size_t deg = r.degree();
    if (homogeneous_ && deg > bound_) {
      throw CertificateError("Groebner element of degree " + std::to_string(deg) +
                             " exceeds the bound " + std::to_string(bound_));
    }
    if (deg > cap_) {
      throw CertificateError("Groebner completion passed the degree guard " +
                             std::to_string(cap_));
    }
    // Elements whose LM is a right multiple of the new LM go back to the queue.
    for (std::size_t j = basis_.size(); j-- > 0;) {
      if (left_divides(lm, lms_[j], p_.quiver())) {
        queue_.push_back(std::move(basis_[j]));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(j));
        lms_.erase(lms_.begin() + static_cast<std::ptrdiff_t>(j));
      }
    }
    for (const Word& m : annihilator_tails(lm, p_)) push(star_multiply(r, m, p_));
    basis_.push_back(std::move(r));
    lms_.push_back(lm);
  }

  const MonomialOrder& order_;
  const Presentation& p_;
  std::size_t cap_;
  bool homogeneous_;
  std::size_t bound_;
  std::vector<Poly> basis_;
  std::vector<Word> lms_;
  std::vector<Poly> queue_;
};

}  // namespace

GroebnerBasis right_gb(const std::vector<Poly>& gens, const MonomialOrder& order,
                       const Presentation& p) {
  if (order.precedence().size() != p.quiver().arrow_count()) {
    throw InputError("monomial order does not match the presentation's arrows");
  }
  const Quiver& q = p.quiver();
  std::vector<Poly> split;
  for (const Poly& g : gens) {
    std::map<VertexIndex, Poly> parts;
    const Poly nf = normal_form_free(g, p);
    for (const auto& [w, c] : nf.terms()) {
      parts[word_target(q, w)].add_term(w, c);
    }
    for (auto& [v, part] : parts) split.push_back(std::move(part));
  }
  if (split.empty()) throw InputError("no nonzero generator");

  GroebnerBasis gb;
  gb.order = order;
  gb.l = p.l();
  gb.homogeneous_input = true;
  for (const Poly& g : split) {
    gb.input_degree = std::max(gb.input_degree, g.degree());
    gb.homogeneous_input = gb.homogeneous_input && g.is_homogeneous();
  }
  const std::size_t bound = gb.bound();
  Completion c(order, p, 4 * bound + 8, gb.homogeneous_input, bound);
  for (Poly& g : split) c.push(std::move(g));
  do {
    c.run();
    c.interreduce();
  } while (!c.closed());
  gb.elements = c.take();
  for (const Poly& g : gb.elements) gb.max_degree = std::max(gb.max_degree, g.degree());
  if (gb.max_degree > bound) {
    throw CertificateError("Groebner basis degree " + std::to_string(gb.max_degree) +
                           " exceeds d + l = " + std::to_string(bound));
  }
  gb.minimal = true;
  gb.reduced = true;
  return gb;
}

Poly reduce(const Poly& f, const GroebnerBasis& gb, const Presentation& p) {
  return reduce_by(normal_form_free(f, p), gb.elements, gb.leading_monomials(), nullptr,
                   gb.order, p);
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb, const Presentation& p) {
  return reduce(f, gb, p).is_zero();
}

// ---------------------------------------------------------------- syzygies

bool ModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Poly& f) { return f.is_zero(); });
}

ModuleElement ModuleElement::times(const Word& q, const Presentation& p) const {
  ModuleElement out;
  for (const Poly& f : components) out.components.push_back(star_multiply(f, q, p));
  return out;
}

SyzygySet syzygy_generators(const GroebnerBasis& gb, const Presentation& p) {
  if (!gb.minimal) throw std::invalid_argument("syzygy_generators needs a minimal basis");
  const auto lms = gb.leading_monomials();
  SyzygySet out;
  out.rank = gb.elements.size();
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    for (const Word& m : annihilator_tails(lms[i], p)) {
      Syzygy s;
      s.index = i;
      s.tail = m;
      s.degree = lms[i].length() + m.length();
      s.element.components.assign(gb.elements.size(), Poly{});
      s.element.components[i].add_term(m, 1);
      Poly f = star_multiply(gb.elements[i], m, p);
      while (!f.is_zero()) {
        const Word t = f.leading_monomial(gb.order);
        auto d = find_divisor(t, lms, nullptr, gb.order, p.quiver());
        if (!d) {
          throw CertificateError("syzygy elimination met a leading monomial outside the "
                                 "basis: " + word_to_text(t, p.quiver()));
        }
        const Poly& g = gb.elements[d->index];
        const mpq_class c = f.leading_coefficient(gb.order) / g.leading_coefficient(gb.order);
        f -= star_multiply(g, d->cofactor, p) * c;
        s.element.components[d->index].add_term(d->cofactor, -c);
      }
      out.generators.push_back(std::move(s));
    }
  }
  return out;
}

Poly apply_presentation_map(const ModuleElement& x, const GroebnerBasis& gb,
                            const Presentation& p) {
  if (x.components.size() != gb.elements.size()) {
    throw std::invalid_argument("module element rank does not match the basis");
  }
  Poly out;
  for (std::size_t j = 0; j < x.components.size(); ++j) {
    out += star_multiply(gb.elements[j], x.components[j], p);
  }
  return out;
}

}  // namespace monent
