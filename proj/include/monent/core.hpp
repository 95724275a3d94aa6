#pragma once

// Presentations A = kQ/(F) of monomial quotients of path algebras: the
// quiver, words (paths), the forbidden-factor automaton and the text format.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monent {

using VertexIndex = std::uint32_t;
using ArrowIndex = std::uint32_t;

struct Arrow {
  std::string label;
  VertexIndex source = 0;
  VertexIndex target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  // Throws InputError on duplicate vertex ids, duplicate labels or arrows
  // with endpoints out of range.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::string& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
  std::span<const std::string> vertices() const noexcept { return vertices_; }
  std::span<const Arrow> arrows() const noexcept { return arrows_; }

  // Arrows leaving v, in increasing index order.
  std::span<const ArrowIndex> out_arrows(VertexIndex v) const {
    return out_.at(v);
  }

  std::optional<ArrowIndex> find_arrow(std::string_view label) const;
  std::optional<VertexIndex> find_vertex(std::string_view id) const;

  // True iff every label is a single character, which enables the
  // unseparated word syntax ("xyz" for "x y z").
  bool single_char_labels() const noexcept;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowIndex>> out_;
};

// A sequence of arrows. `base` is the source vertex; for the empty word it is
// the vertex of the trivial path e_base. Words are ordered lexicographically
// by arrow indices first, then by base (which only matters for empty words).
struct Word {
  std::vector<ArrowIndex> arrows;
  VertexIndex base = 0;

  std::size_t length() const noexcept { return arrows.size(); }
  bool empty() const noexcept { return arrows.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    return a.base <=> b.base;
  }
};

Word make_word(const Quiver& q, std::vector<ArrowIndex> arrows);
Word trivial_word(VertexIndex v);
VertexIndex word_source(const Quiver& q, const Word& w);
VertexIndex word_target(const Quiver& q, const Word& w);
// Concatenation without composability checks.
Word concat(const Word& a, const Word& b);

bool is_path(const Word& w, const Quiver& q);

// Aho-Corasick automaton over the arrow alphabet recognising occurrences of
// forbidden factors. Dead (terminal) states are sinks.
class FactorAutomaton {
 public:
  using State = std::uint32_t;

  FactorAutomaton() = default;
  FactorAutomaton(std::size_t alphabet, std::span<const Word> patterns);

  static constexpr State root() noexcept { return 0; }
  State step(State s, ArrowIndex a) const noexcept {
    return delta_[static_cast<std::size_t>(s) * alphabet_ + a];
  }
  bool dead(State s) const noexcept { return dead_[s] != 0; }
  std::size_t state_count() const noexcept { return dead_.size(); }
  // Depth of the trie node: the length of the longest suffix read so far
  // that is a proper prefix of some pattern.
  std::size_t depth(State s) const noexcept { return depth_[s]; }

  // State after reading w from `from`, or nullopt if a pattern occurs.
  std::optional<State> run(std::span<const ArrowIndex> w,
                           State from = root()) const noexcept;

 private:
  std::size_t alphabet_ = 0;
  std::vector<State> delta_;
  std::vector<std::uint8_t> dead_;
  std::vector<std::uint32_t> depth_;
};

// A = kQ/(F), normalized:
//  * F is a factor antichain, sorted, deduplicated;
//  * forbidden arrows (length-1 words of F) are deleted from the quiver and
//    remembered in removed_arrows();
//  * l + 1 is the maximum forbidden length; l = 0 and is_free() when no
//    forbidden word of length >= 2 remains.
class Presentation {
 public:
  Presentation() = default;
  // `forbidden` words are paths over `quiver` (validated).
  static Presentation create(const Quiver& quiver, std::vector<Word> forbidden);

  const Quiver& quiver() const noexcept { return quiver_; }
  std::span<const Word> forbidden() const noexcept { return forbidden_; }
  std::span<const Arrow> removed_arrows() const noexcept { return removed_; }
  std::size_t l() const noexcept { return l_; }
  bool is_free() const noexcept { return forbidden_.empty(); }
  const FactorAutomaton& automaton() const noexcept { return automaton_; }

  bool is_legal(const Word& w) const noexcept;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.quiver_ == b.quiver_ && a.forbidden_ == b.forbidden_ &&
           a.removed_ == b.removed_;
  }

 private:
  Quiver quiver_;
  std::vector<Word> forbidden_;
  std::vector<Arrow> removed_;
  std::size_t l_ = 0;
  FactorAutomaton automaton_;
};

inline bool is_legal(const Word& w, const Presentation& p) {
  return p.is_legal(w);
}

// Text format, line oriented, '#' starts a comment:
//   vertices: <id> <id> ...            (optional, default one vertex "*")
//   arrows: <label> <src> <dst>, ...   (or "arrows: x, y, z" on one vertex)
//   forbidden: <word>, <word>, ...
// Throws ParseError with 1-based line/column.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

// Canonical text; parse_presentation(to_text(p)) == p.
std::string to_text(const Presentation& p);

// Parses a word: space-separated labels, or unseparated single-character
// labels when the quiver allows it. Throws InputError.
Word parse_word(std::string_view text, const Quiver& q);

// Labels concatenated (single-character labels) or space separated. The
// empty word prints as "e_<vertex>".
std::string word_to_text(const Word& w, const Quiver& q);

// FNV-1a 64 of to_text(p), 16 hex digits.
std::string fingerprint(const Presentation& p);

}  // namespace monent
