#include "monent/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "monent/errors.hpp"

namespace monent {

namespace {

bool valid_label(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) {
    return false;
  }
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' ||
           c == '#' || c == ':' || c == '+' || c == '-' || c == '/' ||
           c == '*' || c == '(' || c == ')';
  });
}

bool contains_factor(std::span<const ArrowIndex> hay,
                     std::span<const ArrowIndex> needle) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
         hay.end();
}

}  // namespace

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string_view> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) {
      throw InputError("duplicate vertex '" + v + "'");
    }
  }
  std::set<std::string_view> labels;
  out_.assign(vertices_.size(), {});
  for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    if (!labels.insert(arr.label).second) {
      throw InputError("duplicate arrow label '" + arr.label + "'");
    }
    if (arr.source >= vertices_.size() || arr.target >= vertices_.size()) {
      throw InputError("arrow '" + arr.label + "' has an undeclared endpoint");
    }
    out_[arr.source].push_back(a);
  }
}

std::optional<ArrowIndex> Quiver::find_arrow(std::string_view label) const {
  for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].label == label) return a;
  }
  return std::nullopt;
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v] == id) return v;
  }
  return std::nullopt;
}

bool Quiver::single_char_labels() const noexcept {
  return std::all_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.label.size() == 1; });
}

// ---------------------------------------------------------------- Word

Word make_word(const Quiver& q, std::vector<ArrowIndex> arrows) {
  Word w;
  if (!arrows.empty()) w.base = q.arrow(arrows.front()).source;
  w.arrows = std::move(arrows);
  return w;
}

Word trivial_word(VertexIndex v) { return Word{{}, v}; }

VertexIndex word_source(const Quiver& q, const Word& w) {
  return w.empty() ? w.base : q.arrow(w.arrows.front()).source;
}

VertexIndex word_target(const Quiver& q, const Word& w) {
  return w.empty() ? w.base : q.arrow(w.arrows.back()).target;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
  if (a.empty()) w.base = b.base;
  return w;
}

bool is_path(const Word& w, const Quiver& q) {
  for (std::size_t i = 0; i + 1 < w.arrows.size(); ++i) {
    if (q.arrow(w.arrows[i]).target != q.arrow(w.arrows[i + 1]).source) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- automaton

FactorAutomaton::FactorAutomaton(std::size_t alphabet,
                                 std::span<const Word> patterns)
    : alphabet_(alphabet) {
  constexpr State kNone = ~State{0};
  std::vector<State> trie(alphabet_, kNone);
  dead_.push_back(0);
  depth_.push_back(0);
  for (const Word& w : patterns) {
    State s = root();
    for (ArrowIndex a : w.arrows) {
      State& next = trie[static_cast<std::size_t>(s) * alphabet_ + a];
      if (next == kNone) {
        next = static_cast<State>(dead_.size());
        dead_.push_back(0);
        depth_.push_back(depth_[s] + 1);
        trie.resize(trie.size() + alphabet_, kNone);
      }
      s = trie[static_cast<std::size_t>(s) * alphabet_ + a];
    }
    dead_[s] = 1;
  }

  // Breadth-first failure links, folded directly into the goto function.
  delta_.assign(trie.size(), root());
  std::vector<State> fail(dead_.size(), root());
  std::queue<State> bfs;
  for (std::size_t a = 0; a < alphabet_; ++a) {
    State child = trie[a];
    if (child != kNone) {
      delta_[a] = child;
      bfs.push(child);
    }
  }
  while (!bfs.empty()) {
    State s = bfs.front();
    bfs.pop();
    if (dead_[fail[s]]) dead_[s] = 1;
    for (std::size_t a = 0; a < alphabet_; ++a) {
      std::size_t idx = static_cast<std::size_t>(s) * alphabet_ + a;
      State child = trie[idx];
      State via_fail = delta_[static_cast<std::size_t>(fail[s]) * alphabet_ + a];
      if (child != kNone) {
        fail[child] = via_fail;
        delta_[idx] = child;
        bfs.push(child);
      } else {
        delta_[idx] = via_fail;
      }
    }
  }
  for (State s = 0; s < dead_.size(); ++s) {
    if (dead_[s]) {
      std::fill_n(delta_.begin() + static_cast<std::ptrdiff_t>(s * alphabet_),
                  alphabet_, s);
    }
  }
}

std::optional<FactorAutomaton::State> FactorAutomaton::run(
    std::span<const ArrowIndex> w, State from) const noexcept {
  State s = from;
  if (dead(s)) return std::nullopt;
  for (ArrowIndex a : w) {
    s = step(s, a);
    if (dead(s)) return std::nullopt;
  }
  return s;
}

// ---------------------------------------------------------------- Presentation

Presentation Presentation::create(const Quiver& quiver,
                                  std::vector<Word> forbidden) {
  for (const Word& w : forbidden) {
    if (w.empty()) throw InputError("forbidden words must be nonempty");
    for (ArrowIndex a : w.arrows) {
      if (a >= quiver.arrow_count()) throw InputError("arrow index out of range");
    }
    if (!is_path(w, quiver)) {
      throw InputError("forbidden word '" + word_to_text(w, quiver) +
                       "' is not a path");
    }
  }

  // Factor antichain: shortest first, drop anything containing a kept word.
  std::sort(forbidden.begin(), forbidden.end(),
            [](const Word& a, const Word& b) {
              if (a.length() != b.length()) return a.length() < b.length();
              return a < b;
            });
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                  forbidden.end());
  std::vector<Word> antichain;
  for (Word& w : forbidden) {
    bool redundant = std::any_of(
        antichain.begin(), antichain.end(),
        [&](const Word& kept) { return contains_factor(w.arrows, kept.arrows); });
    if (!redundant) antichain.push_back(std::move(w));
  }

  // Delete forbidden arrows and reindex the survivors.
  std::vector<bool> removed(quiver.arrow_count(), false);
  for (const Word& w : antichain) {
    if (w.length() == 1) removed[w.arrows.front()] = true;
  }
  Presentation p;
  std::vector<Arrow> kept_arrows;
  std::vector<ArrowIndex> remap(quiver.arrow_count(), 0);
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    if (removed[a]) {
      p.removed_.push_back(quiver.arrow(a));
    } else {
      remap[a] = static_cast<ArrowIndex>(kept_arrows.size());
      kept_arrows.push_back(quiver.arrow(a));
    }
  }
  p.quiver_ = Quiver(std::vector<std::string>(quiver.vertices().begin(),
                                              quiver.vertices().end()),
                     std::move(kept_arrows));
  for (const Word& w : antichain) {
    if (w.length() == 1) continue;
    std::vector<ArrowIndex> arrows;
    for (ArrowIndex a : w.arrows) arrows.push_back(remap[a]);
    p.forbidden_.push_back(make_word(p.quiver_, std::move(arrows)));
  }
  std::sort(p.forbidden_.begin(), p.forbidden_.end());
  for (const Word& w : p.forbidden_) p.l_ = std::max(p.l_, w.length() - 1);
  p.automaton_ = FactorAutomaton(p.quiver_.arrow_count(), p.forbidden_);
  return p;
}

bool Presentation::is_legal(const Word& w) const noexcept {
  return automaton_.run(w.arrows).has_value();
}

// ---------------------------------------------------------------- text format

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Entry {
  std::vector<Token> tokens;
  std::size_t column;
  std::size_t line = 0;
};

struct Section {
  std::size_t line = 0;
  std::vector<Entry> entries;
};

std::vector<Token> split_tokens(std::string_view s, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      out.push_back({std::string(s.substr(start, i - start)), offset + start + 1});
    }
  }
  return out;
}

// Comma separated entries; a blank body is an empty list.
std::vector<Entry> split_entries(std::string_view body, std::size_t offset,
                                 std::size_t line, bool comma_separated) {
  std::vector<Entry> out;
  if (!comma_separated) {
    out.push_back({split_tokens(body, offset), offset + 1});
    return out;
  }
  if (split_tokens(body, offset).empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view piece =
        body.substr(start, comma == std::string_view::npos ? body.npos
                                                           : comma - start);
    Entry e{split_tokens(piece, offset + start), offset + start + 1};
    if (e.tokens.empty()) throw ParseError(line, offset + start + 1, "empty list entry");
    out.push_back(std::move(e));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<ArrowIndex> word_arrows(const std::vector<Token>& tokens,
                                    const Quiver& q, std::size_t line) {
  std::vector<ArrowIndex> arrows;
  for (const Token& t : tokens) {
    if (auto a = q.find_arrow(t.text)) {
      arrows.push_back(*a);
      continue;
    }
    if (!q.single_char_labels() || t.text.size() < 2) {
      throw ParseError(line, t.column, "unknown arrow label '" + t.text + "'");
    }
    for (std::size_t i = 0; i < t.text.size(); ++i) {
      auto a = q.find_arrow(t.text.substr(i, 1));
      if (!a) {
        throw ParseError(line, t.column + i,
                         "unknown arrow label '" + t.text.substr(i, 1) + "'");
      }
      arrows.push_back(*a);
    }
  }
  return arrows;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Section vertices, arrows, forbidden;
  bool have_vertices = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == text.npos ? text.npos : eol - pos);
    pos = eol == text.npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (split_tokens(line, 0).empty()) continue;

    std::size_t colon = line.find(':');
    std::size_t first = line.find_first_not_of(" \t");
    if (colon == line.npos) {
      throw ParseError(line_no, first + 1, "expected '<key>:'");
    }
    std::string key(line.substr(first, colon - first));
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) {
      key.pop_back();
    }
    std::string_view body = line.substr(colon + 1);
    std::size_t offset = colon + 1;
    Section* target = nullptr;
    bool commas = true;
    if (key == "vertices") {
      target = &vertices;
      commas = false;
      have_vertices = true;
    } else if (key == "arrows") {
      target = &arrows;
    } else if (key == "forbidden") {
      target = &forbidden;
    } else {
      throw ParseError(line_no, first + 1, "unknown key '" + key + "'");
    }
    if (target->line == 0) target->line = line_no;
    for (Entry& e : split_entries(body, offset, line_no, commas)) {
      e.line = line_no;
      target->entries.push_back(std::move(e));
    }
  }
  auto line_of = [](const Entry& e) { return e.line; };

  std::vector<std::string> vertex_ids;
  if (have_vertices) {
    std::set<std::string> seen;
    for (const Entry& e : vertices.entries) {
      for (const Token& t : e.tokens) {
        if (!seen.insert(t.text).second) {
          throw ParseError(line_of(e), t.column, "duplicate vertex '" + t.text + "'");
        }
        if (t.text.find(',') != std::string::npos) {
          throw ParseError(line_of(e), t.column, "vertex ids may not contain ','");
        }
        vertex_ids.push_back(t.text);
      }
    }
    if (vertex_ids.empty()) {
      throw ParseError(vertices.line, 1, "vertex list is empty");
    }
  } else {
    vertex_ids.push_back("*");
  }
  auto find_vertex = [&](const Token& t, std::size_t line) -> VertexIndex {
    for (VertexIndex v = 0; v < vertex_ids.size(); ++v) {
      if (vertex_ids[v] == t.text) return v;
    }
    throw ParseError(line, t.column, "unknown vertex '" + t.text + "'");
  };

  std::vector<Arrow> arrow_list;
  std::set<std::string> labels;
  for (const Entry& e : arrows.entries) {
    std::size_t line = line_of(e);
    const Token& label = e.tokens.front();
    if (!valid_label(label.text)) {
      throw ParseError(line, label.column, "invalid arrow label '" + label.text + "'");
    }
    if (!labels.insert(label.text).second) {
      throw ParseError(line, label.column, "duplicate arrow label '" + label.text + "'");
    }
    Arrow arr{label.text, 0, 0};
    if (e.tokens.size() == 1) {
      if (vertex_ids.size() != 1) {
        throw ParseError(line, label.column,
                         "arrow '" + label.text +
                             "' needs source and target on a multi-vertex quiver");
      }
    } else if (e.tokens.size() == 3) {
      arr.source = find_vertex(e.tokens[1], line);
      arr.target = find_vertex(e.tokens[2], line);
    } else {
      throw ParseError(line, e.tokens[1].column,
                       "expected '<label> <source> <target>'");
    }
    arrow_list.push_back(std::move(arr));
  }
  Quiver quiver(std::move(vertex_ids), std::move(arrow_list));

  std::vector<Word> words;
  for (const Entry& e : forbidden.entries) {
    std::size_t line = line_of(e);
    Word w = make_word(quiver, word_arrows(e.tokens, quiver, line));
    if (!is_path(w, quiver)) {
      throw ParseError(line, e.tokens.front().column,
                       "forbidden word '" + word_to_text(w, quiver) +
                           "' is not a path");
    }
    words.push_back(std::move(w));
  }
  return Presentation::create(quiver, std::move(words));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string to_text(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::string out = "vertices:";
  for (const auto& v : q.vertices()) out += " " + v;
  out += "\narrows:";
  bool first = true;
  auto put_arrow = [&](const Arrow& a) {
    out += first ? " " : ", ";
    first = false;
    out += a.label + " " + q.vertex(a.source) + " " + q.vertex(a.target);
  };
  for (const Arrow& a : q.arrows()) put_arrow(a);
  for (const Arrow& a : p.removed_arrows()) put_arrow(a);
  out += "\nforbidden:";
  first = true;
  auto put_word = [&](const std::string& w) {
    out += first ? " " : ", ";
    first = false;
    out += w;
  };
  for (const Word& w : p.forbidden()) {
    std::string s;
    for (ArrowIndex a : w.arrows) {
      if (!s.empty()) s += ' ';
      s += q.arrow(a).label;
    }
    put_word(s);
  }
  for (const Arrow& a : p.removed_arrows()) put_word(a.label);
  out += "\n";
  return out;
}

Word parse_word(std::string_view text, const Quiver& q) {
  auto tokens = split_tokens(text, 0);
  if (tokens.empty()) throw InputError("empty word");
  Word w = make_word(q, word_arrows(tokens, q, 1));
  if (!is_path(w, q)) {
    throw InputError("'" + std::string(text) + "' is not a path");
  }
  return w;
}

std::string word_to_text(const Word& w, const Quiver& q) {
  if (w.empty()) return "e_" + q.vertex(w.base);
  const bool compact = q.single_char_labels();
  std::string s;
  for (ArrowIndex a : w.arrows) {
    if (!compact && !s.empty()) s += ' ';
    s += q.arrow(a).label;
  }
  return s;
}

std::string fingerprint(const Presentation& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_text(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace monent
