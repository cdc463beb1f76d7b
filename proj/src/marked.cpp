#include "mglab/marked.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace mglab {

namespace {

// direction d over the marking: generator d/2, inverted when d is odd
Elem step(const MarkedGroup& mg, const Elem& v, std::size_t d) {
  const Elem& s = mg.marking[d / 2];
  return mg.group.mul(v, d % 2 == 0 ? s : mg.group.inv(s));
}

}  // namespace

CayleyBall ball(const MarkedGroup& mg, int radius, const Caps& caps) {
  if (radius < 0) throw InvalidSpecError("radius must be non-negative");
  CayleyBall b;
  b.radius = radius;

  ElemMap<std::uint32_t> index(mg.group);
  b.vertices.push_back(mg.group.identity());
  b.norms.push_back(0);
  index.emplace(b.vertices[0], 0);

  // BFS in vertex order, directions in ascending order: the discovery order
  // is exactly (norm, lex-least shortest word)
  for (std::size_t at = 0; at < b.vertices.size(); ++at) {
    if (b.norms[at] == radius) break;
    for (std::size_t d = 0; d < 2 * mg.n(); ++d) {
      Elem w = step(mg, b.vertices[at], d);
      if (index.contains(w)) continue;
      if (b.vertices.size() >= caps.max_vertices)
        throw ResourceLimitError("ball exceeds the vertex cap");
      index.emplace(w, static_cast<std::uint32_t>(b.vertices.size()));
      b.vertices.push_back(std::move(w));
      b.norms.push_back(b.norms[at] + 1);
    }
  }

  for (std::size_t at = 0; at < b.vertices.size(); ++at) {
    for (std::size_t d = 0; d < 2 * mg.n(); ++d) {
      Elem w = step(mg, b.vertices[at], d);
      if (const std::uint32_t* to = index.find(w))
        b.edges.push_back({static_cast<std::uint32_t>(at),
                           static_cast<std::uint32_t>(d), *to});
    }
  }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

std::vector<std::uint8_t> ball_encoding(const CayleyBall& b) {
  std::vector<std::uint8_t> out;
  auto put32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  auto put64 = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  put32(static_cast<std::uint32_t>(b.radius));
  put64(b.vertices.size());
  put64(b.edges.size());
  for (const auto& e : b.edges) {
    put32(e[0]);
    put32(e[1]);
    put32(e[2]);
  }
  return out;
}

std::string ball_digest(const CayleyBall& b) {
  auto bytes = ball_encoding(b);
  std::uint64_t h = fnv1a(bytes.data(), bytes.size());
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void write_adjacency(std::ostream& os, const CayleyBall& b) {
  for (const auto& e : b.edges) {
    os << e[0] << ' ' << (e[1] / 2);
    if (e[1] % 2 == 1) os << '\'';
    os << ' ' << e[2] << '\n';
  }
}

TrivialWordSet::TrivialWordSet(int radius, std::vector<FreeWord> words)
    : radius_(radius), words_(std::move(words)) {
  std::sort(words_.begin(), words_.end(), FreeWord::canonical_less);
}

bool TrivialWordSet::contains(const FreeWord& w) const {
  return std::binary_search(words_.begin(), words_.end(), w, FreeWord::canonical_less);
}

std::vector<FreeWord> TrivialWordSet::restricted(int r) const {
  std::vector<FreeWord> out;
  for (const FreeWord& w : words_) {
    if (static_cast<int>(w.size()) > r) break;
    out.push_back(w);
  }
  return out;
}

BigInt reduced_word_count(std::size_t n, int radius) {
  // 1 + sum_{k=1..r} 2n (2n-1)^{k-1}
  BigInt total = 1;
  BigInt shell = 2 * static_cast<std::int64_t>(n);
  for (int k = 1; k <= radius; ++k) {
    total += shell;
    shell *= 2 * static_cast<std::int64_t>(n) - 1;
  }
  return total;
}

TrivialWordSet trivial_words(const MarkedGroup& mg, int radius, const Caps& caps) {
  if (radius < 0) throw InvalidSpecError("radius must be non-negative");
  if (reduced_word_count(mg.n(), radius) > caps.max_words)
    throw ResourceLimitError("word enumeration exceeds the word cap");

  std::vector<FreeWord> found;
  std::vector<std::pair<FreeWord, Elem>> stack;
  stack.emplace_back(FreeWord{}, mg.group.identity());
  while (!stack.empty()) {
    auto [w, v] = std::move(stack.back());
    stack.pop_back();
    // every stack entry is a distinct reduced word; the empty word is the
    // initial entry and always qualifies
    if (mg.group.is_identity(v)) found.push_back(w);
    if (static_cast<int>(w.size()) == radius) continue;
    for (std::size_t d = 0; d < 2 * mg.n(); ++d) {
      Letter l{static_cast<int>(d / 2), d % 2 == 0 ? 1 : -1};
      if (!w.letters().empty()) {
        const Letter& last = w.letters().back();
        if (last.gen == l.gen && last.sign == -l.sign) continue;  // stay reduced
      }
      FreeWord w2 = w;
      w2.push(l);
      Elem v2 = mg.group.mul(v, l.sign > 0 ? mg.marking[l.gen]
                                           : mg.group.inv(mg.marking[l.gen]));
      stack.emplace_back(std::move(w2), std::move(v2));
    }
  }
  return TrivialWordSet(radius, std::move(found));
}

Valuation valuation(const MarkedGroup& a, const MarkedGroup& b, int cap,
                    const Caps& caps) {
  if (a.n() != b.n())
    throw MarkingLengthError("markings have different lengths (" +
                             std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
  if (cap < 1) throw InvalidSpecError("valuation cap must be positive");

  TrivialWordSet ta = trivial_words(a, cap, caps);
  TrivialWordSet tb = trivial_words(b, cap, caps);
  const auto& wa = ta.words();
  const auto& wb = tb.words();
  std::size_t i = 0, j = 0;
  // words are in canonical (length-first) order; the first mismatch length
  // bounds the agreement radius
  while (i < wa.size() && j < wb.size()) {
    if (wa[i] == wb[j]) {
      ++i;
      ++j;
      continue;
    }
    // the canonically smaller unmatched word is the shortest disagreement
    const FreeWord& m = FreeWord::canonical_less(wa[i], wb[j]) ? wa[i] : wb[j];
    return {static_cast<int>(m.size()) - 1, false};
  }
  if (i < wa.size()) return {static_cast<int>(wa[i].size()) - 1, false};
  if (j < wb.size()) return {static_cast<int>(wb[j].size()) - 1, false};
  return {cap, true};
}

DistanceBounds marked_distance(const MarkedGroup& a, const MarkedGroup& b, int cap,
                               const Caps& caps) {
  Valuation v = valuation(a, b, cap, caps);
  DistanceBounds d;
  d.valuation = v.value;
  if (v.at_least_cap) {
    d.lower = 0.0;
    d.upper = std::ldexp(1.0, -cap);
    d.exact = false;
  } else {
    d.lower = d.upper = std::ldexp(1.0, -v.value);
    d.exact = true;
  }
  return d;
}

std::optional<int> word_norm(const MarkedGroup& mg, const Elem& g, int cap,
                             const Caps& caps) {
  if (mg.group.is_identity(g)) return 0;
  ElemMap<int> seen(mg.group);
  std::vector<Elem> frontier{mg.group.identity()};
  seen.emplace(frontier[0], 0);
  for (int r = 1; r <= cap; ++r) {
    std::vector<Elem> next;
    for (const Elem& v : frontier) {
      for (std::size_t d = 0; d < 2 * mg.n(); ++d) {
        Elem w = step(mg, v, d);
        if (seen.contains(w)) continue;
        if (mg.group.eq(w, g)) return r;
        if (seen.size() >= caps.max_vertices)
          throw ResourceLimitError("norm search exceeds the vertex cap");
        seen.emplace(w, r);
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;  // whole group enumerated
  }
  return std::nullopt;
}

}  // namespace mglab
