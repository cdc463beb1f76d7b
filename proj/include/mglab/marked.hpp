#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mglab/group.hpp"

namespace mglab {

// resource limits for ball and word enumeration
struct Caps {
  std::size_t max_vertices = 1'000'000;
  std::size_t max_words = 1'000'000;
};

// A group together with an ordered generating tuple (repetitions and the
// identity are allowed).  This is a point of the space of marked groups.
struct MarkedGroup {
  Group group;
  std::vector<Elem> marking;
  std::string label;

  std::size_t n() const { return marking.size(); }
};

// Ball of given radius in the labeled Cayley graph.  Vertex 0 is the
// identity; vertices are ordered by (norm, lexicographically least shortest
// word), which makes the numbering canonical: two balls are isomorphic as
// rooted labeled digraphs iff their encodings are byte-equal.
//
// Edge labels are directions d in [0, 2n): direction 2i is generator i,
// direction 2i+1 its inverse.  An edge is present exactly when both
// endpoints lie in the ball.
struct CayleyBall {
  int radius = 0;
  std::vector<Elem> vertices;
  std::vector<int> norms;
  std::vector<std::array<std::uint32_t, 3>> edges;  // (src, direction, dst)
};

CayleyBall ball(const MarkedGroup& mg, int radius, const Caps& caps = {});
std::vector<std::uint8_t> ball_encoding(const CayleyBall& b);
std::string ball_digest(const CayleyBall& b);  // FNV-1a64 of the encoding, hex
void write_adjacency(std::ostream& os, const CayleyBall& b);

// The reduced words of length <= radius that evaluate to the identity under
// the marking: the kernel ball N ∩ B(r) in the free group on n letters.
class TrivialWordSet {
 public:
  TrivialWordSet(int radius, std::vector<FreeWord> words);

  int radius() const { return radius_; }
  const std::vector<FreeWord>& words() const { return words_; }  // canonical order
  bool contains(const FreeWord& w) const;

  // words of length <= r only (r <= radius)
  std::vector<FreeWord> restricted(int r) const;

  friend bool operator==(const TrivialWordSet&, const TrivialWordSet&) = default;

 private:
  int radius_;
  std::vector<FreeWord> words_;
};

TrivialWordSet trivial_words(const MarkedGroup& mg, int radius, const Caps& caps = {});

// number of reduced words of length <= radius over n marked generators
BigInt reduced_word_count(std::size_t n, int radius);

// the valuation of Eq. (1): largest r <= cap at which the two kernel balls
// agree; at_least_cap means they agree through the whole tested range
struct Valuation {
  int value = 0;
  bool at_least_cap = false;
};

Valuation valuation(const MarkedGroup& a, const MarkedGroup& b, int cap,
                    const Caps& caps = {});

// d = 2^{-v}, reported as an interval when the cap truncates the sup
struct DistanceBounds {
  double lower = 0.0;
  double upper = 0.0;
  int valuation = 0;
  bool exact = false;
};

DistanceBounds marked_distance(const MarkedGroup& a, const MarkedGroup& b, int cap,
                               const Caps& caps = {});

// least k <= cap with g in the ball of radius k; nullopt when the cap is
// exceeded
std::optional<int> word_norm(const MarkedGroup& mg, const Elem& g, int cap,
                             const Caps& caps = {});

}  // namespace mglab
