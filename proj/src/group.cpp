#include "mglab/group.hpp"

namespace mglab {

Elem evaluate_word(const Group& group, std::span<const Elem> generators,
                   const FreeWord& word) {
  Elem acc = group.identity();
  for (const Letter& l : word.letters()) {
    if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
      throw std::out_of_range("word references generator " + std::to_string(l.gen) +
                              " but the tuple has " + std::to_string(generators.size()));
    const Elem& g = generators[l.gen];
    acc = group.mul(acc, l.sign > 0 ? g : group.inv(g));
  }
  return acc;
}

std::optional<std::uint64_t> element_order(const Group& group, const Elem& g,
                                           std::uint64_t bound) {
  if (bound < 1) throw InvalidSpecError("order bound must be positive");
  Elem acc = g;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (group.is_identity(acc)) return k;
    acc = group.mul(acc, g);
  }
  return std::nullopt;
}

}  // namespace mglab
