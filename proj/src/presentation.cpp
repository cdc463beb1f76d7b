#include "mglab/presentation.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace mglab {

Presentation make_presentation(std::vector<std::string> generators,
                               std::vector<FreeWord> relators) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw InvalidSpecError("empty generator name");
    if (!seen.insert(g).second) throw InvalidSpecError("duplicate generator name: " + g);
  }
  for (const FreeWord& w : relators)
    if (w.max_generator() >= static_cast<int>(generators.size()))
      throw InvalidSpecError("relator references a missing generator");
  return {std::move(generators), std::move(relators)};
}

Presentation read_presentation(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty presentation file");
  std::istringstream head(line);
  std::string tag;
  head >> tag;
  if (tag != "gens:") throw ParseError("presentation must start with 'gens:'");
  std::vector<std::string> gens;
  std::string name;
  while (head >> name) gens.push_back(name);
  if (gens.empty()) throw ParseError("presentation declares no generators");

  std::vector<FreeWord> relators;
  while (std::getline(is, line)) {
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (trimmed.empty() || trimmed[0] == '#') continue;
    relators.push_back(FreeWord::parse(trimmed, gens));
  }
  return make_presentation(std::move(gens), std::move(relators));
}

void write_presentation(std::ostream& os, const Presentation& p) {
  os << "gens:";
  for (const auto& g : p.generators) os << ' ' << g;
  os << '\n';
  for (const FreeWord& w : p.relators) os << w.str(p.generators) << '\n';
}

FreeWord conjugated_generator(int a_index, int b_index, int i) {
  FreeWord w = FreeWord::power(b_index, i);
  w = w * FreeWord::generator(a_index);
  w = w * FreeWord::power(b_index, -i);
  return w;
}

namespace {

int index_of_name(const Presentation& p, const std::string& name) {
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i] == name) return static_cast<int>(i);
  throw MissingGeneratorError("presentation has no generator named '" + name + "'");
}

FreeWord shift_word(const FreeWord& w, int offset) {
  FreeWord out;
  for (const Letter& l : w.letters()) out.push({l.gen + offset, l.sign});
  return out;
}

}  // namespace

Presentation amalgam_presentation(const Presentation& p, int r, const std::string& a_name,
                                  const std::string& b_name) {
  if (r < 2) throw InvalidSpecError("amalgam rank must be >= 2");
  int ai = index_of_name(p, a_name);
  int bi = index_of_name(p, b_name);
  int n = static_cast<int>(p.generators.size());

  std::vector<std::string> gens = p.generators;
  for (const auto& g : p.generators) gens.push_back(g + "~");

  std::vector<FreeWord> relators = p.relators;
  for (const FreeWord& w : p.relators) relators.push_back(shift_word(w, n));
  for (int i = 0; i < r; ++i) {
    FreeWord w = conjugated_generator(ai, bi, i);
    FreeWord w_bar = shift_word(w, n);
    relators.push_back(w * w_bar.inverse());
  }
  return make_presentation(std::move(gens), std::move(relators));
}

Presentation hnn_presentation(const Presentation& p, int r, const std::string& a_name,
                              const std::string& b_name) {
  if (r < 2) throw InvalidSpecError("hnn rank must be >= 2");
  int ai = index_of_name(p, a_name);
  int bi = index_of_name(p, b_name);

  std::vector<std::string> gens = p.generators;
  std::string stable = "t";
  for (const auto& g : gens)
    if (g == stable) stable = "t0";
  for (const auto& g : gens)
    if (g == stable) throw InvalidSpecError("cannot pick a fresh stable letter name");
  int ti = static_cast<int>(gens.size());
  gens.push_back(stable);

  std::vector<FreeWord> relators = p.relators;
  for (int i = 0; i < r; ++i) {
    FreeWord w = conjugated_generator(ai, bi, i);
    FreeWord rel = FreeWord::generator(ti) * w * FreeWord::generator(ti, -1) * w.inverse();
    relators.push_back(rel);
  }
  return make_presentation(std::move(gens), std::move(relators));
}

std::int64_t presentation_deficiency(const Presentation& p) {
  return static_cast<std::int64_t>(p.generators.size()) -
         static_cast<std::int64_t>(p.relators.size());
}

}  // namespace mglab
