#include "mglab/matrix_io.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace mglab {

namespace {

int square_side(std::size_t count) {
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
  if (static_cast<std::size_t>(n) * n != count)
    throw ParseError("matrix line has " + std::to_string(count) +
                     " entries, which is not a square");
  return n;
}

LaurentScalar parse_laurent_entry(const std::string& tok, std::int64_t p) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return laurent_canonical(BigInt(tok), 0, p);
  std::string num = tok.substr(0, slash);
  std::string rest = tok.substr(slash + 1);
  std::string base = rest;
  unsigned exp = 1;
  auto caret = rest.find('^');
  if (caret != std::string::npos) {
    base = rest.substr(0, caret);
    exp = static_cast<unsigned>(std::stoul(rest.substr(caret + 1)));
  }
  if (BigInt(base) != p)
    throw ParseError("entry '" + tok + "' uses a base different from the declared p");
  return laurent_canonical(BigInt(num), exp, p);
}

}  // namespace

MatrixFile read_matrix_file(std::istream& is) {
  std::string line;
  std::string mode;
  std::int64_t param = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    if (!(ls >> mode)) continue;
    if (mode == "#") continue;
    if (!(ls >> param)) throw ParseError("header must be 'mod q' or 'inv p'");
    break;
  }
  if (mode != "mod" && mode != "inv")
    throw ParseError("header must be 'mod q' or 'inv p'");

  MatrixFile out;
  if (mode == "mod") {
    std::vector<ModMat> mats;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::vector<std::int64_t> entries;
      std::int64_t v;
      while (ls >> v) entries.push_back(mod_floor(v, param));
      if (entries.empty()) continue;
      ModMat m;
      m.n = square_side(entries.size());
      m.q = param;
      m.a = std::move(entries);
      if (mod_mat_det(m) != 1 % param)
        throw DeterminantError("matrix determinant is not 1 mod q");
      mats.push_back(std::move(m));
    }
    out.matrices = std::move(mats);
  } else {
    std::vector<LaurentMat> mats;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::vector<LaurentScalar> entries;
      std::string tok;
      while (ls >> tok) entries.push_back(parse_laurent_entry(tok, param));
      if (entries.empty()) continue;
      LaurentMat m;
      m.n = square_side(entries.size());
      m.p = param;
      m.a = std::move(entries);
      if (!(laurent_mat_det(m) == LaurentScalar{1, 0}))
        throw DeterminantError("matrix determinant is not 1");
      mats.push_back(std::move(m));
    }
    out.matrices = std::move(mats);
  }
  return out;
}

void write_matrix_file(std::ostream& os, const std::vector<ModMat>& mats) {
  if (mats.empty()) throw InvalidSpecError("nothing to write");
  os << "mod " << mats[0].q << '\n';
  for (const ModMat& m : mats) {
    for (std::size_t i = 0; i < m.a.size(); ++i) {
      if (i) os << ' ';
      os << m.a[i];
    }
    os << '\n';
  }
}

void write_matrix_file(std::ostream& os, const std::vector<LaurentMat>& mats) {
  if (mats.empty()) throw InvalidSpecError("nothing to write");
  os << "inv " << mats[0].p << '\n';
  for (const LaurentMat& m : mats) {
    for (std::size_t i = 0; i < m.a.size(); ++i) {
      if (i) os << ' ';
      os << laurent_str(m.a[i], m.p);
    }
    os << '\n';
  }
}

}  // namespace mglab
