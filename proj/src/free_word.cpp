#include "mglab/free_word.hpp"

#include <algorithm>
#include <sstream>

namespace mglab {

namespace {

std::vector<std::string> default_names(int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i < 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("g" + std::to_string(i));
  }
  return names;
}

}  // namespace

FreeWord::FreeWord(std::span<const Letter> letters) {
  for (const Letter& l : letters) push(l);
}

FreeWord FreeWord::generator(int i, int sign) {
  FreeWord w;
  w.push({i, sign});
  return w;
}

FreeWord FreeWord::power(int i, std::int64_t k) {
  FreeWord w;
  int sign = k >= 0 ? 1 : -1;
  for (std::int64_t j = 0; j < (k >= 0 ? k : -k); ++j) w.push({i, sign});
  return w;
}

int FreeWord::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

FreeWord& FreeWord::push(Letter l) {
  if (l.sign != 1 && l.sign != -1) throw InvalidSpecError("letter sign must be ±1");
  if (!letters_.empty() && letters_.back().gen == l.gen &&
      letters_.back().sign == -l.sign) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.push({it->gen, -it->sign});
  return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (const Letter& l : b.letters_) w.push(l);
  return w;
}

bool FreeWord::canonical_less(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ca = letter_code(a.letters_[i]);
    int cb = letter_code(b.letters_[i]);
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::uint64_t FreeWord::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const Letter& l : letters_) h = hash_mix(h, static_cast<std::uint64_t>(letter_code(l)));
  return h;
}

std::string FreeWord::str(std::span<const std::string> names) const {
  if (letters_.empty()) return "e";
  std::vector<std::string> defaults;
  if (names.empty()) {
    defaults = default_names(max_generator() + 1);
    names = defaults;
  }
  bool multi = false;
  for (const auto& n : names)
    if (n.size() > 1) multi = true;
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.gen < 0 || l.gen >= static_cast<int>(names.size()))
      throw std::out_of_range("letter references a missing generator name");
    if (multi && i > 0) out += ' ';
    out += names[l.gen];
    if (l.sign < 0) out += '\'';
  }
  return out;
}

FreeWord FreeWord::parse(std::string_view text, std::span<const std::string> names) {
  std::vector<std::string> defaults;
  if (names.empty()) {
    defaults = default_names(26);
    names = defaults;
  }

  // tokens: NAME ['] [^ INT]; single-char names may be concatenated
  FreeWord w;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(i, end - i);
  bool e_is_name = false;
  for (const auto& n : names)
    if (n == "e") e_is_name = !defaults.empty() ? false : true;
  if (body.empty() || body == "1" || (body == "e" && !e_is_name)) return w;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    // longest-match a name starting here
    int gi = -1;
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < names.size(); ++k) {
      const std::string& n = names[k];
      if (n.size() > best_len && text.substr(i, n.size()) == n) {
        gi = static_cast<int>(k);
        best_len = n.size();
      }
    }
    if (gi < 0) throw ParseError("unknown generator at '" + std::string(text.substr(i)) + "'");
    i += best_len;
    int sign = 1;
    if (i < text.size() && text[i] == '\'') {
      sign = -1;
      ++i;
    }
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed exponent in word");
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      exp = neg ? -v : v;
    }
    std::int64_t reps = exp >= 0 ? exp : -exp;
    int s = (exp >= 0 ? sign : -sign);
    for (std::int64_t r = 0; r < reps; ++r) w.push({gi, s});
  }
  return w;
}

}  // namespace mglab
