#include "curves/word.hpp"

#include <algorithm>
#include <cctype>

#include "curves/errors.hpp"

namespace curves {

Letter::Letter(int g, int s) : gen(g), sign(s) {
  if (g < 1) throw DomainError("generator index must be >= 1");
  if (s != 1 && s != -1) throw DomainError("letter sign must be +1 or -1");
}

std::string to_string(const Letter& l) {
  return (l.positive() ? "a" : "A") + std::to_string(l.gen);
}

namespace {

std::vector<Letter> free_reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// Index of the lexicographically least rotation (least index on ties).
std::size_t least_rotation(const std::vector<Letter>& v) {
  const std::size_t n = v.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter& a = v[(cand + k) % n];
      const Letter& b = v[(best + k) % n];
      if (a < b) {
        best = cand;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

}  // namespace

Word::Word(std::vector<Letter> raw) : letters_(free_reduce(raw)) {}

int Word::max_generator() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word multiply(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word multiply(const Word& a, const Word& b, const Word& c) {
  return multiply(multiply(a, b), c);
}

Word conjugate(const Word& g, const Word& x) {
  return multiply(multiply(g, x), invert(g));
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? invert(w) : w;
  int reps = n < 0 ? -n : n;
  Word acc;
  for (int i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

CyclicWord::CyclicWord(const Word& w) {
  std::vector<Letter> v = w.letters();
  // Strip conjugating pairs from the ends, then rotate canonically.
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == v[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(v.begin() + lo, v.begin() + hi);
  if (!core.empty()) {
    std::size_t r = least_rotation(core);
    std::rotate(core.begin(), core.begin() + r, core.end());
  }
  letters_ = std::move(core);
}

Word CyclicWord::based_word(std::size_t start) const {
  const std::size_t n = letters_.size();
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(letters_[(start + k) % n]);
  return Word(std::move(out));
}

Word CyclicWord::segment(std::size_t i, std::size_t j) const {
  const std::size_t n = letters_.size();
  if (n == 0) throw DomainError("segment of an empty cyclic word");
  i %= n;
  j %= n;
  if (i == j) throw DomainError("segment endpoints must differ");
  std::vector<Letter> out;
  for (std::size_t k = i; k != j; k = (k + 1) % n) out.push_back(letters_[k]);
  return Word(std::move(out));
}

std::size_t CyclicWord::period() const {
  const std::size_t n = letters_.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = letters_[k] == letters_[(k + p) % n];
    if (ok) return p;
  }
  return n;
}

namespace {

std::string join_letters(const std::vector<Letter>& v) {
  if (v.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += '.';
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Word& w) { return join_letters(w.letters()); }
std::string to_string(const CyclicWord& w) { return join_letters(w.letters()); }

Word parse_word(const std::string& text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  const auto is_sep = [](char c) {
    return c == '.' || std::isspace(static_cast<unsigned char>(c));
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    char c = text[i];
    if (c == '1' && out.empty()) {
      // "1" denotes the empty word; nothing but separators may follow.
      ++i;
      while (i < text.size() && is_sep(text[i])) ++i;
      if (i != text.size()) throw ParseError("unexpected text after '1'");
      return Word();
    }
    if (c != 'a' && c != 'A') {
      throw ParseError(std::string("bad letter token near '") + c + "' in \"" + text + "\"");
    }
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("letter token missing generator index in \"" + text + "\"");
    int gen = std::stoi(text.substr(start, i - start));
    if (gen < 1) throw ParseError("generator index must be >= 1 in \"" + text + "\"");
    out.emplace_back(gen, c == 'a' ? 1 : -1);
  }
  return Word(std::move(out));
}

}  // namespace curves
