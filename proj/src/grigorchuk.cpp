#include <string>
#include <unordered_map>

#include "lpres/oracles.hpp"

namespace lpres {

namespace {

char letter_code(const Generator& g) {
  if (!g.indexed() && g.name.size() == 1) {
    const char ch = g.name[0];
    if (ch >= 'a' && ch <= 'd') return ch;
  }
  throw AlphabetMismatch("Grigorchuk words use only a, b, c, d; got " + to_string(g));
}

// Product in the Klein four-group {1, b, c, d}; '\0' is the identity.
char klein(char x, char y) {
  if (x == y) return '\0';
  return static_cast<char>('b' + 'c' + 'd' - x - y);
}

void push_normalized(std::string& s, char x) {
  if (x == 'a') {
    if (!s.empty() && s.back() == 'a') s.pop_back();
    else s.push_back('a');
    return;
  }
  if (!s.empty() && s.back() != 'a') {
    const char k = klein(s.back(), x);
    if (k == '\0') s.pop_back();
    else s.back() = k;
    return;
  }
  s.push_back(x);
}

std::string normalize(const std::string& raw) {
  std::string s;
  s.reserve(raw.size());
  for (char ch : raw) push_normalized(s, ch);
  return s;
}

struct Split {
  bool swap = false;
  std::string left, right;
};

// Sections at the two children of the root, read left to right.
Split split(const std::string& s) {
  Split out;
  std::string* sec[2] = {&out.left, &out.right};
  for (int start = 0; start < 2; ++start) {
    int x = start;
    for (char ch : s) {
      switch (ch) {
        case 'a': x ^= 1; break;
        case 'b': push_normalized(*sec[start], x == 0 ? 'a' : 'c'); break;
        case 'c': push_normalized(*sec[start], x == 0 ? 'a' : 'd'); break;
        case 'd': if (x == 1) push_normalized(*sec[start], 'b'); break;
      }
    }
  }
  std::size_t a_count = 0;
  for (char ch : s) a_count += ch == 'a';
  out.swap = a_count % 2 == 1;
  return out;
}

class WitnessSearch {
 public:
  // Level (edges from the root of the subtree at `depth`) of a moved vertex.
  std::optional<std::size_t> run(const std::string& s, std::size_t depth) {
    if (s.empty()) return std::nullopt;
    if (auto it = memo_.find(s); it != memo_.end()) {
      if (!it->second) return std::nullopt;
      return depth + *it->second;
    }
    auto parts = split(s);
    std::optional<std::size_t> found;
    if (parts.swap) {
      found = depth + 1;
    } else if (auto l = run(parts.left, depth + 1)) {
      found = l;
    } else {
      found = run(parts.right, depth + 1);
    }
    memo_.emplace(s, found ? std::optional<std::size_t>(*found - depth) : std::nullopt);
    return found;
  }

 private:
  std::unordered_map<std::string, std::optional<std::size_t>> memo_;
};

std::string encode(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const auto& l : w) s.push_back(letter_code(l.gen));
  return s;
}

Word decode(const std::string& s) {
  std::vector<Letter> ls;
  ls.reserve(s.size());
  for (char ch : s) ls.push_back({Generator(std::string(1, ch)), 1});
  return Word(std::move(ls));
}

}  // namespace

Word grig_normalize(const Word& w) { return decode(normalize(encode(w))); }

GrigSections grig_sections(const Word& w) {
  auto parts = split(normalize(encode(w)));
  return {parts.swap, decode(parts.left), decode(parts.right)};
}

std::optional<std::size_t> grig_witness(const Word& w) {
  WitnessSearch search;
  return search.run(normalize(encode(w)), 0);
}

}  // namespace lpres
