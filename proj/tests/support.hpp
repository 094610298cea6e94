#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lpres/freegroup.hpp"
#include "lpres/presfmt.hpp"

namespace testing {

using lpres::Generator;
using lpres::Letter;
using lpres::Word;

/// Parses `text` over the given alphabet.
inline Word W(std::string_view text, std::initializer_list<Generator> alphabet) {
  return lpres::parse_word(text, std::set<Generator>(alphabet));
}

inline Word W(std::string_view text, const std::vector<Generator>& alphabet) {
  return lpres::parse_word(text, std::set<Generator>(alphabet.begin(), alphabet.end()));
}

inline Generator at(const char* name, std::int64_t level) { return Generator(name, level); }

/// Fixed-seed engine so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1e55u);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Random, not necessarily reduced, letter sequence of length in [0, max_len].
inline std::vector<Letter> random_letters(const std::vector<Generator>& alphabet, std::size_t max_len) {
  std::vector<Letter> out(static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_len))));
  for (auto& l : out) {
    l.gen = alphabet[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(alphabet.size()) - 1))];
    l.sign = uniform(0, 1) ? 1 : -1;
  }
  return out;
}

inline Word random_word(const std::vector<Generator>& alphabet, std::size_t max_len) {
  return Word(random_letters(alphabet, max_len));
}

}  // namespace testing
