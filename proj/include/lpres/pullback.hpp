#pragma once

#include <map>
#include <optional>
#include <string>

#include "lpres/freegroup.hpp"

namespace lpres {

/// Rewrites window words back into words of the ambient group. An indexed
/// letter x@i becomes T^-i · img(x) · T^i, T being the stable word; a plain
/// letter g becomes img(g). Unlisted names map to themselves.
struct PullbackSpec {
  std::optional<Word> stable;
  std::map<std::string, Word> indexed;  ///< rules written `x@i = word`
  std::map<Generator, Word> plain;      ///< rules written `g = word`

  friend bool operator==(const PullbackSpec&, const PullbackSpec&) = default;
};

/// Throws PreconditionError on an indexed letter when no stable letter is set.
Word pullback(const Word& w, const PullbackSpec& spec);

/// The bare a_{j,i} ↦ t^-i a_j t^i substitution. Throws on plain letters.
Word pullback(const Word& w, const Generator& t);

}  // namespace lpres
