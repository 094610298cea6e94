#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpres/freegroup.hpp"

namespace lpres {

/// The finite generating set {a_{j,i} : |i| ≤ bound} of the kernel.
struct WindowAlphabet {
  std::vector<std::string> base;
  std::int64_t bound = 0;

  bool contains(const Generator& g) const;
  /// Generators ordered by base index, then level from -bound to bound.
  std::vector<Generator> generators() const;
  std::size_t size() const { return base.size() * static_cast<std::size_t>(2 * bound + 1); }

  friend bool operator==(const WindowAlphabet&, const WindowAlphabet&) = default;
};

/// Words over the window standing for a_{j,N+1} (`up`) and a_{j,-(N+1)}
/// (`down`). Whether they equal those elements in the group is the
/// caller's claim; only the syntax is checked here.
struct CertificateSet {
  WindowAlphabet window;
  std::map<std::string, Word> up;
  std::map<std::string, Word> down;

  /// Throws PreconditionError on missing rows or letters outside the window.
  void validate() const;

  friend bool operator==(const CertificateSet&, const CertificateSet&) = default;
};

}  // namespace lpres
