#include "lpres/window.hpp"

#include <algorithm>

namespace lpres {

bool WindowAlphabet::contains(const Generator& g) const {
  return g.indexed() && *g.level >= -bound && *g.level <= bound &&
         std::find(base.begin(), base.end(), g.name) != base.end();
}

std::vector<Generator> WindowAlphabet::generators() const {
  std::vector<Generator> out;
  out.reserve(size());
  for (const auto& b : base)
    for (std::int64_t i = -bound; i <= bound; ++i) out.emplace_back(b, i);
  return out;
}

void CertificateSet::validate() const {
  auto check = [&](const std::map<std::string, Word>& rows, const char* kind) {
    for (const auto& b : window.base) {
      auto it = rows.find(b);
      if (it == rows.end())
        throw PreconditionError(std::string("missing '") + kind + " " + b + "' certificate");
      for (const auto& l : it->second) {
        if (!window.contains(l.gen))
          throw PreconditionError(std::string(kind) + " certificate for " + b + " uses " +
                                  to_string(l.gen) + " outside the window");
      }
    }
    if (rows.size() != window.base.size())
      throw PreconditionError(std::string(kind) + " certificate for an unknown base generator");
  };
  check(up, "up");
  check(down, "down");
}

}  // namespace lpres
