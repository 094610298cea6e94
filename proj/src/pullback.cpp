#include "lpres/pullback.hpp"

namespace lpres {

Word pullback(const Word& w, const PullbackSpec& spec) {
  Word out;
  for (const auto& l : w) {
    Word img;
    if (l.gen.indexed()) {
      if (!spec.stable)
        throw PreconditionError("pullback of " + to_string(l.gen) + " needs a stable letter");
      auto it = spec.indexed.find(l.gen.name);
      const Word base = it != spec.indexed.end() ? it->second : Word::of(Generator(l.gen.name));
      const Word t = power(*spec.stable, *l.gen.level);
      img = invert(t);
      img.append(base);
      img.append(t);
    } else {
      auto it = spec.plain.find(l.gen);
      img = it != spec.plain.end() ? it->second : Word::of(l.gen);
    }
    out.append(l.sign > 0 ? img : invert(img));
  }
  return out;
}

Word pullback(const Word& w, const Generator& t) {
  for (const auto& l : w)
    if (!l.gen.indexed()) throw PreconditionError("pullback of unindexed letter " + to_string(l.gen));
  PullbackSpec spec;
  spec.stable = Word::of(t);
  return pullback(w, spec);
}

}  // namespace lpres
