#include "lpres/freegroup.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace lpres {

std::string to_string(const Generator& g) {
  if (!g.level) return g.name;
  return g.name + "@" + std::to_string(*g.level);
}

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) push(l);
}

Word Word::of(const Generator& g, std::int64_t power) {
  Word w;
  const int sign = power < 0 ? -1 : 1;
  for (std::int64_t k = 0; k < (power < 0 ? -power : power); ++k) w.letters_.push_back({g, sign});
  return w;
}

void Word::push(const Letter& l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

void Word::append(const Word& w) {
  for (const auto& l : w.letters_) push(l);
}

Word reduce(std::span<const Letter> letters) {
  return Word(std::vector<Letter>(letters.begin(), letters.end()));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word multiply(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

Word power(const Word& w, std::int64_t n) {
  const Word base = n < 0 ? invert(w) : w;
  Word r;
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) r.append(base);
  return r;
}

std::int64_t exp_sum(const Word& w, const Generator& x) {
  std::int64_t s = 0;
  for (const auto& l : w)
    if (l.gen == x) s += l.sign;
  return s;
}

Word cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && ls[lo].sign == -ls[hi - 1].sign) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

std::vector<Generator> support(const Word& w) {
  std::set<Generator> s;
  for (const auto& l : w) s.insert(l.gen);
  return {s.begin(), s.end()};
}

FreeEndomorphism::FreeEndomorphism(std::vector<Generator> alphabet,
                                   std::map<Generator, Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw AlphabetMismatch("endomorphism must have exactly one image per generator");
  for (const auto& g : alphabet_) {
    if (!images_.count(g))
      throw AlphabetMismatch("endomorphism has no image for generator " + to_string(g));
  }
  for (const auto& [g, img] : images_) {
    for (const auto& l : img) {
      if (!images_.count(l.gen))
        throw AlphabetMismatch("image of " + to_string(g) + " uses generator " +
                               to_string(l.gen) + " outside the alphabet");
    }
  }
}

FreeEndomorphism FreeEndomorphism::identity(std::vector<Generator> alphabet) {
  std::map<Generator, Word> images;
  for (const auto& g : alphabet) images.emplace(g, Word::of(g));
  return FreeEndomorphism(std::move(alphabet), std::move(images));
}

const Word& FreeEndomorphism::image(const Generator& g) const {
  auto it = images_.find(g);
  if (it == images_.end())
    throw AlphabetMismatch("generator " + to_string(g) + " is outside the endomorphism's alphabet");
  return it->second;
}

Word FreeEndomorphism::apply(const Word& w) const {
  Word out;
  for (const auto& l : w) {
    const Word& img = image(l.gen);
    if (l.sign > 0) {
      out.append(img);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push(it->inverse());
    }
  }
  return out;
}

FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g) {
  std::map<Generator, Word> images;
  for (const auto& x : g.alphabet()) images.emplace(x, f.apply(g.image(x)));
  if (f.images().size() != g.images().size())
    throw AlphabetMismatch("cannot compose endomorphisms over different alphabets");
  return FreeEndomorphism(g.alphabet(), std::move(images));
}

namespace {

// |Φ|^d, saturating.
std::size_t formal_count(std::size_t n, std::size_t d) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (n != 0 && r > SIZE_MAX / n) return SIZE_MAX;
    r *= n;
  }
  return r;
}

}  // namespace

std::vector<MonoidLayer> monoid_layers(std::span<const FreeEndomorphism> phi,
                                       const std::vector<Generator>& alphabet,
                                       std::size_t depth) {
  const std::set<Generator> letters(alphabet.begin(), alphabet.end());
  for (const auto& f : phi) {
    if (std::set<Generator>(f.alphabet().begin(), f.alphabet().end()) != letters)
      throw AlphabetMismatch("endomorphisms in a monoid must share one alphabet");
  }
  std::vector<MonoidLayer> layers;
  std::set<std::map<Generator, Word>> seen;
  MonoidLayer base;
  base.examined = 1;
  base.elements.push_back(FreeEndomorphism::identity(alphabet));
  seen.insert(base.elements.front().images());
  layers.push_back(std::move(base));

  for (std::size_t d = 1; d <= depth; ++d) {
    MonoidLayer next;
    next.depth = d;
    // `examined` counts formal composition words of length d, including
    // those whose prefix was already a duplicate.
    next.examined = formal_count(phi.size(), d);
    for (const auto& prev : layers.back().elements) {
      for (const auto& f : phi) {
        auto c = compose(f, prev);
        if (seen.insert(c.images()).second) next.elements.push_back(std::move(c));
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

std::vector<FreeEndomorphism> enumerate_monoid(std::span<const FreeEndomorphism> phi,
                                               const std::vector<Generator>& alphabet,
                                               std::size_t depth) {
  std::vector<FreeEndomorphism> out;
  for (auto& layer : monoid_layers(phi, alphabet, depth))
    for (auto& e : layer.elements) out.push_back(std::move(e));
  return out;
}

}  // namespace lpres
