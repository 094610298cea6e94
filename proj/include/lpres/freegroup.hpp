#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpres {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter or endomorphism refers to a generator outside the expected alphabet.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Input rejected because it violates an operation's precondition (as
/// opposed to a syntax error).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A generator symbol. `level` carries the index i of a_{j,i}; plain
/// generators leave it empty.
struct Generator {
  std::string name;
  std::optional<std::int64_t> level;

  Generator() = default;
  Generator(std::string n) : name(std::move(n)) {}
  Generator(const char* n) : name(n) {}
  Generator(std::string n, std::int64_t lvl) : name(std::move(n)), level(lvl) {}

  bool indexed() const { return level.has_value(); }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

struct Letter {
  Generator gen;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Every constructor reduces, so two Words compare
/// equal iff they represent the same element of the free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  static Word of(const Generator& g, std::int64_t power = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Appends a letter, cancelling against the last one when possible.
  void push(const Letter& l);
  void append(const Word& w);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Freely reduces an arbitrary letter sequence.
Word reduce(std::span<const Letter> letters);
Word invert(const Word& w);
Word multiply(const Word& u, const Word& v);
Word power(const Word& w, std::int64_t n);
std::int64_t exp_sum(const Word& w, const Generator& x);
Word cyclic_reduce(const Word& w);

/// Every generator occurring in w, sorted and deduplicated.
std::vector<Generator> support(const Word& w);

/// A total map from a finite alphabet to words over the same alphabet.
class FreeEndomorphism {
 public:
  FreeEndomorphism() = default;
  /// Throws AlphabetMismatch unless `images` has exactly the keys of
  /// `alphabet` and every image is a word over it.
  FreeEndomorphism(std::vector<Generator> alphabet, std::map<Generator, Word> images);

  static FreeEndomorphism identity(std::vector<Generator> alphabet);

  const std::vector<Generator>& alphabet() const { return alphabet_; }
  const std::map<Generator, Word>& images() const { return images_; }
  const Word& image(const Generator& g) const;
  bool contains(const Generator& g) const { return images_.count(g) != 0; }

  Word apply(const Word& w) const;

  friend bool operator==(const FreeEndomorphism& a, const FreeEndomorphism& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<Generator> alphabet_;
  std::map<Generator, Word> images_;
};

inline Word apply_endo(const FreeEndomorphism& f, const Word& w) { return f.apply(w); }

/// (f∘g)(x) = f(g(x)).
FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g);

/// One layer of the free monoid Y*: the new distinct endomorphisms first
/// reached at composition length `depth`, plus the number of formal
/// compositions examined to find them.
struct MonoidLayer {
  std::size_t depth = 0;
  std::size_t examined = 0;
  std::vector<FreeEndomorphism> elements;
};

/// Breadth-first layers of Φ* up to `depth`, layer 0 being the identity.
/// Endomorphisms are deduplicated extensionally across all layers.
std::vector<MonoidLayer> monoid_layers(std::span<const FreeEndomorphism> phi,
                                       const std::vector<Generator>& alphabet,
                                       std::size_t depth);

/// Flattened form of monoid_layers.
std::vector<FreeEndomorphism> enumerate_monoid(std::span<const FreeEndomorphism> phi,
                                               const std::vector<Generator>& alphabet,
                                               std::size_t depth);

}  // namespace lpres
