#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpres/freegroup.hpp"

namespace lpres {

/// ⟨generators | relators⟩, optionally with an integer weight per generator
/// describing a map onto ℤ.
struct FinitePresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::optional<std::map<Generator, std::int64_t>> degree;

  /// Σ sign·degree over the letters of w. Requires a degree map.
  std::int64_t total_degree(const Word& w) const;

  friend bool operator==(const FinitePresentation&, const FinitePresentation&) = default;
};

struct NamedEndomorphism {
  std::string name;
  FreeEndomorphism map;

  friend bool operator==(const NamedEndomorphism&, const NamedEndomorphism&) = default;
};

/// ⟨X | Q | R | Φ⟩: the normal closure of Q together with φ(R) for every φ
/// in the free monoid on Φ.
struct LPresentation {
  std::vector<Generator> generators;
  std::vector<Word> fixed;
  std::vector<Word> seeds;
  std::vector<NamedEndomorphism> endos;

  bool ascending() const { return fixed.empty(); }
  std::vector<FreeEndomorphism> endomorphisms() const;

  friend bool operator==(const LPresentation&, const LPresentation&) = default;
};

enum class Dedup { exact, cyclic };

struct DepthCount {
  std::size_t depth = 0;
  std::size_t generated = 0;  ///< relator images before any dedup
  std::size_t kept = 0;       ///< new relators that survived dedup
};

struct ExpansionReport {
  std::size_t depth = 0;
  Dedup dedup = Dedup::exact;
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::vector<DepthCount> counts;
  /// Depth at which each relator first appeared, parallel to `relators`.
  std::vector<std::size_t> origin;

  std::size_t generated_total() const;
};

/// Least rotation of the cyclically reduced word or of its inverse; equal
/// keys mean the two words agree up to conjugation and inversion.
Word cyclic_key(const Word& w);

/// Q first, then φ(r) layer by layer. Within a depth relators are ordered
/// by seed index, then by canonical text. Identity words are dropped.
/// `jobs` > 1 evaluates the images on that many threads; the result does
/// not depend on it.
ExpansionReport expand(const LPresentation& lp, std::size_t depth, Dedup dedup = Dedup::exact,
                       unsigned jobs = 1);

struct Classification {
  bool finite = true;
  bool ascending = false;
};

Classification classify(const LPresentation& lp);

using TrivialityTest = std::function<bool(const Word&)>;

/// True iff every relator of p maps to a trivial word under `images`. Throws
/// PreconditionError when the image map misses a generator.
bool check_dyck_hom(const FinitePresentation& p, const std::map<Generator, Word>& images,
                    const TrivialityTest& is_trivial);

/// Substitutes each generator by its image. Letters without an image are
/// rejected.
Word substitute(const Word& w, const std::map<Generator, Word>& images);

/// Ascending HNN embedding: one stable letter t_<name> per endomorphism and
/// relators R ∪ { t⁻¹ x t φ(x)⁻¹ }.
FinitePresentation hnn_embed(const LPresentation& lp);

/// ⟨X | Q ∪ R⟩, the depth-0 truncation.
FinitePresentation truncate(const LPresentation& lp);

}  // namespace lpres
