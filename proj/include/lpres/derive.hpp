#pragma once

// Kernel L-presentations for finitely presented groups mapping onto ℤ.
//
// Given G = ⟨t, a_1..a_m | r_1..r_n⟩ with every r_k of zero t-exponent, the
// kernel H is generated by a_{j,i} = t^-i a_j t^i (written a@i) subject to
// the shifted rewrites r_{k,i}. Choosing a window bound N and, for each
// base generator, window words c⁺_j = a_{j,N+1} and c⁻_j = a_{j,-(N+1)}
// (the certificates) yields the ascending presentation
//
//   ⟨ a_{j,i}, |i| ≤ N | r_{k,0} | {η, τ} ⟩
//
// with η, τ the window-restricted shifts s and s⁻¹.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpres/freegroup.hpp"
#include "lpres/presentation.hpp"
#include "lpres/pullback.hpp"
#include "lpres/window.hpp"

namespace lpres {

/// G rewritten so that t has degree 1 and every other generator degree 0.
struct NormalizedPresentation {
  Generator t;
  std::vector<Generator> base;
  std::vector<Word> relators;

  /// The input had degree(t) = -1 and t now stands for the old t⁻¹.
  bool t_inverted = false;
  /// Base generator → its expression in the original generators.
  std::map<Generator, Word> origin;
};

/// Rewrites p so that t is the only generator of nonzero degree. A generator
/// g of degree d ≠ 0 is replaced by g_<t> = g·t^-d.
NormalizedPresentation neumann_normalize(const FinitePresentation& p, const Generator& t);

/// Reidemeister–Schreier rewrite along the transversal {t^i}: a letter
/// a^ε read after a prefix of t-exponent c becomes a@(-c)^ε.
Word rs_rewrite(const Word& w, const NormalizedPresentation& np);
Word rs_rewrite(const Word& w, const Generator& t);

/// Adds k to every level.
Word shift(const Word& w, std::int64_t k);

/// max |level| over all letters; 0 for no letters.
std::int64_t window_bound(std::span<const Word> words);

/// γ: rewrites any a@i into the window, memoized per (generator, level).
/// Not safe for concurrent use; give each task its own instance.
class Gamma {
 public:
  explicit Gamma(CertificateSet certs);

  const Word& operator()(const std::string& base, std::int64_t level);
  /// γ applied letterwise, then reduced.
  Word apply(const Word& w);

  const CertificateSet& certs() const { return certs_; }

 private:
  CertificateSet certs_;
  std::map<std::pair<std::string, std::int64_t>, Word> memo_;
};

inline Word gamma(const CertificateSet& certs, const std::string& base, std::int64_t level) {
  Gamma g(certs);
  return g(base, level);
}

struct ShiftEndomorphisms {
  FreeEndomorphism eta;
  FreeEndomorphism tau;
};

/// η(a@i) = a@(i+1) below the top of the window and c⁺ at the top; τ mirrors
/// it with c⁻ at the bottom.
ShiftEndomorphisms build_endos(const CertificateSet& certs);

struct DerivedLPresentation {
  LPresentation lp;
  FreeEndomorphism eta;
  FreeEndomorphism tau;
  NormalizedPresentation source;
  CertificateSet certs;
  std::int64_t n_min = 0;
};

/// The full pipeline. Throws PreconditionError when the certificate bound is
/// below the rewritten relators' window bound (the message names N_min),
/// when it differs from `requested_bound`, or when the certificate base does
/// not match the normalized base generators.
DerivedLPresentation derive_lpres(const FinitePresentation& p, const Generator& t,
                                  const CertificateSet& certs,
                                  std::optional<std::int64_t> requested_bound = std::nullopt);

/// Compares γ(shift(r, i)) with η^i(r) (i ≥ 0) or τ^-i(r) (i < 0) for every
/// seed and every i in [lo, hi].
bool lemma5_check(const CertificateSet& certs, std::span<const Word> seeds, std::int64_t lo,
                  std::int64_t hi);

/// Pullback map from the window alphabet of `np` back to the original
/// generators.
PullbackSpec derived_pullback(const NormalizedPresentation& np);

/// `#` comment lines recording what a derived presentation was built from.
std::string provenance_comment(const DerivedLPresentation& d, std::string_view input_text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace lpres
