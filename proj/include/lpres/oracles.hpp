#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpres/dyadic.hpp"
#include "lpres/freegroup.hpp"
#include "lpres/presentation.hpp"
#include "lpres/pullback.hpp"

namespace lpres {

// --- Grigorchuk group on the binary tree -----------------------------------
//
// a swaps the two subtrees of the root; b = (a, c), c = (a, d), d = (1, b).
// Words act on the right: the first letter acts first.

/// Reduces a word over {a, b, c, d} using a² = b² = c² = d² = 1 and
/// bc = cb = d, bd = db = c, cd = dc = b. The result alternates a with one
/// of b, c, d. Letter signs are ignored since all four are involutions.
Word grig_normalize(const Word& w);

struct GrigSections {
  bool root_swap = false;
  Word left;
  Word right;
};

/// Root permutation and the two sections of the normalized word.
GrigSections grig_sections(const Word& w);

/// Tree level at which w moves some vertex, or nullopt if w is trivial.
std::optional<std::size_t> grig_witness(const Word& w);

inline bool grig_is_trivial(const Word& w) { return !grig_witness(w).has_value(); }

// --- Integer matrices ------------------------------------------------------

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Exact determinant (Bareiss), square matrices only.
mpz_class determinant(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix u;  ///< rows × rows, unimodular
  IntegerMatrix d;  ///< rows × cols, diagonal, d₁ | d₂ | …, non-negative
  IntegerMatrix v;  ///< cols × cols, unimodular
  std::size_t rank = 0;
};

/// U·M·V = D by elementary row and column operations, smallest pivot first.
SmithForm snf(const IntegerMatrix& m);

/// Integer row lattice of a matrix, membership decided through its Smith form.
class RowLattice {
 public:
  explicit RowLattice(IntegerMatrix m);

  std::size_t dimension() const { return m_.cols(); }
  bool contains(std::span<const mpz_class> v) const;
  /// x with x·M = v, when one exists.
  std::optional<std::vector<mpz_class>> coefficients(std::span<const mpz_class> v) const;

 private:
  IntegerMatrix m_;
  SmithForm smith_;
};

/// Exponent-sum vector of w indexed by `generators`; letters outside throw
/// AlphabetMismatch.
std::vector<mpz_class> exponent_vector(const Word& w, const std::vector<Generator>& generators);

/// Relator exponent matrix of p, one row per relator.
IntegerMatrix relator_matrix(const FinitePresentation& p);

/// Whether v lies in the lattice spanned by p's relator exponent vectors.
/// A necessary condition for a word to be trivial in the group, never a
/// sufficient one.
bool in_relator_lattice(std::span<const mpz_class> v, const FinitePresentation& p);

// --- Verification ----------------------------------------------------------

/// A triviality test returning a witness string for nontrivial words.
struct Oracle {
  std::string name;
  /// Passing only proves a necessary condition.
  bool necessary_only = false;
  std::function<std::optional<std::string>(const Word&)> witness;
};

Oracle grigorchuk_oracle();
Oracle dyadic_oracle(AffineImages images);
/// Abelianization lattice of `reference`.
Oracle abelian_oracle(const FinitePresentation& reference);

struct VerificationFailure {
  Word relator;
  std::size_t depth = 0;
  std::string witness;
};

struct VerificationReport {
  std::size_t total = 0;
  bool necessary_only = false;
  std::vector<VerificationFailure> failures;

  bool verified() const { return failures.empty(); }
};

/// Expands lp to `depth`, pulls each relator back through `pull` when given,
/// and runs the oracle on it.
VerificationReport verify_lpres(const LPresentation& lp, std::size_t depth, const Oracle& oracle,
                                const PullbackSpec* pull = nullptr, Dedup dedup = Dedup::exact,
                                unsigned jobs = 1);

/// `FAIL <depth> <relator> <witness>` per failure, then `OK <count>` when
/// clean.
std::string print_report(const VerificationReport& report);

}  // namespace lpres
