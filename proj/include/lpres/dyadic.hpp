#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpres/freegroup.hpp"

namespace lpres {

/// numerator · 2^exponent, kept with an odd numerator (or 0 · 2^0) so that
/// equality is structural.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : num_(v) { normalize(); }
  Dyadic(mpz_class num, std::int64_t exponent) : num_(std::move(num)), exp_(exponent) {
    normalize();
  }

  const mpz_class& numerator() const { return num_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  /// this · 2^k
  Dyadic scaled(std::int64_t k) const;
  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }

  /// "3", "-5", "3/8"
  std::string str() const;

 private:
  void normalize();

  mpz_class num_ = 0;
  std::int64_t exp_ = 0;
};

/// x ↦ 2^k·x + q, a faithful picture of BS(1,2) = ℤ[½] ⋊ ℤ.
struct AffineMap {
  std::int64_t k = 0;
  Dyadic q;

  static AffineMap identity() { return {}; }
  AffineMap inverse() const;
  bool is_identity() const { return k == 0 && q.is_zero(); }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (f∘g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

/// One affine map per direct factor for each generator.
using AffineImages = std::map<Generator, std::vector<AffineMap>>;

/// Composes the images along w, leftmost letter outermost, so that the
/// conjugate t⁻¹at is evaluated as img(t)⁻¹∘img(a)∘img(t).
std::vector<AffineMap> dyadic_eval(const Word& w, const AffineImages& images);

bool dyadic_is_trivial(const Word& w, const AffineImages& images);

/// a = (0,1), t = (-1,0) in one factor, the anchor a^t = a².
AffineImages bs12_images();
/// BS(1,2)²: a, t act on the first factor and b, u on the second.
AffineImages bs12_square_images();

}  // namespace lpres
