#include "lpres/dyadic.hpp"

namespace lpres {

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const auto tz = mpz_scan1(num_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), tz);
    exp_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::scaled(std::int64_t k) const {
  if (is_zero()) return {};
  Dyadic r = *this;
  r.exp_ += k;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto e = std::min(a.exp_, b.exp_);
  mpz_class x = a.num_, y = b.num_;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp_ - e));
  mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp_ - e));
  return Dyadic(x + y, e);
}

std::string Dyadic::str() const {
  if (exp_ >= 0) {
    mpz_class v = num_;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
    return v.get_str();
  }
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
  return num_.get_str() + "/" + den.get_str();
}

AffineMap AffineMap::inverse() const { return {-k, (-q).scaled(-k)}; }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.k + g.k, g.q.scaled(f.k) + f.q};
}

std::vector<AffineMap> dyadic_eval(const Word& w, const AffineImages& images) {
  std::optional<std::size_t> factors;
  for (const auto& [g, maps] : images) {
    if (factors && *factors != maps.size())
      throw PreconditionError("affine images disagree on the number of factors");
    factors = maps.size();
  }
  std::vector<AffineMap> acc(factors.value_or(0));
  for (const auto& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end())
      throw AlphabetMismatch("no affine image for generator " + to_string(l.gen));
    for (std::size_t f = 0; f < acc.size(); ++f) {
      const AffineMap& m = it->second[f];
      acc[f] = compose(acc[f], l.sign > 0 ? m : m.inverse());
    }
  }
  return acc;
}

bool dyadic_is_trivial(const Word& w, const AffineImages& images) {
  for (const auto& m : dyadic_eval(w, images))
    if (!m.is_identity()) return false;
  return true;
}

AffineImages bs12_images() {
  return {{Generator("a"), {AffineMap{0, Dyadic(1)}}}, {Generator("t"), {AffineMap{-1, Dyadic(0)}}}};
}

AffineImages bs12_square_images() {
  const AffineMap id;
  const AffineMap shift{0, Dyadic(1)};
  const AffineMap halve{-1, Dyadic(0)};
  return {{Generator("a"), {shift, id}},
          {Generator("t"), {halve, id}},
          {Generator("b"), {id, shift}},
          {Generator("u"), {id, halve}}};
}

}  // namespace lpres
