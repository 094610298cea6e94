#include <algorithm>
#include <utility>

#include "lpres/oracles.hpp"

namespace lpres {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix dimension mismatch");
  IntegerMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const auto n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct Reducer {
  IntegerMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i += q · row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += q * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += q * u(j, c);
  }
  // col_i += q · col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += q * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += q * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {{i, j}};
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }
};

}  // namespace

SmithForm snf(const IntegerMatrix& m) {
  Reducer r{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const auto steps = std::min(m.rows(), m.cols());
  std::size_t rank = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    if (!r.place_pivot(t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r.a.rows(); ++i) {
        if (r.a(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r.a(i, t).get_mpz_t(), r.a(t, t).get_mpz_t());
        r.add_row(i, t, -q);
        if (r.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < r.a.cols(); ++j) {
        if (r.a(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r.a(t, j).get_mpz_t(), r.a(t, t).get_mpz_t());
        r.add_col(j, t, -q);
        if (r.a(t, j) != 0) clean = false;
      }
      if (!clean) {
        r.place_pivot(t);
        continue;
      }
      // Enforce d_t | every entry of the trailing block.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < r.a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < r.a.cols(); ++j)
          if (r.a(i, j) % r.a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      r.add_row(t, *bad_row, 1);
    }
    if (r.a(t, t) < 0) r.negate_row(t);
    ++rank;
  }
  return {std::move(r.u), std::move(r.a), std::move(r.v), rank};
}

RowLattice::RowLattice(IntegerMatrix m) : m_(std::move(m)), smith_(snf(m_)) {}

std::optional<std::vector<mpz_class>> RowLattice::coefficients(std::span<const mpz_class> v) const {
  if (v.size() != m_.cols())
    throw PreconditionError("vector has " + std::to_string(v.size()) + " entries, lattice lives in dimension " +
                            std::to_string(m_.cols()));
  // x·M = v  ⇔  y·D = v·V with y = x·U⁻¹.
  std::vector<mpz_class> w(m_.cols());
  for (std::size_t j = 0; j < m_.cols(); ++j)
    for (std::size_t k = 0; k < m_.cols(); ++k) w[j] += v[k] * smith_.v(k, j);
  std::vector<mpz_class> y(m_.rows());
  for (std::size_t j = 0; j < m_.cols(); ++j) {
    if (j < smith_.rank) {
      const auto& d = smith_.d(j, j);
      if (w[j] % d != 0) return std::nullopt;
      y[j] = w[j] / d;
    } else if (w[j] != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x(m_.rows());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t k = 0; k < m_.rows(); ++k) x[i] += y[k] * smith_.u(k, i);
  return x;
}

bool RowLattice::contains(std::span<const mpz_class> v) const { return coefficients(v).has_value(); }

std::vector<mpz_class> exponent_vector(const Word& w, const std::vector<Generator>& generators) {
  std::vector<mpz_class> v(generators.size());
  for (const auto& l : w) {
    auto it = std::find(generators.begin(), generators.end(), l.gen);
    if (it == generators.end())
      throw AlphabetMismatch("generator " + to_string(l.gen) + " is not in the reference presentation");
    v[static_cast<std::size_t>(it - generators.begin())] += l.sign;
  }
  return v;
}

IntegerMatrix relator_matrix(const FinitePresentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto v = exponent_vector(p.relators[i], p.generators);
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  return m;
}

bool in_relator_lattice(std::span<const mpz_class> v, const FinitePresentation& p) {
  return RowLattice(relator_matrix(p)).contains(v);
}

}  // namespace lpres
