#include "lpres/derive.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "lpres/presfmt.hpp"

namespace lpres {

NormalizedPresentation neumann_normalize(const FinitePresentation& p, const Generator& t) {
  if (!p.degree) throw PreconditionError("presentation has no degree map ('deg' line)");
  if (std::find(p.generators.begin(), p.generators.end(), t) == p.generators.end())
    throw PreconditionError("distinguished generator " + to_string(t) + " is not a generator");
  const auto& deg = *p.degree;
  auto degree_of = [&](const Generator& g) {
    auto it = deg.find(g);
    return it == deg.end() ? std::int64_t{0} : it->second;
  };
  const auto dt = degree_of(t);
  if (dt != 1 && dt != -1)
    throw PreconditionError("degree of " + to_string(t) + " must be 1 or -1, got " +
                            std::to_string(dt));
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    const auto d = p.total_degree(p.relators[k]);
    if (d != 0)
      throw PreconditionError("relator " + std::to_string(k + 1) + " (" +
                              print_word(p.relators[k]) + ") has total degree " +
                              std::to_string(d) + "; the degree map must kill every relator");
  }

  NormalizedPresentation np;
  np.t = t;
  np.t_inverted = dt == -1;
  const Word t_word = Word::of(t, np.t_inverted ? -1 : 1);  // new t in old letters

  const std::set<Generator> taken(p.generators.begin(), p.generators.end());
  std::map<Generator, Word> subst;  // old generator → word in new generators
  subst.emplace(t, Word::of(t, np.t_inverted ? -1 : 1));
  for (const auto& g : p.generators) {
    if (g == t) continue;
    const auto d = degree_of(g);
    if (d == 0) {
      np.base.push_back(g);
      np.origin.emplace(g, Word::of(g));
      subst.emplace(g, Word::of(g));
      continue;
    }
    std::string name = g.name + "_" + t.name;
    while (taken.count(Generator(name)) ||
           std::find(np.base.begin(), np.base.end(), Generator(name)) != np.base.end())
      name += "_";
    Generator b(name);
    b.level = g.level;
    np.base.push_back(b);
    // b = g·t_new^-d, so g = b·t_new^d.
    Word in_old = Word::of(g);
    in_old.append(power(t_word, -d));
    np.origin.emplace(b, std::move(in_old));
    Word in_new = Word::of(b);
    in_new.append(Word::of(t, d));
    subst.emplace(g, std::move(in_new));
  }
  for (const auto& r : p.relators) np.relators.push_back(substitute(r, subst));
  return np;
}

Word rs_rewrite(const Word& w, const Generator& t) {
  if (const auto e = exp_sum(w, t); e != 0)
    throw PreconditionError("cannot rewrite " + print_word(w) + ": t-exponent sum is " +
                            std::to_string(e));
  Word out;
  std::int64_t c = 0;
  for (const auto& l : w) {
    if (l.gen == t) {
      c += l.sign;
      continue;
    }
    if (l.gen.indexed())
      throw AlphabetMismatch("cannot rewrite already indexed letter " + to_string(l.gen));
    out.push({Generator(l.gen.name, -c), l.sign});
  }
  return out;
}

Word rs_rewrite(const Word& w, const NormalizedPresentation& np) {
  for (const auto& l : w) {
    if (l.gen != np.t && std::find(np.base.begin(), np.base.end(), l.gen) == np.base.end())
      throw AlphabetMismatch("letter " + to_string(l.gen) + " is neither t nor a base generator");
  }
  return rs_rewrite(w, np.t);
}

Word shift(const Word& w, std::int64_t k) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!l.gen.indexed()) throw AlphabetMismatch("cannot shift unindexed letter " + to_string(l.gen));
    out.push_back({Generator(l.gen.name, *l.gen.level + k), l.sign});
  }
  return Word(std::move(out));
}

std::int64_t window_bound(std::span<const Word> words) {
  std::int64_t n = 0;
  for (const auto& w : words)
    for (const auto& l : w)
      if (l.gen.indexed()) n = std::max(n, *l.gen.level < 0 ? -*l.gen.level : *l.gen.level);
  return n;
}

Gamma::Gamma(CertificateSet certs) : certs_(std::move(certs)) { certs_.validate(); }

const Word& Gamma::operator()(const std::string& base, std::int64_t level) {
  const auto n = certs_.window.bound;
  if (std::find(certs_.window.base.begin(), certs_.window.base.end(), base) ==
      certs_.window.base.end())
    throw AlphabetMismatch("no certificates for base generator " + base);
  const auto key = std::make_pair(base, level);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  if (level >= -n && level <= n) return memo_.emplace(key, Word::of(Generator(base, level))).first->second;
  if (level == n + 1) return memo_.emplace(key, certs_.up.at(base)).first->second;
  if (level == -(n + 1)) return memo_.emplace(key, certs_.down.at(base)).first->second;

  // γ(a@i) = γ(s^±1(γ(a@(i∓1)))), unrolled from the boundary outwards.
  const std::int64_t step = level > 0 ? 1 : -1;
  std::int64_t from = step > 0 ? n + 1 : -(n + 1);
  while (memo_.count({base, from + step})) from += step;
  for (std::int64_t i = from + step; step > 0 ? i <= level : i >= level; i += step) {
    Word prev = (*this)(base, i - step);
    Word next = apply(shift(prev, step));
    memo_.emplace(std::make_pair(base, i), std::move(next));
  }
  return memo_.at(key);
}

Word Gamma::apply(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!l.gen.indexed()) throw AlphabetMismatch("gamma needs indexed letters, got " + to_string(l.gen));
    const Word& img = (*this)(l.gen.name, *l.gen.level);
    out.append(l.sign > 0 ? img : invert(img));
  }
  return out;
}

ShiftEndomorphisms build_endos(const CertificateSet& certs) {
  certs.validate();
  const auto n = certs.window.bound;
  const auto alphabet = certs.window.generators();
  std::map<Generator, Word> eta, tau;
  for (const auto& g : alphabet) {
    const auto i = *g.level;
    eta.emplace(g, i < n ? Word::of(Generator(g.name, i + 1)) : certs.up.at(g.name));
    tau.emplace(g, i > -n ? Word::of(Generator(g.name, i - 1)) : certs.down.at(g.name));
  }
  return {FreeEndomorphism(alphabet, std::move(eta)), FreeEndomorphism(alphabet, std::move(tau))};
}

DerivedLPresentation derive_lpres(const FinitePresentation& p, const Generator& t,
                                  const CertificateSet& certs,
                                  std::optional<std::int64_t> requested_bound) {
  DerivedLPresentation out;
  out.source = neumann_normalize(p, t);

  std::vector<Word> seeds;
  for (const auto& r : out.source.relators) seeds.push_back(rs_rewrite(r, out.source));
  out.n_min = window_bound(seeds);

  std::set<std::string> want;
  for (const auto& b : out.source.base) {
    if (b.indexed()) throw PreconditionError("base generator " + to_string(b) + " is indexed");
    want.insert(b.name);
  }
  const std::set<std::string> have(certs.window.base.begin(), certs.window.base.end());
  if (want != have) {
    std::string names;
    for (const auto& b : out.source.base) names += (names.empty() ? "" : ", ") + b.name;
    throw PreconditionError("certificates must cover exactly the base generators {" + names + "}");
  }
  const auto n = certs.window.bound;
  if (requested_bound && *requested_bound != n)
    throw PreconditionError("requested N = " + std::to_string(*requested_bound) +
                            " but certificates are written for N = " + std::to_string(n));
  if (n < out.n_min)
    throw PreconditionError("window bound N = " + std::to_string(n) +
                            " is too small; the rewritten relators need N_min = " +
                            std::to_string(out.n_min));

  out.certs = certs;
  out.certs.window.base.clear();
  for (const auto& b : out.source.base) out.certs.window.base.push_back(b.name);
  out.certs.validate();

  auto endos = build_endos(out.certs);
  out.eta = endos.eta;
  out.tau = endos.tau;
  out.lp.generators = out.certs.window.generators();
  out.lp.seeds = std::move(seeds);
  out.lp.endos = {{"eta", std::move(endos.eta)}, {"tau", std::move(endos.tau)}};
  return out;
}

bool lemma5_check(const CertificateSet& certs, std::span<const Word> seeds, std::int64_t lo,
                  std::int64_t hi) {
  Gamma gamma(certs);
  const auto endos = build_endos(certs);
  for (const auto& r : seeds) {
    if (lo <= 0 && 0 <= hi && gamma.apply(r) != r) return false;
    Word up = r;
    for (std::int64_t i = 1; i <= hi; ++i) {
      up = endos.eta.apply(up);
      if (i >= lo && gamma.apply(shift(r, i)) != up) return false;
    }
    Word down = r;
    for (std::int64_t i = -1; i >= lo; --i) {
      down = endos.tau.apply(down);
      if (i <= hi && gamma.apply(shift(r, i)) != down) return false;
    }
  }
  return true;
}

PullbackSpec derived_pullback(const NormalizedPresentation& np) {
  PullbackSpec spec;
  spec.stable = Word::of(np.t, np.t_inverted ? -1 : 1);
  for (const auto& [b, w] : np.origin)
    if (w != Word::of(b)) spec.indexed.emplace(b.name, w);
  return spec;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string provenance_comment(const DerivedLPresentation& d, std::string_view input_text) {
  std::string out;
  out += "# derived kernel L-presentation\n";
  out += "# input fnv1a64: " + hex64(fnv1a(input_text)) + "\n";
  out += "# t: " + to_string(d.source.t) + (d.source.t_inverted ? " (inverted, degree was -1)" : "") + "\n";
  out += "# N: " + std::to_string(d.certs.window.bound) + " (N_min " + std::to_string(d.n_min) + ")\n";
  for (const auto& [b, w] : d.source.origin)
    if (w != Word::of(b)) out += "# base " + to_string(b) + " = " + print_word(w) + "\n";
  for (const auto& b : d.certs.window.base) {
    out += "# cert " + b + ": up " + hex64(fnv1a(print_word(d.certs.up.at(b)))) + ", down " +
           hex64(fnv1a(print_word(d.certs.down.at(b)))) + "\n";
  }
  return out;
}

}  // namespace lpres
