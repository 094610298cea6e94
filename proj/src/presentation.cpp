#include "lpres/presentation.hpp"

#include <algorithm>
#include <set>

#include "lpres/presfmt.hpp"
#include "parallel.hpp"

namespace lpres {

std::int64_t FinitePresentation::total_degree(const Word& w) const {
  if (!degree) throw PreconditionError("presentation has no degree map");
  std::int64_t total = 0;
  for (const auto& l : w) {
    auto it = degree->find(l.gen);
    if (it == degree->end())
      throw PreconditionError("no degree for generator " + to_string(l.gen));
    total += l.sign * it->second;
  }
  return total;
}

std::vector<FreeEndomorphism> LPresentation::endomorphisms() const {
  std::vector<FreeEndomorphism> out;
  out.reserve(endos.size());
  for (const auto& e : endos) out.push_back(e.map);
  return out;
}

std::size_t ExpansionReport::generated_total() const {
  std::size_t n = 0;
  for (const auto& c : counts) n += c.generated;
  return n;
}

Word cyclic_key(const Word& w) {
  const Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word best = c;
  for (const Word& base : {c, invert(c)}) {
    const auto& ls = base.letters();
    for (std::size_t r = 0; r < ls.size(); ++r) {
      std::vector<Letter> rot(ls.begin() + r, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + r);
      Word cand(std::move(rot));
      if (cand < best) best = std::move(cand);
    }
  }
  return best;
}

namespace {

class RelatorSet {
 public:
  explicit RelatorSet(Dedup mode) : mode_(mode) {}

  /// Returns true when w was new.
  bool add(const Word& w) {
    if (w.empty()) return false;
    const Word key = mode_ == Dedup::exact ? w : cyclic_key(w);
    return seen_.insert(key).second;
  }

 private:
  Dedup mode_;
  std::set<Word> seen_;
};

}  // namespace

ExpansionReport expand(const LPresentation& lp, std::size_t depth, Dedup dedup, unsigned jobs) {
  ExpansionReport report;
  report.depth = depth;
  report.dedup = dedup;
  report.generators = lp.generators;

  const auto phi = lp.endomorphisms();
  const auto layers = monoid_layers(phi, lp.generators, depth);
  RelatorSet seen(dedup);

  for (const auto& layer : layers) {
    DepthCount count;
    count.depth = layer.depth;
    count.generated = layer.examined * lp.seeds.size();

    auto keep = [&](const Word& w) {
      if (seen.add(w)) {
        report.relators.push_back(w);
        report.origin.push_back(layer.depth);
        ++count.kept;
      }
    };

    if (layer.depth == 0) {
      count.generated += lp.fixed.size();
      for (const auto& q : lp.fixed) keep(q);
    }

    // images[k * E + e] = layer.elements[e](seeds[k])
    const std::size_t e_count = layer.elements.size();
    std::vector<Word> images(lp.seeds.size() * e_count);
    detail::parallel_for(images.size(), jobs, [&](std::size_t idx) {
      images[idx] = layer.elements[idx % e_count].apply(lp.seeds[idx / e_count]);
    });

    for (std::size_t k = 0; k < lp.seeds.size(); ++k) {
      std::vector<std::pair<std::string, const Word*>> ordered;
      ordered.reserve(e_count);
      for (std::size_t e = 0; e < e_count; ++e) {
        const Word& w = images[k * e_count + e];
        ordered.emplace_back(print_word(w), &w);
      }
      std::stable_sort(ordered.begin(), ordered.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [text, w] : ordered) keep(*w);
    }
    report.counts.push_back(count);
  }
  return report;
}

Classification classify(const LPresentation& lp) { return {true, lp.ascending()}; }

Word substitute(const Word& w, const std::map<Generator, Word>& images) {
  Word out;
  for (const auto& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw AlphabetMismatch("no image for generator " + to_string(l.gen));
    out.append(l.sign > 0 ? it->second : invert(it->second));
  }
  return out;
}

bool check_dyck_hom(const FinitePresentation& p, const std::map<Generator, Word>& images,
                    const TrivialityTest& is_trivial) {
  for (const auto& g : p.generators) {
    if (!images.count(g)) throw PreconditionError("partial image map: no image for " + to_string(g));
  }
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word& r) { return is_trivial(substitute(r, images)); });
}

FinitePresentation hnn_embed(const LPresentation& lp) {
  if (!lp.ascending())
    throw PreconditionError("HNN embedding needs an ascending L-presentation (fixed relators present)");
  FinitePresentation out;
  out.generators = lp.generators;
  const std::set<Generator> taken(lp.generators.begin(), lp.generators.end());
  std::vector<Generator> stable;
  for (const auto& e : lp.endos) {
    Generator t("t_" + e.name);
    if (taken.count(t)) throw PreconditionError("stable letter " + t.name + " clashes with a generator");
    stable.push_back(t);
    out.generators.push_back(t);
  }
  out.relators = lp.seeds;
  for (std::size_t i = 0; i < lp.endos.size(); ++i) {
    const Word t = Word::of(stable[i]);
    for (const auto& x : lp.generators) {
      Word r = invert(t);
      r.append(Word::of(x));
      r.append(t);
      r.append(invert(lp.endos[i].map.image(x)));
      out.relators.push_back(std::move(r));
    }
  }
  return out;
}

FinitePresentation truncate(const LPresentation& lp) {
  FinitePresentation out;
  out.generators = lp.generators;
  out.relators = lp.fixed;
  out.relators.insert(out.relators.end(), lp.seeds.begin(), lp.seeds.end());
  return out;
}

}  // namespace lpres
