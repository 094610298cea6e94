#include <memory>
#include <sstream>

#include "lpres/oracles.hpp"
#include "lpres/presfmt.hpp"
#include "parallel.hpp"

namespace lpres {

Oracle grigorchuk_oracle() {
  return {"grigorchuk", false, [](const Word& w) -> std::optional<std::string> {
            if (auto level = grig_witness(w)) return "moves a vertex at level " + std::to_string(*level);
            return std::nullopt;
          }};
}

Oracle dyadic_oracle(AffineImages images) {
  auto shared = std::make_shared<const AffineImages>(std::move(images));
  return {"dyadic", false, [shared](const Word& w) -> std::optional<std::string> {
            const auto maps = dyadic_eval(w, *shared);
            for (std::size_t f = 0; f < maps.size(); ++f) {
              if (!maps[f].is_identity())
                return "factor " + std::to_string(f + 1) + ": x -> 2^" + std::to_string(maps[f].k) +
                       "*x + " + maps[f].q.str();
            }
            return std::nullopt;
          }};
}

Oracle abelian_oracle(const FinitePresentation& reference) {
  auto lattice = std::make_shared<const RowLattice>(relator_matrix(reference));
  auto gens = std::make_shared<const std::vector<Generator>>(reference.generators);
  return {"abelian", true, [lattice, gens](const Word& w) -> std::optional<std::string> {
            const auto v = exponent_vector(w, *gens);
            if (lattice->contains(v)) return std::nullopt;
            std::string text = "exponent vector (";
            for (std::size_t i = 0; i < v.size(); ++i) text += (i ? ", " : "") + v[i].get_str();
            return text + ") outside the relator lattice";
          }};
}

VerificationReport verify_lpres(const LPresentation& lp, std::size_t depth, const Oracle& oracle,
                                const PullbackSpec* pull, Dedup dedup, unsigned jobs) {
  const auto expansion = expand(lp, depth, dedup, jobs);
  VerificationReport report;
  report.total = expansion.relators.size();
  report.necessary_only = oracle.necessary_only;

  std::vector<std::optional<std::string>> verdicts(expansion.relators.size());
  detail::parallel_for(verdicts.size(), jobs, [&](std::size_t i) {
    const Word& r = expansion.relators[i];
    verdicts[i] = oracle.witness(pull ? pullback(r, *pull) : r);
  });
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i])
      report.failures.push_back({expansion.relators[i], expansion.origin[i], *verdicts[i]});
  }
  return report;
}

std::string print_report(const VerificationReport& report) {
  std::ostringstream out;
  if (report.necessary_only) out << "# necessary condition only: passing does not prove triviality\n";
  for (const auto& f : report.failures)
    out << "FAIL " << f.depth << " " << print_word(f.relator) << " " << f.witness << "\n";
  if (report.verified()) out << "OK " << report.total << "\n";
  return out.str();
}

}  // namespace lpres
