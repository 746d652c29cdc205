#include "chev/torsion.hpp"

#include "chev/sampling.hpp"

#include <stdexcept>

namespace chev {

bool criterion(const WeylElement& w) { return !has_eigenvalue_one(w); }

std::string to_string(SurveyVerdict v) {
  switch (v) {
    case SurveyVerdict::AllFiniteUniform:
      return "all-finite-uniform";
    case SurveyVerdict::InfiniteWitnessFound:
      return "infinite-witness-found";
    case SurveyVerdict::NonUniform:
      return "non-uniform";
  }
  return "unknown";
}

namespace {

bool torus_collapses(const ChevalleyBasis& cb, const WeylElement& w, unsigned long m, RootId beta,
                     const Rational& lambda) {
  const RootSystem& R = cb.roots();
  GroupElement prod = cb.identity();
  WeylElement wi = identity_element(R);
  for (unsigned long i = 1; i <= m; ++i) {
    wi = compose(wi, w);
    prod = prod * cb.h(apply(R, wi, beta), lambda);
  }
  return prod.is_identity();
}

}  // namespace

RepresentativeSurvey survey(const ChevalleyBasis& cb, const WeylElement& w, std::size_t torus_samples,
                            std::uint64_t seed) {
  if (torus_samples == 0) throw std::invalid_argument("survey needs at least one torus sample");
  if (w.matrix().is_identity()) throw std::invalid_argument("survey rejects the identity of W");
  const RootSystem& R = cb.roots();
  RepresentativeSurvey out;
  out.word = w.word();
  out.m = order(w);
  out.eigenvalue_one = has_eigenvalue_one(w);
  out.seed = seed;

  SampleRng rng(seed);
  const GroupElement n0 = cb.lift_word(w.word());
  const GroupElement n0m = n0.pow(out.m);
  bool identities = true;
  for (std::size_t s = 0; s < torus_samples; ++s) {
    TorusSample sample;
    GroupElement h = cb.identity();
    for (int j = 0; j < R.rank(); ++j) {
      RootId beta = rng.below(R.size());
      Rational lambda = rng.smooth_unit();
      sample.factors.emplace_back(beta, lambda);
      h = h * cb.h(beta, lambda);
    }
    GroupElement g = n0 * h;
    sample.order = torsion_order(g.matrix());
    sample.power_identity = g.pow(out.m) == n0m;
    sample.torus_collapse = true;
    for (const auto& [beta, lambda] : sample.factors) {
      sample.torus_collapse = sample.torus_collapse && torus_collapses(cb, w, out.m, beta, lambda);
    }
    identities = identities && sample.power_identity && sample.torus_collapse;
    out.samples.push_back(std::move(sample));
  }

  bool all_finite = true;
  bool uniform = true;
  for (const auto& s : out.samples) {
    if (!s.order.finite) {
      all_finite = false;
    } else if (!out.common_order) {
      out.common_order = s.order.order;
    } else if (*out.common_order != s.order.order) {
      uniform = false;
    }
  }
  if (!all_finite) {
    out.verdict = SurveyVerdict::InfiniteWitnessFound;
    out.common_order.reset();
  } else if (!uniform) {
    out.verdict = SurveyVerdict::NonUniform;
    out.common_order.reset();
  } else {
    out.verdict = SurveyVerdict::AllFiniteUniform;
  }

  if (out.eigenvalue_one) {
    out.invariants_hold = true;  // the survey makes no claim here
  } else if (out.common_order) {
    const Integer m = out.m;
    const Integer& r = *out.common_order;
    bool in_set = r == m || r == 2 * m;
    bool divides = mpz_divisible_p(Integer(m * m).get_mpz_t(), r.get_mpz_t()) != 0;
    bool odd_rule = out.m % 2 == 0 || r == m;
    out.invariants_hold = identities && in_set && divides && odd_rule;
  }
  return out;
}

InfiniteWitness infinite_witness(const ChevalleyBasis& cb, const WeylElement& w) {
  if (!has_eigenvalue_one(w)) throw std::invalid_argument("infinite_witness needs an eigenvalue 1");
  const RootSystem& R = cb.roots();
  InfiniteWitness out;
  for (RootId beta : R.positive_roots()) {
    QVector sum = orbit_sum(w, R.vector(beta));
    if (is_zero(sum)) continue;
    out.beta = beta;
    out.orbit_sum = std::move(sum);
    out.g = cb.lift_word(w.word()) * cb.h(beta, Rational(2));
    out.order = torsion_order(out.g.matrix());
    out.success = !out.order.finite;
    return out;
  }
  throw std::logic_error("no root with nonzero orbit sum although w has eigenvalue 1");
}

std::vector<ScanRow> full_scan(const ChevalleyBasis& cb, std::size_t max_group_size, std::size_t torus_samples,
                               std::uint64_t seed) {
  const RootSystem& R = cb.roots();
  std::vector<WeylElement> elements = enumerate(R, max_group_size);
  std::vector<ScanRow> rows;
  rows.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const WeylElement& w = elements[k];
    ScanRow row;
    row.word = w.word();
    row.m = order(w);
    row.criterion = criterion(w);
    row.orbit_sum_zero = true;
    for (int i = 1; i <= R.rank(); ++i) {
      row.orbit_sum_zero = row.orbit_sum_zero && is_zero(orbit_sum(w, R.vector(R.simple(i))));
    }
    if (row.criterion) {
      row.survey = survey(cb, w, torus_samples, seed + k);
    } else if (!w.matrix().is_identity()) {
      row.witness_ok = infinite_witness(cb, w).success;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace chev
