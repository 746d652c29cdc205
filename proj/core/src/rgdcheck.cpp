#include "chev/rgdcheck.hpp"

#include "chev/relations.hpp"
#include "chev/sampling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chev {

namespace {

// Draws corner scalars ±1, ±p^3, ±p^-3 first, then seeded random ones.
class ScalarStream {
 public:
  ScalarStream(long prime, std::uint64_t seed) : prime_(prime), rng_(seed) {}

  Rational next_nonzero() {
    if (corner_ < 6) {
      static const long kExp[] = {0, 0, 3, 3, -3, -3};
      Rational c = qpow(Rational(prime_), kExp[corner_]);
      bool negative = corner_ % 2 == 1;
      ++corner_;
      return negative ? Rational(-c) : c;
    }
    if (rng_.coin()) return rng_.with_valuation(prime_, rng_.range(-3, 3));
    return rng_.small_rational(12, true);
  }

  /// Nonzero scalar with valuation at least k.
  Rational at_least(long k) { return rng_.with_valuation(prime_, k + rng_.range(0, 2)); }

  SampleRng& rng() { return rng_; }

 private:
  long prime_;
  SampleRng rng_;
  int corner_ = 0;
};

std::uint64_t axiom_seed(std::uint64_t seed, std::uint64_t axiom) { return seed * 0x9E3779B97F4A7C15ULL + axiom; }

std::vector<std::pair<RootId, RootId>> nonopposite_pairs(const RootSystem& R) {
  std::vector<std::pair<RootId, RootId>> out;
  for (RootId a = 0; a < R.size(); ++a) {
    for (RootId b = 0; b < R.size(); ++b) {
      if (a != b && a != R.negate(b)) out.emplace_back(a, b);
    }
  }
  return out;
}

// [x_α(λ), x_β(μ)] with the inverses written as x(-λ), x(-μ).
GroupElement root_commutator(const ChevalleyBasis& cb, RootId a, const Rational& l, RootId b, const Rational& m) {
  return cb.x(a, l) * cb.x(b, m) * cb.x(a, Rational(-l)) * cb.x(b, Rational(-m));
}

std::string scalars(const Rational& l, const Rational& m) {
  return "lambda=" + l.get_str() + " mu=" + m.get_str();
}

class ConstantCache {
 public:
  explicit ConstantCache(const ChevalleyBasis& cb) : cb_(cb) {}
  const std::vector<CommutatorTerm>& get(RootId a, RootId b) {
    auto it = cache_.find({a, b});
    if (it == cache_.end()) it = cache_.emplace(std::make_pair(a, b), commutator_constants(cb_, a, b)).first;
    return it->second;
  }

 private:
  const ChevalleyBasis& cb_;
  std::map<std::pair<RootId, RootId>, std::vector<CommutatorTerm>> cache_;
};

}  // namespace

ExtInt RootGroupValuation::phi(RootId alpha, const GroupElement& g) const {
  auto lambda = cb_->recover_parameter(alpha, g);
  if (!lambda) throw std::invalid_argument("element is not in the root group U_" + cb_->roots().name(alpha));
  return v_(*lambda);
}

bool RootGroupValuation::filtration_member(RootId alpha, long k, const GroupElement& g) const {
  return phi(alpha, g) >= ExtInt(k);
}

bool all_pass(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.pass; });
}

std::vector<AxiomReport> check_rgd(const ChevalleyBasis& cb, long prime, std::size_t budget, std::uint64_t seed) {
  const RootSystem& R = cb.roots();
  std::vector<AxiomReport> out;
  ConstantCache constants(cb);

  {
    AxiomReport rep{"RGD0", 0, true, false, "", seed};
    for (RootId a = 0; a < R.size() && rep.pass; ++a) {
      ++rep.samples;
      if (cb.x(a, Rational(1)).is_identity()) {
        rep.pass = false;
        rep.detail = "x[" + R.name(a) + "](1) is the identity";
      }
    }
    if (rep.pass) rep.detail = "U_alpha != 1 for all " + std::to_string(R.size()) + " roots";
    out.push_back(rep);
  }

  {
    AxiomReport rep{"RGD1", 0, true, false, "", seed};
    ScalarStream s(prime, axiom_seed(seed, 1));
    auto pairs = nonopposite_pairs(R);
    const std::size_t n = pairs.empty() ? 0 : std::max(budget, pairs.size());
    std::size_t commuting = 0;
    for (std::size_t k = 0; k < n && rep.pass; ++k) {
      auto [a, b] = pairs[k % pairs.size()];
      Rational l = s.next_nonzero();
      Rational m = s.next_nonzero();
      ++rep.samples;
      const auto& terms = constants.get(a, b);
      if (terms.empty()) ++commuting;
      if (root_commutator(cb, a, l, b, m) != commutator_product(cb, terms, l, m)) {
        rep.pass = false;
        rep.detail = "commutator of (" + R.name(a) + ", " + R.name(b) + ") at " + scalars(l, m) +
                     " leaves the interval product";
      }
    }
    if (pairs.empty()) {
      rep.detail = "vacuous: no pair of non-opposite roots";
    } else if (rep.pass) {
      rep.detail = std::to_string(pairs.size()) + " root pairs, " + std::to_string(commuting) +
                   " samples on commuting pairs";
    }
    out.push_back(rep);
  }

  {
    AxiomReport rep{"RGD2", 0, true, false, "", seed};
    ScalarStream s(prime, axiom_seed(seed, 2));
    const std::size_t n = std::max(budget, R.size() * R.size());
    for (std::size_t k = 0; k < n && rep.pass; ++k) {
      RootId a = (k / R.size()) % R.size();
      RootId b = k % R.size();
      Rational l = s.next_nonzero();
      Rational mu = s.next_nonzero();
      ++rep.samples;
      RootId na = R.negate(a);
      Rational c = -1 / l;
      GroupElement u = cb.x(a, l);
      GroupElement mu_u = cb.m(na, c);  // m(u) = m_{-α}(-λ⁻¹)
      if (mu_u != cb.x(na, c) * u * cb.x(na, c)) {
        rep.pass = false;
        rep.detail = "m(u) not in U_{-a} u U_{-a} for a=" + R.name(a) + " lambda=" + l.get_str();
        break;
      }
      GroupElement conj = mu_u * cb.x(b, mu) * cb.m(na, Rational(-c));
      RootId target = R.reflect(a, b);
      if (!cb.recover_parameter(target, conj)) {
        rep.pass = false;
        rep.detail = "m(u) U_" + R.name(b) + " m(u)^-1 is not inside U_" + R.name(target) + " at " + scalars(l, mu);
      }
    }
    if (rep.pass) rep.detail = "m(u)=m_{-a}(-1/lambda) verified on all (alpha,beta)";
    out.push_back(rep);
  }

  {
    AxiomReport rep{"RGD3", 0, true, false, "", seed};
    for (int i = 1; i <= R.rank() && rep.pass; ++i) {
      ++rep.samples;
      RootId a = R.simple(i);
      if (!triangularity_check(cb, cb.x(a, Rational(1))) || triangularity_check(cb, cb.x(R.negate(a), Rational(1)))) {
        rep.pass = false;
        rep.detail = "U_{-a" + std::to_string(i) + "} not separated from U_+";
      }
    }
    if (rep.pass) rep.detail = "x_{-a_i}(1) is not upper unitriangular for every simple root";
    out.push_back(rep);
  }

  out.push_back({"RGD4", 0, true, true, "holds by construction: G is generated by T and the root groups", seed});
  return out;
}

std::vector<AxiomReport> check_vrgd(const RootGroupValuation& rgv, std::size_t budget, std::uint64_t seed) {
  const ChevalleyBasis& cb = rgv.basis();
  const RootSystem& R = cb.roots();
  const Valuation& v = rgv.valuation();
  const long p = v.prime();
  std::vector<AxiomReport> out;
  ConstantCache constants(cb);

  {
    AxiomReport rep{"VRGD0", 0, true, false, "", seed};
    for (RootId a = 0; a < R.size() && rep.pass; ++a) {
      for (long k = -5; k <= 5; ++k) {
        ++rep.samples;
        if (rgv.phi(a, cb.x(a, qpow(Rational(p), k))) != ExtInt(k)) {
          rep.pass = false;
          rep.detail = "phi_" + R.name(a) + "(x(p^" + std::to_string(k) + ")) != " + std::to_string(k);
          break;
        }
      }
    }
    if (rep.pass) rep.detail = "phi_alpha attains every k in [-5,5]";
    out.push_back(rep);
  }

  {
    AxiomReport rep{"VRGD1", 0, true, false, "", seed};
    ScalarStream s(p, axiom_seed(seed, 11));
    const std::size_t n = std::max(budget, R.size());
    for (std::size_t k = 0; k < n && rep.pass; ++k) {
      RootId a = k % R.size();
      long level = s.rng().range(-3, 3);
      Rational l = s.at_least(level);
      Rational m = s.at_least(level);
      ++rep.samples;
      GroupElement prod = cb.x(a, l) * cb.x(a, Rational(-m));
      bool closed = prod == cb.x(a, Rational(l - m)) && rgv.filtration_member(a, level, prod);
      bool nested = !rgv.filtration_member(a, level + 1, cb.x(a, l)) || rgv.filtration_member(a, level, cb.x(a, l));
      if (!closed || !nested || !rgv.filtration_member(a, level, cb.identity())) {
        rep.pass = false;
        rep.detail = "U_{" + R.name(a) + "," + std::to_string(level) + "} not a subgroup at " + scalars(l, m);
      }
    }
    if (rep.pass) rep.detail = "closure under x*y^-1 and nesting U_{a,k+1} <= U_{a,k}";
    out.push_back(rep);
  }

  {
    AxiomReport rep{"VRGD2", 0, true, false, "", seed};
    ScalarStream s(p, axiom_seed(seed, 12));
    auto pairs = nonopposite_pairs(R);
    const std::size_t n = pairs.empty() ? 0 : std::max(budget, pairs.size());
    for (std::size_t k = 0; k < n && rep.pass; ++k) {
      auto [a, b] = pairs[k % pairs.size()];
      long ka = s.rng().range(-2, 2);
      long kb = s.rng().range(-2, 2);
      Rational l = s.at_least(ka);
      Rational m = s.at_least(kb);
      ++rep.samples;
      const auto& terms = constants.get(a, b);
      if (root_commutator(cb, a, l, b, m) != commutator_product(cb, terms, l, m)) {
        rep.pass = false;
        rep.detail = "commutator decomposition fails at " + scalars(l, m);
        break;
      }
      for (const auto& t : terms) {
        Rational c = Rational(t.constant) * qpow(l, t.entry.p) * qpow(m, t.entry.q);
        ExtInt have = rgv.phi(t.entry.root, cb.x(t.entry.root, c));
        if (have < ExtInt(t.entry.p * ka + t.entry.q * kb)) {
          rep.pass = false;
          rep.detail = "component in U_" + R.name(t.entry.root) + " has valuation " + have.to_string() +
                       " < p*k+q*l at " + scalars(l, m);
          break;
        }
      }
    }
    if (pairs.empty()) {
      rep.detail = "vacuous: no pair of non-opposite roots";
    } else if (rep.pass) {
      rep.detail = "[U_{a,k},U_{b,l}] inside prod U_{g,pk+ql} on " + std::to_string(pairs.size()) + " pairs";
    }
    out.push_back(rep);
  }

  // VRGD3 and VRGD4 share the same measurement: the shift
  // φ_{s_α(β)}(m(u)⁻¹ x m(u)) - φ_β(x) over ten x per (α, β, u).
  constexpr int kPerU = 10;
  auto shift_report = [&](const char* name, std::uint64_t salt, bool diagonal) {
    AxiomReport rep{name, 0, true, false, "", seed};
    ScalarStream s(p, axiom_seed(seed, salt));
    const std::size_t combos = diagonal ? R.size() : R.size() * R.size();
    const std::size_t n = std::max(budget / kPerU, combos);
    for (std::size_t k = 0; k < n && rep.pass; ++k) {
      RootId a = diagonal ? k % R.size() : (k / R.size()) % R.size();
      RootId b = diagonal ? a : k % R.size();
      Rational l = s.next_nonzero();
      RootId na = R.negate(a);
      GroupElement mu = cb.m(na, Rational(-1 / l));
      GroupElement mu_inv = cb.m(na, Rational(1 / l));
      RootId target = R.reflect(a, b);
      long expected = R.pair(target, a) * v(l).value();
      if (diagonal) expected = -2 * v(l).value();
      for (int j = 0; j < kPerU; ++j) {
        Rational m = s.next_nonzero();
        ++rep.samples;
        GroupElement x = cb.x(b, m);
        GroupElement y = mu_inv * x * mu;
        auto shifted = cb.recover_parameter(target, y);
        if (!shifted) {
          rep.pass = false;
          rep.detail = "m(u)^-1 x m(u) left U_" + R.name(target);
          break;
        }
        long diff = v(*shifted).value() - v(m).value();
        if (diff != expected) {
          rep.pass = false;
          rep.detail = "shift " + std::to_string(diff) + " != " + std::to_string(expected) + " for alpha=" +
                       R.name(a) + " beta=" + R.name(b) + " " + scalars(l, m);
          break;
        }
      }
    }
    if (rep.pass) {
      rep.detail = diagonal ? "shift equals -2 phi_alpha(u) for every alpha"
                            : "shift independent of x and equal to <s_a(b),a> nu(lambda)";
    }
    return rep;
  };
  out.push_back(shift_report("VRGD3", 13, false));
  out.push_back(shift_report("VRGD4", 14, true));
  return out;
}

}  // namespace chev
