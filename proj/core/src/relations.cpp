#include "chev/relations.hpp"

#include "chev/sampling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace chev {

CheckOutcome weight_action_check(const ChevalleyBasis& cb, RootId alpha, const Rational& lambda) {
  CheckOutcome out;
  out.samples = 1;
  const RootSystem& R = cb.roots();
  GroupElement h = cb.h(alpha, lambda);
  const QMatrix& a = h.matrix();
  for (std::size_t i = 0; i < cb.dim(); ++i) {
    const BasisLabel& lab = cb.label(i);
    Rational expect = lab.is_root ? qpow(lambda, R.pair(lab.root, alpha)) : Rational(1);
    for (std::size_t j = 0; j < cb.dim(); ++j) {
      const Rational& want = i == j ? expect : Rational(0);
      if (a(i, j) != want) {
        out.pass = false;
        out.detail = "h[" + R.name(alpha) + "](" + lambda.get_str() + ") entry (" + std::to_string(i) + "," +
                     std::to_string(j) + ") = " + a(i, j).get_str() + ", expected " + want.get_str();
        return out;
      }
    }
  }
  return out;
}

RelationRResult relation_R_check(const ChevalleyBasis& cb, RootId alpha, RootId beta,
                                 std::span<const std::pair<Rational, Rational>> samples) {
  const RootSystem& R = cb.roots();
  RelationRResult out;
  RootId target = R.reflect(alpha, beta);
  int exponent = R.pair(target, alpha);
  for (const auto& [lambda, mu] : samples) {
    ++out.samples;
    GroupElement conj = cb.m(alpha, lambda) * cb.x(beta, mu) * cb.m(alpha, Rational(-lambda));
    Rational c = qpow(lambda, exponent) * mu;
    int eps = 0;
    if (conj == cb.x(target, c)) {
      eps = 1;
    } else if (conj == cb.x(target, Rational(-c))) {
      eps = -1;
    } else {
      out.pass = false;
      out.detail = "conjugate of x[" + R.name(beta) + "](" + mu.get_str() + ") by m[" + R.name(alpha) + "](" +
                   lambda.get_str() + ") is not x[" + R.name(target) + "](±" + c.get_str() + ")";
      return out;
    }
    if (sgn(c) == 0) continue;
    if (out.sign && *out.sign != eps) {
      out.pass = false;
      out.detail = "sign changes between samples at lambda=" + lambda.get_str() + " mu=" + mu.get_str();
      return out;
    }
    out.sign = eps;
  }
  return out;
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return g * h * g.inverse() * h.inverse();
}

GroupElement commutator_product(const ChevalleyBasis& cb, std::span<const CommutatorTerm> terms,
                                const Rational& lambda, const Rational& mu) {
  GroupElement out = cb.identity();
  for (const auto& t : terms) {
    Rational c = Rational(t.constant) * qpow(lambda, t.entry.p) * qpow(mu, t.entry.q);
    out = out * cb.x(t.entry.root, c);
  }
  return out;
}

std::vector<CommutatorTerm> commutator_constants(const ChevalleyBasis& cb, RootId alpha, RootId beta) {
  const RootSystem& R = cb.roots();
  std::vector<IntervalEntry> interval = R.interval(alpha, beta);
  // x_α(1)⁻¹ = x_α(-1), likewise for β.
  GroupElement rest = cb.x(alpha, Rational(1)) * cb.x(beta, Rational(1)) * cb.x(alpha, Rational(-1)) *
                      cb.x(beta, Rational(-1));
  std::vector<CommutatorTerm> terms;
  for (const IntervalEntry& e : interval) {
    // The e_γ coefficient of rest(h_i) is -C⟨γ,α_i⟩: contributions through
    // other factors only reach roots of larger i+j.
    int i_used = 0;
    int pairing = 0;
    for (int i = 1; i <= R.rank(); ++i) {
      if (int c = R.pair(e.root, R.simple(i)); c != 0) {
        i_used = i;
        pairing = c;
        break;
      }
    }
    Rational entry = rest.matrix()(cb.root_index(e.root), cb.cartan_index(i_used));
    Rational c = -entry / pairing;
    if (c.get_den() != 1 || std::abs(c.get_num().get_si()) > 3) {
      throw std::runtime_error("commutator constant for " + R.name(e.root) + " is not a small integer: " +
                               c.get_str());
    }
    int constant = static_cast<int>(c.get_num().get_si());
    terms.push_back({e, constant});
    rest = cb.x(e.root, Rational(-constant)) * rest;
  }
  if (!rest.is_identity()) {
    throw std::runtime_error("commutator of x[" + R.name(alpha) + "] and x[" + R.name(beta) +
                             "] is not a product over the root interval");
  }
  static const std::pair<long, long> kProbe[] = {{2, 3}, {-1, 5}, {3, -2}, {7, 1}, {-4, -3}};
  for (auto [l, m] : kProbe) {
    for (int variant = 0; variant < 2; ++variant) {
      Rational lambda = variant ? make_rational(l, 3) : Rational(l);
      Rational mu = variant ? make_rational(m, 2) : Rational(m);
      GroupElement lhs = commutator(cb.x(alpha, lambda), cb.x(beta, mu));
      if (lhs != commutator_product(cb, terms, lambda, mu)) {
        throw std::runtime_error("commutator constants for (" + R.name(alpha) + ", " + R.name(beta) +
                                 ") fail at lambda=" + lambda.get_str() + " mu=" + mu.get_str());
      }
    }
  }
  return terms;
}

bool triangularity_check(const ChevalleyBasis& cb, const GroupElement& g) { return cb.is_upper_unitriangular(g); }

}  // namespace chev

namespace chev {

namespace {

Rational nonzero_scalar(SampleRng& rng) { return rng.coin() ? rng.smooth_unit() : rng.small_rational(9, true); }

template <class Check>
CheckOutcome sweep(std::size_t n, Check&& check) {
  CheckOutcome out;
  for (std::size_t k = 0; k < n && out.pass; ++k) {
    ++out.samples;
    if (auto failure = check(k)) {
      out.pass = false;
      out.detail = *failure;
    }
  }
  return out;
}

}  // namespace

std::vector<SuiteRow> relation_suite(const ChevalleyBasis& cb, std::size_t samples, std::uint64_t seed) {
  const RootSystem& R = cb.roots();
  const std::size_t nroots = R.size();
  std::vector<SuiteRow> rows;
  using Failure = std::optional<std::string>;

  {
    SampleRng rng(seed ^ 0x01);
    auto out = sweep(std::max(samples, nroots), [&](std::size_t k) -> Failure {
      RootId a = k % nroots;
      Rational l = rng.small_rational(9, false);
      Rational m = rng.small_rational(9, false);
      if (cb.x(a, l) * cb.x(a, m) == cb.x(a, Rational(l + m))) return std::nullopt;
      return "x[" + R.name(a) + "](" + l.get_str() + ") x(" + m.get_str() + ") != x(lambda+mu)";
    });
    rows.push_back({"one-parameter", out});
  }
  {
    SampleRng rng(seed ^ 0x02);
    auto out = sweep(std::max(samples, nroots), [&](std::size_t k) -> Failure {
      RootId a = k % nroots;
      Rational l = nonzero_scalar(rng);
      Rational m = nonzero_scalar(rng);
      if (cb.h(a, l) * cb.h(a, m) == cb.h(a, Rational(l * m))) return std::nullopt;
      return "h[" + R.name(a) + "](" + l.get_str() + ") h(" + m.get_str() + ") != h(lambda*mu)";
    });
    rows.push_back({"h-multiplicative", out});
  }
  {
    SampleRng rng(seed ^ 0x03);
    const std::size_t pairs = nroots * nroots;
    const std::size_t per_pair = std::max<std::size_t>(2, (samples + pairs - 1) / pairs);
    std::size_t plus = 0;
    std::size_t minus = 0;
    auto out = sweep(pairs, [&](std::size_t k) -> Failure {
      RootId a = k / nroots;
      RootId b = k % nroots;
      std::vector<std::pair<Rational, Rational>> pts;
      for (std::size_t j = 0; j < per_pair; ++j) pts.emplace_back(nonzero_scalar(rng), nonzero_scalar(rng));
      RelationRResult r = relation_R_check(cb, a, b, pts);
      if (!r.pass) return r.detail;
      (r.sign == 1 ? plus : minus) += 1;
      return std::nullopt;
    });
    out.samples *= per_pair;
    if (out.pass) out.detail = "constant sign per pair: +1 on " + std::to_string(plus) + ", -1 on " + std::to_string(minus);
    rows.push_back({"relation-R", out});
  }
  {
    SampleRng rng(seed ^ 0x04);
    std::vector<std::pair<RootId, RootId>> pairs;
    for (RootId a = 0; a < nroots; ++a) {
      for (RootId b = 0; b < nroots; ++b) {
        if (a != b && a != R.negate(b)) pairs.emplace_back(a, b);
      }
    }
    CheckOutcome out;
    std::vector<std::vector<CommutatorTerm>> table;
    int largest = 0;
    try {
      for (auto [a, b] : pairs) {
        table.push_back(commutator_constants(cb, a, b));
        for (const auto& t : table.back()) largest = std::max(largest, std::abs(t.constant));
      }
    } catch (const std::runtime_error& e) {
      out.pass = false;
      out.detail = e.what();
    }
    if (out.pass && !pairs.empty()) {
      out = sweep(std::max(samples, pairs.size()), [&](std::size_t k) -> Failure {
        auto [a, b] = pairs[k % pairs.size()];
        Rational l = nonzero_scalar(rng);
        Rational m = nonzero_scalar(rng);
        GroupElement lhs = cb.x(a, l) * cb.x(b, m) * cb.x(a, Rational(-l)) * cb.x(b, Rational(-m));
        if (lhs == commutator_product(cb, table[k % pairs.size()], l, m)) return std::nullopt;
        return "commutator of (" + R.name(a) + ", " + R.name(b) + ") at lambda=" + l.get_str() + " mu=" + m.get_str();
      });
    }
    if (out.pass && pairs.empty()) {
      out.detail = "vacuous: no pair of non-opposite roots";
    } else if (out.pass) {
      out.detail = std::to_string(pairs.size()) + " pairs, max |C| = " + std::to_string(largest);
    }
    rows.push_back({"commutator-constants", out});
  }
  {
    const std::size_t pairs = nroots * nroots;
    auto out = sweep(std::max(samples, pairs), [&](std::size_t k) -> Failure {
      RootId a = (k / nroots) % nroots;
      RootId b = k % nroots;
      GroupElement lhs = cb.m(a, Rational(1)) * cb.h(b, Rational(-1)) * cb.m(a, Rational(-1));
      if (lhs == cb.h(R.reflect(a, b), Rational(-1))) return std::nullopt;
      return "m[" + R.name(a) + "](1) h[" + R.name(b) + "](-1) m(1)^-1 != h[s_a(b)](-1)";
    });
    rows.push_back({"m-conjugates-h", out});
  }
  {
    SampleRng rng(seed ^ 0x06);
    auto out = sweep(std::max(samples, nroots), [&](std::size_t k) -> Failure {
      CheckOutcome c = weight_action_check(cb, k % nroots, nonzero_scalar(rng));
      if (c.pass) return std::nullopt;
      return c.detail;
    });
    rows.push_back({"weight-action", out});
  }
  {
    SampleRng rng(seed ^ 0x07);
    auto out = sweep(std::max(samples, nroots), [&](std::size_t k) -> Failure {
      RootId a = k % nroots;
      RootId b = rng.below(nroots);
      GroupElement g = cb.h(a, nonzero_scalar(rng));
      GroupElement h = cb.h(b, nonzero_scalar(rng));
      if (g * h == h * g) return std::nullopt;
      return "h[" + R.name(a) + "] and h[" + R.name(b) + "] do not commute";
    });
    rows.push_back({"torus-commutes", out});
  }
  {
    auto out = sweep(std::max(samples, nroots), [&](std::size_t k) -> Failure {
      RootId a = k % nroots;
      if ((cb.m(a, Rational(-1)) * cb.m(a, Rational(1))).is_identity()) return std::nullopt;
      return "m[" + R.name(a) + "](-1) m(1) != 1";
    });
    rows.push_back({"m-inverse", out});
  }
  {
    SampleRng rng(seed ^ 0x09);
    auto out = sweep(std::max(samples, nroots), [&](std::size_t k) -> Failure {
      int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(R.rank()))) + 1;
      RootId b = k % nroots;
      Rational l = nonzero_scalar(rng);
      RootId si = R.simple(i);
      GroupElement lhs = cb.m(si, Rational(1)) * cb.h(b, l);
      GroupElement rhs = cb.h(R.reflect(si, b), l) * cb.m(si, Rational(1));
      if (lhs == rhs) return std::nullopt;
      return "m[a" + std::to_string(i) + "](1) h[" + R.name(b) + "](" + l.get_str() + ") != h[s_i(b)] m(1)";
    });
    rows.push_back({"lift-conjugation", out});
  }
  return rows;
}

}  // namespace chev
