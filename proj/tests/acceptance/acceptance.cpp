// One PASS/FAIL line per acceptance criterion, each under a wall-clock budget.

#include "chev/congruence.hpp"
#include "chev/relations.hpp"
#include "chev/rgdcheck.hpp"
#include "chev/sampling.hpp"
#include "chev/torsion.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace chev;

namespace {

const std::vector<std::pair<char, int>> kSweep = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                                  {'C', 3}, {'D', 4}, {'G', 2}};

const ChevalleyBasis& basis(char type, int rank) {
  static std::map<std::pair<char, int>, ChevalleyBasis> cache;
  auto it = cache.find({type, rank});
  if (it == cache.end()) it = cache.emplace(std::make_pair(type, rank), ChevalleyBasis::build(type, rank)).first;
  return it->second;
}

std::string label(char type, int rank) { return std::string(1, type) + std::to_string(rank); }

// Returns an empty string on success, otherwise the first failure.
using Criterion = std::function<std::string(std::ostringstream& note)>;

bool run(const char* id, const char* title, double budget_s, const Criterion& body) {
  auto start = std::chrono::steady_clock::now();
  std::ostringstream note;
  std::string failure;
  try {
    failure = body(note);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && secs > budget_s) failure = "over time budget";
  bool pass = failure.empty();
  std::printf("%s %s %-22s %8.2fs / %4.0fs  %s\n", id, pass ? "PASS" : "FAIL", title, secs, budget_s,
              pass ? note.str().c_str() : failure.c_str());
  std::fflush(stdout);
  return pass;
}

std::string ac1(std::ostringstream& note) {
  std::size_t triples = 0;
  for (auto [t, r] : kSweep) {
    BasisIntegrity in = basis(t, r).check_integrity();
    if (!in.ok()) return label(t, r) + ": " + in.first_failure;
    triples += in.triples_checked;
  }
  note << kSweep.size() << " types, " << triples << " Jacobi triples";
  return "";
}

std::string ac2(std::ostringstream& note) {
  const std::set<std::string> required = {"one-parameter", "h-multiplicative",    "relation-R",
                                          "commutator-constants", "m-conjugates-h", "weight-action"};
  std::size_t least = SIZE_MAX;
  for (auto [t, r] : kSweep) {
    const ChevalleyBasis& cb = basis(t, r);
    std::set<std::string> seen;
    for (const auto& row : relation_suite(cb, 50, 2)) {
      if (!row.outcome.pass) return label(t, r) + " " + row.relation + ": " + row.outcome.detail;
      if (!required.count(row.relation)) continue;
      seen.insert(row.relation);
      bool vacuous = row.relation == "commutator-constants" && cb.roots().size() == 2;
      if (vacuous) continue;
      if (row.outcome.samples < 50) return label(t, r) + " " + row.relation + ": fewer than 50 samples";
      least = std::min(least, row.outcome.samples);
    }
    if (seen != required) return label(t, r) + ": relation missing from suite";
  }
  note << "6 relations x " << kSweep.size() << " types, >= " << least << " samples each";
  return "";
}

std::string ac3(std::ostringstream& note) {
  for (auto [t, r] : kSweep) {
    const ChevalleyBasis& cb = basis(t, r);
    RepresentativeSurvey s = survey(cb, coxeter_element(cb.roots()), 50, 3);
    if (s.samples.size() != 50) return label(t, r) + ": wrong sample count";
    for (const auto& smp : s.samples) {
      if (!smp.power_identity) return label(t, r) + ": (n0 h)^m != n0^m";
    }
    if (!s.invariants_hold || !s.common_order) return label(t, r) + ": survey invariants fail";
    const Integer& o = *s.common_order;
    Integer m(static_cast<unsigned long>(s.m));
    if (o != m && o != 2 * m) return label(t, r) + ": order not in {m, 2m}";
    if ((m * m) % o != 0) return label(t, r) + ": order does not divide m^2";
    if (s.m % 2 == 1 && o != m) return label(t, r) + ": odd m with order != m";
    note << label(t, r) << ":m=" << s.m << ",ord=" << o.get_str() << " ";
  }
  return "";
}

std::string ac4(std::ostringstream& note) {
  if (torsion_exponent_bound(15) != oracle::exponent_bound(15)) return "L(15) disagrees with enumeration";
  std::size_t elements = 0;
  std::size_t witnesses = 0;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'A', 3}}) {
    const ChevalleyBasis& cb = basis(t, r);
    for (const auto& row : full_scan(cb, 100, 5, 4)) {
      ++elements;
      std::string w = label(t, r) + " w=" + to_string(row.word);
      if (row.criterion != row.orbit_sum_zero) return w + ": criterion disagrees with orbit-sum test";
      if (row.criterion && (!row.survey || !row.survey->invariants_hold)) return w + ": survey invariants fail";
      if (!row.criterion && !row.word.empty()) {
        if (!row.witness_ok || !*row.witness_ok) return w + ": infinite witness failed";
        ++witnesses;
      }
    }
  }
  note << elements << " elements, " << witnesses << " exact infinite witnesses, L(15)="
       << torsion_exponent_bound(15).get_str();
  return "";
}

std::string ac5(std::ostringstream& note) {
  std::size_t reports = 0;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    const ChevalleyBasis& cb = basis(t, r);
    for (long p : {2L, 5L}) {
      auto rgd = check_rgd(cb, p, 100, 5);
      auto vrgd = check_vrgd(RootGroupValuation(cb, Valuation(p)), 100, 5);
      for (const auto* list : {&rgd, &vrgd}) {
        for (const auto& a : *list) {
          if (!a.pass) return label(t, r) + " p=" + std::to_string(p) + " " + a.axiom + ": " + a.detail;
          ++reports;
        }
      }
    }
  }
  note << reports << " axiom reports";
  return "";
}

std::string ac6(std::ostringstream& note) {
  std::size_t certified = 0;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}}) {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {5, 3}, {2, 5}}) {
      CongruenceContext ctx(basis(t, r), p, q);
      ProbeReport rep = torsionfree_probe(ctx, 200, 8, 6);
      std::string tag = label(t, r) + " (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (!rep.pass()) return tag + ": torsion element found";
      if (rep.certified_infinite + rep.identity_skipped != rep.words) return tag + ": uncertified word";
      certified += rep.certified_infinite;
    }
  }
  note << certified << " words certified infinite, 0 torsion";
  return "";
}

std::string ac7(std::ostringstream& note) {
  SampleRng rng(7);
  std::vector<Rational> lambdas;
  for (int i = 0; i < 100; ++i) lambdas.push_back(rng.small_rational(60, true) * qpow(Rational(2), rng.range(-4, 4)));
  Valuation v(2);
  std::size_t checks = 0;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}}) {
    const ChevalleyBasis& cb = basis(t, r);
    CongruenceContext ctx(cb, 2, 3);
    for (const auto& l : lambdas) {
      for (long prec = 1; prec <= 10; ++prec) {
        Rational mu = padic_approximate(ctx, l, prec);
        if (v(Rational(l - mu)) < ExtInt(prec)) return "padic_approximate misses t=" + std::to_string(prec);
        if (!v.in_z_inv_p(Rational(mu / 3))) return "mu not in qZ[1/p]";
        for (RootId a = 0; a < cb.roots().size(); ++a) {
          Approximation ap = approximate_generator(ctx, a, l, prec);
          ExtInt got = entrywise_valuation(v, cb.x(a, l).matrix(), ap.h.matrix());
          if (got < ExtInt(prec)) return label(t, r) + ": generator misses t=" + std::to_string(prec);
          ++checks;
        }
      }
    }
  }
  note << "1000 padic targets, " << checks << " generator approximations";
  return "";
}

std::string ac8(std::ostringstream& note) {
  SampleRng rng(8);
  std::size_t orders = 0;
  const std::vector<std::pair<char, int>> types = {{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}};
  while (orders < 50) {
    auto [t, r] = types[orders % types.size()];
    const ChevalleyBasis& cb = basis(t, r);
    // Products of m_α(±1) and h_α(-1) lie in N₀ and have finite order.
    GroupElement g = cb.identity();
    std::size_t len = 1 + rng.below(5);
    for (std::size_t k = 0; k < len; ++k) {
      RootId a = rng.below(cb.roots().size());
      g = g * (rng.coin() ? cb.m(a, rng.coin() ? Rational(1) : Rational(-1)) : cb.h(a, Rational(-1)));
    }
    TorsionOrder fast = torsion_order(g.matrix());
    auto naive = oracle::naive_order(g.matrix(), 5040);
    if (!naive) return label(t, r) + ": naive order exceeded 5040";
    if (!fast.finite || fast.order != *naive) return label(t, r) + ": torsion_order disagrees with powering";
    ++orders;
  }
  const ChevalleyBasis& cb = basis('A', 2);
  CongruenceContext ctx(cb, 2, 3);
  std::size_t elements = 0;
  std::size_t verdicts = 0;
  while (elements < 20) {
    GroupElement g = cb.identity();
    std::size_t len = 1 + rng.below(3);
    for (std::size_t k = 0; k < len; ++k) g = g * cb.x(rng.below(cb.roots().size()), Rational(3 * rng.range(-2, 2)));
    if (g.is_identity()) continue;
    ++elements;
    for (long r : {2L, 3L, 5L, 7L}) {
      ObstructionReport rep = binomial_obstruction(ctx, g, r);
      bool powered_identity = g.pow(static_cast<unsigned long>(r)).is_identity();
      if (rep.certified && powered_identity) return "obstruction certified g^r != I but g^r = I";
      if (rep.certified) ++verdicts;
    }
  }
  note << orders << " finite orders, " << elements << " Gamma_q elements, " << verdicts << " certified verdicts";
  return "";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run("AC1", "basis-integrity", 60, ac1);
  ok &= run("AC2", "relation-suite", 120, ac2);
  ok &= run("AC3", "coxeter-survey", 120, ac3);
  ok &= run("AC4", "weyl-full-scan", 600, ac4);
  ok &= run("AC5", "rgd-vrgd", 120, ac5);
  ok &= run("AC6", "congruence-probe", 300, ac6);
  ok &= run("AC7", "padic-approximation", 60, ac7);
  ok &= run("AC8", "oracle-cross-checks", 60, ac8);
  std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
