#include "chev/cli.hpp"

#include "chev/congruence.hpp"
#include "chev/relations.hpp"
#include "chev/rgdcheck.hpp"
#include "chev/torsion.hpp"
#include "chev/weyl.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace chev::cli {

namespace {

using Json = nlohmann::ordered_json;

struct TypeSpec {
  char type;
  int rank;
  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

const std::vector<TypeSpec> kSweep = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}, {'D', 4}, {'G', 2}};

struct RunConfig {
  std::string command;
  std::string type = "A";
  int rank = 2;
  long prime = 2;
  long modulus = 3;
  std::size_t budget = 100;
  std::uint64_t seed = 1;
  std::string format = "tsv";
  std::string output;
  bool all_types = false;
  double time_budget = 600;
  std::size_t samples = 50;
  std::size_t scan_samples = 5;
  std::string word;
  bool word_given = false;
  std::size_t words = 200;
  std::size_t max_len = 8;
  std::size_t max_size = 100000;
  std::string lambda = "7";
  long precision = 4;
  int root = 1;
  bool allow_small_modulus = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  Report(const RunConfig& cfg, std::vector<std::string> columns) : cfg_(cfg), columns_(std::move(columns)) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void result(Json j) { results_.push_back(std::move(j)); }
  void parameters(Json j) { parameters_ = std::move(j); }

  void write(std::ostream& os, bool pass) const {
    if (cfg_.format == "json") {
      Json doc;
      doc["tool"] = kToolName;
      doc["version"] = kVersion;
      doc["command"] = cfg_.command;
      doc["seed"] = cfg_.seed;
      doc["parameters"] = parameters_;
      doc["pass"] = pass;
      doc["results"] = results_;
      os << doc.dump(2) << "\n";
      return;
    }
    os << "# " << kToolName << " " << kVersion << " command=" << cfg_.command << " seed=" << cfg_.seed << "\n";
    for (const auto& n : notes_) os << "# " << n << "\n";
    write_line(os, columns_);
    for (const auto& r : rows_) write_line(os, r);
    os << "# pass=" << (pass ? "true" : "false") << "\n";
  }

 private:
  static void write_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
    os << "\n";
  }

  const RunConfig& cfg_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> notes_;
  Json results_ = Json::array();
  Json parameters_ = Json::object();
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string coords_string(const RootCoords& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

Json vector_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string order_string(const TorsionOrder& t) { return t.finite ? t.order.get_str() : "infinite"; }

// ---- subcommands -------------------------------------------------------

const std::vector<std::string> kRootsColumns = {"type", "index", "root", "coords", "height", "positive", "negative"};

bool run_roots(const RunConfig&, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  const RootSystem& R = cb.roots();
  Json roots = Json::array();
  for (RootId r = 0; r < R.size(); ++r) {
    rep.row({t.label(), std::to_string(r), R.name(r), coords_string(R.coords(r)), std::to_string(R.height(r)),
             yes_no(R.is_positive(r)), std::to_string(R.negate(r))});
    roots.push_back({{"index", r},
                     {"name", R.name(r)},
                     {"coords", R.coords(r)},
                     {"height", R.height(r)},
                     {"negative", R.negate(r)}});
  }
  Json constants = Json::array();
  for (RootId a = 0; a < R.size(); ++a) {
    for (RootId b = 0; b < R.size(); ++b) {
      if (auto s = cb.root_sum(a, b)) {
        constants.push_back({{"alpha", a}, {"beta", b}, {"sum", *s}, {"N", cb.structure_constant(a, b)}});
      }
    }
  }
  rep.result({{"type", t.label()},
              {"rank", t.rank},
              {"cartan", R.cartan()},
              {"roots", roots},
              {"structure_constants", constants}});
  return true;
}

const std::vector<std::string> kWeylColumns = {"type", "index", "word", "order", "det_minus_identity",
                                               "eigenvalue_one"};

bool run_weyl_scan(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  RootSystem R = RootSystem::build(t.type, t.rank);
  std::vector<WeylElement> elements;
  try {
    elements = enumerate(R, cfg.max_size);
  } catch (const std::length_error&) {
    throw UsageError("|W(" + t.label() + ")| exceeds --max-size " + std::to_string(cfg.max_size));
  }
  Json rows = Json::array();
  bool pass = true;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const WeylElement& w = elements[k];
    unsigned long m = order(w);
    Rational det = det_minus_identity(w);
    bool ev = has_eigenvalue_one(w);
    pass = pass && preserves_form(R, w);
    rep.row({t.label(), std::to_string(k), to_string(w.word()), std::to_string(m), det.get_str(), yes_no(ev)});
    rows.push_back({{"word", to_string(w.word())}, {"order", m}, {"det_minus_identity", det.get_str()},
                    {"eigenvalue_one", ev}});
  }
  rep.result({{"type", t.label()}, {"size", elements.size()}, {"elements", rows}});
  return pass;
}

const std::vector<std::string> kRelationColumns = {"type", "relation", "samples", "pass", "detail"};

bool run_relations(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  BasisIntegrity integrity = cb.check_integrity();
  std::vector<SuiteRow> rows;
  rows.push_back({"basis-integrity",
                  {integrity.ok(), integrity.pairs_checked + integrity.triples_checked,
                   integrity.ok() ? std::to_string(integrity.triples_checked) + " Jacobi triples"
                                  : integrity.first_failure}});
  for (auto& r : relation_suite(cb, cfg.samples, cfg.seed)) rows.push_back(std::move(r));
  Json rel = Json::array();
  bool pass = true;
  for (const auto& r : rows) {
    pass = pass && r.outcome.pass;
    rep.row({t.label(), r.relation, std::to_string(r.outcome.samples), yes_no(r.outcome.pass), r.outcome.detail});
    rel.push_back({{"relation", r.relation},
                   {"samples", r.outcome.samples},
                   {"pass", r.outcome.pass},
                   {"detail", r.outcome.detail}});
  }
  rep.result({{"type", t.label()}, {"pass", pass}, {"relations", rel}});
  return pass;
}

const std::vector<std::string> kAxiomColumns = {"type", "prime", "axiom", "samples", "status", "detail"};

bool emit_axioms(const RunConfig& cfg, const TypeSpec& t, const std::vector<AxiomReport>& reports, Report& rep) {
  Json axioms = Json::array();
  for (const auto& a : reports) {
    std::string status = a.informational ? "info" : (a.pass ? "pass" : "fail");
    rep.row({t.label(), std::to_string(cfg.prime), a.axiom, std::to_string(a.samples), status, a.detail});
    axioms.push_back({{"axiom", a.axiom}, {"samples", a.samples}, {"status", status}, {"detail", a.detail}});
  }
  bool pass = all_pass(reports);
  rep.result({{"type", t.label()}, {"prime", cfg.prime}, {"budget", cfg.budget}, {"pass", pass}, {"axioms", axioms}});
  return pass;
}

bool run_rgd(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  return emit_axioms(cfg, t, check_rgd(cb, cfg.prime, cfg.budget, cfg.seed), rep);
}

bool run_vrgd(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  RootGroupValuation rgv(cb, Valuation(cfg.prime));
  return emit_axioms(cfg, t, check_vrgd(rgv, cfg.budget, cfg.seed), rep);
}

const std::vector<std::string> kTorsionColumns = {"type", "word", "sample", "torus", "order", "power_identity",
                                                  "torus_collapse"};

bool run_torsion(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  const RootSystem& R = cb.roots();
  WeylWord word;
  if (cfg.word_given && !cfg.all_types) {
    try {
      word = parse_word(cfg.word);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (int i : word) {
      if (i < 1 || i > R.rank()) throw UsageError("word letter " + std::to_string(i) + " out of range");
    }
  } else {
    word = coxeter_element(R).word();
  }
  WeylElement w = element_from_word(R, word);
  if (w.matrix().is_identity()) throw UsageError("the word represents the identity; the survey needs w != 1");
  RepresentativeSurvey s = survey(cb, w, cfg.samples, cfg.seed);
  Json orders = Json::array();
  bool power_all = true;
  bool collapse_all = true;
  for (std::size_t k = 0; k < s.samples.size(); ++k) {
    const TorusSample& ts = s.samples[k];
    std::string torus;
    for (const auto& [beta, lambda] : ts.factors) {
      torus += (torus.empty() ? "" : "*") + std::string("h[") + R.name(beta) + "](" + lambda.get_str() + ")";
    }
    power_all = power_all && ts.power_identity;
    collapse_all = collapse_all && ts.torus_collapse;
    orders.push_back(order_string(ts.order));
    rep.row({t.label(), to_string(word), std::to_string(k), torus, order_string(ts.order), yes_no(ts.power_identity),
             yes_no(ts.torus_collapse)});
  }
  Json witness = nullptr;
  bool pass = s.invariants_hold;
  if (s.eigenvalue_one) {
    InfiniteWitness iw = infinite_witness(cb, w);
    witness = {{"beta", R.name(iw.beta)},
               {"orbit_sum", vector_json(iw.orbit_sum)},
               {"infinite", iw.success},
               {"certificate", iw.order.certificate}};
    pass = pass && iw.success;
    rep.note("witness beta=" + R.name(iw.beta) + " infinite=" + yes_no(iw.success) + " " + iw.order.certificate);
  }
  rep.note(t.label() + " word=" + to_string(word) + " m=" + std::to_string(s.m) + " eigenvalue_one=" +
           yes_no(s.eigenvalue_one) + " verdict=" + to_string(s.verdict) +
           " common_order=" + (s.common_order ? s.common_order->get_str() : "none"));
  rep.result({{"type", t.label()},
              {"word", to_string(word)},
              {"m", s.m},
              {"eigenvalue_one", s.eigenvalue_one},
              {"criterion", !s.eigenvalue_one},
              {"verdict", to_string(s.verdict)},
              {"common_order", s.common_order ? Json(s.common_order->get_str()) : Json(nullptr)},
              {"invariants_hold", s.invariants_hold},
              {"power_identity_all", power_all},
              {"torus_collapse_all", collapse_all},
              {"orders", orders},
              {"witness", witness}});
  return pass;
}

const std::vector<std::string> kScanColumns = {"type", "index", "word", "m", "criterion", "orbit_sum_zero",
                                               "survey", "common_order", "witness"};

bool run_torsion_scan(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  std::vector<ScanRow> rows;
  try {
    rows = full_scan(cb, cfg.max_size, cfg.scan_samples, cfg.seed);
  } catch (const std::length_error&) {
    throw UsageError("|W(" + t.label() + ")| exceeds --max-size " + std::to_string(cfg.max_size));
  }
  Json out = Json::array();
  bool pass = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ScanRow& r = rows[k];
    std::string verdict = r.survey ? to_string(r.survey->verdict) : "-";
    std::string common = r.survey && r.survey->common_order ? r.survey->common_order->get_str() : "-";
    std::string witness = r.witness_ok ? yes_no(*r.witness_ok) : "-";
    pass = pass && r.criterion == r.orbit_sum_zero && (!r.survey || r.survey->invariants_hold) &&
           (!r.witness_ok || *r.witness_ok);
    rep.row({t.label(), std::to_string(k), to_string(r.word), std::to_string(r.m), yes_no(r.criterion),
             yes_no(r.orbit_sum_zero), verdict, common, witness});
    out.push_back({{"word", to_string(r.word)},
                   {"m", r.m},
                   {"criterion", r.criterion},
                   {"orbit_sum_zero", r.orbit_sum_zero},
                   {"survey", r.survey ? Json(verdict) : Json(nullptr)},
                   {"common_order", r.survey && r.survey->common_order ? Json(common) : Json(nullptr)},
                   {"witness", r.witness_ok ? Json(*r.witness_ok) : Json(nullptr)}});
  }
  rep.result({{"type", t.label()}, {"size", rows.size()}, {"pass", pass}, {"rows", out}});
  return pass;
}

const std::vector<std::string> kProbeColumns = {"type", "prime", "modulus", "words", "identity_skipped",
                                                "certified_infinite", "torsion_found", "violating_word"};

bool run_probe(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  std::optional<CongruenceContext> ctx;
  try {
    ctx.emplace(cb, cfg.prime, cfg.modulus, cfg.allow_small_modulus);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ProbeReport p = torsionfree_probe(*ctx, cfg.words, cfg.max_len, cfg.seed);
  std::string violating;
  if (p.violating_word) {
    for (const Letter& l : *p.violating_word) violating += (violating.empty() ? "" : "*") + l.to_string(cb.roots());
  }
  // Outside the hypothesis q > 2 the outcome is recorded, not asserted.
  const bool asserted = cfg.modulus > 2;
  rep.row({t.label(), std::to_string(cfg.prime), std::to_string(cfg.modulus), std::to_string(p.words),
           std::to_string(p.identity_skipped), std::to_string(p.certified_infinite), std::to_string(p.torsion_found),
           violating.empty() ? "-" : violating});
  rep.result({{"type", t.label()},
              {"prime", cfg.prime},
              {"modulus", cfg.modulus},
              {"asserted", asserted},
              {"words", p.words},
              {"identity_skipped", p.identity_skipped},
              {"certified_infinite", p.certified_infinite},
              {"torsion_found", p.torsion_found},
              {"pass", p.pass()},
              {"violating_word", violating.empty() ? Json(nullptr) : Json(violating)},
              {"violating_order", p.violating_order ? Json(p.violating_order->get_str()) : Json(nullptr)}});
  return p.pass() || !asserted;
}

const std::vector<std::string> kApproxColumns = {"type",  "root",     "lambda",          "precision", "mu",
                                                 "valuation_difference", "achieved", "inner_precision", "pass"};

bool run_approx(const RunConfig& cfg, const TypeSpec& t, Report& rep) {
  ChevalleyBasis cb = ChevalleyBasis::build(t.type, t.rank);
  const RootSystem& R = cb.roots();
  std::optional<CongruenceContext> ctx;
  Rational lambda;
  try {
    ctx.emplace(cb, cfg.prime, cfg.modulus, cfg.allow_small_modulus);
    lambda = parse_rational(cfg.lambda);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.precision < 1) throw UsageError("--precision must be at least 1");
  if (cfg.root < 1 || cfg.root > R.rank()) throw UsageError("--root must index a simple root");
  RootId alpha = R.simple(cfg.root);
  Rational mu = padic_approximate(*ctx, lambda, cfg.precision);
  ExtInt diff = ctx->valuation()(Rational(lambda - mu));
  Approximation a = approximate_generator(*ctx, alpha, lambda, cfg.precision);
  bool pass = diff >= ExtInt(cfg.precision) && a.achieved >= ExtInt(cfg.precision) && in_gamma_q(*ctx, a.h);
  rep.row({t.label(), R.name(alpha), lambda.get_str(), std::to_string(cfg.precision), mu.get_str(), diff.to_string(),
           a.achieved.to_string(), std::to_string(a.inner_precision), yes_no(pass)});
  rep.result({{"type", t.label()},
              {"root", R.name(alpha)},
              {"prime", cfg.prime},
              {"modulus", cfg.modulus},
              {"lambda", lambda.get_str()},
              {"precision", cfg.precision},
              {"mu", mu.get_str()},
              {"valuation_difference", diff.to_string()},
              {"generator_mu", a.mu.get_str()},
              {"achieved", a.achieved.to_string()},
              {"inner_precision", a.inner_precision},
              {"pass", pass}});
  return pass;
}

using Runner = std::function<bool(const RunConfig&, const TypeSpec&, Report&)>;

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> columns;
  Runner run;
};

Json parameters_json(const RunConfig& c) {
  Json j;
  j["type"] = c.all_types ? Json("all") : Json(c.type + std::to_string(c.rank));
  if (c.command == "rgd-check" || c.command == "vrgd-check" || c.command == "congruence-probe" ||
      c.command == "approx") {
    j["prime"] = c.prime;
  }
  if (c.command == "rgd-check" || c.command == "vrgd-check") j["budget"] = c.budget;
  if (c.command == "congruence-probe" || c.command == "approx") j["modulus"] = c.modulus;
  if (c.command == "relations" || c.command == "torsion") j["samples"] = c.samples;
  if (c.command == "torsion-scan") j["samples"] = c.scan_samples;
  if (c.command == "congruence-probe") {
    j["words"] = c.words;
    j["max_len"] = c.max_len;
  }
  if (c.command == "approx") {
    j["lambda"] = c.lambda;
    j["precision"] = c.precision;
  }
  return j;
}

int execute(const Command& cmd, RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<TypeSpec> types;
  if (cfg.all_types) {
    types = kSweep;
  } else {
    if (cfg.type.size() != 1) throw UsageError("--type must be one of A B C D E F G");
    types.push_back({cfg.type[0], cfg.rank});
  }
  Report rep(cfg, cmd.columns);
  rep.parameters(parameters_json(cfg));
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  for (const TypeSpec& t : types) {
    try {
      pass = cmd.run(cfg, t, rep) && pass;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cfg.all_types && elapsed > cfg.time_budget) {
      err << "chevtool: time budget of " << cfg.time_budget << " s exceeded after " << t.label() << "\n";
      pass = false;
      break;
    }
  }
  if (cfg.output.empty()) {
    rep.write(out, pass);
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw UsageError("cannot open " + cfg.output);
    rep.write(file, pass);
  }
  return pass ? kOk : kCheckFailed;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("CHEVTOOL_SEED");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const std::vector<Command> commands = {
      {"roots", "List the roots and structure constants", kRootsColumns, run_roots},
      {"weyl-scan", "Tabulate every Weyl group element", kWeylColumns, run_weyl_scan},
      {"relations", "Check the Chevalley group relations", kRelationColumns, run_relations},
      {"rgd-check", "Check the RGD axioms", kAxiomColumns, run_rgd},
      {"vrgd-check", "Check the valuated RGD axioms", kAxiomColumns, run_vrgd},
      {"torsion", "Survey torus representatives of a Weyl element", kTorsionColumns, run_torsion},
      {"torsion-scan", "Torsion criterion over all of W", kScanColumns, run_torsion_scan},
      {"congruence-probe", "Search a congruence subgroup for torsion", kProbeColumns, run_probe},
      {"approx", "p-adic approximation by qZ[1/p] parameters", kApproxColumns, run_approx},
  };

  CLI::App app{"Exact computations in adjoint Chevalley groups", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = default_seed();

  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--type", cfg.type, "Cartan type A-G")->capture_default_str();
    sub->add_option("--rank", cfg.rank, "Rank")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Sample seed (default from CHEVTOOL_SEED)")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--output", cfg.output, "Write the report to a file");
    sub->add_flag("--all-types", cfg.all_types, "Sweep A1 A2 A3 B2 C3 D4 G2");
    sub->add_option("--time-budget", cfg.time_budget, "Wall-clock budget in seconds for --all-types")
        ->capture_default_str();
    if (c.name == "rgd-check" || c.name == "vrgd-check" || c.name == "congruence-probe" || c.name == "approx") {
      sub->add_option("--prime", cfg.prime, "Prime p")->capture_default_str();
    }
    if (c.name == "rgd-check" || c.name == "vrgd-check") {
      sub->add_option("--budget", cfg.budget, "Samples per axiom")->capture_default_str();
    }
    if (c.name == "relations" || c.name == "torsion" || c.name == "torsion-scan") {
      std::size_t& target = c.name == "torsion-scan" ? cfg.scan_samples : cfg.samples;
      sub->add_option("--samples", target, "Samples per relation or torus samples per element")->capture_default_str();
    }
    if (c.name == "torsion") {
      sub->add_option("--word", cfg.word, "Weyl word such as 1,2 (default: Coxeter element)");
    }
    if (c.name == "weyl-scan" || c.name == "torsion-scan") {
      sub->add_option("--max-size", cfg.max_size, "Largest Weyl group to enumerate")->capture_default_str();
    }
    if (c.name == "congruence-probe" || c.name == "approx") {
      sub->add_option("--modulus", cfg.modulus, "Modulus q")->capture_default_str();
      sub->add_flag("--allow-small-modulus", cfg.allow_small_modulus, "Permit q = 2 (outside the hypothesis)");
    }
    if (c.name == "congruence-probe") {
      sub->add_option("--words", cfg.words, "Number of random words")->capture_default_str();
      sub->add_option("--max-len", cfg.max_len, "Maximal word length")->capture_default_str();
    }
    if (c.name == "approx") {
      sub->add_option("--lambda", cfg.lambda, "Rational to approximate")->capture_default_str();
      sub->add_option("--precision", cfg.precision, "Target p-adic precision t")->capture_default_str();
      sub->add_option("--root", cfg.root, "Simple root index for the generator")->capture_default_str();
    }
  }

  if (args.empty()) {
    err << app.help();
    return kUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << kToolName << ": " << e.what() << "\n";
    return kUsage;
  }

  for (const Command& c : commands) {
    CLI::App* sub = app.get_subcommand(c.name);
    if (!sub->parsed()) continue;
    cfg.command = c.name;
    if (c.name == "torsion") cfg.word_given = sub->count("--word") > 0;
    try {
      return execute(c, cfg, out, err);
    } catch (const UsageError& e) {
      err << kToolName << ": " << e.what() << "\n";
      return kUsage;
    }
  }
  err << app.help();
  return kUsage;
}

}  // namespace chev::cli
