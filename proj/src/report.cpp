#include "orbifoldry/report.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "orbifoldry/fusion.hpp"
#include "orbifoldry/ising.hpp"
#include "orbifoldry/isometry.hpp"
#include "orbifoldry/modular.hpp"
#include "orbifoldry/sectors.hpp"
#include "orbifoldry/suite_data.hpp"

namespace orbifoldry {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- config

void RunConfig::validate() const {
  if (p != 3 && p != 5 && p != 7 && p != 13) {
    throw Error(ErrorKind::InvalidArgument, "p must be one of 3, 5, 7, 13 (got " + std::to_string(p) + ")");
  }
  if (cutoff < 2) throw Error(ErrorKind::InvalidArgument, "cutoff must be at least 2 (got " + to_string(cutoff) + ")");
}

std::string default_data_dir() {
  if (const char* env = std::getenv("ORBIFOLDRY_DATA"); env != nullptr && *env != '\0') return env;
  return ORBIFOLDRY_DEFAULT_DATA_DIR;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    const auto v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "'" + key + "' needs a nonnegative integer, got '" + value + "'");
  }
}

}  // namespace

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "config line " + std::to_string(number) + " lacks '='");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "p") {
      cfg.p = static_cast<std::int64_t>(parse_unsigned(key, value));
    } else if (key == "cutoff") {
      cfg.cutoff = parse_rational(value);
    } else if (key == "budget") {
      cfg.enumeration_budget = parse_unsigned(key, value);
    } else if (key == "data_dir") {
      cfg.data_dir = value;
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(key, value);
    } else if (key == "format") {
      cfg.output = parse_output_format(value);
    } else if (key == "theta") {
      cfg.theta_source = parse_theta_source(value);
    } else {
      throw Error(ErrorKind::ParseError, "unknown config key '" + key + "' on line " + std::to_string(number));
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::DataMissing, "cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(cfg, buffer.str());
}

std::string to_string(OutputFormat format) { return format == OutputFormat::Json ? "json" : "markdown"; }

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "markdown" || text == "md") return OutputFormat::Markdown;
  throw Error(ErrorKind::ParseError, "format must be json or markdown, got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- report

bool ReportEntry::passed() const {
  if (!error.empty() || rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.ok; });
}

bool Report::all_passed() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.passed(); });
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry{
      {"lattice-data", "The shipped Leech Gram matrix is even and unimodular of rank 24 with minimal norm 4 and 196560 minimal vectors."},
      {"theta-agreement", "Theta coefficients used for characters agree with direct enumeration on every enumerated shell."},
      {"untwisted-character", "The lattice theory has 24 states of weight 1 and 196884 = 196560 + 324 of weight 2."},
      {"order-2p-witness", "The shipped isometry has order 2p, profile Phi_2p^(24/(p-1)), and all its nontrivial powers are fixed-point-free."},
      {"eigenspace-dimensions", "Eigenspace dimensions of sigma^i: 24/(p-1) at odd j != p (i odd, i != p), at even j != 0 (i even), 24 at j = p (i = p), 0 elsewhere."},
      {"conformal-weights", "Twisted sector conformal weights: (2p-1)/2p for odd i != p, (p+1)/p for even i, 3/2 for i = p."},
      {"defect-dimensions", "Defect dimensions: 1 for odd i != p, p^(12/(p-1)) for even i, 2^12 for i = p; L/(1-tau)L = Z_p^(24/(p-1)) and L/2L = Z_2^24."},
      {"maximal-isotropic-subgroups", "Z_2p x Z_2p has exactly four maximal isotropic subgroups {(0,j)}, {(i,0)}, {(2k,pk)}, {(pk,2k)}."},
      {"integral-weight-labels", "Integral-weight modules: only j = 0 for odd i != p; j in {0, p} for even i != 0; even j for i = p."},
      {"weight-one-dimension", "The extension by the twists (i,0) has weight-one dimension 24, each odd sector contributing 24/(p-1)."},
      {"orbifold-character", "The Z_p orbifold by tau and the Z_2 orbifold by -1 both have the graded dimension of the Moonshine module (J, weight graded)."},
      {"z2-split", "The Moonshine weight-2 space splits as 98580 (invariants, twined trace 276) + 98304 (twisted sector) = 196884."},
      {"ising-extension", "c = 1/2 characters start at weights 0, 1/2, 1/16; their free-fermion identities hold; ch_0^2 + ch_1/2^2 has weight-one dimension 1."},
  };
  return registry;
}

std::string witness_path(const std::string& data_dir, std::int64_t p) {
  return data_dir + "/sigma_p" + std::to_string(p) + ".mat";
}

namespace {

std::string str(const BigInt& z) { return to_string(z); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const Rational& r) { return to_string(r); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const std::string& s) { return s; }

template <typename A, typename B>
ReportRow row(std::string quantity, const A& computed, const B& expected) {
  ReportRow r{std::move(quantity), str(computed), str(expected), false};
  r.ok = r.computed == r.expected;
  return r;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string join_set(const std::set<std::int64_t>& v) {
  std::string s = "{";
  bool first = true;
  for (auto x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "}";
}

std::string join_labels(const std::vector<FusionLabel>& v) {
  std::string s;
  for (const auto& l : v) s += "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
  return s;
}

std::string join_invariants(const std::vector<BigInt>& v) {
  std::map<BigInt, std::int64_t> counts;
  for (const auto& d : v) ++counts[d];
  std::string s;
  for (const auto& [d, e] : counts) s += (s.empty() ? "" : " x ") + std::string("Z_") + to_string(d) + "^" + std::to_string(e);
  return s.empty() ? "trivial" : s;
}

struct Context {
  const RunConfig& cfg;
  std::shared_ptr<const Lattice> lattice;
  ThetaOptions theta;
  std::optional<Isometry> sigma;
  std::optional<Error> sigma_failure;

  const Isometry& witness() const {
    if (!sigma) throw Error(ErrorKind::DataMissing, std::string("no verified witness: ") + sigma_failure->what());
    return *sigma;
  }
};

// --- individual checks; each fills rows and may throw Error

void check_lattice_data(const Context& ctx, ReportEntry& e) {
  const Lattice& L = *ctx.lattice;
  EnumerationOptions opts{ctx.cfg.enumeration_budget, true};
  auto counts = enumerate_vectors_by_norm(L, 4, opts);
  e.rows.push_back(row("rank", static_cast<std::int64_t>(L.rank()), std::int64_t{24}));
  e.rows.push_back(row("determinant", L.determinant(), BigInt(1)));
  e.rows.push_back(row("minimal norm", minimal_norm(L, opts), std::int64_t{4}));
  e.rows.push_back(row("vectors of norm 2", static_cast<std::int64_t>(counts.at(2)), std::int64_t{0}));
  e.rows.push_back(row("vectors of norm 4", static_cast<std::int64_t>(counts.at(4)), std::int64_t{196560}));
}

void check_theta_agreement(const Context& ctx, ReportEntry& e) {
  const Lattice& L = *ctx.lattice;
  // The enumerated range stays within the default budget (norm 6).
  const std::int64_t top = std::min<std::int64_t>(3, to_int64(floor(ctx.cfg.cutoff)));
  EnumerationOptions opts{ctx.cfg.enumeration_budget, true};
  auto counts = enumerate_vectors_by_norm(L, 2 * top, opts);
  const FracSeries used = lattice_theta(L, Rational(top), ctx.theta);
  for (std::int64_t w = 0; w <= top; ++w) {
    e.rows.push_back(row("coefficient of q^" + std::to_string(w), coefficient_at(used, Rational(w)),
                         Rational(BigInt(std::to_string(counts.at(2 * w))))));
  }
}

void check_untwisted(const Context& ctx, ReportEntry& e) {
  const FracSeries ch = untwisted_character(*ctx.lattice, Rational(2), ctx.theta);
  e.rows.push_back(row("weight 0", coefficient_at(ch, Rational(0)), Rational(1)));
  e.rows.push_back(row("weight 1", coefficient_at(ch, Rational(1)), Rational(24)));
  e.rows.push_back(row("weight 2", coefficient_at(ch, Rational(2)), Rational(196884)));
  const FracSeries theta = lattice_theta(*ctx.lattice, Rational(2), ctx.theta);
  const ModeFactor modes[] = {{Rational(1), 24}};
  const FracSeries fock = grading_product(modes, Rational(2));
  e.rows.push_back(row("weight 2 lattice part", coefficient_at(theta, Rational(2)), Rational(196560)));
  e.rows.push_back(row("weight 2 oscillator part", coefficient_at(fock, Rational(2)), Rational(324)));
}

void check_witness(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p;
  // The witness claim reports the original load failure, e.g. NotGramPreserving.
  if (!ctx.sigma) throw *ctx.sigma_failure;
  const Isometry& s = *ctx.sigma;
  e.rows.push_back(row("order", s.order(), 2 * p));
  e.rows.push_back(row("profile", s.profile().to_string(), order_2p_target(p).to_string()));
  std::int64_t with_fixed = 0;
  for (std::int64_t i = 1; i < 2 * p; ++i)
    if (!s.power(i).fixed_point_free()) ++with_fixed;
  e.rows.push_back(row("powers 1..2p-1 with fixed vectors", with_fixed, std::int64_t{0}));
  e.rows.push_back(row("order of sigma^p", s.power(p).order(), std::int64_t{2}));
  e.rows.push_back(row("order of sigma^(p+1)", s.power(p + 1).order(), p));

  const auto generators = load_generators(ctx.lattice, ctx.cfg.data_dir);
  const auto cert = read_certificate(witness_path(ctx.cfg.data_dir, p));
  const Isometry replayed = replay_word(generators, cert.word, cert.exponent);
  e.rows.push_back(row("certificate replays to the shipped matrix", replayed.matrix() == s.matrix(), true));

  SearchOptions opts;
  opts.seed = ctx.cfg.seed;
  const auto found = search_isometry(generators, order_2p_target(p), opts);
  e.rows.push_back(row("search with seed " + std::to_string(ctx.cfg.seed) + " reaches the profile",
                       found.isometry.profile().to_string(), order_2p_target(p).to_string()));
}

void check_eigenspaces(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p, m = 2 * p;
  const Isometry& s = ctx.witness();
  for (std::int64_t i = 1; i < m; ++i) {
    std::vector<std::int64_t> expected(static_cast<std::size_t>(m), 0);
    for (std::int64_t j = 0; j < m; ++j) {
      auto& x = expected[static_cast<std::size_t>(j)];
      if (i == p) {
        x = j == p ? 24 : 0;
      } else if (i % 2 == 1) {
        x = (j % 2 == 1 && j != p) ? 24 / (p - 1) : 0;
      } else {
        x = (j % 2 == 0 && j != 0) ? 24 / (p - 1) : 0;
      }
    }
    e.rows.push_back(row("i = " + std::to_string(i), join_ints(eigenspace_dims(s.power(i), m)), join_ints(expected)));
  }
}

void check_conformal_weights(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p, m = 2 * p;
  const Isometry& s = ctx.witness();
  for (std::int64_t i = 1; i < m; ++i) {
    const Rational expected = i == p ? make_rational(3, 2) : (i % 2 == 1 ? make_rational(2 * p - 1, 2 * p) : make_rational(p + 1, p));
    e.rows.push_back(row("i = " + std::to_string(i), conformal_weight(eigenspace_dims(s.power(i), m), m), expected));
  }
  // The order-p indexing of tau gives the same weight.
  const Isometry tau = s.power(p + 1);
  e.rows.push_back(row("tau indexed mod p", conformal_weight(eigenspace_dims(tau, p), p), make_rational(p + 1, p)));
}

void check_defects(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p, m = 2 * p;
  const Isometry& s = ctx.witness();
  BigInt p_power;
  mpz_ui_pow_ui(p_power.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(12 / (p - 1)));
  for (std::int64_t i = 1; i < m; ++i) {
    const BigInt expected = i == p ? BigInt(4096) : (i % 2 == 1 ? BigInt(1) : p_power);
    e.rows.push_back(row("i = " + std::to_string(i), defect_dimension(s, i), expected));
  }
  const IntMatrix one = IntMatrix::identity(24);
  const Isometry tau = s.power(p + 1);
  e.rows.push_back(row("L/(1-tau)L", join_invariants(quotient_invariants(*ctx.lattice, one - tau.matrix())),
                       "Z_" + std::to_string(p) + "^" + std::to_string(24 / (p - 1))));
  e.rows.push_back(row("L/2L", join_invariants(quotient_invariants(*ctx.lattice, std::int64_t{2} * one)), std::string("Z_2^24")));
}

void check_isotropic(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p, n = 2 * p;
  const auto found = maximal_isotropic_subgroups(QuadSpace{n});
  e.rows.push_back(row("number of maximal isotropic subgroups", static_cast<std::int64_t>(found.size()), std::int64_t{4}));
  auto make = [&](auto fn) {
    std::set<FusionLabel> s;
    for (std::int64_t k = 0; k < n; ++k) s.insert(fn(k));
    return std::vector<FusionLabel>(s.begin(), s.end());
  };
  const std::vector<std::pair<std::string, std::vector<FusionLabel>>> expected{
      {"{(0,j)}", make([&](std::int64_t k) { return FusionLabel::make(0, k, n); })},
      {"{(i,0)}", make([&](std::int64_t k) { return FusionLabel::make(k, 0, n); })},
      {"{(2k,pk)}", make([&](std::int64_t k) { return FusionLabel::make(2 * k, p * k, n); })},
      {"{(pk,2k)}", make([&](std::int64_t k) { return FusionLabel::make(p * k, 2 * k, n); })},
  };
  for (const auto& [name, elements] : expected) {
    bool present = std::any_of(found.begin(), found.end(), [&](const IsotropicSubgroup& h) { return h.elements == elements; });
    e.rows.push_back(row(name + " is among them", present, true));
  }
}

void check_integral_labels(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p, n = 2 * p;
  const QuadSpace space{n};
  for (std::int64_t i = 1; i < n; ++i) {
    std::set<std::int64_t> expected;
    if (i == p) {
      for (std::int64_t j = 0; j < n; j += 2) expected.insert(j);
    } else if (i % 2 == 1) {
      expected = {0};
    } else {
      expected = {0, p};
    }
    e.rows.push_back(row("i = " + std::to_string(i), join_set(integral_weight_labels(space, i)), join_set(expected)));
  }
}

void check_weight_one(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p;
  const auto count = twisted_weight_one_dimension(ctx.witness(), p, ctx.theta);
  e.rows.push_back(row("total", count.total, BigInt(24)));
  e.rows.push_back(row("invariant untwisted part", count.untwisted, BigInt(0)));
  for (const auto& [i, c] : count.per_sector) e.rows.push_back(row("sector i = " + std::to_string(i), c, BigInt(24 / (p - 1))));
  for (const auto& [i, rho] : count.excluded) {
    e.rows.push_back(row("sector i = " + std::to_string(i) + " starts above weight 1", rho > 1, true));
  }
}

// Weight-graded Moonshine character E_4^3 / (Delta/q) - 744 q.
FracSeries moonshine_reference(const Rational& cutoff) {
  const Rational c(floor(cutoff));
  const FracSeries e4 = eisenstein_e4(c);
  const FracSeries eta24 = discriminant(c + 1).shifted(Rational(-1));
  const FracSeries j_shifted = e4 * e4 * e4 * series_inv(eta24);
  return j_shifted - FracSeries::monomial(Rational(744), Rational(1), c);
}

void check_orbifold(const Context& ctx, ReportEntry& e) {
  const std::int64_t p = ctx.cfg.p;
  const Isometry& s = ctx.witness();
  const Rational cutoff(floor(ctx.cfg.cutoff));
  const FracSeries by_tau = orbifold_character(s.power(p + 1), p, cutoff, ctx.theta);
  const FracSeries by_minus_one = orbifold_character(s.power(p), 2, cutoff, ctx.theta);
  const FracSeries reference = moonshine_reference(cutoff);
  for (std::int64_t w = 0; w <= to_int64(floor(cutoff)); ++w) {
    e.rows.push_back(row("weight " + std::to_string(w), coefficient_at(by_tau, Rational(w)), coefficient_at(reference, Rational(w))));
  }
  e.rows.push_back(row("Z_p and Z_2 orbifold characters coincide", by_tau == by_minus_one, true));
  e.rows.push_back(row("nonnegative integer coefficients", by_tau.has_nonnegative_integer_coefficients(), true));
}

void check_z2_split(const Context& ctx, ReportEntry& e) {
  const Isometry minus_one = ctx.witness().power(ctx.cfg.p);
  const Rational two(2);
  const FracSeries invariant = eigencomponent_character(minus_one, 2, 0, two, ctx.theta);
  const FracSeries twined = twined_untwisted_character(minus_one, 1, two, ctx.theta);
  const SectorInvariants sector(minus_one, 1, 2);
  const FracSeries twisted = extract_weight_class(sector.character(two), Rational(0));
  const Rational a = coefficient_at(invariant, two), b = coefficient_at(twisted, two);
  e.rows.push_back(row("twined trace at weight 2", coefficient_at(twined, two), Rational(276)));
  e.rows.push_back(row("invariant part at weight 2", a, Rational(98580)));
  e.rows.push_back(row("twisted integral part at weight 2", b, Rational(98304)));
  e.rows.push_back(row("sum", Rational(a + b), Rational(196884)));
  e.rows.push_back(row("twisted sector conformal weight", sector.rho(), make_rational(3, 2)));
}

void check_ising(const Context&, ReportEntry& e) {
  const Rational cutoff(10);
  for (const auto& h : ising_weights()) {
    const auto ch = c12_character(h, cutoff);
    e.rows.push_back(row("leading exponent for h = " + to_string(h), *ch.series.valuation(), h));
  }
  const ModeFactor half[] = {{make_rational(1, 2), 1}};
  const FracSeries vac = c12_character(Rational(0), cutoff).series;
  const FracSeries ferm = c12_character(make_rational(1, 2), cutoff).series;
  e.rows.push_back(row("ch_0 + ch_1/2 = prod (1 + q^(n+1/2))", vac + ferm == fermionic_product(half, +1, cutoff), true));
  e.rows.push_back(row("ch_0 - ch_1/2 = prod (1 - q^(n+1/2))", vac - ferm == fermionic_product(half, -1, cutoff), true));
  e.rows.push_back(row("weight-one dimension of ch_0^2 + ch_1/2^2", extension_weight_one_check(), Rational(1)));
}

using Check = std::function<void(const Context&, ReportEntry&)>;

const std::map<std::string_view, Check>& check_table() {
  static const std::map<std::string_view, Check> table{
      {"lattice-data", check_lattice_data},
      {"theta-agreement", check_theta_agreement},
      {"untwisted-character", check_untwisted},
      {"order-2p-witness", check_witness},
      {"eigenspace-dimensions", check_eigenspaces},
      {"conformal-weights", check_conformal_weights},
      {"defect-dimensions", check_defects},
      {"maximal-isotropic-subgroups", check_isotropic},
      {"integral-weight-labels", check_integral_labels},
      {"weight-one-dimension", check_weight_one},
      {"orbifold-character", check_orbifold},
      {"z2-split", check_z2_split},
      {"ising-extension", check_ising},
  };
  return table;
}

}  // namespace

Report run_verification_suite(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  if (cfg.data_dir.empty()) cfg.data_dir = default_data_dir();
  cfg.validate();

  Context ctx{cfg, std::make_shared<const Lattice>(load_lattice_file(cfg.data_dir + "/leech.gram")), {}, std::nullopt, std::nullopt};
  ctx.theta.source = cfg.theta_source;
  ctx.theta.enumeration = EnumerationOptions{cfg.enumeration_budget, true};
  try {
    ctx.sigma = load_isometry(ctx.lattice, witness_path(cfg.data_dir, cfg.p));
  } catch (const Error& err) {
    ctx.sigma_failure = err;
  }

  Report report;
  report.config = cfg;
  for (const auto& claim : claim_registry()) {
    ReportEntry entry{std::string(claim.id), std::string(claim.claim), {}, {}};
    try {
      check_table().at(claim.id)(ctx, entry);
    } catch (const Error& err) {
      entry.error = err.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// ---------------------------------------------------------------- emission

std::string emit_report(const Report& report, OutputFormat format) {
  const RunConfig& cfg = report.config;
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["config"] = ordered_json{{"p", cfg.p},
                               {"cutoff", to_string(cfg.cutoff)},
                               {"budget", cfg.enumeration_budget},
                               {"seed", cfg.seed},
                               {"theta", to_string(cfg.theta_source)}};
    j["passed"] = report.all_passed();
    j["entries"] = ordered_json::array();
    for (const auto& e : report.entries) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : e.rows) {
        rows.push_back(ordered_json{{"quantity", r.quantity}, {"computed", r.computed}, {"expected", r.expected}, {"ok", r.ok}});
      }
      j["entries"].push_back(
          ordered_json{{"id", e.id}, {"claim", e.claim}, {"passed", e.passed()}, {"error", e.error}, {"rows", rows}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& e : report.entries) passed += e.passed() ? 1 : 0;
  out << "# Verification report, p = " << cfg.p << "\n\n";
  out << "cutoff " << to_string(cfg.cutoff) << ", enumeration budget " << cfg.enumeration_budget << ", seed " << cfg.seed
      << ", theta from " << to_string(cfg.theta_source) << "\n\n";
  out << passed << " of " << report.entries.size() << " claims pass.\n";
  for (const auto& e : report.entries) {
    out << "\n## " << e.id << ": " << (e.passed() ? "PASS" : "FAIL") << "\n\n" << e.claim << "\n\n";
    if (!e.error.empty()) out << "Error: " << e.error << "\n\n";
    if (e.rows.empty()) continue;
    out << "| quantity | computed | expected | ok |\n|---|---|---|---|\n";
    for (const auto& r : e.rows) {
      out << "| " << r.quantity << " | " << r.computed << " | " << r.expected << " | " << (r.ok ? "yes" : "no") << " |\n";
    }
  }
  return out.str();
}

Report parse_report_json(std::string_view text) {
  Report report;
  try {
    const auto j = ordered_json::parse(text);
    const auto& c = j.at("config");
    report.config.p = c.at("p").get<std::int64_t>();
    report.config.cutoff = parse_rational(c.at("cutoff").get<std::string>());
    report.config.enumeration_budget = c.at("budget").get<std::uint64_t>();
    report.config.seed = c.at("seed").get<std::uint64_t>();
    report.config.theta_source = parse_theta_source(c.at("theta").get<std::string>());
    for (const auto& e : j.at("entries")) {
      ReportEntry entry{e.at("id").get<std::string>(), e.at("claim").get<std::string>(), {}, e.at("error").get<std::string>()};
      for (const auto& r : e.at("rows")) {
        entry.rows.push_back(ReportRow{r.at("quantity").get<std::string>(), r.at("computed").get<std::string>(),
                                       r.at("expected").get<std::string>(), r.at("ok").get<bool>()});
      }
      report.entries.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("malformed report: ") + ex.what());
  }
  return report;
}

}  // namespace orbifoldry
