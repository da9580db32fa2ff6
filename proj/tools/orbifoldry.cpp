// Command-line front end: the verification suite and per-module passthroughs.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbifoldry/fusion.hpp"
#include "orbifoldry/ising.hpp"
#include "orbifoldry/isometry.hpp"
#include "orbifoldry/lattice.hpp"
#include "orbifoldry/report.hpp"
#include "orbifoldry/sectors.hpp"
#include "orbifoldry/suite_data.hpp"

using namespace orbifoldry;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string data_dir;
  std::uint64_t budget = 1'000'000'000;
  std::string theta = "modular";
  bool serial = false;

  std::string dir() const { return data_dir.empty() ? default_data_dir() : data_dir; }
  std::shared_ptr<const Lattice> leech() const {
    return std::make_shared<const Lattice>(load_lattice_file(dir() + "/leech.gram"));
  }
  ThetaOptions theta_options() const {
    return ThetaOptions{parse_theta_source(theta), EnumerationOptions{budget, !serial}};
  }
  Isometry sigma(std::int64_t p) const {
    RunConfig probe;
    probe.p = p;
    probe.validate();
    return load_isometry(leech(), witness_path(dir(), p));
  }
};

void add_data_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--data-dir", c.data_dir, "Data directory (default: $ORBIFOLDRY_DATA or the build-time path)");
}

void add_theta_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "Enumeration node budget");
  cmd->add_option("--theta", c.theta, "Theta coefficients from 'modular' (identity + norm-2 count) or 'enumeration'")
      ->check(CLI::IsMember({"modular", "enumeration"}));
  cmd->add_flag("--serial", c.serial, "Run enumeration on one thread");
}

Rational parse_cutoff(const std::string& text) {
  Rational c = parse_rational(text);
  if (c < 0) throw Error(ErrorKind::InvalidArgument, "cutoff must be nonnegative");
  return c;
}

ordered_json series_json(const FracSeries& s) {
  ordered_json j = ordered_json::parse(to_json_string(s));
  j["display"] = to_display_string(s);
  return j;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json counts_json(const NormCounts& counts) {
  ordered_json j = ordered_json::object();
  for (const auto& [norm, count] : counts) j[std::to_string(norm)] = count;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of cyclic orbifold constructions of the Moonshine module from the Leech lattice"};
  app.require_subcommand(1);
  Common common;
  int exit_code = 0;

  // verify
  RunConfig cfg;
  std::string config_file, cutoff_text, format_text;
  std::optional<std::int64_t> p_opt;
  std::optional<std::uint64_t> budget_opt, seed_opt;
  std::optional<std::string> theta_opt, data_opt;
  std::string out_file;
  auto* verify = app.add_subcommand("verify", "Run the verification suite for one prime");
  verify->add_option("--config", config_file, "key=value config file; flags override it");
  verify->add_option("--p", p_opt, "Prime p in {3, 5, 7, 13}");
  verify->add_option("--cutoff", cutoff_text, "Highest weight compared (rational, >= 2)");
  verify->add_option("--budget", budget_opt, "Enumeration node budget");
  verify->add_option("--seed", seed_opt, "Seed for the witness re-search");
  verify->add_option("--format", format_text, "json or markdown")->check(CLI::IsMember({"json", "markdown", "md"}));
  verify->add_option("--theta", theta_opt, "modular or enumeration")->check(CLI::IsMember({"modular", "enumeration"}));
  verify->add_option("--data-dir", data_opt, "Data directory");
  verify->add_option("--output", out_file, "Write the report here instead of stdout");
  verify->callback([&] {
    if (!config_file.empty()) apply_config_file(cfg, config_file);
    if (p_opt) cfg.p = *p_opt;
    if (!cutoff_text.empty()) cfg.cutoff = parse_rational(cutoff_text);
    if (budget_opt) cfg.enumeration_budget = *budget_opt;
    if (seed_opt) cfg.seed = *seed_opt;
    if (!format_text.empty()) cfg.output = parse_output_format(format_text);
    if (theta_opt) cfg.theta_source = parse_theta_source(*theta_opt);
    if (data_opt) cfg.data_dir = *data_opt;
    const Report report = run_verification_suite(cfg);
    const std::string text = emit_report(report, cfg.output);
    if (out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream(out_file) << text;
    }
    exit_code = report.all_passed() ? 0 : 1;
  });

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Lattice checks");
  lattice->require_subcommand(1);
  std::string lattice_file;
  std::int64_t max_norm = 4;
  auto* lcheck = lattice->add_subcommand("check", "Validate a Gram matrix file");
  lcheck->add_option("file", lattice_file, "Gram matrix file")->required();
  add_theta_options(lcheck, common);
  lcheck->callback([&] {
    Lattice L = load_lattice_file(lattice_file);
    ordered_json j{{"label", L.label()}, {"rank", L.rank()}, {"determinant", to_string(L.determinant())}, {"even", true},
                   {"positive_definite", true}};
    if (L.rank() > 0) j["minimal_norm"] = minimal_norm(L, EnumerationOptions{common.budget, !common.serial});
    print(j);
  });
  auto* ltheta = lattice->add_subcommand("theta", "Vector counts by norm");
  ltheta->add_option("file", lattice_file, "Gram matrix file")->required();
  ltheta->add_option("--max-norm", max_norm, "Largest norm counted")->required();
  add_theta_options(ltheta, common);
  ltheta->callback([&] {
    Lattice L = load_lattice_file(lattice_file);
    print(counts_json(enumerate_vectors_by_norm(L, max_norm, EnumerationOptions{common.budget, !common.serial})));
  });

  // theta on the shipped lattice
  std::string theta_cutoff = "3";
  auto* theta = app.add_subcommand("theta", "Theta series of the shipped Leech lattice");
  theta->add_option("--cutoff", theta_cutoff, "Highest exponent (q^{norm/2})");
  add_data_options(theta, common);
  add_theta_options(theta, common);
  theta->callback([&] { print(series_json(lattice_theta(*common.leech(), parse_cutoff(theta_cutoff), common.theta_options()))); });

  // isometry
  auto* isometry = app.add_subcommand("isometry", "Isometry checks and witness search");
  isometry->require_subcommand(1);
  std::string matrix_file;
  auto* iverify = isometry->add_subcommand("verify", "Check Gram preservation and unimodularity");
  iverify->add_option("lattice", lattice_file, "Gram matrix file")->required();
  iverify->add_option("matrix", matrix_file, "Matrix file")->required();
  iverify->callback([&] {
    auto L = std::make_shared<const Lattice>(load_lattice_file(lattice_file));
    Isometry g = load_isometry(L, matrix_file);
    print(ordered_json{{"valid", true}, {"order", g.order()}, {"determinant", to_string(determinant(g.matrix()))}});
  });
  auto* iprofile = isometry->add_subcommand("profile", "Cyclotomic profile, order and eigenspace dimensions");
  iprofile->add_option("lattice", lattice_file, "Gram matrix file")->required();
  iprofile->add_option("matrix", matrix_file, "Matrix file")->required();
  iprofile->callback([&] {
    auto L = std::make_shared<const Lattice>(load_lattice_file(lattice_file));
    Isometry g = load_isometry(L, matrix_file);
    ordered_json factors = ordered_json::object();
    for (const auto& [d, e] : g.profile().factors()) factors[std::to_string(d)] = e;
    print(ordered_json{{"profile", g.profile().to_string()},
                       {"factors", factors},
                       {"order", g.order()},
                       {"fixed_point_free", g.fixed_point_free()},
                       {"eigenspace_dims", eigenspace_dims(g, g.order())}});
  });
  std::int64_t search_p = 3;
  SearchOptions search_opts;
  std::string search_out;
  auto* isearch = isometry->add_subcommand("search", "Find an order-2p fixed-point-free witness by random words");
  isearch->add_option("--p", search_p, "Prime p")->required();
  isearch->add_option("--budget", search_opts.budget, "Number of words tried");
  isearch->add_option("--seed", search_opts.seed, "Seed");
  isearch->add_option("--max-length", search_opts.max_word_length, "Longest word");
  isearch->add_option("--output", search_out, "Write the witness matrix file with its certificate header");
  add_data_options(isearch, common);
  isearch->callback([&] {
    auto L = common.leech();
    const auto generators = load_generators(L, common.dir());
    const auto result = search_isometry(generators, order_2p_target(search_p), search_opts);
    auto meta = certificate_metadata(result, search_opts.seed);
    meta["label"] = "sigma_p" + std::to_string(search_p);
    if (!search_out.empty()) std::ofstream(search_out) << format_matrix_text(result.isometry.matrix(), meta);
    ordered_json j;
    for (const auto& [k, v] : meta) j[k] = v;
    j["order"] = result.isometry.order();
    print(j);
  });

  // sectors
  auto* sectors = app.add_subcommand("sectors", "Twisted sector invariants and characters");
  sectors->require_subcommand(1);
  std::int64_t sector_p = 3, sector_i = 1;
  std::string sector_cutoff = "3", table_format = "json";
  bool shift_c24 = false;
  auto* stable = sectors->add_subcommand("table", "Eigenspace dimensions, conformal weights and defect dimensions of sigma^i");
  stable->add_option("--p", sector_p, "Prime p")->required();
  stable->add_option("--format", table_format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  add_data_options(stable, common);
  stable->callback([&] {
    const Isometry s = common.sigma(sector_p);
    const std::int64_t m = 2 * sector_p;
    ordered_json rows = ordered_json::array();
    std::string md = "| i | eigenspace dims (j = 0.." + std::to_string(m - 1) + ") | conformal weight | defect dimension |\n|---|---|---|---|\n";
    for (std::int64_t i = 1; i < m; ++i) {
      SectorInvariants inv(s, i, m);
      rows.push_back(ordered_json{{"i", i}, {"eigenspace_dims", inv.eig_dims()}, {"rho", to_string(inv.rho())},
                                  {"defect_dim", to_string(inv.defect_dim())}});
      std::string dims;
      for (auto d : inv.eig_dims()) dims += (dims.empty() ? "" : " ") + std::to_string(d);
      md += "| " + std::to_string(i) + " | " + dims + " | " + to_string(inv.rho()) + " | " + to_string(inv.defect_dim()) + " |\n";
    }
    if (table_format == "markdown") {
      std::cout << md;
    } else {
      print(ordered_json{{"p", sector_p}, {"modulus", m}, {"sectors", rows}});
    }
  });
  auto* schar = sectors->add_subcommand("character", "Graded dimension of the sigma^i-twisted sector");
  schar->add_option("--p", sector_p, "Prime p")->required();
  schar->add_option("--i", sector_i, "Power of sigma")->required();
  schar->add_option("--cutoff", sector_cutoff, "Highest weight");
  schar->add_flag("--shift-c24", shift_c24, "Subtract c/24 = 1 from every exponent");
  add_data_options(schar, common);
  schar->callback([&] {
    const Isometry s = common.sigma(sector_p);
    const Rational cut = parse_cutoff(sector_cutoff);
    FracSeries ch = SectorInvariants(s, sector_i, 2 * sector_p).character(cut);
    if (shift_c24) ch = ch.shifted(Rational(-1));
    print(series_json(ch));
  });

  // fusion
  auto* fusion = app.add_subcommand("fusion", "Fusion rules, isotropic subgroups and orbifold characters");
  fusion->require_subcommand(1);
  std::int64_t fusion_n = 6, fusion_p = 3;
  std::string construction = "zp", fusion_cutoff = "4";
  auto* fiso = fusion->add_subcommand("isotropic", "Maximal isotropic subgroups of Z_n x Z_n");
  fiso->add_option("--n", fusion_n, "Modulus")->required();
  fiso->callback([&] {
    ordered_json out = ordered_json::array();
    for (const auto& h : maximal_isotropic_subgroups(QuadSpace{fusion_n})) {
      ordered_json gens = ordered_json::array(), elems = ordered_json::array();
      for (const auto& g : h.generators) gens.push_back({g.i, g.j});
      for (const auto& e : h.elements) elems.push_back({e.i, e.j});
      out.push_back(ordered_json{{"generators", gens}, {"order", h.elements.size()}, {"elements", elems}});
    }
    print(out);
  });
  auto* forb = fusion->add_subcommand("orbifold", "Orbifold character by tau (zp) or by -1 (z2)");
  forb->add_option("--p", fusion_p, "Prime p")->required();
  forb->add_option("--construction", construction, "zp or z2")->check(CLI::IsMember({"zp", "z2"}));
  forb->add_option("--cutoff", fusion_cutoff, "Highest weight");
  forb->add_flag("--shift-c24", shift_c24, "Subtract c/24 = 1 from every exponent");
  add_data_options(forb, common);
  add_theta_options(forb, common);
  forb->callback([&] {
    const Isometry s = common.sigma(fusion_p);
    const Rational cut = parse_cutoff(fusion_cutoff);
    FracSeries ch = construction == "zp" ? orbifold_character(s.power(fusion_p + 1), fusion_p, cut, common.theta_options())
                                         : orbifold_character(s.power(fusion_p), 2, cut, common.theta_options());
    if (shift_c24) ch = ch.shifted(Rational(-1));
    print(series_json(ch));
  });
  auto* fw1 = fusion->add_subcommand("weight1", "Weight-one dimension of the extension by the twists (i, 0)");
  fw1->add_option("--p", fusion_p, "Prime p")->required();
  add_data_options(fw1, common);
  add_theta_options(fw1, common);
  fw1->callback([&] {
    const auto count = twisted_weight_one_dimension(common.sigma(fusion_p), fusion_p, common.theta_options());
    ordered_json per = ordered_json::object(), excluded = ordered_json::object();
    for (const auto& [i, c] : count.per_sector) per[std::to_string(i)] = to_string(c);
    for (const auto& [i, rho] : count.excluded) excluded[std::to_string(i)] = to_string(rho);
    print(ordered_json{{"total", to_string(count.total)},
                       {"untwisted", to_string(count.untwisted)},
                       {"per_sector", per},
                       {"excluded_sector_weights", excluded}});
  });

  // ising
  auto* ising = app.add_subcommand("ising", "c = 1/2 minimal-model characters");
  ising->require_subcommand(1);
  std::string ising_cutoff = "4";
  auto* ichars = ising->add_subcommand("chars", "Characters of L(1/2, h)");
  ichars->add_option("--cutoff", ising_cutoff, "Highest weight");
  ichars->callback([&] {
    ordered_json out = ordered_json::object();
    for (const auto& h : ising_weights()) out[to_string(h)] = series_json(c12_character(h, parse_cutoff(ising_cutoff)).series);
    print(out);
  });
  auto* iext = ising->add_subcommand("extension-check", "Weight-one dimension of ch_0^2 + ch_1/2^2");
  iext->callback([&] {
    const Rational c = extension_weight_one_check();
    print(ordered_json{{"weight_one_dimension", to_string(c)}, {"nonzero", c != 0}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
