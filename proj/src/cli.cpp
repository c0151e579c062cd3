// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polyvol/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "polyvol/charpoly.hpp"
#include "polyvol/errors.hpp"
#include "polyvol/io.hpp"
#include "polyvol/kernels.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/polymer.hpp"
#include "polyvol/polymer_mc.hpp"
#include "polyvol/qvolume.hpp"
#include "polyvol/report.hpp"
#include "polyvol/zoo.hpp"

namespace polyvol::cli {

namespace {

using report::Json;

struct RunConfig {
  std::string zoo;
  std::string arrangement_path;
  std::string graph_path;
  std::string radii_path;
  std::string radii2_path;
  std::vector<double> disk_radii;
  std::vector<double> disk_radii2;
  std::string order = "input";
  std::string subset;
  std::string method = "dc";
  std::string out_path;
  std::string format = "text";
  std::uint64_t seed = 42;
  std::uint64_t samples = 100000;
  std::uint64_t spot_samples = 10000;
  std::uint64_t attempts = 100000;
  double ratio = 100.0;
  int threads = 1;
  int cap = kDefaultEnumerationCap;
  int size_px = 480;
  bool no_labels = false;
};

struct Input {
  Arrangement arrangement;
  std::optional<Family> family;
  int n = 0;
  std::optional<Graph> graph;
};

struct Output {
  std::string text;
  int code = kExitOk;
};

int parse_positive(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("invalid " + what + " '" + s + "'");
}

Input load_input(const RunConfig& cfg) {
  const int given = !cfg.zoo.empty() + !cfg.arrangement_path.empty() + !cfg.graph_path.empty();
  if (given != 1) {
    throw ValidationError("exactly one of --zoo, --arrangement, --graph is required");
  }
  Input in;
  if (!cfg.arrangement_path.empty()) {
    in.arrangement = parse_arrangement(read_file(cfg.arrangement_path));
    return in;
  }
  std::string graph_path = cfg.graph_path;
  if (!cfg.zoo.empty()) {
    const auto colon = cfg.zoo.find(':');
    if (colon == std::string::npos) throw ValidationError("--zoo expects family:arg");
    const std::string kind = cfg.zoo.substr(0, colon);
    const std::string arg = cfg.zoo.substr(colon + 1);
    if (kind == "braid") {
      in.n = parse_positive(arg, "braid size");
      in.family = Family::Braid;
      in.arrangement = braid(in.n);
      return in;
    }
    if (kind == "typeb") {
      in.n = parse_positive(arg, "type-B size");
      in.family = Family::TypeB;
      in.arrangement = type_b(in.n);
      return in;
    }
    if (kind != "graph") throw ValidationError("unknown zoo family '" + kind + "'");
    graph_path = arg;
  }
  in.graph = parse_graph(read_file(graph_path));
  in.arrangement = graphical(*in.graph);
  return in;
}

Radii resolve_radii(const Input& in, const std::string& path,
                    const std::vector<double>& disks) {
  Radii r;
  if (!path.empty()) {
    r = parse_radii(read_file(path));
  } else if (!disks.empty()) {
    if (!in.family) throw ValidationError("--disk-radii needs --zoo braid:n or typeb:n");
    if (static_cast<int>(disks.size()) != in.n) {
      throw ValidationError("--disk-radii has " + std::to_string(disks.size()) +
                            " entries, expected " + std::to_string(in.n));
    }
    r = disk_radii(*in.family, disks);
  } else {
    r.values.assign(in.arrangement.size(), 1.0);
  }
  validate_radii(r, in.arrangement.size());
  return r;
}

HyperplaneOrder resolve_order(const RunConfig& cfg, const Arrangement& a) {
  if (cfg.order == "input") return HyperplaneOrder::identity(a.size());
  std::vector<std::string> labels;
  std::stringstream ss(cfg.order);
  for (std::string item; std::getline(ss, item, ';');) labels.push_back(item);
  return HyperplaneOrder::from_labels(a, labels);
}

SubsetMask resolve_subset(const std::string& text, const Arrangement& a) {
  SubsetMask s;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) {
    if (item.empty()) continue;
    const int i = a.find_label(item);
    if (i < 0) throw ValidationError("unknown hyperplane label '" + item + "'");
    s = s.with(i);
  }
  return s;
}

bool json_format(const RunConfig& cfg) { return cfg.format == "json"; }

Output cmd_charpoly(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto& a = in.arrangement;
  IntPolynomial chi;
  if (cfg.method == "dc") {
    chi = char_poly_dc(a);
  } else if (cfg.method == "whitney") {
    chi = char_poly_whitney(a, cfg.cap);
  } else if (cfg.method == "nbc") {
    chi = char_poly_nbc(a, resolve_order(cfg, a), cfg.cap);
  } else {
    throw ValidationError("unknown method '" + cfg.method + "'");
  }
  if (json_format(cfg)) {
    Json j = report::polynomial_json(chi, "t");
    if (in.graph) {
      j["chromatic"] = report::polynomial_json(chromatic_polynomial(*in.graph, cfg.cap), "t");
      j["components"] = in.graph->component_count();
    }
    return {report::dump(j)};
  }
  std::string text = chi.to_string("t") + "\n";
  if (in.graph) {
    text += "chromatic: " + chromatic_polynomial(*in.graph, cfg.cap).to_string("t") + "\n";
  }
  return {text};
}

Output cmd_qvol(const RunConfig& cfg) {
  const auto a = load_input(cfg).arrangement;
  const auto q = q_volume(a);
  const auto cv = connected_volume(a);
  if (json_format(cfg)) {
    Json j = report::qvolume_json(q);
    j["connected_volume"] = {{"multiplier", report::integer_json(cv.multiplier)},
                             {"two_pi_exponent", cv.rank}};
    return {report::dump(j)};
  }
  return {q.to_string() + "\nconnected volume: " + cv.multiplier.get_str() + " * (2pi)^" +
          std::to_string(cv.rank) + "\n"};
}

Output cmd_nbc(const RunConfig& cfg) {
  const auto a = load_input(cfg).arrangement;
  const auto order = resolve_order(cfg, a);
  const auto broken = broken_circuits(a, order, cfg.cap);
  const auto counts = nbc_count_by_size(a, order, cfg.cap);
  const auto bases = nbc_bases(a, order, cfg.cap);
  const auto poincare = poincare_polynomial(a);
  if (json_format(cfg)) {
    Json j;
    j["broken_circuits"] = report::subsets_json(a, broken);
    j["counts_by_size"] = counts;
    j["nbc_bases"] = report::subsets_json(a, bases);
    j["poincare"] = report::polynomial_json(poincare, "t");
    return {report::dump(j)};
  }
  std::ostringstream os;
  os << "broken circuits:";
  for (auto b : broken) os << " " << report::subset_text(a, b);
  os << "\ncounts by size:";
  for (auto c : counts) os << " " << c;
  os << "\nnbc bases: " << bases.size() << "\npoincare: " << poincare.to_string("t") << "\n";
  return {os.str()};
}

Output cmd_list(const RunConfig& cfg, bool circuits) {
  const auto a = load_input(cfg).arrangement;
  const auto sets = circuits ? enumerate_circuits(a, cfg.cap) : enumerate_bases(a, cfg.cap);
  if (json_format(cfg)) return {report::dump(report::subsets_json(a, sets))};
  std::string text;
  for (auto s : sets) text += report::subset_text(a, s) + "\n";
  return {text};
}

Output cmd_mc_qvol(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto radii = resolve_radii(in, cfg.radii_path, cfg.disk_radii);
  const auto m = mc_q_volume(in.arrangement, radii, cfg.samples, cfg.seed, cfg.cap);
  if (json_format(cfg)) return {report::dump(report::mc_qvolume_json(in.arrangement, m))};
  return {report::mc_qvolume_text(in.arrangement, m)};
}

Output cmd_invariance(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto r1 = resolve_radii(in, cfg.radii_path, cfg.disk_radii);
  const auto r2 = resolve_radii(in, cfg.radii2_path, cfg.disk_radii2);
  const auto rep = invariance_check(in.arrangement, r1, r2, cfg.samples, cfg.seed, cfg.cap);
  const int code = rep.pass ? kExitOk : kExitFail;
  if (json_format(cfg)) return {report::dump(report::invariance_json(rep)), code};
  return {report::invariance_text(rep), code};
}

Output cmd_tori(const RunConfig& cfg) {
  const auto a = load_input(cfg).arrangement;
  const auto rep = separated_radii_check(a, resolve_order(cfg, a), cfg.ratio,
                                         cfg.spot_samples, cfg.seed, cfg.cap);
  const int code = rep.pass ? kExitOk : kExitFail;
  if (json_format(cfg)) return {report::dump(report::tori_json(a, rep)), code};
  return {report::tori_text(a, rep), code};
}

Output cmd_product(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto radii = resolve_radii(in, cfg.radii_path, cfg.disk_radii);
  if (cfg.subset.empty()) throw ValidationError("verify product needs --subset");
  const auto s = resolve_subset(cfg.subset, in.arrangement);
  const auto rep = product_check(in.arrangement, s, radii, cfg.samples, cfg.seed, cfg.cap);
  const int code = rep.pass ? kExitOk : kExitFail;
  if (json_format(cfg)) return {report::dump(report::product_json(in.arrangement, rep)), code};
  return {report::product_text(in.arrangement, rep), code};
}

Output cmd_tregion(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto radii = resolve_radii(in, cfg.radii_path, cfg.disk_radii);
  const bool inside = in_T_region(in.arrangement, radii, cfg.cap);
  if (json_format(cfg)) return {report::dump(Json{{"in_T_region", inside}})};
  return {std::string(inside ? "true" : "false") + "\n"};
}

PolymerConfig draw_polymer(const RunConfig& cfg, const Input& in) {
  if (!in.family) throw ValidationError("sample/render need --zoo braid:n or typeb:n");
  std::vector<double> disks = cfg.disk_radii;
  if (disks.empty()) disks.assign(in.n, 1.0);
  if (static_cast<int>(disks.size()) != in.n) {
    throw ValidationError("--disk-radii must have " + std::to_string(in.n) + " entries");
  }
  std::optional<SubsetMask> basis;
  if (!cfg.subset.empty()) basis = resolve_subset(cfg.subset, in.arrangement);
  return sample_polymer(*in.family, disks, basis, cfg.seed, cfg.attempts);
}

Output cmd_sample(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto config = draw_polymer(cfg, in);
  if (cfg.format == "svg") return {render_svg(config, {cfg.size_px, !cfg.no_labels, true})};
  Json j = report::polymer_json(config);
  j["active"] = report::subset_json(in.arrangement, config.active);
  if (json_format(cfg)) return {report::dump(j)};
  std::ostringstream os;
  os << "active " << report::subset_text(in.arrangement, config.active) << "\n";
  for (int k = 0; k < config.disks(); ++k) {
    os << "  x" << k + 1 << " = (" << report::format_double(config.centers[k].real()) << ", "
       << report::format_double(config.centers[k].imag()) << ")  r = "
       << report::format_double(config.disk_radii[k]) << "\n";
  }
  return {os.str()};
}

Output cmd_render(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  return {render_svg(draw_polymer(cfg, in), {cfg.size_px, !cfg.no_labels, true})};
}

void add_input_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--zoo", cfg.zoo, "Built-in family: braid:n | typeb:n | graph:<path>");
  app->add_option("--arrangement", cfg.arrangement_path, "Arrangement JSON file");
  app->add_option("--graph", cfg.graph_path, "Graph JSON file (graphical arrangement)");
  app->add_option("--cap", cfg.cap, "Enumeration cap on hyperplane count")
      ->capture_default_str()
      ->check(CLI::Range(1, 62));
}

void add_output_options(CLI::App* app, RunConfig& cfg, bool svg) {
  app->add_option("--out", cfg.out_path, "Write output here instead of stdout");
  auto* fmt = app->add_option("--format", cfg.format, "Output format")->capture_default_str();
  fmt->check(svg ? CLI::IsMember({"text", "json", "svg"}) : CLI::IsMember({"text", "json"}));
}

void add_mc_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--seed", cfg.seed, "RNG seed (default 42, or $POLYVOL_SEED)");
  app->add_option("--samples", cfg.samples, "Samples per stratum")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--threads", cfg.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void add_radii_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--radii", cfg.radii_path, "Radii JSON file (default: all radii 1)");
  app->add_option("--disk-radii", cfg.disk_radii, "Disk radii r_1,...,r_n for braid/typeb")
      ->delimiter(',');
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("POLYVOL_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "polyvol: ignoring invalid POLYVOL_SEED '" << env << "'\n";
    }
  }

  CLI::App app{"polyvol: characteristic polynomials, q-volumes and Monte Carlo "
               "verification for branched polymers over hyperplane arrangements"};
  app.require_subcommand(1);
  std::function<Output()> action;

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial chi_A(t)");
  add_input_options(charpoly, cfg);
  add_output_options(charpoly, cfg, false);
  charpoly->add_option("--method", cfg.method, "dc | whitney | nbc")
      ->capture_default_str()
      ->check(CLI::IsMember({"dc", "whitney", "nbc"}));
  charpoly->add_option("--order", cfg.order, "Hyperplane order for nbc: 'input' or labels a;b;...")
      ->capture_default_str();
  charpoly->callback([&] { action = [&] { return cmd_charpoly(cfg); }; });

  auto* qvol = app.add_subcommand("qvol", "Exact q-volume (2pi)^r (-1)^r chi_A(-q)");
  add_input_options(qvol, cfg);
  add_output_options(qvol, cfg, false);
  qvol->callback([&] { action = [&] { return cmd_qvol(cfg); }; });

  auto* nbc = app.add_subcommand("nbc", "Broken circuits, NBC counts and Poincare polynomial");
  add_input_options(nbc, cfg);
  add_output_options(nbc, cfg, false);
  nbc->add_option("--order", cfg.order, "'input' or labels a;b;...")->capture_default_str();
  nbc->callback([&] { action = [&] { return cmd_nbc(cfg); }; });

  auto* circuits = app.add_subcommand("circuits", "List the circuits");
  add_input_options(circuits, cfg);
  add_output_options(circuits, cfg, false);
  circuits->callback([&] { action = [&] { return cmd_list(cfg, true); }; });

  auto* bases = app.add_subcommand("bases", "List the bases");
  add_input_options(bases, cfg);
  add_output_options(bases, cfg, false);
  bases->callback([&] { action = [&] { return cmd_list(cfg, false); }; });

  auto* mc = app.add_subcommand("mc-qvol", "Monte Carlo estimate of the q-volume");
  add_input_options(mc, cfg);
  add_output_options(mc, cfg, false);
  add_mc_options(mc, cfg);
  add_radii_options(mc, cfg);
  mc->callback([&] { action = [&] { return cmd_mc_qvol(cfg); }; });

  auto* verify = app.add_subcommand("verify", "Statistical and exact verification");
  verify->require_subcommand(1);

  auto* inv = verify->add_subcommand("invariance", "Per-size stratum sums under two radii");
  add_input_options(inv, cfg);
  add_output_options(inv, cfg, false);
  add_mc_options(inv, cfg);
  add_radii_options(inv, cfg);
  inv->add_option("--radii2", cfg.radii2_path, "Second radii JSON file");
  inv->add_option("--disk-radii2", cfg.disk_radii2, "Second disk radii for braid/typeb")
      ->delimiter(',');
  inv->callback([&] { action = [&] { return cmd_invariance(cfg); }; });

  auto* tori = verify->add_subcommand("tori", "Certify the torus decomposition for separated radii");
  add_input_options(tori, cfg);
  add_output_options(tori, cfg, false);
  tori->add_option("--ratio", cfg.ratio, "Radius growth ratio (> 1)")
      ->capture_default_str()
      ->check(CLI::Range(1.0, std::numeric_limits<double>::max()));
  tori->add_option("--order", cfg.order, "'input' or labels a;b;...")->capture_default_str();
  tori->add_option("--seed", cfg.seed, "RNG seed for the spot check");
  tori->add_option("--spot-samples", cfg.spot_samples, "Monte Carlo spot-check samples per basis (0 = off)")
      ->capture_default_str();
  tori->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  tori->callback([&] { action = [&] { return cmd_tori(cfg); }; });

  auto* product = verify->add_subcommand("product", "Component product formula for one stratum");
  add_input_options(product, cfg);
  add_output_options(product, cfg, false);
  add_mc_options(product, cfg);
  add_radii_options(product, cfg);
  product->add_option("--subset", cfg.subset, "Independent set as labels separated by ';'");
  product->callback([&] { action = [&] { return cmd_product(cfg); }; });

  auto* tregion = app.add_subcommand("tregion", "Test whether the radii lie in the T_A region");
  add_input_options(tregion, cfg);
  add_output_options(tregion, cfg, false);
  add_radii_options(tregion, cfg);
  tregion->callback([&] { action = [&] { return cmd_tregion(cfg); }; });

  for (auto [name, help] : {std::pair{"sample", "Draw and realize one accepted polymer"},
                            std::pair{"render", "Draw one accepted polymer as SVG"}}) {
    const bool is_render = std::string(name) == "render";
    auto* sub = app.add_subcommand(name, help);
    add_input_options(sub, cfg);
    sub->add_option("--out", cfg.out_path, "Write output here instead of stdout");
    if (!is_render) {
      sub->add_option("--format", cfg.format, "text | json | svg")
          ->capture_default_str()
          ->check(CLI::IsMember({"text", "json", "svg"}));
    }
    sub->add_option("--seed", cfg.seed, "RNG seed (default 42, or $POLYVOL_SEED)");
    sub->add_option("--disk-radii", cfg.disk_radii, "Disk radii (default all 1)")->delimiter(',');
    sub->add_option("--subset", cfg.subset, "Basis as labels separated by ';' (default: first accepted)");
    sub->add_option("--attempts", cfg.attempts, "Draws per basis before giving up")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--size", cfg.size_px, "SVG size in pixels")->capture_default_str();
    sub->add_flag("--no-labels", cfg.no_labels, "Omit disk labels in SVG");
    if (is_render) {
      sub->callback([&] { action = [&] { return cmd_render(cfg); }; });
    } else {
      sub->callback([&] { action = [&] { return cmd_sample(cfg); }; });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.ratio <= 1.0) throw ValidationError("--ratio must be > 1");
    kernels::set_thread_count(cfg.threads);
    Output result = action();
    if (cfg.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw ValidationError("cannot write '" + cfg.out_path + "'");
      file << result.text;
    }
    return result.code;
  } catch (const Error& e) {
    err << "polyvol: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace polyvol::cli
