#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsat/errors.hpp"
#include "qsat/graph.hpp"
#include "qsat/homotopy.hpp"
#include "qsat/instances.hpp"
#include "qsat/kernel.hpp"
#include "qsat/matching.hpp"
#include "qsat/rdm.hpp"
#include "qsat/rng.hpp"
#include "qsat/scan.hpp"
#include "qsat/sunflower.hpp"

using nlohmann::json;
using namespace qsat;

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameters("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

// Every output embeds a manifest: the full parameter set, seeds, version
// and input/output digests. Reruns with an equal manifest (timestamp
// aside) produce byte-identical result payloads.
struct Manifest {
  std::string subcommand;
  json parameters = json::object();
  std::uint64_t seed = 0;
  json input_digests = json::object();

  void add_input(const std::string& path) {
    input_digests[path] = hex64(fnv1a(read_file(path)));
  }

  json wrap(const json& result) const {
    json m;
    m["subcommand"] = subcommand;
    m["parameters"] = parameters;
    m["seed"] = seed;
    m["version"] = kVersion;
    m["timestamp"] = timestamp_utc();
    m["input_digests"] = input_digests;
    m["output_digest"] = hex64(fnv1a(result.dump()));
    return json{{"manifest", m}, {"result", result}};
  }
};

void emit(const Manifest& manifest, const json& result, const std::string& out_path) {
  const json doc = manifest.wrap(result);
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InvalidParameters("cannot write file: " + out_path);
    out << doc.dump(2) << "\n";
  }
}

json matching_to_json(const Matching& m) {
  json j = json::array();
  for (int q : m.clause_to_qubit) j.push_back(q);
  return j;
}

json product_state_to_json(const ProductState& s) {
  json sites = json::array();
  for (const auto& site : s.sites)
    sites.push_back({{site[0].real(), site[0].imag()}, {site[1].real(), site[1].imag()}});
  return sites;
}

json spectrum_to_json(const std::vector<double>& vals) {
  json j = json::array();
  for (double v : vals) j.push_back(v);
  return j;
}

EnsembleMode parse_mode(const std::string& mode) {
  if (mode == "fixed" || mode == "fixed-count") return EnsembleMode::fixed_count;
  if (mode == "binomial") return EnsembleMode::binomial;
  throw InvalidParameters("unknown ensemble mode: " + mode);
}

ProjectorForm parse_form(const std::string& form) {
  if (form == "generic") return ProjectorForm::generic;
  if (form == "product") return ProjectorForm::product;
  throw InvalidParameters("unknown projector form: " + form);
}

int default_jobs() {
  if (const char* env = std::getenv("QSAT_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic k-QSAT toolkit: clause-graph sampling, matchings, kernel "
               "dimensions, product-state homotopy, RDM diagnostics and "
               "phase-boundary scans"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a random interaction graph");
  int gen_n = 10, gen_k = 3;
  double gen_alpha = 1.0;
  std::string gen_mode = "fixed", gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("--n", gen_n, "Number of qubits")->required();
  gen->add_option("--k", gen_k, "Clause arity");
  gen->add_option("--alpha", gen_alpha, "Clause density")->required();
  gen->add_option("--mode", gen_mode, "fixed | binomial");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Write the bare graph JSON here");

  // core
  auto* core = app.add_subcommand("core", "Hypercore of a graph");
  std::string core_graph, core_out;
  core->add_option("--graph", core_graph, "Graph JSON file")->required();
  core->add_option("--out", core_out, "Write the core graph JSON here");

  // match / cover / count-coverings / gf2
  auto* match = app.add_subcommand("match", "Maximum clause-qubit matching");
  std::string match_graph;
  match->add_option("--graph", match_graph)->required();

  auto* cover = app.add_subcommand("cover", "Dimer-covering decision");
  std::string cover_graph;
  cover->add_option("--graph", cover_graph)->required();

  auto* countc = app.add_subcommand("count-coverings", "Exact dimer-covering count");
  std::string countc_graph;
  int countc_limit = 24;
  countc->add_option("--graph", countc_graph)->required();
  countc->add_option("--limit", countc_limit, "Enumeration size limit");

  auto* gf2 = app.add_subcommand("gf2", "GF(2) surjectivity of the adjacency");
  std::string gf2_graph;
  gf2->add_option("--graph", gf2_graph)->required();

  // kernel
  auto* kernel = app.add_subcommand("kernel", "Generic ground-space dimension");
  std::string kernel_graph, kernel_form = "generic";
  std::uint64_t kernel_seed = 0;
  double kernel_tol = 0.0;
  int kernel_dense_limit = 14;
  kernel->add_option("--graph", kernel_graph)->required();
  kernel->add_option("--seed", kernel_seed);
  kernel->add_option("--form", kernel_form, "generic | product");
  kernel->add_option("--tol", kernel_tol, "Zero threshold (0 = auto)");
  kernel->add_option("--dense-limit", kernel_dense_limit);

  // sat
  auto* sat = app.add_subcommand("sat", "Iterative SAT decision");
  std::string sat_graph, sat_form = "generic";
  std::uint64_t sat_seed = 0;
  double sat_tol_zero = 1e-10, sat_tol_gap = 1e-8;
  int sat_max_iters = 5000;
  sat->add_option("--graph", sat_graph)->required();
  sat->add_option("--seed", sat_seed);
  sat->add_option("--form", sat_form, "generic | product");
  sat->add_option("--tol-zero", sat_tol_zero);
  sat->add_option("--tol-gap", sat_tol_gap);
  sat->add_option("--max-iters", sat_max_iters);

  // prodsat
  auto* prodsat = app.add_subcommand("prodsat", "Satisfying product states");
  std::string prodsat_graph;
  std::uint64_t prodsat_seed = 0;
  int prodsat_steps = 200;
  double prodsat_tol = 1e-10;
  bool prodsat_enumerate = false;
  std::uint64_t prodsat_max_states = 4096;
  prodsat->add_option("--graph", prodsat_graph)->required();
  prodsat->add_option("--seed", prodsat_seed);
  prodsat->add_option("--steps", prodsat_steps, "Continuation steps");
  prodsat->add_option("--tol", prodsat_tol, "Residual energy target");
  prodsat->add_flag("--enumerate", prodsat_enumerate,
                    "One state per dimer covering (requires M = touched qubits)");
  prodsat->add_option("--max-states", prodsat_max_states);

  // rdm
  auto* rdm = app.add_subcommand("rdm", "Reduced-density-matrix rank histogram");
  std::string rdm_graph;
  std::uint64_t rdm_seed = 0;
  int rdm_b = 5;
  double rdm_tol = 1e-10;
  rdm->add_option("--graph", rdm_graph)->required();
  rdm->add_option("--seed", rdm_seed);
  rdm->add_option("--subset-size", rdm_b);
  rdm->add_option("--tol", rdm_tol);

  // scan
  auto* scan = app.add_subcommand("scan", "Monte Carlo phase-boundary scan");
  std::string scan_property = "coverable", scan_mode = "fixed";
  int scan_k = 3;
  std::vector<int> scan_n;
  double scan_amin = 0.5, scan_amax = 1.2, scan_astep = 0.1;
  long scan_trials = 100;
  std::uint64_t scan_seed = 0;
  double scan_tol_zero = 1e-10, scan_tol_gap = 1e-8;
  int scan_max_iters = 2000, scan_dense_cutoff = 10, scan_jobs = default_jobs();
  std::string scan_csv, scan_json_path;
  scan->add_option("--property", scan_property, "coverable | core | sat")->required();
  scan->add_option("--n", scan_n, "Qubit counts")->required();
  scan->add_option("--k", scan_k, "Clause arity");
  scan->add_option("--alpha-min", scan_amin);
  scan->add_option("--alpha-max", scan_amax);
  scan->add_option("--alpha-step", scan_astep);
  scan->add_option("--trials", scan_trials);
  scan->add_option("--seed", scan_seed);
  scan->add_option("--mode", scan_mode, "fixed | binomial");
  scan->add_option("--tol-zero", scan_tol_zero);
  scan->add_option("--tol-gap", scan_tol_gap);
  scan->add_option("--max-iters", scan_max_iters);
  scan->add_option("--dense-cutoff", scan_dense_cutoff);
  scan->add_option("--jobs", scan_jobs, "Worker threads (env QSAT_JOBS)");
  scan->add_option("--csv", scan_csv, "Write the scan table here");
  scan->add_option("--json", scan_json_path, "Write the scan JSON here");

  // bound
  auto* bound = app.add_subcommand("bound", "Entropy-bound root alpha_c^+(k)");
  int bound_k = 4;
  bound->add_option("--k", bound_k)->required();

  // paper-instances
  auto* inst = app.add_subcommand("paper-instances",
                                  "Write the three bundled reference instances");
  std::string inst_dir = ".";
  inst->add_option("--dir", inst_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Manifest manifest;

    if (gen->parsed()) {
      manifest.subcommand = "gen";
      manifest.seed = gen_seed;
      manifest.parameters = {{"n", gen_n},       {"k", gen_k},
                             {"alpha", gen_alpha}, {"mode", gen_mode},
                             {"out", gen_out}};
      const Graph g =
          sample_graph({gen_n, gen_k, gen_alpha, parse_mode(gen_mode), gen_seed});
      const json graph_json = json::parse(graph_to_json(g));
      if (!gen_out.empty()) {
        save_graph(g, gen_out);
        emit(manifest, json{{"written", gen_out}, {"n_clauses", g.n_clauses()}}, "");
      } else {
        emit(manifest, graph_json, "");
      }
    } else if (core->parsed()) {
      manifest.subcommand = "core";
      manifest.parameters = {{"graph", core_graph}, {"out", core_out}};
      manifest.add_input(core_graph);
      const Graph g = load_graph(core_graph);
      const Graph c = hypercore(g);
      json result = json::parse(graph_to_json(c));
      result["core_clauses"] = c.n_clauses();
      result["core_qubits"] = touched_qubit_count(c);
      if (!core_out.empty()) save_graph(c, core_out);
      emit(manifest, result, "");
    } else if (match->parsed()) {
      manifest.subcommand = "match";
      manifest.parameters = {{"graph", match_graph}};
      manifest.add_input(match_graph);
      const Graph g = load_graph(match_graph);
      const Matching m = max_clause_matching(g);
      emit(manifest,
           json{{"result", m.size()},
                {"covers_all", m.covers_all()},
                {"witness", matching_to_json(m)}},
           "");
    } else if (cover->parsed()) {
      manifest.subcommand = "cover";
      manifest.parameters = {{"graph", cover_graph}};
      manifest.add_input(cover_graph);
      const Graph g = load_graph(cover_graph);
      const Matching m = max_clause_matching(g);
      const bool coverable = is_clause_coverable(g);
      json witness = coverable ? matching_to_json(m) : json(nullptr);
      emit(manifest, json{{"coverable", coverable}, {"witness", witness}}, "");
    } else if (countc->parsed()) {
      manifest.subcommand = "count-coverings";
      manifest.parameters = {{"graph", countc_graph}, {"limit", countc_limit}};
      manifest.add_input(countc_graph);
      const Graph g = load_graph(countc_graph);
      emit(manifest, json{{"count", count_dimer_coverings(g, countc_limit)}}, "");
    } else if (gf2->parsed()) {
      manifest.subcommand = "gf2";
      manifest.parameters = {{"graph", gf2_graph}};
      manifest.add_input(gf2_graph);
      const Graph g = load_graph(gf2_graph);
      emit(manifest,
           json{{"surjective", gf2_surjective(g)},
                {"rank", Gf2Matrix::from_graph(g).rank()}},
           "");
    } else if (kernel->parsed()) {
      manifest.subcommand = "kernel";
      manifest.seed = kernel_seed;
      manifest.parameters = {{"graph", kernel_graph},
                             {"form", kernel_form},
                             {"tol", kernel_tol},
                             {"dense_limit", kernel_dense_limit}};
      manifest.add_input(kernel_graph);
      const Graph g = load_graph(kernel_graph);
      const ProjectorSet p = sample_projectors(g, kernel_seed, parse_form(kernel_form));
      const KernelResult r = kernel_dimension(g, p, kernel_tol, kernel_dense_limit);
      emit(manifest,
           json{{"dimension", r.dimension},
                {"tol", r.tol},
                {"marginal", r.marginal},
                {"method", r.method},
                {"spectrum_evidence", spectrum_to_json(r.spectrum_evidence)}},
           "");
    } else if (sat->parsed()) {
      manifest.subcommand = "sat";
      manifest.seed = sat_seed;
      manifest.parameters = {{"graph", sat_graph},
                             {"form", sat_form},
                             {"tol_zero", sat_tol_zero},
                             {"tol_gap", sat_tol_gap},
                             {"max_iters", sat_max_iters}};
      manifest.add_input(sat_graph);
      const Graph g = load_graph(sat_graph);
      const ProjectorSet p = sample_projectors(g, sat_seed, parse_form(sat_form));
      const SatVerdict v =
          decide_sat(g, p, sat_tol_zero, sat_tol_gap, sat_max_iters, 24,
                     derive_seed(sat_seed, 0xd151));
      emit(manifest,
           json{{"verdict", to_string(v.verdict)},
                {"min_eigenvalue", v.min_eigenvalue},
                {"iterations", v.iterations},
                {"residual", v.residual}},
           "");
    } else if (prodsat->parsed()) {
      manifest.subcommand = "prodsat";
      manifest.seed = prodsat_seed;
      manifest.parameters = {{"graph", prodsat_graph},
                             {"steps", prodsat_steps},
                             {"tol", prodsat_tol},
                             {"enumerate", prodsat_enumerate},
                             {"max_states", prodsat_max_states}};
      manifest.add_input(prodsat_graph);
      const Graph g = load_graph(prodsat_graph);
      const ProjectorSet target =
          sample_projectors(g, prodsat_seed, ProjectorForm::generic);
      ContinuationOptions opts;
      opts.steps = prodsat_steps;
      opts.tol = prodsat_tol;
      if (prodsat_enumerate) {
        const EnumerationResult res = enumerate_product_states(
            g, target, derive_seed(prodsat_seed, 0xe17), prodsat_max_states, opts);
        json states = json::array();
        for (const auto& s : res.states)
          states.push_back({{"state", product_state_to_json(s)},
                            {"energy", energy_of_product_state(g, target, s)}});
        emit(manifest,
             json{{"count", res.states.size()},
                  {"failed_coverings", res.failed_coverings},
                  {"states", states}},
             "");
      } else {
        const ProductState s =
            solve_product_state(g, target, derive_seed(prodsat_seed, 0x50f), opts);
        emit(manifest,
             json{{"state", product_state_to_json(s)},
                  {"energy", energy_of_product_state(g, target, s)}},
             "");
      }
    } else if (rdm->parsed()) {
      manifest.subcommand = "rdm";
      manifest.seed = rdm_seed;
      manifest.parameters = {{"graph", rdm_graph},
                             {"subset_size", rdm_b},
                             {"tol", rdm_tol}};
      manifest.add_input(rdm_graph);
      const Graph g = load_graph(rdm_graph);
      const ProjectorSet p = sample_projectors(g, rdm_seed, ProjectorForm::generic);
      const auto basis = ground_space_basis(g, p);
      const std::uint64_t diag_seed = derive_seed(rdm_seed, 0xd1a6);
      const RankHistogram hist =
          rank_histogram(basis, g.n_qubits, rdm_b, rdm_tol, diag_seed);
      json counts = json::object();
      for (const auto& [rank, count] : hist.counts)
        counts[std::to_string(rank)] = count;
      emit(manifest,
           json{{"histogram", counts},
                {"subset_size", hist.subset_size},
                {"ground_dimension", basis.size()},
                {"diagnostic_seed", hist.diagnostic_seed},
                {"any_marginal", hist.any_marginal}},
           "");
    } else if (scan->parsed()) {
      manifest.subcommand = "scan";
      manifest.seed = scan_seed;
      manifest.parameters = {{"property", scan_property},
                             {"k", scan_k},
                             {"n", scan_n},
                             {"alpha_min", scan_amin},
                             {"alpha_max", scan_amax},
                             {"alpha_step", scan_astep},
                             {"trials", scan_trials},
                             {"mode", scan_mode},
                             {"jobs", scan_jobs}};
      std::vector<double> grid;
      for (double a = scan_amin; a <= scan_amax + 1e-12; a += scan_astep)
        grid.push_back(a);
      ScanResult result;
      if (scan_property == "sat") {
        result = scan_sat_probability(scan_k, scan_n, grid, scan_trials, scan_seed,
                                      parse_mode(scan_mode), scan_tol_zero,
                                      scan_tol_gap, scan_max_iters, scan_dense_cutoff,
                                      scan_jobs);
      } else if (scan_property == "coverable" || scan_property == "core") {
        const GraphProperty prop = scan_property == "coverable"
                                       ? GraphProperty::coverable
                                       : GraphProperty::core_nonempty;
        if (scan_n.size() != 1)
          throw InvalidParameters("graph-property scans take a single --n");
        result = scan_graph_property(scan_k, scan_n[0], grid, scan_trials, prop,
                                     scan_seed, parse_mode(scan_mode), scan_jobs);
      } else {
        throw InvalidParameters("unknown scan property: " + scan_property);
      }
      if (!scan_csv.empty()) {
        std::ofstream out(scan_csv);
        if (!out) throw InvalidParameters("cannot write file: " + scan_csv);
        out << scan_to_csv(result);
      }
      if (!scan_json_path.empty()) {
        std::ofstream out(scan_json_path);
        if (!out) throw InvalidParameters("cannot write file: " + scan_json_path);
        out << scan_to_json(result) << "\n";
      }
      emit(manifest, json::parse(scan_to_json(result)), "");
    } else if (bound->parsed()) {
      manifest.subcommand = "bound";
      manifest.parameters = {{"k", bound_k}};
      const BoundResult b = sunflower_alpha_upper(bound_k);
      json result{{"k", b.k},
                  {"alpha_upper", b.alpha_upper},
                  {"bracket", {b.bracket_lo, b.bracket_hi}},
                  {"entropy_at_bracket", {b.entropy_lo, b.entropy_hi}}};
      if (!b.note.empty()) result["note"] = b.note;
      emit(manifest, result, "");
    } else if (inst->parsed()) {
      manifest.subcommand = "paper-instances";
      manifest.parameters = {{"dir", inst_dir}};
      json written = json::object();
      for (char id : {'a', 'b', 'c'}) {
        const Graph g = bundled_instance(id);
        const std::string path = inst_dir + "/instance_" + id + ".json";
        save_graph(g, path);
        written[path] = hex64(fnv1a(graph_to_json(g)));
      }
      emit(manifest, json{{"written", written}}, "");
    }
    return 0;
  } catch (const Error& e) {
    json err{{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", std::string("internal: ") + e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
