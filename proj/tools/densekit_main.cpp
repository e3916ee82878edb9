// densekit command line: generation, clustering, local queries, hypergraph
// diffusion, evaluation, and bundled experiment protocols. Results are JSON
// on stdout (or --out); exit codes: 0 ok, 1 domain error, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "densekit/cuts.h"
#include "densekit/experiments.h"
#include "densekit/generators.h"
#include "densekit/hyper_diffusion.h"
#include "densekit/io.h"
#include "densekit/local_bipartite.h"
#include "densekit/local_directed.h"
#include "densekit/metrics.h"
#include "densekit/spectral.h"
#include "json_out.h"

namespace dk = densekit;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(const json& j, const std::string& out_path) {
  std::string text = dk::cli::dump_canonical(j);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text << "\n";
  }
}

std::map<std::string, std::string> parse_params(const std::string& spec) {
  std::map<std::string, std::string> params;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::runtime_error("bad --params entry '" + item + "'");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return params;
}

double want_num(const std::map<std::string, std::string>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::runtime_error("missing parameter '" + key + "'");
  return std::stod(it->second);
}

double num_or(const std::map<std::string, std::string>& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : std::stod(it->second);
}

json labels_json(const dk::VertexSet& s, const dk::LabelMap& labels) {
  json arr = json::array();
  for (dk::VertexId v : s) arr.push_back(labels.label(v));
  return arr;
}

void write_partition_file(const std::string& path, const dk::Partition& parts, const dk::LabelMap& labels) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dk::partition_to_json(parts, labels) << "\n";
}

int cmd_generate(const std::string& model, const std::string& params_spec, std::uint64_t seed,
                 const std::string& out_path, const std::string& truth_path) {
  auto params = parse_params(params_spec);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);

  dk::Partition truth;
  dk::LabelMap labels;
  if (model == "sbm") {
    auto s = dk::sbm(static_cast<std::size_t>(want_num(params, "n")), static_cast<int>(want_num(params, "k")),
                     want_num(params, "p"), want_num(params, "q"), seed);
    labels = dk::LabelMap::identity(s.graph.vertex_count());
    dk::write_graph(out, s.graph, labels);
    truth = s.truth;
  } else if (model == "meta_sbm") {
    auto it = params.find("meta");
    if (it == params.end()) throw std::runtime_error("meta_sbm needs meta=cycle:K|grid:AxB|path:K");
    auto s = dk::meta_sbm(dk::named_meta_graph(it->second), static_cast<std::size_t>(want_num(params, "n")),
                          want_num(params, "p"), want_num(params, "q"), seed);
    labels = dk::LabelMap::identity(s.graph.vertex_count());
    dk::write_graph(out, s.graph, labels);
    truth = s.truth;
  } else if (model == "local_sbm3") {
    auto s = dk::local_sbm3(static_cast<std::size_t>(want_num(params, "n1")), want_num(params, "p1"),
                            want_num(params, "q1"), seed);
    labels = dk::LabelMap::identity(s.graph.vertex_count());
    dk::write_graph(out, s.graph, labels);
    truth = s.truth;
  } else if (model == "cbm") {
    auto s = dk::cbm(static_cast<int>(want_num(params, "k")), static_cast<std::size_t>(want_num(params, "n")),
                     want_num(params, "p"), want_num(params, "q"), want_num(params, "eta"), seed);
    labels = dk::LabelMap::identity(s.graph.vertex_count());
    dk::write_digraph(out, s.graph, labels);
    truth = s.truth;
  } else if (model == "cbm_plus") {
    auto s = dk::cbm_plus(static_cast<int>(want_num(params, "k")),
                          static_cast<std::size_t>(want_num(params, "n")), num_or(params, "p", 0.001),
                          num_or(params, "q", 0.01), num_or(params, "eta", 0.9),
                          static_cast<std::size_t>(want_num(params, "nx")), num_or(params, "q1x", 0.5),
                          num_or(params, "q2x", 0.005), num_or(params, "etax", 1.0), seed);
    labels = dk::LabelMap::identity(s.graph.vertex_count());
    dk::write_digraph(out, s.graph, labels);
    truth = s.truth;
  } else if (model == "hyper_two_cluster") {
    auto s = dk::hyper_two_cluster(static_cast<std::size_t>(want_num(params, "n")),
                                   static_cast<int>(want_num(params, "r")), want_num(params, "p"),
                                   want_num(params, "q"), seed);
    labels = dk::LabelMap::identity(s.graph.vertex_count());
    dk::write_hypergraph(out, s.graph, labels);
    truth = {s.left, s.right};
  } else {
    throw std::runtime_error("unknown model '" + model + "'");
  }
  if (!truth_path.empty()) write_partition_file(truth_path, truth, labels);

  json j{{"model", model}, {"seed", seed}, {"out", out_path}};
  if (!truth_path.empty()) j["truth"] = truth_path;
  emit(j, "");
  return 0;
}

int cmd_cluster(const std::string& graph_path, int k, int ell, std::uint64_t seed,
                const std::string& embedding_path, const std::string& partition_path,
                const std::string& out_path) {
  auto lg = dk::read_graph_file(graph_path);
  if (ell <= 0) ell = k;
  auto t0 = Clock::now();
  dk::Partition parts = dk::spectral_cluster(lg.graph, k, ell, seed);
  double elapsed = ms_since(t0);

  if (!embedding_path.empty()) {
    auto emb = dk::spectral_embedding(lg.graph, ell);
    std::ofstream csv(embedding_path);
    if (!csv) throw std::runtime_error("cannot write " + embedding_path);
    csv << "vertex";
    for (int i = 1; i <= ell; ++i) csv << ",f" << i;
    csv << "\n";
    for (std::size_t row = 0; row < emb.vertices.size(); ++row) {
      csv << lg.labels.label(emb.vertices[row]);
      for (int i = 0; i < ell; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", emb.points(row, i));
        csv << ',' << buf;
      }
      csv << "\n";
    }
  }

  if (!partition_path.empty()) write_partition_file(partition_path, parts, lg.labels);

  json clusters = json::array();
  for (const auto& part : parts) clusters.push_back(labels_json(part, lg.labels));
  json j{{"clusters", clusters}, {"k", k}, {"ell", ell}, {"seed", seed}, {"runtime_ms", elapsed}};
  if (!embedding_path.empty()) j["embedding_csv"] = embedding_path;
  if (!partition_path.empty()) j["partition_json"] = partition_path;
  emit(j, out_path);
  return 0;
}

int cmd_local_bipartite(const std::string& graph_path, const std::string& seed_label, double gamma,
                        double beta, std::uint64_t rng_seed, bool best_prefix,
                        const std::string& out_path) {
  (void)rng_seed;  // the search is deterministic; kept for interface parity
  auto lg = dk::read_graph_file(graph_path);
  dk::LabelMap& labels = lg.labels;
  dk::VertexId seed_vertex = 0;
  bool found = false;
  for (dk::VertexId v = 0; v < labels.size(); ++v)
    if (labels.label(v) == seed_label) {
      seed_vertex = v;
      found = true;
      break;
    }
  if (!found) throw std::runtime_error("seed vertex '" + seed_label + "' not in graph");

  auto t0 = Clock::now();
  auto res = dk::loc_bipart_dc(lg.graph, seed_vertex, gamma, beta,
                               best_prefix ? dk::SweepMode::BestPrefix : dk::SweepMode::FirstQualifying);
  double elapsed = ms_since(t0);
  json j{{"L", labels_json(res.left, labels)},
         {"R", labels_json(res.right, labels)},
         {"beta", res.beta},
         {"volume", res.volume},
         {"found", res.found},
         {"pushes", res.pushes},
         {"runtime_ms", elapsed}};
  emit(j, out_path);
  return 0;
}

int cmd_local_directed(const std::string& graph_path, const std::string& seed_label, double phi,
                       const std::string& side, std::uint64_t rng_seed, int steps,
                       const std::string& out_path) {
  auto lg = dk::read_digraph_file(graph_path);
  dk::VertexId seed_vertex = 0;
  bool found = false;
  for (dk::VertexId v = 0; v < lg.labels.size(); ++v)
    if (lg.labels.label(v) == seed_label) {
      seed_vertex = v;
      found = true;
      break;
    }
  if (!found) throw std::runtime_error("seed vertex '" + seed_label + "' not in graph");

  auto t0 = Clock::now();
  dk::EvoCutResult res;
  if (side == "both")
    res = dk::evo_cut_directed_both(lg.graph, seed_vertex, phi, rng_seed, steps);
  else
    res = dk::evo_cut_directed(lg.graph, seed_vertex, side == "2" ? 2 : 1, phi, rng_seed, steps);
  double elapsed = ms_since(t0);

  json j{{"L", labels_json(res.left, lg.labels)},
         {"R", labels_json(res.right, lg.labels)},
         {"flow_ratio", res.flow_ratio},
         {"cut_imbalance", res.cut_imbalance},
         {"found", res.found},
         {"steps", res.steps},
         {"runtime_ms", elapsed}};
  emit(j, out_path);
  return 0;
}

int cmd_hyper(const std::string& path, const std::string& mode, double eps, const std::string& f0_spec,
              int max_iters, std::uint64_t seed, const std::string& rq_csv, const std::string& out_path) {
  auto lh = dk::read_hypergraph_file(path);
  const auto& h = lh.graph;

  Eigen::VectorXd f0;
  if (f0_spec == "clique") {
    f0 = dk::default_start_vector(h);
  } else if (f0_spec == "random") {
    dk::CounterRng rng(seed);
    f0.resize(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v) f0[v] = rng.next_double() - 0.5;
  } else {
    std::ifstream in(f0_spec);
    if (!in) throw std::runtime_error("cannot open starting vector " + f0_spec);
    f0.resize(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
      if (!(in >> f0[v])) throw std::runtime_error(f0_spec + ": expected one value per vertex");
  }

  auto t0 = Clock::now();
  auto res = dk::find_bipartite_components(
      h, f0, eps, 0.9999, max_iters, mode == "lp" ? dk::DiffusionMode::ExactLp : dk::DiffusionMode::EvenSplit);
  double elapsed = ms_since(t0);

  if (!rq_csv.empty()) {
    std::ofstream csv(rq_csv);
    if (!csv) throw std::runtime_error("cannot write " + rq_csv);
    csv << "iter,rayleigh_quotient\n";
    for (std::size_t i = 0; i < res.rq_history.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", res.rq_history[i]);
      csv << i << ',' << buf << "\n";
    }
  }

  json j{{"lambda", res.lambda},
         {"L", labels_json(res.pair.left, lh.labels)},
         {"R", labels_json(res.pair.right, lh.labels)},
         {"beta_h", res.pair.beta},
         {"iters", res.iters},
         {"converged", res.converged},
         {"runtime_ms", elapsed}};
  if (!rq_csv.empty()) j["rq_history_csv_path"] = rq_csv;
  emit(j, out_path);
  return 0;
}

int cmd_eval(const std::string& truth_path, const std::string& pred_path, const std::string& metrics_spec,
             const std::string& out_path) {
  dk::LabelMap labels;
  dk::Partition truth = dk::partition_from_json_file(truth_path, labels);
  dk::Partition pred = dk::partition_from_json_file(pred_path, labels);

  // Pad both partitions with singleton clusters for vertices only the other
  // side mentions, so the universes match.
  auto pad = [&](dk::Partition& parts) {
    std::vector<char> seen(labels.size(), 0);
    for (const auto& p : parts)
      for (dk::VertexId v : p) seen[v] = 1;
    for (dk::VertexId v = 0; v < labels.size(); ++v)
      if (!seen[v]) parts.push_back({v});
  };
  pad(truth);
  pad(pred);

  std::stringstream ss(metrics_spec);
  std::string name;
  json j;
  while (std::getline(ss, name, ',')) {
    if (name == "ri") {
      j["ri"] = dk::rand_index(truth, pred);
    } else if (name == "ari") {
      j["ari"] = dk::adjusted_rand_index(truth, pred);
    } else if (name == "f1") {
      if (truth.size() < 2 || pred.size() < 2) throw std::runtime_error("f1 needs two clusters per side");
      j["f1"] = dk::f1_pair_score(truth[0], truth[1], pred[0], pred[1]);
    } else if (name == "misclassified") {
      if (truth.size() < 2 || pred.size() < 2)
        throw std::runtime_error("misclassified needs two clusters per side");
      j["misclassified"] = dk::misclassified_ratio(truth[0], truth[1], pred[0], pred[1]);
    } else if (name == "accuracy") {
      j["accuracy"] = dk::matched_accuracy(truth, pred, labels.size());
    } else {
      throw std::runtime_error("unknown metric '" + name + "'");
    }
  }
  emit(j, out_path);
  return 0;
}

int cmd_experiment(const std::string& name, int row, int trials, std::uint64_t seed,
                   const std::string& out_path) {
  json j{{"experiment", name}, {"trials", trials}, {"seed", seed}};
  if (name == "table-5-1") {
    auto stats = dk::run_local_bipartite_experiment(dk::table_5_1_row(row), trials, seed);
    j["row"] = row;
    j["mean_beta"] = stats.mean_beta;
    j["mean_ari"] = stats.mean_ari;
    j["mean_misclassified"] = stats.mean_misclassified;
    j["mean_runtime_ms"] = stats.mean_runtime_ms;
    j["target_beta"] = stats.target_beta;
    j["target_volume"] = stats.target_volume;
  } else if (name == "cbm-plus") {
    auto stats = dk::run_cbm_plus_experiment(3, 1000, 100, trials, seed);
    j["mean_ari"] = stats.mean_ari;
    j["mean_flow_ratio"] = stats.mean_flow_ratio;
    j["mean_cut_imbalance"] = stats.mean_cut_imbalance;
    j["mean_runtime_ms"] = stats.mean_runtime_ms;
  } else if (name == "meta-sweep") {
    auto cells = dk::run_meta_sweep("cycle:10", 200, 0.01, {2.0, 2.5, 3.0}, {3, 10}, trials, seed);
    json arr = json::array();
    for (const auto& c : cells)
      arr.push_back(json{{"ratio", c.ratio}, {"ell", c.ell}, {"mean_accuracy", c.mean_accuracy}});
    j["cells"] = arr;
  } else if (name == "hyper-sweep") {
    auto rows = dk::run_hyper_sweep(200, 3, 1e-4, {2, 3, 4, 5, 6}, trials, seed, false);
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"ratio", r.ratio},
                         {"fbca_beta", r.fbca_beta},
                         {"cliquecut_beta", r.clique_beta},
                         {"fbca_runtime_ms", r.fbca_runtime_ms},
                         {"cliquecut_runtime_ms", r.clique_runtime_ms}});
    j["rows"] = arr;
  } else if (name == "beta-sweep") {
    auto rows = dk::run_beta_sweep(1000, 1e-3, {22, 18, 14, 10, 6}, trials, seed);
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"q1_over_p1", r.ratio},
                         {"target_beta", r.target_beta},
                         {"mean_beta", r.mean_beta},
                         {"mean_ari", r.mean_ari}});
    j["rows"] = arr;
  } else if (name == "hyper-runtimes") {
    auto rows = dk::run_hyper_sweep(200, 3, 1e-4, {3}, trials, seed, true);
    j["fbc_runtime_ms"] = rows[0].fbc_runtime_ms;
    j["fbca_runtime_ms"] = rows[0].fbca_runtime_ms;
    j["cliquecut_runtime_ms"] = rows[0].clique_runtime_ms;
    j["fbc_beta"] = rows[0].fbc_beta;
    j["fbca_beta"] = rows[0].fbca_beta;
  } else {
    throw std::runtime_error("unknown experiment '" + name +
                             "' (table-5-1, beta-sweep, cbm-plus, meta-sweep, hyper-sweep, hyper-runtimes)");
  }
  emit(j, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral and local clustering toolkit"};
  app.require_subcommand(1);

  std::string model, params, out_path, truth_path;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("generate", "sample a synthetic instance");
  gen->add_option("--model", model, "sbm|meta_sbm|local_sbm3|cbm|cbm_plus|hyper_two_cluster")->required();
  gen->add_option("--params", params, "comma separated k=v pairs")->required();
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--out", out_path, "instance file")->required();
  gen->add_option("--truth", truth_path, "ground-truth partition JSON");

  std::string graph_path, embedding_path, partition_path;
  int k = 2, ell = 0;
  auto* cluster = app.add_subcommand("cluster", "spectral clustering");
  cluster->add_option("--graph", graph_path, "edge list file")->required();
  cluster->add_option("--k", k, "number of clusters")->required();
  cluster->add_option("--ell", ell, "eigenvectors to use (default k)");
  cluster->add_option("--seed", seed, "k-means seed");
  cluster->add_option("--embedding-out", embedding_path, "write embedding CSV here");
  cluster->add_option("--partition-out", partition_path, "write the bare partition JSON here");
  cluster->add_option("--out", out_path, "result JSON path");

  std::string seed_label, side = "both";
  double gamma = 0, beta = 0.5, phi = 0.01;
  std::uint64_t rng_seed = 0;
  bool best_prefix = false;
  auto* lb = app.add_subcommand("local-bipartite", "local densely connected pair discovery");
  lb->add_option("--graph", graph_path)->required();
  lb->add_option("--seed", seed_label, "starting vertex label")->required();
  lb->add_option("--gamma", gamma, "target volume")->required();
  lb->add_option("--beta", beta, "target bipartiteness")->required();
  lb->add_option("--seed-rng", rng_seed, "rng seed");
  lb->add_flag("--best-prefix", best_prefix, "return the minimum-conductance sweep prefix");
  lb->add_option("--out", out_path);

  int steps = -1;
  auto* ld = app.add_subcommand("local-directed", "local flow-structured pair discovery");
  ld->add_option("--digraph", graph_path)->required();
  ld->add_option("--seed", seed_label, "starting vertex label")->required();
  ld->add_option("--phi", phi, "target flow ratio")->required();
  ld->add_option("--side", side, "1|2|both (default both)");
  ld->add_option("--seed-rng", rng_seed, "rng seed");
  ld->add_option("--steps", steps, "override the evolving-set step count");
  ld->add_option("--out", out_path);

  std::string mode = "lp", f0 = "clique", rq_csv;
  double eps = 1.0;
  int max_iters = 1000;
  auto* hb = app.add_subcommand("hyper-bipartite", "hypergraph diffusion clustering");
  hb->add_option("--hypergraph", graph_path)->required();
  hb->add_option("--mode", mode, "lp|approx (default lp)");
  hb->add_option("--eps", eps, "step size (default 1)");
  hb->add_option("--f0", f0, "clique|random|FILE (default clique)");
  hb->add_option("--max-iters", max_iters);
  hb->add_option("--seed", seed, "seed for --f0 random");
  hb->add_option("--rq-csv", rq_csv, "write the Rayleigh quotient history CSV here");
  hb->add_option("--out", out_path);

  std::string truth_file, pred_file, metrics = "ri,ari";
  auto* ev = app.add_subcommand("eval", "score a predicted partition");
  ev->add_option("--truth", truth_file)->required();
  ev->add_option("--pred", pred_file)->required();
  ev->add_option("--metrics", metrics, "comma list: ri,ari,f1,misclassified,accuracy");
  ev->add_option("--out", out_path);

  std::string experiment;
  int row = 1, trials = 10;
  auto* ex = app.add_subcommand("experiment", "bundled experiment protocols");
  ex->add_option("name", experiment, "table-5-1|beta-sweep|cbm-plus|meta-sweep|hyper-sweep|hyper-runtimes")->required();
  ex->add_option("--row", row, "table row (table-5-1)");
  ex->add_option("--trials", trials);
  ex->add_option("--seed", seed);
  ex->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(model, params, seed, out_path, truth_path);
    if (cluster->parsed())
      return cmd_cluster(graph_path, k, ell, seed, embedding_path, partition_path, out_path);
    if (lb->parsed())
      return cmd_local_bipartite(graph_path, seed_label, gamma, beta, rng_seed, best_prefix, out_path);
    if (ld->parsed()) return cmd_local_directed(graph_path, seed_label, phi, side, rng_seed, steps, out_path);
    if (hb->parsed()) return cmd_hyper(graph_path, mode, eps, f0, max_iters, seed, rq_csv, out_path);
    if (ev->parsed()) return cmd_eval(truth_file, pred_file, metrics, out_path);
    if (ex->parsed()) return cmd_experiment(experiment, row, trials, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
