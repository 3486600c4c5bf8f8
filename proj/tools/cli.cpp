// Copyright 2026 The COVE Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cove/abcd.hpp"
#include "cove/clustering.hpp"
#include "cove/cooccurrence.hpp"
#include "cove/embedding.hpp"
#include "cove/error.hpp"
#include "cove/graph.hpp"
#include "cove/kmeans.hpp"
#include "cove/linkpred.hpp"
#include "cove/parallel.hpp"
#include "cove/reduce.hpp"
#include "cove/text_io.hpp"
#include "cove/walk.hpp"

namespace cove::cli {
namespace {

namespace fs = std::filesystem;

// Reals always carry a decimal point ("1.0", not "1").
std::string fmt(double v) {
  std::string s = format_double(v);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

const CLI::Validator kWritablePath(
    [](std::string& path) -> std::string {
      fs::path parent = fs::path(path).parent_path();
      if (parent.empty()) parent = ".";
      std::error_code ec;
      if (!fs::is_directory(parent, ec)) {
        return "directory of output '" + path + "' does not exist";
      }
      if (fs::is_directory(path, ec)) return "'" + path + "' is a directory";
      return {};
    },
    "WRITABLE");

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  return out;
}

// Echo of the resolved configuration, one "# key=value" record on stderr.
class ConfigEcho {
 public:
  explicit ConfigEcho(std::string command) : line_("# cove " + command) {}
  template <typename T>
  ConfigEcho& add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    line_ += " " + key + "=" + os.str();
    return *this;
  }
  ConfigEcho& add(const std::string& key, double value) {
    line_ += " " + key + "=" + fmt(value);
    return *this;
  }
  ConfigEcho& add(const std::string& key, bool value) {
    line_ += " " + key + "=" + (value ? "true" : "false");
    return *this;
  }
  void print(std::ostream& err) const { err << line_ << '\n'; }

 private:
  std::string line_;
};

struct WalkFlags {
  std::size_t walks = 10;
  std::size_t length = 40;
  double p = 1.0;
  double q = 1.0;
};

void add_walk_flags(CLI::App* cmd, WalkFlags& f) {
  cmd->add_option("--walks", f.walks, "Walks per node")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--length", f.length, "Walk length in nodes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--p", f.p, "node2vec return parameter")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--q", f.q, "node2vec in-out parameter")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

WalkParams walk_params(const WalkFlags& f, std::uint64_t seed) {
  WalkParams p;
  p.walks_per_node = f.walks;
  p.length = f.length;
  p.p = f.p;
  p.q = f.q;
  p.seed = seed;
  return p;
}

void echo_walk(ConfigEcho& echo, const WalkFlags& f) {
  echo.add("walks", f.walks).add("length", f.length).add("p", f.p).add("q", f.q);
}

Graph load_graph(const std::string& path, std::ostream& err) {
  EdgeListParse parsed = read_edge_list_file(path);
  if (parsed.self_loops_dropped > 0) {
    err << "warning: dropped " << parsed.self_loops_dropped
        << " self-loop(s) from " << path << '\n';
  }
  if (parsed.duplicates_merged > 0) {
    err << "note: merged " << parsed.duplicates_merged
        << " duplicate edge(s) in " << path << " by summing weights\n";
  }
  return std::move(parsed.graph);
}

// All state of one invocation; flags bind directly into these members.
struct Options {
  unsigned threads = 0;

  // generate
  std::size_t gen_n = 0;
  double gen_xi = 0.0;
  std::uint64_t seed = 0;
  std::string out_edges, out_truth;
  PowerLaw degree{3, 70, 2.5};
  PowerLaw community{15, 700, 1.5};

  // shared I/O
  std::string input, in, out, graph, corpus;

  // walk / embed / linkpred
  WalkFlags walk;
  bool exact = false;
  bool sampled = false;
  bool hellinger = false;
  std::size_t window = 6;
  std::vector<double> theta;

  // reduce
  std::string method = "svd";
  std::size_t dim = 2;

  // kmeans
  std::size_t k = 0;
  std::size_t restarts = 10;
  std::size_t max_iters = 300;

  // eval-cluster
  std::string pred, truth, metric = "fstar";

  // linkpred
  double holdout = 0.05;
  std::size_t lp_dim = 0;
  LogRegConfig logreg;
  bool shuffle_labels = false;
};

void cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  AbcdParams params;
  params.n = o.gen_n;
  params.xi = o.gen_xi;
  params.seed = o.seed;
  params.degree = o.degree;
  params.community = o.community;
  ConfigEcho("generate")
      .add("n", o.gen_n)
      .add("xi", o.gen_xi)
      .add("seed", o.seed)
      .add("degree", std::to_string(o.degree.min) + "," +
                         std::to_string(o.degree.max) + "," +
                         fmt(o.degree.exponent))
      .add("community", std::to_string(o.community.min) + "," +
                            std::to_string(o.community.max) + "," +
                            fmt(o.community.exponent))
      .add("out_edges", o.out_edges)
      .add("out_truth", o.out_truth)
      .print(err);
  params.validate();
  AbcdGraph abcd = generate_abcd(params);
  {
    auto f = open_output(o.out_edges);
    write_edge_list(f, abcd.graph);
  }
  {
    auto f = open_output(o.out_truth);
    write_clustering(f, abcd.ground_truth, abcd.graph.labels());
  }
  err << "# columns: n edges communities inter_community_fraction\n";
  out << abcd.graph.n() << '\t' << abcd.graph.num_edges() << '\t'
      << abcd.ground_truth.clusters.size() << '\t'
      << fmt(inter_community_edge_fraction(abcd.graph, abcd.community_of))
      << '\n';
}

void cmd_walk(const Options& o, std::ostream& out, std::ostream& err) {
  ConfigEcho echo("walk");
  echo.add("input", o.input).add("seed", o.seed).add("out", o.out);
  echo_walk(echo, o.walk);
  echo.print(err);
  const WalkParams params = walk_params(o.walk, o.seed);
  params.validate();
  Graph g = load_graph(o.input, err);
  WalkCorpus corpus = build_corpus(g, params, o.threads);
  auto f = open_output(o.out);
  write_corpus(f, corpus, g);
  std::size_t tokens = 0;
  for (const auto& w : corpus.walks) tokens += w.size();
  err << "# columns: walks tokens\n";
  out << corpus.walks.size() << '\t' << tokens << '\n';
}

void cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
  ConfigEcho echo("embed");
  echo.add("input", o.input)
      .add("mode", std::string(o.exact ? "exact" : "sampled"))
      .add("window", o.window)
      .add("seed", o.seed)
      .add("hellinger", o.hellinger)
      .add("out", o.out);
  if (o.exact) {
    std::string theta;
    for (double t : o.theta) theta += (theta.empty() ? "" : ",") + fmt(t);
    echo.add("theta", theta.empty() ? std::string("uniform") : theta);
  } else {
    echo_walk(echo, o.walk);
    if (!o.corpus.empty()) echo.add("corpus", o.corpus);
  }
  echo.print(err);

  Graph g = load_graph(o.input, err);
  CooccurrenceMatrix m;
  if (o.exact) {
    m = exact_cove(g, o.window, o.theta, o.threads);
  } else {
    if (!o.theta.empty()) {
      throw ParameterError("--theta applies to --exact embeddings only");
    }
    WalkCorpus corpus;
    if (!o.corpus.empty()) {
      std::ifstream f(o.corpus);
      if (!f) throw DataError("cannot open corpus '" + o.corpus + "'");
      corpus = read_corpus(f, g);
      if (corpus.walks.empty()) throw DataError("corpus is empty");
    } else {
      const WalkParams params = walk_params(o.walk, o.seed);
      params.validate();
      corpus = build_corpus(g, params, o.threads);
    }
    m = sampled_cove(count_cooccurrences(corpus, o.window, o.threads));
  }
  Embedding e = o.hellinger ? hellinger_transform(m, g.labels())
                            : to_distribution_embedding(m, g.labels());
  write_embedding_file(o.out, e);
  err << "# columns: n d kind\n";
  out << e.n() << '\t' << e.d() << '\t' << to_string(e.kind) << '\n';
}

void cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const ReducerMethod method = reducer_method_from_string(o.method);
  ConfigEcho echo("reduce");
  echo.add("method", o.method).add("dim", o.dim).add("seed", o.seed);
  if (!o.in.empty()) echo.add("in", o.in);
  if (!o.graph.empty()) echo.add("graph", o.graph);
  echo.add("out", o.out).print(err);

  Embedding result;
  if (method == ReducerMethod::kSvd) {
    if (o.in.empty()) throw ParameterError("--method svd requires --in");
    Embedding e = read_embedding_file(o.in);
    result = svd_reduce(e, o.dim, o.seed);
  } else {
    if (o.graph.empty()) {
      throw ParameterError("--method spectral requires --graph <edges>");
    }
    Graph g = load_graph(o.graph, err);
    const std::vector<NodeId> keep = largest_component(g);
    if (keep.size() < g.n()) {
      err << "warning: graph is disconnected; embedding the largest "
             "component ("
          << keep.size() << " of " << g.n() << " nodes), dropped "
          << g.n() - keep.size() << " node(s)\n";
    }
    Graph sub = induced_subgraph(g, keep);
    result = spectral_embedding(sub, o.dim).embedding;
    if (!o.in.empty()) {
      // Follow the row order of the given embedding.
      Embedding ref = read_embedding_file(o.in);
      std::unordered_map<std::string, Eigen::Index> row;
      for (std::size_t i = 0; i < result.labels.size(); ++i) {
        row.emplace(result.labels[i], static_cast<Eigen::Index>(i));
      }
      Embedding ordered;
      ordered.kind = result.kind;
      std::vector<Eigen::Index> picks;
      for (const auto& label : ref.labels) {
        auto it = row.find(label);
        if (it == row.end()) continue;
        picks.push_back(it->second);
        ordered.labels.push_back(label);
      }
      ordered.values.resize(static_cast<Eigen::Index>(picks.size()),
                            result.values.cols());
      for (std::size_t i = 0; i < picks.size(); ++i) {
        ordered.values.row(static_cast<Eigen::Index>(i)) =
            result.values.row(picks[i]);
      }
      result = std::move(ordered);
    }
  }
  write_embedding_file(o.out, result);
  err << "# columns: n d kind\n";
  out << result.n() << '\t' << result.d() << '\t' << to_string(result.kind)
      << '\n';
}

void cmd_kmeans(const Options& o, std::ostream& out, std::ostream& err) {
  ConfigEcho("kmeans")
      .add("in", o.in)
      .add("k", o.k)
      .add("restarts", o.restarts)
      .add("max_iters", o.max_iters)
      .add("seed", o.seed)
      .add("out", o.out)
      .print(err);
  Embedding e = read_embedding_file(o.in);
  KMeansParams params;
  params.k = o.k;
  params.restarts = o.restarts;
  params.max_iters = o.max_iters;
  params.seed = o.seed;
  KMeansResult r = kmeans(e, params, o.threads);
  auto f = open_output(o.out);
  write_clustering(f, r.clustering, e.labels);
  err << "# columns: k cost\n";
  out << o.k << '\t' << fmt(r.cost) << '\n';
}

void cmd_eval_cluster(const Options& o, std::ostream& out, std::ostream& err) {
  ConfigEcho("eval-cluster")
      .add("pred", o.pred)
      .add("truth", o.truth)
      .add("metric", o.metric)
      .print(err);
  const ClusteringFile truth_file = read_clustering_file(o.truth);
  const ClusteringFile pred_file = read_clustering_file(o.pred);
  const std::vector<std::string> universe = label_universe(truth_file);
  if (label_universe(pred_file) != universe) {
    throw DataError(
        "prediction and truth list different node sets; every node must "
        "appear in both files");
  }
  const Clustering truth = to_clustering(truth_file, universe);
  const Clustering pred = to_clustering(pred_file, universe);
  const double score =
      o.metric == "ami" ? ami(pred, truth) : f_star_wo(pred, truth);
  out << fmt(score) << '\n';
}

void cmd_linkpred(const Options& o, std::ostream& out, std::ostream& err) {
  ConfigEcho echo("linkpred");
  echo.add("input", o.input)
      .add("holdout", o.holdout)
      .add("seed", o.seed)
      .add("mode", std::string(o.exact ? "exact" : "sampled"))
      .add("window", o.window);
  if (!o.exact) echo_walk(echo, o.walk);
  echo.add("dim", o.lp_dim)
      .add("iterations", o.logreg.iterations)
      .add("step", o.logreg.step)
      .add("l2", o.logreg.l2)
      .add("shuffle_labels", o.shuffle_labels)
      .print(err);

  Graph g = load_graph(o.input, err);
  LinkPredConfig config;
  config.holdout = o.holdout;
  config.seed = o.seed;
  config.embedding.exact = o.exact;
  config.embedding.radius = o.window;
  config.embedding.walk = walk_params(o.walk, o.seed);
  config.reduce_dim = o.lp_dim;
  config.logreg = o.logreg;
  config.shuffle_train_labels = o.shuffle_labels;
  LinkPredResult r = evaluate_link_prediction(g, config, o.threads);
  err << "# columns: seed auc test_edges\n";
  out << o.seed << '\t' << fmt(r.auc) << '\t' << r.test_edges << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"COVE: co-occurrence node embeddings and their evaluation",
               "cove"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads,
                 "Worker threads (0 = COVE_THREADS or all cores); results do "
                 "not depend on it")
      ->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Generate an ABCD-style graph");
  gen->add_option("--n", o.gen_n, "Node count")->required();
  gen->add_option("--xi", o.gen_xi, "Noise level in [0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_option("--out-edges", o.out_edges)->required()->check(kWritablePath);
  gen->add_option("--out-truth", o.out_truth)->required()->check(kWritablePath);
  gen->add_option("--degree-min", o.degree.min)->capture_default_str();
  gen->add_option("--degree-max", o.degree.max)->capture_default_str();
  gen->add_option("--degree-exponent", o.degree.exponent)->capture_default_str();
  gen->add_option("--community-min", o.community.min)->capture_default_str();
  gen->add_option("--community-max", o.community.max)->capture_default_str();
  gen->add_option("--community-exponent", o.community.exponent)
      ->capture_default_str();

  auto* walk = app.add_subcommand("walk", "Sample a random-walk corpus");
  walk->add_option("--input", o.input, "Edge list")
      ->required()
      ->check(CLI::ExistingFile);
  add_walk_flags(walk, o.walk);
  walk->add_option("--seed", o.seed)->capture_default_str();
  walk->add_option("--out", o.out)->required()->check(kWritablePath);

  auto* embed = app.add_subcommand("embed", "Compute a COVE embedding");
  embed->add_option("--input", o.input, "Edge list")
      ->required()
      ->check(CLI::ExistingFile);
  auto* exact_flag = embed->add_flag("--exact", o.exact, "Exact matrix powers");
  auto* sampled_flag =
      embed->add_flag("--sampled", o.sampled, "Estimate from random walks");
  exact_flag->excludes(sampled_flag);
  embed->add_option("--window", o.window, "Context radius L")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  embed->add_option("--theta", o.theta,
                    "Per-distance weights theta_1..theta_L (exact only)")
      ->delimiter(',');
  add_walk_flags(embed, o.walk);
  embed->add_option("--corpus", o.corpus, "Use this corpus instead of sampling")
      ->check(CLI::ExistingFile);
  embed->add_option("--seed", o.seed)->capture_default_str();
  embed->add_flag("--hellinger", o.hellinger,
                  "Write the Hellinger transform instead of the distributions");
  embed->add_option("--out", o.out)->required()->check(kWritablePath);

  auto* reduce = app.add_subcommand("reduce", "Reduce dimension");
  reduce->add_option("--method", o.method)
      ->capture_default_str()
      ->check(CLI::IsMember({"svd", "spectral"}));
  reduce->add_option("--dim", o.dim)->required()->check(CLI::PositiveNumber);
  reduce->add_option("--in", o.in, "Input embedding")->check(CLI::ExistingFile);
  reduce->add_option("--graph", o.graph, "Edge list (spectral)")
      ->check(CLI::ExistingFile);
  reduce->add_option("--seed", o.seed)->capture_default_str();
  reduce->add_option("--out", o.out)->required()->check(kWritablePath);

  auto* km = app.add_subcommand("kmeans", "Cluster an embedding with k-means");
  km->add_option("--in", o.in)->required()->check(CLI::ExistingFile);
  km->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  km->add_option("--restarts", o.restarts)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  km->add_option("--max-iters", o.max_iters)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  km->add_option("--seed", o.seed)->capture_default_str();
  km->add_option("--out", o.out)->required()->check(kWritablePath);

  auto* ev = app.add_subcommand("eval-cluster", "Compare two clusterings");
  ev->add_option("--pred", o.pred)->required()->check(CLI::ExistingFile);
  ev->add_option("--truth", o.truth)->required()->check(CLI::ExistingFile);
  ev->add_option("--metric", o.metric)
      ->capture_default_str()
      ->check(CLI::IsMember({"fstar", "ami"}));

  auto* lp = app.add_subcommand("linkpred", "Link-prediction AUC for one split");
  lp->add_option("--input", o.input)->required()->check(CLI::ExistingFile);
  lp->add_option("--holdout", o.holdout)
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  lp->add_option("--seed", o.seed)->capture_default_str();
  auto* lp_exact = lp->add_flag("--exact", o.exact, "Exact COVE");
  auto* lp_sampled = lp->add_flag("--sampled", o.sampled, "Sampled COVE (default)");
  lp_exact->excludes(lp_sampled);
  lp->add_option("--window", o.window)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_walk_flags(lp, o.walk);
  lp->add_option("--dim", o.lp_dim, "SVD dimension before features (0 = none)")
      ->capture_default_str();
  lp->add_option("--iterations", o.logreg.iterations)->capture_default_str();
  lp->add_option("--step", o.logreg.step)->capture_default_str();
  lp->add_option("--l2", o.logreg.l2)->capture_default_str();
  lp->add_flag("--shuffle-labels", o.shuffle_labels,
               "Permute training labels (control run)");

  std::vector<const char*> argv{"cove"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  if (embed->parsed() && !o.exact && !o.sampled) {
    err << "error: embed needs one of --exact or --sampled\n\n"
        << embed->help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) cmd_generate(o, out, err);
    if (walk->parsed()) cmd_walk(o, out, err);
    if (embed->parsed()) cmd_embed(o, out, err);
    if (reduce->parsed()) cmd_reduce(o, out, err);
    if (km->parsed()) cmd_kmeans(o, out, err);
    if (ev->parsed()) cmd_eval_cluster(o, out, err);
    if (lp->parsed()) cmd_linkpred(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace cove::cli
