// Copyright 2026 The lwdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: assignment statistics, smooth sensitivity of one
// node, protocol runs, error sweeps and synthetic graph generation.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lwdp/assignment.h"
#include "lwdp/edge_list.h"
#include "lwdp/error.h"
#include "lwdp/estimators.h"
#include "lwdp/experiments.h"
#include "lwdp/local_view.h"
#include "lwdp/mechanisms.h"
#include "lwdp/protocol.h"
#include "lwdp/sensitivity.h"

namespace lwdp {
namespace {

struct CommonOptions {
  std::string graph;
  std::uint64_t seed = 0;
};

struct CountOptions {
  std::optional<Weight> lambda;
  double eps = 2.0;
  std::optional<double> eps1;
  std::optional<double> eps2;
  std::string estimator = "unbiased";
  std::string mechanism = "smooth";
  int trials = 1;
};

WeightedGraph LoadGraph(const std::string& path) {
  return ReadEdgeListFile(path).graph;
}

Weight LambdaOrDefault(const std::optional<Weight>& lambda,
                       const ProtocolContext& ctx) {
  return lambda ? *lambda : DefaultLambda(ctx.graph(), ctx.triangles());
}

PrivacyBudget BudgetFrom(const CountOptions& o) {
  if (o.eps1.has_value() != o.eps2.has_value()) {
    throw ConfigError("--eps1 and --eps2 must be given together");
  }
  if (o.eps1) return PrivacyBudget::Create(o.eps, *o.eps1, *o.eps2);
  return PrivacyBudget::EvenSplit(o.eps);
}

void PrintMessages(const MessageCounts& m) {
  std::printf("messages: weight_uploads=%lld noisy_downloads=%lld count_uploads=%lld\n",
              static_cast<long long>(m.weight_uploads),
              static_cast<long long>(m.noisy_downloads),
              static_cast<long long>(m.count_uploads));
}

int RunAssign(const CommonOptions& common, bool stats) {
  const ProtocolContext ctx(LoadGraph(common.graph));
  const Assignment& a = ctx.assignment();
  std::printf("nodes=%d edges=%lld triangles=%zu\n", ctx.graph().node_count(),
              static_cast<long long>(ctx.graph().edge_count()),
              a.triangle_count());
  if (stats) {
    std::map<std::int64_t, std::int64_t> histogram;
    for (std::int64_t l : a.loads()) ++histogram[l];
    std::printf("load histogram (load: edges)\n");
    for (const auto& [load, edges] : histogram) {
      std::printf("  %lld: %lld\n", static_cast<long long>(load),
                  static_cast<long long>(edges));
    }
    std::printf("squared_load=%lld c4_instances=%lld\n",
                static_cast<long long>(SquaredLoad(a)),
                static_cast<long long>(CountC4Instances(a)));
  }
  return 0;
}

int RunSensitivity(const CommonOptions& common, NodeId node, double beta,
                   const std::string& estimator, double eps1,
                   std::optional<Weight> lambda_opt, bool oracle) {
  const ProtocolContext ctx(LoadGraph(common.graph));
  if (node < 0 || node >= ctx.graph().node_count()) {
    throw ConfigError("node id out of range");
  }
  const Weight lambda = LambdaOrDefault(lambda_opt, ctx);
  const NoisyRelease release =
      ReleaseWeights(ctx.graph(), eps1, RandomSource(common.seed));
  const std::vector<Weight> own = ctx.graph().IncidentWeights(node);
  const std::vector<Weight> received =
      ServerMessage(ctx.assignment(), release, node);
  const LocalView view =
      MakeLocalView(ctx.graph(), ctx.assignment(), node, own, received);
  const Estimator est =
      Estimator::Create(ParseEstimatorKind(estimator), std::exp(-eps1));
  const SmoothSensInstance inst = BuildSmoothSensInstance(view, lambda, beta, est);
  std::printf("node=%d degree=%zu assigned_triangles=%zu lambda=%lld\n", node,
              own.size(), view.triangles.size(), static_cast<long long>(lambda));
  std::printf("global=%.12g local=%.12g smooth=%.12g\n",
              GlobalSensitivity(view, est), LocalSensitivity(inst),
              SmoothSensitivity(inst));
  if (oracle) {
    if (own.size() > kMaxBruteForceDegree) {
      std::printf("oracle=skipped (degree above %zu)\n", kMaxBruteForceDegree);
    } else {
      std::printf("oracle=%.12g\n", SmoothSensitivityBruteForce(inst));
    }
  }
  return 0;
}

int RunCount(const CommonOptions& common, const CountOptions& o,
             bool baseline) {
  const std::optional<PrivacyBudget> budget =
      baseline ? std::nullopt : std::optional<PrivacyBudget>(BudgetFrom(o));
  const ProtocolContext ctx(LoadGraph(common.graph));
  const Weight lambda = LambdaOrDefault(o.lambda, ctx);
  const double exact = static_cast<double>(ctx.ExactCount(lambda));
  std::printf("lambda=%lld exact=%.0f\n", static_cast<long long>(lambda), exact);
  std::printf("trial,estimate,exact,relative_error\n");
  RunReport last;
  const RandomSource root(common.seed);
  for (int t = 0; t < o.trials; ++t) {
    const RandomSource source = root.Fork(static_cast<std::uint64_t>(t));
    last = baseline
               ? RunBaseline(ctx, lambda, o.eps, source)
               : RunTwoStep(ctx, lambda, *budget,
                            ParseEstimatorKind(o.estimator),
                            ParseReleaseMechanism(o.mechanism), source);
    const double rel = exact == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                    : std::abs(last.estimate - exact) / exact;
    std::printf("%d,%.6f,%.0f,%.6g\n", t, last.estimate, exact, rel);
  }
  PrintMessages(CommunicationReport(last));
  return 0;
}

std::vector<double> ParseDoubles(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const std::string& s : items) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw ConfigError("not a number: '" + s + "'");
    }
  }
  return out;
}

int RunExperiment(const CommonOptions& common, const std::string& sweep,
                  const std::vector<std::string>& values,
                  const std::vector<std::string>& methods, int trials,
                  double eps, std::optional<Weight> lambda,
                  const std::string& out_path) {
  ExperimentConfig config;
  config.axis = ParseSweepAxis(sweep);
  config.values = ParseDoubles(values);
  config.trials = trials;
  config.seed = common.seed;
  config.epsilon = eps;
  config.lambda = lambda;
  if (!methods.empty()) {
    config.methods.clear();
    for (const std::string& m : methods) config.methods.push_back(ParseMethod(m));
  }
  const std::string csv = RunSweep(config, LoadGraph(common.graph)).ToCsv();
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open '" + out_path + "' for writing");
    out << csv;
  }
  return 0;
}

}  // namespace
}  // namespace lwdp

int main(int argc, char** argv) {
  using namespace lwdp;
  CLI::App app{"Private below-threshold triangle counting under local weight DP"};
  app.require_subcommand(1);
  CommonOptions common;

  auto add_graph = [&common](CLI::App* sub) {
    sub->add_option("--graph", common.graph, "Edge list file (u v w per line)")
        ->required()
        ->check(CLI::ExistingFile);
  };

  CLI::App* assign = app.add_subcommand("assign", "Greedy triangle assignment");
  add_graph(assign);
  bool stats = false;
  assign->add_flag("--stats", stats, "Print load histogram and C4 count");

  CLI::App* sens = app.add_subcommand("sensitivity", "Smooth sensitivity of one node");
  add_graph(sens);
  NodeId node = 0;
  double beta = 1.0 / 6.0;
  std::string sens_estimator = "unbiased";
  double sens_eps1 = 1.0;
  std::optional<Weight> sens_lambda;
  bool oracle = false;
  sens->add_option("--node", node, "Dense node id")->required();
  sens->add_option("--beta", beta, "Smoothing parameter")
      ->check(CLI::PositiveNumber);
  sens->add_option("--estimator", sens_estimator, "biased or unbiased");
  sens->add_option("--eps1", sens_eps1, "First-round budget")
      ->check(CLI::PositiveNumber);
  sens->add_option("--lambda", sens_lambda, "Threshold (default: 90th percentile)");
  sens->add_option("--seed", common.seed, "Noise seed");
  sens->add_flag("--oracle", oracle, "Also run the exhaustive reference");

  CountOptions count_opts;
  auto add_count = [&](CLI::App* sub, bool two_step) {
    add_graph(sub);
    sub->add_option("--lambda", count_opts.lambda,
                    "Threshold (default: 90th percentile)");
    sub->add_option("--eps", count_opts.eps, "Total privacy budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", common.seed, "Noise seed");
    sub->add_option("--trials", count_opts.trials, "Independent runs")
        ->check(CLI::PositiveNumber);
    if (two_step) {
      sub->add_option("--eps1", count_opts.eps1, "First-round budget");
      sub->add_option("--eps2", count_opts.eps2, "Second-round budget");
      sub->add_option("--estimator", count_opts.estimator, "biased or unbiased");
      sub->add_option("--mechanism", count_opts.mechanism, "global or smooth");
    }
  };
  CLI::App* count = app.add_subcommand("count", "Run the two-round protocol");
  add_count(count, true);
  CLI::App* baseline = app.add_subcommand("baseline", "Run the one-round baseline");
  add_count(baseline, false);

  CLI::App* experiment = app.add_subcommand("experiment", "Relative-error sweep");
  add_graph(experiment);
  std::string sweep = "eps";
  std::vector<std::string> values;
  std::vector<std::string> methods;
  int trials = 10;
  double exp_eps = 2.0;
  std::optional<Weight> exp_lambda;
  std::string out_path;
  experiment->add_option("--sweep", sweep, "eps, lambda or size");
  experiment->add_option("--values", values, "Axis values")
      ->required()
      ->delimiter(',');
  experiment->add_option("--methods", methods, "Methods (default: all)")
      ->delimiter(',');
  experiment->add_option("--trials", trials, "Trials per point");
  experiment->add_option("--eps", exp_eps, "Budget when not swept");
  experiment->add_option("--lambda", exp_lambda, "Threshold when not swept");
  experiment->add_option("--seed", common.seed, "Base seed");
  experiment->add_option("--out", out_path, "CSV output (default: stdout)");

  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic graph");
  SyntheticConfig synth;
  std::string distribution = "uniform";
  std::string gen_out;
  generate->add_option("--nodes", synth.nodes, "Node count")->required();
  generate->add_option("--density", synth.density, "Edge probability");
  generate->add_option("--wmin", synth.weight_min, "Smallest weight");
  generate->add_option("--wmax", synth.weight_max, "Largest weight");
  generate->add_option("--distribution", distribution, "uniform or geometric")
      ->check(CLI::IsMember({"uniform", "geometric"}));
  generate->add_option("--geometric-p", synth.weight_geometric_p,
                       "Geometric success probability");
  generate->add_option("--seed", synth.seed, "Generator seed");
  generate->add_option("--out", gen_out, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (assign->parsed()) return RunAssign(common, stats);
    if (sens->parsed()) {
      return RunSensitivity(common, node, beta, sens_estimator, sens_eps1,
                            sens_lambda, oracle);
    }
    if (count->parsed()) return RunCount(common, count_opts, false);
    if (baseline->parsed()) return RunCount(common, count_opts, true);
    if (experiment->parsed()) {
      return RunExperiment(common, sweep, values, methods, trials, exp_eps,
                           exp_lambda, out_path);
    }
    if (generate->parsed()) {
      synth.distribution = distribution == "geometric"
                               ? WeightDistribution::kGeometric
                               : WeightDistribution::kUniform;
      const WeightedGraph g = GenerateSynthetic(synth);
      if (gen_out.empty()) {
        WriteEdgeList(g, std::cout);
      } else {
        WriteEdgeListFile(g, gen_out);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
