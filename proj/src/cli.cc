// Copyright 2026 The EECS Authors.
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

#include "eecs/cli.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <limits>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "eecs/errors.h"
#include "eecs/evaluation.h"
#include "eecs/model_io.h"
#include "eecs/pipeline.h"
#include "eecs/subspace.h"
#include "eecs/trainer.h"
#include "eecs/tsv.h"

namespace eecs {

namespace fs = std::filesystem;

std::map<std::string, std::string> ReadConfigFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("--config: cannot open " + path);
  std::map<std::string, std::string> out;
  std::string line;
  long number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(path, number, "expected key = value");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ParseError(path, number, "empty key");
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

std::vector<std::string> MergeConfig(const std::vector<std::string> &args,
                                     const std::map<std::string, std::string> &config) {
  std::set<std::string> given;
  for (const std::string &a : args) {
    if (a.rfind("--", 0) != 0) continue;
    given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos
                                                               : a.find('=') - 2));
  }
  std::vector<std::string> out = args;
  for (const auto &[key, value] : config) {
    if (given.count(key) || key == "config") continue;
    out.push_back("--" + key + "=" + value);
  }
  return out;
}

namespace {

const std::vector<std::string> kTasks = {"ranking", "induction", "analogy", "link",
                                         "classification"};

struct DataFlags {
  IngestOptions ingest;
  std::string omit;
};

struct HpFlags {
  Hyperparams hp;
  std::string variant = "full";
  int threads = 1;
  int subspace_steps = 5;
};

void AddDataFlags(CLI::App *app, DataFlags *f) {
  app->add_option("--corpus", f->ingest.corpus, "JSON-lines corpus")
      ->required()
      ->check(CLI::ExistingFile);
  app->add_option("--instances", f->ingest.instances, "entity<TAB>type TSV")
      ->check(CLI::ExistingFile);
  app->add_option("--subclass", f->ingest.subclass, "child<TAB>parent TSV")
      ->check(CLI::ExistingFile);
  app->add_option("--triples", f->ingest.triples, "head<TAB>relation<TAB>tail TSV")
      ->check(CLI::ExistingFile);
  app->add_option("--omit", f->omit,
                  "induction problem file whose (relation, target) triples are held out")
      ->check(CLI::ExistingFile);
  app->add_option("--window", f->ingest.window, "context window")->capture_default_str();
  app->add_option("--min-count", f->ingest.min_count, "word frequency threshold")
      ->capture_default_str();
  app->add_option("--min-mentions", f->ingest.min_doc_mentions,
                  "entity document-mention threshold")
      ->capture_default_str();
}

void AddHpFlags(CLI::App *app, HpFlags *f) {
  Hyperparams &hp = f->hp;
  app->add_option("--dim", hp.dim, "embedding dimension")->capture_default_str();
  app->add_option("--alpha", hp.alpha, "text weight")->capture_default_str();
  app->add_option("--beta", hp.beta, "nuclear norm weight")->capture_default_str();
  app->add_option("--epochs", hp.epochs)->capture_default_str();
  app->add_option("--lr", hp.learn_rate, "AdaGrad learning rate")->capture_default_str();
  app->add_option("--x-max", hp.x_max, "co-occurrence weighting cutoff")
      ->capture_default_str();
  app->add_option("--variant", f->variant)
      ->capture_default_str()
      ->check([](const std::string &v) {
        try {
          ParseVariant(v);
          return std::string();
        } catch (const ValidationError &e) {
          return std::string(e.what());
        }
      });
  app->add_option("--rank-eps", hp.rank_eps)->capture_default_str();
  app->add_option("--threads", f->threads,
                  "worker threads; 1 is deterministic, more enables racy updates")
      ->envname("EECS_THREADS")
      ->capture_default_str();
  app->add_option("--seed", hp.seed, "seed for every random choice")->capture_default_str();
  app->add_option("--subspace-steps", f->subspace_steps,
                  "coefficient and anchor rounds per type and epoch")
      ->capture_default_str();
}

TrainConfig MakeTrainConfig(const HpFlags &f) {
  TrainConfig cfg;
  cfg.hp = f.hp;
  cfg.hp.variant = ParseVariant(f.variant);
  cfg.threads = f.threads;
  cfg.deterministic = f.threads == 1;
  cfg.shuffle_seed = f.hp.seed;
  cfg.subspace_steps = f.subspace_steps;
  cfg.Validate();
  return cfg;
}

Dataset LoadData(DataFlags f, Variant variant) {
  if (!f.omit.empty()) {
    for (const InductionProblem &p : LoadInductionProblems(f.omit)) {
      f.ingest.omit.emplace_back(p.relation, p.target);
    }
  }
  const VariantSpec spec = SpecOf(variant);
  if (spec.type && f.ingest.instances.empty()) {
    throw ValidationError("variant " + VariantName(variant) + " needs --instances");
  }
  if (spec.uses_relations() && f.ingest.triples.empty()) {
    throw ValidationError("variant " + VariantName(variant) + " needs --triples");
  }
  Dataset ds = Ingest(f.ingest);
  spdlog::info("{} words, {} entities, {} types, {} triples", ds.vocab.size(),
               ds.catalog.size(), ds.data.types.size(), ds.data.triples.size());
  return ds;
}

TrainResult TrainOn(const Dataset &ds, const TrainConfig &cfg) {
  const ModelShape shape = ModelShape::FromData(ds.catalog, ds.vocab, ds.data.types,
                                                ds.data.triples, cfg.hp.variant);
  return Train(ds.data, shape, cfg);
}

TypeSystem TypesForModel(const EmbeddingModel &model, const std::string &instances,
                         const std::string &subclass) {
  if (instances.empty()) return TypeSystem();
  std::vector<std::pair<std::string, int64_t>> ids;
  for (const std::string &id : model.entity_ids) ids.emplace_back(id, 0);
  const EntityCatalog catalog(std::move(ids));
  return LoadTypeSystem(instances, subclass, catalog);
}

void PrintAggregate(const TaskResult &r, std::ostream &out) {
  out << "task\t" << r.task << "\n";
  for (const auto &[key, value] : r.aggregate) out << key << "\t" << value << "\n";
}

// Turns the validation part of each split into the scored part.
template <typename P>
std::vector<P> ValidationView(std::vector<P> problems) {
  for (P &p : problems) {
    p.split.test = p.split.valid;
    p.split.valid.clear();
  }
  return problems;
}

int RunTrain(const DataFlags &data, const HpFlags &hp, const std::string &out_dir) {
  const TrainConfig base = MakeTrainConfig(hp);
  fs::create_directories(out_dir);
  TrainConfig cfg = base;
  cfg.log_path = (fs::path(out_dir) / "train_log.jsonl").string();
  cfg.checkpoint_path = (fs::path(out_dir) / "model.eecs").string();
  const Dataset ds = LoadData(data, cfg.hp.variant);
  const TrainResult result = TrainOn(ds, cfg);
  SaveModel(cfg.checkpoint_path, result.params, cfg.hp);
  const LossBreakdown &last = result.report.epochs.empty()
                                  ? result.report.initial
                                  : result.report.epochs.back().losses;
  std::cout << "initial_total\t" << result.report.initial.total << "\n"
            << "final_total\t" << last.total << "\n"
            << "model\t" << cfg.checkpoint_path << "\n";
  return 0;
}

struct EvalFlags {
  std::string task;
  std::string model;
  std::string problems;
  std::string instances;
  std::string subclass;
  std::string valid;
  std::string test;
  std::string known;
  std::string out;
  uint64_t seed = 1;
  bool keep_valid = false;
};

int RunEval(const EvalFlags &f) {
  const SavedModel saved = LoadModel(f.model);
  const EmbeddingModel &model = saved.params.model;
  auto need = [](const std::string &value, const std::string &flag,
                 const std::string &task) {
    if (value.empty()) throw ValidationError(task + " evaluation needs " + flag);
  };
  TaskResult result;
  if (f.task == "ranking") {
    need(f.problems, "--problems", f.task);
    RankerOptions options;
    options.seed = f.seed;
    result = EvalRanking(LoadRankingProblems(f.problems, f.seed), model, options);
  } else if (f.task == "induction") {
    need(f.problems, "--problems", f.task);
    need(f.instances, "--instances", f.task);
    result = EvalInduction(LoadInductionProblems(f.problems, f.seed), model,
                           TypesForModel(model, f.instances, f.subclass), !f.keep_valid);
  } else if (f.task == "analogy") {
    need(f.problems, "--problems", f.task);
    result = EvalAnalogy(LoadAnalogyProblems(f.problems, f.seed), model,
                         TypesForModel(model, f.instances, f.subclass));
  } else if (f.task == "link") {
    need(f.test, "--test", f.task);
    result = EvalLinkPrediction(LoadLabeledTriples(f.test), model, saved.params.relations);
  } else {
    need(f.valid, "--valid", f.task);
    need(f.test, "--test", f.task);
    std::vector<std::pair<std::string, int64_t>> ids;
    for (const std::string &id : model.entity_ids) ids.emplace_back(id, 0);
    const EntityCatalog catalog(std::move(ids));
    const TripleStore known =
        f.known.empty() ? TripleStore() : LoadTriples(f.known, catalog);
    auto with_negatives = [&](std::vector<LabeledTriple> triples, uint64_t seed) {
      const bool has_negative = std::any_of(triples.begin(), triples.end(),
                                            [](const LabeledTriple &t) { return !t.positive; });
      if (!has_negative) {
        const std::vector<LabeledTriple> neg =
            CorruptTriples(triples, known, model.entity_ids, seed);
        triples.insert(triples.end(), neg.begin(), neg.end());
      }
      return triples;
    };
    result = EvalTripleClassification(with_negatives(LoadLabeledTriples(f.valid), f.seed),
                                      with_negatives(LoadLabeledTriples(f.test), f.seed + 1),
                                      model, saved.params.relations);
  }
  PrintAggregate(result, std::cout);
  if (!f.out.empty()) {
    std::ofstream out(f.out);
    if (!out) throw ValidationError("--out: cannot write " + f.out);
    out << result.ToJson() << "\n";
  }
  return 0;
}

struct InspectFlags {
  std::string model;
  std::string type;
  std::string source = "anchors";
  std::string instances;
  std::string subclass;
  double rank_eps = -1.0;
};

int RunInspect(const InspectFlags &f) {
  const SavedModel saved = LoadModel(f.model);
  const double eps = f.rank_eps > 0.0 ? f.rank_eps : saved.hp.rank_eps;
  std::vector<SubspaceSummary> rows;
  if (f.source == "anchors") {
    const TypeSubspaceParams &types = saved.params.types;
    if (!f.type.empty()) {
      rows.push_back(AnchorSubspace(types, f.type, eps));
    } else {
      for (const TypeSubspace &t : types.types) {
        rows.push_back(AnchorSubspace(types, t.type_id, eps));
      }
    }
  } else {
    if (f.instances.empty()) throw ValidationError("--source points needs --instances");
    const TypeSystem ts = TypesForModel(saved.params.model, f.instances, f.subclass);
    for (int s = 0; s < ts.size(); ++s) {
      if (!f.type.empty() && ts.id(s) != f.type) continue;
      rows.push_back(PointSubspace(saved.params.model, ts.id(s), ts.Instances(s), eps));
    }
    if (!f.type.empty() && rows.empty()) throw NotFoundError("unknown type: " + f.type);
  }
  std::cout << "type_id\tnum_entities\teffective_dim\tsingular_values\n";
  for (const SubspaceSummary &s : rows) {
    std::cout << s.type_id << "\t" << s.num_entities << "\t" << s.effective_dim << "\t";
    for (size_t i = 0; i < s.singular_values.size() && i < 10; ++i) {
      std::cout << (i ? "," : "") << s.singular_values[i];
    }
    std::cout << "\n";
  }
  return 0;
}

std::vector<double> ParseList(const std::string &text, const std::string &flag) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error &) {
      throw ValidationError(flag + ": not a number: '" + item + "'");
    }
  }
  return out;
}

struct TuneFlags {
  std::string task = "induction";
  std::string problems;
  std::string alphas;
  std::string betas;
  std::string out;
};

int RunTune(const DataFlags &data, const HpFlags &hp, const TuneFlags &f) {
  const TrainConfig base = MakeTrainConfig(hp);
  TuneGrid grid = TuneGrid::Default();
  if (!f.alphas.empty()) grid.alphas = ParseList(f.alphas, "--alphas");
  if (!f.betas.empty()) grid.betas = ParseList(f.betas, "--betas");
  DataFlags d = data;
  std::function<double(const EmbeddingModel &)> metric;
  std::vector<RankingProblem> ranking;
  std::vector<InductionProblem> induction;
  if (f.task == "ranking") {
    ranking = ValidationView(LoadRankingProblems(f.problems, base.hp.seed));
  } else {
    induction = LoadInductionProblems(f.problems, base.hp.seed);
    if (d.omit.empty()) d.omit = f.problems;
    induction = ValidationView(induction);
  }
  const Dataset ds = LoadData(d, base.hp.variant);
  const TuneResult best = Tune(base.hp, grid, [&](const Hyperparams &candidate) {
    TrainConfig cfg = base;
    cfg.hp = candidate;
    const TrainResult trained = TrainOn(ds, cfg);
    const TaskResult r =
        f.task == "ranking"
            ? EvalRanking(ranking, trained.params.model)
            : EvalInduction(induction, trained.params.model, ds.data.types);
    const std::string key = f.task == "ranking" ? "fisher_rho" : "map";
    const double score = r.aggregate.count(key) ? r.aggregate.at(key)
                                                : std::numeric_limits<double>::quiet_NaN();
    spdlog::info("alpha {} beta {}: validation {} = {}", candidate.alpha, candidate.beta,
                 key, score);
    return score;
  });
  nlohmann::json j;
  j["alpha"] = best.best.alpha;
  j["beta"] = best.best.beta;
  j["score"] = best.score;
  std::cout << "alpha\t" << best.best.alpha << "\nbeta\t" << best.best.beta
            << "\nscore\t" << best.score << "\n";
  if (!f.out.empty()) {
    std::ofstream out(f.out);
    if (!out) throw ValidationError("--out: cannot write " + f.out);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int RunExport(const std::string &model_path, const std::string &out,
              const std::string &what) {
  const SavedModel saved = LoadModel(model_path);
  ExportText(out, saved.params.model, what != "words", what != "entities");
  return 0;
}

}  // namespace

int RunCli(int argc, const char *const *argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size()) {
        path = args[i + 1];
        args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      } else if (args[i].rfind("--config=", 0) == 0) {
        path = args[i].substr(9);
        args.erase(args.begin() + static_cast<long>(i));
      } else {
        continue;
      }
      args = MergeConfig(args, ReadConfigFile(path));
      break;
    }
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Entity embeddings with low-rank type subspaces"};
  app.require_subcommand(1);
  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error")
      ->capture_default_str();

  DataFlags train_data;
  HpFlags train_hp;
  std::string train_out;
  CLI::App *train = app.add_subcommand("train", "ingest a corpus and train a model");
  AddDataFlags(train, &train_data);
  AddHpFlags(train, &train_hp);
  train->add_option("--out", train_out, "output directory")->required();

  EvalFlags eval_flags;
  CLI::App *eval = app.add_subcommand("eval", "evaluate a trained model");
  eval->add_option("task", eval_flags.task, "ranking|induction|analogy|link|classification")
      ->required()
      ->check(CLI::IsMember(kTasks));
  eval->add_option("--model", eval_flags.model)->required()->check(CLI::ExistingFile);
  eval->add_option("--problems", eval_flags.problems, "problem file (JSON)")
      ->check(CLI::ExistingFile);
  eval->add_option("--instances", eval_flags.instances)->check(CLI::ExistingFile);
  eval->add_option("--subclass", eval_flags.subclass)->check(CLI::ExistingFile);
  eval->add_option("--valid", eval_flags.valid, "validation triples TSV")
      ->check(CLI::ExistingFile);
  eval->add_option("--test", eval_flags.test, "test triples TSV")->check(CLI::ExistingFile);
  eval->add_option("--triples", eval_flags.known,
                   "known triples, avoided when corrupting")
      ->check(CLI::ExistingFile);
  eval->add_option("--seed", eval_flags.seed)->capture_default_str();
  eval->add_flag("--keep-valid-in-pool", eval_flags.keep_valid,
                 "induction: leave validation positives among the candidates");
  eval->add_option("--out", eval_flags.out, "results JSON");

  InspectFlags inspect_flags;
  CLI::App *inspect = app.add_subcommand("inspect", "print type subspace dimensions");
  inspect->add_option("--model", inspect_flags.model)->required()->check(CLI::ExistingFile);
  inspect->add_option("--type", inspect_flags.type, "only this type");
  inspect->add_option("--source", inspect_flags.source, "anchors|points")
      ->capture_default_str()
      ->check(CLI::IsMember({"anchors", "points"}));
  inspect->add_option("--instances", inspect_flags.instances)->check(CLI::ExistingFile);
  inspect->add_option("--subclass", inspect_flags.subclass)->check(CLI::ExistingFile);
  inspect->add_option("--rank-eps", inspect_flags.rank_eps,
                      "relative singular value threshold (default: the model's)");

  DataFlags tune_data;
  HpFlags tune_hp;
  TuneFlags tune_flags;
  CLI::App *tune = app.add_subcommand("tune", "grid search over alpha and beta");
  AddDataFlags(tune, &tune_data);
  AddHpFlags(tune, &tune_hp);
  tune->add_option("--task", tune_flags.task, "validation task: ranking|induction")
      ->capture_default_str()
      ->check(CLI::IsMember({"ranking", "induction"}));
  tune->add_option("--problems", tune_flags.problems)->required()->check(CLI::ExistingFile);
  tune->add_option("--alphas", tune_flags.alphas, "comma-separated alpha grid");
  tune->add_option("--betas", tune_flags.betas, "comma-separated beta grid");
  tune->add_option("--out", tune_flags.out, "best point as JSON");

  std::string export_model, export_out, export_what = "all";
  CLI::App *exp = app.add_subcommand("export", "write vectors as text");
  exp->add_option("--model", export_model)->required()->check(CLI::ExistingFile);
  exp->add_option("--out", export_out)->required();
  exp->add_option("--what", export_what, "entities|words|all")
      ->capture_default_str()
      ->check(CLI::IsMember({"entities", "words", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  spdlog::drop("eecs");
  spdlog::set_default_logger(spdlog::stderr_color_st("eecs"));
  spdlog::set_level(spdlog::level::from_str(log_level));
  try {
    if (train->parsed()) return RunTrain(train_data, train_hp, train_out);
    if (eval->parsed()) return RunEval(eval_flags);
    if (inspect->parsed()) return RunInspect(inspect_flags);
    if (tune->parsed()) return RunTune(tune_data, tune_hp, tune_flags);
    if (exp->parsed()) return RunExport(export_model, export_out, export_what);
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace eecs
