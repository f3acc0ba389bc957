// tools/btforge.cc

// Copyright 2024  The btforge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "btforge/bootstrap.h"
#include "btforge/bpe.h"
#include "btforge/chrf.h"
#include "btforge/corpus.h"
#include "btforge/corpus_ops.h"
#include "btforge/error_classes.h"
#include "btforge/line_io.h"
#include "btforge/lr_schedule.h"
#include "btforge/metric.h"
#include "btforge/pos_tagger.h"
#include "btforge/report.h"
#include "btforge/text.h"
#include "btforge/tokenizer.h"
#include "btforge/truecase.h"
#include "btforge/variety.h"

namespace {

using namespace btforge;

// Mode conflicts and similar problems that CLI11's declarative checks
// do not cover; mapped to the usage-error exit code.
struct UsageError {
  std::string message;
};

std::vector<std::string> ReadInputLines(const std::string &path) {
  if (!path.empty()) return ReadLines(path);
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  std::string content = ss.str();
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= content.size()) {
    size_t eol = content.find('\n', start);
    if (eol == std::string::npos) {
      if (start < content.size()) lines.push_back(content.substr(start));
      break;
    }
    lines.push_back(content.substr(start, eol - start));
    start = eol + 1;
  }
  return lines;
}

void WriteOutput(const std::string &path, const std::string &content,
                 bool pretty) {
  const std::string &final_content = pretty ? AlignTsv(content) : content;
  if (path.empty()) {
    std::cout << final_content;
  } else {
    WriteStringAtomic(path, final_content);
  }
}

std::string JoinLines(const std::vector<std::string> &lines) {
  std::string out;
  for (const std::string &l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

Corpus SplitCorpus(const std::vector<std::string> &lines) {
  Corpus corpus;
  corpus.reserve(lines.size());
  for (const std::string &l : lines) corpus.push_back(SplitWhitespace(l));
  return corpus;
}

std::string RenderTsv(const ParallelCorpus &c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    out += c.source[i];
    out += '\t';
    out += c.target[i];
    out += '\t';
    out += c.provenance[i];
    out += '\n';
  }
  return out;
}

// Integral component values print without a fraction; everything else
// gets 6 decimals.  The full-precision path is --json.
std::string FormatComponent(double v) {
  if (std::floor(v) == v && std::fabs(v) < 1e15) return FormatFixed(v, 0);
  return FormatFixed(v, 6);
}

std::string RenderScoreTsv(const std::vector<MetricScore> &scores) {
  std::string out;
  for (const MetricScore &s : scores) {
    out += s.name;
    out += '\t';
    out += FormatFixed(s.value, 2);
    out += '\t';
    bool first = true;
    for (const auto &[name, value] : s.components) {
      if (!first) out += ',';
      out += name;
      out += '=';
      out += FormatComponent(value);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string RenderScoreJson(const std::vector<MetricScore> &scores) {
  nlohmann::json arr = nlohmann::json::array();
  for (const MetricScore &s : scores) {
    nlohmann::json obj;
    obj["metric"] = s.name;
    obj["value"] = s.value;
    obj["components"] = s.components;
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

// Tags per sentence, either parsed from word_TAG items or produced by
// the rule tagger.
std::vector<std::vector<PosTag>> TagLines(const std::vector<std::string> &lines,
                                          bool tagged, Corpus *tokens_out) {
  std::vector<std::vector<PosTag>> tags;
  tags.reserve(lines.size());
  if (tokens_out) tokens_out->reserve(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    try {
      if (tagged) {
        TaggedSentence ts = ParseTaggedLine(lines[i]);
        tags.push_back(std::move(ts.tags));
        if (tokens_out) tokens_out->push_back(std::move(ts.tokens));
      } else {
        Sentence tokens = SplitWhitespace(lines[i]);
        tags.push_back(CoarseTag(tokens));
        if (tokens_out) tokens_out->push_back(std::move(tokens));
      }
    } catch (const DataError &e) {
      throw DataError("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return tags;
}

Corpus TagsAsTokens(const std::vector<std::vector<PosTag>> &tags) {
  Corpus out;
  out.reserve(tags.size());
  for (const auto &sent : tags) {
    Sentence s;
    s.reserve(sent.size());
    for (PosTag t : sent) s.emplace_back(PosTagName(t));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"btforge: corpus construction and MT evaluation toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  uint64_t seed = 0;
  int threads = 1;
  bool pretty = false;
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_option("--threads", threads, "Worker threads (never affects results)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", pretty, "Align TSV output columns for reading");

  auto add_in = [&](CLI::App *cmd) {
    cmd->add_option("--in", in_path, "Input file (default stdin)")
        ->check(CLI::ExistingFile);
  };
  auto add_out = [&](CLI::App *cmd) {
    cmd->add_option("--out", out_path, "Output file (default stdout)");
  };

  // tok
  auto *tok = app.add_subcommand(
      "tok", "Split lines on whitespace and detach edge punctuation");
  tok->fallthrough();
  add_in(tok);
  add_out(tok);
  tok->callback([&]() {
    std::vector<std::string> lines = ReadInputLines(in_path);
    std::vector<std::string> out;
    out.reserve(lines.size());
    for (const std::string &l : lines) out.push_back(JoinTokens(Tokenize(l)));
    WriteOutput(out_path, JoinLines(out), false);
  });

  // truecase
  auto *truecase =
      app.add_subcommand("truecase", "Learn or apply a casing model");
  truecase->fallthrough();
  add_in(truecase);
  add_out(truecase);
  bool tc_learn = false, tc_apply = false;
  std::string tc_model;
  truecase->add_flag("--learn", tc_learn, "Learn a model from the input");
  truecase->add_flag("--apply", tc_apply, "Apply a model to the input");
  truecase->add_option("--model", tc_model, "Model file")->required();
  truecase->callback([&]() {
    if (tc_learn == tc_apply)
      throw UsageError{"truecase needs exactly one of --learn / --apply"};
    std::vector<std::string> lines = ReadInputLines(in_path);
    if (tc_learn) {
      TruecaseModel model;
      model.Learn(SplitCorpus(lines));
      model.Save(tc_model);
      return;
    }
    TruecaseModel model = TruecaseModel::Load(tc_model);
    std::vector<std::string> out;
    out.reserve(lines.size());
    for (const std::string &l : lines)
      out.push_back(JoinTokens(model.Apply(SplitWhitespace(l))));
    WriteOutput(out_path, JoinLines(out), false);
  });

  // bpe
  auto *bpe = app.add_subcommand(
      "bpe", "Learn, apply or undo subword segmentation");
  bpe->fallthrough();
  add_in(bpe);
  add_out(bpe);
  int64_t bpe_learn = -1;
  bool bpe_apply = false, bpe_undo = false;
  std::string bpe_model, bpe_in2;
  bpe->add_option("--learn", bpe_learn, "Learn a model with this many merges")
      ->check(CLI::NonNegativeNumber);
  bpe->add_flag("--apply", bpe_apply, "Apply a model to the input");
  bpe->add_flag("--undo", bpe_undo, "Re-join subword pieces");
  bpe->add_option("--model", bpe_model, "Model file");
  bpe->add_option("--in2", bpe_in2,
                  "Second corpus for joint-vocabulary learning")
      ->check(CLI::ExistingFile);
  bpe->callback([&]() {
    int modes = (bpe_learn >= 0 ? 1 : 0) + (bpe_apply ? 1 : 0) +
                (bpe_undo ? 1 : 0);
    if (modes != 1)
      throw UsageError{"bpe needs exactly one of --learn / --apply / --undo"};
    if (!bpe_undo && bpe_model.empty())
      throw UsageError{"bpe --learn/--apply needs --model"};
    std::vector<std::string> lines = ReadInputLines(in_path);
    if (bpe_learn >= 0) {
      Corpus second;
      if (!bpe_in2.empty()) second = SplitCorpus(ReadLines(bpe_in2));
      BpeModel model = LearnBpe(SplitCorpus(lines), second,
                                static_cast<size_t>(bpe_learn));
      model.Save(bpe_model);
      return;
    }
    std::vector<std::string> out;
    out.reserve(lines.size());
    if (bpe_apply) {
      BpeModel model = BpeModel::Load(bpe_model);
      BpeEncoder encoder(model);
      for (const std::string &l : lines)
        out.push_back(JoinTokens(encoder.EncodeSentence(SplitWhitespace(l))));
    } else {
      for (size_t i = 0; i < lines.size(); ++i) {
        try {
          out.push_back(JoinTokens(UndoBpe(SplitWhitespace(lines[i]))));
        } catch (const DataError &e) {
          throw DataError("line " + std::to_string(i + 1) + ": " + e.what());
        }
      }
    }
    WriteOutput(out_path, JoinLines(out), false);
  });

  // mix
  auto *mix = app.add_subcommand(
      "mix", "Combine two line-aligned parallel corpora");
  mix->fallthrough();
  add_out(mix);
  std::string mix_mode = "alt", mix_order = "a-first";
  size_t mix_block = 500000;
  std::string a_tsv, b_tsv, a_src, a_tgt, b_src, b_tgt;
  std::string a_label = "a", b_label = "b";
  mix->add_option("--mode", mix_mode, "alt: alternate source blocks; full: concatenate")
      ->check(CLI::IsMember({"alt", "full"}));
  mix->add_option("--block", mix_block, "Block size for alt mode")
      ->check(CLI::PositiveNumber);
  mix->add_option("--order", mix_order, "Which corpus supplies block 0")
      ->check(CLI::IsMember({"a-first", "b-first"}));
  mix->add_option("--a", a_tsv, "Corpus A as TSV")->check(CLI::ExistingFile);
  mix->add_option("--b", b_tsv, "Corpus B as TSV")->check(CLI::ExistingFile);
  mix->add_option("--a-src", a_src, "Corpus A source side")
      ->check(CLI::ExistingFile);
  mix->add_option("--a-tgt", a_tgt, "Corpus A target side")
      ->check(CLI::ExistingFile);
  mix->add_option("--b-src", b_src, "Corpus B source side")
      ->check(CLI::ExistingFile);
  mix->add_option("--b-tgt", b_tgt, "Corpus B target side")
      ->check(CLI::ExistingFile);
  mix->add_option("--a-label", a_label, "Provenance label for corpus A");
  mix->add_option("--b-label", b_label, "Provenance label for corpus B");
  mix->callback([&]() {
    auto load = [](const std::string &tsv, const std::string &src,
                   const std::string &tgt, const std::string &label,
                   const char *which) {
      if (!tsv.empty()) {
        ParallelCorpus c = ReadTsv(tsv);
        for (std::string &p : c.provenance)
          if (p.empty()) p = label;
        return c;
      }
      if (src.empty() || tgt.empty())
        throw UsageError{std::string("mix needs --") + which + " or --" +
                         which + "-src/--" + which + "-tgt"};
      return ReadPaired(src, tgt, label);
    };
    ParallelCorpus a = load(a_tsv, a_src, a_tgt, a_label, "a");
    ParallelCorpus b = load(b_tsv, b_src, b_tgt, b_label, "b");
    ParallelCorpus out;
    if (mix_mode == "alt") {
      MixPlan plan;
      plan.block_size = mix_block;
      plan.a_first = mix_order == "a-first";
      out = MixAlternating(a, b, plan);
    } else {
      out = MixFull(a, b);
    }
    WriteOutput(out_path, RenderTsv(out), false);
  });

  // sample
  auto *sample = app.add_subcommand(
      "sample", "Split off a uniform random subset of lines");
  sample->fallthrough();
  add_in(sample);
  add_out(sample);
  size_t sample_k = 0;
  std::string rest_path;
  sample->add_option("-k,--k", sample_k, "Lines to draw")->required();
  sample->add_option("--rest", rest_path, "File for the unsampled remainder");
  sample->callback([&]() {
    std::vector<std::string> lines = ReadInputLines(in_path);
    ParallelCorpus c;
    c.source = lines;
    c.target = lines;
    c.provenance.assign(lines.size(), "");
    SampleSplit split = SampleLines(c, sample_k, seed);
    WriteOutput(out_path, JoinLines(split.sample.source), false);
    if (!rest_path.empty())
      WriteStringAtomic(rest_path, JoinLines(split.rest.source));
  });

  // lenstats
  auto *lenstats = app.add_subcommand(
      "lenstats", "Sentence-length statistics of a corpus");
  lenstats->fallthrough();
  add_in(lenstats);
  add_out(lenstats);
  lenstats->callback([&]() {
    LengthStats stats = ComputeLengthStats(ReadInputLines(in_path));
    std::string out;
    out += "sentences\t" + std::to_string(stats.sentences) + "\n";
    out += "tokens\t" + std::to_string(stats.tokens) + "\n";
    out += "mean\t" + FormatFixed(stats.mean, 4) + "\n";
    for (const auto &[len, count] : stats.histogram)
      out += "len_" + std::to_string(len) + "\t" + std::to_string(count) + "\n";
    WriteOutput(out_path, out, pretty);
  });

  // eval
  auto *eval = app.add_subcommand(
      "eval", "Score a hypothesis corpus against a reference");
  eval->fallthrough();
  add_out(eval);
  std::string eval_metric = "all", hyp_path, ref_path;
  double chrf_beta = 1.0;
  int chrf_max_n = 6;
  bool eval_json = false;
  eval->add_option("--metric", eval_metric, "Metric or all")
      ->check(CLI::IsMember({"bleu", "ter", "chrf", "meteor", "all"}));
  eval->add_option("--hyp", hyp_path, "Hypothesis file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--ref", ref_path, "Reference file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--beta", chrf_beta, "chrF recall weight")
      ->check(CLI::PositiveNumber);
  eval->add_option("--max-n", chrf_max_n, "chrF maximum n-gram order")
      ->check(CLI::Range(1, 6));
  eval->add_flag("--json", eval_json, "Full-precision structured output");
  eval->callback([&]() {
    Corpus hyps = SplitCorpus(ReadLines(hyp_path));
    Corpus refs = SplitCorpus(ReadLines(ref_path));
    std::vector<std::string> names;
    if (eval_metric == "all") {
      names = {"bleu", "ter", "meteor", "chrf"};
    } else {
      names = {eval_metric};
    }
    std::vector<MetricScore> scores;
    for (const std::string &name : names) {
      std::unique_ptr<MetricEvaluator> metric;
      if (name == "chrf") {
        metric = std::make_unique<ChrfEvaluator>(chrf_max_n, chrf_beta);
      } else {
        metric = MakeEvaluator(name);
      }
      scores.push_back(EvaluateCorpus(*metric, hyps, refs, threads));
    }
    if (eval_json) {
      WriteOutput(out_path, RenderScoreJson(scores), false);
    } else {
      WriteOutput(out_path, RenderScoreTsv(scores), pretty);
    }
  });

  // errors
  auto *errors = app.add_subcommand(
      "errors", "Classify translation errors into five classes");
  errors->fallthrough();
  add_out(errors);
  bool per_sentence = false;
  errors->add_option("--hyp", hyp_path, "Hypothesis file")
      ->required()
      ->check(CLI::ExistingFile);
  errors->add_option("--ref", ref_path, "Reference file")
      ->required()
      ->check(CLI::ExistingFile);
  errors->add_flag("--per-sentence", per_sentence,
                   "Raw per-line counts instead of corpus rates");
  errors->callback([&]() {
    Corpus hyps = SplitCorpus(ReadLines(hyp_path));
    Corpus refs = SplitCorpus(ReadLines(ref_path));
    std::string out;
    if (per_sentence) {
      if (refs.size() != hyps.size())
        throw DataError("corpus sizes differ: " + std::to_string(hyps.size()) +
                        " vs " + std::to_string(refs.size()));
      out = "line";
      for (int c = 0; c < kNumErrorClasses; ++c) {
        out += std::string("\t") + ErrorClassName(c) + "_ref";
        out += std::string("\t") + ErrorClassName(c) + "_hyp";
      }
      out += "\tref_tokens\thyp_tokens\n";
      for (size_t i = 0; i < refs.size(); ++i) {
        ErrorCounts counts = ClassifyErrors(refs[i], hyps[i]).counts;
        out += std::to_string(i + 1);
        for (int c = 0; c < kNumErrorClasses; ++c) {
          out += '\t' + std::to_string(counts.ref[c]);
          out += '\t' + std::to_string(counts.hyp[c]);
        }
        out += '\t' + std::to_string(counts.ref_tokens);
        out += '\t' + std::to_string(counts.hyp_tokens);
        out += '\n';
      }
    } else {
      ErrorCounts counts = CountCorpusErrors(refs, hyps, threads);
      std::map<std::string, double> rates = ErrorRates(counts);
      out = "morph\torder\tomission\taddition\tmistranslation\n";
      out += FormatFixed(rates.at("morph"), 1);
      out += '\t' + FormatFixed(rates.at("order"), 1);
      out += '\t' + FormatFixed(rates.at("omission"), 1);
      out += '\t' + FormatFixed(rates.at("addition"), 1);
      out += '\t' + FormatFixed(rates.at("mistranslation"), 1);
      out += '\n';
    }
    WriteOutput(out_path, out, pretty);
  });

  // variety
  auto *variety = app.add_subcommand(
      "variety", "Vocabulary size and distinct POS n-gram counts");
  variety->fallthrough();
  add_in(variety);
  add_out(variety);
  bool tagged = false;
  variety->add_flag("--tagged", tagged, "Input items are word_TAG");
  variety->callback([&]() {
    std::vector<std::string> lines = ReadInputLines(in_path);
    Corpus tokens;
    std::vector<std::vector<PosTag>> tags = TagLines(lines, tagged, &tokens);
    VarietyCounts counts = PosNgramVariety(tags, 4);
    std::string out = "vocab\t" + std::to_string(VocabSize(tokens)) + "\n";
    for (const auto &[n, count] : counts.per_n)
      out += "pos_" + std::to_string(n) + "\t" + std::to_string(count) + "\n";
    out += "pos_total\t" + std::to_string(counts.total) + "\n";
    WriteOutput(out_path, out, pretty);
  });

  // pr4
  auto *pr4 = app.add_subcommand(
      "pr4", "N-gram precision and recall against a reference");
  pr4->fallthrough();
  add_out(pr4);
  std::string pr_unit = "word", pr_mode = "multiset";
  int pr_n = 4;
  bool pr_tagged = false;
  pr4->add_option("--hyp", hyp_path, "Hypothesis file")
      ->required()
      ->check(CLI::ExistingFile);
  pr4->add_option("--ref", ref_path, "Reference file")
      ->required()
      ->check(CLI::ExistingFile);
  pr4->add_option("--unit", pr_unit, "Count word or POS n-grams")
      ->check(CLI::IsMember({"word", "pos"}));
  pr4->add_option("--mode", pr_mode, "Clipped multiset counts or distinct sets")
      ->check(CLI::IsMember({"multiset", "distinct"}));
  pr4->add_option("--n", pr_n, "N-gram order")->check(CLI::Range(1, 8));
  pr4->add_flag("--tagged", pr_tagged, "Input items are word_TAG");
  pr4->callback([&]() {
    std::vector<std::string> hyp_lines = ReadLines(hyp_path);
    std::vector<std::string> ref_lines = ReadLines(ref_path);
    Corpus hyps, refs;
    if (pr_unit == "pos") {
      hyps = TagsAsTokens(TagLines(hyp_lines, pr_tagged, nullptr));
      refs = TagsAsTokens(TagLines(ref_lines, pr_tagged, nullptr));
    } else if (pr_tagged) {
      Corpus h, r;
      TagLines(hyp_lines, true, &h);
      TagLines(ref_lines, true, &r);
      hyps = std::move(h);
      refs = std::move(r);
    } else {
      hyps = SplitCorpus(hyp_lines);
      refs = SplitCorpus(ref_lines);
    }
    PrecisionRecall pr =
        NgramPrecisionRecall(hyps, refs, pr_n, pr_mode == "distinct");
    std::string out = "precision\t" + FormatFixed(pr.precision, 6) + "\n";
    out += "recall\t" + FormatFixed(pr.recall, 6) + "\n";
    WriteOutput(out_path, out, pretty);
  });

  // signif
  auto *signif = app.add_subcommand(
      "signif", "Paired bootstrap significance of a metric difference");
  signif->fallthrough();
  add_out(signif);
  std::string hyp_a_path, hyp_b_path, sig_metric = "bleu";
  int resamples = 1000;
  signif->add_option("--hyp-a", hyp_a_path, "System A hypothesis file")
      ->required()
      ->check(CLI::ExistingFile);
  signif->add_option("--hyp-b", hyp_b_path, "System B hypothesis file")
      ->required()
      ->check(CLI::ExistingFile);
  signif->add_option("--ref", ref_path, "Reference file")
      ->required()
      ->check(CLI::ExistingFile);
  signif->add_option("--metric", sig_metric, "Metric to compare")
      ->check(CLI::IsMember({"bleu", "ter", "chrf", "meteor"}));
  signif->add_option("--B", resamples, "Bootstrap resamples")
      ->check(CLI::PositiveNumber);
  signif->callback([&]() {
    Corpus hyp_a = SplitCorpus(ReadLines(hyp_a_path));
    Corpus hyp_b = SplitCorpus(ReadLines(hyp_b_path));
    Corpus refs = SplitCorpus(ReadLines(ref_path));
    std::unique_ptr<MetricEvaluator> metric = MakeEvaluator(sig_metric);
    BootstrapResult r = PairedBootstrap(*metric, hyp_a, hyp_b, refs,
                                        resamples, seed, threads);
    std::string out = "delta\tp_value\tflag\n";
    out += FormatFixed(r.delta, 6);
    out += '\t' + FormatFixed(r.p_value, 6);
    out += '\t';
    out += r.no_difference ? "no_difference" : "-";
    out += '\n';
    WriteOutput(out_path, out, pretty);
  });

  // lrsched
  auto *lrsched = app.add_subcommand(
      "lrsched", "Stretch a step-decay schedule for k times the data");
  lrsched->fallthrough();
  add_out(lrsched);
  ScheduleSpec spec;
  lrsched->add_option("--k", spec.multiplier, "Corpus growth factor")
      ->required()
      ->check(CLI::PositiveNumber);
  lrsched->add_option("--base-epochs", spec.base_epochs, "Base epoch count")
      ->check(CLI::PositiveNumber);
  lrsched->add_option("--base-start", spec.base_decay_start_epoch,
                      "Base decay start epoch")
      ->check(CLI::PositiveNumber);
  lrsched->add_option("--base-factor", spec.base_decay_factor,
                      "Base per-epoch decay factor")
      ->check(CLI::Range(1e-9, 1.0));
  lrsched->callback([&]() {
    Schedule schedule = RescaleSchedule(spec);
    std::string out =
        "decay_start_epoch\t" + std::to_string(schedule.decay_start_epoch) +
        "\n";
    out += "decay_factor\t" + FormatFixed(schedule.decay_factor, 6) + "\n";
    out += "epochs\t" + std::to_string(schedule.epoch_multipliers.size()) +
           "\n";
    for (size_t e = 0; e < schedule.epoch_multipliers.size(); ++e)
      out += "epoch_" + std::to_string(e + 1) + "\t" +
             FormatFixed(schedule.epoch_multipliers[e], 6) + "\n";
    WriteOutput(out_path, out, pretty);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const DataError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
