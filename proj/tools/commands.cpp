// tools/commands.cpp

// Copyright 2026  Minkowski decoding authors
//
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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minkowski/decoder.hpp"
#include "minkowski/error.hpp"
#include "minkowski/loss.hpp"
#include "minkowski/posterior_ops.hpp"

namespace minkowski::cli {
namespace {

using nlohmann::json;

std::string json_string(const std::string& s) {
  // nlohmann's escaping; strings are the only values routed through it so
  // that every number keeps the 17-digit formatting.
  return json(s).dump();
}

std::string json_optional_string(const std::optional<std::string>& s) {
  return s ? json_string(*s) : "null";
}

void write_output(const std::optional<std::filesystem::path>& path,
                  const std::string& text, std::ostream& out) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

[[noreturn]] void config_error(const std::string& source,
                               const std::string& detail) {
  throw ParseError(ParseErrorKind::kBadDocument, source, 0, detail);
}

std::vector<LossOrder> parse_orders(const std::vector<int>& orders) {
  if (orders.empty()) throw ValidationError("at least one order is required");
  std::vector<LossOrder> parsed;
  for (int order : orders) parsed.push_back(parse_transform_order(order));
  return parsed;
}

}  // namespace

LossOrder parse_transform_order(int value) {
  if (value >= 3 && value % 2 != 0) {
    const RootAnalysis analysis =
        analyze_odd_order(Posterior(0.5), LossOrder::for_analysis(value));
    std::ostringstream msg;
    msg << "order " << value << " is odd: the roots of its expected-loss "
        << "gradient are complex numbers (at mu=0.5 they are";
    for (const auto& root : analysis.roots) {
      msg << ' ' << format_real(root.real())
          << (root.imag() < 0 ? " - " : " + ")
          << format_real(std::abs(root.imag())) << 'i';
    }
    msg << "), so the result can't be used as a probability; use an even "
           "order such as 2, 4 or 6";
    throw ValidationError(msg.str());
  }
  return LossOrder::even(value);
}

void cmd_transform(const TransformOptions& options, std::ostream& out) {
  const LossOrder order = parse_transform_order(options.order);
  const PosteriorMatrix input = load_posteriors(options.input);
  const PosteriorMatrix result =
      transform_matrix(input, order, options.renormalize);
  if (options.output.empty()) {
    write_posteriors(out, result);
  } else {
    save_posteriors(result, options.output);
  }
}

std::string curves_table(const std::vector<int>& orders,
                         std::size_t grid_points) {
  if (grid_points < 2) throw ValidationError("grid_points must be >= 2");
  const std::vector<LossOrder> parsed = parse_orders(orders);
  std::ostringstream out;
  out << "mu";
  for (LossOrder order : parsed) out << " order" << order.value();
  out << '\n';
  const double denom = static_cast<double>(grid_points - 1);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double mu =
        (i + 1 == grid_points) ? 1.0 : static_cast<double>(i) / denom;
    out << format_real(mu);
    for (LossOrder order : parsed) {
      out << ' ' << format_real(closed_form_transform(Posterior(mu), order).value());
    }
    out << '\n';
  }
  return out.str();
}

std::string curves_svg(const std::vector<int>& orders,
                       std::size_t grid_points) {
  if (grid_points < 2) throw ValidationError("grid_points must be >= 2");
  const std::vector<LossOrder> parsed = parse_orders(orders);
  constexpr double kSize = 400.0;
  constexpr double kMargin = 40.0;
  static const char* const kColours[] = {"#1f77b4", "#d62728", "#2ca02c",
                                         "#9467bd", "#ff7f0e", "#8c564b"};
  auto px = [&](double v) { return kMargin + v * kSize; };
  auto py = [&](double v) { return kMargin + (1.0 - v) * kSize; };
  char buf[64];

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" "
         "height=\"480\" viewBox=\"0 0 480 480\">\n"
      << "<rect x=\"40\" y=\"40\" width=\"400\" height=\"400\" fill=\"none\" "
         "stroke=\"#000\"/>\n"
      << "<text x=\"240\" y=\"472\" text-anchor=\"middle\" font-size=\"14\">"
         "order-2 posterior</text>\n"
      << "<text x=\"14\" y=\"240\" text-anchor=\"middle\" font-size=\"14\" "
         "transform=\"rotate(-90 14 240)\">transformed posterior</text>\n";
  for (std::size_t k = 0; k < parsed.size(); ++k) {
    svg << "<polyline fill=\"none\" stroke=\"" << kColours[k % 6]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < grid_points; ++i) {
      const double mu = static_cast<double>(i) / static_cast<double>(grid_points - 1);
      const double y = closed_form_transform(Posterior(mu), parsed[k]).value();
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", i ? " " : "", px(mu), py(y));
      svg << buf;
    }
    svg << "\"/>\n";
    std::snprintf(buf, sizeof buf, "%.0f", 60.0 + 18.0 * static_cast<double>(k));
    svg << "<text x=\"50\" y=\"" << buf << "\" font-size=\"13\" fill=\""
        << kColours[k % 6] << "\">order " << parsed[k].value() << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void cmd_curves(const CurvesOptions& options, std::ostream& out) {
  const std::string table = curves_table(options.orders, options.grid_points);
  write_output(options.output, table, out);
  if (options.svg) {
    write_text_file(*options.svg, curves_svg(options.orders, options.grid_points));
  }
}

TokenSequence decode_posteriors(const PosteriorMatrix& posteriors,
                                const HmmModel& hmm, LossOrder order,
                                bool renormalize,
                                const std::vector<double>& priors) {
  const PosteriorMatrix transformed =
      transform_matrix(posteriors, order, renormalize);
  const LogScoreMatrix scores = to_log_scores(transformed, priors);
  return viterbi_decode(scores, hmm).token_sequence;
}

void cmd_decode(const DecodeOptions& options, std::ostream& out) {
  const LossOrder order = parse_transform_order(options.order);
  const PosteriorMatrix posteriors = load_posteriors(options.posteriors);
  const HmmModel hmm = load_hmm(options.hmm);
  std::vector<double> priors;
  if (options.priors) priors = load_priors(*options.priors);
  const TokenSequence tokens =
      decode_posteriors(posteriors, hmm, order, options.renormalize, priors);
  std::string text;
  for (const auto& token : tokens) text += token + "\n";
  write_output(options.output, text, out);
}

std::string format_wer(const WerReport& report, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::kMachine) {
    out << "{\"substitutions\": " << report.substitutions
        << ", \"deletions\": " << report.deletions
        << ", \"insertions\": " << report.insertions
        << ", \"ref_length\": " << report.ref_length
        << ", \"wer\": " << format_real(report.wer) << "}\n";
  } else {
    char pct[32];
    std::snprintf(pct, sizeof pct, "%.2f", 100.0 * report.wer);
    out << "%WER " << pct << " [ " << report.errors() << " / "
        << report.ref_length << ", " << report.insertions << " ins, "
        << report.deletions << " del, " << report.substitutions
        << " sub ]\n";
  }
  return out.str();
}

WerReport cmd_score(const std::filesystem::path& reference,
                    const std::filesystem::path& hypothesis,
                    OutputFormat format, std::ostream& out) {
  const TokenSequence ref = load_tokens(reference);
  const TokenSequence hyp = load_tokens(hypothesis);
  if (ref.empty()) {
    throw ValidationError(reference.string() + ": reference is empty");
  }
  const WerReport report = align_and_score(ref, hyp);
  out << format_wer(report, format);
  return report;
}

CorpusManifest cmd_synth(const SynthOptions& options) {
  const HmmModel hmm = load_hmm(options.hmm);
  const std::vector<Utterance> corpus = generate_corpus(hmm, options.corpus);
  return write_corpus(corpus, options.output_dir, options.corpus);
}

ExperimentConfig parse_experiment_config(
    const std::string& text, const std::string& source,
    const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(source, e.what());
  }
  if (!doc.is_object()) config_error(source, "top level must be an object");
  static const std::set<std::string> kKnown{
      "hmm",        "corpus",     "corpus_out",  "priors",
      "num_utterances", "min_frames", "max_frames", "num_classes",
      "noise",      "orders",     "renormalize"};
  for (const auto& item : doc.items()) {
    if (!kKnown.count(item.key())) {
      config_error(source, "unknown field \"" + item.key() + "\"");
    }
  }

  ExperimentConfig config;
  try {
    if (!doc.contains("hmm")) config_error(source, "missing field \"hmm\"");
    config.hmm_label = doc.at("hmm").get<std::string>();
    config.hmm_path = base_dir / config.hmm_label;
    if (doc.contains("corpus")) {
      config.corpus_label = doc.at("corpus").get<std::string>();
      config.corpus_manifest = base_dir / *config.corpus_label;
    }
    if (doc.contains("corpus_out")) {
      config.corpus_out = base_dir / doc.at("corpus_out").get<std::string>();
    }
    if (doc.contains("priors")) {
      config.priors_label = doc.at("priors").get<std::string>();
      config.priors_path = base_dir / *config.priors_label;
    }
    CorpusOptions& corpus = config.corpus;
    corpus.num_utterances = doc.value("num_utterances", std::size_t{20});
    corpus.min_frames = doc.value("min_frames", std::size_t{10});
    corpus.max_frames = doc.value("max_frames", corpus.min_frames);
    corpus.num_classes = doc.value("num_classes", std::size_t{0});
    if (doc.contains("noise")) {
      const json& noise = doc.at("noise");
      if (!noise.is_object()) config_error(source, "\"noise\" must be an object");
      for (const auto& item : noise.items()) {
        if (item.key() != "concentration" && item.key() != "confusion_rate" &&
            item.key() != "seed") {
          config_error(source, "unknown noise field \"" + item.key() + "\"");
        }
      }
      if (noise.contains("concentration")) {
        const json& c = noise.at("concentration");
        if (c.is_string() && c.get<std::string>() == "inf") {
          corpus.noise.concentration = std::numeric_limits<double>::infinity();
        } else {
          corpus.noise.concentration = c.get<double>();
        }
      }
      corpus.noise.confusion_rate =
          noise.value("confusion_rate", corpus.noise.confusion_rate);
      corpus.noise.seed = noise.value("seed", corpus.noise.seed);
    }
    if (doc.contains("orders")) {
      config.orders = doc.at("orders").get<std::vector<int>>();
    }
    config.renormalize = doc.value("renormalize", true);
  } catch (const json::exception& e) {
    config_error(source, e.what());
  }

  parse_orders(config.orders);
  if (std::find(config.orders.begin(), config.orders.end(), 2) ==
      config.orders.end()) {
    config_error(source, "\"orders\" must include the order-2 baseline");
  }
  std::set<int> unique(config.orders.begin(), config.orders.end());
  if (unique.size() != config.orders.size()) {
    config_error(source, "\"orders\" contains duplicates");
  }
  config.corpus.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  return parse_experiment_config(read_text_file(path), path.string(),
                                 path.parent_path());
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const HmmModel hmm = load_hmm(config.hmm_path);
  std::vector<double> priors;
  if (config.priors_path) priors = load_priors(*config.priors_path);

  std::vector<Utterance> corpus;
  if (config.corpus_manifest) {
    corpus = load_corpus(load_manifest(*config.corpus_manifest));
  } else {
    corpus = generate_corpus(hmm, config.corpus);
    if (config.corpus_out) write_corpus(corpus, *config.corpus_out, config.corpus);
  }
  for (const auto& utt : corpus) {
    if (utt.reference.empty()) {
      throw ValidationError("utterance \"" + utt.id + "\" has an empty reference");
    }
  }

  ExperimentReport report;
  report.config = config;
  report.num_utterances = corpus.size();
  std::optional<double> baseline;
  for (int value : config.orders) {
    const LossOrder order = LossOrder::even(value);
    std::vector<std::pair<TokenSequence, TokenSequence>> pairs;
    pairs.reserve(corpus.size());
    const auto start = std::chrono::steady_clock::now();
    for (const auto& utt : corpus) {
      pairs.emplace_back(utt.reference,
                         decode_posteriors(utt.posteriors, hmm, order,
                                           config.renormalize, priors));
    }
    const auto stop = std::chrono::steady_clock::now();

    OrderResult result;
    result.order = value;
    result.wer = corpus_wer(pairs);
    result.decode_seconds = std::chrono::duration<double>(stop - start).count();
    report.results.push_back(result);
    if (value == 2) baseline = result.wer.wer;
  }
  for (auto& result : report.results) {
    if (result.order != 2) {
      result.relative_reduction = relative_reduction(*baseline, result.wer.wer);
    }
  }
  return report;
}

std::string format_report(const ExperimentReport& report, OutputFormat format,
                          bool include_timing) {
  const ExperimentConfig& config = report.config;
  const CorpusOptions& corpus = config.corpus;
  const std::string concentration =
      std::isinf(corpus.noise.concentration)
          ? std::string(format == OutputFormat::kMachine ? "\"inf\"" : "inf")
          : format_real(corpus.noise.concentration);
  std::ostringstream out;

  if (format == OutputFormat::kMachine) {
    out << "{\n  \"config\": {\n"
        << "    \"hmm\": " << json_string(config.hmm_label) << ",\n"
        << "    \"corpus\": " << json_optional_string(config.corpus_label) << ",\n"
        << "    \"priors\": " << json_optional_string(config.priors_label) << ",\n"
        << "    \"num_utterances\": " << report.num_utterances << ",\n"
        << "    \"min_frames\": " << corpus.min_frames << ",\n"
        << "    \"max_frames\": " << corpus.max_frames << ",\n"
        << "    \"concentration\": " << concentration << ",\n"
        << "    \"confusion_rate\": " << format_real(corpus.noise.confusion_rate) << ",\n"
        << "    \"seed\": " << corpus.noise.seed << ",\n"
        << "    \"renormalize\": " << (config.renormalize ? "true" : "false") << ",\n"
        << "    \"orders\": [";
    for (std::size_t i = 0; i < config.orders.size(); ++i) {
      out << (i ? ", " : "") << config.orders[i];
    }
    out << "]\n  },\n  \"results\": [\n";
    for (std::size_t i = 0; i < report.results.size(); ++i) {
      const OrderResult& r = report.results[i];
      out << "    {\"order\": " << r.order
          << ", \"substitutions\": " << r.wer.substitutions
          << ", \"deletions\": " << r.wer.deletions
          << ", \"insertions\": " << r.wer.insertions
          << ", \"ref_length\": " << r.wer.ref_length
          << ", \"wer\": " << format_real(r.wer.wer)
          << ", \"relative_reduction\": "
          << (r.relative_reduction ? format_real(*r.relative_reduction) : "null");
      if (include_timing) {
        out << ", \"decode_seconds\": " << format_real(r.decode_seconds);
      }
      out << "}" << (i + 1 < report.results.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
  }

  out << "# hmm=" << config.hmm_label
      << " corpus=" << config.corpus_label.value_or("synthetic")
      << " priors=" << config.priors_label.value_or("none") << "\n"
      << "# utterances=" << report.num_utterances
      << " frames=" << corpus.min_frames << ".." << corpus.max_frames
      << " concentration=" << concentration
      << " confusion_rate=" << format_real(corpus.noise.confusion_rate)
      << " seed=" << corpus.noise.seed
      << " renormalize=" << (config.renormalize ? "on" : "off") << "\n";
  out << "order  wer                  sub  del  ins  ref  rel_reduction";
  if (include_timing) out << "  decode_s";
  out << "\n";
  char line[256];
  for (const OrderResult& r : report.results) {
    const std::string rel =
        r.relative_reduction ? format_real(*r.relative_reduction) : "-";
    std::snprintf(line, sizeof line, "%-5d  %-19s  %3zu  %3zu  %3zu  %3zu  %s",
                  r.order, format_real(r.wer.wer).c_str(), r.wer.substitutions,
                  r.wer.deletions, r.wer.insertions, r.wer.ref_length,
                  rel.c_str());
    out << line;
    if (include_timing) {
      std::snprintf(line, sizeof line, "  %.6f", r.decode_seconds);
      out << line;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

OutputFormat parse_format(const std::string& value) {
  return value == "machine" ? OutputFormat::kMachine : OutputFormat::kTable;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Higher-order Minkowski posterior transform, Viterbi decoding and WER "
      "scoring"};
  app.require_subcommand(1);
  const auto on_off = CLI::IsMember({"on", "off"});
  const auto formats = CLI::IsMember({"table", "machine"});

  TransformOptions transform;
  std::string transform_renorm = "on";
  auto* transform_cmd = app.add_subcommand(
      "transform", "Map a posterior matrix file to order-k posteriors");
  transform_cmd->add_option("input", transform.input, "Posterior matrix file")
      ->required();
  transform_cmd->add_option("--out", transform.output,
                            "Output matrix file (default stdout)");
  transform_cmd->add_option("--order", transform.order, "Even loss order")
      ->capture_default_str();
  transform_cmd->add_option("--renormalize", transform_renorm,
                            "Rescale rows to sum to one")
      ->check(on_off)
      ->capture_default_str();

  CurvesOptions curves;
  std::string curves_out;
  std::string curves_svg_path;
  auto* curves_cmd = app.add_subcommand(
      "curves", "Tabulate transform(mu) against mu for several orders");
  curves_cmd->add_option("--order", curves.orders, "Even orders (repeatable)")
      ->delimiter(',')
      ->capture_default_str();
  curves_cmd->add_option("--grid-points", curves.grid_points,
                         "Number of mu values in [0, 1]")
      ->capture_default_str();
  curves_cmd->add_option("--out", curves_out, "Table file (default stdout)");
  curves_cmd->add_option("--svg", curves_svg_path, "Also write an SVG chart");

  DecodeOptions decode;
  std::string decode_renorm = "on";
  std::string decode_priors;
  std::string decode_out;
  auto* decode_cmd = app.add_subcommand(
      "decode", "Transform posteriors and Viterbi-decode them against an HMM");
  decode_cmd->add_option("posteriors", decode.posteriors, "Posterior matrix file")
      ->required();
  decode_cmd->add_option("hmm", decode.hmm, "HMM JSON file")->required();
  decode_cmd->add_option("--order", decode.order, "Even loss order")
      ->capture_default_str();
  decode_cmd->add_option("--renormalize", decode_renorm,
                         "Rescale rows to sum to one before decoding")
      ->check(on_off)
      ->capture_default_str();
  decode_cmd->add_option("--priors", decode_priors,
                         "Class priors to divide by (default: none)");
  decode_cmd->add_option("--out", decode_out,
                         "Transcript file, one token per line (default stdout)");

  std::filesystem::path score_ref;
  std::filesystem::path score_hyp;
  std::string score_format = "table";
  auto* score_cmd =
      app.add_subcommand("score", "Word error rate of a hypothesis transcript");
  score_cmd->add_option("reference", score_ref, "Reference transcript")
      ->required();
  score_cmd->add_option("hypothesis", score_hyp, "Hypothesis transcript")
      ->required();
  score_cmd->add_option("--format", score_format, "table or machine")
      ->check(formats)
      ->capture_default_str();

  SynthOptions synth;
  synth.corpus.num_utterances = 20;
  synth.corpus.min_frames = 10;
  synth.corpus.max_frames = 30;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate a seeded synthetic corpus");
  synth_cmd->add_option("--hmm", synth.hmm, "HMM JSON file")->required();
  synth_cmd->add_option("--out", synth.output_dir, "Output directory")
      ->required();
  synth_cmd->add_option("--seed", synth.corpus.noise.seed, "Base seed")
      ->capture_default_str();
  synth_cmd->add_option("--num-utterances", synth.corpus.num_utterances)
      ->capture_default_str();
  synth_cmd->add_option("--min-frames", synth.corpus.min_frames)
      ->capture_default_str();
  synth_cmd->add_option("--max-frames", synth.corpus.max_frames)
      ->capture_default_str();
  synth_cmd->add_option("--classes", synth.corpus.num_classes,
                        "Posterior columns (0: derive from the HMM)")
      ->capture_default_str();
  synth_cmd->add_option("--concentration", synth.corpus.noise.concentration)
      ->capture_default_str();
  synth_cmd->add_option("--confusion-rate", synth.corpus.noise.confusion_rate)
      ->capture_default_str();

  std::filesystem::path experiment_config;
  std::string experiment_format = "table";
  std::string experiment_out;
  std::uint64_t experiment_seed = 0;
  bool experiment_timing = false;
  auto* experiment_cmd = app.add_subcommand(
      "experiment", "Decode one corpus at every order and compare WER");
  experiment_cmd->add_option("config", experiment_config,
                             "Experiment JSON config")
      ->required();
  auto* seed_opt = experiment_cmd->add_option(
      "--seed", experiment_seed, "Override the config's noise seed");
  experiment_cmd->add_option("--format", experiment_format, "table or machine")
      ->check(formats)
      ->capture_default_str();
  experiment_cmd->add_option("--out", experiment_out,
                             "Report file (default stdout)");
  experiment_cmd->add_flag("--timing", experiment_timing,
                           "Include per-order decode time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto optional_path = [](const std::string& s) {
    return s.empty() ? std::nullopt
                     : std::optional<std::filesystem::path>(s);
  };

  try {
    if (*transform_cmd) {
      transform.renormalize = transform_renorm == "on";
      cmd_transform(transform, out);
    } else if (*curves_cmd) {
      curves.output = optional_path(curves_out);
      curves.svg = optional_path(curves_svg_path);
      cmd_curves(curves, out);
    } else if (*decode_cmd) {
      decode.renormalize = decode_renorm == "on";
      decode.priors = optional_path(decode_priors);
      decode.output = optional_path(decode_out);
      cmd_decode(decode, out);
    } else if (*score_cmd) {
      cmd_score(score_ref, score_hyp, parse_format(score_format), out);
    } else if (*synth_cmd) {
      const CorpusManifest manifest = cmd_synth(synth);
      out << "wrote " << manifest.utterances.size() << " utterances to "
          << synth.output_dir.string() << "\n";
    } else if (*experiment_cmd) {
      ExperimentConfig config = load_experiment_config(experiment_config);
      if (*seed_opt) config.corpus.noise.seed = experiment_seed;
      const ExperimentReport report = run_experiment(config);
      write_output(optional_path(experiment_out),
                   format_report(report, parse_format(experiment_format),
                                 experiment_timing),
                   out);
    }
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace minkowski::cli
