// core/src/dataio.cpp

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

#include "minkowski/dataio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "minkowski/error.hpp"

namespace minkowski {
namespace {

using nlohmann::json;

std::vector<std::string> split_whitespace(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

bool parse_real(const std::string& token, double& value) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end && std::isfinite(value);
}

bool parse_count(const std::string& token, std::size_t& value) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void bad_document(const std::string& source,
                               const std::string& detail) {
  throw ParseError(ParseErrorKind::kBadDocument, source, 0, detail);
}

void reject_unknown_fields(const json& doc, const std::set<std::string>& known,
                           const std::string& source) {
  for (const auto& item : doc.items()) {
    if (!known.count(item.key())) {
      bad_document(source, "unknown field \"" + item.key() + "\"");
    }
  }
}

const json& require_field(const json& doc, const char* key,
                          const std::string& source) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    bad_document(source, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

json concentration_to_json(double value) {
  if (std::isinf(value)) return "inf";
  return value;
}

double concentration_from_json(const json& value, const std::string& source) {
  if (value.is_string() && value.get<std::string>() == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  if (!value.is_number()) bad_document(source, "concentration must be a number or \"inf\"");
  return value.get<double>();
}

json options_to_json(const CorpusOptions& options) {
  return json{{"num_utterances", options.num_utterances},
              {"min_frames", options.min_frames},
              {"max_frames", options.max_frames},
              {"num_classes", options.num_classes},
              {"concentration", concentration_to_json(options.noise.concentration)},
              {"confusion_rate", options.noise.confusion_rate},
              {"seed", options.noise.seed}};
}

CorpusOptions options_from_json(const json& doc, const std::string& source) {
  if (!doc.is_object()) bad_document(source, "generator must be an object");
  reject_unknown_fields(doc,
                        {"num_utterances", "min_frames", "max_frames",
                         "num_classes", "concentration", "confusion_rate",
                         "seed"},
                        source);
  CorpusOptions options;
  try {
    options.num_utterances =
        require_field(doc, "num_utterances", source).get<std::size_t>();
    options.min_frames = require_field(doc, "min_frames", source).get<std::size_t>();
    options.max_frames = require_field(doc, "max_frames", source).get<std::size_t>();
    if (doc.contains("num_classes")) {
      options.num_classes = doc.at("num_classes").get<std::size_t>();
    }
    options.noise.concentration = concentration_from_json(
        require_field(doc, "concentration", source), source);
    options.noise.confusion_rate =
        require_field(doc, "confusion_rate", source).get<double>();
    options.noise.seed = require_field(doc, "seed", source).get<std::uint64_t>();
  } catch (const json::exception& e) {
    bad_document(source, e.what());
  }
  options.validate();
  return options;
}

}  // namespace

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return contents.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

PosteriorMatrix read_posteriors(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(ParseErrorKind::kMalformedHeader, source, 1,
                     "missing \"frames classes\" header");
  }
  const auto header = split_whitespace(line);
  std::size_t frames = 0;
  std::size_t classes = 0;
  if (header.size() != 2 || !parse_count(header[0], frames) ||
      !parse_count(header[1], classes) || frames < 1 || classes < 2) {
    throw ParseError(ParseErrorKind::kMalformedHeader, source, 1,
                     "expected \"<frames> <classes>\" with frames >= 1 and "
                     "classes >= 2, got \"" + line + "\"");
  }

  std::vector<double> values;
  values.reserve(frames * classes);
  std::size_t line_no = 1;
  for (std::size_t t = 0; t < frames; ++t) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw ParseError(ParseErrorKind::kRowLengthMismatch, source, line_no,
                       "expected " + std::to_string(frames) +
                           " rows, file ends after " + std::to_string(t));
    }
    const auto tokens = split_whitespace(line);
    if (tokens.size() != classes) {
      throw ParseError(ParseErrorKind::kRowLengthMismatch, source, line_no,
                       "expected " + std::to_string(classes) +
                           " values, got " + std::to_string(tokens.size()));
    }
    double sum = 0.0;
    for (const auto& token : tokens) {
      double v = 0.0;
      if (!parse_real(token, v)) {
        throw ParseError(ParseErrorKind::kNonNumericToken, source, line_no,
                         "\"" + token + "\"");
      }
      if (v < 0.0 || v > 1.0) {
        throw ParseError(ParseErrorKind::kValueOutOfRange, source, line_no,
                         token + " is not a probability");
      }
      sum += v;
      values.push_back(v);
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw ParseError(ParseErrorKind::kRowSumViolation, source, line_no,
                       "row sums to " + format_real(sum));
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_whitespace(line).empty()) {
      throw ParseError(ParseErrorKind::kRowLengthMismatch, source, line_no,
                       "more rows than the header's " +
                           std::to_string(frames));
    }
  }
  return PosteriorMatrix(frames, classes, std::move(values));
}

void write_posteriors(std::ostream& out, const PosteriorMatrix& matrix) {
  out << matrix.frames() << ' ' << matrix.classes() << '\n';
  for (std::size_t t = 0; t < matrix.frames(); ++t) {
    for (std::size_t c = 0; c < matrix.classes(); ++c) {
      if (c > 0) out << ' ';
      out << format_real(matrix(t, c));
    }
    out << '\n';
  }
}

PosteriorMatrix load_posteriors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return read_posteriors(in, path.string());
}

void save_posteriors(const PosteriorMatrix& matrix,
                     const std::filesystem::path& path) {
  std::ostringstream out;
  write_posteriors(out, matrix);
  write_text_file(path, out.str());
}

HmmModel parse_hmm(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_document(source, e.what());
  }
  if (!doc.is_object()) bad_document(source, "top level must be an object");
  reject_unknown_fields(
      doc, {"num_states", "initial", "transitions", "labels", "state_to_class"},
      source);

  std::size_t n = 0;
  std::vector<double> initial;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  std::vector<std::size_t> state_to_class;
  try {
    n = require_field(doc, "num_states", source).get<std::size_t>();
    initial = require_field(doc, "initial", source).get<std::vector<double>>();
    rows = require_field(doc, "transitions", source)
               .get<std::vector<std::vector<double>>>();
    labels = require_field(doc, "labels", source).get<std::vector<std::string>>();
    state_to_class = require_field(doc, "state_to_class", source)
                         .get<std::vector<std::size_t>>();
  } catch (const json::exception& e) {
    bad_document(source, e.what());
  }

  if (initial.size() != n || rows.size() != n) {
    bad_document(source, "num_states is " + std::to_string(n) +
                             " but initial has " +
                             std::to_string(initial.size()) +
                             " entries and transitions " +
                             std::to_string(rows.size()) + " rows");
  }
  std::vector<double> transitions;
  transitions.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      bad_document(source, "transition row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) +
                               " entries, expected " + std::to_string(n));
    }
    transitions.insert(transitions.end(), rows[i].begin(), rows[i].end());
  }
  try {
    return HmmModel::from_probabilities(initial, transitions, std::move(labels),
                                        std::move(state_to_class));
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    bad_document(source, e.what());
  }
}

std::string serialize_hmm(const HmmModel& hmm) {
  auto linear = [](double lp) { return lp <= kLogFloor ? 0.0 : std::exp(lp); };
  const std::size_t n = hmm.num_states();
  json initial = json::array();
  for (double lp : hmm.log_initial()) initial.push_back(linear(lp));
  json transitions = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(linear(hmm.log_transition(i, j)));
    }
    transitions.push_back(std::move(row));
  }
  json doc{{"num_states", n},
           {"initial", std::move(initial)},
           {"transitions", std::move(transitions)},
           {"labels", hmm.state_labels()},
           {"state_to_class", hmm.state_to_class()}};
  return doc.dump(2) + "\n";
}

HmmModel load_hmm(const std::filesystem::path& path) {
  return parse_hmm(read_text_file(path), path.string());
}

void save_hmm(const HmmModel& hmm, const std::filesystem::path& path) {
  write_text_file(path, serialize_hmm(hmm));
}

TokenSequence load_tokens(const std::filesystem::path& path) {
  return split_whitespace(read_text_file(path));
}

void save_tokens(const TokenSequence& tokens,
                 const std::filesystem::path& path) {
  std::string text;
  for (const auto& token : tokens) {
    text += token;
    text += '\n';
  }
  write_text_file(path, text);
}

std::vector<double> load_priors(const std::filesystem::path& path) {
  const std::string source = path.string();
  std::vector<double> priors;
  for (const auto& token : split_whitespace(read_text_file(path))) {
    double v = 0.0;
    if (!parse_real(token, v)) {
      throw ParseError(ParseErrorKind::kNonNumericToken, source, 0,
                       "\"" + token + "\"");
    }
    if (!(v > 0.0)) {
      throw ParseError(ParseErrorKind::kValueOutOfRange, source, 0,
                       "prior " + token + " must be positive");
    }
    priors.push_back(v);
  }
  if (priors.empty()) bad_document(source, "no priors found");
  return priors;
}

CorpusManifest write_corpus(const std::vector<Utterance>& corpus,
                            const std::filesystem::path& dir,
                            const std::optional<CorpusOptions>& generator) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  CorpusManifest manifest;
  manifest.generator = generator;
  json entries = json::array();
  for (const auto& utt : corpus) {
    ManifestEntry entry{utt.id, utt.id + ".post", utt.id + ".ref"};
    save_posteriors(utt.posteriors, dir / entry.posteriors);
    save_tokens(utt.reference, dir / entry.reference);
    entries.push_back(json{{"id", entry.id},
                           {"posteriors", entry.posteriors.string()},
                           {"reference", entry.reference.string()}});
    manifest.utterances.push_back(std::move(entry));
  }
  json doc{{"utterances", std::move(entries)}};
  if (generator) doc["generator"] = options_to_json(*generator);
  write_text_file(dir / "manifest.json", doc.dump(2) + "\n");
  for (auto& entry : manifest.utterances) {
    entry.posteriors = dir / entry.posteriors;
    entry.reference = dir / entry.reference;
  }
  return manifest;
}

CorpusManifest load_manifest(const std::filesystem::path& manifest_path) {
  const std::string source = manifest_path.string();
  json doc;
  try {
    doc = json::parse(read_text_file(manifest_path));
  } catch (const json::parse_error& e) {
    bad_document(source, e.what());
  }
  if (!doc.is_object()) bad_document(source, "top level must be an object");
  reject_unknown_fields(doc, {"utterances", "generator"}, source);

  const auto base = manifest_path.parent_path();
  CorpusManifest manifest;
  std::set<std::string> seen;
  const json& entries = require_field(doc, "utterances", source);
  if (!entries.is_array() || entries.empty()) {
    bad_document(source, "\"utterances\" must be a non-empty array");
  }
  for (const auto& item : entries) {
    if (!item.is_object()) bad_document(source, "utterance entries must be objects");
    reject_unknown_fields(item, {"id", "posteriors", "reference"}, source);
    ManifestEntry entry;
    try {
      entry.id = require_field(item, "id", source).get<std::string>();
      entry.posteriors =
          base / require_field(item, "posteriors", source).get<std::string>();
      entry.reference =
          base / require_field(item, "reference", source).get<std::string>();
    } catch (const json::exception& e) {
      bad_document(source, e.what());
    }
    if (!seen.insert(entry.id).second) {
      bad_document(source, "duplicate utterance id \"" + entry.id + "\"");
    }
    for (const auto& path : {entry.posteriors, entry.reference}) {
      if (!std::filesystem::exists(path)) {
        throw IoError(source + ": utterance \"" + entry.id +
                      "\" references missing file " + path.string());
      }
    }
    manifest.utterances.push_back(std::move(entry));
  }
  if (doc.contains("generator")) {
    manifest.generator = options_from_json(doc.at("generator"), source);
  }
  return manifest;
}

std::vector<Utterance> load_corpus(const CorpusManifest& manifest) {
  std::vector<Utterance> corpus;
  corpus.reserve(manifest.utterances.size());
  for (const auto& entry : manifest.utterances) {
    TokenSequence reference = load_tokens(entry.reference);
    if (reference.empty()) {
      throw ValidationError("utterance \"" + entry.id +
                            "\" has an empty reference");
    }
    corpus.push_back(
        Utterance{entry.id, load_posteriors(entry.posteriors), std::move(reference)});
  }
  return corpus;
}

}  // namespace minkowski
