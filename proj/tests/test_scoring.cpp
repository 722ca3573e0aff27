// tests/test_scoring.cpp

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

#include <doctest.h>

#include <random>

#include "minkowski/error.hpp"
#include "minkowski/scoring.hpp"
#include "oracles.hpp"

using namespace minkowski;
using doctest::Approx;

using Tokens = std::vector<std::string>;

TEST_CASE("align_and_score examples") {
  auto same = align_and_score(Tokens{"a", "b", "c"}, Tokens{"a", "b", "c"});
  CHECK(same.errors() == 0);
  CHECK(same.wer == 0.0);

  auto del = align_and_score(Tokens{"a", "b", "c"}, Tokens{"a", "c"});
  CHECK(del.deletions == 1);
  CHECK(del.substitutions == 0);
  CHECK(del.insertions == 0);
  CHECK(del.wer == Approx(1.0 / 3.0));

  auto ins = align_and_score(Tokens{"a", "b"}, Tokens{"x", "a", "b"});
  CHECK(ins.insertions == 1);
  CHECK(ins.errors() == 1);
  CHECK(ins.wer == 0.5);

  auto empty_hyp = align_and_score(Tokens{"a", "b"}, Tokens{});
  CHECK(empty_hyp.deletions == 2);
  CHECK(empty_hyp.wer == 1.0);

  auto long_hyp = align_and_score(Tokens{"a"}, Tokens{"x", "y", "z"});
  CHECK(long_hyp.substitutions == 1);
  CHECK(long_hyp.insertions == 2);
  CHECK(long_hyp.wer == 3.0);

  CHECK_THROWS_AS(align_and_score(Tokens{}, Tokens{"a"}), ValidationError);
}

TEST_CASE("alignment tie-break prefers substitution") {
  // "a b" vs "b c": one sub + one sub, or del + ins, both cost 2.
  auto r = align_and_score(Tokens{"a", "b"}, Tokens{"c", "d"});
  CHECK(r.substitutions == 2);
  CHECK(r.insertions == 0);
  CHECK(r.deletions == 0);
}

TEST_CASE("edit distance equals the reference Levenshtein DP") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    Tokens ref = testing::random_tokens(rng, 50, 6);
    if (ref.empty()) ref.push_back("w0");
    const Tokens hyp = testing::random_tokens(rng, 50, 6);
    const WerReport r = align_and_score(ref, hyp);
    CHECK(r.errors() == testing::levenshtein(ref, hyp));
    CHECK(r.substitutions + r.deletions <= r.ref_length);
    CHECK(r.ref_length - r.deletions + r.insertions == hyp.size());
  }
}

TEST_CASE("corpus_wer pools counts") {
  std::vector<std::pair<Tokens, Tokens>> identical{{{"a", "b"}, {"a", "b"}},
                                                   {{"c"}, {"c"}}};
  CHECK(corpus_wer(identical).wer == 0.0);

  std::vector<std::pair<Tokens, Tokens>> mixed{{{"a", "b"}, {"a", "x"}},
                                               {{"c", "d"}, {"c", "d"}}};
  CHECK(corpus_wer(mixed).wer == 0.25);

  std::mt19937_64 rng(77);
  std::vector<std::pair<Tokens, Tokens>> pairs;
  WerReport summed;
  for (int i = 0; i < 100; ++i) {
    Tokens ref = testing::random_tokens(rng, 20, 5);
    if (ref.empty()) ref.push_back("w1");
    Tokens hyp = testing::random_tokens(rng, 20, 5);
    const WerReport one = align_and_score(ref, hyp);
    summed.substitutions += one.substitutions;
    summed.deletions += one.deletions;
    summed.insertions += one.insertions;
    summed.ref_length += one.ref_length;
    pairs.emplace_back(std::move(ref), std::move(hyp));
  }
  const WerReport pooled = corpus_wer(pairs);
  CHECK(pooled.substitutions == summed.substitutions);
  CHECK(pooled.deletions == summed.deletions);
  CHECK(pooled.insertions == summed.insertions);
  CHECK(pooled.ref_length == summed.ref_length);

  // Order of pairs does not matter.
  std::reverse(pairs.begin(), pairs.end());
  CHECK(corpus_wer(pairs) == pooled);

  CHECK_THROWS_AS(corpus_wer(std::vector<std::pair<Tokens, Tokens>>{}),
                  ValidationError);
}

TEST_CASE("relative_reduction") {
  CHECK(relative_reduction(5.04, 4.78) == Approx(0.0515873).epsilon(1e-6));
  CHECK(relative_reduction(0.0, 0.0) == 0.0);
  CHECK(relative_reduction(0.2, 0.3) == Approx(-0.5));
}
