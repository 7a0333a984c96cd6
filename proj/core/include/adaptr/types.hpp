// Copyright 2026 The adaptr authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAPTR_TYPES_HPP_
#define ADAPTR_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adaptr {

enum class Speaker { kDoctor, kPatient };

std::string speaker_name(Speaker s);
Speaker parse_speaker(const std::string& s);  // throws SchemaError

// One recognized word with its time span, as emitted by an ASR system.
struct WordToken {
  std::string text;  // normalized
  double start = 0.0;
  double end = 0.0;
  std::optional<double> confidence;

  double midpoint() const { return 0.5 * (start + end); }

  bool operator==(const WordToken&) const = default;
};

// One reference utterance: a speaker turn span with its transcript.
struct Utterance {
  std::string conv_id;
  std::string utt_id;
  Speaker speaker = Speaker::kDoctor;
  double start = 0.0;
  double end = 0.0;
  std::string text;                 // raw transcript
  std::vector<std::string> tokens;  // tokenized transcript

  bool operator==(const Utterance&) const = default;
};

struct Conversation {
  std::string conv_id;
  std::vector<Utterance> utterances;  // ordered by start time

  bool operator==(const Conversation&) const = default;
};

// Aligned (ASR hypothesis, reference) token sequences for one utterance.
// source may be empty when the recognizer produced no words in the span.
struct ParallelPair {
  std::string conv_id;
  std::string utt_id;
  Speaker speaker = Speaker::kDoctor;
  std::vector<std::string> source;  // hypothesis tokens
  std::vector<std::string> target;  // reference tokens

  bool operator==(const ParallelPair&) const = default;
};

struct SplitSpec {
  double train_fraction = 0.8;
  double valid_fraction = 0.1;
  double test_fraction = 0.1;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

struct CorpusSplits {
  std::vector<ParallelPair> train;
  std::vector<ParallelPair> valid;
  std::vector<ParallelPair> test;
};

}  // namespace adaptr

#endif  // ADAPTR_TYPES_HPP_
