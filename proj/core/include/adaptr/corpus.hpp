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

#ifndef ADAPTR_CORPUS_HPP_
#define ADAPTR_CORPUS_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "adaptr/types.hpp"

namespace adaptr {

// Lowercase + trim. Returns "" when nothing remains.
std::string normalize_token(const std::string& raw);

// Whitespace split, then clitics ('s 're n't 'll 've 'd 'm) and punctuation
// marks become standalone tokens. Every output token is normalized and
// non-empty. Retokenizing the space-joined output is a fixed point.
std::vector<std::string> tokenize(const std::string& text);

// Words keyed by the utterance whose [start, end) span contains the word's
// temporal midpoint; earliest-starting utterance wins when spans overlap.
struct WordAssignment {
  std::unordered_map<std::string, std::vector<WordToken>> by_utt;  // utt_id -> words
  std::size_t assigned = 0;
  std::size_t dropped = 0;  // midpoint fell in no span
};

WordAssignment assign_words_to_utterances(const std::vector<WordToken>& words,
                                          const std::vector<Utterance>& utts);

struct AlignStats {
  std::size_t words_in = 0;
  std::size_t words_assigned = 0;
  std::size_t words_dropped = 0;
  std::size_t pairs = 0;
  std::size_t empty_source_pairs = 0;
};

// One pair per reference utterance, in conversation order. Utterance IDs are
// identical for every ASR variant aligned against the same reference, so the
// downstream evaluations see conserved keys. Unknown conv_id in asr_words is
// a hard error. With drop_empty_source, pairs whose span caught no ASR words
// are removed instead of kept empty.
std::vector<ParallelPair> build_parallel_corpus(
    const std::vector<Conversation>& reference,
    const std::map<std::string, std::vector<WordToken>>& asr_words,
    bool drop_empty_source = false, AlignStats* stats = nullptr);

// Seeded shuffle, then contiguous partition [train | valid | test] with
// floor-sized valid/test and the remainder in train. Throws on < 3 pairs.
CorpusSplits split_corpus(const std::vector<ParallelPair>& pairs, const SplitSpec& spec);

// Same partition arithmetic applied to whole conversations: every pair of a
// conversation lands in one split. Used by the diarizer to keep conversational
// context out of the held-out sets.
CorpusSplits split_corpus_by_conversation(const std::vector<ParallelPair>& pairs,
                                          const SplitSpec& spec);

// --- JSONL ingestion / serialization ---------------------------------------
//
// Reference, one utterance per line:
//   {"conv_id": str, "utt_id": str, "speaker": "Doctor"|"Patient",
//    "start": float_seconds, "end": float_seconds, "text": str}
// ASR words, one word per line:
//   {"conv_id": str, "word": str, "start": float, "end": float,
//    "confidence": float optional}
// Parallel corpus, one pair per line:
//   {"conv_id", "utt_id", "speaker", "source": [str], "target": [str]}
//
// Malformed lines raise SchemaError naming the file and line number.

std::vector<Conversation> ingest_reference(const std::string& path);
std::vector<Conversation> ingest_reference(std::istream& in, const std::string& name);

std::map<std::string, std::vector<WordToken>> ingest_asr_words(const std::string& path);
std::map<std::string, std::vector<WordToken>> ingest_asr_words(std::istream& in,
                                                               const std::string& name);

std::vector<ParallelPair> ingest_parallel_corpus(const std::string& path);

void write_reference(const std::vector<Conversation>& convs, const std::string& path);
void write_asr_words(const std::map<std::string, std::vector<WordToken>>& words,
                     const std::string& path);
void write_parallel_corpus(const std::vector<ParallelPair>& pairs, const std::string& path);

}  // namespace adaptr

#endif  // ADAPTR_CORPUS_HPP_
