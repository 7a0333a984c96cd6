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

#include "adaptr/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "adaptr/error.hpp"
#include "adaptr/rng.hpp"

namespace adaptr {

using nlohmann::json;
using nlohmann::ordered_json;

std::string speaker_name(Speaker s) {
  return s == Speaker::kDoctor ? "Doctor" : "Patient";
}

Speaker parse_speaker(const std::string& s) {
  if (s == "Doctor") return Speaker::kDoctor;
  if (s == "Patient") return Speaker::kPatient;
  throw SchemaError("speaker must be \"Doctor\" or \"Patient\", got \"" + s + "\"");
}

void SplitSpec::validate() const {
  if (train_fraction <= 0.0 || valid_fraction <= 0.0 || test_fraction <= 0.0)
    throw ConfigError("split fractions must be positive");
  double sum = train_fraction + valid_fraction + test_fraction;
  if (std::abs(sum - 1.0) > 1e-9)
    throw ConfigError("split fractions must sum to 1, got " + std::to_string(sum));
}

std::string normalize_token(const std::string& raw) {
  std::size_t b = 0, e = raw.size();
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  };
  while (b < e && is_space(raw[b])) ++b;
  while (e > b && is_space(raw[e - 1])) --e;
  std::string out;
  out.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) {
    char c = raw[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

namespace {

bool is_punct_char(char c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ';':
    case ':':
    case '"':
    case '(':
    case ')':
    case '[':
    case ']':
    case '{':
    case '}':
      return true;
    default:
      return false;
  }
}

// Longest first so n't beats a hypothetical 't.
const char* const kClitics[] = {"n't", "'re", "'ll", "'ve", "'s", "'d", "'m"};

void split_chunk(const std::string& chunk, std::vector<std::string>& out) {
  if (chunk.empty()) return;
  if (is_punct_char(chunk.front())) {
    out.push_back(chunk.substr(0, 1));
    split_chunk(chunk.substr(1), out);
    return;
  }
  if (is_punct_char(chunk.back())) {
    split_chunk(chunk.substr(0, chunk.size() - 1), out);
    out.push_back(chunk.substr(chunk.size() - 1));
    return;
  }
  for (const char* c : kClitics) {
    std::size_t n = std::char_traits<char>::length(c);
    if (chunk.size() > n && chunk.ends_with(c)) {
      split_chunk(chunk.substr(0, chunk.size() - n), out);
      out.push_back(chunk.substr(chunk.size() - n));
      return;
    }
  }
  out.push_back(chunk);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream iss(text);
  std::string chunk;
  while (iss >> chunk) {
    split_chunk(normalize_token(chunk), out);
  }
  return out;
}

WordAssignment assign_words_to_utterances(const std::vector<WordToken>& words,
                                          const std::vector<Utterance>& utts) {
  // Utterance order by (start, position); first hit in this order is the
  // earliest-starting span containing the midpoint.
  std::vector<std::size_t> order(utts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return utts[a].start < utts[b].start; });

  std::vector<std::size_t> word_order(words.size());
  for (std::size_t i = 0; i < word_order.size(); ++i) word_order[i] = i;
  std::stable_sort(word_order.begin(), word_order.end(), [&](std::size_t a, std::size_t b) {
    return words[a].start < words[b].start;
  });

  WordAssignment res;
  for (const auto& u : utts) res.by_utt[u.utt_id];  // every utterance present
  for (std::size_t wi : word_order) {
    const WordToken& w = words[wi];
    const double mid = w.midpoint();
    bool placed = false;
    for (std::size_t oi : order) {
      const Utterance& u = utts[oi];
      if (u.start > mid) break;  // sorted by start; no later span can contain mid
      if (mid >= u.start && mid < u.end) {
        res.by_utt[u.utt_id].push_back(w);
        placed = true;
        break;
      }
    }
    if (placed)
      ++res.assigned;
    else
      ++res.dropped;
  }
  return res;
}

std::vector<ParallelPair> build_parallel_corpus(
    const std::vector<Conversation>& reference,
    const std::map<std::string, std::vector<WordToken>>& asr_words, bool drop_empty_source,
    AlignStats* stats) {
  std::set<std::string> known;
  for (const auto& c : reference) known.insert(c.conv_id);
  for (const auto& [cid, words] : asr_words) {
    if (!known.count(cid))
      throw SchemaError("ASR words reference unknown conversation \"" + cid + "\"");
  }

  AlignStats st;
  static const std::vector<WordToken> kNoWords;
  std::vector<ParallelPair> pairs;
  for (const auto& conv : reference) {
    auto it = asr_words.find(conv.conv_id);
    const std::vector<WordToken>& words = it == asr_words.end() ? kNoWords : it->second;
    st.words_in += words.size();
    WordAssignment assignment = assign_words_to_utterances(words, conv.utterances);
    st.words_assigned += assignment.assigned;
    st.words_dropped += assignment.dropped;
    for (const auto& utt : conv.utterances) {
      ParallelPair p;
      p.conv_id = conv.conv_id;
      p.utt_id = utt.utt_id;
      p.speaker = utt.speaker;
      p.target = utt.tokens;
      for (const WordToken& w : assignment.by_utt.at(utt.utt_id)) {
        for (auto& tok : tokenize(w.text)) p.source.push_back(std::move(tok));
      }
      if (p.source.empty()) {
        ++st.empty_source_pairs;
        if (drop_empty_source) continue;
      }
      pairs.push_back(std::move(p));
    }
  }
  st.pairs = pairs.size();
  if (stats) *stats = st;
  return pairs;
}

namespace {

// Shuffle indices 0..n-1 and cut at floor(valid*n) / floor(test*n).
struct Partition {
  std::vector<std::size_t> train, valid, test;
};

Partition partition_indices(std::size_t n, const SplitSpec& spec) {
  spec.validate();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(spec.seed);
  rng.shuffle(idx);

  const auto n_valid = static_cast<std::size_t>(std::floor(spec.valid_fraction * static_cast<double>(n)));
  const auto n_test = static_cast<std::size_t>(std::floor(spec.test_fraction * static_cast<double>(n)));
  const std::size_t n_train = n - n_valid - n_test;

  Partition p;
  p.train.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
  p.valid.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_train),
                 idx.begin() + static_cast<std::ptrdiff_t>(n_train + n_valid));
  p.test.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_train + n_valid), idx.end());
  return p;
}

}  // namespace

CorpusSplits split_corpus(const std::vector<ParallelPair>& pairs, const SplitSpec& spec) {
  if (pairs.size() < 3) throw SchemaError("split_corpus: need at least 3 pairs");
  Partition p = partition_indices(pairs.size(), spec);
  CorpusSplits out;
  for (std::size_t i : p.train) out.train.push_back(pairs[i]);
  for (std::size_t i : p.valid) out.valid.push_back(pairs[i]);
  for (std::size_t i : p.test) out.test.push_back(pairs[i]);
  return out;
}

CorpusSplits split_corpus_by_conversation(const std::vector<ParallelPair>& pairs,
                                          const SplitSpec& spec) {
  std::vector<std::string> convs;
  std::map<std::string, std::size_t> conv_index;
  for (const auto& p : pairs) {
    if (conv_index.emplace(p.conv_id, convs.size()).second) convs.push_back(p.conv_id);
  }
  if (convs.size() < 3) throw SchemaError("split_corpus_by_conversation: need at least 3 conversations");
  Partition part = partition_indices(convs.size(), spec);

  enum class Bucket { kTrain, kValid, kTest };
  std::map<std::string, Bucket> bucket;
  for (std::size_t i : part.train) bucket[convs[i]] = Bucket::kTrain;
  for (std::size_t i : part.valid) bucket[convs[i]] = Bucket::kValid;
  for (std::size_t i : part.test) bucket[convs[i]] = Bucket::kTest;

  CorpusSplits out;
  for (const auto& p : pairs) {
    switch (bucket.at(p.conv_id)) {
      case Bucket::kTrain: out.train.push_back(p); break;
      case Bucket::kValid: out.valid.push_back(p); break;
      case Bucket::kTest: out.test.push_back(p); break;
    }
  }
  return out;
}

// --- JSONL -------------------------------------------------------------------

namespace {

json parse_line(const std::string& line, const std::string& name, std::size_t lineno) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded())
    throw SchemaError(name + ":" + std::to_string(lineno) + ": invalid JSON");
  if (!j.is_object())
    throw SchemaError(name + ":" + std::to_string(lineno) + ": expected a JSON object");
  return j;
}

std::string loc(const std::string& name, std::size_t lineno) {
  return name + ":" + std::to_string(lineno) + ": ";
}

double require_number(const json& j, const char* key, const std::string& name,
                      std::size_t lineno) {
  if (!j.contains(key)) throw SchemaError(loc(name, lineno) + "missing field \"" + key + "\"");
  if (!j[key].is_number())
    throw SchemaError(loc(name, lineno) + "field \"" + key + "\" must be a number");
  return j[key].get<double>();
}

std::string require_string(const json& j, const char* key, const std::string& name,
                           std::size_t lineno) {
  if (!j.contains(key)) throw SchemaError(loc(name, lineno) + "missing field \"" + key + "\"");
  if (!j[key].is_string())
    throw SchemaError(loc(name, lineno) + "field \"" + key + "\" must be a string");
  return j[key].get<std::string>();
}

std::vector<std::string> require_string_array(const json& j, const char* key,
                                              const std::string& name, std::size_t lineno) {
  if (!j.contains(key)) throw SchemaError(loc(name, lineno) + "missing field \"" + key + "\"");
  if (!j[key].is_array())
    throw SchemaError(loc(name, lineno) + "field \"" + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string())
      throw SchemaError(loc(name, lineno) + "field \"" + key + "\" must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

}  // namespace

std::vector<Conversation> ingest_reference(const std::string& path) {
  auto in = open_input(path);
  return ingest_reference(in, path);
}

std::vector<Conversation> ingest_reference(std::istream& in, const std::string& name) {
  std::vector<Conversation> convs;
  std::map<std::string, std::size_t> conv_index;
  std::set<std::pair<std::string, std::string>> seen_ids;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = parse_line(line, name, lineno);

    Utterance u;
    u.conv_id = require_string(j, "conv_id", name, lineno);
    u.utt_id = require_string(j, "utt_id", name, lineno);
    try {
      u.speaker = parse_speaker(require_string(j, "speaker", name, lineno));
    } catch (const SchemaError& e) {
      throw SchemaError(loc(name, lineno) + e.what());
    }
    u.start = require_number(j, "start", name, lineno);
    u.end = require_number(j, "end", name, lineno);
    u.text = require_string(j, "text", name, lineno);
    u.tokens = tokenize(u.text);

    if (u.start < 0.0) throw SchemaError(loc(name, lineno) + "start must be non-negative");
    if (!(u.end > u.start)) throw SchemaError(loc(name, lineno) + "utterance end must exceed start");
    if (!seen_ids.emplace(u.conv_id, u.utt_id).second)
      throw SchemaError(loc(name, lineno) + "duplicate utterance id (" + u.conv_id + ", " +
                        u.utt_id + ")");

    auto [it, inserted] = conv_index.emplace(u.conv_id, convs.size());
    if (inserted) convs.push_back(Conversation{u.conv_id, {}});
    convs[it->second].utterances.push_back(std::move(u));
  }
  for (auto& c : convs) {
    std::stable_sort(c.utterances.begin(), c.utterances.end(),
                     [](const Utterance& a, const Utterance& b) { return a.start < b.start; });
  }
  return convs;
}

std::map<std::string, std::vector<WordToken>> ingest_asr_words(const std::string& path) {
  auto in = open_input(path);
  return ingest_asr_words(in, path);
}

std::map<std::string, std::vector<WordToken>> ingest_asr_words(std::istream& in,
                                                               const std::string& name) {
  std::map<std::string, std::vector<WordToken>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = parse_line(line, name, lineno);

    std::string conv_id = require_string(j, "conv_id", name, lineno);
    WordToken w;
    w.text = normalize_token(require_string(j, "word", name, lineno));
    w.start = require_number(j, "start", name, lineno);
    w.end = require_number(j, "end", name, lineno);
    if (j.contains("confidence")) {
      if (!j["confidence"].is_number())
        throw SchemaError(loc(name, lineno) + "field \"confidence\" must be a number");
      w.confidence = j["confidence"].get<double>();
      if (*w.confidence < 0.0 || *w.confidence > 1.0)
        throw SchemaError(loc(name, lineno) + "confidence must lie in [0, 1]");
    }
    if (w.text.empty()) throw SchemaError(loc(name, lineno) + "word is empty after normalization");
    if (w.start < 0.0) throw SchemaError(loc(name, lineno) + "start must be non-negative");
    if (w.end < w.start) throw SchemaError(loc(name, lineno) + "word end must be >= start");
    out[conv_id].push_back(std::move(w));
  }
  for (auto& [cid, words] : out) {
    std::stable_sort(words.begin(), words.end(),
                     [](const WordToken& a, const WordToken& b) { return a.start < b.start; });
  }
  return out;
}

std::vector<ParallelPair> ingest_parallel_corpus(const std::string& path) {
  auto in = open_input(path);
  std::vector<ParallelPair> pairs;
  std::set<std::pair<std::string, std::string>> seen_ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = parse_line(line, path, lineno);
    ParallelPair p;
    p.conv_id = require_string(j, "conv_id", path, lineno);
    p.utt_id = require_string(j, "utt_id", path, lineno);
    try {
      p.speaker = parse_speaker(require_string(j, "speaker", path, lineno));
    } catch (const SchemaError& e) {
      throw SchemaError(loc(path, lineno) + e.what());
    }
    p.source = require_string_array(j, "source", path, lineno);
    p.target = require_string_array(j, "target", path, lineno);
    if (!seen_ids.emplace(p.conv_id, p.utt_id).second)
      throw SchemaError(loc(path, lineno) + "duplicate pair id (" + p.conv_id + ", " + p.utt_id +
                        ")");
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void write_reference(const std::vector<Conversation>& convs, const std::string& path) {
  auto out = open_output(path);
  for (const auto& c : convs) {
    for (const auto& u : c.utterances) {
      ordered_json j;
      j["conv_id"] = u.conv_id;
      j["utt_id"] = u.utt_id;
      j["speaker"] = speaker_name(u.speaker);
      j["start"] = u.start;
      j["end"] = u.end;
      j["text"] = u.text;
      out << j.dump() << "\n";
    }
  }
}

void write_asr_words(const std::map<std::string, std::vector<WordToken>>& words,
                     const std::string& path) {
  auto out = open_output(path);
  for (const auto& [cid, ws] : words) {
    for (const auto& w : ws) {
      ordered_json j;
      j["conv_id"] = cid;
      j["word"] = w.text;
      j["start"] = w.start;
      j["end"] = w.end;
      if (w.confidence) j["confidence"] = *w.confidence;
      out << j.dump() << "\n";
    }
  }
}

void write_parallel_corpus(const std::vector<ParallelPair>& pairs, const std::string& path) {
  auto out = open_output(path);
  for (const auto& p : pairs) {
    ordered_json j;
    j["conv_id"] = p.conv_id;
    j["utt_id"] = p.utt_id;
    j["speaker"] = speaker_name(p.speaker);
    j["source"] = p.source;
    j["target"] = p.target;
    out << j.dump() << "\n";
  }
}

}  // namespace adaptr
