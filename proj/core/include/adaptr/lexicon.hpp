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

#ifndef ADAPTR_LEXICON_HPP_
#define ADAPTR_LEXICON_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "adaptr/types.hpp"

namespace adaptr {

// Frequency-ranked single-token domain-term list.
//
// Invariants: every term is one token of length >= 2 with frequency >= 2 in
// the counting corpus; entries sorted by descending frequency, ties broken
// lexicographically; at most k entries.
struct TermLexicon {
  struct Entry {
    std::string term;
    std::size_t frequency = 0;

    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> terms;

  bool contains(const std::string& term) const;
  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
};

// One medication name per line, trimmed and lowercased. Alternative names
// stay separate entries; nothing is filtered at this stage.
std::vector<std::string> load_ontology(const std::string& path);

// Exact token-equality occurrence count.
std::size_t count_term(const std::string& term, const std::vector<std::string>& tokens);

// Applies the four filters: one-word names only, length >= 2, corpus
// frequency >= 2, top-k by frequency (ties lexicographic). Exact duplicate
// names collapse; no other alternate-name merging is attempted.
TermLexicon build_term_lexicon(const std::vector<std::string>& names,
                               const std::vector<std::vector<std::string>>& token_lists,
                               std::size_t k);

// Convenience for counting over reference utterances.
TermLexicon build_term_lexicon(const std::vector<std::string>& names,
                               const std::vector<Utterance>& reference_split, std::size_t k);

// JSONL {"term": str, "frequency": int}, in rank order.
void write_lexicon(const TermLexicon& lex, const std::string& path);
TermLexicon read_lexicon(const std::string& path);

}  // namespace adaptr

#endif  // ADAPTR_LEXICON_HPP_
