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

#include "adaptr/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "adaptr/corpus.hpp"
#include "adaptr/error.hpp"

namespace adaptr {

bool TermLexicon::contains(const std::string& term) const {
  return std::any_of(terms.begin(), terms.end(),
                     [&](const Entry& e) { return e.term == term; });
}

std::vector<std::string> load_ontology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ontology file " + path);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    std::string name = normalize_token(line);
    if (!name.empty()) names.push_back(std::move(name));
  }
  return names;
}

std::size_t count_term(const std::string& term, const std::vector<std::string>& tokens) {
  return static_cast<std::size_t>(std::count(tokens.begin(), tokens.end(), term));
}

TermLexicon build_term_lexicon(const std::vector<std::string>& names,
                               const std::vector<std::vector<std::string>>& token_lists,
                               std::size_t k) {
  if (k < 1) throw ConfigError("lexicon size cap k must be >= 1");

  // One-word names of length >= 2; exact duplicates collapse.
  std::set<std::string> candidates;
  for (const auto& name : names) {
    if (name.size() < 2) continue;
    if (name.find(' ') != std::string::npos || name.find('\t') != std::string::npos) continue;
    candidates.insert(name);
  }

  std::map<std::string, std::size_t> freq;
  for (const auto& tokens : token_lists) {
    for (const auto& tok : tokens) {
      if (candidates.count(tok)) ++freq[tok];
    }
  }

  std::vector<TermLexicon::Entry> entries;
  for (const auto& [term, count] : freq) {
    if (count >= 2) entries.push_back({term, count});
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.term < b.term;
  });
  if (entries.size() > k) entries.resize(k);

  return TermLexicon{std::move(entries)};
}

TermLexicon build_term_lexicon(const std::vector<std::string>& names,
                               const std::vector<Utterance>& reference_split, std::size_t k) {
  std::vector<std::vector<std::string>> token_lists;
  token_lists.reserve(reference_split.size());
  for (const auto& u : reference_split) token_lists.push_back(u.tokens);
  return build_term_lexicon(names, token_lists, k);
}

void write_lexicon(const TermLexicon& lex, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write lexicon file " + path);
  for (const auto& e : lex.terms) {
    nlohmann::ordered_json j;
    j["term"] = e.term;
    j["frequency"] = e.frequency;
    out << j.dump() << "\n";
  }
}

TermLexicon read_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file " + path);
  TermLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("term") || !j.contains("frequency"))
      throw SchemaError(path + ":" + std::to_string(lineno) +
                        ": expected {\"term\", \"frequency\"}");
    lex.terms.push_back({j["term"].get<std::string>(), j["frequency"].get<std::size_t>()});
  }
  return lex;
}

}  // namespace adaptr
