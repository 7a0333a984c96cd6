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

#ifndef ADAPTR_METRICS_HPP_
#define ADAPTR_METRICS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "adaptr/lexicon.hpp"
#include "adaptr/types.hpp"

namespace adaptr {

// A hypothesis/reference token pair; the unit all corpus metrics consume.
struct HypRef {
  std::vector<std::string> hyp;
  std::vector<std::string> ref;
};

// hyp = source, ref = target.
std::vector<HypRef> to_hyp_ref(const std::vector<ParallelPair>& pairs);

enum class EditOp {
  kMatch,
  kSubstitute,
  kInsert,  // spurious hypothesis token (absent from reference)
  kDelete,  // reference token missing from hypothesis
};

struct EditStep {
  EditOp op;
  // Indices into hyp/ref; -1 on the side the op does not touch.
  std::ptrdiff_t hyp_index = -1;
  std::ptrdiff_t ref_index = -1;

  bool operator==(const EditStep&) const = default;
};

// Minimal unit-cost alignment. distance = substitutions + insertions +
// deletions; replaying ops over hyp reproduces ref.
struct EditAlignment {
  std::vector<EditStep> ops;
  std::size_t distance = 0;

  std::size_t count(EditOp op) const;
  // Applies the ops to hyp, yielding ref.
  std::vector<std::string> replay(const std::vector<std::string>& hyp,
                                  const std::vector<std::string>& ref) const;
};

// Backtrace ties resolve Match > Substitute > Delete > Insert so the op
// sequence is deterministic.
EditAlignment edit_align(const std::vector<std::string>& hyp,
                         const std::vector<std::string>& ref);

// Micro-averaged WER: total edit distance / total reference length.
// Throws when the corpus has no reference tokens. May exceed 1.
double corpus_wer(const std::vector<HypRef>& pairs);

// Corpus-level BLEU-4 with add-one smoothing on the n >= 2 precisions and
// brevity penalty exp(1 - ref_len/hyp_len) for short hypotheses.
double corpus_bleu(const std::vector<HypRef>& pairs);

struct PRF {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  // precision/recall default to 1 when their denominator is empty; f1 is the
  // harmonic mean, 0 when p + r = 0.
  static PRF from_counts(std::size_t tp, std::size_t fp, std::size_t fn);
};

struct TermPrfResult {
  PRF micro;  // counts summed over all terms
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  // Terms with tp + fp + fn > 0 only; vacuous terms are omitted.
  std::map<std::string, PRF> per_term;
};

// Occurrence-count matching per pair: tp += min(hyp count, ref count),
// surplus hypothesis occurrences are fp, deficits are fn.
TermPrfResult term_prf(const std::vector<HypRef>& pairs, const TermLexicon& lexicon);

}  // namespace adaptr

#endif  // ADAPTR_METRICS_HPP_
