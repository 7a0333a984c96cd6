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

#include "adaptr/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "adaptr/error.hpp"

namespace adaptr {

std::vector<HypRef> to_hyp_ref(const std::vector<ParallelPair>& pairs) {
  std::vector<HypRef> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.source, p.target});
  return out;
}

std::size_t EditAlignment::count(EditOp op) const {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(), [&](const EditStep& s) { return s.op == op; }));
}

std::vector<std::string> EditAlignment::replay(const std::vector<std::string>& hyp,
                                               const std::vector<std::string>& ref) const {
  std::vector<std::string> out;
  for (const EditStep& s : ops) {
    switch (s.op) {
      case EditOp::kMatch:
        out.push_back(hyp[static_cast<std::size_t>(s.hyp_index)]);
        break;
      case EditOp::kSubstitute:
      case EditOp::kDelete:
        out.push_back(ref[static_cast<std::size_t>(s.ref_index)]);
        break;
      case EditOp::kInsert:
        break;  // spurious hyp token, dropped
    }
  }
  return out;
}

EditAlignment edit_align(const std::vector<std::string>& hyp,
                         const std::vector<std::string>& ref) {
  const std::size_t m = hyp.size(), n = ref.size();
  // dp[i][j]: distance between hyp[0..i) and ref[0..j).
  std::vector<std::vector<std::size_t>> dp(m + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t j = 0; j <= n; ++j) dp[0][j] = j;
  for (std::size_t i = 0; i <= m; ++i) dp[i][0] = i;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t diag = dp[i - 1][j - 1] + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      std::size_t del = dp[i][j - 1] + 1;
      std::size_t ins = dp[i - 1][j] + 1;
      dp[i][j] = std::min({diag, del, ins});
    }
  }

  EditAlignment a;
  a.distance = dp[m][n];
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && hyp[i - 1] == ref[j - 1] && dp[i - 1][j - 1] == dp[i][j]) {
      a.ops.push_back({EditOp::kMatch, static_cast<std::ptrdiff_t>(i - 1),
                       static_cast<std::ptrdiff_t>(j - 1)});
      --i, --j;
    } else if (i > 0 && j > 0 && dp[i - 1][j - 1] + 1 == dp[i][j]) {
      a.ops.push_back({EditOp::kSubstitute, static_cast<std::ptrdiff_t>(i - 1),
                       static_cast<std::ptrdiff_t>(j - 1)});
      --i, --j;
    } else if (j > 0 && dp[i][j - 1] + 1 == dp[i][j]) {
      a.ops.push_back({EditOp::kDelete, -1, static_cast<std::ptrdiff_t>(j - 1)});
      --j;
    } else {
      a.ops.push_back({EditOp::kInsert, static_cast<std::ptrdiff_t>(i - 1), -1});
      --i;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

double corpus_wer(const std::vector<HypRef>& pairs) {
  std::size_t distance = 0, ref_len = 0;
  for (const auto& p : pairs) {
    distance += edit_align(p.hyp, p.ref).distance;
    ref_len += p.ref.size();
  }
  if (ref_len == 0) throw SchemaError("corpus_wer: corpus has no reference tokens");
  return static_cast<double>(distance) / static_cast<double>(ref_len);
}

namespace {

constexpr int kBleuOrder = 4;

// Clipped n-gram matches and totals for one pair, accumulated per order.
void accumulate_ngrams(const std::vector<std::string>& hyp, const std::vector<std::string>& ref,
                       int n, std::size_t& matches, std::size_t& total) {
  if (hyp.size() < static_cast<std::size_t>(n)) return;
  std::map<std::vector<std::string>, std::size_t> hyp_counts, ref_counts;
  for (std::size_t i = 0; i + n <= hyp.size(); ++i) {
    ++hyp_counts[std::vector<std::string>(hyp.begin() + static_cast<std::ptrdiff_t>(i),
                                          hyp.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  for (std::size_t i = 0; i + n <= ref.size(); ++i) {
    ++ref_counts[std::vector<std::string>(ref.begin() + static_cast<std::ptrdiff_t>(i),
                                          ref.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  for (const auto& [gram, count] : hyp_counts) {
    auto it = ref_counts.find(gram);
    std::size_t clip = it == ref_counts.end() ? 0 : it->second;
    matches += std::min(count, clip);
    total += count;
  }
}

}  // namespace

double corpus_bleu(const std::vector<HypRef>& pairs) {
  if (pairs.empty()) throw SchemaError("corpus_bleu: empty corpus");

  std::size_t matches[kBleuOrder] = {0, 0, 0, 0};
  std::size_t totals[kBleuOrder] = {0, 0, 0, 0};
  std::size_t hyp_len = 0, ref_len = 0;
  for (const auto& p : pairs) {
    hyp_len += p.hyp.size();
    ref_len += p.ref.size();
    for (int n = 1; n <= kBleuOrder; ++n) {
      accumulate_ngrams(p.hyp, p.ref, n, matches[n - 1], totals[n - 1]);
    }
  }
  if (hyp_len == 0) return ref_len == 0 ? 1.0 : 0.0;

  double log_sum = 0.0;
  for (int n = 1; n <= kBleuOrder; ++n) {
    double p;
    if (n == 1) {
      p = static_cast<double>(matches[0]) / static_cast<double>(totals[0]);
      if (p == 0.0) return 0.0;
    } else {
      p = (static_cast<double>(matches[n - 1]) + 1.0) /
          (static_cast<double>(totals[n - 1]) + 1.0);
    }
    log_sum += std::log(p);
  }
  double bp = hyp_len < ref_len
                  ? std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len))
                  : 1.0;
  return bp * std::exp(log_sum / kBleuOrder);
}

PRF PRF::from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  PRF r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.precision = tp + fp == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  r.recall = tp + fn == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  r.f1 = r.precision + r.recall == 0.0
             ? 0.0
             : 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

TermPrfResult term_prf(const std::vector<HypRef>& pairs, const TermLexicon& lexicon) {
  if (lexicon.empty()) throw ConfigError("term_prf: lexicon is empty");

  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<std::string, Counts> counts;
  for (const auto& e : lexicon.terms) counts[e.term];

  for (const auto& p : pairs) {
    for (auto& [term, c] : counts) {
      std::size_t in_hyp = count_term(term, p.hyp);
      std::size_t in_ref = count_term(term, p.ref);
      c.tp += std::min(in_hyp, in_ref);
      c.fp += in_hyp > in_ref ? in_hyp - in_ref : 0;
      c.fn += in_ref > in_hyp ? in_ref - in_hyp : 0;
    }
  }

  TermPrfResult res;
  std::size_t tp = 0, fp = 0, fn = 0;
  double psum = 0.0, rsum = 0.0, fsum = 0.0;
  for (const auto& [term, c] : counts) {
    tp += c.tp;
    fp += c.fp;
    fn += c.fn;
    if (c.tp + c.fp + c.fn == 0) continue;  // vacuous: term absent everywhere
    PRF prf = PRF::from_counts(c.tp, c.fp, c.fn);
    psum += prf.precision;
    rsum += prf.recall;
    fsum += prf.f1;
    res.per_term.emplace(term, prf);
  }
  res.micro = PRF::from_counts(tp, fp, fn);
  if (!res.per_term.empty()) {
    const double n = static_cast<double>(res.per_term.size());
    res.macro_precision = psum / n;
    res.macro_recall = rsum / n;
    res.macro_f1 = fsum / n;
  }
  return res;
}

}  // namespace adaptr
