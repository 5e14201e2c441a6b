// Copyright 2026 The XQA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XQA_LM_H_
#define XQA_LM_H_

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace xqa {

// Conditional fluency/relevance score for a candidate text given a context
// text, in (0, 1]. Deterministic: equal inputs give equal outputs.
// Implementations must be safe for concurrent calls.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual double score(const std::string& candidate,
                       const std::string& context) const = 0;
};

// Count-based n-gram model over the shared tokenizer's output.
//
// Conditional probabilities are maximum-likelihood estimates at the longest
// context suffix that was observed in training, falling back one token at a
// time down to the unigram level. The result is a proper distribution over
// vocab plus the reserved unknown token for every context. Scoring floors
// each per-token probability at kProbFloor so log-probabilities stay finite
// for events the training data never produced.
//
// Immutable after training; queries are pure and thread-safe.
class NgramModel {
 public:
  static constexpr const char* kUnknownToken = "<unk>";
  static constexpr const char* kStartToken = "<s>";
  static constexpr double kProbFloor = 1e-12;

  int order() const { return order_; }
  double backoff_factor() const { return backoff_factor_; }
  int min_count() const { return min_count_; }
  // Sorted predictable tokens, unknown token included.
  const std::set<std::string>& vocab() const { return vocab_; }

  // P(token | context), where context is an ordered token window (longer
  // histories are truncated to order-1). Out-of-vocabulary tokens on either
  // side map to the unknown token.
  double cond_prob(const std::string& token,
                   const std::vector<std::string>& context) const;

  std::string serialize() const;
  static NgramModel deserialize(const std::string& json_text);

 private:
  friend NgramModel train_ngram(const std::vector<std::string>&, int, double,
                                int);

  struct ContextCounts {
    std::map<std::string, long> next;
    long total = 0;
  };

  int order_ = 3;
  double backoff_factor_ = 0.4;
  int min_count_ = 1;
  std::set<std::string> vocab_;
  // Keyed by space-joined context ("" is the empty context).
  std::map<std::string, ContextCounts> counts_;
};

// Counts all k-grams for k <= order over the tokenized corpus lines, with
// order-1 start symbols padding each line. Tokens seen fewer than min_count
// times are replaced by the unknown token before counting (min_count 1 keeps
// every token, which the desk-scale fixtures rely on).
NgramModel train_ngram(const std::vector<std::string>& corpus_lines,
                       int order = 3, double backoff_factor = 0.4,
                       int min_count = 1);

// Sum over seq positions of log P(token | preceding order-1 tokens), with
// the context tokens prepended so the first tokens of seq condition on them.
double sequence_logprob(const NgramModel& model,
                        const std::vector<std::string>& seq,
                        const std::vector<std::string>& context);

// Per-token geometric-mean probability of the candidate in the context of
// the question/answer text: exp(sequence_logprob / token count), in (0, 1].
double lm_score(const NgramModel& model, const std::string& candidate,
                const std::string& qa_text);

// Scorer backed by a trained n-gram model.
class NgramScorer : public Scorer {
 public:
  explicit NgramScorer(NgramModel model) : model_(std::move(model)) {}

  double score(const std::string& candidate,
               const std::string& context) const override {
    return lm_score(model_, candidate, context);
  }

  const NgramModel& model() const { return model_; }

 private:
  NgramModel model_;
};

// Serializable map from a stable (context, candidate) hash to a score, so a
// run against an external scorer can be replayed byte-identically later.
class ScoreCache {
 public:
  static std::string key(const std::string& candidate,
                         const std::string& context);

  std::optional<double> lookup(const std::string& candidate,
                               const std::string& context) const;
  void store(const std::string& candidate, const std::string& context,
             double score);
  std::size_t size() const { return entries_.size(); }

  std::string serialize() const;
  static ScoreCache deserialize(const std::string& json_text);

 private:
  std::map<std::string, double> entries_;
};

// Scorer decorator that records its backing scorer's results in a cache and
// replays hits. With a null backing scorer it is replay-only and a cache
// miss raises LookupError.
class CachingScorer : public Scorer {
 public:
  CachingScorer(const Scorer* backing, ScoreCache cache)
      : backing_(backing), cache_(std::move(cache)) {}

  double score(const std::string& candidate,
               const std::string& context) const override;

  const ScoreCache& cache() const { return cache_; }

 private:
  const Scorer* backing_;
  mutable std::mutex mutex_;
  mutable ScoreCache cache_;
};

}  // namespace xqa

#endif  // XQA_LM_H_
