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

#include "xqa/lm.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "xqa/errors.h"
#include "xqa/text.h"

namespace xqa {

namespace {

using nlohmann::json;

std::string context_key(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end) {
  std::string key;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) key.push_back(' ');
    key.append(tokens[i]);
  }
  return key;
}

}  // namespace

NgramModel train_ngram(const std::vector<std::string>& corpus_lines, int order,
                       double backoff_factor, int min_count) {
  if (order < 1) throw ArgumentError("lm: order must be >= 1");
  if (!(backoff_factor > 0.0 && backoff_factor < 1.0)) {
    throw ArgumentError("lm: backoff factor must lie in (0, 1)");
  }
  if (min_count < 1) throw ArgumentError("lm: min_count must be >= 1");

  std::vector<std::vector<std::string>> sentences;
  std::unordered_map<std::string, long> freq;
  for (const std::string& line : corpus_lines) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    for (const std::string& t : toks) ++freq[t];
    sentences.push_back(std::move(toks));
  }
  if (sentences.empty()) {
    throw TrainingError("lm: empty corpus (no tokenizable lines)");
  }

  NgramModel model;
  model.order_ = order;
  model.backoff_factor_ = backoff_factor;
  model.min_count_ = min_count;
  model.vocab_.insert(NgramModel::kUnknownToken);

  for (std::vector<std::string>& sent : sentences) {
    for (std::string& t : sent) {
      if (freq[t] < min_count) t = NgramModel::kUnknownToken;
      model.vocab_.insert(t);
    }
    std::vector<std::string> stream(static_cast<std::size_t>(order) - 1,
                                    NgramModel::kStartToken);
    stream.insert(stream.end(), sent.begin(), sent.end());
    for (std::size_t i = static_cast<std::size_t>(order) - 1;
         i < stream.size(); ++i) {
      for (int k = 0; k < order; ++k) {
        auto& ctx = model.counts_[context_key(stream, i - k, i)];
        ++ctx.next[stream[i]];
        ++ctx.total;
      }
    }
  }
  return model;
}

double NgramModel::cond_prob(const std::string& token,
                             const std::vector<std::string>& context) const {
  const std::string& tok =
      vocab_.count(token) ? token : std::string(kUnknownToken);

  std::vector<std::string> window;
  const std::size_t max_ctx = static_cast<std::size_t>(order_) - 1;
  const std::size_t start =
      context.size() > max_ctx ? context.size() - max_ctx : 0;
  for (std::size_t i = start; i < context.size(); ++i) {
    const std::string& c = context[i];
    if (c == kStartToken || vocab_.count(c)) {
      window.push_back(c);
    } else {
      window.push_back(kUnknownToken);
    }
  }

  // Longest observed context suffix decides; shorter suffixes are the
  // fallback when a history was never seen in training. The empty context is
  // always observed for a trained model.
  for (std::size_t k = window.size();; --k) {
    auto it = counts_.find(context_key(window, window.size() - k, window.size()));
    if (it != counts_.end() && it->second.total > 0) {
      auto n = it->second.next.find(tok);
      const long c = n == it->second.next.end() ? 0 : n->second;
      return static_cast<double>(c) / static_cast<double>(it->second.total);
    }
    if (k == 0) break;
  }
  return 0.0;
}

double sequence_logprob(const NgramModel& model,
                        const std::vector<std::string>& seq,
                        const std::vector<std::string>& context) {
  if (seq.empty()) throw ArgumentError("lm: cannot score an empty sequence");

  std::vector<std::string> stream(static_cast<std::size_t>(model.order()) - 1,
                                  NgramModel::kStartToken);
  stream.insert(stream.end(), context.begin(), context.end());
  const std::size_t seq_begin = stream.size();
  stream.insert(stream.end(), seq.begin(), seq.end());

  double logprob = 0.0;
  for (std::size_t i = seq_begin; i < stream.size(); ++i) {
    const std::size_t ctx_len =
        std::min<std::size_t>(i, static_cast<std::size_t>(model.order()) - 1);
    std::vector<std::string> window(stream.begin() + (i - ctx_len),
                                    stream.begin() + i);
    const double p =
        std::max(model.cond_prob(stream[i], window), NgramModel::kProbFloor);
    logprob += std::log(p);
  }
  return logprob;
}

double lm_score(const NgramModel& model, const std::string& candidate,
                const std::string& qa_text) {
  const std::vector<std::string> seq = tokenize(candidate);
  if (seq.empty()) {
    throw ArgumentError("lm: candidate text has no tokens");
  }
  const std::vector<std::string> context = tokenize(qa_text);
  const double lp = sequence_logprob(model, seq, context);
  return std::exp(lp / static_cast<double>(seq.size()));
}

std::string NgramModel::serialize() const {
  json doc;
  doc["order"] = order_;
  doc["backoff_factor"] = backoff_factor_;
  doc["min_count"] = min_count_;
  doc["vocab"] = vocab_;
  json counts = json::object();
  for (const auto& [ctx, cc] : counts_) {
    json next = json::object();
    for (const auto& [tok, n] : cc.next) next[tok] = n;
    counts[ctx] = std::move(next);
  }
  doc["counts"] = std::move(counts);
  return doc.dump(2) + "\n";
}

std::string ScoreCache::key(const std::string& candidate,
                            const std::string& context) {
  // FNV-1a over "context \x1f candidate"; hex-encoded for the JSON map.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(context);
  h ^= 0x1f;
  h *= 1099511628211ull;
  mix(candidate);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::optional<double> ScoreCache::lookup(const std::string& candidate,
                                         const std::string& context) const {
  auto it = entries_.find(key(candidate, context));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ScoreCache::store(const std::string& candidate,
                       const std::string& context, double score) {
  entries_[key(candidate, context)] = score;
}

std::string ScoreCache::serialize() const {
  json doc = json::object();
  for (const auto& [k, v] : entries_) doc[k] = v;
  return doc.dump(2) + "\n";
}

ScoreCache ScoreCache::deserialize(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("score cache: malformed JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw SchemaError("score cache: top-level value must be an object");
  }
  ScoreCache cache;
  for (const auto& [k, v] : doc.items()) {
    if (!v.is_number()) {
      throw SchemaError("score cache: entry \"" + k + "\" is not a number");
    }
    cache.entries_[k] = v.get<double>();
  }
  return cache;
}

double CachingScorer::score(const std::string& candidate,
                            const std::string& context) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (std::optional<double> hit = cache_.lookup(candidate, context)) {
    return *hit;
  }
  if (backing_ == nullptr) {
    throw LookupError("score cache: no entry for key " +
                      ScoreCache::key(candidate, context) +
                      " and no backing scorer");
  }
  const double value = backing_->score(candidate, context);
  cache_.store(candidate, context, value);
  return value;
}

NgramModel NgramModel::deserialize(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("lm model: malformed JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
  for (const char* field : {"order", "backoff_factor", "min_count", "vocab",
                            "counts"}) {
    if (!doc.contains(field)) {
      throw SchemaError("lm model: missing field \"" + std::string(field) +
                        "\"");
    }
  }

  NgramModel model;
  model.order_ = doc["order"].get<int>();
  model.backoff_factor_ = doc["backoff_factor"].get<double>();
  model.min_count_ = doc["min_count"].get<int>();
  if (model.order_ < 1) throw ValidationError("lm model: order must be >= 1");
  for (const json& v : doc["vocab"]) {
    model.vocab_.insert(v.get<std::string>());
  }
  model.vocab_.insert(kUnknownToken);
  for (const auto& [ctx, next] : doc["counts"].items()) {
    ContextCounts cc;
    for (const auto& [tok, n] : next.items()) {
      const long count = n.get<long>();
      if (count <= 0) {
        throw ValidationError("lm model: counts must be positive integers");
      }
      cc.next[tok] = count;
      cc.total += count;
    }
    model.counts_[ctx] = std::move(cc);
  }
  if (model.counts_.find("") == model.counts_.end()) {
    throw ValidationError("lm model: missing unigram counts");
  }
  return model;
}

}  // namespace xqa
