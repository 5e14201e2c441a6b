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

#ifndef XQA_TEXT_H_
#define XQA_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace xqa {

// Lowercases, trims, and collapses runs of whitespace to single spaces.
std::string normalize_text(std::string_view text);

// Shared tokenizer for every module that looks at text: lowercase tokens
// split on runs of non-alphanumeric characters, empties removed.
std::vector<std::string> tokenize(std::string_view text);

std::size_t token_count(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace xqa

#endif  // XQA_TEXT_H_
