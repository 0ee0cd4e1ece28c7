// Copyright 2026 WDQA Authors. All Rights Reserved.
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

#ifndef WDQA_TEXT_H_
#define WDQA_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace wdqa::text {

// Decodes UTF-8 into code points. Invalid bytes are mapped to U+FFFD.
std::u32string ToU32(std::string_view s);

// Encodes code points back to UTF-8.
std::string ToU8(const std::u32string& s);

// Number of code points in a UTF-8 string.
std::size_t Length(std::string_view s);

// Code-point substring / prefix tests. For valid UTF-8 a byte-level match
// is always code-point aligned, so these reduce to byte operations.
bool Contains(std::string_view haystack, std::string_view needle);
bool StartsWith(std::string_view s, std::string_view prefix);

// Splits a string into tokens: runs of ASCII letters/digits form one token,
// any other non-space code point is a token by itself. This is the default
// segmenter for mixed Chinese/Latin question text; callers may substitute
// their own.
std::vector<std::string> DefaultTokenize(std::string_view s);

// One UTF-8 string per code point, spaces dropped. Used to turn a question
// into encoder tokens.
std::vector<std::string> Characters(std::string_view s);

}  // namespace wdqa::text

#endif  // WDQA_TEXT_H_
