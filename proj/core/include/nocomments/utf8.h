// Copyright 2026 The nocomments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOCOMMENTS_UTF8_H_
#define NOCOMMENTS_UTF8_H_

#include <string>
#include <string_view>

namespace nocomments::utf8 {

inline constexpr char32_t kReplacement = U'\uFFFD';

// Decodes UTF-8, replacing each maximal invalid subsequence with U+FFFD.
std::u32string decode_lossy(std::string_view bytes);

void append(std::u32string_view text, std::string& out);
void append(char32_t code_point, std::string& out);
std::string encode(std::u32string_view text);

// Letters of the Latin, Greek and Cyrillic blocks plus the CJK/Hangul/kana
// ranges. Digits and punctuation are not letters.
bool is_letter(char32_t c);
bool is_digit(char32_t c);

// Simple case mapping for Latin-1, Latin Extended-A, Greek and Cyrillic.
char32_t to_lower(char32_t c);
std::string to_lower(std::string_view utf8_text);

}  // namespace nocomments::utf8

#endif  // NOCOMMENTS_UTF8_H_
