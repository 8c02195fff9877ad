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

#include "nocomments/url.h"

#include <cctype>

namespace nocomments {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool istarts_with(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (ascii_lower(s[i]) != prefix[i]) return false;
  }
  return true;
}

// Length of a leading "scheme://", or 0.
std::size_t scheme_length(std::string_view url) {
  const std::size_t sep = url.find("://");
  if (sep == std::string_view::npos || sep == 0) return 0;
  if (!std::isalpha(static_cast<unsigned char>(url[0]))) return 0;
  for (std::size_t i = 1; i < sep; ++i) {
    const auto c = static_cast<unsigned char>(url[i]);
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return 0;
  }
  return sep + 3;
}

}  // namespace

std::string normalize_url(std::string_view url) {
  url = trim(url);
  if (const std::size_t n = scheme_length(url); n > 0) {
    url.remove_prefix(n);
  } else if (url.starts_with("//")) {
    url.remove_prefix(2);
  }
  if (const std::size_t hash = url.find('#'); hash != std::string_view::npos) {
    url = url.substr(0, hash);
  }

  const std::size_t host_end = url.find_first_of("/?");
  std::string out;
  out.reserve(url.size());
  for (char c : url.substr(0, host_end)) out.push_back(ascii_lower(c));
  if (out.starts_with("www.")) out.erase(0, 4);
  if (host_end != std::string_view::npos) out.append(url.substr(host_end));
  while (!out.empty() && out.back() == '/') out.pop_back();
  return out;
}

bool is_absolute_web_url(std::string_view href) {
  href = trim(href);
  return istarts_with(href, "http://") || istarts_with(href, "https://") ||
         href.starts_with("//");
}

}  // namespace nocomments
