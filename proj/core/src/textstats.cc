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

#include "nocomments/textstats.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "nocomments/csv.h"
#include "nocomments/error.h"
#include "nocomments/outputs.h"
#include "nocomments/utf8.h"

namespace nocomments {

namespace internal {
extern const std::string_view kDefaultFrenchStopwords;
}  // namespace internal

namespace {

// Names of U+00A0..U+00FF, in order.
constexpr std::array<std::string_view, 96> kLatin1Names = {
    "nbsp",   "iexcl",  "cent",   "pound",  "curren", "yen",    "brvbar",
    "sect",   "uml",    "copy",   "ordf",   "laquo",  "not",    "shy",
    "reg",    "macr",   "deg",    "plusmn", "sup2",   "sup3",   "acute",
    "micro",  "para",   "middot", "cedil",  "sup1",   "ordm",   "raquo",
    "frac14", "frac12", "frac34", "iquest", "Agrave", "Aacute", "Acirc",
    "Atilde", "Auml",   "Aring",  "AElig",  "Ccedil", "Egrave", "Eacute",
    "Ecirc",  "Euml",   "Igrave", "Iacute", "Icirc",  "Iuml",   "ETH",
    "Ntilde", "Ograve", "Oacute", "Ocirc",  "Otilde", "Ouml",   "times",
    "Oslash", "Ugrave", "Uacute", "Ucirc",  "Uuml",   "Yacute", "THORN",
    "szlig",  "agrave", "aacute", "acirc",  "atilde", "auml",   "aring",
    "aelig",  "ccedil", "egrave", "eacute", "ecirc",  "euml",   "igrave",
    "iacute", "icirc",  "iuml",   "eth",    "ntilde", "ograve", "oacute",
    "ocirc",  "otilde", "ouml",   "divide", "oslash", "ugrave", "uacute",
    "ucirc",  "uuml",   "yacute", "thorn",  "yuml",
};

const std::unordered_map<std::string_view, char32_t>& named_entities() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string_view, char32_t>{
        {"amp", U'&'},       {"lt", U'<'},        {"gt", U'>'},
        {"quot", U'"'},      {"apos", U'\''},     {"OElig", 0x152},
        {"oelig", 0x153},    {"Scaron", 0x160},   {"scaron", 0x161},
        {"Yuml", 0x178},     {"ndash", 0x2013},   {"mdash", 0x2014},
        {"lsquo", 0x2018},   {"rsquo", 0x2019},   {"sbquo", 0x201A},
        {"ldquo", 0x201C},   {"rdquo", 0x201D},   {"bdquo", 0x201E},
        {"hellip", 0x2026},  {"euro", 0x20AC},    {"bull", 0x2022},
        {"trade", 0x2122},   {"thinsp", 0x2009},  {"ensp", 0x2002},
        {"emsp", 0x2003},
    };
    for (std::size_t i = 0; i < kLatin1Names.size(); ++i) {
      t->emplace(kLatin1Names[i], static_cast<char32_t>(0xA0 + i));
    }
    return t;
  }();
  return *table;
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_alnum(char c) {
  return is_ascii_alpha(c) || (c >= '0' && c <= '9');
}

// Case-insensitive search for an ASCII needle given in lowercase.
std::size_t ifind(std::string_view haystack, std::string_view needle,
                  std::size_t from) {
  if (needle.size() > haystack.size()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= haystack.size(); ++i) {
    std::size_t k = 0;
    while (k < needle.size() && ascii_lower(haystack[i + k]) == needle[k]) ++k;
    if (k == needle.size()) return i;
  }
  return std::string_view::npos;
}

// Name of the tag opening at html[i] == '<', lowercased, or empty.
std::string tag_name(std::string_view html, std::size_t i) {
  std::string name;
  for (std::size_t k = i + 1; k < html.size() && is_ascii_alnum(html[k]); ++k) {
    name.push_back(ascii_lower(html[k]));
  }
  return name;
}

// Decodes the character reference starting at html[i] == '&'. Returns the
// number of bytes consumed, 0 if this is not a reference.
std::size_t decode_reference(std::string_view html, std::size_t i,
                             std::string& out) {
  const std::size_t semi = html.find(';', i + 1);
  if (semi == std::string_view::npos || semi - i > 12) return 0;
  const std::string_view body = html.substr(i + 1, semi - i - 1);
  if (body.empty()) return 0;

  char32_t cp = 0;
  if (body[0] == '#') {
    std::string_view digits = body.substr(1);
    int base = 10;
    if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
      base = 16;
      digits.remove_prefix(1);
    }
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(
        digits.data(), digits.data() + digits.size(), value, base);
    if (digits.empty() || ec != std::errc() ||
        end != digits.data() + digits.size()) {
      return 0;
    }
    cp = value;
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      cp = utf8::kReplacement;
    }
  } else {
    const auto& table = named_entities();
    auto it = table.find(body);
    if (it == table.end()) return 0;
    cp = it->second;
  }
  utf8::append(cp, out);
  return semi - i + 1;
}

}  // namespace

StopwordList::StopwordList(const std::vector<std::string>& words,
                           std::string language)
    : language_(std::move(language)) {
  for (const std::string& word : words) {
    std::string lowered = utf8::to_lower(word);
    if (!lowered.empty()) words_.insert(std::move(lowered));
  }
}

StopwordList StopwordList::parse(std::string_view text, std::string language) {
  std::vector<std::string> words;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    words.emplace_back(line);
  }
  return StopwordList(words, std::move(language));
}

StopwordList StopwordList::from_file(const std::filesystem::path& path,
                                     std::string language) {
  return parse(read_file(path), std::move(language));
}

StopwordList StopwordList::french() {
  return parse(internal::kDefaultFrenchStopwords, "fr");
}

std::string visible_text(std::string_view html) {
  std::string out;
  out.reserve(html.size());
  const std::size_t n = html.size();
  std::size_t i = 0;
  while (i < n) {
    const char c = html[i];
    if (c == '&') {
      const std::size_t used = decode_reference(html, i, out);
      if (used > 0) {
        i += used;
      } else {
        out.push_back(c);
        ++i;
      }
      continue;
    }
    if (c != '<') {
      out.push_back(c);
      ++i;
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      const std::size_t end = html.find("-->", i + 4);
      i = end == std::string_view::npos ? n : end + 3;
      out.push_back(' ');
      continue;
    }
    const char next = i + 1 < n ? html[i + 1] : '\0';
    if (!is_ascii_alpha(next) && next != '/' && next != '!' && next != '?') {
      out.push_back(c);  // a bare '<' in text
      ++i;
      continue;
    }
    const std::string name = tag_name(html, i);
    if (name == "script" || name == "style") {
      const std::size_t close = ifind(html, "</" + name, i + 1);
      const std::size_t gt =
          close == std::string_view::npos ? close : html.find('>', close);
      i = gt == std::string_view::npos ? n : gt + 1;
      out.push_back(' ');
      continue;
    }
    const std::size_t gt = html.find('>', i + 1);
    i = gt == std::string_view::npos ? n : gt + 1;
    out.push_back(' ');
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view html_bytes,
                                  const StopwordList& stopwords) {
  const std::u32string text = utf8::decode_lossy(visible_text(html_bytes));
  std::vector<std::string> tokens;
  std::u32string current;
  bool all_digits = true;

  auto flush = [&] {
    if (current.size() >= kMinTokenLength && !all_digits) {
      std::string token = utf8::encode(current);
      if (!stopwords.contains(token)) tokens.push_back(std::move(token));
    }
    current.clear();
    all_digits = true;
  };

  for (char32_t c : text) {
    const bool digit = utf8::is_digit(c);
    if (digit || utf8::is_letter(c)) {
      current.push_back(utf8::to_lower(c));
      all_digits = all_digits && digit;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> tokenize_pieces(
    const std::vector<std::string_view>& pieces, const StopwordList& stopwords) {
  std::vector<std::string> tokens;
  for (std::string_view piece : pieces) {
    std::vector<std::string> part = tokenize(piece, stopwords);
    tokens.insert(tokens.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return tokens;
}

void TokenTable::add(std::string_view token, std::uint64_t n) {
  if (n == 0) return;
  auto it = counts.find(token);
  if (it == counts.end()) {
    counts.emplace(std::string(token), n);
  } else {
    it->second += n;
  }
  total += n;
}

void TokenTable::add(const std::vector<std::string>& tokens) {
  for (const std::string& token : tokens) add(token);
}

void TokenTable::merge(const TokenTable& other) {
  for (const auto& [token, n] : other.counts) add(token, n);
}

std::uint64_t TokenTable::count(std::string_view token) const {
  auto it = counts.find(token);
  return it == counts.end() ? 0 : it->second;
}

TokenTable frequency_table(const std::vector<std::vector<std::string>>& docs) {
  TokenTable table;
  for (const auto& doc : docs) table.add(doc);
  return table;
}

std::vector<TokenCount> ranked(const TokenTable& table) {
  std::vector<TokenCount> out(table.counts.begin(), table.counts.end());
  // counts is ordered by token, so a stable sort on count keeps ties
  // ascending.
  std::stable_sort(out.begin(), out.end(),
                   [](const TokenCount& a, const TokenCount& b) {
                     return a.second > b.second;
                   });
  return out;
}

std::vector<TokenCount> top_k(const TokenTable& table, std::size_t k) {
  if (k == 0) throw Error("top_k: k must be at least 1");
  std::vector<TokenCount> out = ranked(table);
  if (out.size() > k) out.resize(k);
  return out;
}

double frequency_divergence(const TokenTable& with_comments,
                            const TokenTable& without_comments) {
  if (with_comments.empty() && without_comments.empty()) {
    throw Error("frequency_divergence: both token tables are empty");
  }
  if (with_comments.empty() || without_comments.empty()) return 1.0;

  const double total_p = static_cast<double>(with_comments.total);
  const double total_q = static_cast<double>(without_comments.total);
  double sum = 0.0;
  auto term = [](double x, double m) { return x > 0 ? x * std::log2(x / m) : 0.0; };

  auto p_it = with_comments.counts.begin();
  auto q_it = without_comments.counts.begin();
  const auto p_end = with_comments.counts.end();
  const auto q_end = without_comments.counts.end();
  while (p_it != p_end || q_it != q_end) {
    double p = 0.0;
    double q = 0.0;
    if (q_it == q_end || (p_it != p_end && p_it->first < q_it->first)) {
      p = static_cast<double>(p_it++->second) / total_p;
    } else if (p_it == p_end || q_it->first < p_it->first) {
      q = static_cast<double>(q_it++->second) / total_q;
    } else {
      p = static_cast<double>(p_it++->second) / total_p;
      q = static_cast<double>(q_it++->second) / total_q;
    }
    const double m = 0.5 * (p + q);
    sum += 0.5 * term(p, m) + 0.5 * term(q, m);
  }
  return std::clamp(sum, 0.0, 1.0);
}

std::string frequency_csv(const TokenTable& table, std::size_t limit) {
  std::string out = "token,count\n";
  std::vector<TokenCount> rows = ranked(table);
  if (limit > 0 && rows.size() > limit) rows.resize(limit);
  for (const auto& [token, n] : rows) {
    csv::append_row(out, {token, std::to_string(n)});
  }
  return out;
}

}  // namespace nocomments
