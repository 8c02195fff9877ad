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

#include "nocomments/outputs.h"

#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "nocomments/error.h"

namespace nocomments {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

std::string dump_line(const Json& object) {
  // Raw page bytes need not be valid UTF-8.
  return object.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error("cannot create directory " + path.parent_path().string() +
                  ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error("error while writing " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("error while reading " + path.string());
  return std::move(buffer).str();
}

std::string section_file_name(std::string_view page_path, std::size_t n) {
  const std::size_t slash = page_path.rfind('/');
  const std::size_t name_start = slash == std::string_view::npos ? 0 : slash + 1;
  std::size_t dot = page_path.rfind('.');
  if (dot == std::string_view::npos || dot <= name_start) dot = page_path.size();
  return std::string(page_path.substr(0, dot)) + ".section-" +
         std::to_string(n) + ".html";
}

std::string comments_jsonl(const std::vector<Comment>& comments) {
  std::string out;
  for (const Comment& c : comments) {
    Json object;
    object["site_id"] = c.site_id;
    object["page_path"] = c.page_path;
    object["section"] = c.section;
    object["index"] = c.index;
    object["span_start"] = c.span.start;
    object["span_end"] = c.span.end;
    object["author"] = optional_json(c.author);
    object["date"] = optional_json(c.date);
    object["depth"] = optional_json(c.depth);
    object["author_url"] = optional_json(c.author_url);
    object["text"] = optional_json(c.text);
    out += dump_line(object);
  }
  return out;
}

std::string documents_jsonl(const std::vector<TokenizedDocument>& docs) {
  std::string out;
  for (const TokenizedDocument& doc : docs) {
    Json object;
    object["site_id"] = doc.site_id;
    object["page_path"] = doc.page_path;
    object["tokens"] = doc.tokens;
    out += dump_line(object);
  }
  return out;
}

}  // namespace nocomments
