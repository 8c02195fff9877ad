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

#ifndef NOCOMMENTS_URL_H_
#define NOCOMMENTS_URL_H_

#include <string>
#include <string_view>

namespace nocomments {

// Canonical form used for site ownership: scheme removed (any "xxx://" and a
// leading "//"), host lowercased, leading "www." removed, fragment removed,
// trailing '/' removed. Path and query string are kept verbatim.
//
//   "HTTP://www.Example.org/Post?id=1#top"  ->  "example.org/Post?id=1"
std::string normalize_url(std::string_view url);

// True if the href carries an http(s) scheme or is protocol-relative ("//").
// Relative hrefs point back into the page's own site and mailto:, javascript:
// and similar schemes never address a registered site.
bool is_absolute_web_url(std::string_view href);

}  // namespace nocomments

#endif  // NOCOMMENTS_URL_H_
