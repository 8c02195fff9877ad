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

#ifndef NOCOMMENTS_ERROR_H_
#define NOCOMMENTS_ERROR_H_

#include <stdexcept>
#include <string>

namespace nocomments {

// Fatal configuration or input error. Slicing problems on individual pages are
// never reported this way; they travel as SliceError values instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nocomments

#endif  // NOCOMMENTS_ERROR_H_
