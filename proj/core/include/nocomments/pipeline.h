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

#ifndef NOCOMMENTS_PIPELINE_H_
#define NOCOMMENTS_PIPELINE_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "nocomments/corpus.h"
#include "nocomments/encoding.h"
#include "nocomments/linkgraph.h"
#include "nocomments/slicer.h"

namespace nocomments {

// NOCOMMENTS_JOBS if set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned default_jobs();

// Calls fn(i) for every i in [0, count) on up to 'jobs' threads. Work items
// are claimed dynamically; results must be written by index so the outcome
// does not depend on scheduling. The first exception thrown by fn is
// rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& thread : threads) thread.join();
  if (error) std::rethrow_exception(error);
}

// Rough-slices every page, in corpus order. Requires a rule for every site.
std::vector<SlicedPage> rough_slice_all(const Corpus& corpus,
                                        const EncodingFile& rules,
                                        unsigned jobs);

// Edges of every page in corpus order.
std::vector<Edge> extract_all_links(const Corpus& corpus,
                                    const std::vector<SlicedPage>& sliced,
                                    unsigned jobs,
                                    LinkDiagnostics* diagnostics = nullptr);

}  // namespace nocomments

#endif  // NOCOMMENTS_PIPELINE_H_
