// Copyright 2026 The Fulkerson Lab Authors.
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

#ifndef FULKERSON_SEARCH_HPP_
#define FULKERSON_SEARCH_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>

namespace fulkerson {

// found: a witness is returned. absent: the search space was exhausted and
// it provably holds no witness. inconclusive: the strategy ran to completion
// but its failure proves nothing. budget_exhausted: stopped early (node budget
// or cancellation).
enum class SearchStatus { found, absent, inconclusive, budget_exhausted };

const char* to_string(SearchStatus status);

inline constexpr std::uint64_t kDefaultNodeBudget = 500'000'000;
inline constexpr std::size_t kDefaultMatchingLimit = 1'000'000;

struct SearchLimits {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t matching_limit = kDefaultMatchingLimit;
  unsigned threads = 1;
  std::stop_token stop;
};

// Node counter shared by every branch of one search.
class SearchMeter {
 public:
  explicit SearchMeter(const SearchLimits& limits)
      : budget_(limits.node_budget), stop_(limits.stop) {}

  // Charges one node. Returns false once the budget is spent or a stop was
  // requested; from then on every call returns false.
  bool tick() {
    if (halted_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_ || ((n & 0x3ff) == 0 && stop_.stop_requested())) {
      halted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool halted() const { return halted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t budget_;
  std::stop_token stop_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> halted_{false};
};

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<T> value;
  std::uint64_t nodes = 0;
  std::string note;

  bool found() const { return status == SearchStatus::found; }
};

}  // namespace fulkerson

#endif  // FULKERSON_SEARCH_HPP_
