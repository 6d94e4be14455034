// Copyright 2026 The spanopt Authors
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

#ifndef SPANOPT_TRACE_HPP_
#define SPANOPT_TRACE_HPP_

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace spanopt {

// Ordered key=value log of intermediate quantities.
class Trace {
 public:
  template <typename T>
  void Add(const std::string& key, const T& value) {
    std::ostringstream ss;
    ss << value;
    entries_.emplace_back(key, ss.str());
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  // First value recorded under key, or "" when absent.
  std::string Get(const std::string& key) const {
    for (const auto& [k, v] : entries_) {
      if (k == key) return v;
    }
    return "";
  }

  void Write(std::ostream& out) const {
    for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace spanopt

#endif  // SPANOPT_TRACE_HPP_
