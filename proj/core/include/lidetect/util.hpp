// Copyright 2026 The lidetect Authors
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

#ifndef LIDETECT_UTIL_HPP_
#define LIDETECT_UTIL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lidetect {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

// Collapses every run of whitespace to a single space and trims the ends.
std::string collapse_whitespace(std::string_view s);

// Folds typographic quotes/dashes/nbsp to ASCII and normalizes line endings.
// This is the only Unicode normalization applied anywhere; real spell
// correction is intentionally out of scope (nondeterministic).
std::string fold_text(std::string_view s);

std::optional<std::string> read_file(const std::string& path);
bool write_file(const std::string& path, std::string_view content);

bool is_ascii_digit(char c);
bool is_word_char(char c);

// SplitMix64: tiny deterministic RNG. std::shuffle + distributions are
// implementation-defined, so every reproducible draw in the project goes
// through this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [0, bound) via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);

  double next_unit();  // [0,1)

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace lidetect

#endif  // LIDETECT_UTIL_HPP_
