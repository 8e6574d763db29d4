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

#include "lidetect/util.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lidetect {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;  // swallow leading whitespace
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string fold_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == '\r') {
      if (i + 1 >= s.size() || s[i + 1] != '\n') out.push_back('\n');
      ++i;
      continue;
    }
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    // UTF-8 sequences we care about: smart quotes, dashes, nbsp, ellipsis.
    auto match3 = [&](unsigned char b1, unsigned char b2, unsigned char b3) {
      return i + 2 < s.size() && static_cast<unsigned char>(s[i]) == b1 &&
             static_cast<unsigned char>(s[i + 1]) == b2 &&
             static_cast<unsigned char>(s[i + 2]) == b3;
    };
    if (match3(0xE2, 0x80, 0x98) || match3(0xE2, 0x80, 0x99)) {
      out.push_back('\'');
      i += 3;
    } else if (match3(0xE2, 0x80, 0x9C) || match3(0xE2, 0x80, 0x9D)) {
      out.push_back('"');
      i += 3;
    } else if (match3(0xE2, 0x80, 0x93) || match3(0xE2, 0x80, 0x94)) {
      out.push_back('-');
      i += 3;
    } else if (match3(0xE2, 0x80, 0xA6)) {
      out += "...";
      i += 3;
    } else if (i + 1 < s.size() && c == 0xC2 &&
               static_cast<unsigned char>(s[i + 1]) == 0xA0) {
      out.push_back(' ');
      i += 2;
    } else if (i + 1 < s.size() && c == 0xC2 &&
               static_cast<unsigned char>(s[i + 1]) == 0xA9) {
      out += "(c)";  // copyright sign
      i += 2;
    } else {
      // Pass other multibyte sequences through untouched.
      out.push_back(static_cast<char>(c));
      ++i;
    }
  }
  return out;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

bool write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  return static_cast<bool>(out);
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_word_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;  // treat multibyte bytes as word text
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97f4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) return 0;
  std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace lidetect
