// Copyright 2026 The Starcut Authors
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

#ifndef STARCUT_RATIONAL_HPP_
#define STARCUT_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>

namespace starcut {

// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value.
  std::int64_t floor() const;

  // "p" when integral, otherwise "p/q".
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater
                                  : std::strong_ordering::equal);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace starcut

#endif  // STARCUT_RATIONAL_HPP_
