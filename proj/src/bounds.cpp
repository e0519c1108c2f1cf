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

#include "starcut/bounds.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "starcut/errors.hpp"

namespace starcut {
namespace {

void require_r(int r) {
  if (r < 2) {
    throw Error(ErrorCode::kROutOfRange, "r=" + std::to_string(r) + " < 2");
  }
}

Rational max_of(std::initializer_list<Rational> values) {
  return std::max(values);
}

long long choose2(long long g) { return g * (g - 1) / 2; }

std::string range_text(Family family, int n, int g) {
  return std::string(family_name(family)) + "_" + std::to_string(n) +
         " with g=" + std::to_string(g);
}

KnownValue exact(int value, std::string source) {
  return KnownValue{KnownKind::kExact, value, std::move(source)};
}

}  // namespace

Rational f_value(int r) {
  require_r(r);
  const std::int64_t x = r;
  if (r % 2 == 1) {
    return max_of({Rational(x + 7, 2), Rational(x * x + 4 * x + 3, 8)});
  }
  return max_of({Rational(x * x + 2 * x, 8), Rational(x + 8, 2),
                 Rational(x * x + 6 * x + 12, 12)});
}

Rational g_value(int r) {
  require_r(r);
  const std::int64_t x = r;
  if (r % 2 == 1) {
    return max_of({Rational(6), Rational(x + 5, 2),
                   Rational(x * x + 4 * x - 5, 8)});
  }
  return max_of({Rational(6), Rational(x * x + 2 * x - 8, 8),
                 Rational(x + 6, 2), Rational(x * x + 6 * x, 12)});
}

int min_guaranteed_dim(Family family, int r) {
  const Rational t = family == Family::kQ ? f_value(r) : g_value(r);
  return static_cast<int>(t.floor() + 1);
}

long long kappa_g_formula(Family family, int n, int g) {
  if (family == Family::kQ) {
    if (n < 4 || g < 0 || g > n) {
      throw Error(ErrorCode::kOutOfValidity,
                  range_text(family, n, g) + " (needs n >= 4, 0 <= g <= n)");
    }
    if (g <= n - 4) return (g + 1LL) * n - 2LL * g - choose2(g);
    return n * (n - 1LL) / 2;
  }
  if (n < 7 || g < 0 || g > n + 1) {
    throw Error(ErrorCode::kOutOfValidity,
                range_text(family, n, g) + " (needs n >= 7, 0 <= g <= n+1)");
  }
  if (g <= n - 3) return (g + 1LL) * (n + 1) - 2LL * g - choose2(g);
  return n * (n + 1LL) / 2;
}

long long neighborhood_bound_formula(Family family, int n, int g) {
  if (family == Family::kQ) {
    if (n < 4 || g < 0) {
      throw Error(ErrorCode::kOutOfValidity,
                  range_text(family, n, g) + " (needs n >= 4, g >= 0)");
    }
    return (g + 1LL) * n - 2LL * g - choose2(g);
  }
  if (n < 5 || g < 1 || g > n + 2) {
    throw Error(ErrorCode::kOutOfValidity,
                range_text(family, n, g) + " (needs n >= 5, 1 <= g <= n+2)");
  }
  return (n + 1LL) * (g + 1) - 2LL * g - choose2(g);
}

int conjectured_value(Family family, int n) {
  return family == Family::kQ ? (n + 1) / 2 : (n + 2) / 2;
}

std::string KnownValue::to_string() const {
  switch (kind) {
    case KnownKind::kExact:
      return "Exact(" + std::to_string(value) + ")";
    case KnownKind::kNoCut:
      return "NoCut";
    case KnownKind::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

KnownValue known_value(Family family, int n, int r, CutMode mode) {
  if (n < 2 || r < 1) return KnownValue::unknown();
  if (family == Family::kQ) {
    const int value = conjectured_value(family, n);
    if (r == 1) {
      if (n >= 3) return exact(n - 1, "edge cuts of Q_n, n >= 3 (Lin et al. 2016)");
      return KnownValue::unknown();
    }
    if (n == 2 && r == 2 && mode == CutMode::kStructure) {
      return KnownValue{KnownKind::kNoCut, 0, "Q_2 has no K_{1,2}-structure cut"};
    }
    if (r <= 3 && n >= 3) {
      return exact(value, "r in {2,3}, n >= 3 (Lin et al. 2016)");
    }
    if (r == 4 && n >= 6) return exact(value, "r=4, n >= 6 (Sabir-Meng 2018)");
    if (r == 4 && (n == 4 || n == 5)) return exact(value, "low-dimensional r=4, n in {4,5}");
    if (r == 5 && (n == 5 || n == 6)) return exact(value, "low-dimensional r=5, n in {5,6}");
    if (r == 6 && (n == 6 || n == 7)) return exact(value, "low-dimensional r=6, n in {6,7}");
    if (Rational(n) > f_value(r)) return exact(value, "threshold n > f(r)");
    return KnownValue::unknown();
  }
  const int value = conjectured_value(family, n);
  if (r == 1) {
    if (n >= 7) return exact(n, "edge cuts of FQ_n, n >= 7 (Sabir-Meng 2018)");
    return KnownValue::unknown();
  }
  if (r <= 3 && n >= 7) {
    return exact(value, "folded r in {2,3}, n >= 7 (Sabir-Meng 2018)");
  }
  if (Rational(n) > g_value(r)) return exact(value, "threshold n > g(r)");
  return KnownValue::unknown();
}

}  // namespace starcut
