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

#ifndef STARCUT_BOUNDS_HPP_
#define STARCUT_BOUNDS_HPP_

// Closed-form thresholds and connectivity values for star cuts of Q_n and
// FQ_n. Everything is exact integer or rational arithmetic.

#include <string>

#include "starcut/graph.hpp"
#include "starcut/rational.hpp"
#include "starcut/stars.hpp"

namespace starcut {

// Threshold for Q_n: the star-structure connectivity is ceil(n/2) whenever
// n > f(r). Throws kROutOfRange for r < 2.
Rational f_value(int r);

// Threshold for FQ_n (value ceil((n+1)/2) whenever n > g(r)).
Rational g_value(int r);

// Smallest n strictly above f(r) (Q) or g(r) (FQ).
int min_guaranteed_dim(Family family, int r);

// g-extra connectivity kappa_g. Q needs n >= 4, 0 <= g <= n; FQ needs
// n >= 7, 0 <= g <= n+1. Throws kOutOfValidity otherwise.
long long kappa_g_formula(Family family, int n, int g);

// Lower bound on |N(C)| for a connected C with g+1 vertices. Q needs n >= 4
// and g >= 0; FQ needs n >= 5 and 1 <= g <= n+2.
long long neighborhood_bound_formula(Family family, int n, int g);

// ceil(n/2) for Q, ceil((n+1)/2) for FQ.
int conjectured_value(Family family, int n);

enum class KnownKind { kExact, kNoCut, kUnknown };

struct KnownValue {
  KnownKind kind = KnownKind::kUnknown;
  int value = 0;       // meaningful for kExact
  std::string source;  // citation tag, empty for kUnknown

  static KnownValue unknown() { return {}; }
  std::string to_string() const;
};

// Settled kappa(G, K_{1,r}) / kappa^s(G, K_{1,r}) from the published results,
// or Unknown. Explicit low-dimensional results take precedence over the
// general threshold theorems.
KnownValue known_value(Family family, int n, int r, CutMode mode);

}  // namespace starcut

#endif  // STARCUT_BOUNDS_HPP_
