// Copyright 2026 The twoqubit Authors
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

#include "twoqubit/matrix.hpp"

#include <string>

namespace twoqubit {

Matrix2 pauli(int mu) {
  using namespace std::complex_literals;
  Matrix2 s;
  switch (mu) {
    case 0:
      s(0, 0) = 1.0;
      s(1, 1) = 1.0;
      break;
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -1i;
      s(1, 0) = 1i;
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw PreconditionError("pauli: index " + std::to_string(mu) +
                              " out of range 0..3");
  }
  return s;
}

bool is_hermitian(const Matrix4& m, double tol) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

Complex trace_power(const Matrix4& m, int k) {
  if (k < 1 || k > 4)
    throw PreconditionError("trace_power: k must be in 1..4");
  Matrix4 p = m;
  for (int i = 1; i < k; ++i) p = p * m;
  return p.trace();
}

}  // namespace twoqubit
