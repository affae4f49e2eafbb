// Copyright 2026 The tomo Authors
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

#include "tomo/quadrature.hpp"

#include <memory>
#include <string>

#include <gsl/gsl_integration.h>

#include "tomo/errors.hpp"

namespace tomo {

Quadrature1D gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ParameterError("gauss_legendre: need at least one node");
  std::unique_ptr<gsl_integration_glfixed_table,
                  decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) {
    throw NumericalError("gauss_legendre: table allocation failed for n=" +
                         std::to_string(n));
  }
  Quadrature1D q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &q.nodes[i],
                                  &q.weights[i], table.get());
  }
  return q;
}

}  // namespace tomo
