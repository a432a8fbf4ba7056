// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#pragma once

#include <string>

#include "oplab/matrix.hpp"
#include "oplab/shift.hpp"
#include "oplab/symmetry.hpp"

// Shared on-disk formats (JSON documents):
//
//   matrix : { "rows": r, "cols": c, "data": [[re, im], ...] }  row-major
//   shift  : { "n": n, "weights": [[re, im], ...] }
//   verdict: { "status", "residual", "tau_yes", "tau_no",
//              "restarts_used", "seed", "certificate": matrix|null }
//
// Readers reject malformed documents and any non-finite coordinate.

namespace oplab::io {

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

std::string shift_to_json(const WeightedShift& s);
WeightedShift shift_from_json(const std::string& text);

std::string verdict_to_json(const SymmetryVerdict& v, double tau_yes,
                            double tau_no);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);
WeightedShift read_shift_file(const std::string& path);
void write_shift_file(const std::string& path, const WeightedShift& s);

// Parse a comma-separated CLI weight list; tokens are plain reals or
// re+imi complex literals ("1", "-2.5", "3i", "1+2i", "2-i").
WeightedShift shift_from_cli_spec(const std::string& spec);

cxd parse_complex_token(const std::string& token);

}  // namespace oplab::io
