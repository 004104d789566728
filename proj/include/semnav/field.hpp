// Copyright (c) 2026 Semnav Authors
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

#ifndef SEMNAV_FIELD_HPP_
#define SEMNAV_FIELD_HPP_

#include <Eigen/Dense>
#include <string>

namespace semnav {

/// Per-cell real values over a grid, indexed (row, col). Distance fields use
/// +infinity as the documented no-obstacle sentinel; everything else is
/// finite.
using ScalarField = Eigen::ArrayXXd;

/// Text dump: two header lines ("<cols> <rows>" and "<resolution>") followed
/// by row-major values, one grid row per line, full round-trip precision.
std::string save_field(const ScalarField& field, double resolution);

/// Inverse of save_field. Throws ParseError on malformed input.
ScalarField load_field(const std::string& text, double* resolution = nullptr);

void save_field_file(const std::string& path, const ScalarField& field,
                     double resolution);
ScalarField load_field_file(const std::string& path,
                            double* resolution = nullptr);

}  // namespace semnav

#endif  // SEMNAV_FIELD_HPP_
