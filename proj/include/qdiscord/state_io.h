// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDISCORD_STATE_IO_H
#define QDISCORD_STATE_IO_H

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qdiscord/linalg.h"

namespace qdiscord {

// State file format:
//   {"num_qubits": n, "matrix": [[[re, im], ...], ...]}
// with 2^n rows of 2^n entries each.

/// Throws FormatError on structural problems and StateError when the matrix
/// parses but violates a density-matrix invariant.
DensityMatrix state_from_json(const nlohmann::json &j);
nlohmann::json state_to_json(const DensityMatrix &rho);

DensityMatrix load_state_file(const std::filesystem::path &path);
void save_state_file(const DensityMatrix &rho, const std::filesystem::path &path);

}  // namespace qdiscord

#endif
