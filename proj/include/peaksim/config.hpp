// Copyright 2025 The peaksim developers
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

#pragma once

#include <cstddef>
#include <cstdint>

namespace peaksim {

// Resource limits, overridable through environment variables:
//   PEAKSIM_ORACLE_QUBITS  dense statevector limit (default 24)
//   PEAKSIM_DIM_CAP        bounded-weight basis dimension cap (default 2^31)
//   PEAKSIM_BLOCK_QUBITS   local-term forward-cone limit (default 12)
//   PEAKSIM_WINDOW_QUBITS  dense window limit for strip marginals (default 20)
//   PEAKSIM_BAND_QUBITS    boundary-sweep active band limit (default 11)
struct Limits {
    int oracle_qubits = 24;
    std::uint64_t dim_cap = std::uint64_t{1} << 31;
    int block_qubits = 12;
    int window_qubits = 20;
    int band_qubits = 11;
    std::size_t lanczos_bytes = std::size_t{2} << 30;
};

const Limits& limits();

}  // namespace peaksim
