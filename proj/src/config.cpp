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

#include "peaksim/config.hpp"

#include <cstdlib>
#include <string>

namespace peaksim {

namespace {

template <typename T>
void read_env(const char* name, T& out) {
    if (const char* v = std::getenv(name)) {
        out = static_cast<T>(std::stoull(std::string(v)));
    }
}

Limits load_limits() {
    Limits l;
    read_env("PEAKSIM_ORACLE_QUBITS", l.oracle_qubits);
    read_env("PEAKSIM_DIM_CAP", l.dim_cap);
    read_env("PEAKSIM_BLOCK_QUBITS", l.block_qubits);
    read_env("PEAKSIM_WINDOW_QUBITS", l.window_qubits);
    read_env("PEAKSIM_BAND_QUBITS", l.band_qubits);
    read_env("PEAKSIM_LANCZOS_BYTES", l.lanczos_bytes);
    return l;
}

}  // namespace

const Limits& limits() {
    static const Limits l = load_limits();
    return l;
}

}  // namespace peaksim
