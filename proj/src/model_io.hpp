// Copyright 2026 the bcnn developers
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

#ifndef BCNN_MODEL_IO_HPP
#define BCNN_MODEL_IO_HPP

#include <string>

#include "model.hpp"
#include "states.hpp"

namespace bcnn {

struct SavedModel {
    ModelParams params;
    StateFamily family = StateFamily::General;
};

// Plain-text model file: versioned header, architecture descriptor, per-path
// Pauli coefficients and row-major FC matrices at 17 significant digits.
// Save-then-load reproduces every parameter bit-exactly.
void write_model_file(const SavedModel& model, const std::string& path);
SavedModel read_model_file(const std::string& path);

}  // namespace bcnn

#endif
