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

#ifndef BCNN_ERRORS_HPP
#define BCNN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcnn {

// Error categories mirror the process exit codes: config 2, io/shape 3,
// incompatibility 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct IncompatibleError : Error {
    using Error::Error;
};

}  // namespace bcnn

#endif
