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

#include "text_format.hpp"

#include <cerrno>
#include <cstdlib>

namespace bcnn {

bool parse_double(std::string_view s, double& out) {
    s = trim_view(s);
    if (s.empty()) {
        return false;
    }
    std::string tmp(s);
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(tmp.c_str(), &end);
    if (errno != 0 || end != tmp.c_str() + tmp.size()) {
        return false;
    }
    out = v;
    return true;
}

bool parse_u64(std::string_view s, uint64_t& out) {
    s = trim_view(s);
    if (s.empty()) {
        return false;
    }
    std::string tmp(s);
    char* end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(tmp.c_str(), &end, 10);
    if (errno != 0 || end != tmp.c_str() + tmp.size()) {
        return false;
    }
    out = v;
    return true;
}

bool parse_i64(std::string_view s, int64_t& out) {
    s = trim_view(s);
    if (s.empty()) {
        return false;
    }
    std::string tmp(s);
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(tmp.c_str(), &end, 10);
    if (errno != 0 || end != tmp.c_str() + tmp.size()) {
        return false;
    }
    out = v;
    return true;
}

}  // namespace bcnn
