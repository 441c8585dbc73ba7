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

#ifndef BCNN_CONFIG_HPP
#define BCNN_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "model.hpp"
#include "states.hpp"
#include "train.hpp"

namespace bcnn {

// Flat key=value configuration with [section] headers and '#' comments.
// Stored as "section.key" -> value; insertion order kept for manifests.
class KvConfig {
  public:
    static KvConfig parse_file(const std::string& path);
    static KvConfig parse_string(const std::string& text, const std::string& origin = "<string>");

    void set(const std::string& dotted_key, const std::string& value);
    std::optional<std::string> get(const std::string& dotted_key) const;

    std::string require(const std::string& dotted_key) const;
    double require_double(const std::string& dotted_key) const;
    uint64_t require_u64(const std::string& dotted_key) const;
    bool get_bool(const std::string& dotted_key, bool fallback) const;
    double get_double(const std::string& dotted_key, double fallback) const;
    uint64_t get_u64(const std::string& dotted_key, uint64_t fallback) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::map<std::string, size_t> index_;
};

// Fully resolved training/report run. Seeds must be explicit in the config;
// a missing [train] seed is a config error.
struct RunConfig {
    std::string train_path;
    std::string test_path;
    Architecture arch;
    TrainConfig train;
    // Report options.
    size_t bins = 50;
    int decimals = 2;
    std::string axis = "lambda_min";
    size_t repeats = 5;
};

RunConfig resolve_run_config(const KvConfig& kv);

}  // namespace bcnn

#endif
