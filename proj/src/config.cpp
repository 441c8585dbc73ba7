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

#include "config.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "text_format.hpp"

namespace bcnn {

KvConfig KvConfig::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

KvConfig KvConfig::parse_string(const std::string& text, const std::string& origin) {
    KvConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view v = trim_view(line);
        if (v.empty() || v.front() == '#') {
            continue;
        }
        if (v.front() == '[') {
            if (v.back() != ']' || v.size() < 3) {
                throw ConfigError(origin + ":" + std::to_string(line_no) + ": bad section header");
            }
            section = std::string(trim_view(v.substr(1, v.size() - 2)));
            continue;
        }
        const size_t eq = v.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");
        }
        std::string key(trim_view(v.substr(0, eq)));
        std::string value(trim_view(v.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
        }
        // Trailing comments: strip anything after ' #'.
        const size_t hash = value.find(" #");
        if (hash != std::string::npos) {
            value = std::string(trim_view(std::string_view(value).substr(0, hash)));
        }
        cfg.set(section.empty() ? key : section + "." + key, value);
    }
    return cfg;
}

void KvConfig::set(const std::string& dotted_key, const std::string& value) {
    auto it = index_.find(dotted_key);
    if (it != index_.end()) {
        entries_[it->second].second = value;
        return;
    }
    index_[dotted_key] = entries_.size();
    entries_.emplace_back(dotted_key, value);
}

std::optional<std::string> KvConfig::get(const std::string& dotted_key) const {
    auto it = index_.find(dotted_key);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return entries_[it->second].second;
}

std::string KvConfig::require(const std::string& dotted_key) const {
    auto v = get(dotted_key);
    if (!v) {
        throw ConfigError("config is missing required key: " + dotted_key);
    }
    return *v;
}

double KvConfig::require_double(const std::string& dotted_key) const {
    double v;
    if (!parse_double(require(dotted_key), v)) {
        throw ConfigError("config key is not a number: " + dotted_key);
    }
    return v;
}

uint64_t KvConfig::require_u64(const std::string& dotted_key) const {
    uint64_t v;
    if (!parse_u64(require(dotted_key), v)) {
        throw ConfigError("config key is not a non-negative integer: " + dotted_key);
    }
    return v;
}

bool KvConfig::get_bool(const std::string& dotted_key, bool fallback) const {
    auto v = get(dotted_key);
    if (!v) {
        return fallback;
    }
    if (*v == "true" || *v == "1" || *v == "yes") {
        return true;
    }
    if (*v == "false" || *v == "0" || *v == "no") {
        return false;
    }
    throw ConfigError("config key is not a boolean: " + dotted_key);
}

double KvConfig::get_double(const std::string& dotted_key, double fallback) const {
    auto v = get(dotted_key);
    if (!v) {
        return fallback;
    }
    double out;
    if (!parse_double(*v, out)) {
        throw ConfigError("config key is not a number: " + dotted_key);
    }
    return out;
}

uint64_t KvConfig::get_u64(const std::string& dotted_key, uint64_t fallback) const {
    auto v = get(dotted_key);
    if (!v) {
        return fallback;
    }
    uint64_t out;
    if (!parse_u64(*v, out)) {
        throw ConfigError("config key is not a non-negative integer: " + dotted_key);
    }
    return out;
}

RunConfig resolve_run_config(const KvConfig& kv) {
    RunConfig rc;
    rc.train_path = kv.require("data.train");
    rc.test_path = kv.require("data.test");

    const auto m = kv.require_u64("arch.m");
    const auto n1 = kv.require_u64("arch.n1");
    const auto n2 = kv.require_u64("arch.n2");
    std::vector<size_t> hidden;
    for (std::string_view piece : split_view(kv.require("arch.hidden"), ',')) {
        uint64_t w;
        if (!parse_u64(trim_view(piece), w) || w == 0) {
            throw ConfigError("config key arch.hidden must be a comma list of positive widths");
        }
        hidden.push_back(w);
    }
    const bool fix = kv.get_bool("arch.fix_identity", false);
    try {
        rc.arch = Architecture::make(m, n1, n2, hidden, fix);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad architecture: ") + e.what());
    }

    rc.train.lr = kv.require_double("train.lr");
    rc.train.beta1 = kv.require_double("train.beta1");
    rc.train.beta2 = kv.require_double("train.beta2");
    rc.train.epsilon = kv.get_double("train.epsilon", 1e-8);
    rc.train.batch_size = kv.require_u64("train.batch");
    rc.train.epochs = kv.require_u64("train.epochs");
    rc.train.seed = kv.require_u64("train.seed");
    try {
        rc.train.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad train config: ") + e.what());
    }

    rc.bins = kv.get_u64("report.bins", 50);
    rc.decimals = static_cast<int>(kv.get_u64("report.decimals", 2));
    rc.axis = kv.get("report.axis").value_or("lambda_min");
    rc.repeats = kv.get_u64("report.repeats", 5);
    if (rc.bins < 1 || rc.repeats < 1) {
        throw ConfigError("report.bins and report.repeats must be >= 1");
    }
    return rc;
}

}  // namespace bcnn
