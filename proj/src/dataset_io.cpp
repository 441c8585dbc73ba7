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

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "states.hpp"
#include "text_format.hpp"

namespace bcnn {

namespace {

std::string dataset_header() {
    std::string h = "family,p,theta,phi,lambda_min,label";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            h += ",re" + std::to_string(r) + std::to_string(c);
            h += ",im" + std::to_string(r) + std::to_string(c);
        }
    }
    return h;
}

std::string opt_field(const std::optional<double>& v) {
    return v ? format_g17(*v) : std::string();
}

}  // namespace

void write_dataset_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open dataset file for writing: " + path);
    }
    out << dataset_header() << '\n';
    for (const StateRecord& rec : ds.records) {
        out << family_name(rec.family) << ',' << opt_field(rec.p) << ',' << opt_field(rec.theta)
            << ',' << opt_field(rec.phi) << ',' << format_g17(rec.lambda_min) << ','
            << (rec.entangled ? 1 : 0);
        for (size_t r = 0; r < 4; ++r) {
            for (size_t c = 0; c < 4; ++c) {
                const cdouble z = rec.rho(r, c);
                out << ',' << format_g17(z.real()) << ',' << format_g17(z.imag());
            }
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failure on dataset file: " + path);
    }
}

Dataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open dataset file: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || trim_view(line) != dataset_header()) {
        throw IoError("dataset file has an unrecognized header: " + path);
    }
    Dataset ds;
    size_t line_no = 1;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim_view(line).empty()) {
            continue;
        }
        auto fields = split_view(line, ',');
        if (fields.size() != 6 + 32) {
            throw IoError(path + ":" + std::to_string(line_no) + ": expected 38 fields");
        }
        StateRecord rec;
        auto fam = family_from_name(trim_view(fields[0]));
        if (!fam) {
            throw IoError(path + ":" + std::to_string(line_no) + ": unknown family tag");
        }
        rec.family = *fam;
        auto opt_parse = [&](std::string_view f) -> std::optional<double> {
            if (trim_view(f).empty()) {
                return std::nullopt;
            }
            double v;
            if (!parse_double(f, v)) {
                throw IoError(path + ":" + std::to_string(line_no) + ": bad numeric field");
            }
            return v;
        };
        rec.p = opt_parse(fields[1]);
        rec.theta = opt_parse(fields[2]);
        rec.phi = opt_parse(fields[3]);
        double label;
        if (!parse_double(fields[4], rec.lambda_min) || !parse_double(fields[5], label) ||
            (label != 0.0 && label != 1.0)) {
            throw IoError(path + ":" + std::to_string(line_no) + ": bad lambda_min/label field");
        }
        rec.entangled = label == 1.0;
        rec.rho = ComplexMatrix(4);
        for (size_t k = 0; k < 16; ++k) {
            double re, im;
            if (!parse_double(fields[6 + 2 * k], re) || !parse_double(fields[7 + 2 * k], im)) {
                throw IoError(path + ":" + std::to_string(line_no) + ": bad matrix entry");
            }
            rec.rho(k / 4, k % 4) = cdouble{re, im};
        }
        if (first) {
            ds.family = rec.family;
            first = false;
        } else if (rec.family != ds.family) {
            throw IoError(path + ": mixed state families in one dataset");
        }
        ds.records.push_back(std::move(rec));
    }
    if (ds.records.empty()) {
        throw IoError("dataset file has no records: " + path);
    }
    return ds;
}

}  // namespace bcnn
