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

#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "errors.hpp"
#include "rng.hpp"
#include "text_format.hpp"

namespace bcnn {

namespace {

constexpr uint64_t kCurveStream = 0x63757276;  // "curv"

double axis_value(const StateRecord& rec, ErrorAxis axis) {
    switch (axis) {
        case ErrorAxis::P:
            if (!rec.p) {
                throw std::invalid_argument("error_distribution: records carry no p value");
            }
            return *rec.p;
        case ErrorAxis::Theta:
            if (!rec.theta) {
                throw std::invalid_argument("error_distribution: records carry no theta value");
            }
            return *rec.theta;
        case ErrorAxis::LambdaMin:
            return rec.lambda_min;
    }
    throw std::invalid_argument("error_distribution: unknown axis");
}

double axis_value(const ErrorRecord& rec, ErrorAxis axis) {
    switch (axis) {
        case ErrorAxis::P:
            if (!rec.p) {
                throw std::invalid_argument("error_distribution: records carry no p value");
            }
            return *rec.p;
        case ErrorAxis::Theta:
            if (!rec.theta) {
                throw std::invalid_argument("error_distribution: records carry no theta value");
            }
            return *rec.theta;
        case ErrorAxis::LambdaMin:
            return rec.lambda_min;
    }
    throw std::invalid_argument("error_distribution: unknown axis");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open file for writing: " + path);
    }
    return out;
}

}  // namespace

AccuracyCurve accuracy_curve(const Dataset& train_data, const Dataset& test_data, size_t n1,
                             size_t n2, const std::vector<size_t>& hidden, bool fix_identity,
                             const std::vector<size_t>& m_values, size_t repeats,
                             uint64_t base_seed, const TrainConfig* override_cfg) {
    if (repeats < 1) {
        throw std::invalid_argument("accuracy_curve: repeats must be >= 1");
    }
    if (train_data.family != test_data.family) {
        throw IncompatibleError("accuracy_curve: train/test family mismatch");
    }
    AccuracyCurve curve;
    curve.family = train_data.family;
    for (size_t m : m_values) {
        const Architecture arch = Architecture::make(m, n1, n2, hidden, fix_identity);
        if (curve.arch_desc.empty()) {
            curve.arch_desc = arch.describe();
        }
        TrainConfig cfg =
            override_cfg ? *override_cfg : preset_train_config(train_data.family, m);
        CurvePoint point;
        point.operator_count = m;
        for (size_t r = 0; r < repeats; ++r) {
            cfg.seed = derive_seed(base_seed, kCurveStream ^ m, r);
            auto [params, history] = train(train_data, arch, cfg);
            (void)history;
            point.seeds.push_back(cfg.seed);
            point.accuracies.push_back(evaluate(params, test_data).accuracy);
        }
        double mean = 0.0;
        for (double a : point.accuracies) {
            mean += a;
        }
        mean /= static_cast<double>(point.accuracies.size());
        double var = 0.0;
        for (double a : point.accuracies) {
            var += (a - mean) * (a - mean);
        }
        var /= static_cast<double>(point.accuracies.size());
        point.mean_accuracy = mean;
        point.std_accuracy = std::sqrt(var);
        curve.points.push_back(std::move(point));
    }
    return curve;
}

ErrorAxis error_axis_from_name(std::string_view name) {
    if (name == "p") {
        return ErrorAxis::P;
    }
    if (name == "theta") {
        return ErrorAxis::Theta;
    }
    if (name == "lambda_min") {
        return ErrorAxis::LambdaMin;
    }
    throw std::invalid_argument("unknown error axis: " + std::string(name));
}

const char* error_axis_name(ErrorAxis axis) {
    switch (axis) {
        case ErrorAxis::P:
            return "p";
        case ErrorAxis::Theta:
            return "theta";
        case ErrorAxis::LambdaMin:
            return "lambda_min";
    }
    return "unknown";
}

Histogram error_distribution(const std::vector<ErrorRecord>& errors, const Dataset& test_data,
                             ErrorAxis axis, size_t bins) {
    if (bins < 1) {
        throw std::invalid_argument("error_distribution: bins must be >= 1");
    }
    if (test_data.records.empty()) {
        throw std::invalid_argument("error_distribution: empty test split");
    }
    double lo = axis_value(test_data.records.front(), axis);
    double hi = lo;
    for (const StateRecord& rec : test_data.records) {
        const double v = axis_value(rec, axis);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == lo) {
        hi = lo + 1.0;
    }
    Histogram h;
    h.axis = axis;
    h.edges.resize(bins + 1);
    for (size_t k = 0; k <= bins; ++k) {
        h.edges[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
    }
    h.errors.assign(bins, 0);
    h.totals.assign(bins, 0);
    auto bin_of = [&](double v) {
        const double f = (v - lo) / (hi - lo) * static_cast<double>(bins);
        const auto k = static_cast<size_t>(std::max(0.0, std::min(f, static_cast<double>(bins - 1))));
        return k;
    };
    for (const StateRecord& rec : test_data.records) {
        ++h.totals[bin_of(axis_value(rec, axis))];
    }
    for (const ErrorRecord& rec : errors) {
        ++h.errors[bin_of(axis_value(rec, axis))];
    }
    return h;
}

std::vector<std::array<double, 8>> extract_operators(const ModelParams& params) {
    std::vector<std::array<double, 8>> rows;
    for (const ConvPath& path : params.paths) {
        for (const PauliKernel& k1 : path.layer2) {    // subsystem (1)
            for (const PauliKernel& k2 : path.layer1) {  // subsystem (2)
                if (k1.fixed_identity && k2.fixed_identity) {
                    continue;  // the constant-1 combination
                }
                rows.push_back({k1.cx, k1.cy, k1.cz, k1.ci, k2.cx, k2.cy, k2.cz, k2.ci});
            }
        }
    }
    return rows;
}

ModelParams rebuild_from_operators(const ModelParams& reference,
                                   const std::vector<std::array<double, 8>>& rows) {
    ModelParams rebuilt = reference;
    size_t at = 0;
    for (ConvPath& path : rebuilt.paths) {
        for (PauliKernel& k1 : path.layer2) {
            for (PauliKernel& k2 : path.layer1) {
                if (k1.fixed_identity && k2.fixed_identity) {
                    continue;
                }
                if (at >= rows.size()) {
                    throw std::invalid_argument("rebuild_from_operators: too few rows");
                }
                const auto& r = rows[at++];
                k1.set_coeffs({r[0], r[1], r[2], r[3]});
                k2.set_coeffs({r[4], r[5], r[6], r[7]});
            }
        }
    }
    if (at != rows.size()) {
        throw std::invalid_argument("rebuild_from_operators: too many rows");
    }
    return rebuilt;
}

ModelParams round_kernels(const ModelParams& params, int decimals) {
    if (decimals < 0 || decimals > 17) {
        throw std::invalid_argument("round_kernels: decimals out of range");
    }
    const double scale = std::pow(10.0, decimals);
    ModelParams rounded = params;
    auto round_kernel = [&](PauliKernel& k) {
        if (k.fixed_identity) {
            return;
        }
        auto c = k.coeffs();
        for (double& v : c) {
            v = std::round(v * scale) / scale;
        }
        k.set_coeffs(c);
    };
    for (ConvPath& path : rounded.paths) {
        for (PauliKernel& k : path.layer1) {
            round_kernel(k);
        }
        for (PauliKernel& k : path.layer2) {
            round_kernel(k);
        }
    }
    return rounded;
}

RoundRetest round_and_retest(const ModelParams& params, const Dataset& test_data, int decimals) {
    RoundRetest rr;
    rr.original_accuracy = evaluate(params, test_data).accuracy;
    rr.rounded_accuracy = evaluate(round_kernels(params, decimals), test_data).accuracy;
    return rr;
}

void write_curve_csv(const AccuracyCurve& curve, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "m,mean_accuracy,std_accuracy,seeds\n";
    for (const CurvePoint& p : curve.points) {
        out << p.operator_count << ',' << format_g17(p.mean_accuracy) << ','
            << format_g17(p.std_accuracy) << ',';
        for (size_t k = 0; k < p.seeds.size(); ++k) {
            out << (k ? ";" : "") << p.seeds[k];
        }
        out << '\n';
    }
}

void write_histogram_csv(const Histogram& hist, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "bin_lo,bin_hi,errors,total\n";
    for (size_t k = 0; k + 1 < hist.edges.size(); ++k) {
        out << format_g17(hist.edges[k]) << ',' << format_g17(hist.edges[k + 1]) << ','
            << hist.errors[k] << ',' << hist.totals[k] << '\n';
    }
}

void write_operators_csv(const std::vector<std::array<double, 8>>& rows,
                         const std::string& path) {
    std::ofstream out = open_out(path);
    out << "X1,Y1,Z1,I1,X2,Y2,Z2,I2\n";
    for (const auto& r : rows) {
        for (size_t k = 0; k < 8; ++k) {
            out << (k ? "," : "") << format_g17(r[k]);
        }
        out << '\n';
    }
}

void write_round_retest_csv(const RoundRetest& rr, int decimals, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "decimals,original_accuracy,rounded_accuracy\n";
    out << decimals << ',' << format_g17(rr.original_accuracy) << ','
        << format_g17(rr.rounded_accuracy) << '\n';
}

}  // namespace bcnn
