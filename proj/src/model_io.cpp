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

#include "model_io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "text_format.hpp"

namespace bcnn {

namespace {

constexpr const char* kMagic = "bcnn-model v1";

[[noreturn]] void fail(const std::string& path, size_t line_no, const std::string& what) {
    throw IoError(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

void write_model_file(const SavedModel& model, const std::string& path) {
    const ModelParams& p = model.params;
    p.arch.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open model file for writing: " + path);
    }
    out << kMagic << '\n';
    out << "family " << family_name(model.family) << '\n';
    out << "arch m=" << p.arch.m << " n1=" << p.arch.n1 << " n2=" << p.arch.n2
        << " fix_identity=" << (p.arch.fix_identity ? 1 : 0) << '\n';
    out << "widths";
    for (size_t w : p.arch.fc_widths) {
        out << ' ' << w;
    }
    out << '\n';
    for (size_t q = 0; q < p.paths.size(); ++q) {
        for (int layer = 1; layer <= 2; ++layer) {
            const auto& kernels = layer == 1 ? p.paths[q].layer1 : p.paths[q].layer2;
            for (size_t k = 0; k < kernels.size(); ++k) {
                const PauliKernel& kn = kernels[k];
                out << "kernel " << q << ' ' << layer << ' ' << k << ' '
                    << (kn.fixed_identity ? 1 : 0) << ' ' << format_g17(kn.cx) << ' '
                    << format_g17(kn.cy) << ' ' << format_g17(kn.cz) << ' ' << format_g17(kn.ci)
                    << '\n';
            }
        }
    }
    for (size_t t = 0; t < p.fc_weights.size(); ++t) {
        const Eigen::MatrixXd& w = p.fc_weights[t];
        out << "weight " << t << ' ' << w.rows() << ' ' << w.cols() << '\n';
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            for (Eigen::Index c = 0; c < w.cols(); ++c) {
                out << (c ? " " : "") << format_g17(w(r, c));
            }
            out << '\n';
        }
        const Eigen::VectorXd& b = p.fc_biases[t];
        if (b.size() > 0) {
            out << "bias " << t << ' ' << b.size() << '\n';
            for (Eigen::Index i = 0; i < b.size(); ++i) {
                out << (i ? " " : "") << format_g17(b(i));
            }
            out << '\n';
        }
    }
    out << "end\n";
    if (!out) {
        throw IoError("write failure on model file: " + path);
    }
}

SavedModel read_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open model file: " + path);
    }
    size_t line_no = 0;
    std::string line;
    auto next_line = [&]() -> std::string& {
        if (!std::getline(in, line)) {
            fail(path, line_no, "unexpected end of file");
        }
        ++line_no;
        while (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        return line;
    };

    if (next_line() != kMagic) {
        fail(path, line_no, "not a model file (bad version line)");
    }

    SavedModel model;
    {
        std::istringstream is(next_line());
        std::string tag, fam;
        is >> tag >> fam;
        auto f = family_from_name(fam);
        if (tag != "family" || !f) {
            fail(path, line_no, "bad family line");
        }
        model.family = *f;
    }

    Architecture arch;
    {
        std::istringstream is(next_line());
        std::string tag;
        is >> tag;
        if (tag != "arch") {
            fail(path, line_no, "bad arch line");
        }
        std::string kv;
        int fix = 0;
        int seen = 0;
        while (is >> kv) {
            const size_t eq = kv.find('=');
            if (eq == std::string::npos) {
                fail(path, line_no, "bad arch token: " + kv);
            }
            uint64_t v;
            if (!parse_u64(kv.substr(eq + 1), v)) {
                fail(path, line_no, "bad arch value: " + kv);
            }
            const std::string key = kv.substr(0, eq);
            if (key == "m") {
                arch.m = v;
            } else if (key == "n1") {
                arch.n1 = v;
            } else if (key == "n2") {
                arch.n2 = v;
            } else if (key == "fix_identity") {
                fix = static_cast<int>(v);
            } else {
                fail(path, line_no, "unknown arch key: " + key);
            }
            ++seen;
        }
        if (seen != 4) {
            fail(path, line_no, "arch line must carry m, n1, n2, fix_identity");
        }
        arch.fix_identity = fix != 0;
    }
    {
        std::istringstream is(next_line());
        std::string tag;
        is >> tag;
        if (tag != "widths") {
            fail(path, line_no, "bad widths line");
        }
        size_t w;
        while (is >> w) {
            arch.fc_widths.push_back(w);
        }
    }
    try {
        arch.validate();
    } catch (const std::exception& e) {
        fail(path, line_no, e.what());
    }

    ModelParams params;
    params.arch = arch;
    params.paths.assign(arch.m, ConvPath{});
    for (ConvPath& pth : params.paths) {
        pth.layer1.assign(arch.n1, PauliKernel{});
        pth.layer2.assign(arch.n2, PauliKernel{});
    }
    const size_t kernel_lines = arch.m * (arch.n1 + arch.n2);
    for (size_t k = 0; k < kernel_lines; ++k) {
        std::istringstream is(next_line());
        std::string tag;
        size_t q, idx;
        int layer, fixed;
        double cx, cy, cz, ci;
        is >> tag >> q >> layer >> idx >> fixed >> cx >> cy >> cz >> ci;
        if (!is || tag != "kernel" || q >= arch.m || (layer != 1 && layer != 2) ||
            idx >= (layer == 1 ? arch.n1 : arch.n2)) {
            fail(path, line_no, "bad kernel line");
        }
        PauliKernel kn{cx, cy, cz, ci, fixed != 0};
        if (layer == 1) {
            params.paths[q].layer1[idx] = kn;
        } else {
            params.paths[q].layer2[idx] = kn;
        }
    }

    const size_t layers = arch.fc_widths.size() - 1;
    params.fc_weights.resize(layers);
    params.fc_biases.resize(layers);
    for (size_t t = 0; t < layers; ++t) {
        {
            std::istringstream is(next_line());
            std::string tag;
            size_t tt, rows, cols;
            is >> tag >> tt >> rows >> cols;
            if (!is || tag != "weight" || tt != t || rows != arch.fc_widths[t] ||
                cols != arch.fc_widths[t + 1]) {
                fail(path, line_no, "bad weight header");
            }
            Eigen::MatrixXd w(rows, cols);
            for (size_t r = 0; r < rows; ++r) {
                std::istringstream row(next_line());
                for (size_t c = 0; c < cols; ++c) {
                    double v;
                    if (!(row >> v)) {
                        fail(path, line_no, "short weight row");
                    }
                    w(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
                }
            }
            params.fc_weights[t] = std::move(w);
        }
        if (t == 0) {
            params.fc_biases[t] = Eigen::VectorXd();
            continue;
        }
        std::istringstream is(next_line());
        std::string tag;
        size_t tt, size;
        is >> tag >> tt >> size;
        if (!is || tag != "bias" || tt != t || size != arch.fc_widths[t + 1]) {
            fail(path, line_no, "bad bias header");
        }
        Eigen::VectorXd b(size);
        std::istringstream row(next_line());
        for (size_t i = 0; i < size; ++i) {
            double v;
            if (!(row >> v)) {
                fail(path, line_no, "short bias row");
            }
            b(static_cast<Eigen::Index>(i)) = v;
        }
        params.fc_biases[t] = std::move(b);
    }
    if (next_line() != "end") {
        fail(path, line_no, "missing end marker");
    }
    model.params = std::move(params);
    return model;
}

}  // namespace bcnn
