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

#include "model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rng.hpp"

namespace bcnn {

namespace {

constexpr double kClampEps = 1e-12;

// Stream tags for init_params; distinct salts keep the kernel and FC draws
// independent of each other.
constexpr uint64_t kKernelStream = 0x6b65726e;  // "kern"
constexpr uint64_t kFcStream = 0x66637774;      // "fcwt"

Eigen::Vector4d coeff_vec(const PauliKernel& k) {
    return Eigen::Vector4d(k.cx, k.cy, k.cz, k.ci);
}

}  // namespace

Architecture Architecture::make(size_t m, size_t n1, size_t n2, const std::vector<size_t>& hidden,
                                bool fix_identity) {
    Architecture a;
    a.m = m;
    a.n1 = n1;
    a.n2 = n2;
    a.fix_identity = fix_identity;
    a.fc_widths.push_back(m * n1 * n2);
    for (size_t h : hidden) {
        a.fc_widths.push_back(h);
    }
    a.fc_widths.push_back(1);
    a.validate();
    return a;
}

void Architecture::validate() const {
    if (m < 1 || n1 < 1 || n2 < 1) {
        throw std::invalid_argument("architecture: m, n1, n2 must be >= 1");
    }
    if (fc_widths.size() < 2 || fc_widths.front() != alpha() || fc_widths.back() != 1) {
        throw std::invalid_argument(
            "architecture: fc widths must run from alpha = m*n1*n2 down to 1");
    }
    for (size_t w : fc_widths) {
        if (w < 1) {
            throw std::invalid_argument("architecture: fc widths must be >= 1");
        }
    }
}

std::string Architecture::describe() const {
    std::ostringstream os;
    os << "(m=" << m << ";n1=" << n1 << ",n2=" << n2 << ") fc=";
    for (size_t t = 0; t < fc_widths.size(); ++t) {
        os << (t ? "," : "") << fc_widths[t];
    }
    if (fix_identity) {
        os << " fix_identity";
    }
    return os.str();
}

size_t ModelParams::trainable_count() const {
    size_t n = 0;
    for (const ConvPath& path : paths) {
        for (const PauliKernel& k : path.layer1) {
            n += k.fixed_identity ? 0 : 4;
        }
        for (const PauliKernel& k : path.layer2) {
            n += k.fixed_identity ? 0 : 4;
        }
    }
    for (const Eigen::MatrixXd& w : fc_weights) {
        n += static_cast<size_t>(w.size());
    }
    for (const Eigen::VectorXd& b : fc_biases) {
        n += static_cast<size_t>(b.size());
    }
    return n;
}

ModelParams init_params(const Architecture& arch, uint64_t seed) {
    arch.validate();
    ModelParams params;
    params.arch = arch;

    Prng krng = Prng::derived(seed, kKernelStream);
    auto draw_kernel = [&](size_t index) {
        if (arch.fix_identity && index == 0) {
            return PauliKernel::identity(true);
        }
        PauliKernel k;
        k.cx = krng.uniform(-1.0, 1.0);
        k.cy = krng.uniform(-1.0, 1.0);
        k.cz = krng.uniform(-1.0, 1.0);
        k.ci = krng.uniform(-1.0, 1.0);
        return k;
    };
    params.paths.resize(arch.m);
    for (ConvPath& path : params.paths) {
        for (size_t i = 0; i < arch.n1; ++i) {
            path.layer1.push_back(draw_kernel(i));
        }
        for (size_t j = 0; j < arch.n2; ++j) {
            path.layer2.push_back(draw_kernel(j));
        }
    }

    Prng frng = Prng::derived(seed, kFcStream);
    const size_t layers = arch.fc_widths.size() - 1;
    params.fc_weights.resize(layers);
    params.fc_biases.resize(layers);
    for (size_t t = 0; t < layers; ++t) {
        const size_t rows = arch.fc_widths[t];
        const size_t cols = arch.fc_widths[t + 1];
        const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
        Eigen::MatrixXd w(rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < cols; ++c) {
                w(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    frng.uniform(-limit, limit);
            }
        }
        params.fc_weights[t] = std::move(w);
        params.fc_biases[t] =
            t == 0 ? Eigen::VectorXd() : Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols));
    }
    return params;
}

ComplexMatrix conv_layer(const ComplexMatrix& input, const ComplexMatrix& kernel,
                         size_t kernel_dim) {
    if (kernel.dim() != kernel_dim || kernel_dim == 0 || input.dim() % kernel_dim != 0) {
        throw std::invalid_argument("conv_layer: dimension mismatch");
    }
    if (kernel.hermiticity_error() > 1e-9) {
        throw std::invalid_argument("conv_layer: kernel is not Hermitian");
    }
    const size_t out_dim = input.dim() / kernel_dim;
    ComplexMatrix out(out_dim);
    for (size_t i = 0; i < out_dim; ++i) {
        for (size_t j = 0; j < out_dim; ++j) {
            cdouble s{0.0, 0.0};
            for (size_t k = 0; k < kernel_dim; ++k) {
                for (size_t l = 0; l < kernel_dim; ++l) {
                    s += input(i * kernel_dim + k, j * kernel_dim + l) * kernel(k, l);
                }
            }
            out(i, j) = s;
        }
    }
    return out;
}

double global_expectation(const ComplexMatrix& rho, const ComplexMatrix& m) {
    if (rho.dim() != m.dim()) {
        throw std::invalid_argument("global_expectation: dimension mismatch");
    }
    if (rho.hermiticity_error() > 1e-9 || m.hermiticity_error() > 1e-9) {
        throw std::invalid_argument("global_expectation: inputs must be Hermitian");
    }
    cdouble t = (rho * m).trace();
    if (std::abs(t.imag()) > 1e-10) {
        throw std::runtime_error("global_expectation: imaginary residue exceeds 1e-10");
    }
    return t.real();
}

double multi_site_expectation(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& factors,
                              const std::vector<size_t>& dims) {
    if (factors.size() != dims.size() || factors.empty()) {
        throw std::invalid_argument("multi_site_expectation: factors/dims mismatch");
    }
    size_t prod = 1;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (factors[k].dim() != dims[k]) {
            throw std::invalid_argument("multi_site_expectation: factor dimension mismatch");
        }
        prod *= dims[k];
    }
    if (prod != rho.dim()) {
        throw std::invalid_argument("multi_site_expectation: dims do not multiply to dim(rho)");
    }
    ComplexMatrix out = rho;
    for (size_t k = dims.size(); k-- > 0;) {
        out = conv_layer(out, factors[k].transpose(), dims[k]);
    }
    const cdouble v = out(0, 0);
    if (std::abs(v.imag()) > 1e-10) {
        throw std::runtime_error("multi_site_expectation: imaginary residue exceeds 1e-10");
    }
    return v.real();
}

Eigen::VectorXd path_forward(const ComplexMatrix& rho, const ConvPath& path) {
    const size_t n1 = path.layer1.size();
    const size_t n2 = path.layer2.size();
    Eigen::VectorXd out(static_cast<Eigen::Index>(n1 * n2));
    for (size_t i = 0; i < n1; ++i) {
        const ComplexMatrix o1 =
            conv_layer(rho, kernel_to_matrix(path.layer1[i]).transpose(), 2);
        for (size_t j = 0; j < n2; ++j) {
            const ComplexMatrix o2 =
                conv_layer(o1, kernel_to_matrix(path.layer2[j]).transpose(), 2);
            const cdouble v = o2(0, 0);
            if (std::abs(v.imag()) > 1e-10) {
                throw std::runtime_error("path_forward: imaginary residue exceeds 1e-10");
            }
            out(static_cast<Eigen::Index>(j * n1 + i)) = v.real();
        }
    }
    return out;
}

Eigen::VectorXd model_features(const ComplexMatrix& rho, const ModelParams& params) {
    Eigen::VectorXd feats(static_cast<Eigen::Index>(params.arch.alpha()));
    Eigen::Index offset = 0;
    for (const ConvPath& path : params.paths) {
        Eigen::VectorXd f = path_forward(rho, path);
        feats.segment(offset, f.size()) = f;
        offset += f.size();
    }
    return feats;
}

Eigen::VectorXd features_from_tensor(const Eigen::Matrix4d& tensor, const ModelParams& params) {
    const Architecture& arch = params.arch;
    Eigen::VectorXd feats(static_cast<Eigen::Index>(arch.alpha()));
    Eigen::Index offset = 0;
    for (const ConvPath& path : params.paths) {
        for (size_t i = 0; i < arch.n1; ++i) {
            const Eigen::Vector4d v = tensor * coeff_vec(path.layer1[i]);
            for (size_t j = 0; j < arch.n2; ++j) {
                feats(offset + static_cast<Eigen::Index>(j * arch.n1 + i)) =
                    coeff_vec(path.layer2[j]).dot(v);
            }
        }
        offset += static_cast<Eigen::Index>(arch.path_width());
    }
    return feats;
}

double sigmoid(double z) {
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double head_forward(const Eigen::VectorXd& features, const ModelParams& params) {
    HeadCache cache;
    Eigen::MatrixXd feats(1, features.size());
    feats.row(0) = features.transpose();
    return cache.forward(params, feats)(0);
}

double model_forward(const ComplexMatrix& rho, const ModelParams& params) {
    return head_forward(model_features(rho, params), params);
}

double bce_loss(double prediction, int label) {
    const double p = std::min(std::max(prediction, kClampEps), 1.0 - kClampEps);
    return label ? -std::log(p) : -std::log(1.0 - p);
}

Gradients Gradients::zero_like(const ModelParams& params) {
    Gradients g;
    g.layer1.resize(params.paths.size());
    g.layer2.resize(params.paths.size());
    for (size_t q = 0; q < params.paths.size(); ++q) {
        g.layer1[q].assign(params.paths[q].layer1.size(), {0.0, 0.0, 0.0, 0.0});
        g.layer2[q].assign(params.paths[q].layer2.size(), {0.0, 0.0, 0.0, 0.0});
    }
    g.fc_weights.reserve(params.fc_weights.size());
    g.fc_biases.reserve(params.fc_biases.size());
    for (const Eigen::MatrixXd& w : params.fc_weights) {
        g.fc_weights.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
    }
    for (const Eigen::VectorXd& b : params.fc_biases) {
        g.fc_biases.push_back(Eigen::VectorXd::Zero(b.size()));
    }
    return g;
}

Eigen::VectorXd HeadCache::forward(const ModelParams& params, const Eigen::MatrixXd& feats) {
    const size_t layers = params.fc_weights.size();
    if (feats.cols() != params.fc_weights.front().rows()) {
        throw std::invalid_argument("head forward: feature width mismatch");
    }
    x_.assign(layers, Eigen::MatrixXd());
    z_.assign(layers, Eigen::MatrixXd());
    x_[0] = feats;
    for (size_t t = 0; t < layers; ++t) {
        z_[t].noalias() = x_[t] * params.fc_weights[t];
        if (t > 0) {
            z_[t].rowwise() += params.fc_biases[t].transpose();
        }
        if (t + 1 < layers) {
            // First layer is linear; later hidden layers are ReLU.
            x_[t + 1] = t == 0 ? z_[t] : z_[t].cwiseMax(0.0);
        }
    }
    probs_ = z_.back().col(0).unaryExpr([](double v) { return sigmoid(v); });
    return probs_;
}

Eigen::MatrixXd HeadCache::backward(const ModelParams& params, const std::vector<int>& labels,
                                    Gradients& grads) {
    const size_t layers = params.fc_weights.size();
    const Eigen::Index batch = probs_.size();
    if (static_cast<Eigen::Index>(labels.size()) != batch) {
        throw std::invalid_argument("head backward: label count mismatch");
    }
    Eigen::MatrixXd g(batch, 1);
    for (Eigen::Index s = 0; s < batch; ++s) {
        const double p = probs_(s);
        // Inside the clamp band the loss is constant in p, so no error flows.
        g(s, 0) = (p <= kClampEps || p >= 1.0 - kClampEps)
                      ? 0.0
                      : (p - static_cast<double>(labels[s])) / static_cast<double>(batch);
    }
    for (size_t t = layers; t-- > 0;) {
        grads.fc_weights[t].noalias() += x_[t].transpose() * g;
        if (t > 0) {
            grads.fc_biases[t] += g.colwise().sum().transpose();
        }
        Eigen::MatrixXd gprev = g * params.fc_weights[t].transpose();
        if (t == 0) {
            return gprev;
        }
        if (t >= 2) {
            // x_[t] = relu(z_[t-1]); the first layer (t == 1) is linear.
            gprev = gprev.cwiseProduct(
                (z_[t - 1].array() > 0.0).cast<double>().matrix());
        }
        g = std::move(gprev);
    }
    throw std::logic_error("head backward: unreachable");
}

void accumulate_kernel_gradients(const ModelParams& params,
                                 const std::vector<Eigen::Matrix4d>& tensors,
                                 const Eigen::MatrixXd& dfeats, Gradients& grads) {
    const Architecture& arch = params.arch;
    if (dfeats.rows() != static_cast<Eigen::Index>(tensors.size()) ||
        dfeats.cols() != static_cast<Eigen::Index>(arch.alpha())) {
        throw std::invalid_argument("accumulate_kernel_gradients: shape mismatch");
    }
    for (size_t s = 0; s < tensors.size(); ++s) {
        const Eigen::Matrix4d& t = tensors[s];
        Eigen::Index offset = 0;
        for (size_t q = 0; q < params.paths.size(); ++q) {
            const ConvPath& path = params.paths[q];
            for (size_t i = 0; i < arch.n1; ++i) {
                const Eigen::Vector4d v = t * coeff_vec(path.layer1[i]);
                for (size_t j = 0; j < arch.n2; ++j) {
                    const double df =
                        dfeats(static_cast<Eigen::Index>(s),
                               offset + static_cast<Eigen::Index>(j * arch.n1 + i));
                    if (df == 0.0) {
                        continue;
                    }
                    const Eigen::Vector4d w = t.transpose() * coeff_vec(path.layer2[j]);
                    for (int a = 0; a < 4; ++a) {
                        grads.layer2[q][j][a] += df * v(a);
                        grads.layer1[q][i][a] += df * w(a);
                    }
                }
            }
            offset += static_cast<Eigen::Index>(arch.path_width());
        }
    }
    // Fixed-identity kernels stay put.
    for (size_t q = 0; q < params.paths.size(); ++q) {
        for (size_t i = 0; i < params.paths[q].layer1.size(); ++i) {
            if (params.paths[q].layer1[i].fixed_identity) {
                grads.layer1[q][i] = {0.0, 0.0, 0.0, 0.0};
            }
        }
        for (size_t j = 0; j < params.paths[q].layer2.size(); ++j) {
            if (params.paths[q].layer2[j].fixed_identity) {
                grads.layer2[q][j] = {0.0, 0.0, 0.0, 0.0};
            }
        }
    }
}

Gradients model_backward(const ComplexMatrix& rho, const ModelParams& params, int label) {
    Gradients grads = Gradients::zero_like(params);
    const Eigen::Matrix4d tensor = pauli_tensor(rho);
    Eigen::MatrixXd feats(1, static_cast<Eigen::Index>(params.arch.alpha()));
    feats.row(0) = features_from_tensor(tensor, params).transpose();
    HeadCache cache;
    cache.forward(params, feats);
    const Eigen::MatrixXd dfeats = cache.backward(params, {label}, grads);
    accumulate_kernel_gradients(params, {tensor}, dfeats, grads);
    return grads;
}

ComplexMatrix eq7_kernel_gradient(const ComplexMatrix& o_prev, const ComplexMatrix& delta,
                                  size_t d_out, size_t d_kernel) {
    if (o_prev.dim() != d_out * d_kernel || delta.dim() != d_out) {
        throw std::invalid_argument("eq7_kernel_gradient: dimension mismatch");
    }
    if (o_prev.hermiticity_error() > 1e-9 || delta.hermiticity_error() > 1e-9) {
        throw std::invalid_argument("eq7_kernel_gradient: inputs must be Hermitian");
    }
    ComplexMatrix g(d_kernel);
    for (size_t k = 0; k < d_kernel; ++k) {
        for (size_t l = 0; l < d_kernel; ++l) {
            cdouble s{0.0, 0.0};
            for (size_t i = 0; i < d_out; ++i) {
                for (size_t j = 0; j < d_out; ++j) {
                    s += o_prev(i * d_kernel + k, j * d_kernel + l) * delta(i, j);
                }
            }
            g(k, l) = s;
        }
    }
    if (g.hermiticity_error() > 1e-10) {
        throw std::runtime_error("eq7_kernel_gradient: output drifted from Hermitian");
    }
    return g;
}

}  // namespace bcnn
