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

#ifndef BCNN_MODEL_HPP
#define BCNN_MODEL_HPP

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "complex_matrix.hpp"
#include "pauli.hpp"

namespace bcnn {

// Branching structure: m independent convolutional paths, each with n1
// kernels acting on subsystem (2) (first conv layer) and n2 kernels acting on
// subsystem (1) (second conv layer), feeding a fully connected head whose
// node-layer widths run from alpha = m*n1*n2 down to 1.
struct Architecture {
    size_t m = 1;
    size_t n1 = 1;
    size_t n2 = 1;
    std::vector<size_t> fc_widths;  // starts at alpha(), ends at 1
    bool fix_identity = false;      // pin kernel 0 of each conv layer to I

    size_t alpha() const { return m * n1 * n2; }
    size_t path_width() const { return n1 * n2; }

    static Architecture make(size_t m, size_t n1, size_t n2, const std::vector<size_t>& hidden,
                             bool fix_identity);
    void validate() const;
    std::string describe() const;
};

struct ConvPath {
    std::vector<PauliKernel> layer1;  // n1 kernels, subsystem (2)
    std::vector<PauliKernel> layer2;  // n2 kernels, subsystem (1)
};

struct ModelParams {
    Architecture arch;
    std::vector<ConvPath> paths;
    std::vector<Eigen::MatrixXd> fc_weights;  // [t]: widths[t] x widths[t+1]
    std::vector<Eigen::VectorXd> fc_biases;   // [t]: widths[t+1]; empty for t = 0

    size_t trainable_count() const;
};

// Kernels start as random Hermitian matrices (Pauli coefficients uniform on
// [-1,1]); fully connected weights are uniform on +-sqrt(6/(fan_in+fan_out)),
// biases zero. The first FC layer has no bias.
ModelParams init_params(const Architecture& arch, uint64_t seed);

// One bias-free, activation-free convolution with stride equal to the kernel
// dimension: out(i,j) = sum_{k,l} input(i*d+k, j*d+l) * kernel(k,l), which
// equals tr_(last site)(input . (I (x) kernel^T)). Passing the transpose M^T
// of an observable M as the kernel therefore yields tr_(last)(input . (I (x) M)).
ComplexMatrix conv_layer(const ComplexMatrix& input, const ComplexMatrix& kernel,
                         size_t kernel_dim);

// Re tr(rho . m); the imaginary residue must stay below 1e-10.
double global_expectation(const ComplexMatrix& rho, const ComplexMatrix& m);

// Expectation of factors[0] (x) ... (x) factors[N-1] via N stacked
// convolutions, contracting from the last factor to the first.
double multi_site_expectation(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& factors,
                              const std::vector<size_t>& dims);

// All n1*n2 combination expectations of one path, entry (j*n1 + i) =
// <M_j^(1) (x) M_i^(2)> with the layer-1 index i fastest. Computed with two
// conv_layer calls per combination.
Eigen::VectorXd path_forward(const ComplexMatrix& rho, const ConvPath& path);

// Concatenated path outputs (conv route), length alpha.
Eigen::VectorXd model_features(const ComplexMatrix& rho, const ModelParams& params);

// Same features via the Pauli-correlation shortcut: every combination
// expectation is the bilinear form c1^T T c2. Used in the training/eval hot
// path; agrees with the conv route to ~1e-15.
Eigen::VectorXd features_from_tensor(const Eigen::Matrix4d& tensor, const ModelParams& params);

double sigmoid(double z);

// Head on a feature vector: first FC layer linear (no bias), intermediate
// layers ReLU with bias, final layer sigmoid with bias.
double head_forward(const Eigen::VectorXd& features, const ModelParams& params);

// Probability that rho is entangled, in (0,1).
double model_forward(const ComplexMatrix& rho, const ModelParams& params);

// -[y ln p + (1-y) ln(1-p)] with p clamped to [1e-12, 1-1e-12].
double bce_loss(double prediction, int label);

struct Gradients {
    std::vector<std::vector<std::array<double, 4>>> layer1;  // [path][kernel][axis]
    std::vector<std::vector<std::array<double, 4>>> layer2;
    std::vector<Eigen::MatrixXd> fc_weights;
    std::vector<Eigen::VectorXd> fc_biases;

    static Gradients zero_like(const ModelParams& params);
};

// Batched head evaluation with cached activations for backprop. Forward takes
// a B x alpha feature matrix; backward distributes the mean-reduced BCE error
// and returns dL/dfeatures while accumulating FC gradients.
class HeadCache {
  public:
    Eigen::VectorXd forward(const ModelParams& params, const Eigen::MatrixXd& feats);
    Eigen::MatrixXd backward(const ModelParams& params, const std::vector<int>& labels,
                             Gradients& grads);
    const Eigen::VectorXd& probs() const { return probs_; }

  private:
    std::vector<Eigen::MatrixXd> x_;  // activation inputs per weight layer
    std::vector<Eigen::MatrixXd> z_;  // preactivations per weight layer
    Eigen::VectorXd probs_;
};

// Folds dL/dfeatures into Pauli-coefficient gradients; the gradient of
// <M_j^(1) (x) M_i^(2)> w.r.t. a coefficient of one factor is the expectation
// with that factor replaced by the corresponding Pauli matrix. Fixed-identity
// kernels receive zero gradient.
void accumulate_kernel_gradients(const ModelParams& params,
                                 const std::vector<Eigen::Matrix4d>& tensors,
                                 const Eigen::MatrixXd& dfeats, Gradients& grads);

// Loss gradient for a single labeled state; matches central finite
// differences of bce_loss(model_forward(.)).
Gradients model_backward(const ComplexMatrix& rho, const ModelParams& params, int label);

// Kernel gradient of one convolutional layer computed from the layer input
// o_prev and the backpropagated error delta:
//   g(k,l) = sum_{i,j} o_prev(i*d_kernel+k, j*d_kernel+l) * delta(i,j).
// Exists to validate that Hermitian (o_prev, delta) always yield a Hermitian
// kernel gradient; the production gradient path works in Pauli coefficients.
// Throws if the output drifts from Hermitian by more than 1e-10.
ComplexMatrix eq7_kernel_gradient(const ComplexMatrix& o_prev, const ComplexMatrix& delta,
                                  size_t d_out, size_t d_kernel);

}  // namespace bcnn

#endif
