#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gluq/errors.hpp"

namespace gluq {

using Shape = std::vector<std::int64_t>;

std::int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

namespace detail {

struct Node {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;  // sized lazily on first accumulation
  bool requires_grad = false;
  std::uint64_t seq = 0;  // creation order; a valid topological order
  const char* op = "leaf";
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward_fn;

  void ensure_grad() {
    if (grad.size() != data.size()) grad.assign(data.size(), 0.0);
  }
};

}  // namespace detail

/// Dense N-dimensional tensor of 64-bit floats with an implicit reverse-mode
/// differentiation graph. Copies are shallow (shared node); use clone() for a
/// deep copy.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<double> data,
                          bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  int rank() const { return static_cast<int>(node_->shape.size()); }
  std::int64_t dim(int i) const { return node_->shape[static_cast<size_t>(i)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(node_->data.size()); }
  bool requires_grad() const { return node_->requires_grad; }
  const char* op() const { return node_->op; }

  std::span<const double> data() const { return node_->data; }
  /// Direct mutation is only meaningful for leaf tensors (parameters,
  /// buffers); mutating an interior graph node invalidates its history.
  std::span<double> mutable_data() { return node_->data; }

  double item() const;

  std::span<const double> grad() const;
  Tensor grad_tensor() const;
  void zero_grad();

  /// Reverse-mode sweep from this scalar node. Visits reachable nodes in
  /// reverse topological order exactly once; gradients of multiply-used
  /// tensors accumulate by summation.
  void backward() const;

  /// Data-only copy detached from the graph.
  Tensor detach() const;
  /// Deep copy (leaf; preserves requires_grad).
  Tensor clone() const;

  detail::Node* node() const { return node_.get(); }
  std::shared_ptr<detail::Node> node_ptr() const { return node_; }

 private:
  explicit Tensor(std::shared_ptr<detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<detail::Node> node_;
  friend Tensor make_op_tensor(const char* op, Shape shape,
                               std::vector<double> data,
                               std::vector<Tensor> parents,
                               std::function<void(detail::Node&)> backward);
};

/// True while autograd recording is enabled on this thread.
bool grad_enabled();

/// RAII guard disabling graph construction (inference / sampling paths).
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

// ---------------------------------------------------------------------------
// Primitives. Every function validates input shapes, checks the output for
// non-finite values, and registers a backward rule when recording is enabled
// and any input requires gradients.
// ---------------------------------------------------------------------------

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double c);
Tensor add_scalar(const Tensor& a, double c);
Tensor relu(const Tensor& a);
Tensor square(const Tensor& a);
Tensor log(const Tensor& a);
Tensor reciprocal(const Tensor& a);
/// Sum of absolute values, reduced to a rank-0 scalar.
Tensor abs_sum(const Tensor& a);
Tensor sum(const Tensor& a);
Tensor mean(const Tensor& a);
Tensor reshape(const Tensor& a, Shape new_shape);
Tensor concat(const std::vector<Tensor>& parts, int axis);

/// x: (N, d_in), w: (d_out, d_in), b: (d_out) or undefined.
Tensor fully_connected(const Tensor& x, const Tensor& w, const Tensor& b);

/// Stride-1 convolution with zero "same" padding; x: (N, C, H, W),
/// w: (O, C, kh, kw) with odd kh/kw, b: (O) or undefined.
Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b);

/// Transposed convolution; x: (N, C, H, W), w: (C, O, kh, kw), stride s,
/// output (N, O, (H-1)s+kh, (W-1)s+kw).
Tensor conv_transpose2d(const Tensor& x, const Tensor& w, const Tensor& b,
                        int stride);

/// 2x2 max pooling with stride 2; odd trailing row/column dropped (floor).
Tensor maxpool2d(const Tensor& x);

/// Bilinear resize to an exact target extent (endpoint-aligned sampling).
Tensor upsample_bilinear(const Tensor& x, std::int64_t out_h, std::int64_t out_w);

/// Per-channel batch normalization state (running averages are buffers, not
/// graph parameters).
struct BatchNormState {
  std::vector<double> running_mean;
  std::vector<double> running_var;  // biased estimate, matching train mode
  double momentum = 0.1;
  double eps = 1e-5;
  bool initialized = false;

  void init(std::int64_t channels) {
    running_mean.assign(static_cast<size_t>(channels), 0.0);
    running_var.assign(static_cast<size_t>(channels), 1.0);
    initialized = true;
  }
};

/// Train mode normalizes with batch statistics (batch size >= 2 required) and
/// updates the running averages; eval mode uses the stored running averages.
Tensor batchnorm2d(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                   BatchNormState& state, bool train);

/// Variance clamp applied by product-of-Gaussians mixing primitives.
struct PogClamp {
  double var_min;
  double var_max;
};

/// Product-of-Gaussians mean per batch row: for sample i the weight row
/// table[idx[i]] mixes Gaussians (mu[i,:], var[i,:]). Differentiable in the
/// table (selected rows), mu and var.
Tensor pog_mean(const Tensor& table, const Tensor& mu, const Tensor& var,
                const std::vector<std::int64_t>& idx, const PogClamp& clamp);

/// Product-of-Gaussians variance per batch row (clamped).
Tensor pog_var(const Tensor& table, const Tensor& var,
               const std::vector<std::int64_t>& idx, const PogClamp& clamp);

// ---------------------------------------------------------------------------
// Uniform dispatch over the primitive set (used by the bindings and the
// per-primitive gradient-check harness).
// ---------------------------------------------------------------------------

enum class Primitive {
  kAdd,
  kSub,
  kMul,
  kRelu,
  kSquare,
  kLog,
  kReciprocal,
  kAbsSum,
  kSum,
  kMean,
  kConcat,
  kFullyConnected,
  kConv2d,
  kConvTranspose2d,
  kMaxPool2d,
  kUpsampleBilinear,
  kBatchNorm2d,
  kPogMean,
  kPogVar,
};

struct PrimitiveAttrs {
  int axis = 1;
  int stride = 2;
  std::int64_t out_h = 0;
  std::int64_t out_w = 0;
  bool train = true;
  BatchNormState* bn_state = nullptr;
  std::vector<std::int64_t> rows;
  PogClamp clamp{0.0, std::numeric_limits<double>::infinity()};
};

Tensor apply_primitive(Primitive kind, const std::vector<Tensor>& inputs,
                       const PrimitiveAttrs& attrs);

const char* primitive_name(Primitive kind);

}  // namespace gluq
