#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flowfn/param_vector.hpp"
#include "flowfn/types.hpp"

namespace flowfn {

using NodeId = std::int32_t;

// Reverse-mode tape over vector-valued intermediates. Trainable parameters
// live in a ParamVector; affine nodes reference its segments, and backward()
// returns a gradient laid out like the flat parameter array.
//
// Forward values are computed eagerly as nodes are recorded, with the same
// elementwise kernels used by the plain (tape-free) evaluation paths, so the
// two routes agree bitwise.
class Tape {
 public:
  explicit Tape(const ParamVector& params) : params_(&params) {}

  // Drops all nodes but keeps allocated capacity.
  void clear() { nodes_.clear(); }
  std::size_t node_count() const { return nodes_.size(); }

  NodeId constant(Vector v);
  // W x + b. Pass seg_b = -1 for no bias.
  NodeId affine(int seg_w, NodeId x, int seg_b);
  // W0 x0 + W1 x1 + b (one fused node keeps LSTM gate math compact).
  NodeId affine2(int seg_w0, NodeId x0, int seg_w1, NodeId x1, int seg_b);
  NodeId tanh(NodeId x);
  NodeId sigmoid(NodeId x);
  NodeId hadamard(NodeId a, NodeId b);
  NodeId add(NodeId a, NodeId b);
  NodeId slice(NodeId x, Index offset, Index len);
  // (1 - tau) a + tau b. tau == 0 returns a exactly; tau == 1 returns b
  // exactly (no arithmetic on the discarded operand).
  NodeId lerp(NodeId a, NodeId b, double tau);
  // ||pred - target||^2 as a 1-vector.
  NodeId sq_error(NodeId pred, Vector target);
  // sum_i coeff_i * x_i for scalar nodes x_i; result is a 1-vector.
  NodeId weighted_sum(std::vector<std::pair<NodeId, double>> terms);

  const Vector& value(NodeId id) const { return nodes_[static_cast<std::size_t>(id)].value; }

  // Gradient of the scalar node `root` w.r.t. every parameter; linear in
  // `seed`. Throws ShapeError if `root` is not scalar-valued.
  Vector backward(NodeId root, double seed = 1.0) const;

 private:
  enum class Op : std::uint8_t {
    kConstant,
    kAffine,
    kAffine2,
    kTanh,
    kSigmoid,
    kHadamard,
    kAdd,
    kSlice,
    kLerp,
    kSqError,
    kWeightedSum,
  };

  struct Node {
    Op op;
    NodeId a = -1;
    NodeId b = -1;
    int seg_w0 = -1;
    int seg_w1 = -1;
    int seg_b = -1;
    double scalar = 0.0;  // tau for kLerp
    Index offset = 0;     // kSlice
    Vector value;
    Vector aux;                                    // kSqError target
    std::vector<std::pair<NodeId, double>> terms;  // kWeightedSum
  };

  NodeId push(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size()) - 1;
  }
  const Vector& val(NodeId id) const { return nodes_[static_cast<std::size_t>(id)].value; }

  const ParamVector* params_;
  std::vector<Node> nodes_;
};

// Elementwise kernels shared by tape and plain evaluation paths.
Vector tanh_vec(VectorRef x);
Vector sigmoid_vec(VectorRef x);
double sigmoid_scalar(double z);

}  // namespace flowfn
