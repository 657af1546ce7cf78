#ifndef FITL_AUTODIFF_HPP
#define FITL_AUTODIFF_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace fitl::ad {

class Tape;

/// A scalar participating in a recorded computation. Either a constant
/// (node < 0, no tape) or a node of a tape. Adjoints are read back from the
/// tape after a backward pass.
struct DiffScalar {
  static constexpr std::int32_t kConstant = -1;

  double value = 0.0;
  std::int32_t node = kConstant;
  Tape* tape = nullptr;

  DiffScalar() = default;
  DiffScalar(double v) : value(v) {}  // NOLINT: constants convert implicitly

  bool is_constant() const { return node < 0; }
  double adjoint() const;
};

/// Append-only record of scalar operations. Each node stores its parents and
/// the local partial derivatives with respect to them; backward() seeds the
/// output with adjoint 1 and accumulates in reverse topological order.
class Tape {
 public:
  DiffScalar variable(double value);

  /// Records a node with precomputed local partials. Constant parents are
  /// dropped; an all-constant edge list still creates a node so downstream
  /// code can treat the result uniformly.
  DiffScalar record(double value,
                    std::initializer_list<std::pair<DiffScalar, double>> edges);

  void backward(const DiffScalar& output);

  double adjoint_of(std::int32_t node) const;
  std::size_t size() const { return node_begin_.size() - 1; }
  void clear();

 private:
  struct Edge {
    std::int32_t parent;
    double partial;
  };
  std::vector<std::uint32_t> node_begin_{0};  // edge offsets, one per node + 1
  std::vector<Edge> edges_;
  std::vector<double> adjoints_;
};

DiffScalar operator+(const DiffScalar& x, const DiffScalar& y);
DiffScalar operator-(const DiffScalar& x, const DiffScalar& y);
DiffScalar operator-(const DiffScalar& x);
DiffScalar operator*(const DiffScalar& x, const DiffScalar& y);
DiffScalar operator/(const DiffScalar& x, const DiffScalar& y);

DiffScalar exp(const DiffScalar& x);
DiffScalar abs(const DiffScalar& x);

/// Numerically stable softplus(x | beta) = log(1 + exp(beta*x)) / beta with
/// derivative sigmoid(beta*x).
double softplus(double x, double beta);
double softplus_derivative(double x, double beta);
double sigmoid(double x);

DiffScalar softplus(const DiffScalar& x, double beta);
DiffScalar sigmoid(const DiffScalar& x);

/// min/max select the argument with the smaller/larger value; ties pick the
/// first argument. Gradients flow only into the selected input.
DiffScalar min(const DiffScalar& x, const DiffScalar& y);
DiffScalar max(const DiffScalar& x, const DiffScalar& y);

}  // namespace fitl::ad

#endif  // FITL_AUTODIFF_HPP
