#include "fitl/autodiff.hpp"

#include <cmath>
#include <stdexcept>

namespace fitl::ad {

namespace {

Tape* common_tape(const DiffScalar& x, const DiffScalar& y) {
  if (x.tape && y.tape && x.tape != y.tape)
    throw std::invalid_argument("autodiff: operands recorded on different tapes");
  return x.tape ? x.tape : y.tape;
}

DiffScalar unary(const DiffScalar& x, double value, double partial) {
  if (x.is_constant()) return DiffScalar(value);
  return x.tape->record(value, {{x, partial}});
}

DiffScalar binary(const DiffScalar& x, const DiffScalar& y, double value,
                  double dx, double dy) {
  Tape* tape = common_tape(x, y);
  if (!tape || (x.is_constant() && y.is_constant())) return DiffScalar(value);
  return tape->record(value, {{x, dx}, {y, dy}});
}

}  // namespace

double DiffScalar::adjoint() const {
  if (is_constant()) return 0.0;
  return tape->adjoint_of(node);
}

DiffScalar Tape::variable(double value) {
  return record(value, {});
}

DiffScalar Tape::record(
    double value, std::initializer_list<std::pair<DiffScalar, double>> edges) {
  for (const auto& [parent, partial] : edges) {
    if (parent.is_constant()) continue;
    if (parent.tape != this)
      throw std::invalid_argument("autodiff: parent recorded on another tape");
    edges_.push_back({parent.node, partial});
  }
  node_begin_.push_back(static_cast<std::uint32_t>(edges_.size()));
  DiffScalar out;
  out.value = value;
  out.node = static_cast<std::int32_t>(node_begin_.size()) - 2;
  out.tape = this;
  return out;
}

void Tape::backward(const DiffScalar& output) {
  if (output.is_constant() || output.tape != this ||
      output.node >= static_cast<std::int32_t>(size()))
    throw std::invalid_argument("autodiff: backward output is not on this tape");
  adjoints_.assign(size(), 0.0);
  adjoints_[static_cast<std::size_t>(output.node)] = 1.0;
  for (std::int32_t id = output.node; id >= 0; --id) {
    const double adj = adjoints_[static_cast<std::size_t>(id)];
    if (adj == 0.0) continue;
    const auto begin = node_begin_[static_cast<std::size_t>(id)];
    const auto end = node_begin_[static_cast<std::size_t>(id) + 1];
    for (auto e = begin; e < end; ++e)
      adjoints_[static_cast<std::size_t>(edges_[e].parent)] +=
          adj * edges_[e].partial;
  }
}

double Tape::adjoint_of(std::int32_t node) const {
  if (node < 0 || static_cast<std::size_t>(node) >= adjoints_.size())
    return 0.0;
  return adjoints_[static_cast<std::size_t>(node)];
}

void Tape::clear() {
  node_begin_.assign(1, 0);
  edges_.clear();
  adjoints_.clear();
}

DiffScalar operator+(const DiffScalar& x, const DiffScalar& y) {
  return binary(x, y, x.value + y.value, 1.0, 1.0);
}

DiffScalar operator-(const DiffScalar& x, const DiffScalar& y) {
  return binary(x, y, x.value - y.value, 1.0, -1.0);
}

DiffScalar operator-(const DiffScalar& x) { return unary(x, -x.value, -1.0); }

DiffScalar operator*(const DiffScalar& x, const DiffScalar& y) {
  return binary(x, y, x.value * y.value, y.value, x.value);
}

DiffScalar operator/(const DiffScalar& x, const DiffScalar& y) {
  const double v = x.value / y.value;
  return binary(x, y, v, 1.0 / y.value, -v / y.value);
}

DiffScalar exp(const DiffScalar& x) {
  const double v = std::exp(x.value);
  return unary(x, v, v);
}

DiffScalar abs(const DiffScalar& x) {
  // Subgradient 0 at the kink.
  const double s = x.value > 0.0 ? 1.0 : (x.value < 0.0 ? -1.0 : 0.0);
  return unary(x, std::abs(x.value), s);
}

double softplus(double x, double beta) {
  const double t = beta * x;
  if (t > 0.0) return x + std::log1p(std::exp(-t)) / beta;
  return std::log1p(std::exp(t)) / beta;
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double softplus_derivative(double x, double beta) { return sigmoid(beta * x); }

DiffScalar softplus(const DiffScalar& x, double beta) {
  return unary(x, softplus(x.value, beta), softplus_derivative(x.value, beta));
}

DiffScalar sigmoid(const DiffScalar& x) {
  const double s = sigmoid(x.value);
  return unary(x, s, s * (1.0 - s));
}

DiffScalar min(const DiffScalar& x, const DiffScalar& y) {
  return x.value <= y.value ? x : y;
}

DiffScalar max(const DiffScalar& x, const DiffScalar& y) {
  return x.value >= y.value ? x : y;
}

}  // namespace fitl::ad

