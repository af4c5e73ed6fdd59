#include "slcomb/pure_state.hpp"

#include <cmath>
#include <utility>

#include "slcomb/errors.hpp"

namespace slcomb {

PureState::PureState(int local_dim, std::size_t parties, std::vector<Complex> amplitudes, std::string label)
    : local_dim_(local_dim), parties_(parties), amplitudes_(std::move(amplitudes)), label_(std::move(label)) {
  if (local_dim < 2) throw UnsupportedDimension("PureState: local dimension must be >= 2");
  if (parties == 0) throw ShapeMismatch("PureState: at least one party required");
  std::size_t expected = 1;
  for (std::size_t k = 0; k < parties; ++k) expected *= static_cast<std::size_t>(local_dim);
  if (amplitudes_.size() != expected)
    throw ShapeMismatch("PureState: " + std::to_string(amplitudes_.size()) + " amplitudes given, d^p = " +
                        std::to_string(expected) + " expected");
}

double PureState::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes_) s += std::norm(z);
  return std::sqrt(s);
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n == 0.0) return *this;
  return scaled(1.0 / n);
}

PureState PureState::scaled(Complex s) const {
  PureState out(*this);
  for (auto& z : out.amplitudes_) z *= s;
  return out;
}

void apply_on_axis(std::span<const Complex> in, std::span<Complex> out, std::size_t d, std::size_t parties,
                   std::size_t axis, const ComplexMatrix& a) {
  if (a.dim() != d) throw ShapeMismatch("apply_on_axis: operator dimension != local dimension");
  if (axis >= parties) throw ShapeMismatch("apply_on_axis: axis out of range");
  std::size_t inner = 1;
  for (std::size_t k = axis + 1; k < parties; ++k) inner *= d;
  const std::size_t outer = in.size() / (inner * d);
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t base = o * d * inner;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t i = 0; i < inner; ++i) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < d; ++c) acc += a(r, c) * in[base + c * inner + i];
        out[base + r * inner + i] = acc;
      }
    }
  }
}

PureState PureState::apply_local(std::size_t party, const ComplexMatrix& a) const {
  if (party >= parties_) throw ShapeMismatch("apply_local: party index out of range");
  std::vector<Complex> out(amplitudes_.size());
  apply_on_axis(amplitudes_, out, static_cast<std::size_t>(local_dim_), parties_, party, a);
  return PureState(local_dim_, parties_, std::move(out), label_);
}

PureState PureState::apply_local_all(std::span<const ComplexMatrix> ops) const {
  if (ops.size() != parties_) throw ShapeMismatch("apply_local_all: one operator per party expected");
  PureState out(*this);
  for (std::size_t a = 0; a < parties_; ++a) out = out.apply_local(a, ops[a]);
  return out;
}

ComplexMatrix PureState::amplitude_matrix() const {
  if (parties_ != 2) throw ShapeMismatch("amplitude_matrix: two-party state required");
  return ComplexMatrix::from_row_major(amplitudes_);
}

PureState PureState::product(const PureState& a, const PureState& b) {
  if (a.local_dim_ != b.local_dim_) throw ShapeMismatch("product: local dimensions differ");
  std::vector<Complex> amps;
  amps.reserve(a.size() * b.size());
  for (const auto& x : a.amplitudes_)
    for (const auto& y : b.amplitudes_) amps.push_back(x * y);
  return PureState(a.local_dim_, a.parties_ + b.parties_, std::move(amps));
}

}  // namespace slcomb
