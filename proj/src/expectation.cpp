#include "slcomb/expectation.hpp"

#include <cmath>
#include <vector>

#include "slcomb/errors.hpp"

namespace slcomb {

namespace {

Complex tuple_form(std::span<const ComplexMatrix* const> ops, const PureState& psi, std::vector<Complex>& a,
                   std::vector<Complex>& b) {
  const auto d = static_cast<std::size_t>(psi.local_dim());
  a.assign(psi.amplitudes().begin(), psi.amplitudes().end());
  b.resize(a.size());
  for (std::size_t axis = 0; axis < ops.size(); ++axis) {
    apply_on_axis(a, b, d, ops.size(), axis, *ops[axis]);
    std::swap(a, b);
  }
  Complex sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += psi[k] * a[k];
  return sum;
}

}  // namespace

Complex bilinear_form(std::span<const ComplexMatrix* const> party_ops, const PureState& psi) {
  if (party_ops.size() != psi.parties()) throw ShapeMismatch("bilinear_form: one operator per party expected");
  std::vector<Complex> a, b;
  return tuple_form(party_ops, psi, a, b);
}

ExpectationDetail antilinear_expectation_detail(const OperatorExpression& expr, const PureState& psi) {
  if (expr.local_dim() != psi.local_dim() || expr.parties() != psi.parties())
    throw ShapeMismatch("antilinear_expectation: expression acts on (d=" + std::to_string(expr.local_dim()) +
                        ", p=" + std::to_string(expr.parties()) + "), state is (d=" +
                        std::to_string(psi.local_dim()) + ", p=" + std::to_string(psi.parties()) + ")");

  ExpectationDetail out;
  out.terms = expr.term_count();

  std::vector<Complex> forms(expr.tuple_count());
  std::vector<bool> known(expr.tuple_count(), false);
  std::vector<const ComplexMatrix*> ops(expr.parties());
  std::vector<Complex> a, b;

  Complex sum = 0.0;
  for (std::size_t t = 0; t < expr.term_count(); ++t) {
    Complex v = expr.coefficient(t);
    double mag = std::abs(v);
    for (TupleId tid : expr.copy_tuples(t)) {
      ++out.form_lookups;
      if (!known[tid]) {
        auto ids = expr.tuple(tid);
        for (std::size_t k = 0; k < ids.size(); ++k) ops[k] = &expr.factor(ids[k]);
        forms[tid] = tuple_form(ops, psi, a, b);
        known[tid] = true;
        ++out.distinct_forms;
      }
      v *= forms[tid];
      mag *= std::abs(forms[tid]);
    }
    sum += v;
    out.magnitude += mag;
  }
  out.value = sum;
  return out;
}

Complex antilinear_expectation(const OperatorExpression& expr, const PureState& psi) {
  return antilinear_expectation_detail(expr, psi).value;
}

}  // namespace slcomb
