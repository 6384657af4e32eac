#include "selfsim/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

#include "selfsim/errors.hpp"

namespace selfsim {

std::vector<double> spectrum(const LabeledSchreierGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kSpectrumVertexLimit)
    throw ResourceLimitError("spectrum is limited to " + std::to_string(kSpectrumVertexLimit) + " vertices");
  if (g.generator_count() == 0) throw DomainError("spectrum needs at least one generator");

  const double w = 1.0 / (2.0 * static_cast<double>(g.generator_count()));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t s = 0; s < g.generator_count(); ++s) {
    auto map = g.targets(s);
    for (std::size_t v = 0; v < n; ++v) {
      m(static_cast<Eigen::Index>(v), map[v]) += w;
      m(map[v], static_cast<Eigen::Index>(v)) += w;
    }
  }
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw Error("random-walk operator is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::size_t multiplicity_of_one(const std::vector<double>& eigenvalues, double tolerance) {
  return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                [&](double x) { return std::abs(x - 1.0) <= tolerance; }));
}

}  // namespace selfsim
