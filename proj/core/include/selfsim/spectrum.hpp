#pragma once

#include <cstddef>
#include <vector>

#include "selfsim/schreier.hpp"

namespace selfsim {

/// Largest level handled by the dense eigensolver.
inline constexpr std::size_t kSpectrumVertexLimit = 4096;

/// Eigenvalues of the symmetrized random-walk operator
/// M = (1 / 2|S|) sum_s (P_s + P_s^T), sorted in decreasing order. Throws
/// ResourceLimitError above kSpectrumVertexLimit vertices and DomainError for
/// an empty generator set.
std::vector<double> spectrum(const LabeledSchreierGraph& g);

/// Number of eigenvalues within `tolerance` of 1.
std::size_t multiplicity_of_one(const std::vector<double>& eigenvalues, double tolerance = 1e-9);

}  // namespace selfsim
