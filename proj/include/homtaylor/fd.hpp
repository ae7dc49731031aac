#pragma once

#include <span>

#include "homtaylor/homfun.hpp"
#include "homtaylor/symtensor.hpp"

namespace homtaylor {

/// Order-k derivative tensor by nested central differences, with function
/// values memoized across entries (repeated indices and permutations reuse
/// the same stencil points). Independent of the jet machinery; validates it.
///
/// step <= 0 selects h = eps^(1/(k+2)) * (1 + |a|_inf). Limited to k <= 4.
/// Throws std::domain_error if any stencil point leaves the domain.
SymmetricTensor fd_tensor(const HomogeneousFunction& f,
                          std::span<const double> a, int order,
                          double step = 0.0);

}  // namespace homtaylor
