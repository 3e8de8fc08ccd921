#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ontic::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

struct ConeRays {
  /// Rank of the constraint matrix. Rays are only computed when rank == n.
  std::size_t rank = 0;
  /// Extreme rays of {x : a . x >= 0 for every constraint a}, primitive integer vectors.
  std::vector<BigVector> rays;
  /// Nonzero kernel vector of the constraint matrix when rank < n (the cone has a line).
  BigVector lineality;
};

/// Double description method over the integers. Runs in checked 64-bit
/// arithmetic and restarts with arbitrary precision on overflow, so the
/// result is exact either way. Constraints are inserted in the given order
/// after an initial basis of n independent rows.
ConeRays extreme_rays(const std::vector<BigVector>& constraints, std::size_t n);

/// Same computation, forced onto arbitrary-precision integers.
ConeRays extreme_rays_bigint(const std::vector<BigVector>& constraints, std::size_t n);

}  // namespace ontic::detail
