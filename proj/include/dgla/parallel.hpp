#pragma once

// Shared scan kernels: find the lexicographically minimal violating work item
// (or all of them) in an index space. The parallel path uses OpenMP with a
// per-thread minimum and a deterministic reduction, so parallel and serial
// runs report the identical witness.

#include <cstddef>
#include <functional>
#include <vector>

namespace dgla {

inline constexpr std::size_t scan_npos = static_cast<std::size_t>(-1);

std::size_t min_violation_index(std::size_t n, const std::function<bool(std::size_t)>& violates,
                                bool parallel = true);

std::vector<std::size_t> all_violation_indices(std::size_t n,
                                               const std::function<bool(std::size_t)>& violates,
                                               bool parallel = true);

}  // namespace dgla
