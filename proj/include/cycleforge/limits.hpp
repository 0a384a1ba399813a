#pragma once

#include <cstddef>
#include <cstdint>

namespace cycleforge {

// Default vertex cap for the exponential searches (census, hamiltonian
// counts). CYCLEFORGE_MAX_VERTICES overrides it.
inline constexpr std::size_t kDefaultSearchVertexLimit = 128;
// all_cycles is an oracle for small graphs only.
inline constexpr std::size_t kDefaultEnumerationVertexLimit = 32;
// Hard ceiling of the bitset kernels.
inline constexpr std::size_t kKernelVertexCeiling = 1024;
inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000'000ULL;

std::size_t search_vertex_limit();
std::size_t enumeration_vertex_limit();

// Throws ResourceLimit when order exceeds limit.
void require_order_at_most(std::size_t order, std::size_t limit, const char* what);

}  // namespace cycleforge
