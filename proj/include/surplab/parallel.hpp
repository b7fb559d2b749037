#pragma once

#include <cstddef>

namespace surplab {

// Worker count used by the OpenMP kernels. 0 means "runtime default".
// Every parallel kernel reduces deterministically, so results do not
// depend on this value.
void set_workers(std::size_t workers);
std::size_t workers();
/// Effective thread count the kernels will use right now.
std::size_t effective_workers();
bool openmp_enabled();

} // namespace surplab
