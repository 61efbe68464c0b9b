#pragma once

#include <span>
#include <vector>

#include "tfkit/group.hpp"

namespace tfkit {

/// Unnormalized multidimensional DFT over Z/n_1 x ... x Z/n_k:
///   out(w) = sum_x in(x) exp(sign * 2 pi i sum_j x_j w_j / n_j),
/// computed in place, one mixed-radix FFT per axis. sign must be +1 or -1.
void dft_inplace(std::span<cplx> data, const std::vector<int>& orders, int sign);

/// Same transform by the direct O(N^2) double sum. Kept as the reference the
/// fast path is tested against.
std::vector<cplx> dft_reference(std::span<const cplx> data, const std::vector<int>& orders, int sign);

}  // namespace tfkit
