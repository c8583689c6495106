#pragma once

#include "permcode/core.hpp"

namespace permcode {

/// s_j = number of entries left of position j that are larger than p_j.
SubexcedantSeq lehmer_encode(const Permutation& p);

/// Inverse of lehmer_encode. Fills positions right to left, picking the
/// (j - s_j)-th smallest unused value at position j.
Permutation lehmer_decode(const SubexcedantSeq& s);

/// Dumont's statistic: number of distinct nonzero symbols of the Lehmer code.
int dumont_stat(const Permutation& p);

}  // namespace permcode
