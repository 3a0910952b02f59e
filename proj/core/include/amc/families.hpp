#ifndef AMC_FAMILIES_HPP
#define AMC_FAMILIES_HPP

#include <cstddef>

#include "amc/semilattice.hpp"

namespace amc::families {

/// L_n = {0, 1, ..., n} with meet = min.
Semilattice chain(std::size_t n);

/// F_n = {o, s_1, ..., s_n}: index 0 is o, s_i s_j = o for i != j.
Semilattice flat(std::size_t n);

/// F_n with a unit adjoined as index n + 1.
Semilattice unitized_flat(std::size_t n);

/// Subsets of {1..n} under intersection; index = bitmask.
Semilattice powerset(std::size_t n);

/// {o, s1, s2, s3, s4, 1} with s1, s2 < s3 and s3, s4 < 1 (s4 covers only o), indexed
/// 0..5 in that order.
Semilattice six_element();

}  // namespace amc::families

#endif  // AMC_FAMILIES_HPP
