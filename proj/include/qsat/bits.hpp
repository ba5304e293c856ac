#pragma once

#include <cstdint>
#include <vector>

namespace qsat {

// Helpers for addressing tensor-product amplitudes: qubit n owns bit n of a
// basis index, and a sorted position list maps a subset's local index onto
// the full index.

// Spread the low bits of `r` over the positions NOT listed in `pos`,
// leaving zero bits at every listed position. `pos` must be sorted
// ascending.
inline std::uint64_t expand_outside(std::uint64_t r, const std::vector<int>& pos) {
  for (int p : pos) {
    const std::uint64_t low = (std::uint64_t{1} << p) - 1;
    r = ((r & ~low) << 1) | (r & low);
  }
  return r;
}

// Deposit bit j of `g` at position pos[j].
inline std::uint64_t deposit(std::uint64_t g, const std::vector<int>& pos) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < pos.size(); ++j) out |= ((g >> j) & 1u) << pos[j];
  return out;
}

// Positions in [0, n) missing from the sorted list `pos`.
inline std::vector<int> complement_positions(int n, const std::vector<int>& pos) {
  std::vector<int> out;
  out.reserve(n - static_cast<int>(pos.size()));
  std::size_t j = 0;
  for (int p = 0; p < n; ++p) {
    if (j < pos.size() && pos[j] == p) {
      ++j;
    } else {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace qsat
