// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/endpoints/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace chipnoc {

std::vector<PackedFlit> pack_indices(std::span<const std::uint64_t> addresses,
                                     std::uint8_t elem_size, std::uint32_t per_flit) {
  if (elem_size == 0 || elem_size > 8) throw std::invalid_argument("element size must be 1..8 B");
  if (per_flit == 0) throw std::invalid_argument("per_flit must be positive");
  std::vector<PackedFlit> out;
  out.reserve((addresses.size() + per_flit - 1) / per_flit);
  for (std::size_t i = 0; i < addresses.size(); i += per_flit) {
    std::size_t n = std::min<std::size_t>(per_flit, addresses.size() - i);
    PackedFlit f;
    f.elem_size = elem_size;
    f.addresses.assign(addresses.begin() + i, addresses.begin() + i + n);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<NarrowRequest> unpack(const PackedFlit& flit) {
  std::vector<NarrowRequest> out;
  out.reserve(flit.addresses.size());
  for (std::size_t i = 0; i < flit.addresses.size(); ++i)
    out.push_back({flit.addresses[i], flit.elem_size, i});
  return out;
}

std::vector<NarrowRequest> unpack(std::span<const PackedFlit> flits) {
  std::vector<NarrowRequest> out;
  std::uint64_t tag = 0;
  for (const auto& f : flits)
    for (auto a : f.addresses) out.push_back({a, f.elem_size, tag++});
  return out;
}

}  // namespace chipnoc
