// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/endpoints/coalescer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace chipnoc {

Coalescer::Coalescer(CoalescerConfig cfg) : cfg_(cfg) {
  if (cfg_.granularity == 0 || cfg_.granularity > 64 || (cfg_.granularity & (cfg_.granularity - 1)))
    throw std::invalid_argument("coalescer granularity must be a power of two <= 64");
  if (cfg_.window == 0) throw std::invalid_argument("coalescer window must be positive");
  full_mask_ = cfg_.granularity == 64 ? ~0ull : (1ull << cfg_.granularity) - 1;
}

void Coalescer::push(const NarrowRequest& r, Cycle now) {
  const std::uint64_t g = cfg_.granularity;
  if (r.size == 0 || r.address / g != (r.address + r.size - 1) / g)
    throw std::invalid_argument("narrow request straddles a granule");
  std::uint64_t granule = r.address / g * g;
  std::uint64_t bits = (r.size == 64 ? ~0ull : (1ull << r.size) - 1) << (r.address - granule);

  std::size_t i = 0;
  while (i < entries_.size() && entries_[i].granule != granule) ++i;
  if (i == entries_.size()) {
    if (pending_ >= cfg_.window) {
      emit(0);
      i = entries_.size();
    }
    entries_.push_back({granule, now, 0, {}});
  }
  entries_[i].mask |= bits;
  entries_[i].tags.push_back(r.tag);
  ++pending_;
  if (entries_[i].mask == full_mask_) emit(i);
}

void Coalescer::tick(Cycle now) {
  while (!entries_.empty() && entries_.front().born + cfg_.age <= now) emit(0);
}

Cycle Coalescer::next_deadline() const {
  return entries_.empty() ? std::numeric_limits<Cycle>::max() : entries_.front().born + cfg_.age;
}

void Coalescer::emit(std::size_t i) {
  const std::uint64_t g = cfg_.granularity;
  GranuleAccess a;
  a.address = entries_[i].granule;
  a.size = static_cast<std::uint32_t>(g);
  a.useful = static_cast<std::uint32_t>(__builtin_popcountll(entries_[i].mask));
  a.tags = std::move(entries_[i].tags);
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i));

  if (cfg_.max_access >= 2 * g) {
    std::uint64_t buddy = a.address ^ g;
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (entries_[j].granule != buddy) continue;
      a.address = std::min(a.address, buddy);
      a.size += static_cast<std::uint32_t>(g);
      a.useful += static_cast<std::uint32_t>(__builtin_popcountll(entries_[j].mask));
      a.tags.insert(a.tags.end(), entries_[j].tags.begin(), entries_[j].tags.end());
      entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(j));
      break;
    }
  }
  pending_ -= a.tags.size();
  out_.push_back(std::move(a));
}

GranuleAccess Coalescer::pop_output() {
  GranuleAccess a = std::move(out_.front());
  out_.pop_front();
  return a;
}

std::vector<GranuleAccess> Coalescer::drain() {
  std::vector<GranuleAccess> v(std::make_move_iterator(out_.begin()),
                               std::make_move_iterator(out_.end()));
  out_.clear();
  return v;
}

}  // namespace chipnoc
