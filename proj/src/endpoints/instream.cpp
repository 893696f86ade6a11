// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/endpoints/instream.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace chipnoc {

std::string_view to_string(ReduceKind k) {
  switch (k) {
    case ReduceKind::Sum: return "sum";
    case ReduceKind::Min: return "min";
    case ReduceKind::Max: return "max";
    case ReduceKind::And: return "and";
    case ReduceKind::Or: return "or";
    case ReduceKind::Xor: return "xor";
  }
  return "?";
}

std::string_view to_string(InStreamKind k) {
  switch (k) {
    case InStreamKind::None: return "none";
    case InStreamKind::AddConst: return "add";
    case InStreamKind::MulConst: return "mul";
    case InStreamKind::Reduce: return "reduce";
  }
  return "?";
}

std::uint64_t reduce_identity(ReduceKind k) {
  switch (k) {
    case ReduceKind::Min:
    case ReduceKind::And: return std::numeric_limits<std::uint64_t>::max();
    default: return 0;
  }
}

std::uint64_t reduce_step(ReduceKind k, std::uint64_t acc, std::uint64_t v) {
  switch (k) {
    case ReduceKind::Sum: return acc + v;
    case ReduceKind::Min: return std::min(acc, v);
    case ReduceKind::Max: return std::max(acc, v);
    case ReduceKind::And: return acc & v;
    case ReduceKind::Or: return acc | v;
    case ReduceKind::Xor: return acc ^ v;
  }
  return acc;
}

InStreamResult instream_apply(const InStreamOp& op, std::span<const std::uint64_t> stream) {
  InStreamResult r;
  switch (op.kind) {
    case InStreamKind::None: r.elements.assign(stream.begin(), stream.end()); break;
    case InStreamKind::AddConst:
      r.elements.reserve(stream.size());
      for (auto v : stream) r.elements.push_back(v + op.constant);
      break;
    case InStreamKind::MulConst:
      r.elements.reserve(stream.size());
      for (auto v : stream) r.elements.push_back(v * op.constant);
      break;
    case InStreamKind::Reduce: {
      std::uint64_t acc = reduce_identity(op.reduce);
      for (auto v : stream) acc = reduce_step(op.reduce, acc, v);
      r.scalar = acc;
      break;
    }
  }
  return r;
}

void InStreamUnit::feed(std::span<std::uint8_t> bytes) {
  if (op_.kind == InStreamKind::None) return;
  if (bytes.size() % 8) throw std::invalid_argument("in-stream data not aligned to 8 B elements");
  for (std::size_t i = 0; i < bytes.size(); i += 8) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = v << 8 | bytes[i + b];
    switch (op_.kind) {
      case InStreamKind::AddConst: v += op_.constant; break;
      case InStreamKind::MulConst: v *= op_.constant; break;
      case InStreamKind::Reduce: acc_ = reduce_step(op_.reduce, acc_, v); continue;
      case InStreamKind::None: break;
    }
    for (int b = 0; b < 8; ++b) bytes[i + b] = static_cast<std::uint8_t>(v >> (8 * b));
  }
}

}  // namespace chipnoc
