// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace chipnoc {

/// Reductions over unsigned 64-bit elements.
enum class ReduceKind : std::uint8_t { Sum, Min, Max, And, Or, Xor };

inline constexpr ReduceKind kAllReduceKinds[] = {ReduceKind::Sum, ReduceKind::Min,
                                                 ReduceKind::Max, ReduceKind::And,
                                                 ReduceKind::Or,  ReduceKind::Xor};

enum class InStreamKind : std::uint8_t { None, AddConst, MulConst, Reduce };

struct InStreamOp {
  InStreamKind kind = InStreamKind::None;
  std::uint64_t constant = 0;
  ReduceKind reduce = ReduceKind::Sum;

  static InStreamOp add(std::uint64_t c) { return {InStreamKind::AddConst, c, ReduceKind::Sum}; }
  static InStreamOp mul(std::uint64_t c) { return {InStreamKind::MulConst, c, ReduceKind::Sum}; }
  static InStreamOp reduction(ReduceKind k) { return {InStreamKind::Reduce, 0, k}; }
};

std::string_view to_string(ReduceKind k);
std::string_view to_string(InStreamKind k);

std::uint64_t reduce_identity(ReduceKind k);
std::uint64_t reduce_step(ReduceKind k, std::uint64_t acc, std::uint64_t v);

struct InStreamResult {
  std::vector<std::uint64_t> elements;
  std::optional<std::uint64_t> scalar;
};

/// Element-wise ops map with wrap-around arithmetic; Reduce folds the whole
/// stream into one scalar.
InStreamResult instream_apply(const InStreamOp& op, std::span<const std::uint64_t> stream);

/// Streaming form used by the DMA engine on raw little-endian bytes. Byte
/// counts must be multiples of 8 (throws std::invalid_argument).
class InStreamUnit {
 public:
  explicit InStreamUnit(InStreamOp op = {}) : op_(op), acc_(reduce_identity(op.reduce)) {}

  /// Transforms element-wise ops in place; folds reductions.
  void feed(std::span<std::uint8_t> bytes);

  std::uint64_t scalar() const { return acc_; }
  const InStreamOp& op() const { return op_; }

 private:
  InStreamOp op_;
  std::uint64_t acc_;
};

}  // namespace chipnoc
