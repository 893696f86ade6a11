// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/noc/packet.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

namespace {

void put_u64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

// Packed read requests carry their element addresses as payload.
bool carries_addresses(const Transaction& t) { return t.kind == TxnKind::ReadReq && t.packed(); }

}  // namespace

std::uint32_t payload_capacity(ChannelKind c, const PacketFormat& fmt) {
  return c == ChannelKind::Wide ? fmt.wide_bytes : fmt.narrow_bytes;
}

std::uint32_t wire_bytes(const Transaction& t) {
  if (carries_addresses(t)) return static_cast<std::uint32_t>(t.gather.size() * 8);
  if (t.kind == TxnKind::WriteReq || t.kind == TxnKind::ReadRsp) return t.length;
  return 0;
}

ChannelKind default_channel(const Transaction& t, const PacketFormat& fmt) {
  switch (t.kind) {
    case TxnKind::ReadReq: return t.packed() ? ChannelKind::Wide : ChannelKind::Req;
    case TxnKind::WriteReq: return t.length <= fmt.narrow_bytes ? ChannelKind::Req : ChannelKind::Wide;
    case TxnKind::ReadRsp:
      return (!t.packed() && t.length <= fmt.narrow_bytes) ? ChannelKind::Rsp : ChannelKind::Wide;
    case TxnKind::WriteRsp: return ChannelKind::Rsp;
  }
  return ChannelKind::Req;
}

std::uint32_t flit_count(const Transaction& t, ChannelKind c, const PacketFormat& fmt) {
  std::uint32_t cap = payload_capacity(c, fmt);
  std::uint32_t n = wire_bytes(t);
  return n == 0 ? 1 : (n + cap - 1) / cap;
}

std::vector<Flit> packetize(const Transaction& t, ChannelKind c, const PacketFormat& fmt,
                            PacketId packet) {
  if (t.length > fmt.max_burst)
    throw ProtocolError("transaction of " + std::to_string(t.length) + " B exceeds max burst " +
                        std::to_string(fmt.max_burst));
  if (c == ChannelKind::Req && !is_request(t.kind))
    throw ProtocolError("response on the req channel");
  if (c == ChannelKind::Rsp && is_request(t.kind))
    throw ProtocolError("request on the rsp channel");
  if (c != ChannelKind::Wide && (t.packed() || wire_bytes(t) > fmt.narrow_bytes))
    throw ProtocolError("bulk or packed transaction must use the wide channel");
  if ((t.kind == TxnKind::WriteReq || t.kind == TxnKind::ReadRsp) && t.payload.size() != t.length)
    throw ProtocolError("payload size does not match length");
  if (carries_addresses(t) && t.gather.size() * t.elem_size != t.length)
    throw ProtocolError("packed request length does not match its element list");
  if (t.gather.size() > 255) throw ProtocolError("too many packed elements");

  std::vector<std::uint8_t> wire;
  if (carries_addresses(t)) {
    wire.resize(t.gather.size() * 8);
    for (std::size_t i = 0; i < t.gather.size(); ++i) put_u64(wire.data() + 8 * i, t.gather[i]);
  } else if (wire_bytes(t) > 0) {
    wire = t.payload;
  }

  Header h;
  h.kind = t.kind;
  h.txn_id = t.id;
  h.address = t.address;
  h.length = t.length;
  h.elem_size = t.elem_size;
  h.packed_count = static_cast<std::uint8_t>(t.gather.size());
  h.status = t.status;
  h.probe = t.probe;
  h.collective = t.collective;

  std::uint32_t cap = payload_capacity(c, fmt);
  std::uint32_t n = flit_count(t, c, fmt);
  std::vector<Flit> flits(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Flit& f = flits[i];
    f.channel = c;
    f.src = t.src;
    f.dst = t.dst;
    f.packet = packet;
    f.head = i == 0;
    f.tail = i + 1 == n;
    f.header = h;
    std::size_t off = static_cast<std::size_t>(i) * cap;
    std::size_t len = off < wire.size() ? std::min<std::size_t>(cap, wire.size() - off) : 0;
    f.length = static_cast<std::uint8_t>(len);
    if (len) std::memcpy(f.payload.data(), wire.data() + off, len);
  }
  return flits;
}

Transaction depacketize(std::span<const Flit> flits) {
  if (flits.empty()) throw ProtocolError("empty flit sequence");
  const Flit& head = flits.front();
  if (!head.head) throw ProtocolError("packet does not start with a head flit");
  if (!flits.back().tail) throw ProtocolError("packet " + std::to_string(head.packet) + " has no tail");
  std::vector<std::uint8_t> wire;
  for (std::size_t i = 0; i < flits.size(); ++i) {
    const Flit& f = flits[i];
    if (i > 0 && f.head) throw ProtocolError("second head flit inside packet");
    if (i + 1 < flits.size() && f.tail) throw ProtocolError("tail flit before end of packet");
    if (f.packet != head.packet || f.channel != head.channel)
      throw ProtocolError("interleaved packets " + std::to_string(head.packet) + " and " +
                          std::to_string(f.packet));
    wire.insert(wire.end(), f.payload.begin(), f.payload.begin() + f.length);
  }

  const Header& h = head.header;
  Transaction t;
  t.kind = h.kind;
  t.id = h.txn_id;
  t.address = h.address;
  t.length = h.length;
  t.src = head.src;
  t.dst = head.dst;
  t.elem_size = h.elem_size;
  t.status = h.status;
  t.probe = h.probe;
  t.collective = h.collective;
  if (t.kind == TxnKind::ReadReq && h.elem_size != 0) {
    if (wire.size() != static_cast<std::size_t>(h.packed_count) * 8)
      throw ProtocolError("packed request payload size mismatch");
    t.gather.resize(h.packed_count);
    for (std::size_t i = 0; i < t.gather.size(); ++i) t.gather[i] = get_u64(wire.data() + 8 * i);
  } else if (t.kind == TxnKind::WriteReq || t.kind == TxnKind::ReadRsp) {
    if (wire.size() != h.length) throw ProtocolError("payload size does not match header length");
    t.payload = std::move(wire);
  }
  return t;
}

}  // namespace chipnoc
