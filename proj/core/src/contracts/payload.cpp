// Copyright 2026 The netshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netshare/contracts/payload.hpp"

#include "netshare/common/codec.hpp"
#include "netshare/crypto/sha3.hpp"

namespace netshare::contracts {
namespace {

void write_path(ByteWriter &w, const AgreedPath &path)
{
  w.u16(static_cast<std::uint16_t>(path.devices.size()));
  for (const auto &d : path.devices)
  {
    w.str(d.str());
  }
  w.u16(static_cast<std::uint16_t>(path.links.size()));
  for (const auto &l : path.links)
  {
    w.str(l.str());
  }
}

AgreedPath read_path(ByteReader &r)
{
  AgreedPath path;
  const auto nd = r.u16();
  for (std::uint16_t i = 0; i < nd; ++i)
  {
    path.devices.emplace_back(r.str());
  }
  const auto nl = r.u16();
  for (std::uint16_t i = 0; i < nl; ++i)
  {
    path.links.emplace_back(r.str());
  }
  return path;
}

struct Encoder
{
  ByteWriter &w;

  void operator()(const DeployOp &op) const
  {
    w.u8(static_cast<std::uint8_t>(Opcode::Deploy)).u8(static_cast<std::uint8_t>(op.kind));
    if (op.kind == ContractKind::Sla)
    {
      w.i64(op.terms.lease_duration.count())
          .i64(op.terms.price)
          .i64(op.terms.latency_target.count())
          .i64(op.terms.penalty_rate);
    }
    w.i64(op.usable_from.count());
  }
  void operator()(const InitSlaOp &op) const
  {
    w.u8(static_cast<std::uint8_t>(Opcode::InitSla))
        .str(op.binding.owner.str())
        .str(op.binding.tenant.str())
        .i64(op.binding.lease_start.count())
        .digest(op.binding.registry.bytes);
    write_path(w, op.binding.path);
  }
  void operator()(const RecordFlowOp &op) const
  {
    w.u8(static_cast<std::uint8_t>(Opcode::RecordFlow)).digest(op.digest).u8(static_cast<std::uint8_t>(op.role));
  }
  void operator()(const OpenFlowOp &op) const
  {
    w.u8(static_cast<std::uint8_t>(Opcode::OpenFlow)).str(op.flow.str());
  }
  void operator()(const ExpireSlaOp &) const { w.u8(static_cast<std::uint8_t>(Opcode::ExpireSla)); }
  void operator()(const TerminateSlaOp &) const { w.u8(static_cast<std::uint8_t>(Opcode::TerminateSla)); }
  void operator()(const ManifestOp &op) const
  {
    w.u8(static_cast<std::uint8_t>(Opcode::NetworkManifest));
    w.u16(static_cast<std::uint16_t>(op.manifest.devices.size()));
    for (const auto &d : op.manifest.devices)
    {
      w.str(d.label.str()).str(d.pdl_id.str()).str(d.owner.str()).str(d.vendor.str());
    }
    w.u16(static_cast<std::uint16_t>(op.manifest.links.size()));
    for (const auto &l : op.manifest.links)
    {
      w.str(l.id.str()).str(l.a.str()).str(l.b.str()).i64(l.capacity).i64(l.latency.count()).i64(l.cost);
    }
  }
};

RecordRole read_role(ByteReader &r)
{
  const auto v = r.u8();
  if (v < 1 || v > 3)
  {
    throw Error(ErrorCode::DecodeError, "bad record role");
  }
  return static_cast<RecordRole>(v);
}

}  // namespace

Bytes encode_operation(const Operation &op)
{
  ByteWriter w;
  std::visit(Encoder{w}, op);
  return std::move(w).take();
}

std::optional<Opcode> peek_opcode(std::span<const std::uint8_t> payload) noexcept
{
  if (payload.empty() || payload[0] < 0x01 || payload[0] > 0x07)
  {
    return std::nullopt;
  }
  return static_cast<Opcode>(payload[0]);
}

Operation decode_operation(std::span<const std::uint8_t> payload)
{
  const auto opcode = peek_opcode(payload);
  if (!opcode)
  {
    throw Error(ErrorCode::DecodeError, "unknown opcode");
  }
  ByteReader r(payload.subspan(1));
  Operation  out;
  switch (*opcode)
  {
  case Opcode::Deploy: {
    DeployOp op;
    const auto kind = r.u8();
    if (kind != 1 && kind != 2)
    {
      throw Error(ErrorCode::DecodeError, "bad contract kind");
    }
    op.kind = static_cast<ContractKind>(kind);
    if (op.kind == ContractKind::Sla)
    {
      op.terms.lease_duration = SimDuration{r.i64()};
      op.terms.price          = r.i64();
      op.terms.latency_target = Millis{r.i64()};
      op.terms.penalty_rate   = r.i64();
    }
    op.usable_from = SimTime{r.i64()};
    out            = op;
    break;
  }
  case Opcode::InitSla: {
    InitSlaOp op;
    op.binding.owner          = PdlId{r.str()};
    op.binding.tenant         = PdlId{r.str()};
    op.binding.lease_start    = SimTime{r.i64()};
    op.binding.registry.bytes = r.digest();
    op.binding.path           = read_path(r);
    out                       = op;
    break;
  }
  case Opcode::RecordFlow: {
    RecordFlowOp op;
    op.digest = r.digest();
    op.role   = read_role(r);
    out       = op;
    break;
  }
  case Opcode::OpenFlow: out = OpenFlowOp{FlowId{r.str()}}; break;
  case Opcode::ExpireSla: out = ExpireSlaOp{}; break;
  case Opcode::TerminateSla: out = TerminateSlaOp{}; break;
  case Opcode::NetworkManifest: {
    ManifestOp op;
    const auto nd = r.u16();
    for (std::uint16_t i = 0; i < nd; ++i)
    {
      NetworkManifest::Device d;
      d.label  = DeviceId{r.str()};
      d.pdl_id = PdlId{r.str()};
      d.owner  = PdlId{r.str()};
      d.vendor = PdlId{r.str()};
      op.manifest.devices.push_back(std::move(d));
    }
    const auto nl = r.u16();
    for (std::uint16_t i = 0; i < nl; ++i)
    {
      NetworkManifest::Link l;
      l.id       = LinkId{r.str()};
      l.a        = DeviceId{r.str()};
      l.b        = DeviceId{r.str()};
      l.capacity = r.i64();
      l.latency  = Millis{r.i64()};
      l.cost     = r.i64();
      op.manifest.links.push_back(std::move(l));
    }
    out = std::move(op);
    break;
  }
  }
  r.expect_done();
  return out;
}

ContractAddress derive_address(const PdlId &deployer, std::uint64_t nonce, ContractKind kind)
{
  ByteWriter w;
  w.str("contract").str(deployer.str()).u64(nonce).u8(static_cast<std::uint8_t>(kind));
  return ContractAddress{crypto::sha3_256(w.bytes())};
}

}  // namespace netshare::contracts
