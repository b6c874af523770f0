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

#pragma once

#include "netshare/contracts/types.hpp"

#include <span>
#include <variant>

namespace netshare::contracts {

enum class Opcode : std::uint8_t
{
  Deploy          = 0x01,
  InitSla         = 0x02,
  RecordFlow      = 0x03,
  OpenFlow        = 0x04,
  ExpireSla       = 0x05,
  TerminateSla    = 0x06,
  NetworkManifest = 0x07,
};

struct DeployOp
{
  ContractKind kind{ContractKind::FlowRegistry};
  SlaTerms     terms;  // ignored for FlowRegistry
  SimTime      usable_from{0};
};
struct InitSlaOp
{
  SlaBinding binding;
};
struct RecordFlowOp
{
  Digest     digest{};
  RecordRole role{RecordRole::Source};
};
struct OpenFlowOp
{
  FlowId flow;
};
struct ExpireSlaOp
{};
struct TerminateSlaOp
{};
struct ManifestOp
{
  NetworkManifest manifest;
};

using Operation = std::variant<DeployOp, InitSlaOp, RecordFlowOp, OpenFlowOp, ExpireSlaOp,
                               TerminateSlaOp, ManifestOp>;

Bytes encode_operation(const Operation &op);

/// Throws Error(DecodeError) on malformed or unknown payloads.
Operation decode_operation(std::span<const std::uint8_t> payload);

std::optional<Opcode> peek_opcode(std::span<const std::uint8_t> payload) noexcept;

/// Address assigned to a contract deployed by `deployer` with ledger nonce
/// `nonce`.
ContractAddress derive_address(const PdlId &deployer, std::uint64_t nonce, ContractKind kind);

}  // namespace netshare::contracts
