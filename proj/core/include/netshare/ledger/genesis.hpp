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

#include "netshare/ledger/types.hpp"

#include <optional>
#include <span>

namespace netshare::ledger {

/// Leading opcode byte of the ledger-configuration entry in the genesis block.
/// Contract payload opcodes never use it.
inline constexpr std::uint8_t kGenesisConfigOpcode = 0x00;

/// Payload of the first genesis transaction: the full ledger configuration,
/// including the authority set, so a chain can be verified on its own.
Bytes encode_genesis_config(const LedgerConfig &config);

/// Throws Error(DecodeError) on malformed input.
LedgerConfig decode_genesis_config(std::span<const std::uint8_t> payload);

/// Reads the configuration carried by a chain's genesis block, if present.
std::optional<LedgerConfig> config_from_genesis(const Block &genesis);

}  // namespace netshare::ledger
