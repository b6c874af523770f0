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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace netshare::ledger {

/// One JSON object per line, one line per block, keys in header order:
/// height, parent_digest, sealer, seal_ts_us, tx_digest, digest, txs.
/// Digests and payloads are lowercase hex.
std::string dump_block(const Block &block);
void        write_dump(std::ostream &out, std::span<const Block> chain);

/// Throws Error(DumpParseError) naming the offending line.
std::vector<Block> read_dump(std::istream &in);
std::vector<Block> read_dump_file(const std::string &path);

}  // namespace netshare::ledger
