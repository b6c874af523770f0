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

#include "netshare/common/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace netshare {

/// Lowercase hex.
std::string to_hex(std::span<const std::uint8_t> bytes);

std::optional<Bytes>  from_hex(std::string_view text);
std::optional<Digest> digest_from_hex(std::string_view text);

}  // namespace netshare
