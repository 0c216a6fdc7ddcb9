// Copyright 2026 The cpg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CPG_GAME_IO_HPP_
#define CPG_GAME_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "cpg/game.hpp"

namespace cpg {

// Reads a game document. Decimal literals convert exactly (0.55 -> 11/20).
// ParseError for malformed JSON, wrong types, missing or unknown keys;
// ValidationError for dimension mismatches, bad labels, zero denominators.
BimatrixGame parse_game(std::string_view text);

BimatrixGame load_game_file(const std::filesystem::path& path);

// Integers are written as JSON numbers, other entries as "p/q" strings.
std::string serialize_game(const BimatrixGame& g);

// A single-population game is written as the symmetric game (M, M^T).
std::string serialize_single_game(const SingleGame& s);

}  // namespace cpg

#endif  // CPG_GAME_IO_HPP_
