// Copyright 2026 The Bamia Authors
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

#include <filesystem>
#include <string>

namespace bamia {

void ensure_dir(const std::filesystem::path& dir);

std::string read_text_file(const std::filesystem::path& path);

// Atomic-ish write: write to <path>.tmp then rename.
void write_text_file(const std::filesystem::path& path, const std::string& content);

void append_line(const std::filesystem::path& path, const std::string& line);

// FNV-1a hex digest of a file's bytes. Used for emitted-artifact checksums.
std::string file_digest_hex(const std::filesystem::path& path);

}  // namespace bamia
