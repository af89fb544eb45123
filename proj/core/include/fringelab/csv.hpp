// Copyright 2026 The Fringelab Authors
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

#ifndef FRINGELAB_CSV_HPP
#define FRINGELAB_CSV_HPP

#include <filesystem>
#include <string>

#include "fringelab/mode.hpp"
#include "fringelab/state.hpp"

namespace fringelab::io {

/// Shortest decimal representation with 17 significant digits (%.17g):
/// round-trips every double and is byte-stable across runs.
std::string format_double(double value);

/// "x,density\n..." rows for a detection pattern.
std::string pattern_csv(const DetectionPattern& pattern);

/// "x,re,im\n..." rows for a mode function.
std::string mode_csv(const ModeFunction& mode);

/// Write-temp-then-rename so readers never observe a partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace fringelab::io

#endif  // FRINGELAB_CSV_HPP
