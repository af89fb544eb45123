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

#include "fringelab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "fringelab/errors.hpp"

namespace fringelab::io {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string pattern_csv(const DetectionPattern& pattern) {
  std::string out = "x,density\n";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    out += format_double(pattern.axis().point(i));
    out += ',';
    out += format_double(pattern[i]);
    out += '\n';
  }
  return out;
}

std::string mode_csv(const ModeFunction& mode) {
  std::string out = "x,re,im\n";
  for (std::size_t i = 0; i < mode.size(); ++i) {
    out += format_double(mode.axis().point(i));
    out += ',';
    out += format_double(mode[i].real());
    out += ',';
    out += format_double(mode[i].imag());
    out += '\n';
  }
  return out;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw Error("write_text_atomic: cannot open " + tmp.string());
    }
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    stream.flush();
    if (!stream) {
      throw Error("write_text_atomic: short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error("write_text_atomic: rename to " + path.string() + " failed: " + ec.message());
  }
}

}  // namespace fringelab::io
