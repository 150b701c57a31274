// Copyright 2026 The hadamard-rx Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hrx/compare.hpp"

namespace hrx {

enum class ReportFormat { Json, Text };

/// Throws ConfigError for anything but "json" or "text".
ReportFormat parse_report_format(std::string_view name);

/// Fixed key order, schema_version first.
std::string report_to_json(const ComparisonReport& report);

/// Inverse of report_to_json. Throws ConfigError on malformed input or an
/// unsupported schema_version.
ComparisonReport report_from_json(std::string_view text);

std::string report_to_text(const ComparisonReport& report);

std::string render_report(const ComparisonReport& report, ReportFormat format);

/// Writes render_report() to `path`. Throws IoError when it cannot.
void emit_report(const ComparisonReport& report, ReportFormat format,
                 const std::filesystem::path& path);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace hrx
