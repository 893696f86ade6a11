// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chipnoc/sim/config.hpp"

namespace chipnoc {

/// Reads a JSON config. Sections are objects ("mesh": {"cols": 16}) or
/// dotted keys ("mesh.cols": 16); both may be mixed. Missing keys keep their
/// defaults, unknown keys are rejected. Syntax errors name the line, value
/// errors name the key path.
SimConfig parse_config_text(std::string_view text, std::string_view origin = "<config>");
SimConfig parse_config(const std::string& path);

/// Every accepted key path, in schema order.
std::vector<std::string> config_keys();

/// The full configuration as JSON text (round-trips through parse_config_text).
std::string dump_config(const SimConfig& cfg);

}  // namespace chipnoc
