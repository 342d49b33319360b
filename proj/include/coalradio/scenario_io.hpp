// Copyright 2026 The coalradio Authors
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

#ifndef COALRADIO_SCENARIO_IO_HPP
#define COALRADIO_SCENARIO_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "coalradio/scenario.hpp"

namespace coalradio {

// Scenario files are JSON objects with sorted keys. Geometric scenarios carry
// "positions"; raw ones carry "capacities" as a list of {from, to, value}.
// Writing, reading and writing again yields the same bytes.
std::string scenario_to_string(const Scenario& scenario);
Scenario scenario_from_string(std::string_view text);

void write_scenario(const std::filesystem::path& path, const Scenario& scenario);
Scenario read_scenario(const std::filesystem::path& path);

// Helpers shared by every file writer in the library.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace coalradio

#endif  // COALRADIO_SCENARIO_IO_HPP
