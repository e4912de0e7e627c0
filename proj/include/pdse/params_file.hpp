/*
 * Copyright 2026 The photonic-dse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pdse/device_models.hpp"
#include "pdse/link_budget.hpp"
#include "pdse/peripherals.hpp"

namespace pdse {

/// Everything a run can override from a parameter file.
struct ParamSet {
  PhotonicLinkParams link;
  NetworkPenalties penalties;
  SpectralParams spectral;
  PeripheralParams peripherals;
  SimOptions options;
  int hw_bits = 4;
  std::int64_t dpus_per_tile = 4;

  void validate() const;
};

/// `key = value` lines; `#` starts a comment. Unknown keys, duplicate keys
/// and malformed values throw ParseError with the line number.
ParamSet parse_params(std::istream& in, const std::string& source);

/// ParseError naming the path if it cannot be opened.
ParamSet load_params(const std::filesystem::path& path);

/// Full parameter file with every key and its unit.
void write_params(std::ostream& out, const ParamSet& params);

}  // namespace pdse
