// Copyright 2026 The orliczkit Authors
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

#include <iosfwd>
#include <string>

#include "orliczkit/raster.hpp"
#include "orliczkit/young.hpp"

namespace orliczkit {

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);
double parse_double(const std::string& token);

// YF1: header `YF1 <family> <params...>` or `YF1 table`, then `s value` pairs and
// keyword lines (`tail`, `head`, `sup`, `plateau`, `bound`, `grid`).
void write_yf1(std::ostream& os, const YoungFunction& a);
YoungFunction read_yf1(std::istream& is);
void save_yf1(const std::string& path, const YoungFunction& a);
YoungFunction load_yf1(const std::string& path);

/// `power:2`, `power:2,3` (coefficient), `powerlog:2,1`, `linear`, `linear:2`, or a
/// path to a YF1 file.
YoungFunction parse_young(const std::string& text);

// ORD1: `ORD1 n h nx ny [nz]`, then one line of `<count>o` / `<count>e` runs per
// raster row (x fastest).
void write_ord1(std::ostream& os, const RasterDomain& d);
RasterDomain read_ord1(std::istream& is);
void save_ord1(const std::string& path, const RasterDomain& d);
RasterDomain load_ord1(const std::string& path);

}  // namespace orliczkit
