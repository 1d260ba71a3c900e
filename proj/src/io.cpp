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

#include "orliczkit/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace orliczkit {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::size_t parse_count(const std::string& token) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) throw Error("not a count: '" + token + "'");
  return v;
}

YoungFunction family_from(const std::string& name, const std::vector<double>& p, const GridSpec& grid) {
  if (name == "power") {
    if (p.empty() || p.size() > 2) throw Error("power takes p and an optional coefficient");
    return YoungFunction::power(p[0], p.size() > 1 ? p[1] : 1.0, grid);
  }
  if (name == "powerlog" || name == "power-log") {
    if (p.empty() || p.size() > 2) throw Error("powerlog takes p and an optional lambda");
    return YoungFunction::power_log(p[0], p.size() > 1 ? p[1] : 1.0, grid);
  }
  if (name == "linear") {
    if (p.size() > 1) throw Error("linear takes an optional coefficient");
    return YoungFunction::linear(p.empty() ? 1.0 : p[0], grid);
  }
  throw Error("unknown Young family '" + name + "'");
}

bool same_abscissae(std::span<const double> a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) throw Error("not a number: '" + token + "'");
  return v;
}

void write_yf1(std::ostream& os, const YoungFunction& a) {
  const auto p = a.params();
  os << "YF1 " << to_string(a.family());
  switch (a.family()) {
    case YoungFamily::power:
    case YoungFamily::power_log:
      os << ' ' << format_double(p[0]) << ' ' << format_double(p[1]);
      break;
    case YoungFamily::linear:
      os << ' ' << format_double(p[1]);
      break;
    case YoungFamily::table:
      break;
  }
  os << '\n';
  const SampleTable& t = a.table();
  for (std::size_t k = 0; k < t.size(); ++k) {
    os << format_double(t.abscissae()[k]) << ' ' << format_double(t.values()[k]) << '\n';
  }
  os << "tail " << format_double(t.tail().law.exponent) << ' ' << format_double(t.tail().law.coeff) << '\n';
  if (a.family() != YoungFamily::table) return;
  os << "head " << format_double(t.head().exponent) << ' ' << format_double(t.head().coeff) << '\n';
  if (t.tail().supremum) {
    os << "sup " << format_double(*t.tail().supremum) << ' ' << format_double(t.tail().decay) << '\n';
  }
  if (t.zero_plateau()) os << "plateau " << format_double(*t.zero_plateau()) << '\n';
  if (t.finite_bound()) os << "bound " << format_double(*t.finite_bound()) << '\n';
}

YoungFunction read_yf1(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("YF1: empty input");
  const auto header = words(line);
  if (header.size() < 2 || header[0] != "YF1") throw Error("YF1: bad header '" + line + "'");
  std::vector<double> params;
  for (std::size_t k = 2; k < header.size(); ++k) params.push_back(parse_double(header[k]));

  TableParts parts;
  Tail tail;
  bool have_tail = false;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    const auto w = words(line);
    if (w.empty() || w[0][0] == '#') continue;
    const auto need = [&](std::size_t count) {
      if (w.size() != count) throw Error("YF1 line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(count) + " fields");
    };
    if (w[0] == "tail") {
      need(3);
      tail.law = {parse_double(w[1]), parse_double(w[2])};
      have_tail = true;
    } else if (w[0] == "head") {
      need(3);
      parts.head = PowerLaw{parse_double(w[1]), parse_double(w[2])};
    } else if (w[0] == "sup") {
      need(3);
      tail.supremum = parse_double(w[1]);
      tail.decay = parse_double(w[2]);
    } else if (w[0] == "plateau") {
      need(2);
      parts.zero_plateau = parse_double(w[1]);
    } else if (w[0] == "bound") {
      need(2);
      parts.finite_bound = parse_double(w[1]);
    } else {
      need(2);
      parts.abscissae.push_back(parse_double(w[0]));
      parts.values.push_back(parse_double(w[1]));
    }
  }
  if (parts.abscissae.empty()) throw Error("YF1: no samples");

  if (header[1] != "table") {
    YoungFunction a = family_from(header[1], params, GridSpec{});
    if (same_abscissae(a.table().abscissae(), parts.abscissae)) return a;
    return family_from(header[1], params,
                       GridSpec{parts.abscissae.front(), parts.abscissae.back(), parts.abscissae.size()});
  }
  if (have_tail) parts.tail = tail;
  return YoungFunction::from_table(SampleTable(std::move(parts)));
}

void save_yf1(const std::string& path, const YoungFunction& a) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  write_yf1(os, a);
}

YoungFunction load_yf1(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot read " + path);
  return read_yf1(is);
}

YoungFunction parse_young(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  if (name == "power" || name == "powerlog" || name == "power-log" || name == "linear") {
    std::vector<double> params;
    if (colon != std::string::npos) {
      for (const auto& tok : split(text.substr(colon + 1), ',')) params.push_back(parse_double(tok));
    }
    return family_from(name, params, GridSpec{});
  }
  return load_yf1(text);
}

void write_ord1(std::ostream& os, const RasterDomain& d) {
  const auto& dims = d.dims();
  os << "ORD1 " << d.dim() << ' ' << format_double(d.h()) << ' ' << dims[0] << ' ' << dims[1];
  if (d.dim() == 3) os << ' ' << dims[2];
  os << '\n';
  const auto& bits = d.bits();
  const std::size_t rows = dims[1] * dims[2];
  for (std::size_t row = 0; row < rows; ++row) {
    const std::size_t base = row * dims[0];
    std::size_t i = 0;
    bool first = true;
    while (i < dims[0]) {
      const bool on = bits[base + i] != 0;
      std::size_t run = 0;
      while (i < dims[0] && (bits[base + i] != 0) == on) {
        ++run;
        ++i;
      }
      if (!first) os << ' ';
      os << run << (on ? 'o' : 'e');
      first = false;
    }
    os << '\n';
  }
}

RasterDomain read_ord1(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("ORD1: empty input");
  const auto header = words(line);
  if (header.size() < 5 || header[0] != "ORD1") throw Error("ORD1: bad header '" + line + "'");
  const int n = static_cast<int>(parse_count(header[1]));
  if (n != 2 && n != 3) throw Error("ORD1: dimension must be 2 or 3");
  if (header.size() != static_cast<std::size_t>(3 + n)) throw Error("ORD1: header needs " + std::to_string(n) + " sizes");
  const double h = parse_double(header[2]);
  std::array<std::size_t, 3> dims{parse_count(header[3]), parse_count(header[4]),
                                   n == 3 ? parse_count(header[5]) : std::size_t{1}};
  std::vector<std::uint8_t> bits;
  bits.reserve(dims[0] * dims[1] * dims[2]);
  const std::size_t rows = dims[1] * dims[2];
  for (std::size_t row = 0; row < rows; ++row) {
    if (!std::getline(is, line)) throw Error("ORD1: missing row " + std::to_string(row));
    std::size_t filled = 0;
    for (const auto& tok : words(line)) {
      if (tok.size() < 2 || (tok.back() != 'o' && tok.back() != 'e')) throw Error("ORD1: bad run '" + tok + "'");
      const std::size_t run = parse_count(tok.substr(0, tok.size() - 1));
      filled += run;
      if (filled > dims[0]) throw Error("ORD1: row " + std::to_string(row) + " is too long");
      bits.insert(bits.end(), run, tok.back() == 'o' ? 1 : 0);
    }
    if (filled != dims[0]) throw Error("ORD1: row " + std::to_string(row) + " is too short");
  }
  while (std::getline(is, line)) {
    if (!words(line).empty()) throw Error("ORD1: trailing data after the last row");
  }
  return RasterDomain(n, h, dims, std::move(bits));
}

void save_ord1(const std::string& path, const RasterDomain& d) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  write_ord1(os, d);
}

RasterDomain load_ord1(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot read " + path);
  return read_ord1(is);
}

}  // namespace orliczkit
