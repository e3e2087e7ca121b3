// Copyright 2026 The lfising Authors
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

#ifndef LFISING_CLI_TABLE_HPP
#define LFISING_CLI_TABLE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lfising::cli {

// A missing numeric cell renders as an empty CSV field and a JSON null.
using Cell = std::variant<std::monostate, std::string, double, long long>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

// Floats use 12 significant digits in both encodings.
std::string format_double(double value);

void write_table(std::ostream& out, const Table& table, Format format);

}  // namespace lfising::cli

#endif
