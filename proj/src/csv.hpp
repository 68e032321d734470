// Copyright 2026 The be Authors
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

#include <string>
#include <vector>

namespace be {

// Numbers are written with 17 significant digits so a read-back is exact.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // each row matches header size

  // Index of a named column; throws listing the available names.
  std::size_t column(const std::string& name) const;
  std::vector<double> column_values(const std::string& name) const;
};

// Writes header + numeric rows with '\n' line endings, no trailing spaces.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

CsvTable read_csv(const std::string& path);

}  // namespace be
