/*
   Copyright 2026 The minvan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MINVAN_STORE_HPP
#define MINVAN_STORE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "minvan/types.hpp"

namespace minvan {

/// Every minimal type through max_complete_weight, sorted by (weight, type).
struct TypeDatabase {
    int max_complete_weight = 1;
    bool collapse = true;
    std::vector<TypeRecord> records;

    friend bool operator==(const TypeDatabase&, const TypeDatabase&) = default;
};

/// Minimal types of the database, in record order.
std::vector<MinVanType> minimal_types(const TypeDatabase& db);

/// Sorts records and rejects duplicates, unsorted input, or broken invariants.
void validate_db(const TypeDatabase& db);

std::string serialize_db(const TypeDatabase& db);
TypeDatabase parse_db(const std::string& text);
void save_db(const TypeDatabase& db, const std::filesystem::path& path);
TypeDatabase load_db(const std::filesystem::path& path);

/// Rendered type -> rotation-class representatives.
using SorouCache = std::map<std::string, std::vector<Sorou>>;

std::string serialize_cache(const SorouCache& cache);
SorouCache parse_cache(const std::string& text);
void save_cache(const SorouCache& cache, const std::filesystem::path& path);
SorouCache load_cache(const std::filesystem::path& path);

inline constexpr const char* kCsvHeader =
    "Weight, Top Prime, Relative Order, Weight Partition, Type, Height, Parities, HasEquisigned";

std::string csv_row(const TypeRecord& r);
std::string csv_report(const TypeDatabase& db);
std::string latex_report(const TypeDatabase& db);
void write_csv_report(const TypeDatabase& db, const std::filesystem::path& path);
void write_latex_report(const TypeDatabase& db, const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it into place.
void atomic_write(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace minvan

#endif
