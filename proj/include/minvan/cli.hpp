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

#ifndef MINVAN_CLI_HPP
#define MINVAN_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "minvan/sorou.hpp"

namespace minvan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Rendered minimal types of weight <= 12, in database order.
const std::vector<std::string>& bootstrap_fixture();

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

struct BootstrapOptions {
    std::filesystem::path db;
    int threads = 1;
    bool conjugate_collapse = true;
    /// Overrides the embedded fixture; used to exercise the mismatch path.
    std::optional<std::vector<std::string>> fixture;
};

struct ExtendOptions {
    std::filesystem::path db;
    int to = 0;
    int threads = 1;
    bool minvan_filter = true;
    bool conjugate_collapse = true;
};

struct PlotSpec {
    Sorou sorou;
    std::filesystem::path out;
    double radius = 100.0;
    /// Extra radius per repeated copy of a term.
    double step = 30.0;
};

std::filesystem::path cache_path(const std::filesystem::path& db);

int cmd_bootstrap(const BootstrapOptions& opts, Streams io);
int cmd_extend(const ExtendOptions& opts, Streams io);
int cmd_verify(const std::string& sorou_text, Streams io);
int cmd_enumerate(const std::string& type_text, const std::optional<std::filesystem::path>& db, int threads, Streams io);
int cmd_report(const std::filesystem::path& db, const std::string& format, const std::optional<std::filesystem::path>& out,
               Streams io);
int cmd_phi(std::int64_t n, Streams io);
int cmd_plot(const std::string& sorou_text, const std::filesystem::path& out, double radius, double step, Streams io);

/// SVG drawing of the terms on the unit circle.
std::string render_svg(const PlotSpec& spec);

}  // namespace minvan::cli

#endif
