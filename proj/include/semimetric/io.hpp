#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "semimetric/proximity.hpp"
#include "semimetric/realizers.hpp"
#include "semimetric/rigidity.hpp"
#include "semimetric/space.hpp"
#include "semimetric/weak_similarity.hpp"

namespace semimetric::io {

using Json = nlohmann::ordered_json;

// Space files:
//   {"points": ["p", "q"], "sq_dists": [["0", "16"], ["16", "0"]]}
// or {"points": [...], "coords": [["-2", "0"], ["1/2", "3"]]}
// with rationals written as "num" or "num/den" in lowest terms.
SemimetricSpace parse_space(std::string_view text);
SemimetricSpace load_space(const std::filesystem::path& path);
Json space_to_json(const SemimetricSpace& space);

// Graph files: {"part_a": [...], "part_b": [...], "edges": [["q", "l"], ...]}
BipartiteGraph parse_graph(std::string_view text);
BipartiteGraph load_graph(const std::filesystem::path& path);
Json graph_to_json(const BipartiteGraph& graph);

Json to_json(const ClassificationReport& report);
Json to_json(const SimilarityVerdict& verdict);
Json to_json(const Certificate& certificate);
Json to_json(const ConjectureVerdict& verdict);
Json to_json(const ConjectureScan& scan);

std::string to_text(const ClassificationReport& report);
std::string to_text(const SimilarityVerdict& verdict);
std::string to_text(const Certificate& certificate);
std::string to_text(const ConjectureVerdict& verdict);
std::string to_text(const ConjectureScan& scan);

/// Writes text to a file, throwing Error{ParseError} if it cannot be opened.
void write_file(const std::filesystem::path& path, std::string_view text);
/// Throws Error{ParseError} if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace semimetric::io
