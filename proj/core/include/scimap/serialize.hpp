#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scimap/bicomponents.hpp"
#include "scimap/citation_matrix.hpp"
#include "scimap/graph.hpp"
#include "scimap/similarity.hpp"
#include "scimap/types.hpp"

namespace scimap {

// Binary container formats. Each file starts with an 8-byte ASCII magic; all
// integers and IEEE-754 doubles are little-endian. Writes go to a temporary
// file in the same directory and are renamed into place.
inline constexpr char kMatrixMagic[] = "SCMMTX01";
inline constexpr char kSimilarityMagic[] = "SCMSIM01";
inline constexpr char kGraphMagic[] = "SCMGRF01";
inline constexpr char kDecompositionMagic[] = "SCMDCP01";

void write_matrix_file(const std::filesystem::path& path, const CitationMatrix& m);
CitationMatrix read_matrix_file(const std::filesystem::path& path);

void write_similarity_file(const std::filesystem::path& path, const SimilarityMatrix& s);
SimilarityMatrix read_similarity_file(const std::filesystem::path& path);

void write_graph_file(const std::filesystem::path& path, const SimilarityGraph& g);
SimilarityGraph read_graph_file(const std::filesystem::path& path);

struct LabeledDecomposition {
  std::vector<std::string> labels;
  BicomponentDecomposition decomposition;

  bool operator==(const LabeledDecomposition&) const = default;
};

void write_decomposition_file(const std::filesystem::path& path, const LabeledDecomposition& d);
LabeledDecomposition read_decomposition_file(const std::filesystem::path& path);

// First 8 bytes of the file, or "" when unreadable/short.
std::string sniff_magic(const std::filesystem::path& path);

// Atomic whole-file write used by every exporter (temp file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace scimap
