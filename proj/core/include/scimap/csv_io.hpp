#pragma once

#include <iosfwd>
#include <string>

#include "scimap/citation_matrix.hpp"

namespace scimap {

/// Parses a citation edge list: one `citing_label,cited_label,count` record
/// per line, optional `citing,cited,count` header. Errors carry line numbers.
CitationMatrix parse_citation_csv(std::istream& in);
CitationMatrix parse_citation_csv(const std::string& text);

/// Reads a CSV file; transparently decompresses when the name ends in ".gz".
CitationMatrix read_citation_file(const std::string& path);

/// Writes records ordered by (citing, cited) index, with a header line.
/// Journals without any incident entry cannot be represented in an edge list;
/// use the binary format to preserve them.
void write_citation_csv(const CitationMatrix& m, std::ostream& out);
std::string citation_csv(const CitationMatrix& m);

}  // namespace scimap
