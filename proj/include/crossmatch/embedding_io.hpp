#ifndef CROSSMATCH_EMBEDDING_IO_HPP
#define CROSSMATCH_EMBEDDING_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crossmatch {

/// A loaded set of vectors, optionally with one token per vector (empty
/// `words` for anonymous point sets).
struct EmbeddingCollection {
  std::vector<std::string> words;
  std::vector<std::vector<double>> vectors;
  std::size_t dim = 0;
  std::size_t skipped_lines = 0;  // malformed lines dropped (skip mode only)
};

struct VecLoadOptions {
  /// Drop malformed lines (counted in skipped_lines) instead of failing.
  bool skip_malformed = false;
  /// Keep only the first `limit` valid rows.
  std::optional<std::size_t> limit;
};

/// Parses the fastText `.vec` text layout: an optional "<count> <dim>"
/// header line (exactly two integer fields), then one token plus dim
/// whitespace-separated reals per line. Dim comes from the header or the
/// first data line. Throws ParseError on unreadable files, malformed
/// lines (unless skip_malformed) or an empty result.
EmbeddingCollection load_vec_file(const std::string& path,
                                  const VecLoadOptions& options = {});

/// Parses a generic points file: one point per line, comma- or
/// whitespace-separated reals, no token column. Strict: any ragged or
/// non-numeric row is an error.
EmbeddingCollection load_points_file(const std::string& path);

/// Writes the collection in `.vec` layout with a header line; values are
/// serialized with round-trip precision. Requires words to be present.
void save_vec_file(const std::string& path,
                   const EmbeddingCollection& collection);

}  // namespace crossmatch

#endif  // CROSSMATCH_EMBEDDING_IO_HPP
