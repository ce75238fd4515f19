#include "crossmatch/embedding_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "crossmatch/core.hpp"

namespace crossmatch {

namespace {

// Splits on runs of spaces/tabs; treats commas as separators when
// `commas` is set. Locale-independent.
std::vector<std::string_view> split_fields(std::string_view line, bool commas) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  const auto is_sep = [commas](char c) {
    return c == ' ' || c == '\t' || (commas && c == ',');
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool parse_double(std::string_view field, double& out) {
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() &&
         std::isfinite(out);
}

bool parse_count(std::string_view field, std::size_t& out) {
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  return in;
}

}  // namespace

EmbeddingCollection load_vec_file(const std::string& path,
                                  const VecLoadOptions& options) {
  std::ifstream in = open_or_throw(path);
  EmbeddingCollection collection;

  std::string raw;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    const auto fields = split_fields(line, /*commas=*/false);
    if (fields.empty()) continue;

    if (line_no == 1 && fields.size() == 2) {
      // Header candidate: exactly two integer fields.
      std::size_t count = 0, dim = 0;
      if (parse_count(fields[0], count) && parse_count(fields[1], dim)) {
        collection.dim = dim;
        saw_header = true;
        continue;
      }
    }

    if (options.limit && collection.vectors.size() >= *options.limit) break;

    const auto fail = [&](const std::string& why) -> bool {
      if (options.skip_malformed) {
        ++collection.skipped_lines;
        return true;  // drop the line
      }
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + why);
    };

    if (fields.size() < 2) {
      if (fail("expected a token and at least one coordinate")) continue;
    }
    std::vector<double> coords;
    coords.reserve(fields.size() - 1);
    bool bad_value = false;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      double value = 0.0;
      if (!parse_double(fields[f], value)) {
        bad_value = true;
        break;
      }
      coords.push_back(value);
    }
    if (bad_value) {
      if (fail("non-numeric or non-finite coordinate")) continue;
    }
    if (collection.dim == 0 && !saw_header) collection.dim = coords.size();
    if (coords.size() != collection.dim) {
      std::ostringstream why;
      why << "expected " << collection.dim << " coordinates, got "
          << coords.size();
      if (fail(why.str())) continue;
    }
    collection.words.emplace_back(fields[0]);
    collection.vectors.push_back(std::move(coords));
  }

  if (collection.vectors.empty())
    throw ParseError(path + ": empty collection");
  return collection;
}

EmbeddingCollection load_points_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  EmbeddingCollection collection;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    const auto fields = split_fields(line, /*commas=*/true);
    if (fields.empty()) continue;

    std::vector<double> coords;
    coords.reserve(fields.size());
    for (const auto field : fields) {
      double value = 0.0;
      if (!parse_double(field, value))
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": non-numeric field '" + std::string(field) + "'");
      coords.push_back(value);
    }
    if (collection.dim == 0) collection.dim = coords.size();
    if (coords.size() != collection.dim) {
      std::ostringstream why;
      why << path << ":" << line_no << ": ragged row (expected "
          << collection.dim << " values, got " << coords.size() << ")";
      throw ParseError(why.str());
    }
    collection.vectors.push_back(std::move(coords));
  }

  if (collection.vectors.empty())
    throw ParseError(path + ": empty collection");
  return collection;
}

void save_vec_file(const std::string& path,
                   const EmbeddingCollection& collection) {
  if (collection.words.size() != collection.vectors.size())
    throw std::invalid_argument("collection has no token per vector");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open file for writing");

  out << collection.vectors.size() << ' ' << collection.dim << '\n';
  char buf[64];
  for (std::size_t i = 0; i < collection.vectors.size(); ++i) {
    out << collection.words[i];
    for (const double value : collection.vectors[i]) {
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
      (void)ec;
    }
    out << '\n';
  }
  if (!out) throw ParseError(path + ": write failed");
}

}  // namespace crossmatch
