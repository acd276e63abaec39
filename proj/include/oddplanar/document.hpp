#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

inline constexpr const char* kDocumentFormat = "oddplanar-drawing";
inline constexpr int kDocumentVersion = 1;

/// Optional provenance stored next to a drawing.
struct DocumentMeta {
  std::optional<std::uint64_t> seed;
  std::string generator;
  std::optional<int> k;

  bool operator==(const DocumentMeta&) const = default;
};

/// JSON text of the drawing, exactly as stored (no renumbering): sorted keys,
/// integers only, one fixed layout. Equal drawings give equal bytes.
std::string serialize_drawing(const Drawing& d, const DocumentMeta& meta = {});

/// Inverse of serialize_drawing. Throws Error(ParseError) with a line:column
/// or field locus for malformed documents and Error(ValidationError) listing
/// the violations when the map is not a valid drawing. With `check` false
/// the map is returned unvalidated, for reporting violations.
Drawing parse_drawing(std::string_view text, DocumentMeta* meta = nullptr, bool check = true);

/// Whole file as text. Throws Error(ParseError) if it cannot be read.
std::string read_text_file(const std::string& path);
Drawing load_drawing(const std::string& path, DocumentMeta* meta = nullptr, bool check = true);

/// Multigraph document: {"format": "oddplanar-graph", "vertices": [...],
/// "edges": [[id, u, v], ...]}. A drawing document is also accepted, and
/// its graph is returned.
Multigraph parse_graph(std::string_view text);
std::string serialize_graph(const Multigraph& g);

}  // namespace oddplanar
