#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "oddplanar/bounds.hpp"
#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/document.hpp"
#include "oddplanar/enumerate.hpp"
#include "oddplanar/pipeline.hpp"
#include "oddplanar/search.hpp"
#include "oddplanar/validate.hpp"

namespace oddplanar {

using Json = nlohmann::json;

/// Stable text form used for every document and report: keys sorted,
/// containers that fit on one line kept inline, everything else one element
/// per line, trailing newline.
std::string json_text(const Json& j);

/// The drawing document as a JSON value (serialize_drawing prints this).
Json drawing_json(const Drawing& d, const DocumentMeta& meta = {});

Json to_json(const std::vector<Violation>& violations);
/// Nine-variant report: cr, pcr, ocr under rules +, 0, - (null when the
/// rule rejects the drawing), ocr under the star rule, flags and pair counts.
Json to_json(const CrossingStats& st);
Json to_json(const BoundReport& r);
Json to_json(const SampleStats& s);
/// Includes the best drawing as a document.
Json to_json(const SearchResult& r);
/// Trace only; the result drawing is left to the caller.
Json to_json(const PipelineTrace& t);
Json to_json(const CrossingValue& v);

}  // namespace oddplanar
