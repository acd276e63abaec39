#include "oddplanar/document.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "oddplanar/report.hpp"
#include "oddplanar/validate.hpp"

namespace oddplanar {

using nlohmann::json;

namespace {

constexpr const char* kGraphFormat = "oddplanar-graph";

[[noreturn]] void fail(const std::string& locus, const std::string& what) {
  throw Error(ErrorKind::ParseError, locus + ": " + what);
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ":" + std::to_string(col);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(line_col(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
}

const json& field(const json& obj, const char* key, const std::string& locus) {
  if (!obj.is_object()) fail(locus, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(locus, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int32_t to_id(const json& v, const std::string& locus) {
  if (!v.is_number_integer()) fail(locus, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<std::int32_t>::min() || x > std::numeric_limits<std::int32_t>::max()) {
    fail(locus, "integer out of range");
  }
  return static_cast<std::int32_t>(x);
}

const json& array(const json& v, const std::string& locus, std::size_t size = 0) {
  if (!v.is_array()) fail(locus, "expected an array");
  if (size != 0 && v.size() != size) fail(locus, "expected " + std::to_string(size) + " entries");
  return v;
}

std::vector<std::int32_t> id_list(const json& v, const std::string& locus) {
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < array(v, locus).size(); ++i) {
    out.push_back(to_id(v[i], locus + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json graph_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
  return {{"vertices", std::vector<VertexId>(g.vertices().begin(), g.vertices().end())},
          {"edges", edges}};
}

Multigraph graph_from(const json& j, const std::string& locus) {
  const auto vertices = id_list(field(j, "vertices", locus), locus + ".vertices");
  const json& ej = array(field(j, "edges", locus), locus + ".edges");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string at = locus + ".edges[" + std::to_string(i) + "]";
    const json& t = array(ej[i], at, 3);
    edges.push_back({to_id(t[0], at), to_id(t[1], at), to_id(t[2], at)});
  }
  try {
    return Multigraph(vertices, edges);
  } catch (const Error& e) {
    fail(locus, e.what());
  }
}

void check_header(const json& j, const char* format) {
  const json& f = field(j, "format", "document");
  if (!f.is_string() || f.get<std::string>() != format) fail("document.format", "expected \"" + std::string(format) + "\"");
  const json& v = field(j, "version", "document");
  if (!v.is_number_integer() || v.get<std::int64_t>() != kDocumentVersion) {
    fail("document.version", "unsupported version " + v.dump());
  }
}

}  // namespace

Json drawing_json(const Drawing& d, const DocumentMeta& meta) {
  json nodes = json::array();
  for (std::size_t n = 0; n < d.nodes().size(); ++n) {
    const MapNode& mn = d.nodes()[n];
    json node = {{"id", n},
                 {"kind", mn.kind == NodeKind::Vertex ? "real" : "crossing"},
                 {"rotation", mn.rotation}};
    if (mn.kind == NodeKind::Vertex) node["vertex"] = mn.vertex;
    nodes.push_back(std::move(node));
  }
  json darts = json::array();
  for (const MapDart& x : d.darts()) darts.push_back({x.twin, x.node, x.edge});
  json paths = json::array();
  for (std::size_t i = 0; i < d.graph().edge_count(); ++i) {
    paths.push_back({{"edge", d.graph().edges()[i].id}, {"darts", d.paths()[i]}});
  }
  json doc = {{"format", kDocumentFormat},
              {"version", kDocumentVersion},
              {"graph", graph_json(d.graph())},
              {"nodes", nodes},
              {"darts", darts},
              {"paths", paths}};
  json m = json::object();
  if (meta.seed) m["seed"] = *meta.seed;
  if (!meta.generator.empty()) m["generator"] = meta.generator;
  if (meta.k) m["k"] = *meta.k;
  if (!m.empty()) doc["meta"] = m;
  return doc;
}

std::string serialize_drawing(const Drawing& d, const DocumentMeta& meta) {
  return json_text(drawing_json(d, meta));
}

Drawing parse_drawing(std::string_view text, DocumentMeta* meta, bool check) {
  const json j = parse_text(text);
  check_header(j, kDocumentFormat);
  Multigraph g = graph_from(field(j, "graph", "document"), "graph");

  const json& nj = array(field(j, "nodes", "document"), "nodes");
  std::vector<MapNode> nodes;
  for (std::size_t n = 0; n < nj.size(); ++n) {
    const std::string at = "nodes[" + std::to_string(n) + "]";
    if (to_id(field(nj[n], "id", at), at + ".id") != static_cast<std::int32_t>(n)) {
      fail(at + ".id", "node ids must be 0, 1, 2, ... in order");
    }
    const json& kind = field(nj[n], "kind", at);
    MapNode node;
    if (kind == "real") {
      node.kind = NodeKind::Vertex;
      node.vertex = to_id(field(nj[n], "vertex", at), at + ".vertex");
    } else if (kind == "crossing") {
      node.kind = NodeKind::Crossing;
      if (nj[n].contains("vertex")) fail(at + ".vertex", "crossing nodes carry no vertex");
    } else {
      fail(at + ".kind", "expected \"real\" or \"crossing\"");
    }
    node.rotation = id_list(field(nj[n], "rotation", at), at + ".rotation");
    nodes.push_back(std::move(node));
  }

  const json& dj = array(field(j, "darts", "document"), "darts");
  std::vector<MapDart> darts;
  for (std::size_t i = 0; i < dj.size(); ++i) {
    const std::string at = "darts[" + std::to_string(i) + "]";
    const json& t = array(dj[i], at, 3);
    MapDart x{to_id(t[0], at), to_id(t[1], at), to_id(t[2], at)};
    if (x.node < 0 || static_cast<std::size_t>(x.node) >= nodes.size()) fail(at, "unknown node");
    darts.push_back(x);
  }

  const json& pj = array(field(j, "paths", "document"), "paths", 0);
  if (pj.size() != g.edge_count()) fail("paths", "expected one path per edge");
  std::vector<std::vector<DartId>> paths;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string at = "paths[" + std::to_string(i) + "]";
    if (to_id(field(pj[i], "edge", at), at + ".edge") != g.edges()[i].id) {
      fail(at + ".edge", "paths must follow the edge order");
    }
    paths.push_back(id_list(field(pj[i], "darts", at), at + ".darts"));
  }

  if (meta) {
    *meta = {};
    if (auto it = j.find("meta"); it != j.end()) {
      if (!it->is_object()) fail("meta", "expected an object");
      if (auto s = it->find("seed"); s != it->end()) {
        if (!s->is_number_unsigned()) fail("meta.seed", "expected a non-negative integer");
        meta->seed = s->get<std::uint64_t>();
      }
      if (auto s = it->find("generator"); s != it->end()) {
        if (!s->is_string()) fail("meta.generator", "expected a string");
        meta->generator = s->get<std::string>();
      }
      if (auto s = it->find("k"); s != it->end()) meta->k = to_id(*s, "meta.k");
    }
  }

  Drawing d(std::move(g), std::move(nodes), std::move(darts), std::move(paths));
  const auto violations = check ? validate_drawing(d) : std::vector<Violation>{};
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += std::string(to_string(v.kind)) + " at " + v.locus;
    }
    throw Error(ErrorKind::ValidationError, msg);
  }
  return d;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Drawing load_drawing(const std::string& path, DocumentMeta* meta, bool check) {
  return parse_drawing(read_text_file(path), meta, check);
}

Multigraph parse_graph(std::string_view text) {
  const json j = parse_text(text);
  const json& f = field(j, "format", "document");
  if (f == kDocumentFormat) return parse_drawing(text).graph();
  check_header(j, kGraphFormat);
  return graph_from(j, "document");
}

std::string serialize_graph(const Multigraph& g) {
  json doc = graph_json(g);
  doc["format"] = kGraphFormat;
  doc["version"] = kDocumentVersion;
  return json_text(doc);
}

}  // namespace oddplanar
