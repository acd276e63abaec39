#pragma once

#include <set>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

/// Inherited drawing without the given edges: their passes are deleted and
/// every crossing they took part in is smoothed away. Surviving pairs keep
/// their exact crossing counts. Throws Error(UnknownEdge).
Drawing remove_edges(const Drawing& d, const std::set<EdgeId>& edges);

/// Keeps exactly the vertices in `vs` and the edges with both endpoints in
/// `vs`. Throws Error(UnknownVertex).
Drawing induced_subdrawing(const Drawing& d, const std::set<VertexId>& vs);

/// Side-by-side union; the second drawing's vertex and edge ids are shifted
/// past the first drawing's largest ids.
Drawing disjoint_union(const Drawing& d1, const Drawing& d2);

/// Union of two drawings whose vertex and edge ids are already disjoint.
/// Throws Error(InvalidArgument) on a clash.
Drawing overlay_disjoint(const Drawing& d1, const Drawing& d2);

/// Copy with every vertex id shifted by `dv` and every edge id by `de`.
Drawing shift_ids(const Drawing& d, VertexId dv, EdgeId de);

}  // namespace oddplanar
