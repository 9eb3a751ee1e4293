#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

enum class Parity { Odd, Even, Mixed };

std::string parity_name(Parity p);

// Chordless cycle of length >= 4, listed in cyclic order.
struct HoleWitness {
    std::vector<VertexId> cycle;

    int length() const { return static_cast<int>(cycle.size()); }
    bool odd() const { return length() % 2 == 1; }
};

// Vertex set whose complement-induced subgraph is a hole; `cycle` is that
// hole in cyclic order of the complement.
struct AntiholeWitness {
    std::vector<VertexId> cycle;

    int length() const { return static_cast<int>(cycle.size()); }
    bool odd() const { return length() % 2 == 1; }
};

// Two disjoint triangles a, b joined by three vertex-disjoint paths, path i
// running from a.v[i] to b.v[i]; no edges besides the triangles and the
// paths.  a.v ascends; b.v is listed in pairing order, not sorted.
struct PrismWitness {
    Triangle a, b;
    std::array<Path, 3> paths;

    Parity parity() const;
    std::vector<VertexId> vertex_list() const;
};

// Apex joined to the triangle by three paths sharing only the apex; the apex
// is adjacent to at most one triangle vertex.
struct PyramidWitness {
    VertexId apex;
    Triangle triangle;
    std::array<Path, 3> paths;  // path i runs from apex to triangle.v[i]

    std::vector<VertexId> vertex_list() const;
};

// Line graph of a subdivision of K4.  The four underlying branch vertices are
// indexed 0..3; corner(x, y) is the vertex of basic triangle x that starts
// the rung toward triangle y.  rung(x, y) runs from corner(x, y) to
// corner(y, x); a rung of length 0 is a single vertex filling both corner
// slots.
struct LGK4Witness {
    std::array<std::array<VertexId, 4>, 4> corners;  // [x][y], diagonal unused (-1)
    std::vector<Path> rungs;                         // six, pair order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    bool proper = false;                             // some rung has length >= 1
    bool bipartite = false;                          // the subdivision of K4 is bipartite

    static int rung_index(int x, int y);
    VertexId corner(int x, int y) const { return corners[x][y]; }
    const Path& rung(int x, int y) const;
    // Midpoint of rung (x,y): the vertex at floor(len/2) from corner(x,y).
    VertexId midpoint(int x, int y) const;
    std::vector<VertexId> vertex_list() const;
};

struct StructureWitness {
    std::variant<PrismWitness, PyramidWitness> w;

    bool is_prism() const { return std::holds_alternative<PrismWitness>(w); }
    const PrismWitness& prism() const { return std::get<PrismWitness>(w); }
    const PyramidWitness& pyramid() const { return std::get<PyramidWitness>(w); }
    std::vector<VertexId> vertex_list() const;
};

// ---- validation (independent re-checks, used by tests and --oracle) ----

// Each validator re-derives every structural invariant from the graph alone.
// On failure returns an explanation, on success std::nullopt.
std::optional<std::string> validate_hole(const Graph& g, const HoleWitness& w, int min_length = 4);
std::optional<std::string> validate_antihole(const Graph& g, const AntiholeWitness& w, int min_length = 4);
std::optional<std::string> validate_prism(const Graph& g, const PrismWitness& w);
std::optional<std::string> validate_pyramid(const Graph& g, const PyramidWitness& w);
std::optional<std::string> validate_lgk4(const Graph& g, const LGK4Witness& w);
std::optional<std::string> validate_structure(const Graph& g, const StructureWitness& w);

}  // namespace prismatic
