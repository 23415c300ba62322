#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonsep/digraph.hpp"

namespace nonsep {

enum class GalleryName { W1, W2, S4, S4_1, S4_2, S4_3, DTILDE, DHAT, TR, DR, NO2COL };

struct GalleryId {
    GalleryName name = GalleryName::W1;
    int r = 4;  // TR, DR: path length; NO2COL: order of the rotational tournament
    Vertex marked = 0;  // NO2COL: the vertex x of the tournament

    static GalleryId parse(const std::string& name, std::optional<int> r = std::nullopt);
};
std::string to_string(GalleryName n);

struct GalleryGraph {
    Digraph graph;
    std::vector<std::string> labels;
    std::vector<int> blocks;  // NO2COL: copy index 0..3 per vertex; DR: copy 0..1
};

GalleryGraph build(const GalleryId& id);

// Digraph on 2r+4 vertices. u_i is vertex i, v_i is vertex r+2+i.
Digraph tournament_tr(int r);
inline Vertex tr_u(int r, int i) { (void)r; return i; }
inline Vertex tr_v(int r, int i) { return r + 2 + i; }

// Rotational tournament on odd n: i -> i+1, ..., i+(n-1)/2 (mod n).
Digraph rotational_tournament(int n);

// Four copies of `t` joined as in the two-strong-partition obstruction. The
// copy of `x` in copy i is vertex i*|t| + x.
GalleryGraph no2col(const Digraph& t, Vertex x);

}  // namespace nonsep
