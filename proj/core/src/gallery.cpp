#include "nonsep/gallery.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/semicomplete.hpp"

namespace nonsep {

std::string to_string(GalleryName n) {
    switch (n) {
        case GalleryName::W1: return "W1";
        case GalleryName::W2: return "W2";
        case GalleryName::S4: return "S4";
        case GalleryName::S4_1: return "S4_1";
        case GalleryName::S4_2: return "S4_2";
        case GalleryName::S4_3: return "S4_3";
        case GalleryName::DTILDE: return "DTILDE";
        case GalleryName::DHAT: return "DHAT";
        case GalleryName::TR: return "TR";
        case GalleryName::DR: return "DR";
        case GalleryName::NO2COL: return "NO2COL";
    }
    return "?";
}

GalleryId GalleryId::parse(const std::string& name, std::optional<int> r) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    for (GalleryName g : {GalleryName::W1, GalleryName::W2, GalleryName::S4, GalleryName::S4_1, GalleryName::S4_2,
                          GalleryName::S4_3, GalleryName::DTILDE, GalleryName::DHAT, GalleryName::TR, GalleryName::DR,
                          GalleryName::NO2COL}) {
        if (to_string(g) == up) {
            GalleryId id;
            id.name = g;
            if (g == GalleryName::NO2COL) id.r = 5;
            if (r) id.r = *r;
            return id;
        }
    }
    throw PreconditionError("unknown gallery name: " + name);
}

Digraph tournament_tr(int r) {
    if (r < 2) throw PreconditionError("T_r requires r >= 2");
    const int n = 2 * r + 4;
    auto u = [&](int i) { return tr_u(r, i); };
    auto v = [&](int i) { return tr_v(r, i); };
    std::vector<Arc> listed;
    for (int i = 1; i <= r; ++i) listed.push_back({u(i - 1), u(i)});
    for (int i = 1; i <= r; ++i) listed.push_back({v(i), v(i + 1)});
    for (int i = 1; i <= r; ++i) listed.push_back({u(i), v(i)});
    for (Arc a : std::initializer_list<Arc>{{v(1), v(0)}, {v(0), u(0)}, {v(0), u(1)}, {u(0), v(1)},
                                             {u(r + 1), u(r)}, {v(r + 1), u(r + 1)}, {u(r), v(r + 1)},
                                             {v(r), u(r + 1)}})
        listed.push_back(a);
    auto index_of = [&](Vertex x) { return x <= r + 1 ? x : x - (r + 2); };
    std::set<std::pair<Vertex, Vertex>> covered;
    Digraph d(n);
    for (Arc a : listed) {
        d.add_arc(a.tail, a.head);
        covered.insert({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (covered.count({x, y})) continue;
            if (index_of(x) == index_of(y)) throw InternalInvariantError("T_r: unlisted pair with equal index");
            if (index_of(x) > index_of(y)) d.add_arc(x, y);
            else d.add_arc(y, x);
        }
    return d;
}

Digraph rotational_tournament(int n) {
    if (n < 3 || n % 2 == 0) throw PreconditionError("rotational tournament requires odd n >= 3");
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= (n - 1) / 2; ++k) d.add_arc(i, (i + k) % n);
    return d;
}

GalleryGraph no2col(const Digraph& t, Vertex x) {
    const int m = t.order();
    if (x < 0 || x >= m) throw PreconditionError("NO2COL: marked vertex out of range");
    if (!is_semicomplete(t) || !is_oriented(t)) throw PreconditionError("NO2COL: base must be a tournament");
    if (!is_k_arc_strong(t, 2)) throw PreconditionError("NO2COL: base tournament must be 2-arc-strong");
    GalleryGraph g;
    g.graph = Digraph(4 * m);
    for (int c = 0; c < 4; ++c)
        for (const Arc& a : t.arcs()) g.graph.add_arc(c * m + a.tail, c * m + a.head);
    auto xi = [&](int i) { return (i - 1) * m + x; };
    // 4-cycle x1 x3 x2 x4 x1, then x1x2 and x3x4.
    g.graph.add_arc(xi(1), xi(3));
    g.graph.add_arc(xi(3), xi(2));
    g.graph.add_arc(xi(2), xi(4));
    g.graph.add_arc(xi(4), xi(1));
    g.graph.add_arc(xi(1), xi(2));
    g.graph.add_arc(xi(3), xi(4));
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < m; ++b) {
            g.graph.add_arc(1 * m + a, 0 * m + b);
            g.graph.add_arc(3 * m + a, 2 * m + b);
        }
    for (int c = 0; c < 4; ++c)
        for (Vertex v = 0; v < m; ++v) {
            g.labels.push_back("T" + std::to_string(c + 1) + "." + std::to_string(v));
            g.blocks.push_back(c);
        }
    return g;
}

GalleryGraph build(const GalleryId& id) {
    GalleryGraph g;
    auto name_all = [&](std::initializer_list<const char*> names) {
        for (const char* s : names) g.labels.emplace_back(s);
    };
    switch (id.name) {
        case GalleryName::W1:
            g.graph = reference_w1();
            name_all({"p1", "p2", "p3", "p4"});
            break;
        case GalleryName::W2:
            g.graph = reference_w2();
            name_all({"r1", "r2", "r3", "r4"});
            break;
        case GalleryName::S4:
        case GalleryName::S4_1:
        case GalleryName::S4_2:
        case GalleryName::S4_3: {
            S4Variant v = id.name == GalleryName::S4     ? S4Variant::S4
                          : id.name == GalleryName::S4_1 ? S4Variant::S4_1
                          : id.name == GalleryName::S4_2 ? S4Variant::S4_2
                                                         : S4Variant::S4_3;
            g.graph = reference_s4(v);
            name_all({"a", "b", "c", "d"});
            break;
        }
        case GalleryName::DTILDE: {
            // a b c x y z
            g.graph = Digraph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {4, 2},
                                  {2, 3}, {3, 1}, {1, 5}, {5, 0}, {2, 0}, {5, 3}});
            name_all({"a", "b", "c", "x", "y", "z"});
            break;
        }
        case GalleryName::DHAT: {
            g.graph = Digraph(8);
            for (int i = 0; i < 8; ++i) g.graph.add_arc(i, (i + 1) % 8);
            for (int i = 0; i < 8; ++i) g.graph.add_arc(i, (i + 6) % 8);
            for (int i = 1; i <= 8; ++i) g.labels.push_back("v" + std::to_string(i));
            break;
        }
        case GalleryName::TR: {
            g.graph = tournament_tr(id.r);
            for (int i = 0; i <= id.r + 1; ++i) g.labels.push_back("u" + std::to_string(i));
            for (int i = 0; i <= id.r + 1; ++i) g.labels.push_back("v" + std::to_string(i));
            break;
        }
        case GalleryName::DR: {
            const Digraph t = tournament_tr(id.r);
            const int m = t.order();
            g.graph = Digraph(2 * m);
            for (int c = 0; c < 2; ++c)
                for (const Arc& a : t.arcs()) g.graph.add_arc(c * m + a.tail, c * m + a.head);
            for (int c = 0; c < 2; ++c) {
                const int other = (1 - c) * m;
                g.graph.add_arc(c * m + tr_u(id.r, 0), other + tr_v(id.r, 0));
                g.graph.add_arc(c * m + tr_v(id.r, 1), other + tr_v(id.r, 0));
            }
            for (int c = 1; c <= 2; ++c) {
                for (int i = 0; i <= id.r + 1; ++i) g.labels.push_back("u" + std::to_string(i) + "^" + std::to_string(c));
                for (int i = 0; i <= id.r + 1; ++i) g.labels.push_back("v" + std::to_string(i) + "^" + std::to_string(c));
                for (int i = 0; i < m; ++i) g.blocks.push_back(c - 1);
            }
            break;
        }
        case GalleryName::NO2COL:
            return no2col(rotational_tournament(id.r), id.marked);
    }
    return g;
}

}  // namespace nonsep
