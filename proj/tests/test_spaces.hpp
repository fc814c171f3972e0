#pragma once

#include <string>
#include <vector>

#include "ih/constructions.hpp"

// Shared fixture spaces for the test suites.
namespace spaces {

using ih::Simplex;
using ih::SimplicialComplex;
using ih::StratifiedComplex;
using ih::Stratification;
using ih::Subcomplex;

inline SimplicialComplex circle(int n, const std::string& prefix = "c") {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (auto& e : edges)
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    return SimplicialComplex(names, edges);
}

inline SimplicialComplex sphere_tetrahedron() {
    return SimplicialComplex({"A", "B", "C", "D"},
                             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline SimplicialComplex sphere_octahedron() {
    // xp xm yp ym zp zm
    std::vector<std::string> names{"xp", "xm", "yp", "ym", "zp", "zm"};
    std::vector<Simplex> faces;
    for (int x : {0, 1})
        for (int y : {2, 3})
            for (int z : {4, 5}) faces.push_back({x, y, z});
    return SimplicialComplex(names, faces);
}

// The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7() {
    std::vector<std::string> names;
    for (int i = 0; i < 7; ++i) names.push_back("t" + std::to_string(i));
    std::vector<Simplex> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    for (auto& f : faces) std::sort(f.begin(), f.end());
    return SimplicialComplex(names, faces);
}

// A 12-vertex Klein bottle: 4x3 grid, direct vertical wrap, flipped
// horizontal wrap.
inline SimplicialComplex klein12() {
    auto id = [](int i, int j) { return 3 * ((i % 4 + 4) % 4) + ((j % 3 + 3) % 3); };
    std::vector<std::string> names;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) names.push_back("k" + std::to_string(i) + std::to_string(j));
    auto right = [&](int i, int j, int& ri, int& rj) {
        if (i < 3) {
            ri = i + 1;
            rj = j;
        } else {
            ri = 0;
            rj = (3 - j) % 3;
        }
    };
    std::vector<Simplex> faces;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 3; ++j) {
            int ri, rj, ri2, rj2;
            right(i, j, ri, rj);
            right(i, j + 1, ri2, rj2);
            int a = id(i, j), b = id(ri, rj), c = id(i, j + 1), d = id(ri2, rj2);
            Simplex f1{a, b, d}, f2{a, d, c};
            std::sort(f1.begin(), f1.end());
            std::sort(f2.begin(), f2.end());
            faces.push_back(f1);
            faces.push_back(f2);
        }
    }
    return SimplicialComplex(names, faces);
}

// Two circles sharing one vertex, the crossing declared at codimension 2.
inline StratifiedComplex crossing_circles() {
    std::vector<std::string> names{"P", "a1", "a2", "a3", "b1", "b2", "b3"};
    std::vector<Simplex> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}};
    StratifiedComplex out;
    out.complex = SimplicialComplex(names, edges);
    out.strat.members.push_back({2, Subcomplex(out.complex, {{0}})});
    return out;
}

// Two tetrahedral spheres glued at one vertex (crossing projective lines).
inline StratifiedComplex crossing_spheres() {
    std::vector<std::string> names{"P", "A", "B", "C", "D", "E", "F"};
    std::vector<Simplex> faces;
    for (auto f : std::vector<Simplex>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
        faces.push_back(f);
    for (auto f : std::vector<Simplex>{{0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}})
        faces.push_back(f);
    StratifiedComplex out;
    out.complex = SimplicialComplex(names, faces);
    out.strat.members.push_back({2, Subcomplex(out.complex, {{0}})});
    return out;
}

inline StratifiedComplex unstratified(const SimplicialComplex& x) { return {x, {}}; }

} // namespace spaces
