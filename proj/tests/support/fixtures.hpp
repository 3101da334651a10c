#pragma once

// Shared graph fixtures, kept as edge-list text so the same bytes exercise
// the parser, the library, and the CLI.

#include <string>

#include "threading/graph.hpp"

namespace fixtures {

inline const char* kTriangle = "a b\nb c\nc a\n";
inline const char* kWeightedTriangle = "a b 1.5\nb c 1.5\nc a 3\n";
inline const char* kK4 = "a b\na c\na d\nb c\nb d\nc d\n";

// Two vertices joined by three internally disjoint length-2 paths.
inline const char* kTheta = "u p1\np1 v\nu p2\np2 v\nu p3\np3 v\n";

// Triangles abc and def joined by the bridge cd.
inline const char* kTwoTrianglesBridge = "a b\nb c\nc a\nc d\nd e\ne f\nf d\n";

// Two triangles joined by a three-edge path (c-p1, p1-p2, p2-d).
inline const char* kTrianglesPath =
    "a b\nb c\nc a\nc p1\np1 p2\np2 d\nd e\ne f\nf d\n";

// Center x joined by one bridge to each of three disjoint triangles;
// n=10, m=12, x is the only vertex all of whose edges are bridges.
inline const char* kTriangleStar =
    "x a1\na1 a2\na2 a3\na3 a1\n"
    "x b1\nb1 b2\nb2 b3\nb3 b1\n"
    "x c1\nc1 c2\nc2 c3\nc3 c1\n";

// Degree-5 center v on two 6-cycles plus a bridge to u, which sits on a
// triangle. The unique optimum threads the bridge 4 = max_degree - 1 times
// (cost +6 with the doubled triangle; doubling a 6-cycle instead costs +7).
inline const char* kBridgeHub =
    "v a1\na1 a2\na2 a3\na3 a4\na4 a5\na5 v\n"
    "v b1\nb1 b2\nb2 b3\nb3 b4\nb4 b5\nb5 v\n"
    "v u\nu c1\nc1 c2\nc2 u\n";

// Two triangles sharing the cut vertex s.
inline const char* kBowtie = "s a\na b\nb s\ns c\nc d\nd s\n";

inline const char* kPrism = "a b\nb c\nc a\nd e\ne f\nf d\na d\nb e\nc f\n";

inline const char* kQ3 =
    "000 001\n000 010\n000 100\n001 011\n001 101\n010 011\n010 110\n"
    "011 111\n100 101\n100 110\n101 111\n110 111\n";

inline const char* kPetersen =
    "o0 o1\no1 o2\no2 o3\no3 o4\no4 o0\n"
    "o0 i0\no1 i1\no2 i2\no3 i3\no4 i4\n"
    "i0 i2\ni1 i3\ni2 i4\ni3 i0\ni4 i1\n";

// Generalized Petersen graph GP(8,3): n=16, m=24, cubic, girth 6.
inline std::string mobius_kantor() {
  std::string text;
  for (int i = 0; i < 8; ++i) {
    text += "o" + std::to_string(i) + " o" + std::to_string((i + 1) % 8) + "\n";
    text += "o" + std::to_string(i) + " i" + std::to_string(i) + "\n";
    text += "i" + std::to_string(i) + " i" + std::to_string((i + 3) % 8) + "\n";
  }
  return text;
}

inline std::string cycle(int n) {
  std::string text;
  for (int i = 0; i < n; ++i)
    text += "c" + std::to_string(i) + " c" + std::to_string((i + 1) % n) + "\n";
  return text;
}

inline threading::Graph graph(const std::string& text) { return threading::Graph::parse(text); }

}  // namespace fixtures
