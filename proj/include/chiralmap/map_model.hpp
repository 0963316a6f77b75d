#pragma once

// Package a verified generator set as an orientably-regular map record
// (vertex/edge/face counts, Euler characteristic, genus) and export the
// permutation diagram as DOT.

#include <string>

#include "bigint.hpp"
#include "chirality.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "group.hpp"

namespace chiralmap {

struct MapRecord {
  HyperbolicType type;
  Point degree = 0;
  GroupClassification group;
  BigInt group_order = 0;
  BigInt vertices = 0, edges = 0, faces = 0;
  BigInt euler_characteristic = 0;
  BigInt genus = 0;
  ChiralityVerdict chirality;
  ConstructionParams construction;
};

// V = |G|/n, E = |G|/2, F = |G|/m; chi = V - E + F = 2 - 2g.
inline MapRecord build_record(const GeneratorSet& g, const GroupClassification& cls,
                              const ChiralityVerdict& ch) {
  if (!cls.order_known) throw DivisibilityViolation("group order unknown; cannot build record");
  const BigInt& ord = cls.order;
  auto exact_div = [&](unsigned d, const char* what) {
    if (d == 0 || ord % d != 0)
      throw DivisibilityViolation(std::string(what) + " does not divide the group order");
    return BigInt(ord / d);
  };
  MapRecord rec;
  rec.type = g.type;
  rec.degree = g.degree;
  rec.group = cls;
  rec.group_order = ord;
  rec.vertices = exact_div(g.type.n, "n");
  rec.edges = exact_div(2, "2");
  rec.faces = exact_div(g.type.m, "m");
  rec.euler_characteristic = rec.vertices - rec.edges + rec.faces;
  BigInt two_g = 2 - rec.euler_characteristic;
  if (two_g < 0 || two_g % 2 != 0)
    throw DivisibilityViolation("Euler characteristic does not give an integer genus");
  rec.genus = two_g / 2;
  rec.chirality = ch;
  rec.construction = g.params;
  return rec;
}

// Deterministic DOT export of the permutation diagram: blue undirected edges
// for t's transpositions, red directed arcs for the rotation's successor
// relation (s, or r for the r,t-based constructions), fixed points isolated.
inline std::string export_dot(const GeneratorSet& g) {
  const Perm& rot = g.diagram_uses_r ? g.r : g.s;
  std::string out = "digraph permutation_diagram {\n";
  out += "  node [shape=circle];\n";
  for (Point x = 0; x < g.degree; ++x) out += "  \"" + g.labels.label(x) + "\";\n";
  for (const auto& c : cycle_decomposition(rot).cycles)
    for (std::size_t j = 0; j < c.size(); ++j)
      out += "  \"" + g.labels.label(c[j]) + "\" -> \"" + g.labels.label(c[(j + 1) % c.size()]) +
             "\" [color=red];\n";
  for (const auto& c : cycle_decomposition(g.t).cycles)
    out += "  \"" + g.labels.label(c[0]) + "\" -> \"" + g.labels.label(c[1]) +
           "\" [color=blue, dir=none];\n";
  out += "}\n";
  return out;
}

}  // namespace chiralmap
