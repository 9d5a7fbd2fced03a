#ifndef SPINEKIT_TESTS_FIXTURES_HPP
#define SPINEKIT_TESTS_FIXTURES_HPP

// Hand-built spines reused across the test binaries. These mirror the
// documents shipped in corpus/ but are constructed in code so the model
// layer can be exercised without the JSON reader.

#include <spinekit/model.hpp>

namespace spinekit::tests {

using namespace spinekit::model;

// One vertex, two edges, two disk regions; the singular set closes into a
// single circuit e1 -> e2 -> e1. Smallest spine with a vertex.
inline Spine abalone() {
  Spine s;
  s.name = "abalone";
  s.vertices = {{"v1", VertexType::L, {OutPort::out2, OutPort::out1}}};
  s.edges = {
      {"e1", EdgeKind::arc, TailRef{"v1", OutPort::out1}, HeadRef{"v1", InPort::in1}},
      {"e2", EdgeKind::arc, TailRef{"v1", OutPort::out2}, HeadRef{"v1", InPort::in2}},
  };
  s.regions = {
      {"R1", 1, {{{"e1", -1}}}},
      {"R2", 1, {{{"e2", 1}, {"e1", 1}, {"e2", -1}, {"e1", 1}, {"e2", 1}}}},
  };
  return s;
}

// Three vertices, six edges, four disk regions; the singular set splits into
// two circuits (e1 e2 e6) and (e3 e4 e5). Admissible but not a flow spine.
inline Spine tangency_free() {
  Spine s;
  s.name = "tangency-free";
  s.vertices = {
      {"v1", VertexType::L, {OutPort::out1, OutPort::out2}},
      {"v2", VertexType::R, {OutPort::out1, OutPort::out2}},
      {"v3", VertexType::L, {OutPort::out1, OutPort::out2}},
  };
  s.edges = {
      {"e1", EdgeKind::arc, TailRef{"v3", OutPort::out1}, HeadRef{"v1", InPort::in1}},
      {"e2", EdgeKind::arc, TailRef{"v1", OutPort::out1}, HeadRef{"v2", InPort::in1}},
      {"e3", EdgeKind::arc, TailRef{"v1", OutPort::out2}, HeadRef{"v3", InPort::in2}},
      {"e4", EdgeKind::arc, TailRef{"v3", OutPort::out2}, HeadRef{"v2", InPort::in2}},
      {"e5", EdgeKind::arc, TailRef{"v2", OutPort::out2}, HeadRef{"v1", InPort::in2}},
      {"e6", EdgeKind::arc, TailRef{"v2", OutPort::out1}, HeadRef{"v3", InPort::in1}},
  };
  s.regions = {
      {"R1", 1, {{{"e6", 1}}}},
      {"R2", 1, {{{"e2", -1}, {"e3", -1}}}},
      {"R3", 1, {{{"e1", 1}, {"e2", 1}, {"e5", -1}, {"e6", -1}, {"e5", 1}}}},
      {"R4",
       1,
       {{{"e1", 1},
         {"e4", 1},
         {"e5", 1},
         {"e3", 1},
         {"e1", -1},
         {"e3", 1},
         {"e4", 1},
         {"e6", 1},
         {"e4", -1},
         {"e2", 1}}}},
  };
  return s;
}

// Vertex-free spine: one circle edge, a disk and an annulus. The positive
// cone of its incidence matrix is empty.
inline Spine s1xs2() {
  Spine s;
  s.name = "s1xs2";
  s.vertices = {};
  s.edges = {{"e1", EdgeKind::circle, std::nullopt, std::nullopt}};
  s.regions = {
      {"R1", 1, {{{"e1", 1}}}},
      {"R2", 0, {{{"e1", 1}}, {{"e1", -1}}}},
  };
  return s;
}

}  // namespace spinekit::tests

#endif
