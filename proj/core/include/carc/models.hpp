#pragma once

#include <stdexcept>
#include <vector>

#include "carc/graph.hpp"
#include "carc/words.hpp"

namespace carc {

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Circular word over v^0, v^1 for v < n; the arc of v runs clockwise from v^0
// to v^1. The graph is the intersection graph of the arcs.
struct ArcModel {
  CircularWord word;
  Graph graph;

  ArcModel() = default;
  explicit ArcModel(CircularWord w);
  int order() const { return graph.order(); }
};

// Same word read as chords; graph is the overlap graph of the modelled graph.
struct ChordModel {
  CircularWord word;
  Graph graph;
};

// Number of vertices of a word over v^0, v^1; throws unless every vertex
// 0..n-1 contributes exactly its two letters.
int vertex_count(const std::vector<Letter>& letters);

// Positions of the endpoints of every arc inside one rotation of a word.
class EndpointIndex {
 public:
  EndpointIndex(const std::vector<Letter>& letters, int n);

  std::size_t pos(int v, int sup) const { return pos_[2 * v + sup]; }
  std::size_t size() const { return size_; }
  void set(Letter l, std::size_t p) { pos_[2 * l.symbol + l.sup] = p; }
  // Whether position p lies strictly inside the arc v^0 -> v^1.
  bool inside(int v, std::size_t p) const;
  // Geometric relation of the arcs, read "v REL u".
  PairRelation relation(int v, int u) const;

 private:
  std::vector<std::size_t> pos_;
  std::size_t size_;
};

Graph intersection_graph(const CircularWord& w);

struct Violation {
  enum class Kind { Relation, Intersection };
  Kind kind;
  int v;
  int u;
  PairRelation expected;
  PairRelation actual;
};

// Pairs whose arcs do not realise the relation required by G. An empty result
// means m is a normalized model of G.
std::vector<Violation> check_normalized(const Graph& g, const ArcModel& m);

// One elementary step of a normalization: `letter` moves outward over the
// adjacent `passed` (ends clockwise, starts counter-clockwise).
struct EndpointMove {
  Letter letter;
  Letter passed;
};

// Turns a model of a twin-free, universal-free graph into a normalized one by
// moving endpoints outward only. When trace is given it receives the steps.
ArcModel normalize(const Graph& g, const ArcModel& m, std::vector<EndpointMove>* trace = nullptr);

ChordModel arcs_to_chords(const ArcModel& m);
ArcModel chords_to_arcs(const ChordModel& c, const Graph& g);

// Conformality of the chords of U in w with respect to the relations of G.
bool check_conformal(const Graph& g, const CircularWord& w, const VertexList& u);
bool check_conformal(const SideSets& sides, const Graph& g, const CircularWord& w,
                     const VertexList& u);

// m restricted to the origin vertices of rep, relabelled to the vertices of rep.base.
ArcModel base_model(const ArcModel& m, const Representation& rep);

}  // namespace carc
