#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "carc/graph.hpp"
#include "carc/models.hpp"
#include "carc/words.hpp"

// Exhaustive reference implementations for small graphs. Nothing here calls
// into the code it is used to check.
namespace carc::oracle {

// Visits every circular word over v^0, v^1 (v < n) once per rotation class,
// as the linear word starting with 0^0.
void for_each_arc_word(int n, const std::function<void(const std::vector<Letter>&)>& visit);
std::vector<ArcModel> gen_arc_models(int n);

// Intersection graph computed directly from endpoint positions.
Graph arc_graph(const std::vector<Letter>& word);

bool brute_iso(const Graph& g, const Graph& h);

// Every conformal model of g, as canonical rotations in ascending order.
// Limited to 9 vertices.
std::vector<CircularWord> brute_conformal_models(const Graph& g);

std::vector<VertexList> brute_modules(const Graph& g);
// Modules overlapping no other module.
std::vector<VertexList> brute_strong_modules(const Graph& g);

// Orientations of all edges that are transitive.
std::size_t brute_transitive_orientation_count(const Graph& g);

struct CorpusEntry {
  Graph graph;
  ArcModel model;
};

// Circular-arc graphs on 1..max_n vertices, one model each, pairwise
// non-isomorphic.
std::vector<CorpusEntry> build_corpus(int max_n);

// Header "n <max_n> count <k>", then one comma-separated word per line.
void write_corpus(std::ostream& out, int max_n, const std::vector<CorpusEntry>& corpus);
std::vector<CorpusEntry> read_corpus(std::istream& in, int* max_n = nullptr);

}  // namespace carc::oracle
