#ifndef CBENUM_RECOGNITION_HPP
#define CBENUM_RECOGNITION_HPP

#include <string>
#include <variant>
#include <vector>

#include "cbenum/graph.hpp"
#include "cbenum/ordering.hpp"

namespace cbenum {

/// Elimination order: each vertex is weak-simplicial in the graph induced by
/// itself and every later vertex.
struct Cbeo {
  std::vector<Vertex> order;
};

struct CbeoFound {
  Cbeo cbeo;
};
struct OddCycle {
  std::vector<Vertex> cycle;
};
/// Chordless cycle of length >= 6.
struct LongInducedCycle {
  std::vector<Vertex> cycle;
};
/// Non-empty residue in which no vertex is weak-simplicial.
struct StuckResidue {
  VertexSet residue;
};

using Certificate = std::variant<CbeoFound, OddCycle, LongInducedCycle, StuckResidue>;

/// Repeatedly deletes the highest-ranked weak-simplicial vertex of the
/// residual graph. Returns CbeoFound or StuckResidue.
Certificate find_cbeo(const Graph& g, const VertexSet& x, const Ranking& r);

struct Recognition {
  bool chordal_bipartite = false;
  Certificate certificate;
};

/// Bipartiteness, then elimination. A stuck residue is turned into a
/// LongInducedCycle certificate by bounded search.
Recognition is_chordal_bipartite(const Graph& g, const VertexSet& x);
Recognition is_chordal_bipartite(const Graph& g);

/// Throws InputError unless `order` is a permutation of X.
bool verify_cbeo(const Graph& g, const VertexSet& x, const Cbeo& order);

/// Consecutive (cyclically) vertices adjacent, all others non-adjacent,
/// vertices distinct, length >= 3.
bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// Structural check of a certificate against G[X]: cycles are chordless with
/// the right parity/length, CBEOs verify, residues really are stuck.
bool verify_certificate(const Graph& g, const VertexSet& x, const Certificate& c);

/// Human-readable certificate lines, e.g. "induced-cycle 1 2 3 4 5 6".
std::string describe(const Certificate& c);

}  // namespace cbenum

#endif  // CBENUM_RECOGNITION_HPP
