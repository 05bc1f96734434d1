#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loosehc/hypergraph.hpp"
#include "loosehc/paths.hpp"
#include "loosehc/rational.hpp"
#include "loosehc/rng.hpp"

namespace loosehc {

// ---- gadget templates -------------------------------------------------------

enum class GadgetKind { A2, A1, backbone1, contracted_backbone };

std::string gadget_name(GadgetKind kind);

/// Abstract labeled gadget. Traversal patterns list template vertex ids;
/// a negative entry -(s+1) stands for the interior of path slot s, oriented
/// by the explicit endpoints around it (slots are the length-4 paths the
/// A1 gadget leaves to the connector machinery).
struct GadgetTemplate {
  GadgetKind kind;
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<Edge> edges;
  std::vector<int> covering;
  std::vector<int> noncovering;
  std::vector<std::pair<int, int>> path_slots;
  int x = -1, y = -1;          // absorbed roles (x'/y' for the contracted kind)
  int join_in = -1, join_out = -1;

  int order() const { return static_cast<int>(labels.size()); }
  int id(const std::string& label) const { return index.at(label); }
  Hypergraph3 to_hypergraph() const { return Hypergraph3(order(), edges); }
  bool is_linear() const;
  std::string to_json() const;  // labeled vertices, edges, roles, traversals
};

GadgetTemplate build_gadget_template(GadgetKind kind);

// ---- m3-density -------------------------------------------------------------

struct M3Result {
  Rational value{0, 1};
  std::vector<Edge> witness;  // edge set of an achieving subgraph
};

/// Exact 3-density: max over subgraphs with >= 4 vertices of
/// (e'-1)/(v'-3), computed in rationals over all edge subsets. Graphs with
/// no such subgraph (or only negative ratios) report 0. Requires
/// e(H) <= 20.
M3Result m3_density(const Hypergraph3& h);

// ---- contraction ------------------------------------------------------------

struct ContractionSpec {
  std::vector<int> u1, u2;
  std::vector<std::array<int, 4>> tuples;

  void validate(const Hypergraph3& g) const;
};

struct Contraction {
  Hypergraph3 graph;
  // provenance[v] = single original vertex, or the 4-tuple it replaces
  std::vector<std::vector<int>> provenance;
  int first_tuple_vertex = 0;  // tuples occupy ids first_tuple_vertex..
};

/// The derived 3-graph G(U,F): vertex set U1 u U2 u one vertex per tuple;
/// edges of G[U1 u U2] plus w.u.v whenever u,v lie in U1 and w2uv is an
/// edge, or u,v lie in U2 and w4uv is.
Contraction contract(const Hypergraph3& g, const ContractionSpec& spec);

/// Greedy maximal expansion families around x inside W: disjoint pairs
/// {u,v} with xuv an edge, then disjoint 4-tuples (w1,w2,w3,w4) hooked to
/// some pair by edges u w1 w2 and v w3 w4. Sizes are reported, not
/// guaranteed.
struct ExpansionFamilies {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> tuple_pair;  // index into pairs supporting each tuple
};

ExpansionFamilies expansion_families(const Hypergraph3& g, int x, const std::vector<int>& w);

// ---- template graphs ----------------------------------------------------------

enum class TemplateMode {
  exact_small,            // complete graph on 2m vertices
  random_bounded_degree,  // bipartite expander + squared cycle on Z
  edge_pair,              // m = 2: a single matching edge
  ring,                   // m even: cycle on m+1 vertices, one spare
  square_ring,            // squared cycle on m+1 vertices
  auto_pick,
};

struct TemplateGraph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> z;  // distinguished set, |Z| = m
  int max_degree = 0;
  TemplateMode mode = TemplateMode::exact_small;
};

struct TemplateOptions {
  int random_degree = 10;  // D
  std::uint64_t seed = 0;
  int retries = 5;
  int sample_trials = 1000;
};

TemplateGraph build_template(int m, TemplateMode mode, const TemplateOptions& opts = {});

struct TemplateReport {
  bool ok = false;
  int checked = 0;
  int skipped_parity = 0;
  int failures = 0;
  std::vector<std::vector<int>> failing_sets;
  bool exhaustive = false;
};

/// For each admissible Z' c Z (|Z'| < m/2, |V \ Z'| even), decide whether
/// T - Z' has a perfect matching. Exhaustive mode enumerates all of them
/// (guarded); sampled mode draws `trials` random admissible sets.
TemplateReport verify_template(const TemplateGraph& t, bool exhaustive, int trials = 1000,
                               std::uint64_t seed = 0);

// ---- gadget embedding ----------------------------------------------------------

struct EmbedOptions {
  std::uint64_t node_budget = 500000;
  // optional per-template-vertex candidate restrictions
  std::map<int, std::vector<int>> allowed;
};

struct EmbedResult {
  std::optional<std::vector<int>> image;  // template id -> host vertex
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Injective embedding of the gadget into g - forbidden fixing the role
/// vertices; backtracking over template edges, most-constrained first,
/// candidates ascending.
EmbedResult find_gadget_embedding(const Hypergraph3& g, const GadgetTemplate& tmpl, int x, int y,
                                  const std::vector<int>& forbidden, const EmbedOptions& opts = {});

/// Exact number of injective 7-tuples (v1..v7) forming the A2 gadget on
/// fixed x,y. Exhaustive; requires n <= 16.
long long count_a2_embeddings(const Hypergraph3& g, int x, int y);

// ---- absorber assembly -----------------------------------------------------------

struct GadgetEmbedding {
  GadgetKind kind;
  std::vector<int> image;
  std::vector<LoosePath> slot_paths;  // aligned with template path slots
  LoosePath covering;
  LoosePath noncovering;
};

struct AbsorberAssembly {
  int a = -1, b = -1;
  std::vector<int> reservoir;  // R, sorted
  std::vector<int> r0;
  TemplateGraph tmpl;
  std::vector<int> f;  // template vertex -> host vertex, Z onto R
  std::vector<std::pair<int, int>> chain;
  std::vector<GadgetEmbedding> gadgets;
  std::vector<LoosePath> connectors;
  std::vector<int> total_vertices;  // sorted V(asm)
  bool degenerate = false;
  LoosePath degenerate_path;

  std::string to_json(const GadgetTemplate& tmpl_def) const;
};

struct AssembleParams {
  int d_mode = 2;  // 2: A2 gadgets, 1: A1 gadgets with connector slots
  TemplateMode template_mode = TemplateMode::auto_pick;
  TemplateOptions template_opts;
  std::uint64_t seed = 0;
  int restarts = 3;
  std::uint64_t embed_budget = 500000;
  std::uint64_t connect_budget = 500000;
};

struct AssembleResult {
  std::optional<AbsorberAssembly> assembly;
  std::string failure_stage;  // template / space / embed / connect
  std::string detail;
};

/// Smallest host a chained assembly can occupy: v(T) + gadget interiors +
/// one reservoir vertex per connector.
long long assembly_vertex_demand(int template_order, int template_edges, int d_mode);

AssembleResult assemble_absorber(const Hypergraph3& g, const std::vector<int>& r,
                                 const std::vector<int>& w, const AssembleParams& params = {});

struct AbsorbResult {
  std::optional<LoosePath> path;
  std::string failure;
};

/// The absorbing step: pick a perfect matching of T minus the template
/// preimage of R', walk matched gadgets along their covering path and the
/// rest along their non-covering path, splicing connectors in between.
/// The result is a loose ab-path on exactly V(asm) \ R'.
AbsorbResult absorb(const Hypergraph3& g, const AbsorberAssembly& asm_,
                    const std::vector<int>& r_prime);

struct AbsorberReport {
  int checked = 0;
  int failures = 0;
  std::vector<std::vector<int>> failing_sets;
  bool exhaustive = false;
};

AbsorberReport verify_absorber(const Hypergraph3& g, const AbsorberAssembly& asm_,
                               bool exhaustive, int trials = 200, std::uint64_t seed = 0);

}  // namespace loosehc
