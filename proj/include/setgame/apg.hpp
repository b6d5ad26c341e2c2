#pragma once

// Accessible pointed graphs: finite graphs whose nodes stand for (possibly
// non-well-founded) sets, with an edge x -> y meaning y is an element of x.
// The membership game generalizes verbatim; cycles introduce a third
// outcome, DRAW, for positions where neither player can force a win.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "setgame/errors.hpp"

namespace setgame {

struct Apg {
    std::vector<std::string> ids;                         // node index -> name
    std::vector<std::vector<std::uint32_t>> children;     // sorted unique indices
    std::optional<std::uint32_t> point;
    std::unordered_map<std::string, std::uint32_t> index; // name -> node index

    std::size_t size() const { return ids.size(); }
    std::uint32_t add_node(const std::string& id);        // DomainError on duplicate/bad id
    void add_edge(std::uint32_t parent, std::uint32_t child);
    std::uint32_t node(const std::string& id) const;      // DomainError on unknown id
};

// Node names are nonempty and alphanumeric.
bool valid_node_id(std::string_view id);

// Text format, one statement per line:
//   node <id>: <child-id> <child-id> ...
//   point <id>
// '#' starts a comment; 'stage <id> <k>' lines (model exports) are ignored.
// Children may reference nodes declared later; unknown ids are errors.
Apg parse_graph_text(std::string_view text);
std::string to_text(const Apg& g);

// JSON format: {"nodes": [...], "edges": [[parent, child], ...], "point": id}
// with the same meaning (edge [x, y]: y is an element of x).
Apg parse_graph_json(const nlohmann::json& j);
nlohmann::json to_json(const Apg& g);

enum class OutcomeKind : std::uint8_t { WIN_I, WIN_II, DRAW };

struct Outcome {
    OutcomeKind kind = OutcomeKind::DRAW;
    unsigned w = 0;  // meaningful only when kind != DRAW; odd iff WIN_I
};

inline bool operator==(const Outcome& a, const Outcome& b) {
    return a.kind == b.kind && (a.kind == OutcomeKind::DRAW || a.w == b.w);
}

std::string to_string(const Outcome& o);  // "WIN_I w=3" | "DRAW"

// Retrograde solver. Processes resolved nodes in increasing w: sinks get
// (WIN_II, 0); the first even-valued child resolved gives a parent
// (WIN_I, w+1); a parent whose last child resolves odd gets (WIN_II, w+1).
// Nodes never resolved are DRAW. O(nodes + edges), deterministic.
std::vector<Outcome> solve(const Apg& g);

struct QuotientResult {
    Apg graph;                            // one node per bisimulation class
    std::vector<std::uint32_t> node_class;  // original index -> quotient index
};

// Coarsest bisimulation via signature refinement from the single-block
// partition. Quotient nodes are named after the least original node of each
// class and ordered by it; outcomes are invariant under the quotient map.
QuotientResult bisim_quotient(const Apg& g);

// The sigma property of a node set C: some x in C is nonempty and has no
// element that is disjoint-from-children(x), i.e. every child y of x has
// children(y) intersecting children(x). Returns the least such x by index.
// `member` is a node mask of size g.size().
std::optional<std::uint32_t> sigma(const Apg& g, const std::vector<char>& member);

// Relativized foundation over C: every node x in C whose child set meets C
// has a child y in C with children(y) disjoint from children(x) within C.
// (The sets-only reading of the regularity scheme inside a finite stage.)
bool relativized_foundation(const Apg& g, const std::vector<char>& member);

// No cycle reachable from `node` (through `node` itself included).
bool is_wellfounded(const Apg& g, std::uint32_t node);

// Mask of hereditarily winning nodes: no DRAW anywhere in the reachable set
// (the node itself included). Takes the outcomes of solve(g).
std::vector<char> hw_nodes(const Apg& g, const std::vector<Outcome>& outcomes);

struct PatternReport {
    std::size_t n_nodes = 0;        // ALL
    std::size_t n_winning = 0;      // W: non-DRAW nodes
    std::size_t n_hereditarily = 0; // HW
    std::size_t n_wellfounded = 0;  // WF
    std::vector<unsigned> sigma_spectrum;  // realized w with sigma(S_w)

    // "ALL=W=HW!=WF" — the classes are nested, so count equality is set
    // equality.
    std::string pattern() const;
};

PatternReport pattern_report(const Apg& g);

// Every children assignment on n nodes (ids "n0".."n<n-1>", point n0),
// ordered by edge count, then adjacency mask value (bit i*n+j = edge
// ni -> nj). visit returns false to stop early. Requires n*n <= 63.
void for_each_graph(unsigned n, const std::function<bool(const Apg&)>& visit);

inline constexpr unsigned kSigmaSearchCap = 4;

// Smallest graph (node count, then edge count, then adjacency mask) whose
// point has finite value nu and the sigma property over its children.
// A value-nu node forces a chain of values nu-1, ..., 0 on distinct nodes,
// so nu+1 nodes are necessary; the exhaustive search runs when nu+1 <=
// exhaustive_cap, otherwise a deterministic ladder construction of nu+1
// nodes is returned. Throws DomainError for nu <= 1 (no witness exists).
Apg sigma_witness(unsigned nu, unsigned exhaustive_cap = kSigmaSearchCap);

}  // namespace setgame
