#pragma once

// Bounded stages of the subset-adjunction model construction. Starting from
// a finite seed graph (M_0, E_0), each stage adjoins one fresh node for
// every nonempty subset of the current universe that no current node
// already represents (v represents the set of its children):
//
//   M_{a+1} = M_a + { y <= M_a : y nonempty, y not represented in M_a }
//
// Every edge into a stage-(a+1) node originates at stage <= a, so the
// stages are end-extensions; distinct nodes keep distinct child sets, so
// extensionality is preserved.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "setgame/apg.hpp"

namespace setgame {

// Seed admissibility: (iii) some node represents the empty set, (iv) child
// sets are pairwise distinct (extensionality). Conditions (i)/(ii) of the
// construction hold for every finite graph and are recorded, not computed.
struct SeedReport {
    bool has_empty_set = false;
    bool extensional = false;
    std::vector<std::string> violations;  // human-readable, one per failure
    std::vector<std::string> notes;

    bool pass() const { return has_empty_set && extensional; }
};

SeedReport check_seed(const Apg& seed);

struct Model {
    Apg graph;                    // children(v) = elements of v
    std::vector<unsigned> stage;  // per node; seed nodes are stage 0
    unsigned stages = 0;          // highest built stage k

    // Subgraph induced by nodes of stage <= alpha (node order preserved).
    Apg truncation(unsigned alpha) const;
};

inline constexpr std::size_t kModelNodeCap = 5000;

// Runs the construction for `stages` steps. Fresh nodes are named
// "s<stage>n<ordinal>" in canonical subset order (by size, then
// lexicographic on member indices). Throws DomainError if the seed fails
// check_seed, a fresh name collides, or a projected stage exceeds `cap`
// nodes (the stage and projected size are named in the message).
Model build(const Apg& seed, unsigned stages, std::size_t cap = kModelNodeCap);

// The children of every M_a node lie in M_a, for all a <= k — later stages
// never add elements to existing nodes. Equivalently: no edge whose target
// stage exceeds its source stage.
bool check_end_extension(const Model& m);

// Child sets pairwise distinct within every stage M_a.
bool check_extensionality(const Model& m);

// Every subset of M_alpha is represented in M_{alpha+1}. Requires
// alpha + 1 <= k (the witness stage must have been built).
bool check_thickness(const Model& m, unsigned alpha);

struct ReflectionEntry {
    std::string statement;
    bool at_first = false;  // value over (M_1, E_1)
    bool at_last = false;   // value over (M_k, E_k)

    bool agree() const { return at_first == at_last; }
};

struct ReflectionReport {
    unsigned first_stage = 1;
    unsigned last_stage = 1;
    std::vector<ReflectionEntry> entries;
    std::vector<std::string> notes;

    bool all_agree() const;
};

// Evaluates sigma(W_2g) for every realized even value, sigma(W_II),
// relativized foundation over W, and sigma(S_2g) per realized even value,
// at the first and last built stages. This is a truncation proxy: it
// compares finite stages against each other, not against the class-level
// limit, and says so in `notes`. Requires k >= 1.
ReflectionReport check_reflection(const Model& m);

// Winning pattern and sigma spectrum of the full built graph (M_k, E_k).
PatternReport classify_model(const Model& m);

// Named example seeds: "wf" (a two-node well-founded graph), "quine"
// (a self-membered atom plus the empty set), "unfounded-pair" (u = {u, e}
// plus e = {}). Throws DomainError on unknown names.
Apg seed_preset(const std::string& name);
std::vector<std::string> seed_preset_names();

// Graph text plus "stage <id> <k>" lines; parse_graph_text reads the graph
// part back.
std::string to_text(const Model& m);
nlohmann::json to_json(const Model& m);

}  // namespace setgame
