#include "setgame/apg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace setgame {

bool valid_node_id(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

std::uint32_t Apg::add_node(const std::string& id) {
    if (!valid_node_id(id)) throw DomainError("invalid node id '" + id + "'");
    if (index.count(id)) throw DomainError("duplicate node id '" + id + "'");
    auto idx = static_cast<std::uint32_t>(ids.size());
    index.emplace(id, idx);
    ids.push_back(id);
    children.emplace_back();
    return idx;
}

void Apg::add_edge(std::uint32_t parent, std::uint32_t child) {
    auto& ch = children[parent];
    auto it = std::lower_bound(ch.begin(), ch.end(), child);
    if (it == ch.end() || *it != child) ch.insert(it, child);
}

std::uint32_t Apg::node(const std::string& id) const {
    auto it = index.find(id);
    if (it == index.end()) throw DomainError("unknown node id '" + id + "'");
    return it->second;
}

namespace {

std::string strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string out(line);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Apg parse_graph_text(std::string_view text) {
    // Two passes so children may reference nodes declared later.
    struct Line {
        std::string body;
        std::size_t offset;
    };
    std::vector<Line> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back({strip_comment(text.substr(pos, end - pos)), pos});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    Apg g;
    for (const auto& [body, offset] : lines) {
        auto toks = split_ws(body);
        if (toks.empty()) continue;
        if (toks[0] == "node") {
            if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':')
                throw ParseError("expected 'node <id>:'", offset);
            std::string id = toks[1].substr(0, toks[1].size() - 1);
            if (!valid_node_id(id)) throw ParseError("invalid node id '" + id + "'", offset);
            if (g.index.count(id)) throw ParseError("duplicate node id '" + id + "'", offset);
            g.add_node(id);
        } else if (toks[0] == "point" || toks[0] == "stage") {
            continue;
        } else {
            throw ParseError("unknown statement '" + toks[0] + "'", offset);
        }
    }
    bool have_point = false;
    for (const auto& [body, offset] : lines) {
        auto toks = split_ws(body);
        if (toks.empty()) continue;
        if (toks[0] == "node") {
            std::string id = toks[1].substr(0, toks[1].size() - 1);
            std::uint32_t parent = g.index.at(id);
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto it = g.index.find(toks[i]);
                if (it == g.index.end())
                    throw ParseError("unknown child id '" + toks[i] + "'", offset);
                g.add_edge(parent, it->second);
            }
        } else if (toks[0] == "point") {
            if (toks.size() != 2) throw ParseError("expected 'point <id>'", offset);
            if (have_point) throw ParseError("duplicate point statement", offset);
            auto it = g.index.find(toks[1]);
            if (it == g.index.end())
                throw ParseError("unknown point id '" + toks[1] + "'", offset);
            g.point = it->second;
            have_point = true;
        }
    }
    return g;
}

std::string to_text(const Apg& g) {
    std::ostringstream out;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        out << "node " << g.ids[i] << ':';
        for (auto c : g.children[i]) out << ' ' << g.ids[c];
        out << '\n';
    }
    if (g.point) out << "point " << g.ids[*g.point] << '\n';
    return out.str();
}

Apg parse_graph_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
        throw ParseError("graph JSON must be an object with a 'nodes' array", 0);
    Apg g;
    for (const auto& n : j["nodes"]) {
        if (!n.is_string()) throw ParseError("node ids must be strings", 0);
        if (g.index.count(n.get<std::string>()))
            throw ParseError("duplicate node id '" + n.get<std::string>() + "'", 0);
        g.add_node(n.get<std::string>());
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("'edges' must be an array", 0);
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("each edge must be a [parent, child] pair of ids", 0);
            auto p = g.index.find(e[0].get<std::string>());
            auto c = g.index.find(e[1].get<std::string>());
            if (p == g.index.end() || c == g.index.end())
                throw ParseError("edge references an unknown node id", 0);
            g.add_edge(p->second, c->second);
        }
    }
    if (j.contains("point") && !j["point"].is_null()) {
        if (!j["point"].is_string()) throw ParseError("'point' must be a node id", 0);
        auto it = g.index.find(j["point"].get<std::string>());
        if (it == g.index.end()) throw ParseError("unknown point id", 0);
        g.point = it->second;
    }
    return g;
}

nlohmann::json to_json(const Apg& g) {
    nlohmann::json nodes = nlohmann::json::array();
    nlohmann::json edges = nlohmann::json::array();
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        nodes.push_back(g.ids[i]);
        for (auto c : g.children[i]) edges.push_back({g.ids[i], g.ids[c]});
    }
    nlohmann::json out{{"nodes", nodes}, {"edges", edges}};
    if (g.point) out["point"] = g.ids[*g.point];
    return out;
}

std::string to_string(const Outcome& o) {
    switch (o.kind) {
        case OutcomeKind::WIN_I: return "WIN_I w=" + std::to_string(o.w);
        case OutcomeKind::WIN_II: return "WIN_II w=" + std::to_string(o.w);
        default: return "DRAW";
    }
}

std::vector<Outcome> solve(const Apg& g) {
    std::size_t n = g.size();
    std::vector<std::vector<std::uint32_t>> parents(n);
    for (std::uint32_t v = 0; v < n; ++v)
        for (auto c : g.children[v]) parents[c].push_back(v);

    std::vector<Outcome> out(n);            // DRAW until resolved
    std::vector<char> resolved(n, 0);
    std::vector<std::size_t> pending(n);    // children not yet known odd
    std::vector<std::vector<std::uint32_t>> buckets(1);
    for (std::uint32_t v = 0; v < n; ++v) {
        pending[v] = g.children[v].size();
        if (pending[v] == 0) {
            out[v] = {OutcomeKind::WIN_II, 0};
            resolved[v] = 1;
            buckets[0].push_back(v);
        }
    }
    auto resolve = [&](std::uint32_t v, OutcomeKind kind, unsigned w) {
        out[v] = {kind, w};
        resolved[v] = 1;
        if (buckets.size() <= w) buckets.resize(w + 1);
        buckets[w].push_back(v);
    };
    for (unsigned w = 0; w < buckets.size(); ++w) {
        for (std::size_t i = 0; i < buckets[w].size(); ++i) {
            std::uint32_t y = buckets[w][i];
            if (w % 2 == 0) {
                // y is the least even-valued child of each unresolved parent.
                for (auto x : parents[y])
                    if (!resolved[x]) resolve(x, OutcomeKind::WIN_I, w + 1);
            } else {
                // y may complete a parent whose children are now all odd;
                // w is then the maximum among them.
                for (auto x : parents[y])
                    if (!resolved[x] && --pending[x] == 0)
                        resolve(x, OutcomeKind::WIN_II, w + 1);
            }
        }
    }
    return out;
}

QuotientResult bisim_quotient(const Apg& g) {
    std::size_t n = g.size();
    std::vector<std::uint32_t> block(n, 0);
    std::size_t blocks = n ? 1 : 0;
    while (true) {
        // Signature: the set of child blocks. New block ids are assigned by
        // first appearance in node order, which keeps the result canonical.
        std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> sig_ids;
        std::vector<std::uint32_t> next(n);
        for (std::uint32_t v = 0; v < n; ++v) {
            std::vector<std::uint32_t> sig;
            sig.reserve(g.children[v].size());
            for (auto c : g.children[v]) sig.push_back(block[c]);
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto key = std::make_pair(block[v], std::move(sig));
            auto [it, inserted] =
                sig_ids.emplace(std::move(key), static_cast<std::uint32_t>(sig_ids.size()));
            next[v] = it->second;
        }
        // Renumber by first appearance so ids are stable across map ordering.
        std::vector<std::uint32_t> remap(sig_ids.size(), UINT32_MAX);
        std::uint32_t fresh = 0;
        for (std::uint32_t v = 0; v < n; ++v)
            if (remap[next[v]] == UINT32_MAX) remap[next[v]] = fresh++;
        for (std::uint32_t v = 0; v < n; ++v) next[v] = remap[next[v]];
        if (fresh == blocks && next == block) break;
        block = std::move(next);
        blocks = fresh;
    }

    QuotientResult q;
    q.node_class = block;
    std::vector<std::uint32_t> representative(blocks, UINT32_MAX);
    for (std::uint32_t v = 0; v < n; ++v)
        if (representative[block[v]] == UINT32_MAX) representative[block[v]] = v;
    // Blocks were renumbered by first appearance, so block order == order of
    // representatives.
    for (std::uint32_t b = 0; b < blocks; ++b) q.graph.add_node(g.ids[representative[b]]);
    for (std::uint32_t b = 0; b < blocks; ++b)
        for (auto c : g.children[representative[b]]) q.graph.add_edge(b, block[c]);
    if (g.point) q.graph.point = block[*g.point];
    return q;
}

namespace {

bool sorted_intersects(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

}  // namespace

std::optional<std::uint32_t> sigma(const Apg& g, const std::vector<char>& member) {
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        if (!member[x] || g.children[x].empty()) continue;
        bool all_meet = true;
        for (auto y : g.children[x]) {
            if (!sorted_intersects(g.children[y], g.children[x])) {
                all_meet = false;
                break;
            }
        }
        if (all_meet) return x;
    }
    return std::nullopt;
}

bool relativized_foundation(const Apg& g, const std::vector<char>& member) {
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        if (!member[x]) continue;
        bool has_member_child = false;
        bool has_minimal = false;
        for (auto y : g.children[x]) {
            if (!member[y]) continue;
            has_member_child = true;
            // y is minimal in x within C when no child of y is a child of x
            // inside C.
            bool meets = false;
            for (auto z : g.children[y]) {
                if (member[z] &&
                    std::binary_search(g.children[x].begin(), g.children[x].end(), z)) {
                    meets = true;
                    break;
                }
            }
            if (!meets) {
                has_minimal = true;
                break;
            }
        }
        if (has_member_child && !has_minimal) return false;
    }
    return true;
}

bool is_wellfounded(const Apg& g, std::uint32_t node) {
    enum : char { kWhite, kGray, kBlack };
    std::vector<char> color(g.size(), kWhite);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{node, 0}};
    color[node] = kGray;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next == g.children[v].size()) {
            color[v] = kBlack;
            stack.pop_back();
            continue;
        }
        std::uint32_t c = g.children[v][next++];
        if (color[c] == kGray) return false;
        if (color[c] == kWhite) {
            color[c] = kGray;
            stack.push_back({c, 0});
        }
    }
    return true;
}

std::vector<char> hw_nodes(const Apg& g, const std::vector<Outcome>& outcomes) {
    std::size_t n = g.size();
    std::vector<std::vector<std::uint32_t>> parents(n);
    for (std::uint32_t v = 0; v < n; ++v)
        for (auto c : g.children[v]) parents[c].push_back(v);
    // Taint every node that can reach a DRAW (DRAW nodes included).
    std::vector<char> tainted(n, 0);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t v = 0; v < n; ++v)
        if (outcomes[v].kind == OutcomeKind::DRAW) {
            tainted[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (auto p : parents[v])
            if (!tainted[p]) {
                tainted[p] = 1;
                queue.push_back(p);
            }
    }
    std::vector<char> hw(n);
    for (std::uint32_t v = 0; v < n; ++v) hw[v] = !tainted[v];
    return hw;
}

std::string PatternReport::pattern() const {
    std::string s = "ALL";
    s += (n_nodes == n_winning) ? "=" : "!=";
    s += "W";
    s += (n_winning == n_hereditarily) ? "=" : "!=";
    s += "HW";
    s += (n_hereditarily == n_wellfounded) ? "=" : "!=";
    s += "WF";
    return s;
}

PatternReport pattern_report(const Apg& g) {
    PatternReport r;
    r.n_nodes = g.size();
    auto outcomes = solve(g);
    for (const auto& o : outcomes)
        if (o.kind != OutcomeKind::DRAW) ++r.n_winning;
    auto hw = hw_nodes(g, outcomes);
    for (char b : hw)
        if (b) ++r.n_hereditarily;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (is_wellfounded(g, v)) ++r.n_wellfounded;
    // sigma over each realized value class S_w.
    std::vector<unsigned> ws;
    for (const auto& o : outcomes)
        if (o.kind != OutcomeKind::DRAW) ws.push_back(o.w);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    for (unsigned w : ws) {
        std::vector<char> member(g.size(), 0);
        for (std::uint32_t v = 0; v < g.size(); ++v)
            member[v] = outcomes[v].kind != OutcomeKind::DRAW && outcomes[v].w == w;
        if (sigma(g, member)) r.sigma_spectrum.push_back(w);
    }
    return r;
}

void for_each_graph(unsigned n, const std::function<bool(const Apg&)>& visit) {
    if (n == 0 || static_cast<unsigned long long>(n) * n > 63)
        throw DomainError("for_each_graph: need 1 <= n with n*n <= 63");
    unsigned bits = n * n;
    std::vector<std::string> names(n);
    for (unsigned i = 0; i < n; ++i) names[i] = "n" + std::to_string(i);
    for (unsigned edges = 0; edges <= bits; ++edges) {
        // Gosper's hack: masks with `edges` bits in increasing numeric order.
        if (edges == 0) {
            Apg g;
            for (const auto& nm : names) g.add_node(nm);
            g.point = 0;
            if (!visit(g)) return;
            continue;
        }
        std::uint64_t mask = (edges == 64) ? ~0ull : ((1ull << edges) - 1);
        std::uint64_t limit = bits == 64 ? ~0ull : (1ull << bits);
        while (mask < limit) {
            Apg g;
            for (const auto& nm : names) g.add_node(nm);
            g.point = 0;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    if (mask >> (static_cast<std::uint64_t>(i) * n + j) & 1) g.add_edge(i, j);
            if (!visit(g)) return;
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            std::uint64_t next = (((r ^ mask) >> 2) / c) | r;
            if (next <= mask) break;  // wrapped
            mask = next;
        }
    }
}

namespace {

bool all_reachable_from_point(const Apg& g) {
    std::vector<char> seen(g.size(), 0);
    std::vector<std::uint32_t> stack{*g.point};
    seen[*g.point] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto c : g.children[v])
            if (!seen[c]) {
                seen[c] = 1;
                ++count;
                stack.push_back(c);
            }
    }
    return count == g.size();
}

bool point_is_witness(const Apg& g, unsigned nu) {
    auto outcomes = solve(g);
    const Outcome& o = outcomes[*g.point];
    if (o.kind == OutcomeKind::DRAW || o.w != nu) return false;
    std::vector<char> member(g.size(), 0);
    member[*g.point] = 1;
    return sigma(g, member).has_value();
}

// e; u1 = {u1, e}; v_k = {v_{k-1}, u1} with v_1 = u1. Then w(u1) = 1,
// w(v_k) = k, and every child of v_k has u1 or v_{k-1} among its own
// children, i.e. v_nu has the sigma property.
Apg sigma_ladder(unsigned nu) {
    Apg g;
    auto e = g.add_node("e");
    auto u1 = g.add_node("u1");
    g.add_edge(u1, u1);
    g.add_edge(u1, e);
    std::uint32_t prev = u1;
    for (unsigned k = 2; k <= nu; ++k) {
        auto vk = g.add_node("v" + std::to_string(k));
        g.add_edge(vk, prev);
        g.add_edge(vk, u1);
        prev = vk;
    }
    g.point = prev;
    return g;
}

}  // namespace

Apg sigma_witness(unsigned nu, unsigned exhaustive_cap) {
    if (nu <= 1)
        throw DomainError("sigma_witness: no witness exists at index " + std::to_string(nu));
    unsigned n = nu + 1;  // a value-nu node needs a value chain nu-1 .. 0
    if (n <= exhaustive_cap) {
        Apg found;
        bool ok = false;
        for_each_graph(n, [&](const Apg& g) {
            if (!all_reachable_from_point(g) || !point_is_witness(g, nu)) return true;
            found = g;
            ok = true;
            return false;
        });
        if (ok) return found;
    }
    Apg ladder = sigma_ladder(nu);
    if (!point_is_witness(ladder, nu))
        throw DomainError("sigma_witness: internal construction failed validation");
    return ladder;
}

}  // namespace setgame
