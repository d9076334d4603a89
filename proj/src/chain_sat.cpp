#include "dlhom/chain_sat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace dlhom {

std::vector<std::string> formula_violations(const ChainFormula& f) {
    std::vector<std::string> out;
    if (f.variable_count < 0)
        out.push_back("negative variable count");
    if (f.ell < 1)
        out.push_back("ell must be at least 1");
    for (size_t i = 0; i < f.chains.size(); ++i) {
        const auto& c = f.chains[i];
        if (c.mult < 1)
            out.push_back("chain clause " + std::to_string(i) + " has multiplicity < 1");
        if (c.vars.empty())
            out.push_back("chain clause " + std::to_string(i) + " is empty");
        if (c.length() > f.ell)
            out.push_back("chain clause " + std::to_string(i) + " longer than ell");
        std::set<int> seen;
        for (int v : c.vars) {
            if (v < 0 || v >= f.variable_count)
                out.push_back("chain clause " + std::to_string(i) + " has a variable out of range");
            else if (!seen.insert(v).second)
                out.push_back("chain clause " + std::to_string(i) + " repeats a variable");
        }
    }
    for (size_t i = 0; i < f.unaries.size(); ++i) {
        if (f.unaries[i].mult < 1)
            out.push_back("unary clause " + std::to_string(i) + " has multiplicity < 1");
        if (f.unaries[i].var < 0 || f.unaries[i].var >= f.variable_count)
            out.push_back("unary clause " + std::to_string(i) + " out of range");
    }
    return out;
}

namespace {

struct Hop {
    int to;
    int clause;
};

// One hop per (clause, ordered variable pair): certificates measured in
// clauses, not implication steps.
std::vector<std::vector<Hop>> hop_graph(const ChainFormula& f, bool reversed) {
    std::vector<std::vector<Hop>> adj(f.variable_count);
    for (size_t ci = 0; ci < f.chains.size(); ++ci) {
        const auto& c = f.chains[ci];
        if (c.mult <= 0)
            continue;
        for (size_t i = 0; i < c.vars.size(); ++i)
            for (size_t j = i + 1; j < c.vars.size(); ++j) {
                int from = reversed ? c.vars[j] : c.vars[i];
                int to = reversed ? c.vars[i] : c.vars[j];
                adj[from].push_back({to, static_cast<int>(ci)});
            }
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end(), [](const Hop& x, const Hop& y) {
            return x.clause != y.clause ? x.clause < y.clause : x.to < y.to;
        });
    return adj;
}

std::vector<bool> closure(const std::vector<std::vector<Hop>>& adj, std::vector<int> seeds) {
    std::vector<bool> reached(adj.size(), false);
    std::deque<int> bfs;
    for (int s : seeds)
        if (!reached[s]) {
            reached[s] = true;
            bfs.push_back(s);
        }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop_front();
        for (const auto& h : adj[u])
            if (!reached[h.to]) {
                reached[h.to] = true;
                bfs.push_back(h.to);
            }
    }
    return reached;
}

}  // namespace

PropagateResult propagate(const ChainFormula& f) {
    PropagateResult out;
    auto fwd = hop_graph(f, false);

    std::vector<int> pos_seed_clause(f.variable_count, -1), neg_seed_clause(f.variable_count, -1);
    std::vector<int> pos_seeds, neg_seeds;
    for (size_t ui = 0; ui < f.unaries.size(); ++ui) {
        const auto& u = f.unaries[ui];
        if (u.mult <= 0)
            continue;
        auto& slot = u.neg ? neg_seed_clause[u.var] : pos_seed_clause[u.var];
        if (slot == -1) {
            slot = static_cast<int>(ui);
            (u.neg ? neg_seeds : pos_seeds).push_back(u.var);
        }
    }

    std::vector<bool> forced1 = closure(fwd, pos_seeds);
    std::vector<bool> forced0 = closure(hop_graph(f, true), neg_seeds);

    bool conflict = false;
    for (int v = 0; v < f.variable_count && !conflict; ++v)
        if (forced1[v] && forced0[v])
            conflict = true;

    if (!conflict) {
        out.sat = true;
        out.assignment.assign(f.variable_count, false);
        for (int v = 0; v < f.variable_count; ++v)
            out.assignment[v] = forced1[v];
        return out;
    }

    // Multi-source BFS over clause hops from positive seeds to the first
    // negative seed: a clause-count-minimal implication chain between a
    // contradictory pair of unary clauses.
    std::vector<int> parent(f.variable_count, -2), via(f.variable_count, -1);
    std::deque<int> bfs;
    for (int s : pos_seeds)
        if (parent[s] == -2) {
            parent[s] = -1;
            bfs.push_back(s);
        }
    int hit = -1;
    for (int s : pos_seeds)
        if (neg_seed_clause[s] != -1) {
            hit = s;
            break;
        }
    while (hit == -1 && !bfs.empty()) {
        int u = bfs.front();
        bfs.pop_front();
        for (const auto& h : fwd[u]) {
            if (parent[h.to] != -2)
                continue;
            parent[h.to] = u;
            via[h.to] = h.clause;
            if (neg_seed_clause[h.to] != -1) {
                hit = h.to;
                break;
            }
            bfs.push_back(h.to);
        }
    }
    if (hit == -1)
        throw std::logic_error("conflict detected but no unary-to-unary chain found");

    std::vector<int> chain_clauses;
    int x = hit;
    while (parent[x] != -1) {
        chain_clauses.push_back(via[x]);
        x = parent[x];
    }
    std::reverse(chain_clauses.begin(), chain_clauses.end());
    chain_clauses.erase(std::unique(chain_clauses.begin(), chain_clauses.end()),
                        chain_clauses.end());

    out.sat = false;
    out.certificate.push_back({ClauseRef::Kind::Unary, pos_seed_clause[x]});
    for (int c : chain_clauses)
        out.certificate.push_back({ClauseRef::Kind::Chain, c});
    out.certificate.push_back({ClauseRef::Kind::Unary, neg_seed_clause[hit]});
    return out;
}

namespace {

bool cdcs_branch(ChainFormula& f, int k, std::vector<ClauseRef>& deleted) {
    auto pr = propagate(f);
    if (pr.sat)
        return true;
    if (k == 0)
        return false;
    for (const auto& ref : pr.certificate) {
        int& mult = ref.kind == ClauseRef::Kind::Chain ? f.chains[ref.index].mult
                                                       : f.unaries[ref.index].mult;
        --mult;
        deleted.push_back(ref);
        if (cdcs_branch(f, k - 1, deleted))
            return true;
        deleted.pop_back();
        ++mult;
    }
    return false;
}

}  // namespace

std::optional<std::vector<ClauseRef>> solve_cdcs(const CdcsInstance& inst) {
    auto bad = formula_violations(inst.formula);
    if (!bad.empty())
        throw std::invalid_argument("invalid formula: " + bad[0]);
    ChainFormula f = inst.formula;
    std::vector<ClauseRef> deleted;
    if (cdcs_branch(f, inst.k, deleted))
        return deleted;
    return std::nullopt;
}

VdcsInstance make_vdcs(ChainFormula f, int k) {
    VdcsInstance inst;
    inst.formula = std::move(f);
    inst.k = k;
    for (size_t i = 0; i < inst.formula.chains.size(); ++i)
        if (inst.formula.chains[i].length() != 2)
            inst.deletable.push_back(static_cast<int>(i));
    return inst;
}

std::vector<std::string> vdcs_violations(const VdcsInstance& inst) {
    auto out = formula_violations(inst.formula);
    const auto& f = inst.formula;

    std::vector<int> expected;
    for (size_t i = 0; i < f.chains.size(); ++i)
        if (f.chains[i].length() != 2)
            expected.push_back(static_cast<int>(i));
    if (expected != inst.deletable)
        out.push_back("deletable set must be exactly the chain clauses of length != 2");

    std::vector<int> owner(f.variable_count, -1);
    for (int ci : expected) {
        if (f.chains[ci].mult != 1)
            out.push_back("ordinary clause " + std::to_string(ci) +
                          " must have multiplicity 1 (copies would share variables)");
        for (int v : f.chains[ci].vars) {
            if (v < 0 || v >= f.variable_count)
                continue;
            if (owner[v] != -1)
                out.push_back("variable " + std::to_string(v) +
                              " appears in two ordinary clauses");
            owner[v] = ci;
        }
    }
    for (int v = 0; v < f.variable_count; ++v)
        if (owner[v] == -1)
            out.push_back("variable " + std::to_string(v) + " is in no ordinary clause");
    for (const auto& c : f.chains)
        if (c.length() == 2 && c.vars[0] >= 0 && c.vars[1] >= 0 &&
            c.vars[0] < f.variable_count && c.vars[1] < f.variable_count &&
            owner[c.vars[0]] != -1 && owner[c.vars[0]] == owner[c.vars[1]] &&
            f.chains[owner[c.vars[0]]].length() >= 3)
            out.push_back("implicational clause joins two variables of one ordinary clause");
    return out;
}

namespace {

// Current VDCS state: deleted ordinary clauses kill their variables and every
// clause touching them.
ChainFormula vdcs_residual(const ChainFormula& f, const std::vector<bool>& var_dead) {
    ChainFormula out;
    out.variable_count = f.variable_count;
    out.ell = f.ell;
    for (const auto& c : f.chains) {
        bool alive = true;
        for (int v : c.vars)
            if (var_dead[v])
                alive = false;
        if (alive)
            out.chains.push_back(c);
    }
    for (const auto& u : f.unaries)
        if (!var_dead[u.var])
            out.unaries.push_back(u);
    return out;
}

bool vdcs_branch(const VdcsInstance& inst, std::vector<bool>& var_dead,
                 std::vector<bool>& used, int k, std::vector<int>& deleted) {
    ChainFormula residual = vdcs_residual(inst.formula, var_dead);
    auto pr = propagate(residual);
    if (pr.sat)
        return true;
    if (k == 0)
        return false;

    // variables named by the certificate, tracked back to the full formula
    std::set<int> cert_vars;
    for (const auto& ref : pr.certificate) {
        if (ref.kind == ClauseRef::Kind::Chain)
            for (int v : residual.chains[ref.index].vars)
                cert_vars.insert(v);
        else
            cert_vars.insert(residual.unaries[ref.index].var);
    }
    for (int ci : inst.deletable) {
        if (used[ci])
            continue;
        bool hits = false;
        for (int v : inst.formula.chains[ci].vars)
            if (cert_vars.count(v))
                hits = true;
        if (!hits)
            continue;
        used[ci] = true;
        for (int v : inst.formula.chains[ci].vars)
            var_dead[v] = true;
        deleted.push_back(ci);
        if (vdcs_branch(inst, var_dead, used, k - 1, deleted))
            return true;
        deleted.pop_back();
        for (int v : inst.formula.chains[ci].vars)
            var_dead[v] = false;
        used[ci] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> solve_vdcs(const VdcsInstance& inst) {
    auto bad = vdcs_violations(inst);
    if (!bad.empty())
        throw std::invalid_argument("invalid variable-deletion instance: " + bad[0]);
    std::vector<bool> var_dead(inst.formula.variable_count, false);
    std::vector<bool> used(inst.formula.chains.size(), false);
    std::vector<int> deleted;
    if (vdcs_branch(inst, var_dead, used, inst.k, deleted)) {
        std::sort(deleted.begin(), deleted.end());
        return deleted;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lemma 8: variable deletion to clause deletion, chain length 2*ell + 2.

namespace {

struct VarBuilder {
    int count = 0;
    int fresh() { return count++; }
};

}  // namespace

CdcsInstance reduce_vdcs_to_cdcs(const VdcsInstance& inst) {
    auto bad = vdcs_violations(inst);
    if (!bad.empty())
        throw std::invalid_argument("invalid variable-deletion instance: " + bad[0]);
    const ChainFormula& f = inst.formula;
    int k = inst.k;

    std::vector<int> owner(f.variable_count, -1), position(f.variable_count, -1);
    for (int ci : inst.deletable)
        for (size_t i = 0; i < f.chains[ci].vars.size(); ++i) {
            owner[f.chains[ci].vars[i]] = ci;
            position[f.chains[ci].vars[i]] = static_cast<int>(i);
        }
    std::vector<std::set<int>> pos_at(f.chains.size()), neg_at(f.chains.size());
    for (const auto& u : f.unaries)
        (u.neg ? neg_at : pos_at)[owner[u.var]].insert(position[u.var]);

    // F -> F1: a clause with a positive unary at or before a negative one is
    // contradictory; its variables are gone in any solution. Represent it by
    // a fresh singleton carrying both unary signs.
    std::vector<bool> contradictory(f.chains.size(), false);
    for (int ci : inst.deletable) {
        for (int i : pos_at[ci])
            for (int j : neg_at[ci])
                if (i <= j)
                    contradictory[ci] = true;
    }

    // F1 -> F2: collapse the forced-zero prefix and forced-one suffix of each
    // surviving ordinary clause so unaries sit only at the ends.
    struct Marked {
        int source = -1;               // original ordinary clause, -1 for fresh singletons
        int vars = 0;                  // variable count after collapse
        int offset = 0;                // original position of the first kept variable
        bool neg_front = false, pos_back = false;
    };
    std::vector<Marked> marked;
    std::vector<int> marked_of(f.chains.size(), -1);
    for (int ci : inst.deletable) {
        Marked m;
        m.source = ci;
        if (contradictory[ci]) {
            m.vars = 1;
            m.neg_front = m.pos_back = true;
            marked_of[ci] = static_cast<int>(marked.size());
            marked.push_back(m);
            continue;
        }
        int len = f.chains[ci].length();
        int first = 0, last = len - 1;
        if (!neg_at[ci].empty()) {
            first = *neg_at[ci].rbegin();
            m.neg_front = true;
        }
        if (!pos_at[ci].empty()) {
            last = std::min(last, *pos_at[ci].begin());
            m.pos_back = true;
        }
        m.offset = first;
        m.vars = last - first + 1;
        marked_of[ci] = static_cast<int>(marked.size());
        marked.push_back(m);
    }

    auto collapsed_position = [&](int var) {
        int ci = owner[var];
        const Marked& m = marked[marked_of[ci]];
        int p = position[var] - m.offset;
        return std::clamp(p, 0, m.vars - 1);
    };

    // F2 -> F': expand each marked clause with primed exit points and tilde
    // anchors for the end unaries.
    CdcsInstance out;
    out.k = k;
    VarBuilder vars;
    std::vector<std::vector<int>> base(marked.size()), prime(marked.size());
    std::vector<int> tilde_front(marked.size(), -1), tilde_back(marked.size(), -1);
    for (size_t mi = 0; mi < marked.size(); ++mi) {
        const Marked& m = marked[mi];
        base[mi].resize(m.vars);
        prime[mi].resize(m.vars);
        std::vector<int> chain;
        if (m.vars == 1) {
            // tilde_back precedes the variable so a positive unary pushes
            // forward; tilde_front follows it so a negative unary pulls back
            tilde_back[mi] = vars.fresh();
            base[mi][0] = vars.fresh();
            prime[mi][0] = vars.fresh();
            tilde_front[mi] = vars.fresh();
            chain = {tilde_back[mi], base[mi][0], prime[mi][0], tilde_front[mi]};
        } else {
            int n = m.vars;
            for (int i = 0; i < n; ++i) {
                base[mi][i] = vars.fresh();
                prime[mi][i] = vars.fresh();
            }
            tilde_front[mi] = vars.fresh();
            tilde_back[mi] = vars.fresh();
            chain.push_back(base[mi][0]);
            chain.push_back(prime[mi][0]);
            chain.push_back(tilde_front[mi]);
            for (int i = 1; i < n - 1; ++i) {
                chain.push_back(base[mi][i]);
                chain.push_back(prime[mi][i]);
            }
            chain.push_back(tilde_back[mi]);
            chain.push_back(base[mi][n - 1]);
            chain.push_back(prime[mi][n - 1]);
        }
        out.formula.chains.push_back({chain, 1});
        if (m.neg_front)
            out.formula.unaries.push_back({tilde_front[mi], true, k + 1});
        if (m.pos_back)
            out.formula.unaries.push_back({tilde_back[mi], false, k + 1});
    }

    // implicational clauses of F2 become undeletable prime -> base links
    for (const auto& c : f.chains) {
        if (c.length() != 2)
            continue;
        int a = c.vars[0], b = c.vars[1];
        if (contradictory[owner[a]] || contradictory[owner[b]])
            continue;
        int ma = marked_of[owner[a]], mb = marked_of[owner[b]];
        int alpha = prime[ma][collapsed_position(a)];
        int beta = base[mb][collapsed_position(b)];
        if (alpha == beta)
            continue;
        out.formula.chains.push_back({{alpha, beta}, k + 1});
    }

    out.formula.variable_count = vars.count;
    out.formula.ell = 2 * f.ell + 2;
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 9: clause deletion to variable deletion via per-occurrence variable
// copies. Copies of one variable are kept equal by undeletable implication
// links in both directions; deleting an occurrence's clause frees only that
// copy.

VdcsInstance reduce_cdcs_to_vdcs(const CdcsInstance& inst) {
    auto bad = formula_violations(inst.formula);
    if (!bad.empty())
        throw std::invalid_argument("invalid formula: " + bad[0]);
    const ChainFormula& f = inst.formula;

    // occurrence expansion; length-2 chains get a padding variable slot (-1)
    struct Occ {
        std::vector<int> vars;  // original variable ids, -1 marks a fresh slot
        bool unary = false;
        bool neg = false;
    };
    std::vector<Occ> occs;
    for (const auto& c : f.chains)
        for (int copy = 0; copy < c.mult; ++copy) {
            Occ o;
            o.vars = c.vars;
            if (o.vars.size() == 2)
                o.vars.push_back(-1);
            occs.push_back(std::move(o));
        }
    for (const auto& u : f.unaries)
        for (int copy = 0; copy < u.mult; ++copy)
            occs.push_back({{u.var}, true, u.neg});

    VarBuilder vars;
    std::vector<std::vector<int>> copies_of(f.variable_count);
    std::vector<std::vector<int>> occ_vars(occs.size());
    for (size_t oi = 0; oi < occs.size(); ++oi)
        for (int v : occs[oi].vars) {
            int fresh = vars.fresh();
            occ_vars[oi].push_back(fresh);
            if (v != -1)
                copies_of[v].push_back(fresh);
        }

    ChainFormula out;
    for (size_t oi = 0; oi < occs.size(); ++oi) {
        if (occs[oi].unary) {
            out.unaries.push_back({occ_vars[oi][0], occs[oi].neg, 1});
            out.chains.push_back({{occ_vars[oi][0]}, 1});  // its deletable handle
        } else {
            out.chains.push_back({occ_vars[oi], 1});
        }
    }
    for (const auto& copies : copies_of)
        for (size_t i = 0; i < copies.size(); ++i)
            for (size_t j = 0; j < copies.size(); ++j)
                if (i != j)
                    out.chains.push_back({{copies[i], copies[j]}, 1});

    out.variable_count = vars.count;
    out.ell = 1;
    for (const auto& c : out.chains)
        out.ell = std::max(out.ell, c.length());
    return make_vdcs(std::move(out), inst.k);
}

// ---------------------------------------------------------------------------
// Lemma 10: variable deletion to a fixed-side fixed-component instance over
// the circular-arc target H_ell.

VdcsToFsfcResult reduce_vdcs_to_fsfc(const VdcsInstance& inst) {
    auto bad = vdcs_violations(inst);
    if (!bad.empty())
        throw std::invalid_argument("invalid variable-deletion instance: " + bad[0]);
    const ChainFormula& f = inst.formula;
    int ell = std::max(f.ell, 1);

    VdcsToFsfcResult out;
    out.target = build_chain_target(ell);
    const ChainTarget& t = out.target;

    std::vector<int> owner(f.variable_count, -1), position(f.variable_count, -1);
    for (int ci : inst.deletable)
        for (size_t i = 0; i < f.chains[ci].vars.size(); ++i) {
            owner[f.chains[ci].vars[i]] = ci;
            position[f.chains[ci].vars[i]] = static_cast<int>(i);
        }

    std::vector<std::pair<int, int>> edges;
    ListAssignment lists;
    auto add_vertex = [&](std::vector<int> list) {
        std::sort(list.begin(), list.end());
        lists.lists.push_back(std::move(list));
        return static_cast<int>(lists.lists.size()) - 1;
    };

    // alpha vertices: one per ordinary clause, listing the value arcs of its
    // at most length+1 satisfying assignments, trimmed by the unary clauses
    out.alpha_vertex.assign(f.chains.size(), -1);
    for (int ci : inst.deletable) {
        int len = f.chains[ci].length();  // variables x_0..x_{len-1}
        int lo = 0, hi = len;             // transition index range, a_lo..a_hi
        for (const auto& u : f.unaries) {
            if (owner[u.var] != ci)
                continue;
            int p = position[u.var];
            if (u.neg)
                lo = std::max(lo, p + 1);  // x_p = 0: transition after p
            else
                hi = std::min(hi, p);      // x_p = 1: transition at or before p
        }
        std::vector<int> list;
        for (int i = lo; i <= hi; ++i)
            list.push_back(t.value_vertex[i]);
        out.alpha_vertex[ci] = add_vertex(std::move(list));
    }

    // gadget path per implicational clause, inner vertices in k+1 copies with
    // complete edges between consecutive levels
    for (const auto& c : f.chains) {
        if (c.length() != 2)
            continue;
        int r = position[c.vars[0]];
        int rp = position[c.vars[1]];
        int a_from = out.alpha_vertex[owner[c.vars[0]]];
        int a_to = out.alpha_vertex[owner[c.vars[1]]];
        const ChainGadgetArcs& g = t.gadget[r][rp];
        std::vector<int> us, vs, ws;
        for (int copy = 0; copy <= inst.k; ++copy) {
            us.push_back(add_vertex({g.u1, g.u2}));
            vs.push_back(add_vertex({g.v1, g.v2}));
            ws.push_back(add_vertex({g.w1, g.w2}));
        }
        for (int u : us)
            edges.emplace_back(a_from, u);
        for (int u : us)
            for (int v : vs)
                edges.emplace_back(u, v);
        for (int v : vs)
            for (int w : ws)
                edges.emplace_back(v, w);
        for (int w : ws)
            edges.emplace_back(w, a_to);
    }

    out.instance.g = UndirectedGraph(static_cast<int>(lists.lists.size()), std::move(edges));
    out.instance.h = t.h;
    out.instance.l = std::move(lists);
    out.instance.k = inst.k;
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 11: a fixed-side instance over a represented target becomes chain
// clauses whose unique 0->1 transition picks the arc.

namespace {

struct SpannedArc {
    int vertex;   // vertex of H
    int start;    // linearised start, measured from the excluded pole
    int end;      // linearised end
};

}  // namespace

FsToVdcsResult reduce_fs_to_vdcs(const UndirectedGraph& g, const ListAssignment& l,
                                 const BipartiteTarget& h, const ArcRepresentation& rep,
                                 int k) {
    auto arc_check = validate_arc_representation(h, rep);
    if (!arc_check.ok)
        throw std::invalid_argument("arc representation invalid: " + arc_check.reason);
    if (static_cast<int>(l.lists.size()) != g.n)
        throw std::invalid_argument("lists do not cover G");

    int m = rep.circle_size;
    auto from_pole = [&](int pole, int x) { return ((x - pole) % m + m) % m; };

    // Arcs missing a pole are plain intervals when measured clockwise from
    // that pole; northern arcs linearise from S, southern ones from N.
    auto linearise = [&](int v) {
        int pole = rep.is_northern(v) ? rep.south : rep.north;
        return SpannedArc{v, from_pole(pole, rep.arcs[v].first),
                          from_pole(pole, rep.arcs[v].second)};
    };

    std::vector<bool> is_top(g.n, false);
    for (int v = 0; v < g.n; ++v) {
        bool any_north = false, any_south = false;
        for (int a : l.lists[v])
            (rep.is_northern(a) ? any_north : any_south) = true;
        if (any_north && any_south)
            throw std::invalid_argument("list of vertex " + std::to_string(v) +
                                        " is not fixed side");
        is_top[v] = any_north;
    }
    for (auto [u, v] : g.edges)
        if (!l.lists[u].empty() && !l.lists[v].empty() && is_top[u] == is_top[v])
            throw std::invalid_argument(
                "edge {" + std::to_string(u) + "," + std::to_string(v) +
                "} joins two same-side lists and cannot be expressed");

    // dominated-arc normalisation and the onion ordering (latest start first)
    std::vector<std::vector<SpannedArc>> ordered(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::vector<SpannedArc> arcs;
        for (int a : l.lists[v])
            arcs.push_back(linearise(a));
        std::vector<SpannedArc> keep;
        for (const auto& a : arcs) {
            bool dominated = false;
            for (const auto& b : arcs) {
                if (a.vertex == b.vertex)
                    continue;
                bool contains = a.start <= b.start && b.end <= a.end;
                bool equal = a.start == b.start && a.end == b.end;
                if (contains && (!equal || a.vertex > b.vertex))
                    dominated = true;  // a covers b, so a meets a superset of arcs
            }
            if (!dominated)
                keep.push_back(a);
        }
        std::sort(keep.begin(), keep.end(),
                  [](const SpannedArc& x, const SpannedArc& y) { return x.start > y.start; });
        ordered[v] = std::move(keep);
    }

    ChainFormula out;
    VarBuilder vars;
    std::vector<std::vector<int>> chain_vars(g.n);
    FsToVdcsResult result;
    result.vertex_chain.assign(g.n, -1);

    for (int v = 0; v < g.n; ++v) {
        int t = static_cast<int>(ordered[v].size());
        for (int i = 0; i <= t; ++i)
            chain_vars[v].push_back(vars.fresh());
        result.vertex_chain[v] = static_cast<int>(out.chains.size());
        out.chains.push_back({chain_vars[v], 1});
        if (t == 0) {
            // empty list: contradictory unaries force the deletion
            out.unaries.push_back({chain_vars[v][0], false, 1});
            out.unaries.push_back({chain_vars[v][0], true, 1});
        } else {
            out.unaries.push_back({chain_vars[v][0], true, 1});
            out.unaries.push_back({chain_vars[v][t], false, 1});
        }
    }

    int npos = from_pole(rep.south, rep.north);   // N in the from-S frame
    int spos = from_pole(rep.north, rep.south);   // S in the from-N frame
    for (auto [u, v] : g.edges) {
        if (l.lists[u].empty() || l.lists[v].empty())
            continue;
        int top = is_top[u] ? u : v;
        int bottom = is_top[u] ? v : u;
        const auto& as = ordered[top];
        const auto& bs = ordered[bottom];
        int t = static_cast<int>(as.size());
        int tp = static_cast<int>(bs.size());

        // x_i = 1 puts `top` on one of a_0..a_{i-1}; the widest of those ends
        // at a_{i-1}.end, and any arc of `bottom` starting strictly later on
        // the way to S stays clear of it.
        // Arc starts shrink along the onion ordering, so the arcs clearing a
        // given reach form a prefix; the implication targets its last member.
        for (int i = 1; i <= t; ++i) {
            int reach = (as[i - 1].end - npos + m) % m;  // end of a_{i-1}, from-N frame
            int ji = 0;
            for (int j = 0; j < tp && bs[j].start > reach; ++j)
                ji = j + 1;
            out.chains.push_back({{chain_vars[top][i], chain_vars[bottom][ji]}, 1});
        }
        for (int j = 1; j <= tp; ++j) {
            int reach = (bs[j - 1].end - spos + m) % m;  // end of b_{j-1}, from-S frame
            int ij = 0;
            for (int i = 0; i < t && as[i].start > reach; ++i)
                ij = i + 1;
            out.chains.push_back({{chain_vars[bottom][j], chain_vars[top][ij]}, 1});
        }
    }

    // length-2 vertex chains must be deletable: pad with a trailing variable
    for (int v = 0; v < g.n; ++v) {
        auto& chain = out.chains[result.vertex_chain[v]];
        if (chain.length() == 2)
            chain.vars.push_back(vars.fresh());
    }

    out.variable_count = vars.count;
    out.ell = h.n() + 1;
    for (const auto& c : out.chains)
        out.ell = std::max(out.ell, c.length());
    result.instance = make_vdcs(std::move(out), k);
    return result;
}

}  // namespace dlhom
