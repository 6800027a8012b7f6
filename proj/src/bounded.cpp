#include "p3iso/bounded.hpp"

#include <algorithm>

#include "p3iso/patterns.hpp"

namespace p3iso {

namespace {

int max_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

int local_index(const DeletionResult& del, int original) {
    const auto it = std::find(del.old_label.begin(), del.old_label.end(), original);
    if (it == del.old_label.end()) throw internal_error("label not present in deletion survivor");
    return static_cast<int>(it - del.old_label.begin());
}

// traversal order of a path (from its smaller endpoint) or of a cycle
// (from vertex 0 toward its smaller neighbor)
std::vector<int> degree_two_walk(const Graph& g, bool cycle) {
    int start = 0;
    if (!cycle)
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 1) {
                start = v;
                break;
            }
    std::vector<int> order{start};
    int prev = -1;
    int cur = start;
    while (static_cast<int>(order.size()) < g.order()) {
        VertexSet next = g.neighbors(cur);
        if (prev >= 0) next.remove(prev);
        if (static_cast<int>(order.size()) > 1) next.remove(start);
        prev = cur;
        cur = next.lowest();
        order.push_back(cur);
    }
    return order;
}

struct Piece {
    VertexSet set;
    std::vector<std::string> trace;
};

struct Driver {
    BoundMode mode;

    struct Classified {
        ComponentClassification cls;
        std::vector<std::optional<BoundedSetResult>> fast_results;
    };

    bool oracle() const { return mode == BoundMode::exact_oracle; }

    static void append(std::vector<std::string>& into, const std::vector<std::string>& from) {
        into.insert(into.end(), from.begin(), from.end());
    }

    BoundedSetResult verified(const Graph& g, BoundedSetResult out) const {
        if (!is_p3_isolating(g, out.set))
            throw internal_error("bounded: assembled set is not P3-isolating");
        if (oracle() && out.set.count() > out.bound)
            throw internal_error("bounded: certified size bound violated");
        return out;
    }

    Classified classify(const Graph& g, int pivot) {
        Classified c;
        ComponentClassification& cls = c.cls;
        cls.pivot = pivot;
        cls.pivot_neighbors = g.neighbors(pivot);
        const DeletionResult resid = delete_closed_neighborhood(g, VertexSet::single(pivot));
        for (DeletionResult& comp : components(resid.graph)) {
            std::vector<int> to_g;
            to_g.reserve(comp.old_label.size());
            for (int local : comp.old_label)
                to_g.push_back(resid.old_label[static_cast<std::size_t>(local)]);
            cls.comps.push_back(DeletionResult{std::move(comp.graph), std::move(to_g)});
        }
        const std::size_t m = cls.comps.size();
        cls.tight.assign(m, 0);
        cls.linked_to.assign(m, VertexSet{});
        cls.anchor.assign(m, -1);
        cls.anchor2.assign(m, -1);
        cls.exact_r3.assign(m, std::nullopt);
        c.fast_results.assign(m, std::nullopt);
        for (std::size_t i = 0; i < m; ++i) {
            const VertexSet verts = cls.comp_vertices(i);
            cls.pivot_neighbors.for_each([&](int x) {
                if (!(g.neighbors(x) & verts).empty()) cls.linked_to[i].add(x);
            });
            if (cls.linked_to[i].empty())
                throw internal_error("classification: component not linked to the pivot");
            const Graph& comp = cls.comps[i].graph;
            const int cn = comp.order();
            if (oracle()) {
                if (cn % 4 == 3) {
                    cls.exact_r3[i] = iota_exact(comp);
                    cls.tight[i] = cls.exact_r3[i]->iota * 4 == cn + 1;
                }
            } else {
                c.fast_results[i] = solve(comp);
                cls.tight[i] =
                    cn % 4 == 3 && c.fast_results[i]->set.count() * 4 == cn + 1;
            }
            if (cls.tight[i]) {
                cls.anchor[i] = cls.linked_to[i].lowest();
                cls.anchor2[i] = cls.linked_to[i].without(cls.anchor[i]).lowest();
                cls.anchors_x.add(cls.anchor[i]);
                if (cls.anchor2[i] >= 0) cls.anchors_x2.add(cls.anchor2[i]);
            }
        }
        cls.spare_w = cls.pivot_neighbors - cls.anchors_x;
        cls.pivot_neighbors.for_each([&](int x) {
            if (cls.case1_x >= 0) return;
            int tight_links = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (cls.tight[i] && cls.linked_to[i].contains(x)) ++tight_links;
            if (tight_links >= 2) cls.case1_x = x;
        });
        return c;
    }

    // smallest set of H - y_{x,H}, mapped to the outer graph's labels
    Piece contact_deleted_set(const Graph& g, const Classified& c, std::size_t i, int x) {
        const DeletionResult& comp = c.cls.comps[i];
        const int y = c.cls.contact(g, x, i);
        if (y < 0) throw internal_error("contact requested for an unlinked pivot neighbor");
        const DeletionResult reduced =
            remove_vertices(comp.graph, VertexSet::single(local_index(comp, y)));
        Piece piece;
        if (oracle()) {
            const ExactResult er = iota_exact(reduced.graph);
            if (er.iota * 4 > comp.graph.order() - 3)
                throw internal_error("contact-deleted component exceeded (|V(H)|-3)/4");
            piece.set = comp.to_original(reduced.to_original(er.witness));
        } else {
            const BoundedSetResult sub = solve_components(reduced.graph);
            piece.set = comp.to_original(reduced.to_original(sub.set));
            piece.trace = sub.case_trace;
        }
        return piece;
    }

    // set for a whole component: exact witness for residue-3 components in
    // oracle mode, the recursive result otherwise
    Piece whole_component_set(const Classified& c, std::size_t i) {
        const DeletionResult& comp = c.cls.comps[i];
        Piece piece;
        if (oracle()) {
            if (comp.graph.order() % 4 == 3) {
                piece.set = comp.to_original(c.cls.exact_r3[i]->witness);
            } else {
                const BoundedSetResult sub = solve(comp.graph);
                piece.set = comp.to_original(sub.set);
                piece.trace = sub.case_trace;
            }
        } else {
            piece.set = comp.to_original(c.fast_results[i]->set);
            piece.trace = c.fast_results[i]->case_trace;
        }
        return piece;
    }

    void take_rest_piece(const Graph& g, Classified& c, std::size_t i, BoundedSetResult& out) {
        (void)g;
        const Piece piece = whole_component_set(c, i);
        const int cn = c.cls.comps[i].graph.order();
        if (oracle() && piece.set.count() * 4 > cn)
            throw internal_error("rest component exceeded |V(H)|/4");
        out.set |= piece.set;
        append(out.case_trace, piece.trace);
    }

    BoundedSetResult solve_components(const Graph& g) {
        BoundedSetResult out;
        for (const DeletionResult& comp : components(g)) {
            const BoundedSetResult sub = solve(comp.graph);
            out.set |= comp.to_original(sub.set);
            out.bound += sub.bound;
            append(out.case_trace, sub.case_trace);
        }
        return out;
    }

    BoundedSetResult solve(const Graph& g) {
        const int n = g.order();
        BoundedSetResult out;
        if (g.max_degree() <= 1) {
            out.bound = n / 4;
            out.case_trace = {"trivial"};
            return verified(g, out);
        }
        if (n == 3) {
            out.set = VertexSet::single(max_degree_vertex(g));
            out.bound = 1;
            out.case_trace = {"n3"};
            return verified(g, out);
        }
        if (g.max_degree() == 2) {
            if (g.min_degree() == 1) {
                const std::vector<int> order = degree_two_walk(g, false);
                for (std::size_t i = 3; i < order.size(); i += 4) out.set.add(order[i]);
                out.bound = n / 4;
                out.case_trace = {"path"};
            } else {
                if (n == 6)
                    throw internal_error("bounded: 6-cycle survived the precondition check");
                const std::vector<int> order = degree_two_walk(g, true);
                for (std::size_t i = 0; i < order.size(); i += 5) out.set.add(order[i]);
                out.bound = (n == 7 || n == 11) ? (n + 1) / 4 : n / 4;
                out.case_trace = {"cycle"};
            }
            return verified(g, out);
        }

        const int pivot = max_degree_vertex(g);
        if (g.closed_neighbors(pivot) == g.vertices()) {
            out.set = VertexSet::single(pivot);
            out.bound = n / 4;
            out.case_trace = {"dominating"};
            return verified(g, out);
        }

        Classified c = classify(g, pivot);
        const ComponentClassification& cls = c.cls;
        const std::size_t m = cls.comps.size();

        if (cls.case1_x >= 0) {
            const int x = cls.case1_x;
            out.case_trace = {"case1"};
            out.set = VertexSet::of({pivot, x});
            for (std::size_t i = 0; i < m; ++i) {
                if (!cls.tight[i]) continue;
                const int via = cls.linked_to[i].contains(x) ? x : cls.anchor[i];
                if (via != x) out.set.add(via);
                const Piece piece = contact_deleted_set(g, c, i, via);
                out.set |= piece.set;
                append(out.case_trace, piece.trace);
            }
            for (std::size_t i = 0; i < m; ++i)
                if (!cls.tight[i]) take_rest_piece(g, c, i, out);
            out.bound = n / 4;
            return verified(g, out);
        }

        // case 2: each pivot neighbor links to at most one tight component,
        // so the anchors x_H are pairwise distinct
        const int tight_count =
            static_cast<int>(std::count(cls.tight.begin(), cls.tight.end(), char{1}));
        if (cls.anchors_x.count() != tight_count)
            throw internal_error("case 2: anchors are not pairwise distinct");

        if (cls.spare_w.count() >= 3) {
            out.case_trace = {"case2.1"};
            out.set = cls.anchors_x.with(pivot);
            for (std::size_t i = 0; i < m; ++i) {
                if (!cls.tight[i]) continue;
                const Piece piece = contact_deleted_set(g, c, i, cls.anchor[i]);
                out.set |= piece.set;
                append(out.case_trace, piece.trace);
            }
            for (std::size_t i = 0; i < m; ++i)
                if (!cls.tight[i]) take_rest_piece(g, c, i, out);
            out.bound = n / 4;
            return verified(g, out);
        }

        // case 2.2: |W| <= 2 (tight components exist, else W = N(v))
        std::size_t solo = m;
        for (std::size_t i = 0; i < m; ++i)
            if (cls.tight[i] && cls.linked_to[i].count() == 1) {
                solo = i;
                break;
            }

        if (solo < m) return case_2_2_1(g, c, solo, out);
        return case_2_2_2(g, c, out);
    }

    // a tight component linked to its anchor only: carve it out with the
    // anchor and re-solve the pivot-side remainder
    BoundedSetResult case_2_2_1(const Graph& g, Classified& c, std::size_t solo,
                                BoundedSetResult out) {
        const ComponentClassification& cls = c.cls;
        const int n = g.order();
        const int xh = cls.anchor[solo];
        const DeletionResult star = remove_vertices(g, cls.comp_vertices(solo).with(xh));
        const std::vector<DeletionResult> star_comps = components(star.graph);

        const auto comp_in_g = [&](const DeletionResult& comp) {
            VertexSet local;
            for (int lbl : comp.old_label) local.add(lbl);
            return star.to_original(local);
        };
        std::size_t vi = star_comps.size();
        for (std::size_t t = 0; t < star_comps.size(); ++t)
            if (comp_in_g(star_comps[t]).contains(cls.pivot)) {
                vi = t;
                break;
            }
        if (vi == star_comps.size()) throw internal_error("case 2.2.1: pivot component missing");
        const DeletionResult& gv_del = star_comps[vi];
        const Graph& gv = gv_del.graph;
        const auto to_g = [&](VertexSet local_in_gv) {
            return star.to_original(gv_del.to_original(local_in_gv));
        };

        Piece main;
        const BoundedSetResult sub = solve(gv);
        if (sub.set.count() * 4 <= gv.order()) {
            out.case_trace = {"case2.2.1"};
            main.set = to_g(sub.set);
            main.trace = sub.case_trace;
        } else if (oracle()) {
            if (gv.order() % 4 != 3)
                throw internal_error("case 2.2.1: overshoot on a non residue-3 remainder");
            const ExactResult er = iota_exact(gv);
            if (er.iota * 4 == gv.order() + 1) {
                out.case_trace = {"case2.2.1-retry"};
                const int pivot_in_gv = local_index(gv_del, local_index(star, cls.pivot));
                const DeletionResult gv_minus =
                    remove_vertices(gv, VertexSet::single(pivot_in_gv));
                const ExactResult er2 = iota_exact(gv_minus.graph);
                if (er2.iota * 4 > gv.order() - 3)
                    throw internal_error("case 2.2.1: tight remainder reduction exceeded bound");
                main.set = to_g(gv_minus.to_original(er2.witness));
            } else {
                out.case_trace = {"case2.2.1-exact"};
                if (er.iota * 4 > gv.order())
                    throw internal_error("case 2.2.1: exact remainder exceeded |V|/4");
                main.set = to_g(er.witness);
            }
        } else {
            out.case_trace = {"case2.2.1-retry"};
            const int pivot_in_gv = local_index(gv_del, local_index(star, cls.pivot));
            const DeletionResult gv_minus = remove_vertices(gv, VertexSet::single(pivot_in_gv));
            const BoundedSetResult sub2 = solve_components(gv_minus.graph);
            main.set = to_g(gv_minus.to_original(sub2.set));
            main.trace = sub2.case_trace;
        }

        out.set = main.set.with(xh);
        append(out.case_trace, main.trace);
        const Piece contact = contact_deleted_set(g, c, solo, xh);
        out.set |= contact.set;
        append(out.case_trace, contact.trace);

        // the remaining star components are exactly the rest components
        // linked only to the carved anchor
        for (std::size_t t = 0; t < star_comps.size(); ++t) {
            if (t == vi) continue;
            const VertexSet orig = comp_in_g(star_comps[t]);
            std::size_t match = cls.comps.size();
            for (std::size_t i = 0; i < cls.comps.size(); ++i)
                if (cls.comp_vertices(i) == orig) {
                    match = i;
                    break;
                }
            if (match == cls.comps.size() || cls.tight[match])
                throw internal_error("case 2.2.1: separated component is not a rest component");
            take_rest_piece(g, c, match, out);
        }
        out.bound = n / 4;
        return verified(g, out);
    }

    // every tight component is linked to a second pivot neighbor; spend the
    // full (|V(H)|+1)/4 on each and keep only the pivot from N[v]
    BoundedSetResult case_2_2_2(const Graph& g, Classified& c, BoundedSetResult out) {
        const ComponentClassification& cls = c.cls;
        const int n = g.order();
        const int d = g.degree(cls.pivot);
        if (d != 3 && d != 4)
            throw internal_error("case 2.2.2: pivot degree outside {3,4}");
        if (!cls.anchors_x2.is_subset_of(cls.spare_w) ||
            !(cls.anchors_x2 & cls.anchors_x).empty())
            throw internal_error("case 2.2.2: secondary anchors overlap the primary ones");
        out.case_trace = {"case2.2.2"};
        out.set = VertexSet::single(cls.pivot);
        for (std::size_t i = 0; i < cls.comps.size(); ++i) {
            if (!cls.tight[i]) continue;
            const Piece piece = whole_component_set(c, i);
            const int cn = cls.comps[i].graph.order();
            if (oracle() && piece.set.count() * 4 > cn + 1)
                throw internal_error("case 2.2.2: tight component exceeded (|V(H)|+1)/4");
            out.set |= piece.set;
            append(out.case_trace, piece.trace);
        }
        for (std::size_t i = 0; i < cls.comps.size(); ++i)
            if (!cls.tight[i]) take_rest_piece(g, c, i, out);
        out.bound = (n + 1) / 4;
        return verified(g, out);
    }
};

}  // namespace

BoundedSetResult isolating_set_bounded(const Graph& g, BoundMode mode) {
    if (!g.connected())
        throw precondition_error("isolating_set_bounded: disconnected input");
    if (has_induced_cycle(g, 6))
        throw precondition_error("isolating_set_bounded: induced 6-cycle present");
    Driver driver{mode};
    return driver.solve(g);
}

VertexSet reduce_tight(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw precondition_error("reduce_tight: vertex out of range");
    if (!g.connected()) throw precondition_error("reduce_tight: disconnected input");
    if (has_induced_cycle(g, 6))
        throw precondition_error("reduce_tight: induced 6-cycle present");
    const ExactResult whole = iota_exact(g);
    if (g.order() % 4 != 3 || whole.iota * 4 != g.order() + 1)
        throw precondition_error("reduce_tight: graph is not tight");
    const DeletionResult rest = remove_vertices(g, VertexSet::single(v));
    const ExactResult er = iota_exact(rest.graph);
    if (er.iota > whole.iota - 1)
        throw internal_error("reduce_tight: deletion did not lower the isolation number");
    return rest.to_original(er.witness);
}

ComponentClassification classify_components(const Graph& g, int pivot, BoundMode mode) {
    if (pivot < 0 || pivot >= g.order())
        throw precondition_error("classify_components: pivot out of range");
    if (!g.connected())
        throw precondition_error("classify_components: disconnected input");
    if (closed_neighborhood(g, VertexSet::single(pivot)) == g.vertices())
        throw precondition_error("classify_components: pivot dominates the graph");
    Driver driver{mode};
    return driver.classify(g, pivot).cls;
}

}  // namespace p3iso
