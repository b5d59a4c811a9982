#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tau4/checked.hpp"
#include "tau4/error.hpp"
#include "tau4/link.hpp"

namespace tau4 {

namespace {

struct Slot {
    int crossing = -1;
    int slot = -1;
    bool operator==(const Slot&) const = default;
};

bool is_outgoing(const Crossing& c, int slot) { return slot == 2 || slot == (c.sign > 0 ? 3 : 1); }

// Tail (outgoing) and head (incoming) slot of every arc.
struct Ends {
    std::map<int, Slot> tail, head;

    explicit Ends(const PDLink& link) {
        for (int ci = 0; ci < link.crossing_count(); ++ci) {
            const Crossing& c = link.crossings[ci];
            for (int s = 0; s < 4; ++s) {
                auto& side = is_outgoing(c, s) ? tail : head;
                if (!side.emplace(c.x[s], Slot{ci, s}).second)
                    throw ValidationError("arc " + std::to_string(c.x[s]) + " is " +
                                          (is_outgoing(c, s) ? "outgoing" : "incoming") + " at two crossing slots");
            }
        }
    }
};

// Arc that continues the strand through the head crossing of `arc`.
int successor(const PDLink& link, const Ends& ends, int arc) {
    Slot h = ends.head.at(arc);
    const Crossing& c = link.crossings[h.crossing];
    return h.slot == 0 ? c.under_out() : c.over_out();
}

int fresh_arc(const PDLink& link) {
    int m = -1;
    for (const auto& [a, k] : link.component_of_arc) m = std::max(m, a);
    return m + 1;
}

int component(const PDLink& link, int arc) {
    auto it = link.component_of_arc.find(arc);
    if (it == link.component_of_arc.end()) throw ValidationError("arc " + std::to_string(arc) + " has no component");
    return it->second;
}

}  // namespace

void PDLink::validate() const {
    if (components < 0) throw ValidationError("negative component count");
    if (static_cast<int>(framings.size()) != components)
        throw ValidationError("framings: expected " + std::to_string(components) + " entries");
    for (const auto& c : crossings)
        if (c.sign != 1 && c.sign != -1) throw ValidationError("crossing sign must be +1 or -1");
    Ends ends(*this);
    for (const auto& [arc, s] : ends.tail)
        if (!ends.head.count(arc)) throw ValidationError("arc " + std::to_string(arc) + " has no incoming end");
    for (const auto& [arc, s] : ends.head)
        if (!ends.tail.count(arc)) throw ValidationError("arc " + std::to_string(arc) + " has no outgoing end");
    for (const auto& [arc, s] : ends.tail)
        if (!component_of_arc.count(arc))
            throw ValidationError("component_of_arc: arc " + std::to_string(arc) + " missing");
    for (const auto& [arc, k] : component_of_arc) {
        if (!ends.tail.count(arc))
            throw ValidationError("component_of_arc: arc " + std::to_string(arc) + " does not occur in any crossing");
        if (k < 0 || k >= components)
            throw ValidationError("component_of_arc: component " + std::to_string(k) + " out of range");
    }
    std::vector<int> seen_cycle(components, 0);
    std::set<int> done;
    for (const auto& [start, k] : component_of_arc) {
        if (done.count(start)) continue;
        if (seen_cycle[k]++) throw ValidationError("component " + std::to_string(k) + " consists of several cycles");
        int a = start;
        do {
            if (component_of_arc.at(a) != k)
                throw ValidationError("arc " + std::to_string(a) + " is labeled with the wrong component");
            done.insert(a);
            a = successor(*this, ends, a);
        } while (a != start);
    }
}

std::vector<int> PDLink::traverse(int k) const {
    std::vector<int> out;
    int start = -1;
    for (const auto& [a, c] : component_of_arc)
        if (c == k) {
            start = a;
            break;
        }
    if (start < 0) return out;
    Ends ends(*this);
    int a = start;
    do {
        out.push_back(a);
        a = successor(*this, ends, a);
    } while (a != start);
    return out;
}

PDLink relabeled(const PDLink& link) {
    std::map<int, int> to;
    int next = 0;
    for (int k = 0; k < link.components; ++k)
        for (int a : link.traverse(k)) to[a] = next++;
    PDLink out = link;
    out.component_of_arc.clear();
    for (auto& c : out.crossings)
        for (int& a : c.x) a = to.at(a);
    for (const auto& [a, k] : link.component_of_arc) out.component_of_arc[to.at(a)] = k;
    return out;
}

PDLink from_braid(const std::vector<int>& word, int strands) {
    if (strands < 1) throw ValidationError("braid needs at least one strand");
    std::vector<int> cur(strands), origin(strands);
    std::iota(cur.begin(), cur.end(), 0);
    std::iota(origin.begin(), origin.end(), 0);
    std::map<int, int> strand_of;  // arc -> original strand
    for (int p = 0; p < strands; ++p) strand_of[p] = p;
    int next = strands;
    PDLink link;
    for (int g : word) {
        int i = std::abs(g) - 1;
        if (g == 0 || i >= strands - 1)
            throw ValidationError("braid generator " + std::to_string(g) + " out of range for " + std::to_string(strands) +
                                  " strands");
        int x = cur[i], y = cur[i + 1], n1 = next++, n2 = next++;
        if (g > 0)
            link.crossings.push_back({{y, x, n1, n2}, 1});
        else
            link.crossings.push_back({{x, n1, n2, y}, -1});
        std::swap(origin[i], origin[i + 1]);
        strand_of[n1] = origin[i];
        strand_of[n2] = origin[i + 1];
        cur[i] = n1;
        cur[i + 1] = n2;
    }
    // Closure: strand starting at s ends at position where origin == s.
    std::vector<int> perm(strands);
    for (int p = 0; p < strands; ++p) perm[origin[p]] = p;
    std::vector<int> comp(strands, -1);
    int ncomp = 0;
    for (int s = 0; s < strands; ++s) {
        if (comp[s] >= 0) continue;
        for (int t = s; comp[t] < 0; t = perm[t]) comp[t] = ncomp;
        ++ncomp;
    }
    std::map<int, int> rename;
    for (int p = 0; p < strands; ++p)
        if (cur[p] != p) rename[cur[p]] = p;
    std::set<int> used;
    for (auto& c : link.crossings)
        for (int& a : c.x) {
            if (auto it = rename.find(a); it != rename.end()) a = it->second;
            used.insert(a);
        }
    for (int a : used) link.component_of_arc[a] = comp[strand_of.at(a)];
    link.components = ncomp;
    link.framings.assign(ncomp, 0);
    link.validate();
    return relabeled(link);
}

PDLink unlink(int n) {
    PDLink link;
    link.components = n;
    link.framings.assign(n, 0);
    return link;
}

SymIntMatrix linking_matrix(const PDLink& link) {
    int n = link.components;
    IntMatrix twice(n, n);
    for (const auto& c : link.crossings) {
        int i = component(link, c.under_in()), j = component(link, c.over_in());
        if (i == j) continue;
        twice(i, j) = chk::add(twice(i, j), c.sign);
        twice(j, i) = chk::add(twice(j, i), c.sign);
    }
    IntMatrix lk(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                lk(i, i) = link.framings[i];
                continue;
            }
            if (twice(i, j) % 2)
                throw ValidationError("odd signed crossing count between components " + std::to_string(i) + " and " +
                                      std::to_string(j));
            lk(i, j) = twice(i, j) / 2;
        }
    return lk;
}

std::int64_t total_linking(const PDLink& link) {
    SymIntMatrix lk = linking_matrix(link);
    std::int64_t s = 0;
    for (int i = 0; i < lk.rows(); ++i)
        for (int j = i + 1; j < lk.rows(); ++j) s = chk::add(s, lk(i, j));
    return s;
}

PDLink delete_components(const PDLink& link, std::uint64_t keep) {
    std::map<int, int> parent;
    auto find = [&](int a) {
        while (parent.count(a)) a = parent[a];
        return a;
    };
    auto kept = [&](int k) { return k < 64 && ((keep >> k) & 1u); };
    PDLink out;
    std::vector<int> newid(link.components, -1);
    for (int k = 0; k < link.components; ++k)
        if (kept(k)) {
            newid[k] = out.components++;
            out.framings.push_back(link.framings[k]);
        }
    std::vector<Crossing> survivors;
    for (const auto& c : link.crossings) {
        bool u = kept(component(link, c.under_in())), o = kept(component(link, c.over_in()));
        if (u && o) {
            survivors.push_back(c);
        } else if (u) {
            int in = find(c.under_in()), outa = find(c.under_out());
            if (in != outa) parent[outa] = in;
        } else if (o) {
            int in = find(c.over_in()), outa = find(c.over_out());
            if (in != outa) parent[outa] = in;
        }
    }
    for (auto& c : survivors) {
        for (int& a : c.x) a = find(a);
        out.crossings.push_back(c);
        for (int a : c.x) out.component_of_arc[a] = newid[component(link, a)];
    }
    return out;
}

PDLink disjoint_union(const PDLink& a, const PDLink& b) {
    PDLink out = a;
    int shift = fresh_arc(a);
    for (auto c : b.crossings) {
        for (int& x : c.x) x += shift;
        out.crossings.push_back(c);
    }
    for (const auto& [arc, k] : b.component_of_arc) out.component_of_arc[arc + shift] = k + a.components;
    out.components += b.components;
    out.framings.insert(out.framings.end(), b.framings.begin(), b.framings.end());
    return out;
}

PDLink mirror(const PDLink& link) {
    PDLink out = link;
    for (auto& c : out.crossings) {
        std::swap(c.x[1], c.x[3]);
        c.sign = -c.sign;
    }
    for (auto& f : out.framings) f = chk::neg(f);
    return out;
}

PDLink reverse_component(const PDLink& link, int k) {
    if (k < 0 || k >= link.components) throw ValidationError("component index out of range");
    PDLink out = link;
    for (auto& c : out.crossings) {
        bool u = component(link, c.under_in()) == k, o = component(link, c.over_in()) == k;
        if (u) c.x = {c.x[2], c.x[3], c.x[0], c.x[1]};
        if (u != o) c.sign = -c.sign;
    }
    return out;
}

std::vector<std::vector<Dart>> faces(const PDLink& link) {
    Ends ends(link);
    std::set<std::pair<int, bool>> used;
    std::vector<std::vector<Dart>> out;
    for (const auto& [arc, s] : ends.tail)
        for (bool fwd : {true, false}) {
            if (used.count({arc, fwd})) continue;
            std::vector<Dart> face;
            Dart d{arc, fwd};
            while (!used.count({d.arc, d.forward})) {
                used.insert({d.arc, d.forward});
                face.push_back(d);
                Slot end = d.forward ? ends.head.at(d.arc) : ends.tail.at(d.arc);
                int ns = (end.slot + 1) % 4;
                int na = link.crossings[end.crossing].x[ns];
                d = {na, ends.tail.at(na) == Slot{end.crossing, ns}};
            }
            out.push_back(face);
        }
    return out;
}

bool is_planar(const PDLink& link) {
    int v = link.crossing_count();
    if (v == 0) return true;
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    Ends ends(link);
    for (const auto& [arc, t] : ends.tail) parent[find(t.crossing)] = find(ends.head.at(arc).crossing);
    int pieces = 0;
    for (int i = 0; i < v; ++i) pieces += find(i) == i;
    // Boundary cycles are traced per piece, each piece on its own sphere.
    return static_cast<int>(faces(link).size()) == v + 2 * pieces;
}

PDLink reidemeister1(const PDLink& link, int arc, int variant) {
    Ends ends(link);
    if (!ends.head.count(arc)) throw ValidationError("arc " + std::to_string(arc) + " not in diagram");
    PDLink out = link;
    int loop = fresh_arc(link), e2 = loop + 1;
    Slot h = ends.head.at(arc);
    out.crossings[h.crossing].x[h.slot] = e2;
    int k = component(link, arc);
    out.component_of_arc[loop] = k;
    out.component_of_arc[e2] = k;
    switch (variant & 3) {
        case 0: out.crossings.push_back({{arc, e2, loop, loop}, -1}); break;
        case 1: out.crossings.push_back({{arc, loop, loop, e2}, 1}); break;
        case 2: out.crossings.push_back({{loop, arc, e2, loop}, 1}); break;
        default: out.crossings.push_back({{loop, loop, e2, arc}, -1}); break;
    }
    return out;
}

PDLink reidemeister2(const PDLink& link, Dart de, Dart df) {
    if (de.arc == df.arc) throw ValidationError("second Reidemeister move needs two distinct arcs");
    Ends ends(link);
    PDLink out = link;
    int e = de.arc, f = df.arc;
    int e1 = fresh_arc(link), e2 = e1 + 1, f1 = e1 + 2, f2 = e1 + 3;
    Slot he = ends.head.at(e), hf = ends.head.at(f);
    out.crossings[he.crossing].x[he.slot] = e2;
    out.crossings[hf.crossing].x[hf.slot] = f2;
    out.component_of_arc[e1] = out.component_of_arc[e2] = component(link, e);
    out.component_of_arc[f1] = out.component_of_arc[f2] = component(link, f);
    bool e_left = de.forward, f_left = df.forward;
    if (e_left && !f_left) {
        out.crossings.push_back({{f, e1, f1, e}, -1});
        out.crossings.push_back({{f1, e1, f2, e2}, 1});
    } else if (e_left && f_left) {
        out.crossings.push_back({{f, e2, f1, e1}, -1});
        out.crossings.push_back({{f1, e, f2, e1}, 1});
    } else if (!e_left && f_left) {
        out.crossings.push_back({{f, e, f1, e1}, 1});
        out.crossings.push_back({{f1, e2, f2, e1}, -1});
    } else {
        out.crossings.push_back({{f, e1, f1, e2}, 1});
        out.crossings.push_back({{f1, e1, f2, e}, -1});
    }
    return out;
}

HalfTwist half_twist(const Band& band) {
    std::int64_t exact = chk::add(band.half_twists, chk::mul(2, band.writhe));
    return {exact, static_cast<int>(chk::mod(exact, 4))};
}

}  // namespace tau4
