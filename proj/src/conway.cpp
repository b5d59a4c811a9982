#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tau4/checked.hpp"
#include "tau4/error.hpp"
#include "tau4/limits.hpp"
#include "tau4/link.hpp"

namespace tau4 {

namespace {

// Unlabeled diagram: arcs are 0..n-1, components are implied by the strand cycles.
struct Diagram {
    std::vector<Crossing> cr;
    int free_loops = 0;
};

struct Walk {
    int arcs = 0;
    std::vector<int> head_crossing, head_slot, next;
};

Walk walk(const Diagram& d) {
    Walk w;
    w.arcs = 2 * static_cast<int>(d.cr.size());
    w.head_crossing.assign(w.arcs, -1);
    w.head_slot.assign(w.arcs, -1);
    w.next.assign(w.arcs, -1);
    for (int ci = 0; ci < static_cast<int>(d.cr.size()); ++ci) {
        const Crossing& c = d.cr[ci];
        w.head_crossing[c.under_in()] = ci;
        w.head_slot[c.under_in()] = 0;
        w.next[c.under_in()] = c.under_out();
        w.head_crossing[c.over_in()] = ci;
        w.head_slot[c.over_in()] = c.sign > 0 ? 1 : 3;
        w.next[c.over_in()] = c.over_out();
    }
    return w;
}

// Renumbers arcs along components ordered by smallest arc; each starts at its smallest arc.
Diagram canonical(const Diagram& d, std::vector<int>* comp_start = nullptr) {
    Walk w = walk(d);
    std::vector<int> to(w.arcs, -1);
    int k = 0;
    for (int a = 0; a < w.arcs; ++a) {
        if (to[a] >= 0) continue;
        if (comp_start) comp_start->push_back(k);
        int b = a;
        do {
            to[b] = k++;
            b = w.next[b];
        } while (b != a);
    }
    Diagram out = d;
    for (auto& c : out.cr)
        for (int& a : c.x) a = to[a];
    return out;
}

// Deletes crossings and joins arc pairs end to end; a pair already joined closes a free loop.
void splice(Diagram& d, std::vector<std::size_t> drop, const std::vector<std::pair<int, int>>& joins) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int a) {
        auto it = parent.find(a);
        if (it == parent.end() || it->second == a) return a;
        return it->second = find(it->second);
    };
    for (auto [p, q] : joins) {
        int rp = find(p), rq = find(q);
        if (rp == rq)
            ++d.free_loops;
        else
            parent[rq] = rp;
    }
    std::sort(drop.rbegin(), drop.rend());
    for (auto ci : drop) d.cr.erase(d.cr.begin() + static_cast<std::ptrdiff_t>(ci));
    for (auto& c : d.cr)
        for (int& a : c.x) a = find(a);
}

// One Reidemeister I or II reduction, if any applies.
bool reduce_once(Diagram& d) {
    auto& cr = d.cr;
    for (std::size_t ci = 0; ci < cr.size(); ++ci) {
        const auto x = cr[ci].x;
        for (int k = 0; k < 4; ++k)
            if (x[k] == x[(k + 1) % 4]) {
                splice(d, {ci}, {{x[(k + 2) % 4], x[(k + 3) % 4]}});
                return true;
            }
    }
    // Bigon face: arcs u, v at slots k, k+1 of one crossing and j+1, j of another.
    for (std::size_t c1 = 0; c1 < cr.size(); ++c1)
        for (std::size_t c2 = 0; c2 < cr.size(); ++c2) {
            if (c1 == c2) continue;
            const auto x = cr[c1].x, y = cr[c2].x;
            for (int k = 0; k < 4; ++k)
                for (int j = 0; j < 4; ++j) {
                    int u = x[k], v = x[(k + 1) % 4];
                    if (y[j] != v || y[(j + 1) % 4] != u || k % 2 != (j + 1) % 2) continue;
                    splice(d, {c1, c2}, {{x[(k + 2) % 4], y[(j + 3) % 4]}, {x[(k + 3) % 4], y[(j + 2) % 4]}});
                    return true;
                }
        }
    return false;
}

// Applies Reidemeister I and II reductions, then compacts arc ids to 0..2n-1.
// An irreducible diagram keeps its ids, so its base points and descent progress survive.
Diagram simplified(Diagram d) {
    if (!reduce_once(d)) return d;
    while (reduce_once(d)) {
    }
    std::map<int, int> id;
    for (auto& c : d.cr)
        for (int& a : c.x) a = id.emplace(a, static_cast<int>(id.size())).first->second;
    return d;
}

ConwayPoly add(const ConwayPoly& a, const ConwayPoly& b, std::int64_t scale, int shift) {
    ConwayPoly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
    for (std::size_t k = 0; k < b.size(); ++k) r[k + shift] = chk::add(r[k + shift], chk::mul(scale, b[k]));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

class Skein {
public:
    ConwayPoly eval(const Diagram& in) {
        if (in.cr.empty()) return in.free_loops == 1 ? ConwayPoly{1} : ConwayPoly{};
        if (in.free_loops > 0) return {};
        std::vector<int> starts;
        Diagram d = canonical(in, &starts);
        std::vector<int> key;
        key.reserve(5 * d.cr.size());
        for (const auto& c : d.cr) {
            key.insert(key.end(), c.x.begin(), c.x.end());
            key.push_back(c.sign);
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        ConwayPoly r = compute(d, starts);
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    std::map<std::vector<int>, ConwayPoly> memo_;

    static bool is_split(const Diagram& d, const Walk& w, const std::vector<int>& starts) {
        int ncomp = static_cast<int>(starts.size());
        if (ncomp < 2) return false;
        std::vector<int> comp(w.arcs);
        for (int k = 0; k < ncomp; ++k) {
            int end = k + 1 < ncomp ? starts[k + 1] : w.arcs;
            for (int a = starts[k]; a < end; ++a) comp[a] = k;
        }
        std::vector<int> parent(ncomp);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        int groups = ncomp;
        for (const auto& c : d.cr) {
            int a = find(comp[c.under_in()]), b = find(comp[c.over_in()]);
            if (a != b) {
                parent[a] = b;
                --groups;
            }
        }
        return groups > 1;
    }

    ConwayPoly compute(const Diagram& d, const std::vector<int>& starts) {
        Walk w = walk(d);
        if (is_split(d, w, starts)) return {};
        // First crossing reached on its under-strand before its over-strand.
        std::vector<char> visited(d.cr.size(), 0);
        int bad = -1;
        for (std::size_t k = 0; k < starts.size() && bad < 0; ++k) {
            int a = starts[k];
            do {
                int ci = w.head_crossing[a];
                if (!visited[ci]) {
                    visited[ci] = 1;
                    if (w.head_slot[a] == 0) {
                        bad = ci;
                        break;
                    }
                }
                a = w.next[a];
            } while (a != starts[k]);
        }
        if (bad < 0) return starts.size() == 1 ? ConwayPoly{1} : ConwayPoly{};

        const Crossing c = d.cr[bad];
        Diagram sw = d;
        auto& x = c.x;
        if (c.sign > 0)
            sw.cr[bad] = {{x[1], x[2], x[3], x[0]}, -1};
        else
            sw.cr[bad] = {{x[3], x[0], x[1], x[2]}, 1};

        Diagram sm;
        sm.free_loops = d.free_loops;
        for (int ci = 0; ci < static_cast<int>(d.cr.size()); ++ci)
            if (ci != bad) sm.cr.push_back(d.cr[ci]);
        std::vector<int> alias(w.arcs);
        std::iota(alias.begin(), alias.end(), 0);
        auto root = [&](int a) {
            while (alias[a] != a) a = alias[a];
            return a;
        };
        std::pair<int, int> joins[2];
        if (c.sign > 0)
            joins[0] = {x[0], x[3]}, joins[1] = {x[1], x[2]};
        else
            joins[0] = {x[0], x[1]}, joins[1] = {x[3], x[2]};
        for (auto [in, out] : joins) {
            int ri = root(in), ro = root(out);
            if (ri == ro)
                ++sm.free_loops;
            else
                alias[ro] = ri;
        }
        // Compact the surviving arc ids.
        std::vector<int> id(w.arcs, -1);
        int n = 0;
        for (auto& cc : sm.cr)
            for (int& a : cc.x) {
                int r = root(a);
                if (id[r] < 0) id[r] = n++;
                a = id[r];
            }

        ConwayPoly lower = eval(simplified(sw));
        ConwayPoly zero = eval(simplified(sm));
        // grad(L_s) = grad(L_-s) + s z grad(L_0)
        return add(lower, zero, c.sign, 1);
    }
};

}  // namespace

ConwayPoly conway(const PDLink& link) {
    if (link.crossing_count() > limits::crossings())
        throw BoundExceeded("diagram has " + std::to_string(link.crossing_count()) +
                            " crossings, above the skein bound " + std::to_string(limits::crossings()));
    if (link.components == 0) return {1};
    PDLink r = relabeled(link);
    Diagram d;
    d.cr = r.crossings;
    for (int k = 0; k < r.components; ++k)
        if (r.traverse(k).empty()) ++d.free_loops;
    Skein s;
    return s.eval(simplified(d));
}

std::int64_t c1(const PDLink& link) {
    ConwayPoly p = conway(link);
    std::size_t deg = static_cast<std::size_t>(link.components) + 1;
    return deg < p.size() ? p[deg] : 0;
}

}  // namespace tau4
