#include "tau4/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tau4/error.hpp"

namespace tau4::io {

namespace {

std::int64_t as_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ValidationError(field + ": expected an integer");
    return j.get<std::int64_t>();
}

const json& need(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.is_object()) throw ValidationError(ctx + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(ctx + ": missing field '" + key + "'");
    return *it;
}

std::vector<std::int64_t> int_list(const json& j, const std::string& field) {
    if (!j.is_array()) throw ValidationError(field + ": expected an array");
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], field + "[" + std::to_string(k) + "]"));
    return out;
}

// "i,j" or "i,j,k" with 1-based distinct indices.
std::vector<int> index_key(const std::string& key, int arity, int n, const std::string& field) {
    std::vector<int> idx;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size() || v < 1 || v > n)
            throw ValidationError(field + ": bad component index in key '" + key + "'");
        idx.push_back(v - 1);
    }
    if (static_cast<int>(idx.size()) != arity) throw ValidationError(field + ": key '" + key + "' needs " +
                                                                     std::to_string(arity) + " indices");
    for (int a = 0; a < arity; ++a)
        for (int b = a + 1; b < arity; ++b)
            if (idx[a] == idx[b]) throw ValidationError(field + ": repeated index in key '" + key + "'");
    return idx;
}

std::vector<int> var_list(const json& j, int arity, int n, const std::string& field) {
    std::vector<int> v;
    if (arity == 1) {
        v.push_back(static_cast<int>(as_int(j, field)));
    } else {
        if (!j.is_array() || static_cast<int>(j.size()) != arity)
            throw ValidationError(field + ": expected " + std::to_string(arity) + " variable indices");
        for (const auto& e : j) v.push_back(static_cast<int>(as_int(e, field)));
    }
    for (int& x : v) {
        if (x < 1 || x > n) throw ValidationError(field + ": variable index out of range 1.." + std::to_string(n));
        --x;
    }
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw ValidationError(field + ": repeated variable in a monomial");
    return v;
}

}  // namespace

json read_json_file(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json to_json(const CycloInt& v) {
    json j;
    j["cyclo"] = v.c;
    auto n = v.as_integer();
    j["integer"] = n ? json(*n) : json(nullptr);
    return j;
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const BrownValue& b) { return b.is_infinite() ? json("infinity") : json(*b.value); }

json to_json(const EnhancedSpace& s) {
    json form = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        json r = json::array();
        for (int k = 0; k < s.dim(); ++k) r.push_back(s.form.get(i, k) ? 1 : 0);
        form.push_back(r);
    }
    return {{"form", form}, {"values", s.values}};
}

json to_json(const PDLink& link) {
    json pd = json::array();
    for (const auto& c : link.crossings) pd.push_back({c.x[0], c.x[1], c.x[2], c.x[3], c.sign});
    json comp = json::object();
    for (const auto& [a, k] : link.component_of_arc) comp[std::to_string(a)] = k;
    return {{"pd", pd}, {"components", link.components}, {"component_of_arc", comp}, {"framings", link.framings}};
}

json to_json(const LinkInvariantModel& m) {
    json q = json::object(), sl = json::object(), tr = json::object();
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) {
            std::string key = std::to_string(i + 1) + "," + std::to_string(j + 1);
            if (m.quarter(i, j)) q[key] = 1;
            if (auto l = m.lambda(i, j)) sl[key] = *l;
            for (int k = j + 1; k < m.n; ++k)
                if (m.tau(i, j, k)) tr[key + "," + std::to_string(k + 1)] = 1;
        }
    return {{"n", m.n}, {"arf", m.arf},          {"quarter_sl", q}, {"sato_levine", sl},
            {"triple", tr}, {"lk", to_json(m.lk)}, {"framings", m.lk.diag()}};
}

json to_json(const CubicForm& c) {
    json lin = json::array(), quad = json::array(), cub = json::array();
    for (int i : c.linear) lin.push_back(i + 1);
    for (const auto& q : c.quadratic) quad.push_back({q[0] + 1, q[1] + 1});
    for (const auto& t : c.cubic) cub.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    return {{"n", c.n}, {"linear", lin}, {"quadratic", quad}, {"cubic", cub}};
}

json to_json(const GF2Poly& p) {
    json out = json::array();
    for (const auto& m : p.monomials) {
        json mono = json::array();
        for (int v : m) mono.push_back(v + 1);
        out.push_back(mono);
    }
    return out;
}

json to_json(const QuadSystem& q) {
    json polys = json::array(), prods = json::array();
    for (const auto& p : q.polys) polys.push_back(to_json(p));
    for (const auto& p : q.products) prods.push_back({p.j + 1, p.k + 1, p.var + 1});
    return {{"m", q.m}, {"k", q.polys.size()}, {"polys", polys}, {"products", prods}};
}

SymIntMatrix matrix_from_json(const json& j, const std::string& field) {
    if (!j.is_array()) throw ValidationError(field + ": expected an array of rows");
    int n = static_cast<int>(j.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        auto row = int_list(j[i], field + "[" + std::to_string(i) + "]");
        if (static_cast<int>(row.size()) != n) throw ValidationError(field + ": matrix must be square");
        for (int k = 0; k < n; ++k) m(i, k) = row[k];
    }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < i; ++k)
            if (m(i, k) != m(k, i))
                throw ValidationError(field + ": matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                      std::to_string(k + 1) + ")");
    return m;
}

EnhancedSpace space_from_json(const json& j) {
    const json& f = need(j, "form", "space");
    if (!f.is_array()) throw ValidationError("form: expected an array of rows");
    int m = static_cast<int>(f.size());
    BitMatrix form(m, m);
    for (int i = 0; i < m; ++i) {
        auto row = int_list(f[i], "form[" + std::to_string(i) + "]");
        if (static_cast<int>(row.size()) != m) throw ValidationError("form: matrix must be square");
        for (int k = 0; k < m; ++k) {
            if (row[k] != 0 && row[k] != 1) throw ValidationError("form: entries must be 0 or 1");
            form.set(i, k, row[k] == 1);
        }
    }
    auto vals = int_list(need(j, "values", "space"), "values");
    std::vector<int> values(vals.begin(), vals.end());
    EnhancedSpace s{form, values};
    if (!form.is_symmetric()) throw ValidationError("form: matrix must be symmetric");
    if (static_cast<int>(values.size()) != m) throw ValidationError("values: expected one value per basis vector");
    for (int i = 0; i < m; ++i) {
        if (values[i] < 0 || values[i] > 3) throw ValidationError("values[" + std::to_string(i) + "]: must lie in 0..3");
        if ((values[i] & 1) != static_cast<int>(form.get(i, i)))
            throw ValidationError("values[" + std::to_string(i) + "]: violates e(x) = x.x (mod 2)");
    }
    return s;
}

PDLink link_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("link: expected an object");
    PDLink link;
    if (j.contains("braid")) {
        const json& b = j["braid"];
        auto word = int_list(need(b, "word", "braid"), "braid.word");
        link = from_braid(std::vector<int>(word.begin(), word.end()),
                          static_cast<int>(as_int(need(b, "strands", "braid"), "braid.strands")));
    } else {
        const json& pd = need(j, "pd", "link");
        if (!pd.is_array()) throw ValidationError("pd: expected an array of crossings");
        for (std::size_t k = 0; k < pd.size(); ++k) {
            auto c = int_list(pd[k], "pd[" + std::to_string(k) + "]");
            if (c.size() != 5) throw ValidationError("pd[" + std::to_string(k) + "]: expected [a,b,c,d,sign]");
            link.crossings.push_back({{static_cast<int>(c[0]), static_cast<int>(c[1]), static_cast<int>(c[2]),
                                       static_cast<int>(c[3])},
                                      static_cast<int>(c[4])});
        }
        link.components = static_cast<int>(as_int(need(j, "components", "link"), "components"));
        const json& ca = need(j, "component_of_arc", "link");
        if (!ca.is_object()) throw ValidationError("component_of_arc: expected an object");
        for (const auto& [key, val] : ca.items()) {
            std::size_t used = 0;
            int arc = 0;
            try {
                arc = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != key.size()) throw ValidationError("component_of_arc: bad arc id '" + key + "'");
            link.component_of_arc[arc] = static_cast<int>(as_int(val, "component_of_arc." + key));
        }
        link.framings.assign(link.components, 0);
    }
    if (j.contains("framings")) {
        auto f = int_list(j["framings"], "framings");
        if (static_cast<int>(f.size()) != link.components)
            throw ValidationError("framings: expected " + std::to_string(link.components) + " entries");
        link.framings = f;
    }
    link.validate();
    return link;
}

LinkInvariantModel model_from_json(const json& j) {
    int n = static_cast<int>(as_int(need(j, "n", "model"), "n"));
    if (n < 0) throw ValidationError("n: must be nonnegative");
    LinkInvariantModel m = LinkInvariantModel::trivial(n);
    auto arf = int_list(need(j, "arf", "model"), "arf");
    if (static_cast<int>(arf.size()) != n) throw ValidationError("arf: expected n entries");
    for (int i = 0; i < n; ++i) m.arf[i] = static_cast<int>(arf[i]);
    if (j.contains("lk")) {
        m.lk = matrix_from_json(j["lk"], "lk");
        if (m.lk.rows() != n) throw ValidationError("lk: expected an n x n matrix");
    }
    if (j.contains("framings")) {
        auto f = int_list(j["framings"], "framings");
        if (static_cast<int>(f.size()) != n) throw ValidationError("framings: expected n entries");
        for (int i = 0; i < n; ++i) {
            if (m.lk(i, i) != 0 && m.lk(i, i) != f[i])
                throw ValidationError("framings: entry " + std::to_string(i + 1) + " disagrees with the lk diagonal");
            m.lk(i, i) = f[i];
        }
    }
    auto pairs = [&](const char* field, auto set) {
        if (!j.contains(field)) return;
        const json& obj = j[field];
        if (!obj.is_object()) throw ValidationError(std::string(field) + ": expected an object keyed by \"i,j\"");
        for (const auto& [key, val] : obj.items()) {
            auto idx = index_key(key, 2, n, field);
            set(idx, static_cast<int>(as_int(val, std::string(field) + "." + key)));
        }
    };
    pairs("quarter_sl", [&](const std::vector<int>& idx, int v) {
        if (v != 0 && v != 1) throw ValidationError("quarter_sl: values must be bits");
        m.set_quarter(idx[0], idx[1], v);
    });
    pairs("sato_levine", [&](const std::vector<int>& idx, int v) {
        if (v % 2) throw ValidationError("sato_levine: value " + std::to_string(v) + " is not even");
        m.set_lambda(idx[0], idx[1], v);
    });
    if (j.contains("triple")) {
        const json& obj = j["triple"];
        if (!obj.is_object()) throw ValidationError("triple: expected an object keyed by \"i,j,k\"");
        for (const auto& [key, val] : obj.items()) {
            auto idx = index_key(key, 3, n, "triple");
            int v = static_cast<int>(as_int(val, "triple." + key));
            if (v != 0 && v != 1) throw ValidationError("triple: values must be bits");
            m.set_tau(idx[0], idx[1], idx[2], v);
        }
    }
    m.validate();
    return m;
}

CubicForm form_from_json(const json& j) {
    CubicForm c;
    c.n = static_cast<int>(as_int(need(j, "n", "form"), "n"));
    if (c.n < 0) throw ValidationError("n: must be nonnegative");
    auto each = [&](const char* field, int arity, auto add) {
        if (!j.contains(field)) return;
        if (!j[field].is_array()) throw ValidationError(std::string(field) + ": expected an array");
        for (const auto& e : j[field]) add(var_list(e, arity, c.n, field));
    };
    each("linear", 1, [&](const std::vector<int>& v) { c.linear.insert(v[0]); });
    each("quadratic", 2, [&](const std::vector<int>& v) { c.quadratic.insert({v[0], v[1]}); });
    each("cubic", 3, [&](const std::vector<int>& v) { c.cubic.insert({v[0], v[1], v[2]}); });
    return c;
}

ImmersionData immersion_from_json(const json& j) {
    ImmersionData d;
    if (j.contains("space")) {
        d.beta_f = brown(space_from_json(j["space"]));
    } else {
        const json& b = need(j, "beta_f", "immersion");
        if (b.is_string() && b.get<std::string>() == "infinity")
            d.beta_f = BrownValue::infinity();
        else
            d.beta_f = BrownValue::of(static_cast<int>(as_int(b, "beta_f")));
    }
    d.phi_f = as_int(need(j, "phi_f", "immersion"), "phi_f");
    d.delta_f = static_cast<int>(((as_int(j.value("delta_f", json(0)), "delta_f") % 8) + 8) % 8);
    d.tau_f = as_int(j.value("tau_f", json(0)), "tau_f");
    if (d.tau_f < 0) throw ValidationError("tau_f: triple point count must be nonnegative");
    d.lk_total = as_int(j.value("lk_total", json(0)), "lk_total");
    return d;
}

}  // namespace tau4::io
