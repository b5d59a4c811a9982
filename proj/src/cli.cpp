#include "tau4/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "tau4/error.hpp"
#include "tau4/json_io.hpp"
#include "tau4/surgery.hpp"

namespace tau4::cli {

namespace {

using io::json;

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' || ch == '[';
    }
    return false;
}

Input classify(const json& j) {
    if (!j.is_object()) throw ValidationError("input: expected a JSON object");
    if (j.contains("form") && j.contains("values")) return io::space_from_json(j);
    if (j.contains("pd") || j.contains("braid")) return io::link_from_json(j);
    if (j.contains("phi_f")) return io::immersion_from_json(j);
    if (j.contains("n") && j.contains("arf")) return io::model_from_json(j);
    if (j.contains("n") && (j.contains("linear") || j.contains("quadratic") || j.contains("cubic")))
        return io::form_from_json(j);
    if (j.contains("lk")) return MatrixInput{io::matrix_from_json(j["lk"], "lk")};
    throw ValidationError("input: unrecognised schema (expected one of space, link, model, form, matrix, immersion)");
}

CycloInt cyclo_from_json(const json& j) {
    std::array<std::int64_t, 8> c{};
    for (int k = 0; k < 8; ++k) c[k] = j["cyclo"][k].get<std::int64_t>();
    return CycloInt(c);
}

std::string render(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.contains("cyclo")) {
        if (!v["integer"].is_null()) return std::to_string(v["integer"].get<std::int64_t>());
        return cyclo_from_json(v).to_string();
    }
    return v.dump();
}

void emit(const json& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, val] : report.items()) out << key << ": " << render(val) << "\n";
}

template <class T>
const T& expect(const Input& in, const std::string& what) {
    if (const T* p = std::get_if<T>(&in)) return *p;
    throw ValidationError("input: expected " + what + ", got " + input_kind(in));
}

json components_json(std::uint64_t mask) {
    json out = json::array();
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1u) out.push_back(i + 1);
    return out;
}

json brown_json(const BrownValue& b) { return io::to_json(b); }

struct Options {
    std::string format = "text";
    std::string path;
    std::string method;
    std::string emit = "single";
    bool cross_check = false;
    bool verify = false;
};

json cmd_enhanced_classify(const Input& in) {
    const auto& s = expect<EnhancedSpace>(in, "an enhanced space");
    ClassTuple ct = class_tuple(s);
    NormalForm nf = normal_form(s);
    auto counts = value_counts(s);
    json j;
    j["dim"] = ct.dim;
    j["radical_dim"] = ct.radical_dim;
    j["even"] = ct.even;
    j["proper"] = ct.proper;
    j["brown"] = brown_json(ct.brown);
    j["normal_form"] = {{"T0", nf.t0}, {"T4", nf.t4}, {"P1", nf.p1}, {"P-1", nf.pm1}, {"A0", nf.a0}, {"Ainf", nf.ainf}};
    j["value_counts"] = counts;
    j["gauss_sum"] = io::to_json(gauss_sum(s));
    return j;
}

json cmd_enhanced_brown(const Input& in) {
    const auto& s = expect<EnhancedSpace>(in, "an enhanced space");
    return {{"brown", brown_json(brown(s))}};
}

json cmd_link_conway(const Input& in) {
    const auto& link = expect<PDLink>(in, "a link diagram");
    json j;
    j["components"] = link.components;
    j["crossings"] = link.crossing_count();
    j["conway"] = conway(link);
    j["c1"] = c1(link);
    return j;
}

json cmd_link_arf(const Input& in) {
    if (const auto* link = std::get_if<PDLink>(&in))
        return {{"components", link->components}, {"arf", arf_hoste_murakami(*link)}, {"source", "diagram"}};
    const auto& m = expect<LinkInvariantModel>(in, "a link diagram or invariant model");
    return {{"components", m.n}, {"arf", arf_theorem11(m)}, {"source", "model"}};
}

json cmd_link_brown(const Input& in) {
    if (const auto* link = std::get_if<PDLink>(&in))
        return {{"brown", brown_of_proper_link(*link)}, {"source", "diagram"}};
    if (const auto* m = std::get_if<LinkInvariantModel>(&in))
        return {{"brown", brown_totally_proper_model(*m)}, {"source", "model"}};
    const auto& d = expect<ImmersionData>(in, "a link diagram, invariant model or immersion data");
    BrownArf r = theorem4_combine(d);
    return {{"brown", r.beta}, {"arf", r.arf}, {"source", "immersion"}};
}

Tau4Result tau4_by(Tau4Method method, const Input& in) {
    switch (method) {
        case Tau4Method::exponential: return tau4_exponential(expect<PDLink>(in, "a link diagram"));
        case Tau4Method::spin_sum: return tau4_spin_sum(expect<PDLink>(in, "a link diagram"));
        case Tau4Method::model: return tau4_of_model(expect<LinkInvariantModel>(in, "an invariant model"));
        case Tau4Method::product:
            if (const auto* link = std::get_if<PDLink>(&in)) return tau4_diagonalize_and_product(linking_matrix(*link));
            if (const auto* m = std::get_if<LinkInvariantModel>(&in)) return tau4_diagonalize_and_product(m->lk);
            return tau4_diagonalize_and_product(expect<MatrixInput>(in, "a linking matrix").lk);
        case Tau4Method::cubic: return tau4_of_cubic(expect<CubicForm>(in, "a cubic form"));
    }
    throw Error("unknown method");
}

Tau4Method parse_method(const std::string& name, const Input& in) {
    if (name.empty()) {
        if (std::holds_alternative<PDLink>(in)) return Tau4Method::exponential;
        if (std::holds_alternative<LinkInvariantModel>(in)) return Tau4Method::model;
        if (std::holds_alternative<MatrixInput>(in)) return Tau4Method::product;
        throw ValidationError("input: expected a link diagram, invariant model or linking matrix, got " +
                              input_kind(in));
    }
    if (name == "exponential") return Tau4Method::exponential;
    if (name == "spin-sum") return Tau4Method::spin_sum;
    if (name == "product") return Tau4Method::product;
    return Tau4Method::model;
}

json cmd_surgery_tau4(const Input& in, const Options& opt, bool& agree) {
    Tau4Method method = parse_method(opt.method, in);
    Tau4Result r = tau4_by(method, in);
    json j;
    j["method"] = method_name(r.method);
    j["tau4"] = io::to_json(r.value);
    j["terms"] = r.terms;
    if (opt.cross_check) {
        const auto& link = expect<PDLink>(in, "a link diagram for --cross-check");
        CycloInt e = method == Tau4Method::exponential ? r.value : tau4_exponential(link).value;
        CycloInt s = method == Tau4Method::spin_sum ? r.value : tau4_spin_sum(link).value;
        agree = e == s && r.value == e;
        j["exponential"] = io::to_json(e);
        j["spin_sum"] = io::to_json(s);
        j["agree"] = agree;
    }
    return j;
}

json cmd_surgery_mu(const Input& in) {
    const auto& link = expect<PDLink>(in, "a link diagram");
    SymIntMatrix lam = linking_matrix(link);
    json rows = json::array();
    CycloInt total;
    for (auto mask : characteristic_sublinks(lam)) {
        int mu = mu_invariant(link, mask);
        total += CycloInt::omega_pow(mu);
        rows.push_back({{"sublink", components_json(mask)}, {"mu", mu}});
    }
    json j;
    j["signature"] = signature(lam);
    j["spin_structures"] = rows;
    j["tau4"] = io::to_json(total);
    return j;
}

json cmd_reduce(const Input& in, const Options& opt, bool& agree) {
    const auto& cnf = expect<CNF3>(in, "a DIMACS 3-CNF");
    auto cubics = cnf_to_cubic_system(cnf);
    json j;
    j["n"] = cnf.nvars;
    j["r"] = cnf.clauses.size();
    if (opt.emit == "cubic") {
        json polys = json::array();
        for (const auto& p : cubics) polys.push_back(io::to_json(p));
        j["cubic_system"] = polys;
    } else {
        QuadSystem q = to_quad_system(cubics, cnf.nvars);
        if (opt.emit == "quad")
            j["quad_system"] = io::to_json(q);
        else
            j["form"] = io::to_json(to_single_cubic(q));
    }
    if (opt.verify) {
        ReductionReport rep = verify_reduction(cnf);
        j["m"] = rep.m;
        j["k"] = rep.k;
        j["models"] = rep.models;
        j["zeros"] = rep.zeros;
        j["predicted"] = rep.predicted;
        j["identity_holds"] = rep.holds;
        agree = rep.holds;
    }
    return j;
}

json cmd_count(const Input& in) {
    if (const auto* cnf = std::get_if<CNF3>(&in))
        return {{"n", cnf->nvars}, {"r", cnf->clauses.size()}, {"models", count_models(*cnf)}};
    const auto& c = expect<CubicForm>(in, "a DIMACS 3-CNF or cubic form");
    return {{"n", c.n}, {"zeros", count_zeros(c)}};
}

json cmd_cubic_tau4(const Input& in, const Options& opt, bool& agree) {
    const auto& c = expect<CubicForm>(in, "a cubic form");
    Tau4Result r = tau4_of_cubic(c);
    json j;
    j["n"] = c.n;
    j["zeros"] = count_zeros(c);
    j["tau4"] = io::to_json(r.value);
    if (opt.cross_check) {
        CycloInt via_model = tau4_of_model(cubic_to_model(c)).value;
        CycloInt via_diagram = tau4_exponential(cubic_to_pdlink(c)).value;
        agree = via_model == r.value && via_diagram == r.value;
        j["model"] = io::to_json(via_model);
        j["diagram"] = io::to_json(via_diagram);
        j["agree"] = agree;
    }
    return j;
}

}  // namespace

std::string input_kind(const Input& in) {
    return std::visit(overloaded{
                          [](const EnhancedSpace&) { return "enhanced space"; },
                          [](const PDLink&) { return "link diagram"; },
                          [](const LinkInvariantModel&) { return "invariant model"; },
                          [](const CubicForm&) { return "cubic form"; },
                          [](const MatrixInput&) { return "linking matrix"; },
                          [](const ImmersionData&) { return "immersion data"; },
                          [](const CNF3&) { return "DIMACS 3-CNF"; },
                      },
                      in);
}

Input validate_input(const std::string& path) {
    std::string text = io::read_text_file(path);
    if (!looks_like_json(text)) {
        try {
            return parse_dimacs(text);
        } catch (const ValidationError& e) {
            throw ValidationError(path + ": " + e.what());
        }
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    try {
        return classify(j);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tau4, Arf and Brown invariants, enhanced-space classification and #3-SAT reductions", "tau4"};
    app.require_subcommand(1, 1);
    Options opt;
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.fallthrough();

    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", opt.path, "Input file")->required();
        return sub;
    };
    add("enhanced-classify", "Class tuple, normal form and Gauss sum of an enhanced space");
    add("enhanced-brown", "Brown invariant of an enhanced space");
    add("link-conway", "Conway polynomial of a link diagram");
    add("link-arf", "Arf invariant of a totally proper link or invariant model");
    add("link-brown", "Brown invariant of a proper link, invariant model or immersion data");
    CLI::App* tau = add("surgery-tau4", "tau4 of the 3-manifold obtained by surgery");
    tau->add_option("--method", opt.method, "exponential | spin-sum | product | model")
        ->check(CLI::IsMember({"exponential", "spin-sum", "product", "model"}));
    tau->add_flag("--cross-check", opt.cross_check, "Run exponential and spin-sum and compare");
    add("surgery-mu", "mu-invariants of all spin structures");
    CLI::App* red = add("reduce", "Reduce a 3-CNF to a cubic system, quadratic system or single cubic form");
    red->add_option("--emit", opt.emit, "cubic | quad | single")
        ->check(CLI::IsMember({"cubic", "quad", "single"}));
    red->add_flag("--verify", opt.verify, "Check the counting identity by brute force");
    add("count", "Models of a 3-CNF or zeros of a cubic form");
    CLI::App* ct = add("cubic-tau4", "tau4 of the manifold attached to a cubic form");
    ct->add_flag("--cross-check", opt.cross_check, "Compare with the invariant model and the link diagram");

    for (std::size_t k = 0; k < args.size(); ++k) {
        const std::string& a = args[k];
        if (a == "--format" || a == "--method" || a == "--emit") {
            ++k;
            continue;
        }
        if (a.empty() || a[0] == '-') continue;
        if (!app.get_subcommand_no_throw(a)) {
            err << "error: unknown subcommand '" << a << "'\n";
            return Exit::invalid;
        }
        break;
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return Exit::invalid;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Input in = validate_input(opt.path);
        bool agree = true;
        json report;
        if (cmd == "enhanced-classify")
            report = cmd_enhanced_classify(in);
        else if (cmd == "enhanced-brown")
            report = cmd_enhanced_brown(in);
        else if (cmd == "link-conway")
            report = cmd_link_conway(in);
        else if (cmd == "link-arf")
            report = cmd_link_arf(in);
        else if (cmd == "link-brown")
            report = cmd_link_brown(in);
        else if (cmd == "surgery-tau4")
            report = cmd_surgery_tau4(in, opt, agree);
        else if (cmd == "surgery-mu")
            report = cmd_surgery_mu(in);
        else if (cmd == "reduce")
            report = cmd_reduce(in, opt, agree);
        else if (cmd == "count")
            report = cmd_count(in);
        else
            report = cmd_cubic_tau4(in, opt, agree);
        emit(report, opt.format, out);
        if (!agree) {
            err << "error: cross-check mismatch\n";
            return Exit::mismatch;
        }
        return Exit::ok;
    } catch (const ValidationError& e) {
        err << "error: invalid input: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const DomainError& e) {
        err << "error: precondition failed: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const BoundExceeded& e) {
        err << "error: refused: " << e.what() << "\n";
        return Exit::refused;
    } catch (const OverflowError& e) {
        err << "error: refused: " << e.what() << "\n";
        return Exit::refused;
    } catch (const NotStablyDiagonalizable& e) {
        err << "error: refused: " << e.what() << "\n";
        return Exit::refused;
    }
}

}  // namespace tau4::cli
