#include "pvgauge/report.hpp"

#include "pvgauge/category.hpp"

#include <sstream>

namespace pvg {

using nlohmann::ordered_json;

namespace {

const char* kScope = "constants Q; intertwiners with entries in Q(x)";

template <class T>
ordered_json matrix_json(const Matrix<T>& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json bounds_json(const DegreeBounds& b) {
    ordered_json poles = ordered_json::array();
    for (const auto& p : b.pole_orders)
        poles.push_back({{"factor", p.factor.to_string()}, {"order", std::to_string(p.bound)}});
    return {{"provenance", to_string(b.provenance)},
            {"poles", std::move(poles)},
            {"numerator_degree", std::to_string(b.numerator_degree)}};
}

std::string point_text(const Rat& a) { return Poly::linear(a).to_string(); }

std::string gen_text(const GaloisGen& g) {
    std::string out;
    auto add = [&out](const std::string& s) { out += out.empty() ? s : " " + s; };
    for (const auto& p : g.powers())
        add("pow " + point_text(p.point) + " " + to_string(p.exponent) + " mul " + p.factor.to_string());
    for (const auto& e : g.exps())
        add("exp " + e.arg.to_string() + " mul " + e.factor.to_string());
    for (const auto& l : g.logs())
        add("log " + point_text(l.point) + " shift " + l.shift.to_string());
    return out;
}

std::string param_text(const Param& p) {
    switch (p.kind) {
    case ParamKind::cyclotomic:
        return "cyclotomic " + std::to_string(p.order);
    case ParamKind::unit:
        return "unit";
    default:
        return "free";
    }
}

struct Draft {
    std::string command;
    ordered_json inputs = ordered_json::object();
    std::string result = "ok";
    ordered_json witness;
    ordered_json certificate = ordered_json::object();
    ordered_json seed;
    ordered_json bounds;
    int exit = exit_code::ok;

    void input(const InputDocument& doc, const std::string& name) { inputs[name] = matrix_json(doc.matrix(name)); }

    Report finish() const {
        Report r;
        r.json["command"] = command;
        r.json["inputs"] = inputs;
        r.json["result"] = result;
        r.json["witness"] = witness;
        r.json["certificate"] = certificate;
        r.json["seed"] = seed;
        r.json["bounds"] = bounds;
        r.exit_code = exit;
        return r;
    }
};

SearchOptions search_options(const RunOptions& opts) {
    SearchOptions s;
    s.seed = opts.seed;
    s.threads = opts.threads;
    s.bounds = opts.bounds;
    return s;
}

void decision(Draft& d, const EquivalenceResult& res, std::size_t n, bool trivial) {
    d.seed = std::to_string(res.seed);
    if (res.bounds)
        d.bounds = bounds_json(*res.bounds);
    std::string summary;
    if (res.found()) {
        d.result = "witness";
        d.witness = matrix_json(*res.witness);
        summary = trivial ? "U' = A U with det U != 0" : "gauge_act(U, A) = B";
    } else {
        d.result = "none-found";
        d.exit = exit_code::none_found;
        summary = trivial ? "rational solution space dimension " + std::to_string(res.solution_dimension / n)
                          : "no invertible intertwiner over Q(x)";
    }
    d.certificate["summary"] = summary;
    d.certificate["tier"] = to_string(res.tier);
    d.certificate["detail"] = res.certificate;
    d.certificate["intertwiner_dimension"] = std::to_string(res.solution_dimension);
    d.certificate["scope"] = kScope;
}

FundamentalMatrix structured_fundamental(const MatRF& a) {
    if (is_diagonal(a))
        return fundamental_for_diagonal(a);
    if (a.n() == 2 && a(0, 0).is_zero() && a(1, 0).is_zero() && a(1, 1).is_zero())
        return fundamental_2x2_triangular(a);
    throw InputError("rep handles diagonal systems and [[0, a], [0, 0]] only");
}

void run(Draft& d, const InputDocument& doc, const RunOptions& opts) {
    const std::string& cmd = d.command;
    if (cmd == "gauge") {
        d.input(doc, "U");
        d.input(doc, "A");
        d.witness = matrix_json(gauge_act(doc.matrix("U"), doc.matrix("A")));
        d.certificate["summary"] = "U'U^(-1) + U A U^(-1)";
    } else if (cmd == "hmul") {
        for (const char* n : {"A", "F", "B", "G"})
            d.input(doc, n);
        HPair p = h_mul(HPair(doc.matrix("A"), doc.matrix("F")), HPair(doc.matrix("B"), doc.matrix("G")));
        d.witness = {{"A", matrix_json(p.a())}, {"F", matrix_json(p.f())}};
        d.certificate["summary"] = "(A, F)(B, G) = (A + F B F^(-1), F G)";
    } else if (cmd == "equivalent") {
        d.input(doc, "A");
        d.input(doc, "B");
        const MatRF& a = doc.matrix("A");
        decision(d, equivalent(a, doc.matrix("B"), search_options(opts)), a.n(), false);
    } else if (cmd == "trivial") {
        d.input(doc, "A");
        const MatRF& a = doc.matrix("A");
        decision(d, is_trivial(a, search_options(opts)), a.n(), true);
    } else if (cmd == "intertwine") {
        d.input(doc, "A1");
        d.input(doc, "A2");
        RatSolBasis sol = rational_solutions(SylvesterSystem(doc.matrix("A1"), doc.matrix("A2")), opts.bounds);
        ordered_json basis = ordered_json::array();
        for (const auto& m : sol.basis)
            basis.push_back(matrix_json(m));
        d.witness = std::move(basis);
        d.bounds = bounds_json(sol.bounds_used);
        d.certificate["summary"] = "Q-basis of M' = A2 M - M A1, dimension " + std::to_string(sol.basis.size());
        d.certificate["dimension"] = std::to_string(sol.basis.size());
        d.certificate["scope"] = kScope;
    } else if (cmd == "compose") {
        for (const char* n : {"A1", "A2", "A3", "M", "N"})
            d.input(doc, n);
        Obj o1(doc.matrix("A1")), o2(doc.matrix("A2")), o3(doc.matrix("A3"));
        Arrow nm = arrow_compose(arrow_new(o2, o3, doc.matrix("N")), arrow_new(o1, o2, doc.matrix("M")));
        d.witness = matrix_json(nm.m());
        d.certificate["summary"] = "N M is an intertwiner [A1] -> [A3]";
        d.certificate["rank"] = std::to_string(rank(nm.m()));
    } else if (cmd == "rep") {
        d.input(doc, "A");
        ordered_json params = ordered_json::array();
        for (const auto& p : doc.params)
            params.push_back(p.name + " " + param_text(p));
        ordered_json gens = ordered_json::object();
        for (const auto& g : doc.gens)
            gens[g.name()] = gen_text(g);
        d.inputs["params"] = std::move(params);
        d.inputs["gens"] = std::move(gens);
        FundamentalMatrix f = structured_fundamental(doc.matrix("A"));
        Representation rep = representation(f, doc.gens);
        ordered_json images = ordered_json::object();
        for (const auto& [g, c] : rep.images)
            images[g.name()] = matrix_json(c);
        d.witness = {{"fundamental", matrix_json(f.entries())}, {"images", std::move(images)}};
        d.certificate["summary"] = "g(F) = F c(g) for every generator g";
    } else if (cmd == "check") {
        if (doc.has("U")) {
            d.input(doc, "A");
            d.input(doc, "U");
            const MatRF& u = doc.matrix("U");
            const MatRF& a = doc.matrix("A");
            if (u.rows() != a.rows())
                throw DimensionMismatch("U and A have different sizes");
            MatRF residual = mat_derive(u) - a * u;
            RatFn du = det(u);
            d.certificate["residual"] = matrix_json(residual);
            d.certificate["det"] = du.to_string();
            bool ok = residual.is_zero() && !du.is_zero();
            d.certificate["summary"] = ok ? "U' = A U and det U != 0" : "U is not a fundamental matrix of A";
            if (ok) {
                d.witness = matrix_json(u);
            } else {
                d.result = "fails";
                d.exit = exit_code::none_found;
            }
        } else {
            for (const char* n : {"A1", "A2", "M"})
                d.input(doc, n);
            const MatRF& m = doc.matrix("M");
            MatRF residual = sylvester_residual(m, SylvesterSystem(doc.matrix("A1"), doc.matrix("A2")));
            d.certificate["residual"] = matrix_json(residual);
            bool ok = residual.is_zero();
            d.certificate["summary"] = ok ? "M' = A2 M - M A1" : "M is not an intertwiner";
            if (ok) {
                d.witness = matrix_json(m);
            } else {
                d.result = "fails";
                d.exit = exit_code::none_found;
            }
        }
    } else {
        throw InputError("unknown command " + cmd);
    }
}

struct Classified {
    const char* name;
    const char* result;
    int exit;
};

Classified classify(const Error& e) {
#define PVG_CLASSIFY(T, result, code)          \
    if (dynamic_cast<const T*>(&e))            \
        return {#T, result, code};
    PVG_CLASSIFY(SyntaxError, "error", exit_code::input_error)
    PVG_CLASSIFY(InconsistentRowLength, "error", exit_code::input_error)
    PVG_CLASSIFY(InputError, "error", exit_code::input_error)
    PVG_CLASSIFY(DimensionMismatch, "error", exit_code::input_error)
    PVG_CLASSIFY(NeedsUserBound, "needs-bound", exit_code::needs_bound)
    PVG_CLASSIFY(Inconclusive, "inconclusive", exit_code::inconclusive)
    PVG_CLASSIFY(NotAnIntertwiner, "error", exit_code::math_error)
    PVG_CLASSIFY(DivisionByZero, "error", exit_code::math_error)
    PVG_CLASSIFY(SingularMatrix, "error", exit_code::math_error)
    PVG_CLASSIFY(PoleAtEvaluationPoint, "error", exit_code::math_error)
    PVG_CLASSIFY(NonRationalResidueOrPole, "error", exit_code::math_error)
    PVG_CLASSIFY(UnmappedGenerator, "error", exit_code::math_error)
    PVG_CLASSIFY(InvalidGenerator, "error", exit_code::math_error)
    PVG_CLASSIFY(NotConstant, "error", exit_code::math_error)
    PVG_CLASSIFY(NotRational, "error", exit_code::math_error)
    PVG_CLASSIFY(NonUnitDeterminant, "error", exit_code::math_error)
    PVG_CLASSIFY(SourceTargetMismatch, "error", exit_code::math_error)
    PVG_CLASSIFY(IntertwiningFails, "error", exit_code::math_error)
#undef PVG_CLASSIFY
    return {"Error", "error", exit_code::math_error};
}

void record_error(Draft& d, const Error& e) {
    Classified c = classify(e);
    d.result = c.result;
    d.exit = c.exit;
    d.witness = nullptr;
    d.certificate = {{"error", c.name}, {"message", e.what()}};
    if (auto* s = dynamic_cast<const SyntaxError*>(&e)) {
        d.certificate["line"] = std::to_string(s->line());
        d.certificate["column"] = std::to_string(s->column());
    }
    if (auto* n = dynamic_cast<const NotAnIntertwiner*>(&e))
        d.certificate["residual"] = matrix_json(n->residual());
    if (c.exit == exit_code::needs_bound || c.exit == exit_code::inconclusive)
        d.certificate["scope"] = kScope;
}

bool is_matrix(const ordered_json& j) {
    if (!j.is_array() || j.empty())
        return false;
    for (const auto& row : j) {
        if (!row.is_array())
            return false;
        for (const auto& e : row)
            if (!e.is_string())
                return false;
    }
    return true;
}

std::string matrix_text(const ordered_json& j) {
    std::string out = "[";
    bool first_row = true;
    for (const auto& row : j) {
        out += first_row ? "[" : ", [";
        first_row = false;
        bool first = true;
        for (const auto& e : row) {
            if (!first)
                out += ", ";
            first = false;
            out += e.get<std::string>();
        }
        out += "]";
    }
    return out + "]";
}

void render(std::ostream& os, const std::string& key, const ordered_json& j) {
    if (j.is_null()) {
        os << key << ": none\n";
    } else if (j.is_string()) {
        os << key << ": " << j.get<std::string>() << "\n";
    } else if (is_matrix(j)) {
        os << key << ": " << matrix_text(j) << "\n";
    } else if (j.is_object()) {
        if (j.empty())
            os << key << ": none\n";
        for (const auto& [k, v] : j.items())
            render(os, key + "." + k, v);
    } else if (j.is_array()) {
        if (j.empty())
            os << key << ": none\n";
        for (std::size_t i = 0; i < j.size(); ++i)
            render(os, key + "[" + std::to_string(i) + "]", j[i]);
    } else {
        os << key << ": " << j.dump() << "\n";
    }
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"gauge", "hmul",    "equivalent", "trivial",
                                                "intertwine", "compose", "rep",        "check"};
    return names;
}

std::string Report::to_json() const { return json.dump(2) + "\n"; }

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : json.items())
        render(os, k, v);
    return os.str();
}

Report run_command(const std::string& cmd, const InputDocument& doc, const RunOptions& opts) {
    Draft d;
    d.command = cmd;
    try {
        run(d, doc, opts);
    } catch (const Error& e) {
        record_error(d, e);
    }
    return d.finish();
}

Report error_report(const std::string& cmd, const Error& e) {
    Draft d;
    d.command = cmd;
    record_error(d, e);
    return d.finish();
}

} // namespace pvg
