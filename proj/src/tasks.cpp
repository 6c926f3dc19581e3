#include "cotorlab/tasks.hpp"

#include "cotorlab/constructors.hpp"

namespace cotorlab {

const std::vector<std::string>& task_commands() {
    static const std::vector<std::string> commands = {"validate",  "dual",    "translate",      "cotensor",
                                                      "hochschild", "cotor",  "compare",        "graded-compare",
                                                      "dg-compare", "tower"};
    return commands;
}

namespace {

std::string param_name(const json& task, const char* key) {
    if (!task.contains(key) || !task.at(key).is_string())
        throw TaskError(std::string("task needs a \"") + key + "\" naming an object");
    return task.at(key).get<std::string>();
}

int max_degree(const Problem& p, const TaskOptions& o) {
    int n = 3;
    if (o.max_degree) n = *o.max_degree;
    else if (p.task.contains("max_degree")) {
        if (!p.task.at("max_degree").is_number_integer()) throw TaskError("max_degree must be an integer");
        n = p.task.at("max_degree").get<int>();
    }
    if (n < 0) throw TaskError("max degree must be nonnegative");
    return n;
}

GradedWindow window(const Problem& p, const TaskOptions& o) {
    if (o.window) return *o.window;
    if (!p.task.contains("window")) throw TaskError("task needs a \"window\": [lo, hi]");
    const json& w = p.task.at("window");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
        throw TaskError("window must be [lo, hi]");
    try {
        return GradedWindow(w[0].get<int>(), w[1].get<int>());
    } catch (const InputError& e) {
        throw TaskError(e.what());
    }
}

json violations_to_json(const ValidationReport& r) {
    json out = json::array();
    for (const auto& v : r.violations) {
        json j = {{"constraint", v.constraint}, {"indices", v.indices}};
        if (!v.detail.empty()) j["detail"] = v.detail;
        out.push_back(std::move(j));
    }
    return out;
}

json validation_json(const Problem& p, bool& all_ok) {
    json objs = json::object();
    all_ok = true;
    for (const auto& [name, rep] : validate_problem(p)) {
        objs[name] = {{"kind", kind_name(p.at(name))}, {"valid", rep.ok()}, {"violations", violations_to_json(rep)}};
        all_ok = all_ok && rep.ok();
    }
    return objs;
}

json columns_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(vector_to_json(m.field(), m.column(c)));
    return out;
}

// The pair (M, N) named by "left"/"right" as comodules, translating modules.
std::pair<RightComodule, LeftComodule> comodule_pair(const Problem& p) {
    const Object& l = p.at(param_name(p.task, "left"));
    const Object& r = p.at(param_name(p.task, "right"));
    auto m = std::get_if<RightComodule>(&l) ? std::get<RightComodule>(l)
             : std::get_if<LeftModule>(&l)  ? module_to_comodule(std::get<LeftModule>(l))
                                            : throw TaskError("\"left\" must be a right comodule or a left module");
    auto n = std::get_if<LeftComodule>(&r) ? std::get<LeftComodule>(r)
             : std::get_if<RightModule>(&r) ? module_to_comodule(std::get<RightModule>(r))
                                            : throw TaskError("\"right\" must be a left comodule or a right module");
    return {m, n};
}

std::pair<LeftModule, RightModule> module_pair(const Problem& p) {
    const Object& l = p.at(param_name(p.task, "left"));
    const Object& r = p.at(param_name(p.task, "right"));
    auto m = std::get_if<LeftModule>(&l)      ? std::get<LeftModule>(l)
             : std::get_if<RightComodule>(&l) ? comodule_to_module(std::get<RightComodule>(l))
                                              : throw TaskError("\"left\" must be a left module or a right comodule");
    auto n = std::get_if<RightModule>(&r)    ? std::get<RightModule>(r)
             : std::get_if<LeftComodule>(&r) ? comodule_to_module(std::get<LeftComodule>(r))
                                             : throw TaskError("\"right\" must be a right module or a left comodule");
    return {m, n};
}

// Name for a derived object that does not clash with existing ones.
std::string fresh(const Problem& p, const json& objs, std::string base) {
    std::string name = base;
    for (int i = 2; p.objects.count(name) || objs.contains(name); ++i) name = base + std::to_string(i);
    return name;
}

std::string algebra_name(const Problem& p, json& objs, const Algebra& a, const std::string& hint) {
    for (const auto& [n, o] : p.objects)
        if (auto x = std::get_if<Algebra>(&o); x && *x == a) return n;
    std::string n = fresh(p, objs, hint);
    objs[n] = to_json(a);
    return n;
}

std::string coalgebra_name(const Problem& p, json& objs, const Coalgebra& c, const std::string& hint) {
    for (const auto& [n, o] : p.objects)
        if (auto x = std::get_if<Coalgebra>(&o); x && *x == c) return n;
    std::string n = fresh(p, objs, hint);
    objs[n] = to_json(c);
    return n;
}

json run_dual(const Problem& p) {
    std::string name = param_name(p.task, "object");
    const Object& o = p.at(name);
    json objs = json::object();
    std::string out = name + "_dual";
    if (auto a = std::get_if<Algebra>(&o)) {
        objs[fresh(p, objs, out)] = to_json(dual_coalgebra(*a));
    } else if (auto c = std::get_if<Coalgebra>(&o)) {
        objs[fresh(p, objs, out)] = to_json(dual_algebra(*c));
    } else if (auto m = std::get_if<LeftModule>(&o)) {
        RightModule d = dual_right_module(*m);
        std::string alg = algebra_name(p, objs, d.algebra(), name + "_algebra");
        objs[fresh(p, objs, out)] = to_json(d, alg);
    } else if (auto n = std::get_if<RightModule>(&o)) {
        LeftModule d = dual_left_module(*n);
        std::string alg = algebra_name(p, objs, d.algebra(), name + "_algebra");
        objs[fresh(p, objs, out)] = to_json(d, alg);
    } else if (auto m = std::get_if<RightComodule>(&o)) {
        LeftComodule d = contragredient(*m);
        std::string co = coalgebra_name(p, objs, d.coalgebra(), name + "_coalgebra");
        objs[fresh(p, objs, out)] = to_json(d, co);
    } else {
        throw TaskError("dual: \"" + name + "\" is a " + kind_name(o));
    }
    return {{"objects", objs}};
}

json run_translate(const Problem& p) {
    std::string name = param_name(p.task, "object");
    const Object& o = p.at(name);
    json objs = json::object();
    if (auto m = std::get_if<LeftModule>(&o)) {
        RightComodule c = module_to_comodule(*m);
        std::string co = coalgebra_name(p, objs, c.coalgebra(), name + "_coalgebra");
        objs[fresh(p, objs, name + "_comodule")] = to_json(c, co);
    } else if (auto n = std::get_if<RightModule>(&o)) {
        LeftComodule c = module_to_comodule(*n);
        std::string co = coalgebra_name(p, objs, c.coalgebra(), name + "_coalgebra");
        objs[fresh(p, objs, name + "_comodule")] = to_json(c, co);
    } else if (auto m = std::get_if<RightComodule>(&o)) {
        LeftModule d = comodule_to_module(*m);
        std::string alg = algebra_name(p, objs, d.algebra(), name + "_algebra");
        objs[fresh(p, objs, name + "_module")] = to_json(d, alg);
    } else if (auto n = std::get_if<LeftComodule>(&o)) {
        RightModule d = comodule_to_module(*n);
        std::string alg = algebra_name(p, objs, d.algebra(), name + "_algebra");
        objs[fresh(p, objs, name + "_module")] = to_json(d, alg);
    } else {
        throw TaskError("translate: \"" + name + "\" is a " + kind_name(o));
    }
    return {{"objects", objs}};
}

json run_cotensor(const Problem& p, const TaskOptions& o) {
    auto [m, n] = comodule_pair(p);
    Matrix box = cotensor(m, n);
    Bimodule b = tensor_bimodule(comodule_to_module(m), comodule_to_module(n));
    std::size_t hom = hom_Ae(b).cols();
    json out = {{"cotensor_dim", box.cols()}, {"hom_Ae_dim", hom}, {"verdict", box.cols() == hom ? "pass" : "fail"}};
    if (o.emit_bases) out["basis"] = columns_to_json(box);
    return out;
}

json run_hochschild(const Problem& p, const TaskOptions& o) {
    int n_max = max_degree(p, o);
    Bimodule b = [&] {
        if (p.task.contains("bimodule")) return p.get<Bimodule>(param_name(p.task, "bimodule"));
        auto [m, n] = module_pair(p);
        return tensor_bimodule(m, n);
    }();
    BarComplex cx = bar_complex(b.algebra(), b, n_max);
    json dims = json::array(), bases = json::array();
    for (int k = 0; k <= n_max; ++k) {
        dims.push_back(cohomology_dim(cx.complex, k));
        if (o.emit_bases) bases.push_back(columns_to_json(cohomology_basis(cx.complex, k)));
    }
    json out = {{"max_degree", n_max}, {"hochschild", dims}};
    if (o.emit_bases) out["cocycles"] = bases;
    return out;
}

json run_cotor(const Problem& p, const TaskOptions& o) {
    int n_max = max_degree(p, o);
    auto [m, n] = comodule_pair(p);
    CobarComplex cx = cobar_complex(m, n, n_max);
    json dims = json::array(), bases = json::array();
    for (int k = 0; k <= n_max; ++k) {
        dims.push_back(cohomology_dim(cx.complex, k));
        if (o.emit_bases) bases.push_back(columns_to_json(cohomology_basis(cx.complex, k)));
    }
    json out = {{"max_degree", n_max}, {"cotor", dims}};
    if (o.emit_bases) out["cocycles"] = bases;
    return out;
}

json run_compare(const Problem& p, const TaskOptions& o) {
    int n_max = max_degree(p, o);
    auto [m, n] = module_pair(p);
    Comparison c = compare_cotor_hochschild(m, n, n_max);
    return {{"max_degree", n_max},
            {"cotor", c.cotor},
            {"hochschild", c.hochschild},
            {"verdict", c.pass() ? "pass" : "fail"}};
}

json table_json(const GradedTable& t) {
    json rows = json::array();
    for (const auto& r : t.dims) rows.push_back(r);
    return {{"t_lo", t.t_lo}, {"t_hi", t.t_hi}, {"dims", rows}};
}

json run_graded_compare(const Problem& p, const TaskOptions& o) {
    int n_max = max_degree(p, o);
    GradedWindow w = window(p, o);
    auto [m, n] = module_pair(p);
    GradedComparison c = compare_graded(m, n, n_max, w);
    json mism = json::array();
    for (auto [s, t] : c.mismatches) mism.push_back({s, t});
    return {{"max_degree", n_max},
            {"window", {w.lo, w.hi}},
            {"cotor", table_json(c.cotor)},
            {"hochschild", table_json(c.hochschild)},
            {"mismatches", mism},
            {"verdict", c.pass() ? "pass" : "fail"}};
}

json total_json(const TotalDims& t) {
    json truncated = json::array();
    for (int q = t.lo; q <= t.hi; ++q)
        if (!t.is_exact(q)) truncated.push_back(q);
    return {{"lo", t.lo}, {"hi", t.hi}, {"dims", t.dims}, {"truncated", truncated}};
}

json run_dg_compare(const Problem& p, const TaskOptions& o) {
    GradedWindow w = window(p, o);
    const auto& c = p.get<DGCoalgebra>(param_name(p.task, "coalgebra"));
    const auto& m = p.get<DGRightComodule>(param_name(p.task, "left"));
    const auto& n = p.get<DGLeftComodule>(param_name(p.task, "right"));
    if (m.comodule.coalgebra() != c.coalgebra || n.comodule.coalgebra() != c.coalgebra)
        throw TaskError("dg-compare: comodules are not over the named coalgebra");
    DGComparison r = compare_dg(c, m, n, w);
    return {{"window", {w.lo, w.hi}},
            {"cotor", total_json(r.cotor)},
            {"hochschild", total_json(r.hochschild)},
            {"compared", r.compared},
            {"mismatches", r.mismatches},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

json run_tower(const Problem& p, const TaskOptions& o) {
    int n_max = max_degree(p, o);
    const Tower& t = p.get<Tower>(param_name(p.task, "tower"));
    const Field& F = p.field;
    auto inclusions = [&](const std::vector<std::size_t>& dims) {
        std::vector<Matrix> out;
        if (p.task.contains("inclusions")) {
            const json& js = p.task.at("inclusions");
            if (!js.is_array() || js.size() + 1 != dims.size())
                throw TaskError("tower: need one inclusion per projection");
            for (std::size_t i = 0; i < js.size(); ++i) out.push_back(matrix_from_json(F, js[i], dims[i + 1], dims[i]));
            return out;
        }
        for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
            if (dims[i] != dims[i + 1]) throw TaskError("tower: inclusions are required when dimensions change");
            out.push_back(Matrix::identity(F, dims[i]));
        }
        return out;
    };

    ColimitReport r;
    if (p.task.contains("pairs")) {
        const json& pairs = p.task.at("pairs");
        if (!pairs.is_array() || pairs.size() != t.levels.size())
            throw TaskError("tower: need one [left, right] pair per level");
        std::vector<LeftModule> ls;
        std::vector<RightModule> rs;
        std::vector<std::size_t> dims;
        for (const auto& pr : pairs) {
            if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
                throw TaskError("tower: pairs are [left, right] names");
            ls.push_back(p.get<LeftModule>(pr[0].get<std::string>()));
            rs.push_back(p.get<RightModule>(pr[1].get<std::string>()));
            dims.push_back(ls.back().dim() * rs.back().dim());
        }
        r = colimit_report(t, ls, rs, inclusions(dims), n_max);
    } else {
        std::vector<LevelBimodule> bs;
        std::vector<std::size_t> dims;
        if (p.task.contains("bimodules")) {
            const json& names = p.task.at("bimodules");
            if (!names.is_array() || names.size() != t.levels.size())
                throw TaskError("tower: need one bimodule per level");
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (!names[i].is_string()) throw TaskError("tower: bimodules are names");
                bs.push_back({i, p.get<Bimodule>(names[i].get<std::string>())});
            }
        } else {
            // k with the augmentation on both sides at every level
            for (std::size_t i = 0; i < t.levels.size(); ++i)
                bs.push_back(epsilon_bimodule(t, i, trivial_left_module(t.levels[i])));
        }
        for (const auto& b : bs) dims.push_back(b.bimodule.dim());
        r = colimit_report(t, bs, inclusions(dims), n_max);
    }

    json steps = json::array();
    for (const auto& per_n : r.step_maps) {
        json row = json::array();
        for (const auto& m : per_n) row.push_back(matrix_to_json(m));
        steps.push_back(row);
    }
    json out = {{"max_degree", n_max},
                {"level_dims", r.level_dims},
                {"step_maps", steps},
                {"stable_image", r.stable_image},
                {"stable_dims", r.stable_dims},
                {"chain_maps_checked", r.chain_maps_checked}};
    if (r.cotor_dims) {
        out["cotor_dims"] = *r.cotor_dims;
        out["verdict"] = r.cotor_agrees() ? "pass" : "fail";
    }
    return out;
}

}  // namespace

json run_task(const std::string& command, const Problem& p, const TaskOptions& opts) {
    if (p.task.contains("command") && command != "validate" && p.task.at("command") != command)
        throw TaskError("problem task is \"" + p.task.at("command").get<std::string>() + "\", not \"" + command + "\"");
    bool ok = true;
    json validation = validation_json(p, ok);
    json report = {{"command", command}, {"field", field_to_json(p.field)}, {"task", p.task}};
    if (command == "validate") {
        report["objects"] = validation;
        report["all_valid"] = ok;
        report["message"] = ok ? "all objects valid" : "validation failed";
        return report;
    }
    if (!ok) {
        ValidationReport merged;
        for (const auto& [name, rep] : validate_problem(p)) merged.merge(rep, name + ": ");
        throw ValidationError("invalid objects", merged);
    }
    json result;
    if (command == "dual") result = run_dual(p);
    else if (command == "translate") result = run_translate(p);
    else if (command == "cotensor") result = run_cotensor(p, opts);
    else if (command == "hochschild") result = run_hochschild(p, opts);
    else if (command == "cotor") result = run_cotor(p, opts);
    else if (command == "compare") result = run_compare(p, opts);
    else if (command == "graded-compare") result = run_graded_compare(p, opts);
    else if (command == "dg-compare") result = run_dg_compare(p, opts);
    else if (command == "tower") result = run_tower(p, opts);
    else throw TaskError("unknown command \"" + command + "\"");
    report["result"] = std::move(result);
    return report;
}

bool report_failed(const json& report) {
    if (report.contains("all_valid") && !report.at("all_valid").get<bool>()) return true;
    return report.contains("result") && report.at("result").contains("verdict") &&
           report.at("result").at("verdict") == "fail";
}

}  // namespace cotorlab
