#include "cotorlab/serialize.hpp"

#include <functional>
#include <set>

#include "cotorlab/constructors.hpp"

namespace cotorlab {

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::size_t as_size(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw SchemaError(where + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<int>();
}

const json& as_array(const json& j, std::size_t size, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array");
    if (size != static_cast<std::size_t>(-1) && j.size() != size)
        throw SchemaError(where + ": expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
    return j;
}

constexpr std::size_t kAny = static_cast<std::size_t>(-1);

Grading grading_from_json(const json& spec, std::size_t dim, const std::string& where) {
    if (!spec.contains("grading") || spec.at("grading").is_null()) return std::nullopt;
    const json& g = as_array(spec.at("grading"), dim, where + ".grading");
    std::vector<int> out;
    for (const auto& d : g) out.push_back(as_int(d, where + ".grading"));
    return out;
}

void put_grading(json& j, const Grading& g) {
    if (g) j["grading"] = *g;
}

std::vector<Matrix> matrices_from_json(const Field& F, const json& j, std::size_t count, std::size_t dim,
                                       const std::string& where) {
    std::vector<Matrix> out;
    for (const auto& m : as_array(j, count, where)) out.push_back(matrix_from_json(F, m, dim, dim));
    return out;
}

json matrices_to_json(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(matrix_to_json(m));
    return out;
}

// Dimension of a module given by action matrices, read from the first one.
std::size_t action_dim(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a nonempty list of matrices");
    if (!j[0].is_array()) throw SchemaError(where + ": expected matrices");
    return j[0].size();
}

class Parser {
  public:
    Parser(const json& doc, Problem& out) : doc_(doc), out_(out) {}

    void run() {
        const json& objs = doc_.contains("objects") ? doc_.at("objects") : json::object();
        if (!objs.is_object()) throw SchemaError("\"objects\" must be an object");
        for (auto it = objs.begin(); it != objs.end(); ++it) resolve_name(it.key());
    }

  private:
    const json& doc_;
    Problem& out_;
    std::set<std::string> active_;

    const Field& F() const { return out_.field; }

    const Object& resolve_name(const std::string& name) {
        if (auto it = out_.objects.find(name); it != out_.objects.end()) return it->second;
        const json& objs = doc_.contains("objects") ? doc_.at("objects") : json::object();
        if (!objs.contains(name)) throw ReferenceError("unresolved reference '" + name + "'");
        if (active_.count(name)) throw SchemaError("cyclic reference through '" + name + "'");
        active_.insert(name);
        Object o = build(objs.at(name), name);
        active_.erase(name);
        return out_.objects.emplace(name, std::move(o)).first->second;
    }

    // A reference is a name or an inline object description.
    Object resolve(const json& ref, const std::string& where) {
        if (ref.is_string()) return resolve_name(ref.get<std::string>());
        if (ref.is_object()) return build(ref, where);
        throw SchemaError(where + ": expected a name or an object");
    }

    template <class T>
    T ref(const json& spec, const char* key, const std::string& where) {
        return expect<T>(resolve(require(spec, key, where), where + "." + key), where + "." + key);
    }

    template <class T>
    T expect(const Object& o, const std::string& where) {
        if (auto p = std::get_if<T>(&o)) return *p;
        throw ReferenceError(where + ": refers to a " + kind_name(o));
    }

    template <class T>
    std::vector<T> refs(const json& spec, const char* key, const std::string& where) {
        std::vector<T> out;
        const json& list = as_array(require(spec, key, where), kAny, where + "." + key);
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string w = where + "." + key + "[" + std::to_string(i) + "]";
            out.push_back(expect<T>(resolve(list[i], w), w));
        }
        if (out.empty()) throw SchemaError(where + "." + key + ": empty list");
        return out;
    }

    Object build(const json& spec, const std::string& where) {
        if (!spec.is_object()) throw SchemaError(where + ": object description must be a JSON object");
        std::string kind = require(spec, "kind", where).get<std::string>();
        if (kind == "algebra") return algebra(spec, where);
        if (kind == "coalgebra") return coalgebra(spec, where);
        if (kind == "left_module") return left_module(spec, where);
        if (kind == "right_module") return right_module(spec, where);
        if (kind == "bimodule") return bimodule(spec, where);
        if (kind == "right_comodule") return right_comodule(spec, where);
        if (kind == "left_comodule") return left_comodule(spec, where);
        if (kind == "dg_coalgebra") return dg_coalgebra(spec, where);
        if (kind == "dg_right_comodule") return dg_right_comodule(spec, where);
        if (kind == "dg_left_comodule") return dg_left_comodule(spec, where);
        if (kind == "dg_algebra") return dg_algebra(spec, where);
        if (kind == "dg_bimodule") return dg_bimodule(spec, where);
        if (kind == "tower") return tower(spec, where);
        throw SchemaError(where + ": unknown kind \"" + kind + "\"");
    }

    static std::string builtin(const json& spec) {
        return spec.contains("builtin") ? spec.at("builtin").get<std::string>() : std::string();
    }

    Algebra algebra(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        Algebra a = [&]() -> Algebra {
            if (b.empty()) {
                std::size_t d = as_size(require(spec, "dim", where), where + ".dim");
                const json& mul = as_array(require(spec, "mul", where), d, where + ".mul");
                std::vector<Scalar> m;
                m.reserve(d * d * d);
                for (std::size_t i = 0; i < d; ++i) {
                    as_array(mul[i], d, where + ".mul");
                    for (std::size_t j = 0; j < d; ++j) {
                        Vector v = vector_from_json(F(), mul[i][j], d);
                        m.insert(m.end(), v.begin(), v.end());
                    }
                }
                Vector unit = vector_from_json(F(), require(spec, "unit", where), d);
                std::vector<std::string> labels;
                if (spec.contains("labels")) labels = spec.at("labels").get<std::vector<std::string>>();
                return Algebra(F(), d, std::move(m), std::move(unit), std::move(labels),
                               grading_from_json(spec, d, where));
            }
            if (b == "ground") return ground_algebra(F());
            if (b == "group") {
                auto table = require(spec, "table", where).get<std::vector<std::vector<std::size_t>>>();
                return group_algebra(F(), table);
            }
            if (b == "cyclic_group") {
                std::size_t order = as_size(require(spec, "order", where), where);
                std::string basis = spec.value("basis", std::string("group"));
                if (basis == "group") return cyclic_group_algebra(F(), order);
                if (basis == "unipotent") return cyclic_group_algebra_unipotent(F(), order);
                throw SchemaError(where + ": basis must be \"group\" or \"unipotent\"");
            }
            if (b == "klein_four") return klein_four_algebra(F());
            if (b == "truncated_polynomial")
                return truncated_polynomial(F(), as_size(require(spec, "n", where), where),
                                            spec.contains("degree") ? as_int(spec.at("degree"), where) : 0);
            if (b == "matrix") return matrix_algebra(F(), as_size(require(spec, "n", where), where));
            if (b == "upper_triangular") return upper_triangular(F(), as_size(require(spec, "n", where), where));
            if (b == "product" || b == "tensor_product") {
                auto fs = refs<Algebra>(spec, "factors", where);
                Algebra acc = fs[0];
                for (std::size_t i = 1; i < fs.size(); ++i)
                    acc = b == "product" ? product(acc, fs[i]) : tensor_product(acc, fs[i]);
                return acc;
            }
            if (b == "exterior")
                return exterior_algebra(F(), require(spec, "degrees", where).get<std::vector<int>>());
            if (b == "dual") return dual_algebra(ref<Coalgebra>(spec, "of", where));
            if (b == "opposite") return opposite(ref<Algebra>(spec, "of", where));
            if (b == "enveloping") return enveloping(ref<Algebra>(spec, "of", where));
            throw SchemaError(where + ": unknown algebra builtin \"" + b + "\"");
        }();
        if (spec.contains("augmentation")) {
            const json& e = spec.at("augmentation");
            a = a.with_augmentation(e.is_null() ? std::nullopt
                                                : std::optional<Vector>(vector_from_json(F(), e, a.dim())));
        }
        return a;
    }

    Coalgebra coalgebra(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        if (b.empty()) {
            std::size_t d = as_size(require(spec, "dim", where), where + ".dim");
            const json& co = as_array(require(spec, "comul", where), d, where + ".comul");
            std::vector<Scalar> m;
            m.reserve(d * d * d);
            for (std::size_t k = 0; k < d; ++k) {
                as_array(co[k], d, where + ".comul");
                for (std::size_t i = 0; i < d; ++i) {
                    Vector v = vector_from_json(F(), co[k][i], d);
                    m.insert(m.end(), v.begin(), v.end());
                }
            }
            Vector eps = vector_from_json(F(), require(spec, "counit", where), d);
            std::vector<std::string> labels;
            if (spec.contains("labels")) labels = spec.at("labels").get<std::vector<std::string>>();
            return Coalgebra(F(), d, std::move(m), std::move(eps), std::move(labels),
                             grading_from_json(spec, d, where));
        }
        if (b == "ground") return ground_coalgebra(F());
        if (b == "sphere_homology") return sphere_homology(F(), as_int(require(spec, "n", where), where));
        if (b == "dual") return dual_coalgebra(ref<Algebra>(spec, "of", where));
        throw SchemaError(where + ": unknown coalgebra builtin \"" + b + "\"");
    }

    Matrix span(const json& spec, std::size_t dim, const std::string& where) {
        const json& cols = as_array(require(spec, "span", where), kAny, where + ".span");
        std::vector<Vector> vs;
        for (const auto& c : cols) vs.push_back(vector_from_json(F(), c, dim));
        return Matrix::from_columns(F(), dim, vs);
    }

    template <class M>
    M regrade(M m, const json& spec, const std::string& where) {
        if (spec.contains("grading") && !builtin(spec).empty())
            return with_grading(m, grading_from_json(spec, m.dim(), where));
        return m;
    }

    LeftModule left_module(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        if (b == "from_comodule") return comodule_to_module(ref<RightComodule>(spec, "of", where));
        if (b == "dual") return dual_left_module(ref<RightModule>(spec, "of", where));
        if (b == "direct_sum") {
            auto ms = refs<LeftModule>(spec, "summands", where);
            LeftModule acc = ms[0];
            for (std::size_t i = 1; i < ms.size(); ++i) acc = direct_sum(acc, ms[i]);
            return acc;
        }
        if (b == "quotient" || b == "submodule" || b == "conjugate") {
            LeftModule of = ref<LeftModule>(spec, "of", where);
            if (b == "conjugate")
                return conjugate(of, matrix_from_json(F(), require(spec, "P", where), of.dim(), of.dim()));
            Matrix s = span(spec, of.dim(), where);
            return b == "quotient" ? quotient(of, s) : submodule(of, s);
        }
        Algebra a = ref<Algebra>(spec, "algebra", where);
        if (b.empty()) {
            const json& act = require(spec, "action", where);
            std::size_t d = action_dim(act, where + ".action");
            return LeftModule(a, matrices_from_json(F(), act, a.dim(), d, where + ".action"),
                              grading_from_json(spec, d, where));
        }
        if (b == "regular") return regrade(regular_left_module(a), spec, where);
        if (b == "trivial") return regrade(trivial_left_module(a), spec, where);
        if (b == "character")
            return character_left_module(a, vector_from_json(F(), require(spec, "chi", where), a.dim()),
                                         spec.contains("degree") ? as_int(spec.at("degree"), where) : 0);
        if (b == "column") return column_module(a, as_size(require(spec, "n", where), where));
        throw SchemaError(where + ": unknown left_module builtin \"" + b + "\"");
    }

    RightModule right_module(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        if (b == "from_comodule") return comodule_to_module(ref<LeftComodule>(spec, "of", where));
        if (b == "dual") return dual_right_module(ref<LeftModule>(spec, "of", where));
        if (b == "direct_sum") {
            auto ms = refs<RightModule>(spec, "summands", where);
            RightModule acc = ms[0];
            for (std::size_t i = 1; i < ms.size(); ++i) acc = direct_sum(acc, ms[i]);
            return acc;
        }
        if (b == "quotient" || b == "submodule" || b == "conjugate") {
            RightModule of = ref<RightModule>(spec, "of", where);
            if (b == "conjugate")
                return conjugate(of, matrix_from_json(F(), require(spec, "P", where), of.dim(), of.dim()));
            Matrix s = span(spec, of.dim(), where);
            return b == "quotient" ? quotient(of, s) : submodule(of, s);
        }
        Algebra a = ref<Algebra>(spec, "algebra", where);
        if (b.empty()) {
            const json& act = require(spec, "action", where);
            std::size_t d = action_dim(act, where + ".action");
            return RightModule(a, matrices_from_json(F(), act, a.dim(), d, where + ".action"),
                               grading_from_json(spec, d, where));
        }
        if (b == "regular") return regrade(regular_right_module(a), spec, where);
        if (b == "trivial") return regrade(trivial_right_module(a), spec, where);
        if (b == "character")
            return character_right_module(a, vector_from_json(F(), require(spec, "chi", where), a.dim()),
                                          spec.contains("degree") ? as_int(spec.at("degree"), where) : 0);
        if (b == "row") return row_module(a, as_size(require(spec, "n", where), where));
        throw SchemaError(where + ": unknown right_module builtin \"" + b + "\"");
    }

    Bimodule bimodule(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        if (b == "tensor")
            return tensor_bimodule(ref<LeftModule>(spec, "left", where), ref<RightModule>(spec, "right", where));
        if (b == "epsilon") return epsilon_twist(ref<LeftModule>(spec, "of", where));
        Algebra a = ref<Algebra>(spec, "algebra", where);
        if (b == "regular") return regular_bimodule(a);
        if (!b.empty()) throw SchemaError(where + ": unknown bimodule builtin \"" + b + "\"");
        const json& l = require(spec, "left", where);
        std::size_t d = action_dim(l, where + ".left");
        return Bimodule(a, matrices_from_json(F(), l, a.dim(), d, where + ".left"),
                        matrices_from_json(F(), require(spec, "right", where), a.dim(), d, where + ".right"),
                        grading_from_json(spec, d, where));
    }

    std::vector<Scalar> cube(const json& j, std::size_t a, std::size_t b, std::size_t c, const std::string& where) {
        std::vector<Scalar> out;
        out.reserve(a * b * c);
        as_array(j, a, where);
        for (std::size_t x = 0; x < a; ++x) {
            as_array(j[x], b, where);
            for (std::size_t y = 0; y < b; ++y) {
                Vector v = vector_from_json(F(), j[x][y], c);
                out.insert(out.end(), v.begin(), v.end());
            }
        }
        return out;
    }

    RightComodule right_comodule(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        if (b == "from_module") return module_to_comodule(ref<LeftModule>(spec, "of", where));
        if (b == "coaction_from_dual") return coaction_from_dual(ref<LeftModule>(spec, "of", where));
        Coalgebra c = ref<Coalgebra>(spec, "coalgebra", where);
        if (b == "regular") return regular_right_comodule(c);
        if (b == "grouplike")
            return grouplike_right_comodule(c, vector_from_json(F(), require(spec, "g", where), c.dim()),
                                            spec.contains("degree") ? as_int(spec.at("degree"), where) : 0);
        if (!b.empty()) throw SchemaError(where + ": unknown right_comodule builtin \"" + b + "\"");
        std::size_t d = as_size(require(spec, "dim", where), where + ".dim");
        return RightComodule(c, d, cube(require(spec, "coaction", where), d, d, c.dim(), where + ".coaction"),
                             grading_from_json(spec, d, where));
    }

    LeftComodule left_comodule(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        if (b == "from_module") return module_to_comodule(ref<RightModule>(spec, "of", where));
        if (b == "contragredient") return contragredient(ref<RightComodule>(spec, "of", where));
        Coalgebra c = ref<Coalgebra>(spec, "coalgebra", where);
        if (b == "regular") return regular_left_comodule(c);
        if (b == "grouplike")
            return grouplike_left_comodule(c, vector_from_json(F(), require(spec, "g", where), c.dim()),
                                           spec.contains("degree") ? as_int(spec.at("degree"), where) : 0);
        if (!b.empty()) throw SchemaError(where + ": unknown left_comodule builtin \"" + b + "\"");
        std::size_t d = as_size(require(spec, "dim", where), where + ".dim");
        return LeftComodule(c, d, cube(require(spec, "coaction", where), d, c.dim(), d, where + ".coaction"),
                            grading_from_json(spec, d, where));
    }

    Matrix differential(const json& spec, std::size_t dim, const std::string& where) {
        if (!spec.contains("differential") || spec.at("differential").is_null()) return Matrix(F(), dim, dim);
        try {
            return matrix_from_json(F(), spec.at("differential"), dim, dim);
        } catch (const SchemaError& e) {
            throw SchemaError(where + ": " + e.what());
        }
    }

    DGCoalgebra dg_coalgebra(const json& spec, const std::string& where) {
        Coalgebra c = ref<Coalgebra>(spec, "coalgebra", where);
        return {c, differential(spec, c.dim(), where + ".differential")};
    }

    DGRightComodule dg_right_comodule(const json& spec, const std::string& where) {
        DGCoalgebra over = ref<DGCoalgebra>(spec, "dg_coalgebra", where);
        RightComodule m = ref<RightComodule>(spec, "comodule", where);
        if (m.coalgebra() != over.coalgebra) throw SchemaError(where + ": comodule is over another coalgebra");
        note_parent(where, over);
        return {m, differential(spec, m.dim(), where + ".differential")};
    }

    DGLeftComodule dg_left_comodule(const json& spec, const std::string& where) {
        DGCoalgebra over = ref<DGCoalgebra>(spec, "dg_coalgebra", where);
        LeftComodule n = ref<LeftComodule>(spec, "comodule", where);
        if (n.coalgebra() != over.coalgebra) throw SchemaError(where + ": comodule is over another coalgebra");
        note_parent(where, over);
        return {n, differential(spec, n.dim(), where + ".differential")};
    }

    DGAlgebra dg_algebra(const json& spec, const std::string& where) {
        if (builtin(spec) == "dual") return dg_dual_algebra(ref<DGCoalgebra>(spec, "of", where));
        Algebra a = ref<Algebra>(spec, "algebra", where);
        return {a, differential(spec, a.dim(), where + ".differential")};
    }

    DGBimodule dg_bimodule(const json& spec, const std::string& where) {
        if (builtin(spec) == "tensor") {
            auto m = ref<DGRightComodule>(spec, "left", where);
            auto n = ref<DGLeftComodule>(spec, "right", where);
            auto it = out_.dg_parent.find(spec.at("left").is_string() ? spec.at("left").get<std::string>() : "");
            if (it == out_.dg_parent.end())
                throw SchemaError(where + ": tensor needs named DG comodules");
            note_parent(where, dg_dual_algebra(std::get<DGCoalgebra>(it->second)));
            return dg_tensor_bimodule(m, n);
        }
        DGAlgebra over = ref<DGAlgebra>(spec, "dg_algebra", where);
        Bimodule b = ref<Bimodule>(spec, "bimodule", where);
        if (b.algebra() != over.algebra) throw SchemaError(where + ": bimodule is over another algebra");
        note_parent(where, over);
        return {b, differential(spec, b.dim(), where + ".differential")};
    }

    void note_parent(const std::string& where, Object parent) {
        if (!active_.count(where)) return;  // inline objects have no name
        out_.dg_parent.insert_or_assign(where, std::move(parent));
    }

    Tower tower(const json& spec, const std::string& where) {
        std::string b = builtin(spec);
        if (b == "group_algebra_tower")
            return group_algebra_tower(F(), as_size(require(spec, "p", where), where),
                                       as_size(require(spec, "depth", where), where));
        if (!b.empty()) throw SchemaError(where + ": unknown tower builtin \"" + b + "\"");
        Tower t;
        t.levels = refs<Algebra>(spec, "levels", where);
        const json& ps = as_array(require(spec, "projections", where), t.levels.size() - 1, where + ".projections");
        for (std::size_t i = 0; i < ps.size(); ++i)
            t.projections.push_back(matrix_from_json(F(), ps[i], t.levels[i].dim(), t.levels[i + 1].dim()));
        return t;
    }
};

}  // namespace

std::string kind_name(const Object& o) {
    static const char* names[] = {"algebra",           "coalgebra",        "left_module",    "right_module",
                                  "bimodule",          "right_comodule",   "left_comodule",  "dg_coalgebra",
                                  "dg_right_comodule", "dg_left_comodule", "dg_algebra",     "dg_bimodule",
                                  "tower"};
    return names[o.index()];
}

json field_to_json(const Field& F) {
    if (F.is_prime()) return {{"type", "Fp"}, {"p", F.characteristic()}};
    return {{"type", "Q"}};
}

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw SchemaError("field: expected {\"type\": \"Fp\"|\"Q\"}");
    std::string t = j.at("type").get<std::string>();
    if (t == "Q") return Field::rationals();
    if (t == "Fp") {
        if (!j.contains("p") || !j.at("p").is_number_integer()) throw SchemaError("field: Fp needs an integer \"p\"");
        return Field::prime(j.at("p").get<std::int64_t>());
    }
    throw SchemaError("field: unknown type \"" + t + "\"");
}

json scalar_to_json(const Field& F, const Scalar& s) {
    if (F.is_prime()) return s.to_mpq().get_num().get_si();
    return F.to_string(s);
}

Scalar scalar_from_json(const Field& F, const json& j) {
    if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
    if (j.is_string()) return F.parse(j.get<std::string>());
    throw SchemaError("scalar: expected an integer or an \"a/b\" string, got " + j.dump());
}

json vector_to_json(const Field& F, const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(F, s));
    return out;
}

Vector vector_from_json(const Field& F, const json& j, std::size_t size) {
    if (!j.is_array()) throw SchemaError("vector: expected an array");
    if (size != kAny && j.size() != size)
        throw SchemaError("vector: expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
    Vector v;
    for (const auto& x : j) v.push_back(scalar_from_json(F, x));
    return v;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.field(), m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Field& F, const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw SchemaError("matrix: expected " + std::to_string(rows) + " rows");
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j) {
        Vector v = vector_from_json(F, row, cols);
        entries.insert(entries.end(), v.begin(), v.end());
    }
    return Matrix(F, rows, cols, std::move(entries));
}

json to_json(const Algebra& a) {
    const Field& F = a.field();
    const std::size_t d = a.dim();
    json mul = json::array();
    for (std::size_t i = 0; i < d; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < d; ++j) {
            json v = json::array();
            for (std::size_t k = 0; k < d; ++k) v.push_back(scalar_to_json(F, a.mul(i, j, k)));
            row.push_back(std::move(v));
        }
        mul.push_back(std::move(row));
    }
    json out = {{"kind", "algebra"}, {"dim", d}, {"mul", std::move(mul)}, {"unit", vector_to_json(F, a.unit())}};
    if (!a.labels().empty()) out["labels"] = a.labels();
    put_grading(out, a.grading());
    if (a.augmentation()) out["augmentation"] = vector_to_json(F, *a.augmentation());
    return out;
}

json to_json(const Coalgebra& c) {
    const Field& F = c.field();
    const std::size_t d = c.dim();
    json co = json::array();
    for (std::size_t k = 0; k < d; ++k) {
        json row = json::array();
        for (std::size_t i = 0; i < d; ++i) {
            json v = json::array();
            for (std::size_t j = 0; j < d; ++j) v.push_back(scalar_to_json(F, c.comul(k, i, j)));
            row.push_back(std::move(v));
        }
        co.push_back(std::move(row));
    }
    json out = {{"kind", "coalgebra"}, {"dim", d}, {"comul", std::move(co)}, {"counit", vector_to_json(F, c.counit())}};
    if (!c.labels().empty()) out["labels"] = c.labels();
    put_grading(out, c.grading());
    return out;
}

json to_json(const LeftModule& m, const std::string& algebra) {
    json out = {{"kind", "left_module"}, {"algebra", algebra}, {"action", matrices_to_json(m.actions())}};
    put_grading(out, m.grading());
    return out;
}

json to_json(const RightModule& m, const std::string& algebra) {
    json out = {{"kind", "right_module"}, {"algebra", algebra}, {"action", matrices_to_json(m.actions())}};
    put_grading(out, m.grading());
    return out;
}

json to_json(const Bimodule& b, const std::string& algebra) {
    json out = {{"kind", "bimodule"},
                {"algebra", algebra},
                {"left", matrices_to_json(b.lefts())},
                {"right", matrices_to_json(b.rights())}};
    put_grading(out, b.grading());
    return out;
}

json to_json(const RightComodule& m, const std::string& coalgebra) {
    const Field& F = m.coalgebra().field();
    json co = json::array();
    for (std::size_t x = 0; x < m.dim(); ++x) {
        json row = json::array();
        for (std::size_t y = 0; y < m.dim(); ++y) {
            json v = json::array();
            for (std::size_t k = 0; k < m.coalgebra().dim(); ++k) v.push_back(scalar_to_json(F, m.rho(x, y, k)));
            row.push_back(std::move(v));
        }
        co.push_back(std::move(row));
    }
    json out = {{"kind", "right_comodule"}, {"coalgebra", coalgebra}, {"dim", m.dim()}, {"coaction", std::move(co)}};
    put_grading(out, m.grading());
    return out;
}

json to_json(const LeftComodule& n, const std::string& coalgebra) {
    const Field& F = n.coalgebra().field();
    json co = json::array();
    for (std::size_t x = 0; x < n.dim(); ++x) {
        json row = json::array();
        for (std::size_t k = 0; k < n.coalgebra().dim(); ++k) {
            json v = json::array();
            for (std::size_t y = 0; y < n.dim(); ++y) v.push_back(scalar_to_json(F, n.lambda(x, k, y)));
            row.push_back(std::move(v));
        }
        co.push_back(std::move(row));
    }
    json out = {{"kind", "left_comodule"}, {"coalgebra", coalgebra}, {"dim", n.dim()}, {"coaction", std::move(co)}};
    put_grading(out, n.grading());
    return out;
}

const Object& Problem::at(const std::string& name) const {
    auto it = objects.find(name);
    if (it == objects.end()) throw ReferenceError("unresolved reference '" + name + "'");
    return it->second;
}

Problem parse_problem(const json& doc) {
    if (!doc.is_object()) throw SchemaError("problem file must be a JSON object");
    Problem p;
    p.field = field_from_json(require(doc, "field", "problem"));
    if (doc.contains("task")) {
        p.task = doc.at("task");
        if (!p.task.is_object()) throw SchemaError("\"task\" must be an object");
    }
    Parser(doc, p).run();
    return p;
}

namespace {

bool same(const DGCoalgebra& a, const DGCoalgebra& b) {
    return a.coalgebra == b.coalgebra && a.differential == b.differential;
}
bool same(const DGAlgebra& a, const DGAlgebra& b) { return a.algebra == b.algebra && a.differential == b.differential; }

}  // namespace

std::map<std::string, ValidationReport> validate_problem(const Problem& p) {
    std::map<std::string, ValidationReport> out;
    for (const auto& [name, obj] : p.objects) {
        auto parent = p.dg_parent.find(name);
        out[name] = std::visit(
            [&](const auto& o) -> ValidationReport {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, Algebra>) return validate_algebra(o);
                else if constexpr (std::is_same_v<T, Coalgebra>) return validate_coalgebra(o);
                else if constexpr (std::is_same_v<T, DGCoalgebra> || std::is_same_v<T, DGAlgebra>) return validate_dg(o);
                else if constexpr (std::is_same_v<T, DGRightComodule> || std::is_same_v<T, DGLeftComodule>)
                    return validate_dg(o, std::get<DGCoalgebra>(parent->second));
                else if constexpr (std::is_same_v<T, DGBimodule>)
                    return validate_dg(o, std::get<DGAlgebra>(parent->second));
                else if constexpr (std::is_same_v<T, Tower>) return validate_tower(o);
                else if constexpr (std::is_same_v<T, RightComodule> || std::is_same_v<T, LeftComodule>)
                    return validate_comodule(o);
                else return validate_module(o);
            },
            obj);
    }
    return out;
}

json problem_to_json(const Problem& p) {
    json objs = json::object();
    // Parents are referenced by name when a named object matches, else inlined.
    auto algebra_ref = [&](const Algebra& a) -> json {
        for (const auto& [n, o] : p.objects)
            if (auto x = std::get_if<Algebra>(&o); x && *x == a) return n;
        return to_json(a);
    };
    auto coalgebra_ref = [&](const Coalgebra& c) -> json {
        for (const auto& [n, o] : p.objects)
            if (auto x = std::get_if<Coalgebra>(&o); x && *x == c) return n;
        return to_json(c);
    };
    auto dg_coalgebra_ref = [&](const DGCoalgebra& c) -> json {
        for (const auto& [n, o] : p.objects)
            if (auto x = std::get_if<DGCoalgebra>(&o); x && same(*x, c)) return n;
        return {{"kind", "dg_coalgebra"}, {"coalgebra", coalgebra_ref(c.coalgebra)}, {"differential", matrix_to_json(c.differential)}};
    };
    auto dg_algebra_ref = [&](const DGAlgebra& a) -> json {
        for (const auto& [n, o] : p.objects)
            if (auto x = std::get_if<DGAlgebra>(&o); x && same(*x, a)) return n;
        return {{"kind", "dg_algebra"}, {"algebra", algebra_ref(a.algebra)}, {"differential", matrix_to_json(a.differential)}};
    };
    // to_json takes a parent name; swap in an inline object when needed.
    auto with_parent = [](json j, const char* key, const json& parent) {
        j[key] = parent;
        return j;
    };
    for (const auto& [name, obj] : p.objects) {
        auto parent = p.dg_parent.find(name);
        objs[name] = std::visit(
            [&](const auto& o) -> json {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, Algebra> || std::is_same_v<T, Coalgebra>) return to_json(o);
                else if constexpr (std::is_same_v<T, LeftModule> || std::is_same_v<T, RightModule> ||
                                   std::is_same_v<T, Bimodule>)
                    return with_parent(to_json(o, ""), "algebra", algebra_ref(o.algebra()));
                else if constexpr (std::is_same_v<T, RightComodule> || std::is_same_v<T, LeftComodule>)
                    return with_parent(to_json(o, ""), "coalgebra", coalgebra_ref(o.coalgebra()));
                else if constexpr (std::is_same_v<T, DGCoalgebra>)
                    return {{"kind", "dg_coalgebra"},
                            {"coalgebra", coalgebra_ref(o.coalgebra)},
                            {"differential", matrix_to_json(o.differential)}};
                else if constexpr (std::is_same_v<T, DGAlgebra>)
                    return {{"kind", "dg_algebra"},
                            {"algebra", algebra_ref(o.algebra)},
                            {"differential", matrix_to_json(o.differential)}};
                else if constexpr (std::is_same_v<T, DGRightComodule> || std::is_same_v<T, DGLeftComodule>) {
                    json c = with_parent(to_json(o.comodule, ""), "coalgebra", coalgebra_ref(o.comodule.coalgebra()));
                    return {{"kind", std::is_same_v<T, DGRightComodule> ? "dg_right_comodule" : "dg_left_comodule"},
                            {"dg_coalgebra", dg_coalgebra_ref(std::get<DGCoalgebra>(parent->second))},
                            {"comodule", c},
                            {"differential", matrix_to_json(o.differential)}};
                } else if constexpr (std::is_same_v<T, DGBimodule>) {
                    json b = with_parent(to_json(o.bimodule, ""), "algebra", algebra_ref(o.bimodule.algebra()));
                    return {{"kind", "dg_bimodule"},
                            {"dg_algebra", dg_algebra_ref(std::get<DGAlgebra>(parent->second))},
                            {"bimodule", b},
                            {"differential", matrix_to_json(o.differential)}};
                } else {
                    json levels = json::array(), projections = json::array();
                    for (const auto& a : o.levels) levels.push_back(algebra_ref(a));
                    for (const auto& m : o.projections) projections.push_back(matrix_to_json(m));
                    return {{"kind", "tower"}, {"levels", levels}, {"projections", projections}};
                }
            },
            obj);
    }
    json out = {{"field", field_to_json(p.field)}, {"objects", std::move(objs)}};
    if (!p.task.empty()) out["task"] = p.task;
    return out;
}

}  // namespace cotorlab
