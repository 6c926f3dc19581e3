#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "cotorlab/graded.hpp"
#include "cotorlab/profinite.hpp"

namespace cotorlab {

using json = nlohmann::json;

/// Well-formed JSON that does not describe a problem.
class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A name used in a problem that no object defines, or of the wrong kind.
class ReferenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Object = std::variant<Algebra, Coalgebra, LeftModule, RightModule, Bimodule, RightComodule,
                            LeftComodule, DGCoalgebra, DGRightComodule, DGLeftComodule, DGAlgebra,
                            DGBimodule, Tower>;

/// "algebra", "coalgebra", "left_module", ... as used in the "kind" field.
std::string kind_name(const Object& o);

/// {"type": "Fp", "p": 5} or {"type": "Q"}.
json field_to_json(const Field& F);
Field field_from_json(const json& j);

/// Integers over F_p, "a/b" strings over Q. Both kinds are accepted on input.
json scalar_to_json(const Field& F, const Scalar& s);
Scalar scalar_from_json(const Field& F, const json& j);
json vector_to_json(const Field& F, const Vector& v);
Vector vector_from_json(const Field& F, const json& j, std::size_t size);
/// List of rows.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& F, const json& j, std::size_t rows, std::size_t cols);

/// Explicit forms. References to parent objects are by name.
json to_json(const Algebra& a);
json to_json(const Coalgebra& c);
json to_json(const LeftModule& m, const std::string& algebra);
json to_json(const RightModule& m, const std::string& algebra);
json to_json(const Bimodule& b, const std::string& algebra);
json to_json(const RightComodule& m, const std::string& coalgebra);
json to_json(const LeftComodule& n, const std::string& coalgebra);

/// A parsed problem file: every object built, nothing validated yet.
struct Problem {
    Field field = Field::rationals();
    std::map<std::string, Object> objects;
    /// DG comodule or bimodule name -> the DG coalgebra or algebra it lives over.
    std::map<std::string, Object> dg_parent;
    json task = json::object();

    const Object& at(const std::string& name) const;
    template <class T>
    const T& get(const std::string& name) const {
        const Object& o = at(name);
        if (auto p = std::get_if<T>(&o)) return *p;
        throw ReferenceError("object '" + name + "' is a " + kind_name(o) + " here");
    }
};

/// Throws SchemaError, ReferenceError or InputError (bad sizes, bad field).
Problem parse_problem(const json& doc);

/// Validation report per object name; objects are checked in name order.
std::map<std::string, ValidationReport> validate_problem(const Problem& p);

/// Serializes every object of p in explicit form, so that
/// parse_problem(problem_to_json(p)) reproduces p.
json problem_to_json(const Problem& p);

}  // namespace cotorlab
