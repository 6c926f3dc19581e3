#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cotorlab/tasks.hpp"

namespace py = pybind11;
using namespace cotorlab;

namespace {

Field field_of(const std::string& spec) { return field_from_json(json::parse(spec)); }

Matrix matrix_of(const Field& F, const std::string& rows) {
    json j = json::parse(rows);
    if (!j.is_array() || j.empty()) throw SchemaError("matrix: expected a nonempty list of rows");
    return matrix_from_json(F, j, j.size(), j[0].size());
}

std::string matrix_out(const Field& F, const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(F, m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Cotor and Hochschild cohomology computations";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<ReferenceError>(m, "ReferenceError", PyExc_LookupError);
    py::register_exception<TaskError>(m, "TaskError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    // malformed JSON inside a problem is a schema problem too
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const json::exception& e) {
            py::set_error(py::module_::import("cotorlab._core").attr("SchemaError"), e.what());
        }
    });

    m.def("commands", &task_commands, "Task commands understood by run().");

    m.def(
        "run",
        [](const std::string& command, const std::string& problem, std::optional<int> max_degree,
           std::optional<std::pair<int, int>> window, bool emit_bases) {
            TaskOptions opts;
            opts.max_degree = max_degree;
            if (window) opts.window = GradedWindow(window->first, window->second);
            opts.emit_bases = emit_bases;
            Problem p = parse_problem(json::parse(problem));
            json report;
            {
                py::gil_scoped_release release;
                report = run_task(command, p, opts);
            }
            return report.dump();
        },
        py::arg("command"), py::arg("problem"), py::arg("max_degree") = py::none(),
        py::arg("window") = py::none(), py::arg("emit_bases") = false,
        "Run a task on a problem given as JSON text; returns the report as JSON text.");

    m.def(
        "normalize",
        [](const std::string& problem) { return problem_to_json(parse_problem(json::parse(problem))).dump(); },
        py::arg("problem"), "Problem with every object in explicit form.");

    m.def(
        "rank", [](const std::string& field, const std::string& rows) { return rank(matrix_of(field_of(field), rows)); },
        py::arg("field"), py::arg("rows"));
    m.def(
        "kernel",
        [](const std::string& field, const std::string& rows) {
            Field F = field_of(field);
            return matrix_out(F, kernel_basis(matrix_of(F, rows)).transpose());
        },
        py::arg("field"), py::arg("rows"), "Kernel basis vectors, one per row.");
    m.def(
        "solve",
        [](const std::string& field, const std::string& rows, const std::string& rhs) -> std::optional<std::string> {
            Field F = field_of(field);
            Matrix A = matrix_of(F, rows);
            auto x = solve(A, vector_from_json(F, json::parse(rhs), A.rows()));
            if (!x) return std::nullopt;
            return vector_to_json(F, *x).dump();
        },
        py::arg("field"), py::arg("rows"), py::arg("rhs"));
}
