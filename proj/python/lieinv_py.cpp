// Python bindings for the main operations: catalog access, validation,
// invariant functions, inv tuples, identification, and contraction
// decisions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieinv/classical.hpp"
#include "lieinv/json_io.hpp"

namespace py = pybind11;
using namespace lieinv;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(json_to_py(x));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

std::map<std::string, Scalar> params_from_dict(const py::dict& d) {
    std::map<std::string, Scalar> params;
    for (const auto& [k, v] : d)
        params[py::cast<std::string>(k)] = Scalar::parse(py::cast<std::string>(v));
    return params;
}

ScalarMatrix matrix_from_py(const std::vector<std::vector<std::string>>& rows) {
    ScalarMatrix m;
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        for (const auto& x : row) r.push_back(Scalar::parse(x));
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

PYBIND11_MODULE(lieinv, m) {
    m.doc() = "exact invariants, identification, and contractions of low-dimensional "
              "complex Lie and Jordan algebras";

    py::register_exception<LieInvError>(m, "LieInvError");

    py::class_<StructureConstants>(m, "Algebra")
        .def_property_readonly("dim", &StructureConstants::dim)
        .def_property_readonly("name", &StructureConstants::name)
        .def_property_readonly("kind",
                               [](const StructureConstants& sc) { return kind_name(sc.kind()); })
        .def("brackets", &StructureConstants::bracket_strings)
        .def("to_json", [](const StructureConstants& sc) { return algebra_to_json(sc).dump(); })
        .def("__repr__", [](const StructureConstants& sc) {
            return "<Algebra " + (sc.name().empty() ? "dim " + std::to_string(sc.dim())
                                                    : sc.name()) +
                   ">";
        });

    m.def("load", &algebra_from_string, py::arg("json_text"),
          "load an algebra from its JSON description");
    m.def(
        "catalog",
        [](const std::string& label, const py::dict& params) {
            return catalog_get(label, params_from_dict(params));
        },
        py::arg("label"), py::arg("params") = py::dict(),
        "instantiate a built-in catalog algebra");
    m.def("catalog_labels", [] {
        std::vector<std::string> out;
        for (const auto& e : catalog_entries()) out.push_back(e.label);
        return out;
    });
    m.def("validate", [](const StructureConstants& sc) {
        return json_to_py(validation_to_json(validate(sc)));
    });
    m.def(
        "invariant_function",
        [](const StructureConstants& sc, const std::string& which) {
            return json_to_py(
                invariant_function_to_json(invariant_function(sc, which_from_name(which))));
        },
        py::arg("algebra"), py::arg("which"),
        "one of psi, psi0, phi, phi0 as {generic, exceptional: [...]}");
    m.def("inv_tuple", [](const StructureConstants& sc) {
        return json_to_py(inv_tuple_to_json(inv_tuple(sc)));
    });
    m.def("identify", [](const StructureConstants& sc) {
        return json_to_py(identification_to_json(identify(sc)));
    });
    m.def("contraction_criteria",
          [](const StructureConstants& a, const StructureConstants& b) {
              return json_to_py(verdict_to_json(contraction_criteria(a, b)));
          });
    m.def("decide_contraction3", [](const StructureConstants& a, const StructureConstants& b) {
        return json_to_py(verdict_to_json(decide_contraction3(a, b)));
    });
    m.def("decide_contraction_jordan2",
          [](const StructureConstants& a, const StructureConstants& b) {
              return json_to_py(verdict_to_json(decide_contraction_jordan2(a, b)));
          });
    m.def(
        "change_basis",
        [](const StructureConstants& sc, const std::vector<std::vector<std::string>>& g) {
            return change_basis(sc, matrix_from_py(g));
        },
        py::arg("algebra"), py::arg("g"),
        "transport the structure constants along f(e_i) = sum_r g[r][i] e_r");
    m.def("direct_sum", &direct_sum);
}
