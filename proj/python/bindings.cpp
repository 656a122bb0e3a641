#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "twistchar/twistchar.hpp"

namespace py = pybind11;
namespace tc = twistchar;
using tc::Int;

namespace pybind11::detail {

// Exact conversion between arbitrary-precision integers and Python ints,
// through the decimal string form.
template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* str = PyObject_Str(src.ptr());
        if (!str) return false;
        const char* digits = PyUnicode_AsUTF8(str);
        if (!digits) {
            Py_DECREF(str);
            return false;
        }
        value = Int(digits);
        Py_DECREF(str);
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using Parts = std::vector<unsigned long>;

tc::symgroup::Partition to_partition(const Parts& parts) {
    return tc::symgroup::Partition(parts);
}

using Rows = std::vector<std::pair<Parts, Int>>;

Rows table_rows(const tc::braidchar::CharacterTable<Int>& table) {
    Rows rows;
    rows.reserve(table.rows.size());
    for (const auto& row : table.rows) rows.emplace_back(row.cycle_type.parts(), row.value);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants of twisted graded categories";

    py::register_exception<tc::enumeration_limit_error>(m, "EnumerationLimitError",
                                                        PyExc_ValueError);
    py::register_exception<tc::type_error>(m, "TypeMismatchError", PyExc_ValueError);
    py::register_exception<tc::inversion_error>(m, "InversionError", PyExc_ValueError);

    // symmetric group combinatorics
    m.def(
        "partitions",
        [](unsigned long n, unsigned long cap) {
            std::vector<Parts> out;
            for (const auto& p : tc::symgroup::partitions(n, cap)) out.push_back(p.parts());
            return out;
        },
        py::arg("m"), py::arg("cap") = tc::symgroup::kDefaultPartitionCap,
        "All partitions of m in reverse-lexicographic order");
    m.def(
        "cycle_counts",
        [](const Parts& p) { return tc::symgroup::cycle_counts(to_partition(p)); },
        py::arg("partition"));
    m.def(
        "num_cycles", [](const Parts& p) { return to_partition(p).num_cycles(); },
        py::arg("partition"));
    m.def(
        "centralizer_order",
        [](const Parts& p) { return tc::symgroup::centralizer_order(to_partition(p)); },
        py::arg("partition"));
    m.def(
        "class_size",
        [](const Parts& p) { return tc::symgroup::class_size(to_partition(p)); },
        py::arg("partition"));
    m.def(
        "cyclic_loop_components",
        [](unsigned long p, unsigned long k, unsigned long j) {
            std::vector<std::pair<Parts, unsigned long>> out;
            for (const auto& c : tc::symgroup::cyclic_loop_components(p, k, j))
                out.emplace_back(c.coords, c.valuation);
            return out;
        },
        py::arg("p"), py::arg("k"), py::arg("j"),
        "Components of the looped classifying space as (coords, valuation) pairs");

    // twists
    py::class_<tc::graded::IntTwist>(m, "Twist")
        .def_static("trivial", &tc::graded::IntTwist::trivial)
        .def_static("koszul", &tc::graded::IntTwist::koszul)
        .def_static("unit", [](const Int& eps) { return tc::graded::IntTwist::unit(eps); },
                    py::arg("epsilon"))
        .def_property_readonly("kind", &tc::graded::IntTwist::kind_name)
        .def_property_readonly("epsilon", &tc::graded::IntTwist::epsilon)
        .def("__repr__", [](const tc::graded::IntTwist& t) {
            return "Twist(" + t.kind_name() + ", epsilon=" + t.epsilon().get_str() + ")";
        });

    m.def(
        "dim_shift",
        [](const tc::graded::IntTwist& twist, const Int& dim) {
            return tc::graded::dim_shift(twist, dim);
        },
        py::arg("twist"), py::arg("dim"));

    // graded dimensions
    m.def(
        "day_convolve",
        [](const std::map<long, Int>& x, const std::map<long, Int>& y) {
            return day_convolve(tc::graded::IntGradedDim(x), tc::graded::IntGradedDim(y))
                .entries();
        },
        py::arg("x"), py::arg("y"), "Day convolution of degree -> value maps");
    m.def(
        "is_invertible",
        [](const std::map<long, Int>& x) {
            return tc::graded::is_invertible(tc::graded::IntGradedDim(x));
        },
        py::arg("x"), "Degree of an invertible graded dimension, or None");
    m.def(
        "count_twists",
        [](const std::vector<Int>& orders) {
            return count_twists(tc::graded::FiniteAbelianGroup(orders));
        },
        py::arg("orders"), "Twisted graded structures counted from the unit group");

    // signed-unit ring (elements as (a, b) pairs meaning a + b*u)
    m.def(
        "signed_unit_eval",
        [](const std::pair<Int, Int>& x, int sign) {
            return tc::ring::SignedUnit(x.first, x.second).eval(sign);
        },
        py::arg("x"), py::arg("sign"), "Evaluate a + b*u at u -> sign");
    m.def(
        "signed_unit_mul",
        [](const std::pair<Int, Int>& x, const std::pair<Int, Int>& y) {
            const auto product = tc::ring::SignedUnit(x.first, x.second) *
                                 tc::ring::SignedUnit(y.first, y.second);
            return std::make_pair(product.a, product.b);
        },
        py::arg("x"), py::arg("y"));

    // series
    m.def(
        "series_mul",
        [](const std::vector<Int>& f, const std::vector<Int>& g) {
            return series_mul(tc::ring::IntSeries(f), tc::ring::IntSeries(g)).coeffs();
        },
        py::arg("f"), py::arg("g"), "Truncated Cauchy product of coefficient lists");
    m.def(
        "series_invert",
        [](const std::vector<Int>& f) {
            return series_invert(tc::ring::IntSeries(f)).coeffs();
        },
        py::arg("f"));

    // braiding characters
    m.def(
        "braiding_character",
        [](const tc::graded::IntTwist& twist, const Int& dim, unsigned long power) {
            return table_rows(tc::braidchar::braiding_character(twist, dim, power));
        },
        py::arg("twist"), py::arg("dim"), py::arg("m"),
        "Rows (partition, value) of the braiding character table; every value "
        "carries the degree marker t^m");
    m.def(
        "induced_character_value",
        [](const Parts& partition, const Int& dim1, const Int& dim2,
           const tc::graded::IntTwist& twist1, const tc::graded::IntTwist& twist2) {
            return tc::braidchar::induced_character_value(to_partition(partition), dim1, dim2,
                                                          twist1, twist2);
        },
        py::arg("partition"), py::arg("dim1"), py::arg("dim2"), py::arg("twist1"),
        py::arg("twist2"));

    // exterior powers
    m.def(
        "ext_dim",
        [](const tc::graded::IntTwist& twist, const Int& dim, unsigned long n) {
            return tc::extalg::ext_dim(twist, dim, n);
        },
        py::arg("twist"), py::arg("dim"), py::arg("n"),
        "Twisted exterior power dimension, categorical normalization");
    m.def(
        "ext_series",
        [](const tc::graded::IntTwist& twist, const Int& dim, unsigned long order) {
            const auto s = tc::extalg::ext_series(twist, dim, order);
            return std::make_pair(s.categorical.coeffs(), s.underlying.coeffs());
        },
        py::arg("twist"), py::arg("dim"), py::arg("order"),
        "(categorical, underlying) coefficient lists");
    m.def(
        "verify_sym_ext_identity",
        [](const Int& dim, unsigned long order) {
            const auto [holds, witness] = tc::extalg::verify_sym_ext_identity(dim, order);
            return std::make_pair(holds, witness.coeffs());
        },
        py::arg("dim"), py::arg("order"));
    m.def(
        "ext_series_product",
        [](const std::vector<std::pair<tc::graded::IntTwist, Int>>& factors,
           unsigned long order) {
            std::vector<tc::extalg::ExtSeries> series;
            series.reserve(factors.size());
            for (const auto& [twist, dim] : factors)
                series.push_back(tc::extalg::ext_series(twist, dim, order));
            return tc::extalg::ext_series_product(series).coeffs();
        },
        py::arg("factors"), py::arg("order"),
        "Categorical series of a direct sum, from (twist, dim) factors");

    // tensor oracle
    m.def(
        "koszul_sign",
        [](const std::vector<std::size_t>& sigma, const std::vector<long>& degrees) {
            return tc::oracle::koszul_sign(sigma, degrees);
        },
        py::arg("sigma"), py::arg("degrees"));
    m.def(
        "perm_trace",
        [](const std::vector<std::size_t>& sigma, const std::vector<long>& space_degrees,
           unsigned long power, const tc::graded::IntTwist& twist) {
            const tc::oracle::GradedVectorSpace space{space_degrees};
            const auto action = tc::oracle::perm_action(sigma, space, power, twist);
            return tc::oracle::categorical_trace(action, twist);
        },
        py::arg("sigma"), py::arg("space_degrees"), py::arg("m"), py::arg("twist"),
        "Categorical trace of a permutation acting on a tensor power");
    m.def(
        "projector_dim",
        [](const std::vector<long>& space_degrees, unsigned long power,
           const tc::graded::IntTwist& twist) {
            const tc::Rat value =
                tc::oracle::projector_dim(tc::oracle::GradedVectorSpace{space_degrees}, power,
                                          twist);
            if (!tc::is_integral(value))
                throw tc::non_integral_error("projector dimension did not cancel");
            return Int(value.get_num());
        },
        py::arg("space_degrees"), py::arg("m"), py::arg("twist"));
    m.def(
        "canonical_representative",
        [](const Parts& partition) {
            return tc::oracle::canonical_representative(to_partition(partition));
        },
        py::arg("partition"));

    // chromatic decisions
    m.def("truncated_units",
          [](unsigned long p, int n) {
              std::vector<int> out;
              for (int u : tc::chromatic::truncated_units(p, n)) out.push_back(u);
              return out;
          },
          py::arg("p"), py::arg("n"));
    m.def(
        "chromatic_decision",
        [](unsigned long p, int n, const std::vector<Int>& stem_orders,
           const std::vector<Int>& alpha) {
            const tc::chromatic::StemGroup group(p, stem_orders);
            const auto d = tc::chromatic::chromatic_decision(p, n, group, alpha);
            return std::make_pair(d.omega, d.label);
        },
        py::arg("p"), py::arg("n"), py::arg("stem_orders"), py::arg("alpha"),
        "(omega, label) for the chromatic braiding character");
    m.def(
        "chromatic_character",
        [](unsigned long p, int n, const std::vector<Int>& stem_orders,
           const std::vector<Int>& alpha, unsigned long power) {
            const tc::chromatic::StemGroup group(p, stem_orders);
            return table_rows(tc::chromatic::chromatic_character(p, n, group, alpha, power));
        },
        py::arg("p"), py::arg("n"), py::arg("stem_orders"), py::arg("alpha"), py::arg("m"));
    m.def("bz2_cardinality", &tc::chromatic::bz2_cardinality, py::arg("n"));
    m.def("integral_bz2_sq", &tc::chromatic::integral_bz2_sq, py::arg("n"), py::arg("omega"));
    m.def("no_truncated_unit_check", &tc::chromatic::no_truncated_unit_check, py::arg("n"));
    m.def("loop_bz2_integral", &tc::chromatic::loop_bz2_integral, py::arg("n"));
    m.def(
        "transchromatic_table",
        [](unsigned long k, unsigned long j, int omega) {
            std::vector<py::tuple> out;
            for (const auto& row : tc::chromatic::transchromatic_table(k, j, omega))
                out.push_back(py::make_tuple(
                    row.component.coords, row.component.valuation, row.value,
                    row.action == tc::chromatic::ComponentAction::Trivial ? "trivial"
                                                                          : "induced"));
            return out;
        },
        py::arg("k"), py::arg("j"), py::arg("omega_t"),
        "Rows (coords, valuation, value, action)");
    m.def("stable_stem", &tc::chromatic::stable_stem, py::arg("stem"),
          "Cyclic orders of the stable stem (shipped range: 1..7)");
    m.def(
        "dual_stem_group",
        [](unsigned long p, int n) { return tc::chromatic::dual_stem_group(p, n).orders; },
        py::arg("p"), py::arg("n"), "p-local cyclic orders of the dual stem at height n");
}
