#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "butson/bh_matrix.hpp"
#include "butson/cyclotomic.hpp"
#include "butson/errors.hpp"
#include "butson/matrix_io.hpp"
#include "butson/morphism.hpp"

namespace py = pybind11;
using namespace butson;

namespace {

BhMatrix from_rows(int k, const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int64_t> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw py::value_error("matrix rows must all have length n");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return BhMatrix(n, k, flat);
}

std::vector<std::vector<int>> to_rows(const BhMatrix& m) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < m.order(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rows;
}

}  // namespace

PYBIND11_MODULE(_butson, m) {
  m.doc() = "Butson-Hadamard matrices: construction, order reduction and exact verification";

  auto base = py::register_exception<Error>(m, "ButsonError");
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<OverflowError>(m, "ArithmeticOverflow", base.ptr());
  py::register_exception<UnsupportedOrder>(m, "UnsupportedOrder", base.ptr());
  py::register_exception<OrderMismatch>(m, "OrderMismatch", base.ptr());

  m.def("cyclotomic_poly", &cyclotomic_poly, py::arg("k"), "Coefficients of Phi_k, ascending degree.");

  py::class_<CycloElement>(m, "CycloElement")
      .def(py::init([](int k, std::vector<std::int64_t> counts) { return CycloElement(k, std::move(counts)); }),
           py::arg("k"), py::arg("counts"))
      .def_static("root", &CycloElement::root, py::arg("k"), py::arg("a"))
      .def_property_readonly("order", &CycloElement::order)
      .def_property_readonly("counts", [](const CycloElement& x) {
        return std::vector<std::int64_t>(x.counts().begin(), x.counts().end());
      })
      .def("is_zero", &CycloElement::is_zero)
      .def("conj", &CycloElement::conj)
      .def("reduced", &CycloElement::reduced)
      .def("__add__", [](const CycloElement& a, const CycloElement& b) { return a + b; })
      .def("__sub__", [](const CycloElement& a, const CycloElement& b) { return a - b; })
      .def("__mul__", [](const CycloElement& a, const CycloElement& b) { return a * b; })
      .def("__eq__", &CycloElement::equals);

  py::class_<BhMatrix>(m, "BhMatrix")
      .def(py::init(&from_rows), py::arg("k"), py::arg("rows"))
      .def_property_readonly("n", &BhMatrix::order)
      .def_property_readonly("k", &BhMatrix::root_order)
      .def("rows", &to_rows)
      .def("__eq__", [](const BhMatrix& a, const BhMatrix& b) { return a == b; })
      .def("__repr__", [](const BhMatrix& a) {
        return "BhMatrix(n=" + std::to_string(a.order()) + ", k=" + std::to_string(a.root_order()) + ")";
      });

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_property_readonly("valid", &VerifyReport::valid)
      .def_property_readonly("witness", [](const VerifyReport& r) -> py::object {
        if (!r.witness) return py::none();
        return py::make_tuple(r.witness->row_i, r.witness->row_j, r.witness->residue);
      })
      .def("__bool__", &VerifyReport::valid);

  py::class_<MonomialImage>(m, "MonomialImage")
      .def_readonly("u", &MonomialImage::u)
      .def_readonly("v", &MonomialImage::v)
      .def("__eq__", [](const MonomialImage& a, const MonomialImage& b) { return a == b; });

  py::class_<ReductionPlan>(m, "ReductionPlan")
      .def_readonly("source_order", &ReductionPlan::source_order)
      .def_readonly("factor", &ReductionPlan::factor)
      .def_readonly("target_order", &ReductionPlan::target_order)
      .def_readonly("primes", &ReductionPlan::primes);

  m.def("fourier", &fourier, py::arg("m"));
  m.def("kronecker", &kronecker, py::arg("a"), py::arg("b"));
  m.def("gram_entry", &gram_entry, py::arg("a"), py::arg("i"), py::arg("j"));
  m.def("verify", &verify, py::arg("a"));
  m.def("read_matrix", py::overload_cast<std::string_view>(&read_matrix), py::arg("text"));
  m.def("write_matrix", py::overload_cast<const BhMatrix&>(&write_matrix), py::arg("m"));

  m.def("psi_scalar", [](std::int64_t a, int k, int p) { return psi_scalar(a, MorphismParams(k, p)); },
        py::arg("a"), py::arg("k"), py::arg("p"));
  m.def("compose", [](const MonomialImage& x, const MonomialImage& y, int k, int p) {
        return compose(x, y, MorphismParams(k, p));
      },
        py::arg("x"), py::arg("y"), py::arg("k"), py::arg("p"));
  m.def("expand", [](const BhMatrix& h, const BhMatrix& c, int p) {
        return expand(h, c, MorphismParams(h.root_order(), p));
      },
        py::arg("h"), py::arg("c"), py::arg("p"));
  m.def("reduce_once", [](const BhMatrix& h, int p, std::optional<BhMatrix> c, bool check) {
        return reduce_once(h, p, c, {.post_check = check});
      },
        py::arg("h"), py::arg("p"), py::arg("c") = py::none(), py::arg("check") = false);
  m.def("plan_reduction", &plan_reduction, py::arg("k"), py::arg("m"));
  m.def("reduce_full", [](const BhMatrix& h, int factor, bool check) {
        return reduce_full(h, factor, {.post_check = check});
      },
        py::arg("h"), py::arg("m"), py::arg("check") = false);
}
