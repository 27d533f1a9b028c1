// Python bindings for the drtcrit library.  Arbitrary-precision integers
// cross the boundary as native Python ints (decimal-string bridge) and
// integer matrices as nested lists.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drt/abelian_group.hpp"
#include "drt/bigint.hpp"
#include "drt/critical_group.hpp"
#include "drt/cyclotomic.hpp"
#include "drt/finite_field.hpp"
#include "drt/group_structure.hpp"
#include "drt/hadamard.hpp"
#include "drt/int_matrix.hpp"
#include "drt/sdf.hpp"
#include "drt/snf.hpp"
#include "drt/theory.hpp"
#include "drt/tournament.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

template <>
struct type_caster<drt::BigInt> {
  PYBIND11_TYPE_CASTER(drt::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = drt::BigInt(py::cast<std::string>(py::str(src)));
    return true;
  }

  static handle cast(const drt::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<drt::IntMatrix> {
  PYBIND11_TYPE_CASTER(drt::IntMatrix, const_name("list[list[int]]"));

  bool load(handle src, bool convert) {
    make_caster<std::vector<std::vector<drt::BigInt>>> rows;
    if (!rows.load(src, convert)) return false;
    auto grid = cast_op<std::vector<std::vector<drt::BigInt>>&&>(std::move(rows));
    const std::size_t r = grid.size();
    const std::size_t c = r ? grid[0].size() : 0;
    for (const auto& row : grid)
      if (row.size() != c) return false;
    value = drt::IntMatrix(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) value.at(i, j) = grid[i][j];
    return true;
  }

  static handle cast(const drt::IntMatrix& m, return_value_policy, handle) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < m.cols(); ++j)
        row.append(py::cast(m.at(i, j)));
      rows.append(row);
    }
    return rows.release();
  }
};

} // namespace detail
} // namespace pybind11

namespace {

std::shared_ptr<const drt::FiniteField> field(std::int64_t p, int t) {
  return drt::ModulusTable::builtin().make_field(p, t);
}

drt::Tournament paley_tournament(std::int64_t q) {
  const auto f = drt::factorize(q);
  if (q < 3 || f.size() != 1 || q % 4 != 3)
    throw std::invalid_argument("need a prime power q = 3 (mod 4)");
  const auto F = field(f.begin()->first.convert_to<std::int64_t>(), f.begin()->second);
  return drt::build_cayley_drt(F->additive_group(), drt::squares(*F));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "doubly-regular tournaments, skew difference families, and critical groups";

  py::class_<drt::AbelianGroup>(m, "AbelianGroup")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("cyclic_orders"))
      .def_property_readonly("order", &drt::AbelianGroup::order)
      .def_property_readonly("invariant_factors", &drt::AbelianGroup::invariant_factors)
      .def("exponent", &drt::AbelianGroup::exponent)
      .def("add", &drt::AbelianGroup::add)
      .def("neg", &drt::AbelianGroup::neg)
      .def("sub", &drt::AbelianGroup::sub)
      .def("describe", &drt::AbelianGroup::describe)
      .def("element_label", [](const drt::AbelianGroup& g, std::int64_t i) {
        return drt::element_label(g, i);
      })
      .def("__eq__", [](const drt::AbelianGroup& a, const drt::AbelianGroup& b) { return a == b; })
      .def("__len__", &drt::AbelianGroup::order)
      .def("__repr__", &drt::AbelianGroup::describe);

  m.def("make_cyclic", &drt::make_cyclic, py::arg("n"));
  m.def("gf_additive_group",
        [](std::int64_t p, int t) { return field(p, t)->additive_group(); },
        py::arg("p"), py::arg("t"), "Additive group of GF(p^t)");
  m.def("gf_squares",
        [](std::int64_t p, int t) {
          const auto F = field(p, t);
          return drt::squares(*F);
        },
        py::arg("p"), py::arg("t"), "Nonzero squares of GF(p^t) as additive-group indices");

  py::class_<drt::SkewDifferenceFamily>(m, "SkewDifferenceFamily")
      .def_readonly("group", &drt::SkewDifferenceFamily::group)
      .def_readonly("blocks", &drt::SkewDifferenceFamily::blocks)
      .def_readonly("block_size", &drt::SkewDifferenceFamily::block_size)
      .def_readonly("uniform_difference_count",
                    &drt::SkewDifferenceFamily::uniform_difference_count)
      .def("to_json", [](const drt::SkewDifferenceFamily& f) { return drt::to_json_string(f); })
      .def_static("from_json", &drt::sdf_from_json_string, py::arg("text"))
      .def("__eq__", [](const drt::SkewDifferenceFamily& a, const drt::SkewDifferenceFamily& b) {
        return a == b;
      });

  m.def("validate_sdf",
        [](const drt::AbelianGroup& g, std::vector<std::vector<std::int64_t>> blocks) {
          auto v = drt::validate_sdf(g, std::move(blocks));
          return py::make_tuple(v.ok, v.violation, v.family);
        },
        py::arg("group"), py::arg("blocks"),
        "Returns (ok, violation, family or None)");
  m.def("paley_set", [](std::int64_t p, int t) { return drt::paley_set(field(p, t)); },
        py::arg("p"), py::arg("t"));
  m.def("ding_yuan_set", &drt::ding_yuan_set, py::arg("n"),
        "One-block family {x^10 - x^6 - x^2} over GF(3^n), n odd");
  m.def("search_sdf",
        [](const drt::AbelianGroup& g, int num_blocks, std::int64_t candidate_budget,
           std::int64_t max_results) {
          drt::SdfSearchOptions opts;
          if (candidate_budget > 0) opts.candidate_budget = candidate_budget;
          opts.max_results = max_results;
          return drt::search_sdf(g, num_blocks, opts);
        },
        py::arg("group"), py::arg("num_blocks"), py::arg("candidate_budget") = 0,
        py::arg("max_results") = 0);

  py::class_<drt::Tournament>(m, "Tournament")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<std::uint8_t>>>(),
           py::arg("vertex_labels"), py::arg("adjacency"))
      .def("__len__", &drt::Tournament::size)
      .def("arc", &drt::Tournament::arc, py::arg("from_vertex"), py::arg("to_vertex"))
      .def_property_readonly("vertex_labels", &drt::Tournament::vertex_labels)
      .def_property_readonly("layout_kind",
                             [](const drt::Tournament& t) { return t.layout().kind; })
      .def_property_readonly("drt_params",
                             [](const drt::Tournament& t) -> py::object {
                               if (!t.drt_params()) return py::none();
                               const auto& p = *t.drt_params();
                               return py::make_tuple(p.n, p.k, p.lambda);
                             })
      .def("out_degree", &drt::Tournament::out_degree)
      .def("common_out_neighbours", &drt::Tournament::common_out_neighbours)
      .def("adjacency_matrix", &drt::Tournament::adjacency_matrix)
      .def("laplacian", &drt::Tournament::laplacian)
      .def("to_json", [](const drt::Tournament& t) { return drt::to_json_string(t); })
      .def_static("from_json", &drt::tournament_from_json_string, py::arg("text"))
      .def("__eq__",
           [](const drt::Tournament& a, const drt::Tournament& b) { return a == b; });

  m.def("validate_drt",
        [](drt::Tournament& t) {
          auto c = drt::validate_drt(t);
          return py::make_tuple(c.ok, c.violation);
        },
        py::arg("tournament"), "Returns (ok, violation); stamps parameters on success");
  m.def("check_drt_identities",
        [](const drt::Tournament& t) {
          auto r = drt::check_drt_identities(t);
          return py::make_tuple(r.ok, r.failure, r.checked);
        },
        py::arg("tournament"));
  m.def("build_cayley_drt", &drt::build_cayley_drt, py::arg("group"), py::arg("block"));
  m.def("build_sz", &drt::build_sz, py::arg("group"), py::arg("a"), py::arg("b"));
  m.def("build_w", &drt::build_w, py::arg("group"), py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("d"));
  m.def("paley_tournament", &paley_tournament, py::arg("q"));

  py::class_<drt::GroupStructure>(m, "GroupStructure")
      .def(py::init<>())
      .def_static("from_elementary", &drt::GroupStructure::from_elementary, py::arg("divisors"))
      .def_static("from_invariant_factors", &drt::GroupStructure::from_invariant_factors,
                  py::arg("factors"))
      .def_static("cyclic_power", &drt::GroupStructure::cyclic_power, py::arg("m"),
                  py::arg("copies"))
      .def("direct_sum", &drt::GroupStructure::direct_sum)
      .def_property_readonly("order", &drt::GroupStructure::order)
      .def_property_readonly("elementary_divisors", &drt::GroupStructure::elementary_divisors)
      .def_property_readonly("invariant_factors", &drt::GroupStructure::invariant_factors)
      .def("rank_at", &drt::GroupStructure::rank_at, py::arg("p"))
      .def("describe", &drt::GroupStructure::describe)
      .def("to_json", &drt::GroupStructure::to_json)
      .def_static("from_json", &drt::GroupStructure::from_json, py::arg("text"))
      .def("__eq__",
           [](const drt::GroupStructure& a, const drt::GroupStructure& b) { return a == b; })
      .def("__repr__", &drt::GroupStructure::describe);

  m.def("structure_diff", &drt::structure_diff, py::arg("a"), py::arg("b"));
  m.def("critical_group",
        [](const drt::IntMatrix& q, std::vector<drt::BigInt> prime_hints,
           drt::BigInt torsion_order, std::size_t full_snf_limit) {
          drt::CriticalGroupOptions opts;
          opts.prime_hints = std::move(prime_hints);
          opts.torsion_order = std::move(torsion_order);
          opts.full_snf_limit = full_snf_limit;
          return drt::critical_group(q, opts);
        },
        py::arg("laplacian"), py::arg("prime_hints") = std::vector<drt::BigInt>{},
        py::arg("torsion_order") = drt::BigInt(0), py::arg("full_snf_limit") = 64);
  m.def("drt_critical_group", &drt::drt_critical_group, py::arg("tournament"));
  m.def("drt_torsion_order", &drt::drt_torsion_order, py::arg("lambda_"));

  m.def("snf",
        [](const drt::IntMatrix& mat) {
          auto r = drt::snf(mat);
          return py::make_tuple(r.invariant_factors, r.free_rank);
        },
        py::arg("matrix"), "Returns (invariant_factors, free_rank)");
  m.def("snf_minor_gcd",
        [](const drt::IntMatrix& mat, std::size_t max_dim) {
          auto r = drt::snf_minor_gcd(mat, max_dim);
          return py::make_tuple(r.invariant_factors, r.free_rank);
        },
        py::arg("matrix"), py::arg("max_dim") = 8);
  m.def("determinant", &drt::determinant, py::arg("matrix"));
  m.def("local_snf",
        [](const drt::IntMatrix& mat, std::int64_t p, int K) {
          auto r = drt::local_snf(mat, p, K);
          return py::make_tuple(r.valuations, r.capped, r.modulus_exponent);
        },
        py::arg("matrix"), py::arg("p"), py::arg("K") = 0,
        "Returns (valuations, capped, modulus_exponent)");
  m.def("p_rank", &drt::p_rank, py::arg("matrix"), py::arg("p"));
  m.def("divisibility_product_check", &drt::divisibility_product_check, py::arg("a"),
        py::arg("b"));

  py::class_<drt::SignMatrix>(m, "SignMatrix")
      .def(py::init<std::size_t>(), py::arg("order"))
      .def_property_readonly("order", &drt::SignMatrix::order)
      .def("__getitem__",
           [](const drt::SignMatrix& h, std::pair<std::size_t, std::size_t> ij) {
             if (ij.first >= h.order() || ij.second >= h.order())
               throw py::index_error();
             return h.at(ij.first, ij.second);
           })
      .def("to_int_matrix", &drt::SignMatrix::to_int_matrix)
      .def("to_text", &drt::SignMatrix::to_text)
      .def_static("from_text", &drt::SignMatrix::from_text, py::arg("text"))
      .def("__eq__",
           [](const drt::SignMatrix& a, const drt::SignMatrix& b) { return a == b; });

  m.def("is_hadamard", &drt::is_hadamard, py::arg("h"));
  m.def("is_skew", &drt::is_skew, py::arg("h"));
  m.def("drt_to_hadamard", &drt::drt_to_hadamard, py::arg("tournament"));
  m.def("hadamard_to_drt", &drt::hadamard_to_drt, py::arg("h"));
  m.def("normalize_skew_hadamard", &drt::normalize_skew_hadamard, py::arg("h"));
  m.def("check_hadamard_snf",
        [](const drt::SignMatrix& h) {
          auto c = drt::check_hadamard_snf(h);
          return py::make_tuple(c.ok, c.report);
        },
        py::arg("h"), "Returns (ok, report)");

  py::class_<drt::Prediction>(m, "Prediction")
      .def_readonly("family", &drt::Prediction::family)
      .def_readonly("lambda_", &drt::Prediction::lambda)
      .def_readonly("p", &drt::Prediction::p)
      .def_readonly("t", &drt::Prediction::t)
      .def_readonly("structure", &drt::Prediction::structure)
      .def_readonly("p_ranks", &drt::Prediction::p_ranks)
      .def("__repr__",
           [](const drt::Prediction& p) { return p.family + ": " + p.structure.describe(); });

  m.def("predict_k1", &drt::predict_k1, py::arg("lambda_"));
  m.def("predict_k1_complement_order", &drt::predict_k1_complement_order, py::arg("lambda_"));
  m.def("predict_sz", &drt::predict_sz, py::arg("lambda_"));
  m.def("predict_w", &drt::predict_w, py::arg("lambda_"));
  m.def("predict_paley", &drt::predict_paley, py::arg("p"), py::arg("t"));
  m.def("carry_count", &drt::carry_count, py::arg("i"), py::arg("p"), py::arg("t"));
  m.def("counting_profile",
        [](std::int64_t p, int t) { return drt::counting_profile(p, t).counts; },
        py::arg("p"), py::arg("t"), "Map: carry count -> how many i produce it");
  m.def("e_formula", &drt::e_formula, py::arg("p"), py::arg("t"), py::arg("i"));

  py::class_<drt::CyclotomicInt>(m, "CyclotomicInt")
      .def_property_readonly("conductor", &drt::CyclotomicInt::conductor)
      .def_property_readonly("coefficients", &drt::CyclotomicInt::coefficients)
      .def("is_zero", &drt::CyclotomicInt::is_zero)
      .def("embed", &drt::CyclotomicInt::embed)
      .def("__eq__",
           [](const drt::CyclotomicInt& a, const drt::CyclotomicInt& b) { return a == b; })
      .def("__repr__", &drt::CyclotomicInt::str);

  m.def("jacobi_sum",
        [](std::int64_t a, std::int64_t b, std::int64_t p, int t) {
          return drt::jacobi_sum(a, b, field(p, t));
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("t"),
        "J(T^a, T^b) over GF(p^t) in Z[zeta_{q-1}]");
  m.def("verify_stickelberger",
        [](std::int64_t p, int t) {
          auto r = drt::verify_stickelberger(field(p, t));
          return py::make_tuple(r.ok, r.carry_multiset, r.valuation_multiset, r.report);
        },
        py::arg("p"), py::arg("t"),
        "Returns (ok, carry_multiset, valuation_multiset, report)");
  m.def("character_block_check",
        [](const drt::Tournament& t, std::int64_t chi, double tol) {
          auto r = drt::character_block_check(t, chi, tol);
          std::map<std::string, double> items;
          for (const auto& it : r.items) items[it.name] = it.residual;
          return py::make_tuple(r.ok, r.kind, items, r.report);
        },
        py::arg("tournament"), py::arg("chi_index"), py::arg("tolerance") = 1e-9,
        "Returns (ok, kind, residuals, report)");
}
