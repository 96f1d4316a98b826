#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permstat/alternating.hpp"
#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"
#include "permstat/distributions.hpp"
#include "permstat/numbers.hpp"
#include "permstat/patterns.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/qstats.hpp"

namespace py = pybind11;

namespace {

using permstat::Permutation;

Permutation to_perm(const std::vector<int>& window) {
  return Permutation(window);
}

py::int_ to_py_int(const permstat::BigNat& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::dict record_to_dict(const permstat::StatRecord& rec) {
  py::dict d;
  d["q"] = rec.q;
  d["degree"] = rec.degree;
  d["inv_q"] = rec.inv_q;
  d["ell_q"] = rec.ell_q;
  d["del_q"] = rec.del_q;
  d["des_q"] = rec.des_q;
  d["maj_q"] = rec.maj_q;
  d["rmaj_q"] = rec.rmaj_q;
  d["Del_q"] = rec.del_set;
  d["Des_q"] = rec.des_set;
  return d;
}

permstat::FilterSpec make_filter(const std::string& name, const std::vector<int>& b1,
                                 const std::vector<int>& b2) {
  using permstat::FilterSpec;
  if (name == "all") return FilterSpec::all();
  if (name == "avoid_q") return FilterSpec::avoid_q();
  if (name == "inverse_avoid_q") return FilterSpec::inverse_avoid_q();
  if (name == "inv_des_equals") return FilterSpec::inv_des_equals(b1);
  if (name == "inv_des_del_equals") return FilterSpec::inv_des_del_equals(b1, b2);
  throw std::invalid_argument("unknown filter '" + name + "'");
}

py::dict report_to_dict(const permstat::VerificationReport& report) {
  py::dict d;
  d["theorem"] = report.theorem;
  d["n"] = report.n;
  d["q"] = report.q;
  d["m"] = report.m;
  d["pass"] = report.pass;
  d["classes"] = report.classes_checked;
  if (report.witness) {
    py::dict w;
    w["context"] = report.witness->context;
    w["lhs"] = report.witness->lhs;
    w["rhs"] = report.witness->rhs;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_permstat, m) {
  m.doc() = "Exact q-statistics on symmetric groups";

  m.def("compose", [](const std::vector<int>& f, const std::vector<int>& g) {
    return to_perm(f).compose(to_perm(g)).window();
  });
  m.def("inverse", [](const std::vector<int>& p) { return to_perm(p).inverse().window(); });
  m.def("descent_set", [](const std::vector<int>& p) { return to_perm(p).descent_set(); });
  m.def("inversion_count",
        [](const std::vector<int>& p) { return to_perm(p).inversion_count(); });

  m.def("decompose",
        [](const std::vector<int>& p) { return word_to_string(decompose(to_perm(p))); });
  m.def("recompose", [](const std::string& word) {
    return permstat::recompose(permstat::string_to_word(word)).window();
  });

  m.def("stat_record",
        [](const std::vector<int>& p, int q) { return record_to_dict(stat_record(to_perm(p), q)); },
        py::arg("window"), py::arg("q") = 1);
  m.def("inv_q", [](const std::vector<int>& p, int q) { return permstat::inv_q(to_perm(p), q); });
  m.def("ell_q", [](const std::vector<int>& p, int q) { return permstat::ell_q(to_perm(p), q); });
  m.def("del_q", [](const std::vector<int>& p, int q) { return permstat::del_q(to_perm(p), q); });
  m.def("des_q", [](const std::vector<int>& p, int q) { return permstat::des_q(to_perm(p), q); });
  m.def("maj_q", [](const std::vector<int>& p, int q) { return permstat::maj_q(to_perm(p), q); });
  m.def("rmaj_q",
        [](const std::vector<int>& p, int q) { return permstat::rmaj_q(to_perm(p), q); });
  m.def("del_set_q",
        [](const std::vector<int>& p, int q) { return permstat::del_set_q(to_perm(p), q); });
  m.def("des_set_q",
        [](const std::vector<int>& p, int q) { return permstat::des_set_q(to_perm(p), q); });

  m.def("f_q", [](const std::vector<int>& p, int q) { return permstat::f_q(to_perm(p), q).window(); });
  m.def("fiber", [](const std::vector<int>& base, int q) {
    std::vector<std::vector<int>> members;
    for (const auto& member : permstat::fiber(to_perm(base), q).members)
      members.push_back(member.window());
    return members;
  });

  m.def("avoids_q",
        [](const std::vector<int>& p, int q) { return permstat::avoids_q(to_perm(p), q); });
  m.def("pattern_witness", [](const std::vector<int>& p, int q) -> py::object {
    const auto witness = permstat::contains_pat_q(to_perm(p), q);
    if (!witness) return py::none();
    py::dict d;
    d["positions"] = witness->positions;
    d["bottom"] = witness->bottom;
    return d;
  });

  m.def("h_q", [](int n, int q) { return to_py_int(permstat::h_q(n, q)); });
  m.def("bell_q", [](int n, int q) { return to_py_int(permstat::bell_q(n, q)); });
  m.def("stirling2", [](int n, int k) { return to_py_int(permstat::stirling2(n, k)); });
  m.def("stirling1_unsigned",
        [](int n, int k) { return to_py_int(permstat::stirling1_unsigned(n, k)); });
  m.def("c_q", [](int n, int k, int q) { return to_py_int(permstat::c_q(n, k, q)); });

  m.def("distribution",
        [](int m_deg, int q, const std::vector<std::string>& stats, const std::string& filter,
           const std::vector<int>& b1, const std::vector<int>& b2, int threads) {
          std::vector<permstat::StatId> ids;
          for (const auto& name : stats) ids.push_back(permstat::parse_stat_id(name));
          return permstat::distribution(m_deg, q, ids, make_filter(filter, b1, b2), threads)
              .to_string();
        },
        py::arg("m"), py::arg("q"), py::arg("stats"), py::arg("filter") = "all",
        py::arg("b1") = std::vector<int>{}, py::arg("b2") = std::vector<int>{},
        py::arg("threads") = 0);

  m.def("verify",
        [](const std::string& theorem, int n, int q, int threads, int budget) {
          return report_to_dict(permstat::verify(theorem, n, q, threads, budget));
        },
        py::arg("theorem"), py::arg("n"), py::arg("q"), py::arg("threads") = 0,
        py::arg("budget") = 9);
  m.def("verify_theorem_ids", [] { return permstat::verify_theorem_ids(); });

  m.def("a_decompose", [](const std::vector<int>& p) {
    return a_word_to_string(permstat::a_decompose(to_perm(p)));
  });
  m.def("ell_A", [](const std::vector<int>& p) { return permstat::ell_A(to_perm(p)); });
  m.def("del_A", [](const std::vector<int>& p) { return permstat::del_A(to_perm(p)); });
  m.def("des_set_A", [](const std::vector<int>& p) { return permstat::des_set_A(to_perm(p)); });
  m.def("rmaj_A", [](const std::vector<int>& p) { return permstat::rmaj_A(to_perm(p)); });
  m.def("restrict_f",
        [](const std::vector<int>& p) { return permstat::restrict_f(to_perm(p)).window(); });

  m.attr("__version__") = "1.0.0";
}
