// Thin bridge: every call takes plain values and returns the library's JSON
// form as a string; the Python layer decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nikulin/chow.hpp"
#include "nikulin/detvar.hpp"
#include "nikulin/errors.hpp"
#include "nikulin/lattice.hpp"
#include "nikulin/positivity.hpp"
#include "nikulin/serialize.hpp"

namespace py = pybind11;
using namespace nikulin;
using serialize::json;

namespace {

positivity::SearchBounds bounds(long long a_max, long long t_max) {
  positivity::SearchBounds b{a_max, t_max};
  b.validate();
  return b;
}

std::string optional_class(const std::optional<lattice::DivisorClass>& d) {
  return (d ? serialize::to_json(*d) : json(nullptr)).dump();
}

}  // namespace

PYBIND11_MODULE(_nikulin, m) {
  m.doc() = "Exact lattice, positivity and intersection computations for Nikulin surfaces";
  py::register_exception<Error>(m, "NikulinError", PyExc_ValueError);

  m.def("profile", [](long long g) {
    const auto p = lattice::decompose_profile(g);
    return json{{"g", g}, {"k", p.k}, {"p", p.p}}.dump();
  });
  m.def("gram_matrix", [](long long g) { return serialize::to_json(lattice::gram_matrix(g)).dump(); });
  m.def("parse_divisor", [](const std::string& text) {
    return serialize::to_json(serialize::parse_divisor(text)).dump();
  });
  m.def("intersect", [](const std::string& d1, const std::string& d2, long long g) {
    return lattice::intersect(serialize::parse_divisor(d1), serialize::parse_divisor(d2), g);
  });
  m.def("ampleness_check", &positivity::ampleness_analytic_check);
  m.def("very_ample_check", [](long long g, long long mm) {
    return serialize::to_json(positivity::very_ample_check(g, mm)).dump();
  });
  m.def("rational_obstruction_search", [](long long g, long long mm, long long a, long long t) {
    return optional_class(positivity::rational_obstruction_search(g, mm, bounds(a, t)));
  });
  m.def("movable_decomposition_search",
        [](long long g, const std::string& target, long long a, long long t) {
          json pairs = json::array();
          for (const auto& [d1, d2] : positivity::movable_decomposition_search(
                   g, serialize::parse_divisor(target), bounds(a, t))) {
            pairs.push_back(json::array({serialize::to_json(d1), serialize::to_json(d2)}));
          }
          return pairs.dump();
        });
  m.def("noether_lefschetz_condition_search",
        [](long long g, long long mm, const std::string& condition, long long a, long long t) {
          return optional_class(positivity::noether_lefschetz_condition_search(
              g, mm, positivity::parse_nl_condition(condition), bounds(a, t)));
        });
  m.def("c1_pushforward_bundle", [](long long n, long long mm, long long g) {
    return serialize::to_json(chow::c1_pushforward_bundle(n, mm, g)).dump();
  });
  m.def("divisor_class", [](long long g, long long mm) {
    return serialize::to_json(chow::divisor_class(g, mm)).dump();
  });
  m.def("det_degree", [](long long r, long long e) { return detvar::det_degree(r, e).get_str(); });
  m.def("expected_rank_ideal_dim", &detvar::expected_rank_ideal_dim);
}
