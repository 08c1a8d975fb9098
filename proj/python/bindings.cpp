// Copyright 2020 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python module _mixcut. Rationals cross the boundary as fractions.Fraction;
// scenario indices are 0-based as in the C++ library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <vector>

#include "mixcut/aggregated.hpp"
#include "mixcut/counterexample.hpp"
#include "mixcut/cut.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/instance.hpp"
#include "mixcut/mixing.hpp"

namespace py = pybind11;

namespace mixcut {
namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Rational rational(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw ValidationError("expected a number, got bool");
  return parse_rational(py::str(h).cast<std::string>());
}

RationalVector vector_of(const py::handle& h) {
  RationalVector out;
  for (const auto& item : h) out.push_back(rational(item));
  return out;
}

py::list list_of(const RationalVector& v) {
  py::list out;
  for (const auto& r : v) out.append(fraction(r));
  return out;
}

Point point_of(const py::handle& y, const py::handle& z) { return {vector_of(y), vector_of(z)}; }

py::dict cut_dict(const LinearCut& cut) {
  py::dict d;
  d["alpha"] = list_of(cut.alpha);
  d["beta"] = list_of(cut.beta);
  d["gamma"] = fraction(cut.gamma);
  d["kind"] = kind_name(cut.kind);
  d["text"] = format_cut(cut);
  return d;
}

py::list cut_list(const std::vector<LinearCut>& cuts) {
  py::list out;
  for (const auto& c : cuts) out.append(cut_dict(c));
  return out;
}

py::dict witness_dict(const Witness& w) {
  py::dict d;
  d["reason"] = reason_name(w.reason);
  d["support"] = w.support;
  d["slack_column"] = w.slack;
  d["y"] = list_of(w.point.y);
  d["z"] = list_of(w.point.z);
  return d;
}

MixingInstance build_instance(const py::handle& weights, const py::handle& lower,
                              const py::handle& epsilon, const py::handle& probabilities) {
  RationalMatrix w;
  for (const auto& row : weights) w.push_back(vector_of(row));
  std::optional<RationalVector> p;
  if (!probabilities.is_none()) p = vector_of(probabilities);
  return make_instance(std::move(w), lower.is_none() ? RationalVector{} : vector_of(lower),
                       rational(epsilon), std::move(p));
}

py::dict diagnose_dict(const MixingInstance& inst) {
  HullDiagnosis d = diagnose(inst);
  py::dict out;
  out["i_bar"] = d.i_bar;
  out["c1"] = d.c1_holds;
  out["c2"] = d.c2_holds;
  out["negligible"] = d.negligible;
  out["l_w"] = d.l_w.infinite ? py::object(py::float_(INFINITY)) : fraction(d.l_w.value);
  out["eps_le_lw"] = d.eps_le_lw;
  out["g_submodular"] = d.g_submodular;
  out["sufficient"] = d.sufficient;
  out["text"] = format_diagnosis(inst, d);
  return out;
}

}  // namespace
}  // namespace mixcut

PYBIND11_MODULE(_mixcut, m) {
  using namespace mixcut;
  m.doc() = "Exact cuts and hull diagnostics for mixing sets with a linking constraint.";

  static py::exception<Error> error(m, "MixcutError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<MixingInstance>(m, "Instance")
      .def(py::init(&build_instance), py::arg("weights"), py::arg("lower") = py::none(),
           py::arg("epsilon") = 0, py::arg("probabilities") = py::none())
      .def_static("from_json", &parse_instance, py::arg("text"))
      .def_static("load", &load_instance, py::arg("path"))
      .def("to_json", &serialize_instance)
      .def_property_readonly("n", &MixingInstance::n)
      .def_property_readonly("k", &MixingInstance::k)
      .def_property_readonly("weights",
                             [](const MixingInstance& i) {
                               py::list rows;
                               for (const auto& r : i.weights) rows.append(list_of(r));
                               return rows;
                             })
      .def_property_readonly("lower", [](const MixingInstance& i) { return list_of(i.lower); })
      .def_property_readonly("epsilon",
                             [](const MixingInstance& i) { return fraction(i.epsilon); });

  m.def("diagnose", &diagnose_dict, py::arg("instance"));

  m.def(
      "separate_mixing",
      [](const MixingInstance& inst, const py::object& y, const py::object& z) {
        py::list out;
        for (const auto& s : separate_mixing(inst, point_of(y, z))) {
          py::dict d = cut_dict(s.cut);
          d["violation"] = fraction(s.violation);
          out.append(d);
        }
        return out;
      },
      py::arg("instance"), py::arg("y"), py::arg("z"));

  m.def(
      "separate_aggregated",
      [](const MixingInstance& inst, const py::object& y, const py::object& z) -> py::object {
        auto s = separate_aggregated(inst, point_of(y, z));
        if (!s) return py::none();
        py::dict d = cut_dict(s->cut);
        d["theta"] = s->theta;
        d["violation"] = fraction(s->violation);
        return d;
      },
      py::arg("instance"), py::arg("y"), py::arg("z"));

  m.def(
      "aggregated_cut",
      [](const MixingInstance& inst, const Sequence& theta) {
        return cut_dict(aggregated_cut(inst, theta));
      },
      py::arg("instance"), py::arg("theta"));

  m.def(
      "sufficient_cut_family",
      [](const MixingInstance& inst) { return cut_list(sufficient_cut_family(inst)); },
      py::arg("instance"));

  m.def(
      "find_witness", [](const MixingInstance& inst) { return witness_dict(find_witness(inst)); },
      py::arg("instance"));

  m.def(
      "check_sufficiency",
      [](const MixingInstance& inst, std::uint64_t seed, int samples) {
        SufficiencyReport r = check_sufficiency(inst, {seed, samples});
        py::dict d;
        d["sufficient"] = r.diagnosis.sufficient;
        d["passed"] = r.passed;
        d["samples_checked"] = r.samples_checked;
        d["samples_outside"] = r.samples_outside;
        d["witness"] = r.witness ? py::object(witness_dict(*r.witness)) : py::none();
        d["separator"] = r.separator ? py::object(cut_dict(*r.separator)) : py::none();
        return d;
      },
      py::arg("instance"), py::arg("seed") = 1, py::arg("samples") = 200);

  m.def(
      "quantile_lower_bounds",
      [](const MixingInstance& inst, const py::object& risk) {
        return list_of(quantile_lower_bounds(inst, rational(risk)));
      },
      py::arg("instance"), py::arg("risk"));
}
