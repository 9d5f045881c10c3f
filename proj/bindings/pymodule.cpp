#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mrsk/mw.hpp"
#include "mrsk/ring.hpp"
#include "mrsk/rsk.hpp"
#include "mrsk/socle.hpp"
#include "mrsk/suites.hpp"
#include "mrsk/tableaux.hpp"
#include "mrsk/words.hpp"

namespace py = pybind11;
using namespace mrsk;

namespace {

using PySegment = std::pair<int, int>;
using PyLadder = std::vector<PySegment>;
using PyTuple = std::vector<PyLadder>;

PySegment seg_out(Segment s) { return {s.begin(), s.end()}; }

PyLadder ladder_out(const Ladder& l) {
  PyLadder out;
  for (const auto& s : l.segments()) out.push_back(seg_out(s));
  return out;
}

Ladder ladder_in(const PyLadder& l) {
  std::vector<Segment> chain;
  for (const auto& [b, e] : l) chain.push_back(Segment::from_endpoints(b, e));
  return Ladder(std::move(chain));
}

LadderTuple tuple_in(const PyTuple& t) {
  LadderTuple out;
  for (const auto& l : t) out.push_back(ladder_in(l));
  return out;
}

RowTuple row_tuple_in(const std::vector<Word>& words) { return RowTuple(words); }

}  // namespace

PYBIND11_MODULE(_mrsk, m) {
  m.doc() = "multisegment combinatorics: truncation step, extraction, socles, keys";

  m.def("parse", [](const std::string& text) { return Multisegment::parse(text).str(); },
        "canonical form of a multisegment literal");
  m.def("to_json",
        [](const std::string& text) { return Multisegment::parse(text).json(); });
  m.def("from_json",
        [](const std::string& text) { return Multisegment::from_json(text).str(); });
  m.def("contragredient", [](const std::string& text) {
    return Multisegment::parse(text).contragredient().str();
  });

  m.def("mw_step", [](const std::string& text) {
    MwStepResult r = mw_step(Multisegment::parse(text));
    return std::make_pair(r.dagger.str(), seg_out(r.delta_circ));
  });
  m.def("mw_step_enhanced", [](const std::string& text) {
    MwStepResult r = mw_step_enhanced(Multisegment::parse(text));
    return std::make_pair(r.dagger.str(), seg_out(r.delta_circ));
  });
  m.def("mw_involution", [](const std::string& text) {
    return mw_involution(Multisegment::parse(text)).str();
  });

  m.def("rsk", [](const std::string& text) {
    PyTuple out;
    for (const auto& l : rsk(Multisegment::parse(text))) out.push_back(ladder_out(l));
    return out;
  });
  m.def("rsk_inverse", [](const PyTuple& t) -> py::object {
    auto rebuilt = rsk_inverse(tuple_in(t));
    if (!rebuilt) return py::none();
    return py::str(rebuilt->str());
  });
  m.def("in_image", [](const PyTuple& t) { return in_image(tuple_in(t)); });
  m.def("width", [](const std::string& text) { return width(Multisegment::parse(text)); });
  m.def("tableau_pair", [](const std::string& text) {
    TableauPair pq = from_ladder_tuple(rsk(Multisegment::parse(text)));
    return std::make_pair(pq.p.rows(), pq.q.rows());
  });

  m.def("socle", [](const std::string& m_text, const PyLadder& l) {
    return socle(Multisegment::parse(m_text), ladder_in(l)).str();
  });
  m.def("socle_chain", [](const std::string& text, bool left) {
    return socle_chain(rsk(Multisegment::parse(text)),
                       left ? SocleSide::Left : SocleSide::Right)
        .str();
  }, py::arg("multisegment"), py::arg("left") = false);

  m.def("ladder_class", [](const PyLadder& l) { return ladder_class(ladder_in(l)).str(); });
  m.def("rsk_standard_class", [](const std::string& m_text, const std::string& d_text) {
    return rsk_standard_class(Multisegment::parse(m_text), Multisegment::parse(d_text))
        .str();
  }, py::arg("multisegment"), py::arg("dummies") = "0");
  m.def("drs_check", [](const std::vector<int>& as, const std::vector<int>& bs,
                        long long size) {
    return drs_basis_check(as, bs, size).all_unimodular;
  });

  m.def("crsk", [](const std::vector<Word>& words) {
    auto [p, q] = crsk(row_tuple_in(words));
    return std::make_pair(p.rows(), q.rows());
  });
  m.def("keys", [](const std::vector<std::vector<int>>& rows) {
    KeyData k = keys(Tableau(rows));
    py::dict out;
    out["left_key"] = k.left_key.rows();
    out["right_key"] = k.right_key.rows();
    out["left_weight"] = k.left_weight;
    out["right_weight"] = k.right_weight;
    return out;
  });
  m.def("is_flagged",
        [](const std::vector<Word>& words) { return is_flagged(row_tuple_in(words)); });
  m.def("key_condition",
        [](const std::vector<Word>& words) { return key_condition(row_tuple_in(words)); });
  m.def("bruhat_leq", [](std::vector<int> a, std::vector<int> b) {
    return bruhat_leq(std::move(a), std::move(b));
  });

  m.def("run_suite", [](const std::string& name, int lo, int hi, int max_segments,
                        int dummy_budget, int jobs) {
    EnumSpec spec{.lo = lo, .hi = hi, .max_segments = max_segments,
                  .dummy_budget = dummy_budget};
    SuiteReport rep = run_suite(name, spec, jobs);
    py::dict out;
    out["suite"] = rep.name;
    out["instances"] = rep.instances;
    out["failures"] = rep.failure_count;
    out["assertion_suite"] = rep.assertion_suite;
    py::dict tallies;
    for (const auto& [k, v] : rep.tallies) tallies[py::str(k)] = v;
    out["tallies"] = tallies;
    return out;
  }, py::arg("name"), py::arg("lo") = 1, py::arg("hi") = 3, py::arg("max_segments") = 3,
     py::arg("dummy_budget") = 0, py::arg("jobs") = 1);

  m.def("suites", []() {
    std::vector<std::pair<std::string, std::string>> out = suite_catalog();
    return out;
  });
}
