// Command line front end over the library.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mrsk/mw.hpp"
#include "mrsk/ring.hpp"
#include "mrsk/rsk.hpp"
#include "mrsk/socle.hpp"
#include "mrsk/suites.hpp"
#include "mrsk/tableaux.hpp"
#include "mrsk/words.hpp"

using namespace mrsk;

namespace {

nlohmann::json segment_json(Segment s) {
  return nlohmann::json::array({s.begin(), s.end()});
}

nlohmann::json ladder_json(const Ladder& l) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : l.segments()) arr.push_back(segment_json(s));
  return arr;
}

nlohmann::json tuple_json(const LadderTuple& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : t) arr.push_back(ladder_json(l));
  return arr;
}

nlohmann::json inverted_json(const InvertedTableau& y) {
  return nlohmann::json::parse(y.json());
}

Ladder parse_ladder(const std::string& text) {
  return Ladder::from_multisegment(Multisegment::parse(text));
}

LadderTuple parse_tuple(const std::string& text) {
  LadderTuple t;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    t.push_back(parse_ladder(part));
  }
  return t;
}

// "3:1,2;2:2" maps word index to its letters.
RowTuple parse_row_tuple(const std::string& text) {
  RowTuple u;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("tuple part needs the form index:letters");
    const std::size_t index = std::stoul(part.substr(0, colon));
    Word w;
    std::stringstream values(part.substr(colon + 1));
    std::string v;
    while (std::getline(values, v, ','))
      if (!v.empty()) w.push_back(std::stoi(v));
    u.set(index, w);
  }
  return u;
}

// rows separated by ';', entries by ','
Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<int> row;
    std::stringstream entries(part);
    std::string v;
    while (std::getline(entries, v, ','))
      if (!v.empty()) row.push_back(std::stoi(v));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string v;
  while (std::getline(ss, v, ','))
    if (!v.empty()) out.push_back(std::stoi(v));
  return out;
}

std::string tuple_text(const RowTuple& u) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = u.max_index(); i >= 1; --i) {
    if (u.at(i).empty()) continue;
    if (!first) os << ";";
    first = false;
    os << i << ":";
    for (std::size_t k = 0; k < u.at(i).size(); ++k) {
      if (k) os << ",";
      os << u.at(i)[k];
    }
  }
  return first ? "-" : os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multisegment combinatorics toolkit"};
  app.require_subcommand(1);

  // ---- mw ----
  std::string mw_input;
  bool mw_involution_flag = false, mw_dual = false, mw_enhanced = false, mw_step_flag = false;
  auto* mw_cmd = app.add_subcommand("mw", "truncation step and involution");
  mw_cmd->add_option("multisegment", mw_input)->required();
  mw_cmd->add_flag("--step", mw_step_flag);
  mw_cmd->add_flag("--involution", mw_involution_flag);
  mw_cmd->add_flag("--dual", mw_dual);
  mw_cmd->add_flag("--enhanced", mw_enhanced);
  mw_cmd->callback([&]() {
    Multisegment m = Multisegment::parse(mw_input);
    nlohmann::json out;
    if (mw_involution_flag) {
      out["involution"] = mw_involution(m).str();
    } else {
      MwStepResult r = mw_dual       ? mw_step_dual(m)
                       : mw_enhanced ? mw_step_enhanced(m)
                                     : mw_step(m);
      out["dagger"] = r.dagger.str();
      out["delta_circ"] = segment_json(r.delta_circ);
    }
    std::cout << out.dump() << "\n";
  });

  // ---- rsk ----
  std::string rsk_input, rsk_inverse_input;
  auto* rsk_cmd = app.add_subcommand("rsk", "extraction to ladder tuples");
  rsk_cmd->add_option("multisegment", rsk_input);
  rsk_cmd->add_option("--inverse", rsk_inverse_input)
      ->description("semicolon-separated ladder tuple");
  rsk_cmd->callback([&]() {
    nlohmann::json out;
    if (!rsk_inverse_input.empty()) {
      LadderTuple t = parse_tuple(rsk_inverse_input);
      auto rebuilt = rsk_inverse(t);
      if (rebuilt) {
        out["multisegment"] = rebuilt->str();
      } else {
        out["error"] = "tuple is not in the image";
        // report the first failing attachment from the right
        for (std::size_t i = t.size(); i-- > 1;) {
          LadderTuple suffix(t.begin() + static_cast<long>(i), t.end());
          auto sub = rsk_inverse(suffix);
          if (!sub) continue;
          if (!is_permissible_pair(t[i - 1], *sub)) {
            out["violation"] = {{"ladder", t[i - 1].str()}, {"against", sub->str()}};
            break;
          }
        }
      }
    } else {
      if (rsk_input.empty()) throw CLI::ValidationError("rsk", "multisegment required");
      Multisegment m = Multisegment::parse(rsk_input);
      LadderTuple t = rsk(m);
      out["ladders"] = tuple_json(t);
      if (!t.empty()) {
        TableauPair pq = from_ladder_tuple(t);
        out["p"] = inverted_json(pq.p);
        out["q"] = inverted_json(pq.q);
      }
      out["width"] = width(m);
    }
    std::cout << out.dump() << "\n";
  });

  // ---- render ----
  std::string render_input, render_format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "draw the tableau pair");
  render_cmd->add_option("multisegment", render_input)->required();
  render_cmd->add_option("--format", render_format)
      ->check(CLI::IsMember({"ascii", "json", "latex"}));
  render_cmd->callback([&]() {
    Multisegment m = Multisegment::parse(render_input);
    LadderTuple t = rsk(m);
    if (t.empty()) {
      std::cout << (render_format == "json" ? "{}" : "(empty)") << "\n";
      return;
    }
    TableauPair pq = from_ladder_tuple(t);
    if (render_format == "ascii")
      std::cout << "P:\n" << pq.p.ascii() << "Q:\n" << pq.q.ascii();
    else if (render_format == "latex")
      std::cout << pq.p.latex() << "\n" << pq.q.latex() << "\n";
    else {
      nlohmann::json out;
      out["p"] = inverted_json(pq.p);
      out["q"] = inverted_json(pq.q);
      std::cout << out.dump() << "\n";
    }
  });

  // ---- socle ----
  std::string socle_m, socle_l;
  auto* socle_cmd = app.add_subcommand("socle", "socle of a product with a ladder class");
  socle_cmd->add_option("multisegment", socle_m)->required();
  socle_cmd->add_option("ladder", socle_l)->required();
  socle_cmd->callback([&]() {
    std::cout << socle(Multisegment::parse(socle_m), parse_ladder(socle_l)).str() << "\n";
  });

  // ---- socle-chain ----
  std::string chain_m, chain_dummies;
  bool chain_left = false;
  auto* chain_cmd = app.add_subcommand("socle-chain", "fold socles over the extraction");
  chain_cmd->add_option("multisegment", chain_m)->required();
  chain_cmd->add_flag("--left", chain_left);
  chain_cmd->add_option("--dummies", chain_dummies);
  chain_cmd->callback([&]() {
    Multisegment m = Multisegment::parse(chain_m);
    if (!chain_dummies.empty()) m += Multisegment::parse(chain_dummies);
    LadderTuple t = rsk(m);
    std::cout << socle_chain(t, chain_left ? SocleSide::Left : SocleSide::Right).str()
              << "\n";
  });

  // ---- interp ----
  std::string interp_m, interp_dummies;
  auto* interp_cmd = app.add_subcommand("interp", "classify against the standard products");
  interp_cmd->add_option("multisegment", interp_m)->required();
  interp_cmd->add_option("--dummies", interp_dummies);
  interp_cmd->callback([&]() {
    Multisegment m = Multisegment::parse(interp_m);
    Multisegment d =
        interp_dummies.empty() ? Multisegment{} : Multisegment::parse(interp_dummies);
    InterpolationReport rep = interpolation_check(m, d);
    nlohmann::json out;
    out["class"] = rep.cls == InterpolationClass::ZelevinskyMatch   ? "zelevinsky"
                   : rep.cls == InterpolationClass::LanglandsMatch ? "langlands"
                                                                   : "neither";
    out["zeta_hypothesis"] = rep.zeta_hypothesis;
    out["langlands_hypothesis"] = rep.langlands_hypothesis;
    out["mismatch"] = rep.mismatch;
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& l : rsk_standard_factors(m, d)) factors.push_back(ladder_json(l));
    out["factors"] = factors;
    std::cout << out.dump() << "\n";
  });

  // ---- ring ----
  auto* ring_cmd = app.add_subcommand("ring", "polynomial expansions");
  std::string expand_m, expand_dummies;
  auto* expand_cmd = ring_cmd->add_subcommand("expand", "expand a graded class");
  expand_cmd->add_option("multisegment", expand_m)->required();
  expand_cmd->add_option("--dummies", expand_dummies);
  expand_cmd->callback([&]() {
    Multisegment m = Multisegment::parse(expand_m);
    Multisegment d =
        expand_dummies.empty() ? Multisegment{} : Multisegment::parse(expand_dummies);
    std::cout << rsk_standard_class(m, d).str() << "\n";
  });

  std::string drs_a, drs_b, drs_grade;
  long long drs_size = 0;
  auto* drs_cmd = ring_cmd->add_subcommand("drs-check", "transition determinants");
  drs_cmd->add_option("--a", drs_a)->required();
  drs_cmd->add_option("--b", drs_b)->required();
  drs_cmd->add_option("--size", drs_size);
  drs_cmd->add_option("--grade", drs_grade)->description("content multiset c1,c2,...");
  drs_cmd->callback([&]() {
    const auto as = parse_int_list(drs_a);
    const auto bs = parse_int_list(drs_b);
    long long size = drs_size;
    std::vector<int> grade;
    if (!drs_grade.empty()) {
      grade = parse_int_list(drs_grade);
      size = static_cast<long long>(grade.size());
    }
    if (size <= 0) throw CLI::ValidationError("drs-check", "--size or --grade required");
    DrsReport rep = drs_basis_check(as, bs, size);
    nlohmann::json out;
    out["total_size"] = rep.total_size;
    out["all_unimodular"] = rep.all_unimodular;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : rep.blocks) {
      if (!grade.empty() && b.content != grade) continue;
      blocks.push_back({{"content", b.content},
                        {"dimension", b.dimension},
                        {"determinant", b.determinant.str()},
                        {"unimodular", b.unimodular}});
    }
    out["blocks"] = blocks;
    std::cout << out.dump() << "\n";
    if (!rep.all_unimodular) std::exit(1);
  });

  // ---- crsk ----
  std::string crsk_input;
  auto* crsk_cmd = app.add_subcommand("crsk", "column correspondence on row tuples");
  crsk_cmd->add_option("tuple", crsk_input)->required();
  crsk_cmd->callback([&]() {
    RowTuple u = parse_row_tuple(crsk_input);
    auto [p, q] = crsk(u);
    nlohmann::json out;
    out["p"] = p.rows();
    out["q"] = q.rows();
    std::cout << out.dump() << "\n";
  });

  // ---- keys ----
  std::string keys_input;
  auto* keys_cmd = app.add_subcommand("keys", "left and right key tableaux");
  keys_cmd->add_option("tableau", keys_input)->required();
  keys_cmd->callback([&]() {
    Tableau t = parse_tableau(keys_input);
    KeyData k = keys(t);
    nlohmann::json out;
    out["left_key"] = k.left_key.rows();
    out["right_key"] = k.right_key.rows();
    out["left_weight"] = k.left_weight;
    out["right_weight"] = k.right_weight;
    std::cout << out.dump() << "\n";
  });

  // ---- flagged ----
  std::string flagged_input;
  auto* flagged_cmd = app.add_subcommand("flagged", "flag test and key comparison");
  flagged_cmd->add_option("tuple", flagged_input)->required();
  flagged_cmd->callback([&]() {
    RowTuple u = parse_row_tuple(flagged_input);
    nlohmann::json out;
    out["tuple"] = tuple_text(u);
    out["flagged"] = is_flagged(u);
    out["key_condition"] = key_condition(u);
    out["flagged_enhanced"] = is_flagged_enhanced(u);
    out["key_condition_enhanced"] = key_condition_enhanced(u);
    std::cout << out.dump() << "\n";
  });

  // ---- verify ----
  std::string suite_name, window = "1..4";
  int max_segs = 5, dummies = 0, jobs = 1;
  bool as_json = false, list_suites = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite_name);
  verify_cmd->add_option("--window", window)->description("a..b");
  verify_cmd->add_option("--max-segs", max_segs);
  verify_cmd->add_option("--dummies", dummies);
  verify_cmd->add_option("--jobs", jobs);
  verify_cmd->add_flag("--json", as_json);
  verify_cmd->add_flag("--list", list_suites);
  verify_cmd->callback([&]() {
    if (list_suites) {
      for (const auto& [name, desc] : suite_catalog())
        std::cout << name << "\t" << desc << "\n";
      return;
    }
    if (suite_name.empty()) throw CLI::ValidationError("verify", "suite name required");
    EnumSpec spec;
    const auto dots = window.find("..");
    if (dots == std::string::npos)
      throw CLI::ValidationError("verify", "--window needs the form a..b");
    spec.lo = std::stoi(window.substr(0, dots));
    spec.hi = std::stoi(window.substr(dots + 2));
    spec.max_segments = max_segs;
    spec.dummy_budget = dummies;
    if (const char* cap = std::getenv("MRSK_ENUM_CAP")) spec.cap = std::atoll(cap);
    SuiteReport rep = run_suite(suite_name, spec, jobs);
    std::cout << (as_json ? rep.json() : rep.summary()) << "\n";
    if (rep.assertion_suite && !rep.passed()) std::exit(1);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
