#include "hfp/io.hpp"

#include <sstream>

#include "hfp/error.hpp"
#include "json.hpp"

namespace hfp::io {

using Json = nlohmann::ordered_json;

namespace {

Json spinc_to_json(const SpinCLabel& label) {
  if (const auto* s = std::get_if<SpinCIndex>(&label))
    return Json{{"kind", std::string(to_string(s->kind))}, {"i", s->i}, {"j", s->j}};
  return Json{{"i", std::get<LensSpinC>(label).i}};
}

SpinCLabel spinc_from_json(const Json& j) {
  if (j.contains("kind"))
    return SpinCIndex{parse_spinc_kind(j.at("kind").get<std::string>()),
                      j.at("i").get<std::int64_t>(), j.at("j").get<std::int64_t>()};
  return LensSpinC{j.at("i").get<std::int64_t>()};
}

Json element_to_json(const GroupElement& e) { return Json(e.coords); }

GroupElement element_from_json(const Json& j) {
  return GroupElement{j.get<std::vector<std::int64_t>>()};
}

Json verdict_to_json(const ObstructionVerdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  if (v.witness) {
    Json w;
    Json met = Json::array();
    for (const auto& e : v.witness->metabolizer) met.push_back(element_to_json(e));
    w["metabolizer"] = met;
    w["representative"] = element_to_json(v.witness->representative);
    Json coset = Json::array();
    for (const auto& s : v.witness->coset) coset.push_back(spinc_to_json(s));
    w["coset"] = coset;
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  Json viol = Json::array();
  for (const auto& x : v.violations)
    viol.push_back(Json{{"spinc", spinc_to_json(x.spinc)},
                        {"c1sq", x.c1sq.str()},
                        {"bound", x.bound.str()},
                        {"orientation", x.orientation}});
  out["violations"] = viol;
  out["reason"] = v.reason;
  return out;
}

ObstructionVerdict verdict_from_json(const Json& j) {
  ObstructionVerdict v;
  v.status = parse_verdict_status(j.at("status").get<std::string>());
  if (!j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    CosetWitness cw;
    for (const auto& e : w.at("metabolizer")) cw.metabolizer.push_back(element_from_json(e));
    cw.representative = element_from_json(w.at("representative"));
    for (const auto& s : w.at("coset")) cw.coset.push_back(spinc_from_json(s));
    v.witness = std::move(cw);
  }
  for (const auto& x : j.at("violations"))
    v.violations.push_back({spinc_from_json(x.at("spinc")),
                            Rational::parse(x.at("c1sq").get<std::string>()),
                            Rational::parse(x.at("bound").get<std::string>()),
                            x.value("orientation", std::string("-"))});
  v.reason = j.value("reason", std::string());
  return v;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line != "\r") out.push_back(line);
  return out;
}

std::int64_t to_int(const std::string& s) {
  const Rational r = Rational::parse(s);
  if (!r.is_integer()) throw Error(ErrorCode::ParseError, "expected integer, got '" + s + "'");
  return r.num();
}

std::string csv_spinc(const SpinCLabel& label) {
  if (const auto* s = std::get_if<SpinCIndex>(&label))
    return std::string(to_string(s->kind)) + "," + std::to_string(s->i) + "," +
           std::to_string(s->j);
  return "lens," + std::to_string(std::get<LensSpinC>(label).i) + ",";
}

SpinCLabel csv_spinc_parse(const std::string& kind, const std::string& i, const std::string& j) {
  if (kind == "lens") return LensSpinC{to_int(i)};
  return SpinCIndex{parse_spinc_kind(kind), to_int(i), to_int(j)};
}

const char* orientation_name(Orientation o) {
  return o == Orientation::Positive ? "+" : "-";
}

}  // namespace

std::string table_csv(const std::vector<DoubleTableRow>& rows) {
  std::string out = "kind,i,j,d_b,d_t,extra_summand\n";
  for (const auto& r : rows) {
    out += std::string(to_string(r.spinc.kind)) + "," + std::to_string(r.spinc.i) + "," +
           std::to_string(r.spinc.j) + "," + r.d_b.str() + "," + r.d_t.str() + "," +
           (r.extra_summand ? "true" : "false") + "\n";
  }
  return out;
}

std::string table_json(const std::vector<DoubleTableRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"kind", std::string(to_string(r.spinc.kind))},
                       {"i", r.spinc.i},
                       {"j", r.spinc.j},
                       {"d_b", r.d_b.str()},
                       {"d_t", r.d_t.str()},
                       {"extra_summand", r.extra_summand}});
  return arr.dump(2) + "\n";
}

std::vector<DoubleTableRow> parse_table_csv(std::string_view text) {
  auto lines = lines_of(text);
  if (lines.empty() || lines.front() != "kind,i,j,d_b,d_t,extra_summand")
    throw Error(ErrorCode::ParseError, "missing table header");
  std::vector<DoubleTableRow> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto f = split(lines[k], ',');
    if (f.size() != 6) throw Error(ErrorCode::ParseError, "bad table row '" + lines[k] + "'");
    if (f[5] != "true" && f[5] != "false")
      throw Error(ErrorCode::ParseError, "bad boolean '" + f[5] + "'");
    rows.push_back({SpinCIndex{parse_spinc_kind(f[0]), to_int(f[1]), to_int(f[2])},
                    Rational::parse(f[3]), Rational::parse(f[4]), f[5] == "true"});
  }
  return rows;
}

std::vector<DoubleTableRow> parse_table_json(std::string_view text) {
  const Json arr = parse_json(text);
  std::vector<DoubleTableRow> rows;
  try {
    for (const auto& r : arr)
      rows.push_back({SpinCIndex{parse_spinc_kind(r.at("kind").get<std::string>()),
                                 r.at("i").get<std::int64_t>(), r.at("j").get<std::int64_t>()},
                      Rational::parse(r.at("d_b").get<std::string>()),
                      Rational::parse(r.at("d_t").get<std::string>()),
                      r.at("extra_summand").get<bool>()});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return rows;
}

std::string lens_csv(const LensSpace& lens, Orientation o, const std::vector<Rational>& d) {
  std::string out = "i,d,orientation\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    out += std::to_string(i) + "," + d[i].str() + "," + orientation_name(o) + "\n";
  (void)lens;
  return out;
}

std::string lens_json(const LensSpace& lens, Orientation o, const std::vector<Rational>& d) {
  Json values = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    values.push_back(Json{{"i", static_cast<std::int64_t>(i)}, {"d", d[i].str()}});
  Json out;
  out["lens"] = Json{{"p", lens.p()}, {"q", lens.q()}};
  out["orientation"] = orientation_name(o);
  out["values"] = values;
  return out.dump(2) + "\n";
}

std::string verdict_json(const ObstructionVerdict& v) { return verdict_to_json(v).dump(2) + "\n"; }

ObstructionVerdict parse_verdict_json(std::string_view text) {
  try {
    return verdict_from_json(parse_json(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string verdict_csv(const ObstructionVerdict& v) {
  std::string out = "status," + to_string(v.status) + "," + v.reason + "\n";
  out += "kind,i,j,c1sq,bound,orientation\n";
  for (const auto& x : v.violations)
    out += csv_spinc(x.spinc) + "," + x.c1sq.str() + "," + x.bound.str() + "," +
           x.orientation + "\n";
  if (v.witness) {
    out += "witness_coset\n";
    for (const auto& s : v.witness->coset) out += csv_spinc(s) + "\n";
  }
  return out;
}

ObstructionVerdict parse_verdict_csv(std::string_view text) {
  auto lines = lines_of(text);
  if (lines.size() < 2) throw Error(ErrorCode::ParseError, "verdict CSV too short");
  auto head = split(lines[0], ',');
  if (head.size() != 3 || head[0] != "status")
    throw Error(ErrorCode::ParseError, "missing status line");
  ObstructionVerdict v;
  v.status = parse_verdict_status(head[1]);
  v.reason = head[2];
  if (lines[1] != "kind,i,j,c1sq,bound,orientation")
    throw Error(ErrorCode::ParseError, "missing violation header");
  std::size_t k = 2;
  for (; k < lines.size() && lines[k] != "witness_coset"; ++k) {
    auto f = split(lines[k], ',');
    if (f.size() != 6) throw Error(ErrorCode::ParseError, "bad violation row '" + lines[k] + "'");
    v.violations.push_back(
        {csv_spinc_parse(f[0], f[1], f[2]), Rational::parse(f[3]), Rational::parse(f[4]), f[5]});
  }
  if (k < lines.size()) {
    // The CSV form carries only the coset labels of the witness.
    CosetWitness w;
    for (++k; k < lines.size(); ++k) {
      auto f = split(lines[k], ',');
      if (f.size() != 3) throw Error(ErrorCode::ParseError, "bad coset row '" + lines[k] + "'");
      w.coset.push_back(csv_spinc_parse(f[0], f[1], f[2]));
    }
    v.witness = std::move(w);
  }
  return v;
}

std::string family_json(const FamilyReport& r) {
  Json out;
  out["m"] = r.m;
  out["n"] = r.n;
  out["classes"] = r.classes;
  out["algebraic_intersection"] = r.algebraic_intersection;
  out["complement_basis"] = r.complement_basis;
  out["complement_gram"] = r.complement_gram.to_rows();
  out["b2minus"] = r.b2minus;
  out["b1"] = r.b1;
  out["verdict"] = verdict_to_json(r.verdict);
  Json reduced = Json::array();
  for (const auto& s : r.reduced_violations) reduced.push_back(spinc_to_json(s));
  out["reduced_violations"] = reduced;
  Json mism = Json::array();
  for (const auto& s : r.route_mismatches) mism.push_back(spinc_to_json(s));
  out["route_mismatches"] = mism;
  out["routes_agree"] = r.routes_agree();
  out["min_geometric_intersections"] = r.min_geometric_intersections;
  Json pts = Json::array();
  for (const auto& p : r.points)
    pts.push_back(Json{{"spinc", spinc_to_json(p.spinc)},
                       {"c1_on_complement", p.c1_on_complement},
                       {"c1sq", p.c1sq.str()},
                       {"d_b", p.d_b.str()},
                       {"bound", p.bound.str()},
                       {"pipeline_holds", p.pipeline_holds},
                       {"reduced_holds", p.reduced_holds}});
  out["points"] = pts;
  return out.dump(2) + "\n";
}

std::string family_csv(const FamilyReport& r) {
  std::string out = "kind,i,j,c1sq,d_b,bound,pipeline_holds,reduced_holds\n";
  for (const auto& p : r.points)
    out += csv_spinc(p.spinc) + "," + p.c1sq.str() + "," + p.d_b.str() + "," + p.bound.str() +
           "," + (p.pipeline_holds ? "true" : "false") + "," +
           (p.reduced_holds ? "true" : "false") + "\n";
  return out;
}

std::string cp2_report_json(const Cp2Report& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json j;
    j["name"] = c.name;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["m"] = c.m;
    j["n"] = c.n;
    j["algebraic_intersection"] = c.algebraic_intersection;
    if (!c.double_table.empty()) j["table"] = Json::parse(table_json(c.double_table));
    if (!c.lens_table.empty()) {
      const LensSpace lens(c.lens_p, c.lens_q);
      j["lens_table"] = Json::parse(lens_json(lens, Orientation::Positive, c.lens_table));
    }
    j["verdict"] = verdict_to_json(c.verdict);
    j["min_geometric_intersections"] = c.min_geometric_intersections;
    cases.push_back(j);
  }
  return Json{{"cases", cases}}.dump(2) + "\n";
}

std::string group_json(const FinAbelianGroup& g) {
  return Json{{"invariant_factors", g.invariant_factors()}}.dump() + "\n";
}

std::string matrix_json(const IntMatrix& m) { return Json(m.to_rows()).dump() + "\n"; }

}  // namespace hfp::io
