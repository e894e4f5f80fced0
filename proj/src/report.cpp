#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cigler/verify.hpp"

namespace cigler {

namespace {

using Json = nlohmann::ordered_json;

std::string_view to_string(Mutation::Target t) {
  switch (t) {
  case Mutation::Target::b: return "b";
  case Mutation::Target::lambda: return "lambda";
  case Mutation::Target::none: break;
  }
  return "none";
}

Json config_json(const SuiteConfig &c) {
  Json points = Json::array();
  for (const auto &[q, a] : c.explicit_points)
    points.push_back({{"q", q.to_string()}, {"a", a.to_string()}});
  Json out;
  out["suite"] = to_string(c.suite);
  out["n_max"] = c.n_max ? Json(*c.n_max) : Json(nullptr);
  out["mode"] = to_string(c.mode);
  out["trials"] = c.trials;
  out["seed"] = c.seed;
  out["bound"] = c.bound;
  out["explicit_points"] = std::move(points);
  out["mutation"] = c.mutation.active()
                        ? Json{{"target", to_string(c.mutation.target)}, {"index", c.mutation.index}}
                        : Json(nullptr);
  return out;
}

Json record_json(const IdentityRecord &r) {
  Json out;
  out["id"] = r.id;
  out["group"] = r.group;
  out["range"] = {r.n_lo, r.n_hi};
  out["points"] = r.points;
  out["status"] = r.passed ? "pass" : "fail";
  if (r.counterexample) {
    const auto &cx = *r.counterexample;
    Json c;
    c["point_index"] = cx.point_index;
    c["q"] = cx.q.to_string();
    c["a"] = cx.a.to_string();
    c["n"] = cx.n;
    c["label"] = cx.label;
    c["lhs"] = cx.lhs.to_string();
    c["rhs"] = cx.rhs.to_string();
    if (cx.defect)
      c["defect"] = *cx.defect;
    out["counterexample"] = std::move(c);
  }
  if (!r.grid.empty()) {
    Json bounds = Json::array();
    for (const auto &g : r.grid)
      bounds.push_back({{"n", g.n}, {"dq", g.dq}, {"da", g.da}});
    out["degree_bounds"] = std::move(bounds);
  }
  return out;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string render_json(const VerificationReport &report) {
  Json doc;
  doc["tool"] = {{"name", "cigler"}, {"version", report.tool_version}};
  doc["config"] = config_json(report.config);
  Json ids = Json::array();
  for (const auto &r : report.identities)
    ids.push_back(record_json(r));
  doc["identities"] = std::move(ids);
  doc["status"] = report.passed() ? "pass" : "fail";
  Json durations = Json::object();
  for (const auto &[suite, ms] : report.durations_ms)
    durations[suite] = ms;
  doc["durations"] = std::move(durations);
  return doc.dump(2) + "\n";
}

std::string render_csv(const VerificationReport &report) {
  std::ostringstream os;
  os << "id,group,range_lo,range_hi,points,status,cx_point_index,cx_n,cx_label,cx_q,cx_a,cx_lhs,cx_rhs,"
        "cx_defect\n";
  for (const auto &r : report.identities) {
    os << csv_field(r.id) << ',' << csv_field(r.group) << ',' << r.n_lo << ',' << r.n_hi << ',' << r.points
       << ',' << (r.passed ? "pass" : "fail");
    if (r.counterexample) {
      const auto &cx = *r.counterexample;
      os << ',' << cx.point_index << ',' << cx.n << ',' << csv_field(cx.label) << ',' << cx.q << ',' << cx.a
         << ',' << cx.lhs << ',' << cx.rhs << ',' << csv_field(cx.defect.value_or(""));
    } else {
      os << ",,,,,,,,";
    }
    os << '\n';
  }
  return os.str();
}

void emit_report(const VerificationReport &report, ReportFormat format, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << (format == ReportFormat::json ? render_json(report) : render_csv(report));
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing report to '" + path + "'");
}

} // namespace cigler
