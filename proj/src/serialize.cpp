#include "pdmatch/serialize.hpp"

#include <sstream>

#include "pdmatch/errors.hpp"

namespace pdmatch {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& require_field(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t require_count(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  if (v.get<std::int64_t>() < 0) throw ParseError(std::string(what) + " must be nonnegative");
  return v.get<std::size_t>();
}

std::string at(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = require_count(require_field(doc, "n"), "n");
  const std::size_t m = require_count(require_field(doc, "m"), "m");
  const json& b = require_field(doc, "b");
  if (!b.is_array()) throw ParseError("b must be an array of rows");
  if (b.size() != n) {
    throw ParseError("dimension mismatch: b has " + std::to_string(b.size()) +
                     " rows, expected n=" + std::to_string(n));
  }
  std::vector<Tolerance> flat;
  flat.reserve(n * m);
  for (std::size_t j = 0; j < n; ++j) {
    const json& row = b[j];
    if (!row.is_array()) throw ParseError("row " + std::to_string(j) + " is not an array");
    if (row.size() != m) {
      throw ParseError("dimension mismatch: row " + std::to_string(j) + " has " +
                       std::to_string(row.size()) + " entries, expected m=" + std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
      const json& v = row[i];
      if (!v.is_number_integer()) throw ParseError("non-integer entry at " + at(j, i));
      if (v.is_number_unsigned()) {
        if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
          throw ParseError("entry out of range at " + at(j, i));
        }
      } else if (v.get<std::int64_t>() < 0) {
        throw ParseError("negative entry at " + at(j, i));
      }
      flat.push_back(v.get<Tolerance>());
    }
  }
  return Instance(n, m, std::move(flat));
}

Matching parse_matching(std::string_view text) {
  const json doc = parse_document(text);
  const json& edges = require_field(doc, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const json& e = edges[k];
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("edge " + std::to_string(k) + " must be a [job, machine] pair");
    }
    out.push_back({require_count(e[0], "edge job index"), require_count(e[1], "edge machine index")});
  }
  if (doc.contains("size") && require_count(doc["size"], "size") != out.size()) {
    throw ParseError("size field disagrees with the number of edges");
  }
  return Matching(std::move(out));
}

std::string serialize(const Instance& inst) {
  std::ostringstream os;
  os << "{\"n\": " << inst.jobs() << ", \"m\": " << inst.machines() << ", \"b\": [";
  for (std::size_t j = 0; j < inst.jobs(); ++j) {
    os << (j ? ",\n  [" : "\n  [");
    for (std::size_t i = 0; i < inst.machines(); ++i) os << (i ? "," : "") << inst(j, i);
    os << ']';
  }
  os << (inst.jobs() ? "\n]}\n" : "]}\n");
  return os.str();
}

std::string serialize(const Matching& matching) {
  std::ostringstream os;
  os << "{\"size\": " << matching.size() << ", \"edges\": [";
  bool first = true;
  for (const Edge& e : matching.edges()) {
    os << (first ? "" : ", ") << '[' << e.job << ',' << e.machine << ']';
    first = false;
  }
  os << "]}\n";
  return os.str();
}

json to_json(const ValidityReport& report) {
  json v = json::array();
  for (const auto& x : report.violations) {
    v.push_back({{"kind", to_string(x.kind)},
                 {"edge", {x.edge.job, x.edge.machine}},
                 {"degree", x.degree}});
  }
  return {{"valid", report.valid}, {"violations", v}};
}

json to_json(const ClassReport& r) {
  json out;
  if (r.monotonizable) {
    out["monotonizable"] = {{"job_order", r.monotonizable->jobs},
                            {"machine_order", r.monotonizable->machines}};
  } else {
    out["monotonizable"] = nullptr;
  }
  out["is_udep"] = r.is_udep;
  if (r.is_udep) {
    out["job_tolerance"] = r.job_tolerance;
    out["job_machines"] = r.job_machines;
  }
  out["udep_complete"] = r.udep_complete;
  out["is_vdep"] = r.is_vdep;
  if (r.is_vdep) {
    out["machine_tolerance"] = r.machine_tolerance;
    out["machine_jobs"] = r.machine_jobs;
  }
  out["uniform"] = r.uniform();
  out["tolerance_set"] = r.tolerance_set;
  out["type_count"] = r.type_count;
  json types = json::array();
  for (const auto& t : r.types) types.push_back({{"tau", t.tau}, {"count", t.count()}});
  out["type_profiles"] = types;
  return out;
}

std::string class_label(const ClassReport& r) {
  std::string s;
  auto add = [&](const std::string& part) { s += (s.empty() ? "" : ";") + part; };
  if (r.monotonizable) add("mono");
  if (r.is_udep) add(r.udep_complete ? "udep-complete" : "udep");
  if (r.is_vdep) add("vdep");
  add("T=" + std::to_string(r.tolerance_set.size()));
  add("t=" + std::to_string(r.type_count));
  return s;
}

}  // namespace pdmatch
