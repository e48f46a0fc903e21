#include "gm/manifest.hpp"

#include <json.hpp>

#include "gm/io_util.hpp"
#include "gm/json_util.hpp"

namespace gm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) {
  throw Error("BAD_MANIFEST", msg);
}

void require_keys(const json& obj, const char* what,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  for (const char* k : required) {
    if (!obj.contains(k)) {
      bad(std::string(what) + " is missing required key '" + k + "'");
    }
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& k = it.key();
    auto in = [&](std::initializer_list<const char*> list) {
      for (const char* c : list) {
        if (k == c) return true;
      }
      return false;
    };
    if (!in(required) && !in(optional)) {
      bad(std::string(what) + " has unknown key '" + k + "'");
    }
  }
}

std::string get_string(const json& obj, const char* key, const char* what) {
  const json& v = obj.at(key);
  if (!v.is_string()) bad(std::string(what) + "." + key + " must be a string");
  return v.get<std::string>();
}

long long get_integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + " must be an integer");
  return v.get<long long>();
}

Rational charge_from_json(const json& v, const std::string& vertex) {
  if (v.is_number_integer()) {
    return parse_rational(std::to_string(v.get<long long>()));
  }
  if (v.is_number()) {
    throw Error("BAD_RATIONAL", "charge of '" + vertex +
                                    "' is a float; charges must be exact "
                                    "integers or \"p/q\" strings");
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad("charge of '" + vertex + "' must be an integer or a \"p/q\" string");
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid json: ") + e.what());
  }
  if (!root.is_object()) bad("top level must be an object");
  require_keys(root, "manifest", {"vertices", "edges"}, {"schema_version"});

  Manifest m;
  if (root.contains("schema_version")) {
    const long long sv = get_integer(root.at("schema_version"), "schema_version");
    if (sv != 1) {
      bad("unsupported schema_version " + std::to_string(sv) +
          " (this tool reads version 1)");
    }
    m.schema_version = 1;
  }

  const json& jv = root.at("vertices");
  const json& je = root.at("edges");
  if (!jv.is_array()) bad("'vertices' must be an array");
  if (!je.is_array()) bad("'edges' must be an array");

  bool gluing = false;
  for (const json& e : je) {
    if (e.is_object() && e.contains("gluing")) {
      gluing = true;
      break;
    }
  }

  if (gluing) {
    GluingForm form;
    for (const json& v : jv) {
      if (!v.is_object()) bad("vertex entries must be objects");
      require_keys(v, "gluing-form vertex", {"id"}, {});
      form.vertex_ids.push_back(get_string(v, "id", "vertex"));
    }
    for (const json& e : je) {
      if (!e.is_object()) bad("edge entries must be objects");
      require_keys(e, "gluing-form edge", {"id", "ends", "gluing"}, {});
      GluingDatum d;
      d.id = get_string(e, "id", "edge");
      const json& ends = e.at("ends");
      if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() ||
          !ends[1].is_string()) {
        bad("edge '" + d.id + "': 'ends' must be two vertex ids");
      }
      d.ends[0] = ends[0].get<std::string>();
      d.ends[1] = ends[1].get<std::string>();
      const json& g = e.at("gluing");
      if (!g.is_array() || g.size() != 2 || !g[0].is_array() ||
          !g[1].is_array() || g[0].size() != 2 || g[1].size() != 2) {
        bad("edge '" + d.id + "': 'gluing' must be a 2x2 integer matrix");
      }
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          d.m[r][c] = get_integer(g[r][c], "edge '" + d.id + "' gluing entry");
        }
      }
      form.edges.push_back(std::move(d));
    }
    m.payload = std::move(form);
    return m;
  }

  GraphManifoldData data;
  for (const json& v : jv) {
    if (!v.is_object()) bad("vertex entries must be objects");
    require_keys(v, "vertex", {"id", "charge"}, {});
    Vertex vx;
    vx.id = get_string(v, "id", "vertex");
    vx.charge = charge_from_json(v.at("charge"), vx.id);
    data.vertices.push_back(std::move(vx));
  }
  for (const json& e : je) {
    if (!e.is_object()) bad("edge entries must be objects");
    require_keys(e, "edge", {"id", "ends", "b"}, {"bw_sign"});
    Edge ed;
    ed.id = get_string(e, "id", "edge");
    const json& ends = e.at("ends");
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() ||
        !ends[1].is_string()) {
      bad("edge '" + ed.id + "': 'ends' must be two vertex ids");
    }
    ed.ends[0] = ends[0].get<std::string>();
    ed.ends[1] = ends[1].get<std::string>();
    ed.b = static_cast<long>(get_integer(e.at("b"), "edge '" + ed.id + "' b"));
    if (e.contains("bw_sign")) {
      ed.bw_sign = static_cast<int>(
          get_integer(e.at("bw_sign"), "edge '" + ed.id + "' bw_sign"));
    }
    data.edges.push_back(std::move(ed));
  }
  m.payload = std::move(data);
  return m;
}

Manifest load_manifest(const std::string& path) {
  return parse_manifest(read_file(path));
}

GraphManifoldData to_reduced(const Manifest& m) {
  if (m.is_gluing()) return ingest_gluing(std::get<GluingForm>(m.payload));
  return std::get<GraphManifoldData>(m.payload);
}

std::string serialize_manifest(const GraphManifoldData& data) {
  ordered_json root;
  root["schema_version"] = 1;
  ordered_json vs = ordered_json::array();
  for (const Vertex& v : data.vertices) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["charge"] = rational_to_json(v.charge);
    vs.push_back(std::move(jv));
  }
  root["vertices"] = std::move(vs);
  ordered_json es = ordered_json::array();
  for (const Edge& e : data.edges) {
    ordered_json je;
    je["id"] = e.id;
    je["ends"] = {e.ends[0], e.ends[1]};
    je["b"] = e.b;
    if (e.bw_sign == -1) je["bw_sign"] = -1;
    es.push_back(std::move(je));
  }
  root["edges"] = std::move(es);
  return root.dump(2) + "\n";
}

std::string serialize_gluing(const GluingForm& form) {
  ordered_json root;
  root["schema_version"] = 1;
  ordered_json vs = ordered_json::array();
  for (const VertexId& id : form.vertex_ids) {
    ordered_json jv;
    jv["id"] = id;
    vs.push_back(std::move(jv));
  }
  root["vertices"] = std::move(vs);
  ordered_json es = ordered_json::array();
  for (const GluingDatum& d : form.edges) {
    ordered_json je;
    je["id"] = d.id;
    je["ends"] = {d.ends[0], d.ends[1]};
    je["gluing"] = {{d.m[0][0], d.m[0][1]}, {d.m[1][0], d.m[1][1]}};
    es.push_back(std::move(je));
  }
  root["edges"] = std::move(es);
  return root.dump(2) + "\n";
}

}  // namespace gm
