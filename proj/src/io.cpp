#include "f1q/io.hpp"

#include <fstream>
#include <sstream>

namespace f1q {

namespace {

std::string line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, path + ": expected object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::kParse, path + "." + key + ": missing field");
  return *it;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) throw Error(ErrorCode::kParse, path + ": expected string");
  return j.get<std::string>();
}

std::map<std::string, std::string> string_map(const Json& j, const std::string& path) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, path + ": expected object");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out[it.key()] = string_at(it.value(), path + "." + it.key());
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    throw Error(ErrorCode::kParse, line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + what);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Quiver quiver_from_json(const Json& j, const std::string& path) {
  const Json& vs = field(j, "vertices", path);
  const Json& as = field(j, "arrows", path);
  if (!vs.is_array()) throw Error(ErrorCode::kParse, path + ".vertices: expected array");
  if (!as.is_array()) throw Error(ErrorCode::kParse, path + ".arrows: expected array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(string_at(vs[i], path + ".vertices[" + std::to_string(i) + "]"));
  }
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string p = path + ".arrows[" + std::to_string(i) + "]";
    arrows.push_back({string_at(field(as[i], "id", p), p + ".id"),
                      string_at(field(as[i], "source", p), p + ".source"),
                      string_at(field(as[i], "target", p), p + ".target")});
  }
  try {
    return Quiver(std::move(vertices), std::move(arrows));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Quiver parse_quiver(std::string_view text) { return quiver_from_json(parse_json(text)); }

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) {
    Json aj;
    aj["id"] = a.id;
    aj["source"] = q.vertex_id(a.source);
    aj["target"] = q.vertex_id(a.target);
    arrows.push_back(std::move(aj));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

std::string emit_quiver(const Quiver& q) { return quiver_to_json(q).dump(2) + "\n"; }

Winding winding_from_json(const Json& j, const std::string& path) {
  auto base = std::make_shared<const Quiver>(quiver_from_json(field(j, "base", path), path + ".base"));
  Quiver total = quiver_from_json(field(j, "total", path), path + ".total");
  auto vmap = string_map(field(j, "vertex_map", path), path + ".vertex_map");
  auto amap = string_map(field(j, "arrow_map", path), path + ".arrow_map");
  try {
    return Winding(QuiverMap::from_ids(std::move(total), std::move(base), vmap, amap));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Winding parse_winding(std::string_view text) { return winding_from_json(parse_json(text)); }

Json winding_to_json(const QuiverMap& m) {
  Json j;
  j["base"] = quiver_to_json(m.codomain());
  j["total"] = quiver_to_json(m.domain());
  Json vmap = Json::object();
  for (VertexIndex v = 0; v < m.domain().vertex_count(); ++v) {
    vmap[m.domain().vertex_id(v)] = m.codomain().vertex_id(m.vertex_image(v));
  }
  Json amap = Json::object();
  for (ArrowIndex a = 0; a < m.domain().arrow_count(); ++a) {
    amap[m.domain().arrow(a).id] = m.codomain().arrow(m.arrow_image(a)).id;
  }
  j["vertex_map"] = std::move(vmap);
  j["arrow_map"] = std::move(amap);
  return j;
}

std::string emit_winding(const QuiverMap& m) { return winding_to_json(m).dump(2) + "\n"; }

}  // namespace f1q
