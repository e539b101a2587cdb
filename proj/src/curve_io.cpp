// Copyright 2026 The Menger Knots Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "menger/curve.hpp"
#include "menger/errors.hpp"

namespace menger {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PolygonalLoop loop_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("curve file must be a JSON object");

  const auto closed = doc.find("closed");
  if (closed == doc.end() || !closed->is_boolean()) {
    throw FormatError("curve file needs a boolean \"closed\" field");
  }
  if (!closed->get<bool>()) {
    throw FormatError("open curves are not supported (\"closed\": false)");
  }

  const auto verts = doc.find("vertices");
  if (verts == doc.end() || !verts->is_array()) {
    throw FormatError("curve file needs a \"vertices\" array");
  }
  std::vector<Point3> pts;
  pts.reserve(verts->size());
  for (std::size_t i = 0; i < verts->size(); ++i) {
    const auto& v = (*verts)[i];
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() ||
        !v[1].is_number() || !v[2].is_number()) {
      throw FormatError("vertex " + std::to_string(i) +
                        " is not an [x, y, z] number triple");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
  }
  return PolygonalLoop::from_vertices(std::move(pts));
}

std::string loop_to_json(const PolygonalLoop& loop) {
  std::ostringstream out;
  out << "{\"vertices\": [";
  bool first = true;
  for (const Point3& v : loop.vertices()) {
    out << (first ? "\n  [" : ",\n  [") << format_double(v.x) << ", "
        << format_double(v.y) << ", " << format_double(v.z) << "]";
    first = false;
  }
  out << "\n], \"closed\": true}\n";
  return out.str();
}

PolygonalLoop read_loop(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open curve file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return loop_from_json(buf.str());
}

void write_loop(const std::string& path, const PolygonalLoop& loop) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write curve file '" + path + "'");
  out << loop_to_json(loop);
  if (!out) throw FormatError("failed writing curve file '" + path + "'");
}

}  // namespace menger
