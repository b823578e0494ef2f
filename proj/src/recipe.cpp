// SPDX-License-Identifier: Apache-2.0
#include <json.hpp>

#include "docdeg/errors.hpp"
#include "docdeg/noise.hpp"

namespace docdeg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw ParseError(ParseError::Kind::malformed, "recipe: " + what);
}

template <typename T>
T field(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    fail(std::string("bad value for '") + key + "'");
  }
}

std::int64_t non_negative_int(const json& j, const char* key, std::int64_t fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
    fail(std::string("'") + key + "' must be a non-negative integer");
  return it->get<std::int64_t>();
}

Color parse_color(const json& j) {
  const auto name = field<std::string>(j, "color", "white");
  if (name == "white") return Color::white;
  if (name == "black") return Color::black;
  fail("color must be \"white\" or \"black\"");
}

BlobSize parse_blob_size(const json& j) {
  const auto it = j.find("pixels_per_blob");
  if (it == j.end() || !it->is_object()) fail("blob step needs pixels_per_blob");
  if (it->contains("fraction")) {
    const auto f = field<double>(*it, "fraction", 0.0);
    if (!(f > 0 && f <= 1)) fail("fraction must be in (0, 1]");
    return BlobSize::of_page(f);
  }
  if (it->contains("count")) return BlobSize::absolute(non_negative_int(*it, "count", 0));
  fail("pixels_per_blob needs 'fraction' or 'count'");
}

NoiseStep parse_step(const json& j) {
  if (!j.is_object()) fail("step must be an object");
  const auto type = field<std::string>(j, "type", "");
  if (type == "pixel") return PixelNoiseParams{non_negative_int(j, "count", 0)};
  if (type == "blob") {
    BlobParams p;
    p.blob_count = non_negative_int(j, "blob_count", 0);
    p.pixels_per_blob = parse_blob_size(j);
    p.spread = field<double>(j, "spread", 0.0);
    if (!(p.spread >= 0)) fail("spread must be >= 0");
    p.color = parse_color(j);
    return p;
  }
  if (type == "copy") {
    CopyNoiseParams p;
    p.growth = static_cast<int>(non_negative_int(j, "growth", 1));
    p.sd = field<double>(j, "sd", 4.0);
    p.max_depth = static_cast<int>(non_negative_int(j, "max_depth", 0));
    if (!(p.sd >= 0)) fail("sd must be >= 0");
    if (p.max_depth > 0 && p.max_depth < p.growth) fail("max_depth must be >= growth");
    return p;
  }
  fail("unknown step type '" + type + "'");
}

json step_to_json(const NoiseStep& step) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PixelNoiseParams>) {
          return {{"type", "pixel"}, {"count", p.count}};
        } else if constexpr (std::is_same_v<T, BlobParams>) {
          json size;
          if (p.pixels_per_blob.form == BlobSize::Form::fraction)
            size["fraction"] = p.pixels_per_blob.value;
          else
            size["count"] = static_cast<std::int64_t>(p.pixels_per_blob.value);
          return {{"type", "blob"},
                  {"blob_count", p.blob_count},
                  {"pixels_per_blob", size},
                  {"spread", p.spread},
                  {"color", p.color == Color::black ? "black" : "white"}};
        } else {
          json j = {{"type", "copy"}, {"growth", p.growth}, {"sd", p.sd}};
          j["max_depth"] = p.effective_max_depth();
          return j;
        }
      },
      step);
}

}  // namespace

DegradationRecipe recipe_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  DegradationRecipe r;
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) fail("seed must be a non-negative integer");
    r.seed = it->get<std::uint64_t>();
  }
  if (const auto it = j.find("steps"); it != j.end()) {
    if (!it->is_array()) fail("steps must be an array");
    for (const auto& s : *it) r.steps.push_back(parse_step(s));
  }
  return r;
}

std::string recipe_to_json(const DegradationRecipe& recipe) {
  json steps = json::array();
  for (const auto& s : recipe.steps) steps.push_back(step_to_json(s));
  return json{{"seed", recipe.seed}, {"steps", steps}}.dump(2) + "\n";
}

}  // namespace docdeg
