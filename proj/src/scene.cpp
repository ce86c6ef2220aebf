#include "reactor/scene.hpp"

#include <cmath>

#include "reactor/error.hpp"

namespace reactor {

std::string_view to_string(Mode mode) {
  return mode == Mode::Solid ? "solid" : "outline";
}

Mode parse_mode(std::string_view text) {
  if (text == "solid") return Mode::Solid;
  if (text == "outline") return Mode::Outline;
  throw MalformedScene("unknown drawing mode '" + std::string(text) + "'");
}

Scene::Scene() : Scene(EmptyScene{0, 0}) {}
Scene::Scene(Circle leaf) : node_(std::make_shared<const SceneNode>(SceneNode{std::move(leaf)})) {}
Scene::Scene(Text leaf) : node_(std::make_shared<const SceneNode>(SceneNode{std::move(leaf)})) {}
Scene::Scene(Rectangle leaf) : node_(std::make_shared<const SceneNode>(SceneNode{std::move(leaf)})) {}
Scene::Scene(Overlay node) : node_(std::make_shared<const SceneNode>(SceneNode{std::move(node)})) {}
Scene::Scene(EmptyScene leaf) : node_(std::make_shared<const SceneNode>(SceneNode{std::move(leaf)})) {}

const Scene::Node& Scene::node() const { return node_->value; }

bool operator==(const Scene& a, const Scene& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

bool is_valid_color(std::string_view color) {
  if (color.empty()) return false;
  if (color[0] == '#') {
    if (color.size() != 7) return false;
    for (char c : color.substr(1)) {
      if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    }
    return true;
  }
  for (char c : color) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

namespace {

void require_dimension(double value, const char* what) {
  if (!(value >= 0) || std::isinf(value)) {
    throw NegativeDimension(std::string(what) + " must be a finite value >= 0");
  }
}

void require_color(const std::string& color) {
  if (!is_valid_color(color)) {
    throw InvalidColor("invalid color '" + color + "'");
  }
}

}  // namespace

Scene circle(double radius, Mode mode, std::string color) {
  require_dimension(radius, "circle radius");
  require_color(color);
  return Scene(Circle{radius, mode, std::move(color)});
}

Scene text(std::string content, double size, std::string color) {
  if (!(size > 0) || std::isinf(size)) {
    throw NonPositiveSize("text size must be a finite value > 0");
  }
  require_color(color);
  return Scene(Text{std::move(content), size, std::move(color)});
}

Scene rectangle(double width, double height, Mode mode, std::string color) {
  require_dimension(width, "rectangle width");
  require_dimension(height, "rectangle height");
  require_color(color);
  return Scene(Rectangle{width, height, mode, std::move(color)});
}

Scene overlay(Scene top, Scene bottom) {
  return Scene(Overlay{std::move(top), std::move(bottom)});
}

Scene empty_scene(double width, double height) {
  require_dimension(width, "empty width");
  require_dimension(height, "empty height");
  return Scene(EmptyScene{width, height});
}

namespace {

struct ToStructured {
  Json operator()(const Circle& c) const {
    return {{"kind", "circle"},
            {"radius", c.radius},
            {"mode", to_string(c.mode)},
            {"color", c.color}};
  }
  Json operator()(const Text& t) const {
    return {{"kind", "text"},
            {"content", t.content},
            {"size", t.size},
            {"color", t.color}};
  }
  Json operator()(const Rectangle& r) const {
    return {{"kind", "rectangle"},
            {"width", r.width},
            {"height", r.height},
            {"mode", to_string(r.mode)},
            {"color", r.color}};
  }
  Json operator()(const Overlay& o) const {
    return {{"kind", "overlay"},
            {"top", scene_to_structured(o.top)},
            {"bottom", scene_to_structured(o.bottom)}};
  }
  Json operator()(const EmptyScene& e) const {
    return {{"kind", "empty"}, {"width", e.width}, {"height", e.height}};
  }
};

const Json& field(const Json& object, const char* name) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw MalformedScene(std::string("scene is missing field '") + name + "'");
  }
  return *it;
}

double number_field(const Json& object, const char* name) {
  const Json& value = field(object, name);
  if (!value.is_number()) {
    throw MalformedScene(std::string("scene field '") + name +
                         "' must be a number");
  }
  return value.get<double>();
}

std::string string_field(const Json& object, const char* name) {
  const Json& value = field(object, name);
  if (!value.is_string()) {
    throw MalformedScene(std::string("scene field '") + name +
                         "' must be a string");
  }
  return value.get<std::string>();
}

void require_exact_keys(const Json& object, std::size_t count) {
  if (object.size() != count) {
    throw MalformedScene("scene object has unexpected fields: " +
                         canonical_dump(object));
  }
}

}  // namespace

Json scene_to_structured(const Scene& scene) {
  return std::visit(ToStructured{}, scene.node());
}

Scene structured_to_scene(const Json& value) {
  if (!value.is_object()) throw MalformedScene("scene must be a JSON object");
  const std::string kind = string_field(value, "kind");
  try {
    if (kind == "circle") {
      require_exact_keys(value, 4);
      return circle(number_field(value, "radius"),
                    parse_mode(string_field(value, "mode")),
                    string_field(value, "color"));
    }
    if (kind == "text") {
      require_exact_keys(value, 4);
      return text(string_field(value, "content"), number_field(value, "size"),
                  string_field(value, "color"));
    }
    if (kind == "rectangle") {
      require_exact_keys(value, 5);
      return rectangle(number_field(value, "width"),
                       number_field(value, "height"),
                       parse_mode(string_field(value, "mode")),
                       string_field(value, "color"));
    }
    if (kind == "overlay") {
      require_exact_keys(value, 3);
      return overlay(structured_to_scene(field(value, "top")),
                     structured_to_scene(field(value, "bottom")));
    }
    if (kind == "empty") {
      require_exact_keys(value, 3);
      return empty_scene(number_field(value, "width"),
                         number_field(value, "height"));
    }
  } catch (const MalformedScene&) {
    throw;
  } catch (const Error& e) {
    // Constructor validation failures surface as malformed input here.
    throw MalformedScene(e.what());
  }
  throw MalformedScene("unknown scene kind '" + kind + "'");
}

std::string scene_to_text(const Scene& scene) {
  return canonical_dump(scene_to_structured(scene));
}

}  // namespace reactor
