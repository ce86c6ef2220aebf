#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "reactor/json.hpp"

namespace reactor {

enum class Mode { Solid, Outline };

std::string_view to_string(Mode mode);
/// "solid" or "outline"; throws MalformedScene otherwise.
Mode parse_mode(std::string_view text);

struct Circle;
struct Text;
struct Rectangle;
struct Overlay;
struct EmptyScene;

struct SceneNode;

/// An immutable picture: a finite tree of circles, text, rectangles and
/// overlays. Scenes carry no coordinates; a display centers the root.
/// Equality is structural.
class Scene {
 public:
  using Node = std::variant<Circle, Text, Rectangle, Overlay, EmptyScene>;

  /// The 0x0 empty scene.
  Scene();
  Scene(Circle leaf);
  Scene(Text leaf);
  Scene(Rectangle leaf);
  Scene(Overlay node);
  Scene(EmptyScene leaf);

  const Node& node() const;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node());
  }
  template <class T>
  const T& as() const {
    return std::get<T>(node());
  }

  friend bool operator==(const Scene& a, const Scene& b);

 private:
  std::shared_ptr<const SceneNode> node_;
};

struct Circle {
  double radius;
  Mode mode;
  std::string color;
  friend bool operator==(const Circle&, const Circle&) = default;
};

struct Text {
  std::string content;
  double size;
  std::string color;
  friend bool operator==(const Text&, const Text&) = default;
};

struct Rectangle {
  double width;
  double height;
  Mode mode;
  std::string color;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// `top` is drawn over `bottom`.
struct Overlay {
  Scene top;
  Scene bottom;
  friend bool operator==(const Overlay&, const Overlay&) = default;
};

struct EmptyScene {
  double width;
  double height;
  friend bool operator==(const EmptyScene&, const EmptyScene&) = default;
};

struct SceneNode {
  Scene::Node value;
};

/// Lowercase CSS-style name ("blue") or "#rrggbb" with lowercase hex digits.
bool is_valid_color(std::string_view color);

// Constructors validate their arguments: NegativeDimension for sizes below
// zero (NaN included), NonPositiveSize for text size, InvalidColor.
Scene circle(double radius, Mode mode, std::string color);
Scene text(std::string content, double size, std::string color);
Scene rectangle(double width, double height, Mode mode, std::string color);
Scene overlay(Scene top, Scene bottom);
Scene empty_scene(double width = 0, double height = 0);

/// Canonical structured form, e.g.
/// {"kind":"circle","radius":10,"mode":"solid","color":"blue"}.
Json scene_to_structured(const Scene& scene);
/// Inverse of scene_to_structured; throws MalformedScene on anything else.
Scene structured_to_scene(const Json& value);

/// canonical_dump(scene_to_structured(scene)).
std::string scene_to_text(const Scene& scene);

}  // namespace reactor
