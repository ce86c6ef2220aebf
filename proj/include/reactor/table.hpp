#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "reactor/json.hpp"
#include "reactor/scene.hpp"

namespace reactor {

/// One table cell: a number, text, boolean, structured state value or Scene.
class Cell {
 public:
  using Variant = std::variant<double, std::string, bool, Json, Scene>;

  Cell() : value_(0.0) {}
  template <class T>
    requires(std::is_arithmetic_v<T> && !std::is_same_v<T, bool>)
  Cell(T number) : value_(static_cast<double>(number)) {}
  Cell(bool flag) : value_(flag) {}
  Cell(std::string text) : value_(std::move(text)) {}
  Cell(const char* text) : value_(std::string(text)) {}
  Cell(Json structured) : value_(std::move(structured)) {}
  Cell(Scene scene) : value_(std::move(scene)) {}

  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_text() const { return std::holds_alternative<std::string>(value_); }
  bool is_bool() const { return std::holds_alternative<bool>(value_); }
  bool is_structured() const { return std::holds_alternative<Json>(value_); }
  bool is_scene() const { return std::holds_alternative<Scene>(value_); }
  bool is_scalar() const { return is_number() || is_text() || is_bool(); }

  double as_number() const { return std::get<double>(value_); }
  const std::string& as_text() const { return std::get<std::string>(value_); }
  bool as_bool() const { return std::get<bool>(value_); }
  const Json& as_structured() const { return std::get<Json>(value_); }
  const Scene& as_scene() const { return std::get<Scene>(value_); }

  const Variant& variant() const { return value_; }

  friend bool operator==(const Cell&, const Cell&) = default;

 private:
  Variant value_;
};

/// JSON view of a cell; Scenes use their structured form.
Json cell_to_json(const Cell& cell);
/// Text used in CSV output: numbers in shortest form, booleans as
/// true/false, structured values and Scenes as canonical JSON.
std::string cell_to_text(const Cell& cell);

class TraceTable;

/// Read access to one row by column name.
class RowView {
 public:
  RowView(const TraceTable& table, std::size_t index) : table_(&table), index_(index) {}

  /// Throws UnknownColumn.
  const Cell& operator[](std::string_view column) const;
  std::size_t index() const { return index_; }

 private:
  const TraceTable* table_;
  std::size_t index_;
};

/// Column-named table of trace rows. Fresh trace tables have the columns
/// "tick" and "state".
class TraceTable {
 public:
  using Row = std::vector<Cell>;

  /// Throws DuplicateColumn for repeated names and MalformedTable when a
  /// row's width differs from the column count.
  TraceTable(std::vector<std::string> columns, std::vector<Row> rows = {});

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  RowView row(std::size_t i) const { return RowView(*this, i); }
  /// Index of `name`, or npos.
  std::size_t column_index(std::string_view name) const;

  friend bool operator==(const TraceTable&, const TraceTable&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<Row> rows_;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Appends a derived column. Throws DuplicateColumn if `name` exists;
/// UnknownColumn propagates when `derive` reads a missing column.
TraceTable build_column(const TraceTable& table, const std::string& name,
                        const std::function<Cell(const RowView&)>& derive);

enum class TableFormat { Csv, Json };

/// "csv" or "json"; throws std::invalid_argument otherwise.
TableFormat parse_table_format(std::string_view text);

/// CSV: header then rows joined by "\n", fields quoted per RFC 4180 when
/// they contain a comma, quote, CR or LF; no trailing newline.
/// JSON: {"columns":[...],"rows":[[...],...]}.
std::string render_table(const TraceTable& table, TableFormat format);

/// Parses render_table's JSON output. Numbers, strings and booleans become
/// scalar cells; objects and arrays become structured cells.
TraceTable parse_table_json(std::string_view text);

}  // namespace reactor
