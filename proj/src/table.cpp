#include "reactor/table.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "reactor/error.hpp"

namespace reactor {

Json cell_to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Scene>) {
          return scene_to_structured(v);
        } else {
          return Json(v);
        }
      },
      cell.variant());
}

std::string cell_to_text(const Cell& cell) {
  if (cell.is_text()) return cell.as_text();
  if (cell.is_number()) return format_number(cell.as_number());
  if (cell.is_bool()) return cell.as_bool() ? "true" : "false";
  return canonical_dump(cell_to_json(cell));
}

const Cell& RowView::operator[](std::string_view column) const {
  std::size_t i = table_->column_index(column);
  if (i == npos) {
    throw UnknownColumn("no column named '" + std::string(column) + "'");
  }
  return table_->rows()[index_][i];
}

TraceTable::TraceTable(std::vector<std::string> columns, std::vector<Row> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& c : columns_) {
    if (!seen.insert(c).second) {
      throw DuplicateColumn("duplicate column '" + c + "'");
    }
  }
  for (const auto& r : rows_) {
    if (r.size() != columns_.size()) {
      throw MalformedTable("row width does not match column count");
    }
  }
}

std::size_t TraceTable::column_index(std::string_view name) const {
  auto it = std::find(columns_.begin(), columns_.end(), name);
  return it == columns_.end() ? npos : static_cast<std::size_t>(it - columns_.begin());
}

TraceTable build_column(const TraceTable& table, const std::string& name,
                        const std::function<Cell(const RowView&)>& derive) {
  if (table.column_index(name) != npos) {
    throw DuplicateColumn("column '" + name + "' already exists");
  }
  std::vector<std::string> columns = table.columns();
  columns.push_back(name);
  std::vector<TraceTable::Row> rows;
  rows.reserve(table.row_count());
  for (std::size_t i = 0; i < table.row_count(); ++i) {
    TraceTable::Row row = table.rows()[i];
    row.push_back(derive(table.row(i)));
    rows.push_back(std::move(row));
  }
  return TraceTable(std::move(columns), std::move(rows));
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::Csv;
  if (text == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown table format '" + std::string(text) + "'");
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const TraceTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns().size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns()[i]);
  }
  for (const auto& row : table.rows()) {
    out += '\n';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cell_to_text(row[i]));
    }
  }
  return out;
}

std::string render_json(const TraceTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows()) {
    Json cells = Json::array();
    for (const auto& cell : row) cells.push_back(cell_to_json(cell));
    rows.push_back(std::move(cells));
  }
  Json doc;
  doc["columns"] = table.columns();
  doc["rows"] = std::move(rows);
  return canonical_dump(doc);
}

Cell json_to_cell(const Json& value) {
  if (value.is_number()) return Cell(value.get<double>());
  if (value.is_string()) return Cell(value.get<std::string>());
  if (value.is_boolean()) return Cell(value.get<bool>());
  return Cell(value);
}

}  // namespace

std::string render_table(const TraceTable& table, TableFormat format) {
  return format == TableFormat::Csv ? render_csv(table) : render_json(table);
}

TraceTable parse_table_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedTable(e.what());
  }
  if (!doc.is_object() || !doc.contains("columns") || !doc.contains("rows") ||
      !doc["columns"].is_array() || !doc["rows"].is_array()) {
    throw MalformedTable("expected {\"columns\":[...],\"rows\":[...]}");
  }
  std::vector<std::string> columns;
  for (const auto& c : doc["columns"]) {
    if (!c.is_string()) throw MalformedTable("column names must be strings");
    columns.push_back(c.get<std::string>());
  }
  std::vector<TraceTable::Row> rows;
  for (const auto& r : doc["rows"]) {
    if (!r.is_array()) throw MalformedTable("rows must be arrays");
    TraceTable::Row row;
    for (const auto& c : r) row.push_back(json_to_cell(c));
    rows.push_back(std::move(row));
  }
  return TraceTable(std::move(columns), std::move(rows));
}

}  // namespace reactor
