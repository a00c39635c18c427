#include "paradox/node_table.hpp"

#include <algorithm>

#include "paradox/error.hpp"

namespace paradox {

NodeTable::NodeTable(std::size_t rows, std::vector<std::string> columns)
    : rows_(rows), names_(std::move(columns)), cells_(names_.size(), std::vector<Cell>(rows)) {}

bool NodeTable::has_column(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t NodeTable::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorCode::MissingColumn, "no metadata column named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::span<const NodeTable::Cell> NodeTable::column(std::string_view name) const {
  return cells_[index_of(name)];
}

void NodeTable::set(std::size_t row, std::string_view column, Cell value) {
  if (row >= rows_) throw Error(ErrorCode::IndexOutOfRange, "metadata row " + std::to_string(row));
  cells_[index_of(column)][row] = std::move(value);
}

NodeTable NodeTable::select_rows(std::span<const NodeId> rows) const {
  NodeTable out(rows.size(), names_);
  for (std::size_t c = 0; c < names_.size(); ++c) {
    for (std::size_t k = 0; k < rows.size(); ++k) out.cells_[c][k] = cells_[c].at(rows[k]);
  }
  return out;
}

}  // namespace paradox
