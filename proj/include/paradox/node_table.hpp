#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paradox/graph.hpp"

namespace paradox {

/// Categorical per-node metadata (gender, year, ...), one row per graph node.
/// A missing value is std::nullopt and still compares equal to another missing
/// value where a caller asks for that.
class NodeTable {
 public:
  using Cell = std::optional<std::string>;

  NodeTable() = default;
  NodeTable(std::size_t rows, std::vector<std::string> columns);

  std::size_t rows() const noexcept { return rows_; }
  const std::vector<std::string>& columns() const noexcept { return names_; }
  bool has_column(std::string_view name) const;

  /// Throws MissingColumn.
  std::span<const Cell> column(std::string_view name) const;
  void set(std::size_t row, std::string_view column, Cell value);

  /// Table restricted to `rows`, in that order.
  NodeTable select_rows(std::span<const NodeId> rows) const;

 private:
  std::size_t index_of(std::string_view name) const;

  std::size_t rows_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Cell>> cells_;  // column-major
};

}  // namespace paradox
