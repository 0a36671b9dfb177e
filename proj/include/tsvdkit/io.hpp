#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tsvdkit/tensor3.hpp"

namespace tsvdkit {

// Tensor documents are JSON objects
//
//     {"dims": [m, n, p], "data": [...]}
//
// with data[k*m*n + i*n + j] = a(i, j, k) (0-based), i.e. frontal-slice major
// and row-major within a slice. Numbers are written in the shortest decimal
// form that reads back to the identical double.

/// Throws FormatError with the offending line/column or field name.
Tensor3 parse_tensor(std::string_view text);
std::string format_tensor(const Tensor3& a);

Tensor3 read_tensor_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, const Tensor3& a);

} // namespace tsvdkit
