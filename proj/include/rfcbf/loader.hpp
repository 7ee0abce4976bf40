#pragma once

#include <stdexcept>
#include <string>

#include "rfcbf/dataset.hpp"

namespace rfcbf {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Load a delimiter-separated text file with a header row. The delimiter
/// is auto-detected among comma, semicolon and tab. Cells equal to
/// `missing_token` become missing values. `class_column` picks the class
/// column by header name, by 0-based index, or "last" (the default when
/// empty); class values map to contiguous label indices in
/// first-appearance order.
RawDataset load_dataset(const std::string& path,
                        const std::string& class_column = "",
                        const std::string& missing_token = "?");

/// Same, but from an in-memory string (`name` is used in messages).
RawDataset parse_dataset(const std::string& text, const std::string& name,
                         const std::string& class_column = "",
                         const std::string& missing_token = "?");

}  // namespace rfcbf
