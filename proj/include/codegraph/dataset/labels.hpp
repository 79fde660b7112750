#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace codegraph::dataset {

struct LabelRecord {
    /// Absolute, lexically normalized path of the labelled source file.
    std::string path;
    double raw_seconds = 0.0;
    /// Total measurement runs behind `raw_seconds` (1 when the column is absent).
    std::uint32_t runs = 1;
};

struct LabelSet {
    /// One record per distinct path, sorted by path.
    std::vector<LabelRecord> records;
    std::vector<std::string> warnings;
};

class LabelError : public std::runtime_error {
public:
    LabelError(std::string file, std::size_t line, const std::string& message)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + message), file_(std::move(file)), line_(line) {}

    [[nodiscard]] const std::string& file() const noexcept { return file_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

/// Reads a `path,seconds[,runs]` CSV. Relative paths are resolved against the
/// CSV's directory. Rows repeating a path are merged into their mean, each
/// row weighted by its run count. Files missing on disk only produce a warning.
///
/// Throws LabelError for a bad header, a non-numeric or non-positive
/// `seconds`, or a non-positive `runs`.
LabelSet ingest_labels(const std::filesystem::path& csv_path);

/// Same, from text already in memory; `base_dir` anchors relative paths.
LabelSet parse_labels(std::string_view text, const std::filesystem::path& base_dir,
                      const std::string& source_name = "<labels>");

}  // namespace codegraph::dataset
