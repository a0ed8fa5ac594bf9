#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "latcol/matrix.hpp"
#include "latcol/subspace.hpp"

namespace latcol {

// Matrix text file:
//   rows cols
//   <rows lines of cols scalars>
//   spectrum: l1 l2 ...      (optional)
// Blank lines and lines starting with '#' are ignored.
struct MatrixFile {
    Matrix matrix;
    std::optional<std::vector<Scalar>> spectrum;
};

/// Parses a matrix file. Errors are InputError with a "source:line:col:" prefix.
[[nodiscard]] MatrixFile parse_matrix_file(std::string_view text, std::string_view source = "<input>");
[[nodiscard]] MatrixFile read_matrix_file(const std::string& path);
[[nodiscard]] std::string format_matrix_file(const Matrix& m,
                                             const std::optional<std::vector<Scalar>>& spectrum = std::nullopt);

/// Comma- or whitespace-separated scalars, e.g. "1,2+i,-1/2".
[[nodiscard]] std::vector<Scalar> parse_scalar_list(std::string_view text, std::string_view source = "<argument>");

/// Subspace as "ambient dim" followed by its canonical basis in matrix-file form.
[[nodiscard]] std::string format_subspace(const Subspace& s);
[[nodiscard]] Subspace parse_subspace(std::string_view text, std::string_view source = "<input>");

/// 64-bit FNV-1a, rendered as 16 hex digits.
[[nodiscard]] std::string fnv1a_hex(std::string_view data);

// Line-oriented key-value report with fields in insertion order.
class Report {
public:
    explicit Report(std::string command);

    void add(std::string key, std::string value);
    void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
    void add_inputs(std::string_view canonical_inputs);
    /// Appended last as "timing_ms"; the only field allowed to differ between runs.
    void set_timing(std::chrono::steady_clock::duration elapsed);

    void write(std::ostream& out) const;
    [[nodiscard]] std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::optional<double> timing_ms_;
};

}  // namespace latcol
