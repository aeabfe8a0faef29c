#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "eigpert/errors.hpp"
#include "eigpert/fuzz.hpp"
#include "eigpert/matrix.hpp"

namespace eigpert {

/// Malformed matrix file. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// Parses the text matrix format:
///
///   matrix <rows> <cols>
///   <entry> <entry> ...      one line per row
///
/// An entry is a rational `[-]digits[/digits]` or `re,im`. `#` starts a
/// comment that runs to the end of the line; blank lines are ignored.
ExactMatrix parse_matrix(std::string_view text);

/// Reads and parses a file; unreadable files raise InputError.
ExactMatrix read_matrix_file(const std::filesystem::path& path);

/// Canonical text form (lowest terms, single spaces, trailing newline).
std::string print_matrix(const ExactMatrix& m);

/// Writes `<dir>/A.mat`, `<dir>/B.mat` and `<dir>/README.txt` (seed, trial
/// and reason); creates the directory. Returns the directory.
std::filesystem::path write_bundle(const std::filesystem::path& dir, const ReproductionBundle& bundle);

}  // namespace eigpert
