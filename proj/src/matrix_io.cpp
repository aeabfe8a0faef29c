#include "eigpert/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace eigpert {

ParseError::ParseError(std::size_t line, std::size_t column, std::string token, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message +
                 (token.empty() ? std::string() : " ('" + token + "')")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    if (k >= line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

bool parse_nat(std::string_view s, std::size_t& out) {
  if (s.empty() || s.size() > 9) return false;
  out = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    out = out * 10 + static_cast<std::size_t>(ch - '0');
  }
  return true;
}

GaussianRational parse_entry(const Token& tok, std::size_t line) {
  const std::string_view s = tok.text;
  const auto comma = s.find(',');
  std::string_view re_text = s.substr(0, comma);
  std::string_view im_text = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
  Rational re;
  Rational im;
  bool zero_den = false;
  auto fail = [&](bool zero) -> GaussianRational {
    throw ParseError(line, tok.column, std::string(s), zero ? "zero denominator" : "malformed entry");
  };
  if (!parse_rational(re_text, re, zero_den)) return fail(zero_den);
  if (comma != std::string_view::npos && !parse_rational(im_text, im, zero_den)) return fail(zero_den);
  return {re, im};
}

}  // namespace

ExactMatrix parse_matrix(std::string_view text) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::size_t rows_read = 0;
  std::vector<GaussianRational> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0].text != "matrix")
        throw ParseError(line_no, tokens[0].column, std::string(tokens[0].text), "expected header 'matrix <rows> <cols>'");
      if (tokens.size() < 3) throw ParseError(line_no, tokens[0].column, std::string(line), "header needs rows and cols");
      if (!parse_nat(tokens[1].text, rows) || rows == 0)
        throw ParseError(line_no, tokens[1].column, std::string(tokens[1].text), "row count must be a positive integer");
      if (!parse_nat(tokens[2].text, cols) || cols == 0)
        throw ParseError(line_no, tokens[2].column, std::string(tokens[2].text), "column count must be a positive integer");
      if (tokens.size() > 3)
        throw ParseError(line_no, tokens[3].column, std::string(tokens[3].text), "trailing text after header");
      have_header = true;
      entries.reserve(rows * cols);
      continue;
    }

    if (rows_read == rows)
      throw ParseError(line_no, tokens[0].column, std::string(tokens[0].text),
                       "trailing content after " + std::to_string(rows) + " rows");
    if (tokens.size() != cols) {
      const Token& at = tokens.size() > cols ? tokens[cols] : tokens.back();
      throw ParseError(line_no, at.column, std::string(at.text),
                       "expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) entries.push_back(parse_entry(tok, line_no));
    ++rows_read;
  }

  if (!have_header) throw ParseError(line_no, 1, "", "missing header 'matrix <rows> <cols>'");
  if (rows_read != rows)
    throw ParseError(line_no, 1, "", "expected " + std::to_string(rows) + " rows, found " + std::to_string(rows_read));
  return ExactMatrix(rows, cols, std::move(entries));
}

ExactMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read matrix file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.token(), path.string() + ": " + std::string(e.what()));
  }
}

std::string print_matrix(const ExactMatrix& m) {
  std::string out = "matrix " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m(r, c).token();
    }
    out += '\n';
  }
  return out;
}

std::filesystem::path write_bundle(const std::filesystem::path& dir, const ReproductionBundle& bundle) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& body) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw InputError("cannot write " + (dir / name).string());
    out << body;
  };
  write("A.mat", print_matrix(bundle.a));
  write("B.mat", print_matrix(bundle.b));
  write("README.txt", "seed " + std::to_string(bundle.seed) + "\ntrial " + std::to_string(bundle.trial) +
                          "\nreason " + bundle.reason + "\nreplay: eigpert bound --a A.mat --b B.mat\n");
  return dir;
}

}  // namespace eigpert
