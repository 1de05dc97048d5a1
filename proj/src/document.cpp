// SPDX-License-Identifier: Apache-2.0
#include "csalg/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace csalg {

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& message)
    : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + message),
      line(line_),
      column(column_) {}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Splits into tokens, dropping '#' comments. Each inner vector is one line.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      const std::size_t b = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      toks.push_back({std::string(line.substr(b, i - b)), line_no, b + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
  return lines;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  for (auto& line : tokenize_lines(text))
    for (auto& t : line) out.push_back(std::move(t));
  return out;
}

std::size_t parse_count(const Token& t) {
  if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(t.line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  try {
    return std::stoull(t.text);
  } catch (const std::out_of_range&) {
    throw ParseError(t.line, t.column, "integer out of range: '" + t.text + "'");
  }
}

Rational parse_coeff(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const RationalFormatError& e) {
    throw ParseError(t.line, t.column, e.what());
  }
}

Vec parse_coeffs(const std::vector<Token>& line, std::size_t from, std::size_t dim) {
  if (line.size() - from != dim) {
    const Token& at = from < line.size() ? line[from] : line.back();
    throw ParseError(at.line, at.column,
                     "expected " + std::to_string(dim) + " coefficients, got " + std::to_string(line.size() - from));
  }
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = parse_coeff(line[from + k]);
  return v;
}

std::string join(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  AlgebraDocument doc;
  bool have_dim = false;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& line : tokenize_lines(text)) {
    const Token& key = line.front();
    if (key.text == "algebra") {
      if (line.size() != 2) throw ParseError(key.line, key.column, "'algebra' takes exactly one name");
      doc.name = line[1].text;
    } else if (key.text == "dim") {
      if (have_dim) throw ParseError(key.line, key.column, "duplicate 'dim'");
      if (line.size() != 2) throw ParseError(key.line, key.column, "'dim' takes exactly one value");
      doc.dim = parse_count(line[1]);
      have_dim = true;
    } else if (!have_dim) {
      throw ParseError(key.line, key.column, "'dim' must precede '" + key.text + "'");
    } else if (key.text == "labels") {
      if (!doc.labels.empty()) throw ParseError(key.line, key.column, "duplicate 'labels'");
      if (line.size() - 1 != doc.dim)
        throw ParseError(key.line, key.column, "expected " + std::to_string(doc.dim) + " labels");
      for (std::size_t k = 1; k < line.size(); ++k) doc.labels.push_back(line[k].text);
    } else if (key.text == "unit") {
      if (doc.unit) throw ParseError(key.line, key.column, "duplicate 'unit'");
      doc.unit = parse_coeffs(line, 1, doc.dim);
    } else if (key.text == "product") {
      if (line.size() < 4 || line[3].text != ":")
        throw ParseError(key.line, key.column, "expected 'product i j : coefficients'");
      const std::size_t i = parse_count(line[1]), j = parse_count(line[2]);
      if (i >= doc.dim) throw ParseError(line[1].line, line[1].column, "basis index out of range");
      if (j >= doc.dim) throw ParseError(line[2].line, line[2].column, "basis index out of range");
      if (!seen.insert({i, j}).second)
        throw ParseError(key.line, key.column,
                         "product " + std::to_string(i) + " " + std::to_string(j) + " given twice");
      doc.products.push_back({i, j, parse_coeffs(line, 4, doc.dim)});
    } else {
      throw ParseError(key.line, key.column, "unknown keyword '" + key.text + "'");
    }
  }
  if (!have_dim) throw ParseError(1, 1, "missing 'dim'");
  return doc;
}

FinAlgebra to_algebra(const AlgebraDocument& doc) {
  const std::size_t n = doc.dim;
  std::vector<Rational> c(n * n * n, Rational(0));
  for (const auto& p : doc.products)
    for (std::size_t k = 0; k < n; ++k) c[(p.i * n + p.j) * n + k] = p.coeffs[k];
  return FinAlgebra(n, std::move(c), doc.unit, doc.labels, doc.name);
}

AlgebraDocument to_document(const FinAlgebra& a) {
  AlgebraDocument doc;
  doc.name = a.name();
  doc.dim = a.dim();
  doc.unit = a.unit();
  doc.labels = a.labels();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec p = a.basis_product(i, j);
      if (!is_zero(p)) doc.products.push_back({i, j, std::move(p)});
    }
  return doc;
}

FinAlgebra parse_algebra_document(std::string_view text) { return to_algebra(parse_document(text)); }

std::string serialize_algebra(const FinAlgebra& a) {
  const AlgebraDocument doc = to_document(a);
  std::ostringstream out;
  if (!doc.name.empty()) out << "algebra " << doc.name << '\n';
  out << "dim " << doc.dim << '\n';
  if (!doc.labels.empty()) {
    out << "labels";
    for (const auto& l : doc.labels) out << ' ' << l;
    out << '\n';
  }
  if (doc.unit) out << "unit " << join(*doc.unit) << '\n';
  for (const auto& p : doc.products) out << "product " << p.i << ' ' << p.j << " : " << join(p.coeffs) << '\n';
  return out.str();
}

FiniteGroup parse_cayley_table(std::string_view text) {
  const auto toks = tokenize(text);
  if (toks.size() < 2) throw ParseError(1, 1, "Cayley table needs an order and an identity index");
  const std::size_t order = parse_count(toks[0]);
  const std::size_t identity = parse_count(toks[1]);
  if (toks.size() != 2 + order * order)
    throw ParseError(toks.back().line, toks.back().column,
                     "expected " + std::to_string(order * order) + " table entries, got " +
                         std::to_string(toks.size() - 2));
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) table[g][h] = parse_count(toks[2 + g * order + h]);
  return FiniteGroup(std::move(table), identity);
}

std::string serialize_cayley_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n' << g.identity() << '\n';
  for (const auto& row : g.cayley()) {
    for (std::size_t h = 0; h < row.size(); ++h) out << (h ? " " : "") << row[h];
    out << '\n';
  }
  return out.str();
}

LinearMap parse_map(std::string_view text) {
  const auto toks = tokenize(text);
  if (toks.empty()) throw ParseError(1, 1, "empty map file");
  const std::size_t dim = parse_count(toks[0]);
  if (toks.size() != 1 + dim * dim)
    throw ParseError(toks.back().line, toks.back().column,
                     "expected " + std::to_string(dim * dim) + " map entries, got " + std::to_string(toks.size() - 1));
  Vec flat(dim * dim);
  for (std::size_t k = 0; k < flat.size(); ++k) flat[k] = parse_coeff(toks[1 + k]);
  return LinearMap::from_flat(dim, flat);
}

std::string serialize_map(const LinearMap& m) {
  std::ostringstream out;
  out << m.dim() << '\n';
  for (std::size_t r = 0; r < m.dim(); ++r) out << join(m.matrix.row(r)) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace csalg
