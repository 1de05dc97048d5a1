// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csalg/algebra.hpp"
#include "csalg/maps.hpp"

namespace csalg {

/// Syntax or content error in an input file, with a 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line;
  std::size_t column;
};

/// Plain-text algebra definition:
///
///   # comment
///   algebra M2
///   dim 4
///   labels e11 e12 e21 e22
///   unit 1 0 0 1
///   product 0 1 : 0 1 0 0
///
/// `product i j : c_0 ... c_{dim-1}` gives b_i b_j; omitted pairs are zero and
/// a pair may appear at most once. `algebra`, `labels`, `unit` are optional.
struct AlgebraDocument {
  std::string name;
  std::size_t dim = 0;
  std::optional<Vec> unit;
  std::vector<std::string> labels;
  struct Product {
    std::size_t i, j;
    Vec coeffs;
  };
  std::vector<Product> products;
};

AlgebraDocument parse_document(std::string_view text);
/// Validates associativity and the unit (AssociativityError / UnitError).
FinAlgebra to_algebra(const AlgebraDocument& doc);
AlgebraDocument to_document(const FinAlgebra& a);

FinAlgebra parse_algebra_document(std::string_view text);
/// Canonical text: header lines, then nonzero products in (i, j) order.
std::string serialize_algebra(const FinAlgebra& a);

/// Cayley table file: order, identity index, then order^2 indices row by row.
FiniteGroup parse_cayley_table(std::string_view text);
std::string serialize_cayley_table(const FiniteGroup& g);

/// Map file: dim, then dim^2 rationals in row-major order.
LinearMap parse_map(std::string_view text);
std::string serialize_map(const LinearMap& m);

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws FileError when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace csalg
