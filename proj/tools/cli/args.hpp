#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopfaz/matrix.hpp"

namespace hopfaz::cli {

/// Malformed command-line value.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Scalar parse_scalar_arg(const Field& f, std::string_view text, const std::string& what);
/// "a,b;c,d" or @file holding a JSON array of rows.
Matrix parse_matrix_arg(const Field& f, std::string_view text, const std::string& what);
/// "a,b,c" or @file holding a JSON array.
Vector parse_vector_arg(const Field& f, std::string_view text, const std::string& what);
/// Comma-separated words, trimmed, empty entries rejected.
std::vector<std::string> split_list(std::string_view text);

std::string matrix_to_string(const Matrix& m);
std::string vector_to_string(const Vector& v);

} // namespace hopfaz::cli
