#include "cli/args.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hopfaz::cli {

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

nlohmann::json load_json_file(std::string_view path, const std::string& what)
{
    std::ifstream in{std::string(path)};
    if (!in) throw InputError(what + ": cannot open '" + std::string(path) + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(what + ": '" + std::string(path) + "' is not valid JSON: " + e.what());
    }
}

Scalar json_scalar(const Field& f, const nlohmann::json& j, const std::string& what)
{
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return parse_scalar_arg(f, j.get<std::string>(), what);
    throw InputError(what + ": expected an integer or a string \"a/b\"");
}

} // namespace

Scalar parse_scalar_arg(const Field& f, std::string_view text, const std::string& what)
{
    try {
        return f.parse_scalar(text);
    } catch (const std::exception& e) {
        throw InputError(what + ": " + e.what());
    }
}

Matrix parse_matrix_arg(const Field& f, std::string_view text, const std::string& what)
{
    std::vector<Vector> rows;
    if (!text.empty() && text.front() == '@') {
        nlohmann::json j = load_json_file(text.substr(1), what);
        if (!j.is_array()) throw InputError(what + ": JSON matrix must be an array of rows");
        for (std::size_t r = 0; r < j.size(); ++r) {
            if (!j[r].is_array()) throw InputError(what + ": row " + std::to_string(r) + " is not an array");
            Vector row;
            for (std::size_t c = 0; c < j[r].size(); ++c)
                row.push_back(json_scalar(f, j[r][c], what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
            rows.push_back(row);
        }
    } else {
        for (const auto& r : split(text, ';')) {
            Vector row;
            for (const auto& entry : split(r, ',')) row.push_back(parse_scalar_arg(f, entry, what));
            rows.push_back(row);
        }
    }
    if (rows.empty() || rows.front().empty()) throw InputError(what + ": empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw InputError(what + ": rows have different lengths");
    return Matrix::from_rows(f, rows);
}

Vector parse_vector_arg(const Field& f, std::string_view text, const std::string& what)
{
    Vector out;
    if (!text.empty() && text.front() == '@') {
        nlohmann::json j = load_json_file(text.substr(1), what);
        if (!j.is_array()) throw InputError(what + ": JSON vector must be an array");
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(json_scalar(f, j[i], what + "[" + std::to_string(i) + "]"));
        return out;
    }
    for (const auto& entry : split(text, ',')) out.push_back(parse_scalar_arg(f, entry, what));
    return out;
}

std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> out = split(text, ',');
    for (const auto& w : out)
        if (w.empty()) throw InputError("empty entry in list '" + std::string(text) + "'");
    return out;
}

std::string matrix_to_string(const Matrix& m)
{
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ';';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m(r, c);
        }
    }
    return os.str();
}

std::string vector_to_string(const Vector& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace hopfaz::cli
