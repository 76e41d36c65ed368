#include "covtest/csv_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "covtest/errors.hpp"

namespace covtest {

namespace {

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

bool parse_double(const std::string& cell, double& out) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin)
        return false;
    while (*end == ' ' || *end == '\t' || *end == '\r')
        ++end;
    return *end == '\0';
}

// Rows of numeric cells; a non-numeric first row is interpreted as a header.
std::vector<std::vector<double>> read_numeric_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open file: " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        // Skip blank lines (commonly a trailing newline).
        bool blank = true;
        for (char ch : line)
            if (ch != ' ' && ch != '\t') { blank = false; break; }
        if (blank)
            continue;

        const auto cells = split_cells(line);
        std::vector<double> row;
        row.reserve(cells.size());
        bool numeric = true;
        for (const auto& cell : cells) {
            double v = 0.0;
            if (!parse_double(cell, v)) {
                numeric = false;
                break;
            }
            row.push_back(v);
        }
        if (!numeric) {
            if (first) {
                first = false;
                continue; // header row
            }
            throw IoError(path + ":" + std::to_string(line_no) +
                          ": non-numeric cell outside the header row");
        }
        first = false;
        if (!rows.empty() && row.size() != rows.front().size())
            throw IoError(path + ":" + std::to_string(line_no) +
                          ": ragged row (expected " +
                          std::to_string(rows.front().size()) + " cells, got " +
                          std::to_string(row.size()) + ")");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw IoError(path + ": no numeric rows");
    return rows;
}

Eigen::MatrixXd rows_to_matrix(const std::vector<std::vector<double>>& rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.front().size());
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

} // namespace

DataMatrix read_data_csv(const std::string& path) {
    const auto rows = read_numeric_rows(path);
    // File rows are observations; the in-memory convention is one observation
    // per column.
    return DataMatrix(rows_to_matrix(rows).transpose());
}

CovMatrix read_cov_csv(const std::string& path) {
    const auto rows = read_numeric_rows(path);
    Eigen::MatrixXd m = rows_to_matrix(rows);
    if (m.rows() != m.cols())
        throw IoError(path + ": covariance matrix must be square, got " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return CovMatrix(std::move(m));
}

} // namespace covtest
