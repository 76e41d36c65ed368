#pragma once

#include <string>

#include "covtest/data_matrix.hpp"

namespace covtest {

/**
 * @brief Read an observations CSV: one row per observation, one column per
 *        component. A first row containing any non-numeric cell is treated
 *        as a header and skipped. Returns the p x n (column = observation)
 *        matrix wrapper.
 *
 * @throws IoError on unreadable files, ragged rows, or non-numeric cells.
 */
DataMatrix read_data_csv(const std::string& path);

/**
 * @brief Read a square covariance CSV (p x p, optional header row).
 *
 * @throws IoError on parse failures; symmetry violations surface as
 *         DomainError from the CovMatrix invariant.
 */
CovMatrix read_cov_csv(const std::string& path);

} // namespace covtest
