#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Thrown when a coin has |a| = 0 and a quantity depending on 1/|a|^2 is requested.
struct singular_coin_error : std::domain_error {
    explicit singular_coin_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a limiting-distribution quantity is requested for a trivial coin.
struct no_limit_error : std::domain_error {
    explicit no_limit_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an iterative numerical routine fails to converge within its refinement cap.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qwalk
