#ifndef OPINEQ_INTERVAL_HPP
#define OPINEQ_INTERVAL_HPP

#include <string>

#include "opineq/errors.hpp"

namespace opineq {

/// Spectral window [m, M], m < M strictly.
struct Interval {
    double m;
    double M;

    Interval(double m_, double M_) : m(m_), M(M_) {
        if (!(m < M))
            throw InvalidParameterError("interval requires m < M, got [" +
                                        std::to_string(m) + ", " + std::to_string(M) + "]");
    }

    double width() const { return M - m; }
    bool contains(double z, double slack = 0.0) const { return z >= m - slack && z <= M + slack; }
};

}  // namespace opineq

#endif
