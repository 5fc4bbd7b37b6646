#pragma once

#include "rgl/exactnum.hpp"

#include <vector>

namespace rgl::detail {

// All-pairs tightest upper bounds U(p,q) on x_p - x_q, updated one constraint at a time.
template <class T>
class ClosureMatrix {
public:
    using Value = Eps<T>;

    explicit ClosureMatrix(int n) : n_(n), finite_(n * n, 0), value_(n * n) {
        for (int p = 0; p < n; ++p) {
            finite_[p * n + p] = 1;
            value_[p * n + p] = Value(T(0), 0);
        }
    }

    // Adds x_i - x_j <= b. Returns false (leaving the matrix unspecified) when infeasible.
    bool add(int i, int j, const Value& b) {
        const int n = n_;
        if (finite_[j * n + i] && value_[j * n + i] + b < Value(T(0), 0)) return false;
        if (finite_[i * n + j] && value_[i * n + j] <= b) return true;
        for (int p = 0; p < n; ++p) {
            if (!finite_[p * n + i]) continue;
            Value left = value_[p * n + i] + b;
            for (int q = 0; q < n; ++q) {
                if (!finite_[j * n + q]) continue;
                Value cand = left + value_[j * n + q];
                int idx = p * n + q;
                if (!finite_[idx] || cand < value_[idx]) {
                    finite_[idx] = 1;
                    value_[idx] = cand;
                }
            }
        }
        return true;
    }

private:
    int n_;
    std::vector<char> finite_;
    std::vector<Value> value_;
};

}  // namespace rgl::detail
