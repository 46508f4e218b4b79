#pragma once

namespace zetalab {

// Kahan-compensated accumulator. Works for double and std::complex<double>
// (complex +/- are componentwise, so the compensation carries per component).
template <typename T>
struct CompensatedSum {
    T sum{};
    T compensation{};

    void add(const T& value) {
        const T y = value - compensation;
        const T t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    const T& value() const { return sum; }
};

}  // namespace zetalab
