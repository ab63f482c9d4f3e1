#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace levymix {

/// An x-grid paired with values; xs strictly increasing, equal lengths.
struct GridFunction {
    std::vector<double> xs;
    std::vector<double> values;

    void validate() const {
        if (xs.size() != values.size())
            throw std::domain_error("GridFunction: length mismatch");
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (!(xs[i] > xs[i - 1]))
                throw std::domain_error("GridFunction: xs must be strictly increasing");
    }
};

inline std::vector<double> make_grid(double min, double max, int count) {
    if (count < 2) throw std::domain_error("grid: count must be >= 2");
    if (!(min < max)) throw std::domain_error("grid: min must be < max");
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i)
        xs[i] = min + (max - min) * static_cast<double>(i) / (count - 1);
    return xs;
}

}  // namespace levymix
