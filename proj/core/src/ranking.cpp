#include "uoms/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "uoms/error.hpp"

namespace uoms {

rank_vector to_rank_vector(std::span<const double> column) {
    const std::size_t n = column.size();
    if (n == 0) fail(errc::empty_input, "cannot rank an empty column");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (column[a] != column[b]) return column[a] > column[b];
        return a < b;
    });

    rank_vector rv;
    rv.ranks.resize(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && column[order[j + 1]] == column[order[i]]) ++j;
        // positions i+1 .. j+1 (1-based) share the average rank
        const double avg = 0.5 * static_cast<double>(i + 1 + j + 1);
        for (std::size_t k = i; k <= j; ++k) rv.ranks[order[k]] = avg;
        i = j + 1;
    }
    return rv;
}

bool is_constant_column(std::span<const double> column) {
    for (std::size_t i = 1; i < column.size(); ++i) {
        if (column[i] != column[0]) return false;
    }
    return true;
}

} // namespace uoms
