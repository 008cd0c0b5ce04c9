#include "mtg/constructions.hpp"

#include <stdexcept>
#include <string>

namespace mtg {

namespace {

void require_cycle_order(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
}

} // namespace

Representation alternating_cycle_representation(int n) {
    require_cycle_order(n);
    std::vector<Rational> ranks;
    ranks.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) ranks.emplace_back(i % 2 == 1 ? i : -i);
    const Rational last = Rational(n) - Rational(1, 2);
    ranks.push_back(n % 2 == 1 ? last : -last);

    const Rational closing = ranks.front() + ranks.back();
    const Rational tenth(1, 10);
    const Rational band(11, 10);
    std::vector<Rational> thresholds;
    if (n % 2 == 1) {
        thresholds = {-band, band, closing - tenth, closing + tenth};
    } else {
        thresholds = {closing - tenth, closing + tenth, -band, band};
    }
    return Representation(std::move(ranks), std::move(thresholds));
}

Representation construct_cycle_rep(int n) {
    require_cycle_order(n);
    if (n == 3) return Representation({0, 0, 0}, {0});
    if (n == 4) return Representation({0, 1, 0, 1}, {Rational(9, 10), Rational(11, 10)});
    return alternating_cycle_representation(n);
}

int thresholds_count_of_construction(int n) {
    require_cycle_order(n);
    if (n == 3) return 1;
    if (n == 4) return 2;
    return 4;
}

} // namespace mtg
