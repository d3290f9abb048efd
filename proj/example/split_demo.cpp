// Generate a pickup-and-delivery instance with time windows, split one tour
// with every algorithm and print the resulting routes.
#include <iostream>

#include <linsplit/linsplit.hpp>

int main() {
    using namespace linsplit;

    BaseParams base;
    base.n = 40;
    base.seed = 2024;
    base.coord_max = 100;
    Generated g = generate_base(base);
    Instance inst = extend_to_spdtw(g.instance, g.tour, base.seed, 5.0);
    inst = apply_multipliers(inst, 2.0, 3.0);
    const TourData data = project_tour(inst, g.tour);

    const PenaltyParams params{10.0, 10.0};
    for (Variant v : {Variant::cvrp, Variant::hard_spdtw, Variant::soft_spd, Variant::soft_tw}) {
        const SplitResult fast = run_split(data, v, Algorithm::linear, params);
        const SplitResult slow = run_split(data, v, Algorithm::bellman, params);
        std::cout << to_string(v) << ": cost " << fast.total_cost << " (bellman " << slow.total_cost << "), "
                  << fast.routes.size() << " routes, " << fast.counters.total() << " deque ops\n ";
        for (const Route& r : fast.routes) {
            std::cout << " [";
            for (std::size_t pos = r.from + 1; pos <= r.to; ++pos)
                std::cout << (pos > r.from + 1 ? " " : "") << data.label[pos];
            std::cout << ']';
        }
        std::cout << '\n';
    }
}
