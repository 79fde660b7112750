#include "codegraph/dataset/splits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace codegraph::dataset {
namespace {

constexpr double kEps = 1e-9;

std::size_t floor_share(double ratio, std::size_t n) {
    return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + kEps));
}

// Unbiased draw in [0, bound) that does not depend on the standard library's
// distribution implementation.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = draw_below(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

// Unit-capacity bipartite transport from projects (supply `rows`) to splits
// (demand `cols`), over the allowed cells. Returns true when every demand is met.
class Transport {
public:
    Transport(std::vector<std::size_t> rows, std::array<std::size_t, 3> cols,
              std::vector<std::array<std::size_t, 3>> cap)
        : supply_(std::move(rows)), demand_(cols), cap_(std::move(cap)), flow_(cap_.size()) {}

    bool solve() {
        std::size_t needed = demand_[0] + demand_[1] + demand_[2];
        while (needed > 0) {
            seen_rows_.assign(supply_.size(), false);
            bool found = false;
            for (std::size_t p = 0; p < supply_.size() && !found; ++p) {
                if (used_supply(p) < supply_[p]) found = augment_from_row(p);
            }
            if (!found) return false;
            --needed;
        }
        return true;
    }

    [[nodiscard]] const std::vector<std::array<std::size_t, 3>>& flow() const { return flow_; }

private:
    std::size_t used_supply(std::size_t p) const { return flow_[p][0] + flow_[p][1] + flow_[p][2]; }
    std::size_t used_demand(std::size_t k) const {
        std::size_t s = 0;
        for (const auto& f : flow_) s += f[k];
        return s;
    }

    // Alternating-path search: row -> column (forward cell) -> other row (via a
    // cell that already carries flow into that column).
    bool augment_from_row(std::size_t p) {
        seen_rows_[p] = true;
        for (std::size_t k = 0; k < 3; ++k) {
            if (flow_[p][k] >= cap_[p][k]) continue;
            if (used_demand(k) < demand_[k]) {
                ++flow_[p][k];
                return true;
            }
            for (std::size_t q = 0; q < supply_.size(); ++q) {
                if (seen_rows_[q] || flow_[q][k] == 0) continue;
                // Move one unit of q's flow away from k, freeing room for p.
                --flow_[q][k];
                ++flow_[p][k];
                if (augment_from_row(q)) return true;
                ++flow_[q][k];
                --flow_[p][k];
            }
        }
        return false;
    }

    std::vector<std::size_t> supply_;
    std::array<std::size_t, 3> demand_;
    std::vector<std::array<std::size_t, 3>> cap_;
    std::vector<std::array<std::size_t, 3>> flow_;
    std::vector<bool> seen_rows_;
};

}  // namespace

std::string_view name_of(Split s) noexcept {
    switch (s) {
        case Split::train:
            return "train";
        case Split::val:
            return "val";
        case Split::test:
            return "test";
    }
    return "?";
}

std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& ratios) {
    const std::size_t train = floor_share(ratios[0], n);
    const std::size_t val = std::min(n - train, floor_share(ratios[1], n));
    return {train, val, n - train - val};
}

std::vector<SplitAssignment> make_splits(std::vector<SplitItem> items, const SplitRatios& ratios,
                                         std::uint64_t seed) {
    for (double r : ratios) {
        if (!(r >= 0.0)) throw std::invalid_argument("split ratios must be non-negative");
    }
    if (std::abs(ratios[0] + ratios[1] + ratios[2] - 1.0) > 1e-6) {
        throw std::invalid_argument("split ratios must sum to 1");
    }

    std::map<std::string, std::vector<std::string>> by_project;
    std::set<std::string> ids;
    for (SplitItem& it : items) {
        if (!ids.insert(it.graph_id).second) throw std::invalid_argument("duplicate graph id '" + it.graph_id + "'");
        by_project[it.project].push_back(std::move(it.graph_id));
    }
    for (const auto& [project, members] : by_project) {
        if (members.size() < 3) {
            throw std::invalid_argument("project '" + project + "' has " + std::to_string(members.size()) +
                                        " graphs; at least 3 are needed to populate train/val/test");
        }
    }

    // Per-project floors, plus the cells whose share has a fractional part.
    const std::size_t total = ids.size();
    const std::array<std::size_t, 3> target = split_sizes(total, ratios);
    std::vector<std::array<std::size_t, 3>> base;
    std::vector<std::array<std::size_t, 3>> frac_cap;
    std::vector<std::size_t> spare;
    std::array<std::size_t, 3> base_sum{};
    for (const auto& [project, members] : by_project) {
        const std::size_t n = members.size();
        std::array<std::size_t, 3> b{};
        std::array<std::size_t, 3> cap{};
        for (std::size_t k = 0; k < 3; ++k) {
            const double share = ratios[k] * static_cast<double>(n);
            b[k] = floor_share(ratios[k], n);
            cap[k] = share - static_cast<double>(b[k]) > kEps ? 1 : 0;
            base_sum[k] += b[k];
        }
        spare.push_back(n - b[0] - b[1] - b[2]);
        base.push_back(b);
        frac_cap.push_back(cap);
    }
    std::array<std::size_t, 3> demand{};
    for (std::size_t k = 0; k < 3; ++k) demand[k] = target[k] - std::min(target[k], base_sum[k]);

    // First try floor/ceil in every cell; if the dataset totals rule that out,
    // only train and val are rounded that way and test takes what is left.
    std::vector<std::array<std::size_t, 3>> extra;
    Transport exact(spare, demand, frac_cap);
    if (exact.solve()) {
        extra = exact.flow();
    } else {
        auto relaxed_cap = frac_cap;
        for (auto& c : relaxed_cap) c[2] = 2;
        Transport relaxed(spare, demand, relaxed_cap);
        if (!relaxed.solve()) throw std::logic_error("split allocation failed");
        extra = relaxed.flow();
    }

    std::mt19937_64 rng(seed);
    std::vector<SplitAssignment> out;
    out.reserve(total);
    std::size_t p = 0;
    for (auto& [project, members] : by_project) {
        std::sort(members.begin(), members.end());
        shuffle(members, rng);
        const std::size_t n_train = base[p][0] + extra[p][0];
        const std::size_t n_val = base[p][1] + extra[p][1];
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Split s = i < n_train ? Split::train : (i < n_train + n_val ? Split::val : Split::test);
            out.push_back(SplitAssignment{members[i], s, project});
        }
        ++p;
    }
    std::sort(out.begin(), out.end(),
              [](const SplitAssignment& a, const SplitAssignment& b) { return a.graph_id < b.graph_id; });
    return out;
}

}  // namespace codegraph::dataset
