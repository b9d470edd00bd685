#include "contspec/finite_topology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace contspec {

namespace {

constexpr int kMaxPoints = 4;

void check_point_count(int n) {
    if (n < 1 || n > kMaxPoints)
        throw input_error("n exceeds exhaustive cap (1 <= n <= 4)");
}

std::uint32_t permute_subset(std::uint32_t subset, const PointMap& perm) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if ((subset >> i) & 1u)
            out |= 1u << perm[i];
    }
    return out;
}

std::uint32_t permute_family(std::uint32_t family, const PointMap& perm, int n) {
    std::uint32_t out = 0;
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t s = 0; s < subsets; ++s) {
        if ((family >> s) & 1u)
            out |= 1u << permute_subset(s, perm);
    }
    return out;
}

PointMap compose_maps(const PointMap& first, const PointMap& then) {
    PointMap out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = then[first[i]];
    return out;
}

int element_order(const PointMap& perm) {
    PointMap id(perm.size());
    std::iota(id.begin(), id.end(), 0);
    PointMap acc = perm;
    int order = 1;
    while (acc != id) {
        acc = compose_maps(acc, perm);
        ++order;
    }
    return order;
}

} // namespace

std::vector<std::uint32_t> FiniteTopology::open_sets() const {
    std::vector<std::uint32_t> out;
    const std::uint32_t subsets = 1u << n_points;
    for (std::uint32_t s = 0; s < subsets; ++s) {
        if (is_open(s))
            out.push_back(s);
    }
    return out;
}

bool is_topology(std::uint32_t family, int n_points) {
    check_point_count(n_points);
    const std::uint32_t full = (1u << n_points) - 1;
    if (!((family >> 0) & 1u) || !((family >> full) & 1u))
        return false;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (!((family >> s) & 1u))
            continue;
        for (std::uint32_t t = s + 1; t <= full; ++t) {
            if (!((family >> t) & 1u))
                continue;
            if (!((family >> (s | t)) & 1u) || !((family >> (s & t)) & 1u))
                return false;
        }
    }
    return true;
}

std::vector<FiniteTopology> enumerate_topologies(int n_points) {
    check_point_count(n_points);
    const std::uint32_t full = (1u << n_points) - 1;
    const std::uint32_t fixed = 1u | (1u << full);
    const std::uint32_t free_subsets = (1u << n_points) - 2;
    std::vector<FiniteTopology> out;
    for (std::uint32_t middle = 0; middle < (1u << free_subsets); ++middle) {
        const std::uint32_t family = fixed | (middle << 1);
        if (is_topology(family, n_points))
            out.push_back({n_points, family});
    }
    return out;
}

FiniteTopology canonicalize_topology(const FiniteTopology& t) {
    std::uint32_t best = t.opens;
    for (const PointMap& perm : all_permutations(t.n_points))
        best = std::min(best, permute_family(t.opens, perm, t.n_points));
    return {t.n_points, best};
}

bool is_continuous_map(const PointMap& m, const FiniteTopology& t) {
    const std::uint32_t subsets = 1u << t.n_points;
    for (std::uint32_t s = 0; s < subsets; ++s) {
        if (!t.is_open(s))
            continue;
        std::uint32_t preimage = 0;
        for (int x = 0; x < t.n_points; ++x) {
            if ((s >> m[x]) & 1u)
                preimage |= 1u << x;
        }
        if (!t.is_open(preimage))
            return false;
    }
    return true;
}

std::vector<PointMap> all_permutations(int n_points) {
    check_point_count(n_points);
    PointMap base(static_cast<std::size_t>(n_points));
    std::iota(base.begin(), base.end(), 0);
    std::vector<PointMap> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<PointMap> continuous_bijections(const FiniteTopology& t) {
    std::vector<PointMap> out;
    for (const PointMap& perm : all_permutations(t.n_points)) {
        if (is_continuous_map(perm, t))
            out.push_back(perm);
    }
    return out;
}

GroupSignature signature_of(const std::vector<PointMap>& permutation_group) {
    GroupSignature sig;
    sig.order = permutation_group.size();
    for (const PointMap& p : permutation_group)
        sig.element_orders.push_back(element_order(p));
    std::sort(sig.element_orders.begin(), sig.element_orders.end());
    return sig;
}

GroupSignature trivial_signature() { return {1, {1}}; }

GroupSignature cyclic_signature(int k) {
    GroupSignature sig;
    sig.order = static_cast<std::size_t>(k);
    for (int i = 0; i < k; ++i)
        sig.element_orders.push_back(i == 0 ? 1 : k / std::gcd(i, k));
    std::sort(sig.element_orders.begin(), sig.element_orders.end());
    return sig;
}

GroupSignature symmetric3_signature() { return {6, {1, 2, 2, 2, 3, 3}}; }

std::string small_group_name(const GroupSignature& sig) {
    switch (sig.order) {
    case 1:
        return "trivial";
    case 2:
        return "C2";
    case 3:
        return "C3";
    case 4:
        return sig == cyclic_signature(4) ? "C4" : "C2xC2";
    case 5:
        return "C5";
    case 6:
        return sig == cyclic_signature(6) ? "C6" : "S3";
    default:
        return "order-" + std::to_string(sig.order);
    }
}

std::vector<TopologyClass> classify_topologies(int n_points) {
    check_point_count(n_points);
    std::map<std::uint32_t, std::size_t> counts;
    for (const FiniteTopology& t : enumerate_topologies(n_points))
        ++counts[canonicalize_topology(t).opens];

    std::vector<TopologyClass> classes;
    for (const auto& [canonical, labeled_count] : counts) {
        TopologyClass c;
        c.representative = {n_points, canonical};
        c.labeled_count = labeled_count;
        const auto group = continuous_bijections(c.representative);
        c.group_order = group.size();
        c.group_type = small_group_name(signature_of(group));
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const TopologyClass& a, const TopologyClass& b) {
        const auto na = std::popcount(a.representative.opens);
        const auto nb = std::popcount(b.representative.opens);
        if (na != nb)
            return na < nb;
        return a.representative.opens < b.representative.opens;
    });
    for (std::size_t i = 0; i < classes.size(); ++i)
        classes[i].class_id = static_cast<int>(i + 1);
    return classes;
}

std::optional<FiniteTopology> find_topology_with_group(int n_points, const GroupSignature& sig) {
    for (const FiniteTopology& t : enumerate_topologies(n_points)) {
        if (signature_of(continuous_bijections(t)) == sig)
            return t;
    }
    return std::nullopt;
}

} // namespace contspec
