#include "clout/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace clout {

namespace {

// part index per (role, center id); -1 when the center is not open on that
// side.
struct PartIndex {
    std::vector<int> local_part;
    std::vector<int> global_part;

    int of(const TaggedCenter& c) const {
        return c.role == CenterRole::Local ? local_part[c.id] : global_part[c.id];
    }
};

PartIndex index_parts(const Instance& inst, const CenterPartition& partition,
                      const Solution& local, const Solution& global) {
    const int m = inst.num_centers();
    PartIndex idx;
    idx.local_part.assign(static_cast<std::size_t>(m), -1);
    idx.global_part.assign(static_cast<std::size_t>(m), -1);

    for (std::size_t p = 0; p < partition.parts.size(); ++p) {
        if (partition.parts[p].empty())
            throw ValidationError("partition", "part " + std::to_string(p) + " is empty");
        for (const TaggedCenter& c : partition.parts[p]) {
            if (c.id < 0 || c.id >= m)
                throw ValidationError("partition", "center id out of range");
            auto& slot =
                c.role == CenterRole::Local ? idx.local_part[c.id] : idx.global_part[c.id];
            if (slot != -1)
                throw ValidationError("partition",
                                      "center " + std::to_string(c.id) + " appears twice");
            slot = static_cast<int>(p);
        }
    }
    for (CenterId i : local.open)
        if (idx.local_part[i] == -1)
            throw ValidationError("partition", "local center " + std::to_string(i) + " not covered");
    for (CenterId i : global.open)
        if (idx.global_part[i] == -1)
            throw ValidationError("partition",
                                  "global center " + std::to_string(i) + " not covered");
    return idx;
}

TaggedCenter smallest_member(const std::vector<TaggedCenter>& part) {
    return *std::min_element(part.begin(), part.end());
}

}  // namespace

OutlierClasses compute_classes(const Instance& inst, const Solution& local,
                               const Solution& global) {
    const int n = inst.num_points();
    OutlierClasses out;
    for (PointId j = 0; j < n; ++j) {
        const bool out_local = local.sigma[j] == kNoCenter;
        const bool out_global = global.sigma[j] == kNoCenter;
        if (out_local && out_global) {
            out.removed.push_back(j);
            continue;
        }
        if (out_local) out.outliers_local.push_back(j);
        else out.assigned_local.push_back(j);
        if (out_global) out.outliers_global.push_back(j);
        else out.assigned_global.push_back(j);
    }
    return out;
}

CenterPartition singleton_partition(const Solution& local, const Solution& global) {
    CenterPartition partition;
    for (CenterId i : local.open) partition.parts.push_back({{CenterRole::Local, i}});
    for (CenterId i : global.open) partition.parts.push_back({{CenterRole::Global, i}});
    return partition;
}

CenterPartition random_partition(const Solution& local, const Solution& global, int cap,
                                 std::uint64_t seed) {
    if (cap < 1) throw ValidationError("cap", "per-side part capacity must be at least 1");

    std::vector<TaggedCenter> locals;
    std::vector<TaggedCenter> globals;
    for (CenterId i : local.open) locals.push_back({CenterRole::Local, i});
    for (CenterId i : global.open) globals.push_back({CenterRole::Global, i});

    std::mt19937_64 rng(splitmix64(seed));
    auto shuffle = [&rng](std::vector<TaggedCenter>& v) {
        for (std::size_t t = v.size(); t > 1; --t)
            std::swap(v[t - 1], v[rng() % t]);
    };
    shuffle(locals);
    shuffle(globals);

    const auto ceil_div = [](std::size_t a, int b) {
        return static_cast<int>((a + static_cast<std::size_t>(b) - 1) / static_cast<std::size_t>(b));
    };
    const int total = static_cast<int>(locals.size() + globals.size());
    const int min_parts = std::max({1, ceil_div(locals.size(), cap), ceil_div(globals.size(), cap)});
    const int num_parts =
        min_parts + static_cast<int>(rng() % static_cast<std::uint64_t>(total - min_parts + 1));

    CenterPartition partition;
    partition.parts.resize(static_cast<std::size_t>(num_parts));
    for (std::size_t t = 0; t < locals.size(); ++t)
        partition.parts[t % num_parts].push_back(locals[t]);
    for (std::size_t t = 0; t < globals.size(); ++t)
        partition.parts[t % num_parts].push_back(globals[t]);

    std::erase_if(partition.parts, [](const auto& part) { return part.empty(); });
    for (auto& part : partition.parts) std::sort(part.begin(), part.end());
    return partition;
}

PairingStructure build_pairing(const CenterPartition& partition, const OutlierClasses& classes,
                               const Solution& local, const Solution& global) {
    const std::size_t num_parts = partition.parts.size();
    PairingStructure ps;
    ps.delta.assign(num_parts, 0);

    // Points whose global center lands in part p (reclaimable) and points
    // whose local center lands in part p (newly forced out).
    std::vector<std::vector<PointId>> plus_pts(num_parts);
    std::vector<std::vector<PointId>> minus_pts(num_parts);

    int max_center = -1;
    for (const auto& part : partition.parts)
        for (const auto& c : part) max_center = std::max(max_center, c.id);
    std::vector<int> local_part(static_cast<std::size_t>(max_center + 1), -1);
    std::vector<int> global_part(static_cast<std::size_t>(max_center + 1), -1);
    for (std::size_t p = 0; p < num_parts; ++p) {
        if (partition.parts[p].empty())
            throw ValidationError("partition", "part " + std::to_string(p) + " is empty");
        for (const auto& c : partition.parts[p]) {
            auto& slot = c.role == CenterRole::Local ? local_part[c.id] : global_part[c.id];
            if (slot != -1)
                throw ValidationError("partition", "center " + std::to_string(c.id) + " appears twice");
            slot = static_cast<int>(p);
        }
    }

    for (PointId j : classes.outliers_local) {
        const CenterId c = global.sigma[j];
        if (c == kNoCenter || c > max_center || global_part[c] == -1)
            throw ValidationError("partition", "global center of a local outlier is not covered");
        plus_pts[global_part[c]].push_back(j);
    }
    for (PointId j : classes.outliers_global) {
        const CenterId c = local.sigma[j];
        if (c == kNoCenter || c > max_center || local_part[c] == -1)
            throw ValidationError("partition", "local center of a global outlier is not covered");
        minus_pts[local_part[c]].push_back(j);
    }

    // Within-part pairs first, smallest point ids matched up.
    std::vector<std::size_t> plus_at(num_parts, 0);
    std::vector<std::size_t> minus_at(num_parts, 0);
    for (std::size_t p = 0; p < num_parts; ++p) {
        ps.delta[p] = static_cast<long long>(plus_pts[p].size()) -
                      static_cast<long long>(minus_pts[p].size());
        const std::size_t both = std::min(plus_pts[p].size(), minus_pts[p].size());
        for (std::size_t t = 0; t < both; ++t)
            ps.kappa.emplace_back(plus_pts[p][t], minus_pts[p][t]);
        plus_at[p] = both;
        minus_at[p] = both;
    }

    // Surplus and deficit parts in deterministic sweep order.
    std::vector<int> order(num_parts);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return smallest_member(partition.parts[a]) < smallest_member(partition.parts[b]);
    });
    for (int p : order) {
        if (ps.delta[p] > 0) ps.plus_parts.push_back(p);
        else if (ps.delta[p] < 0) ps.minus_parts.push_back(p);
        else ps.zero_parts.push_back(p);
    }

    // Two-pointer sweep: drain the current surplus part into the current
    // deficit part, record the meeting as a super edge, advance whichever
    // side ran dry (both, if they ran dry together).
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < ps.plus_parts.size() && b < ps.minus_parts.size()) {
        const int pa = ps.plus_parts[a];
        const int pb = ps.minus_parts[b];
        const std::size_t have = plus_pts[pa].size() - plus_at[pa];
        const std::size_t need = minus_pts[pb].size() - minus_at[pb];
        const std::size_t take = std::min(have, need);
        for (std::size_t t = 0; t < take; ++t)
            ps.kappa.emplace_back(plus_pts[pa][plus_at[pa] + t], minus_pts[pb][minus_at[pb] + t]);
        plus_at[pa] += take;
        minus_at[pb] += take;
        ps.super_edges.push_back({pa, pb});
        if (plus_at[pa] == plus_pts[pa].size()) ++a;
        if (minus_at[pb] == minus_pts[pb].size()) ++b;
    }
    if (a < ps.plus_parts.size() || b < ps.minus_parts.size())
        throw ValidationError("pairing", "outlier classes are not balanced");

    return ps;
}

int default_alpha_ufl(int rho, double epsilon) {
    if (rho < 1 || !(epsilon > 0.0))
        throw ValidationError("alpha", "needs rho >= 1 and epsilon > 0");
    return static_cast<int>(std::ceil(4.0 * rho / epsilon));
}

int default_alpha_kcluster(int rho) {
    if (rho < 1) throw ValidationError("alpha", "needs rho >= 1");
    return 2 * rho + 3;
}

std::vector<CenterGroup> build_groups(const CenterPartition& partition,
                                      const PairingStructure& pairing, int alpha) {
    if (alpha < 1) throw ValidationError("alpha", "must be at least 1");

    std::vector<CenterGroup> groups;
    const int num_edges = static_cast<int>(pairing.super_edges.size());

    auto make_group = [&](GroupKind kind, int begin, int end, std::vector<int> parts) {
        std::sort(parts.begin(), parts.end());
        parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
        CenterGroup g;
        g.kind = kind;
        g.edge_begin = begin;
        g.edge_end = end;
        for (int p : parts)
            g.members.insert(g.members.end(), partition.parts[p].begin(),
                             partition.parts[p].end());
        std::sort(g.members.begin(), g.members.end());
        g.parts = std::move(parts);
        groups.push_back(std::move(g));
    };

    if (num_edges > 0) {
        if (num_edges > alpha) {
            // Blocks of alpha edges; the remainder is folded into the last
            // block so every block has more than alpha edges or exactly
            // alpha, never fewer.
            const int full = num_edges / alpha;
            const int rem = num_edges % alpha;
            const int last_begin = rem > 0 ? (full - 1) * alpha : (full - 2) * alpha;
            for (int begin = 0; begin < last_begin; begin += alpha) {
                std::vector<int> parts;
                for (int e = begin; e < begin + alpha; ++e) {
                    parts.push_back(pairing.super_edges[e].plus_part);
                    parts.push_back(pairing.super_edges[e].minus_part);
                }
                make_group(GroupKind::EdgeBlock, begin, begin + alpha, std::move(parts));
            }
            std::vector<int> parts;
            for (int e = last_begin; e < num_edges; ++e) {
                parts.push_back(pairing.super_edges[e].plus_part);
                parts.push_back(pairing.super_edges[e].minus_part);
            }
            make_group(GroupKind::EdgeBlock, last_begin, num_edges, std::move(parts));
        } else {
            // Few edges: every unbalanced part into one pot.
            std::vector<int> parts = pairing.plus_parts;
            parts.insert(parts.end(), pairing.minus_parts.begin(), pairing.minus_parts.end());
            make_group(GroupKind::MergedAll, 0, num_edges, std::move(parts));
        }
    }

    for (int p : pairing.zero_parts) make_group(GroupKind::Simple, 0, 0, {p});

    // Split detection: a part is split in a group when one of its super
    // edges lives outside the group's block.
    std::vector<std::vector<int>> incident(partition.parts.size());
    for (int e = 0; e < num_edges; ++e) {
        incident[pairing.super_edges[e].plus_part].push_back(e);
        incident[pairing.super_edges[e].minus_part].push_back(e);
    }
    for (auto& g : groups)
        for (int p : g.parts)
            for (int e : incident[p])
                if (e < g.edge_begin || e >= g.edge_end) {
                    g.split_parts.push_back(p);
                    break;
                }

    return groups;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false when x and y were already connected
    bool unite(int x, int y) {
        const int rx = find(x);
        const int ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

}  // namespace

HarnessReport harness_report(const Instance& inst, const Solution& local, const Solution& global,
                             const CenterPartition& partition, int alpha, int cap) {
    HarnessReport report;
    const PartIndex idx = index_parts(inst, partition, local, global);
    const OutlierClasses classes = compute_classes(inst, local, global);
    const PairingStructure ps = build_pairing(partition, classes, local, global);
    const std::vector<CenterGroup> groups = build_groups(partition, ps, alpha);

    report.num_parts = static_cast<int>(partition.parts.size());
    report.num_super_edges = static_cast<int>(ps.super_edges.size());
    report.num_groups = static_cast<int>(groups.size());

    auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

    // kappa must hit each class exactly once.
    {
        std::vector<PointId> dom;
        std::vector<PointId> img;
        for (const auto& [jo, jg] : ps.kappa) {
            dom.push_back(jo);
            img.push_back(jg);
        }
        std::sort(dom.begin(), dom.end());
        std::sort(img.begin(), img.end());
        report.kappa_bijective =
            dom == classes.outliers_local && img == classes.outliers_global;
        if (!report.kappa_bijective) fail("kappa is not a bijection between the outlier classes");
    }

    {
        long long sum = 0;
        for (long long d : ps.delta) sum += d;
        report.delta_balanced = sum == 0;
        if (!report.delta_balanced) fail("part surpluses do not cancel");
    }

    {
        UnionFind uf(partition.parts.size());
        report.superedges_acyclic = true;
        for (const auto& e : ps.super_edges)
            if (!uf.unite(e.plus_part, e.minus_part)) {
                report.superedges_acyclic = false;
                fail("super-edge graph contains a cycle");
                break;
            }
    }

    {
        report.group_sizes_ok = true;
        report.split_bound_ok = true;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const auto& group = groups[g];
            const int size = static_cast<int>(group.members.size());
            switch (group.kind) {
                case GroupKind::EdgeBlock:
                    if (size < alpha - 1 || size > 8 * cap * alpha) {
                        report.group_sizes_ok = false;
                        fail("edge-block group " + std::to_string(g) + " has size " +
                             std::to_string(size) + " outside [alpha-1, 8 cap alpha]");
                    }
                    if (static_cast<int>(group.split_parts.size()) > 2) {
                        report.split_bound_ok = false;
                        fail("group " + std::to_string(g) + " has " +
                             std::to_string(group.split_parts.size()) + " split parts");
                    }
                    break;
                case GroupKind::MergedAll: {
                    int locals = 0;
                    int globals = 0;
                    for (const auto& c : group.members)
                        (c.role == CenterRole::Local ? locals : globals) += 1;
                    if (locals > 2 * alpha * cap || globals > 2 * alpha * cap) {
                        report.group_sizes_ok = false;
                        fail("merged group exceeds 2 alpha cap centers on one side");
                    }
                    if (!group.split_parts.empty()) {
                        report.split_bound_ok = false;
                        fail("merged group has split parts");
                    }
                    break;
                }
                case GroupKind::Simple:
                    if (size < 1 || size > 2 * cap) {
                        report.group_sizes_ok = false;
                        fail("simple group has an out-of-range size");
                    }
                    if (!group.split_parts.empty()) {
                        report.split_bound_ok = false;
                        fail("balanced part reported as split");
                    }
                    break;
            }
        }
    }

    {
        // Every kappa edge must be witnessed by one group holding both the
        // global center that serves the local outlier and the local center
        // that served the global outlier.
        std::vector<std::vector<int>> groups_of_part(partition.parts.size());
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (int p : groups[g].parts) groups_of_part[p].push_back(static_cast<int>(g));

        report.outliers_covered = true;
        for (const auto& [jo, jg] : ps.kappa) {
            const int pp = idx.of({CenterRole::Global, global.sigma[jo]});
            const int pm = idx.of({CenterRole::Local, local.sigma[jg]});
            bool covered = false;
            for (int g : groups_of_part[pp]) {
                const auto& parts = groups[g].parts;
                if (std::binary_search(parts.begin(), parts.end(), pm)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                report.outliers_covered = false;
                fail("outlier " + std::to_string(jo) + " has no group covering its kappa edge");
                break;
            }
        }
    }

    return report;
}

}  // namespace clout
