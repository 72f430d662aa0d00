#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clout/solution.hpp"

namespace clout {

// The machinery below compares two solutions of the same instance (called
// local and global throughout). Their open centers are kept apart as a
// tagged disjoint union, so a center open in both appears twice.
enum class CenterRole : std::uint8_t { Local = 0, Global = 1 };

struct TaggedCenter {
    CenterRole role = CenterRole::Local;
    CenterId id = kNoCenter;

    bool operator==(const TaggedCenter& other) const = default;
    // Ordered by id first so "smallest center in a part" is well defined
    // across roles.
    bool operator<(const TaggedCenter& other) const {
        if (id != other.id) return id < other.id;
        return static_cast<int>(role) < static_cast<int>(other.role);
    }
};

// Outlier/assigned split of the point set under both solutions, after
// removing points that are outliers in both (each removal lowers the
// effective outlier count on both sides by one, keeping them balanced).
struct OutlierClasses {
    std::vector<PointId> assigned_local;    // served by the local solution
    std::vector<PointId> outliers_local;    // dropped by local, served by global
    std::vector<PointId> assigned_global;
    std::vector<PointId> outliers_global;   // dropped by global, served by local
    std::vector<PointId> removed;           // dropped by both
};

OutlierClasses compute_classes(const Instance& inst, const Solution& local,
                               const Solution& global);

// Disjoint cover of the tagged union; parts are the swap units of the
// analysis. Every part keeps at most cap centers from each side.
struct CenterPartition {
    std::vector<std::vector<TaggedCenter>> parts;
};

CenterPartition singleton_partition(const Solution& local, const Solution& global);
CenterPartition random_partition(const Solution& local, const Solution& global, int cap,
                                 std::uint64_t seed);

// An edge of the transfer graph: pairing leftover demand of a surplus part
// with leftover capacity of a deficit part.
struct SuperEdge {
    int plus_part;
    int minus_part;
};

// Output of the balancing pass.
//   delta[p]  surplus of part p: points only the global solution serves near
//             p, minus points only the local solution serves near p.
//   kappa     bijection between the two outlier classes, built within parts
//             first, then across parts by a two-pointer sweep that records
//             one super edge per (surplus, deficit) meeting.
struct PairingStructure {
    std::vector<long long> delta;
    std::vector<std::pair<PointId, PointId>> kappa;  // (local outlier, global outlier)
    std::vector<SuperEdge> super_edges;              // in creation order
    std::vector<int> plus_parts;   // delta > 0, in sweep order
    std::vector<int> minus_parts;  // delta < 0, in sweep order
    std::vector<int> zero_parts;   // delta == 0
};

PairingStructure build_pairing(const CenterPartition& partition, const OutlierClasses& classes,
                               const Solution& local, const Solution& global);

enum class GroupKind { EdgeBlock, MergedAll, Simple };

// A group is the set of centers touched by a contiguous run of super edges
// (or a single balanced part). Groups are what the analysis swaps in and
// out wholesale.
struct CenterGroup {
    GroupKind kind = GroupKind::Simple;
    int edge_begin = 0;  // [edge_begin, edge_end) into super_edges
    int edge_end = 0;
    std::vector<int> parts;             // part indices, ascending
    std::vector<TaggedCenter> members;  // union of the parts, sorted
    std::vector<int> split_parts;       // parts with super edges leaving the block
};

// Chops the super-edge sequence into blocks of alpha edges, merging the tail
// block into its predecessor so no undersized block remains; when there are
// at most alpha edges in total, everything unbalanced lands in one group.
// Balanced parts become their own simple groups.
std::vector<CenterGroup> build_groups(const CenterPartition& partition,
                                      const PairingStructure& pairing, int alpha);

int default_alpha_ufl(int rho, double epsilon);  // ceil(4 rho / epsilon)
int default_alpha_kcluster(int rho);             // 2 rho + 3

// Structural audit of the whole construction for one (local, global) pair:
// kappa is a bijection, the super-edge graph is a forest, group sizes and
// split counts stay inside their bounds, and every local outlier has a group
// covering both ends of its kappa edge.
struct HarnessReport {
    int num_parts = 0;
    int num_super_edges = 0;
    int num_groups = 0;

    bool kappa_bijective = false;
    bool delta_balanced = false;       // part surpluses sum to zero
    bool superedges_acyclic = false;
    bool group_sizes_ok = false;
    bool split_bound_ok = false;       // at most 2 split parts per group
    bool outliers_covered = false;

    std::vector<std::string> failures;

    bool all_ok() const {
        return kappa_bijective && delta_balanced && superedges_acyclic && group_sizes_ok &&
               split_bound_ok && outliers_covered;
    }
};

HarnessReport harness_report(const Instance& inst, const Solution& local, const Solution& global,
                             const CenterPartition& partition, int alpha, int cap);

}  // namespace clout
