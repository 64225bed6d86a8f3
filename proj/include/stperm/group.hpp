#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stperm/errors.hpp"

namespace stperm {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * A finite group as a multiplication table on element indices 0..order-1,
 * with the identity at index 0. All tables are validated on construction
 * (associativity, identity, inverses). A deterministic generating set and
 * a BFS word tree over it are computed once and reused for matrix actions
 * and equivariance checks.
 */
class FiniteGroup {
public:
    static GroupPtr from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels = {});
    /// Closure of permutation generators of {0..m-1}; element 0 is the identity.
    static GroupPtr from_permutations(const std::vector<std::vector<int>>& gens,
                                      std::vector<std::string> labels = {});
    static GroupPtr cyclic(int n);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); } // a^g = g^-1 a g
    int element_order(int a) const;
    bool is_abelian() const;

    const std::vector<int>& generators() const { return gens_; }
    /// BFS parent/generator tree: word_parent(0) = -1; g = word_parent(g) * gens[word_gen(g)].
    int word_parent(int g) const { return word_parent_[g]; }
    int word_gen(int g) const { return word_gen_[g]; }

    const std::vector<std::string>& labels() const { return labels_; }

private:
    FiniteGroup() = default;
    void finalize_and_validate();

    int order_ = 0;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<int> gens_;
    std::vector<int> word_parent_, word_gen_;
    std::vector<std::string> labels_;
};

/// Subgroup of a fixed parent group: sorted element indices plus a membership mask.
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<int> elements);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<int>& elements() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    bool contains(int g) const { return mask_[g] != 0; }
    bool contains(const Subgroup& other) const;
    bool same_elements(const Subgroup& other) const { return elems_ == other.elems_; }

    bool is_normal_in(const Subgroup& h) const; // this normal in h (assumes this <= h)
    bool is_normal() const;                     // normal in the parent

    std::string element_list_string() const;

private:
    GroupPtr parent_;
    std::vector<int> elems_;
    std::vector<char> mask_;
};

/// A section (H, K): K normal in H.
struct Section {
    Subgroup H;
    Subgroup K;
    Section(Subgroup h, Subgroup k);
};

/// Quotient of `source` by the normal subgroup N, as a fresh FiniteGroup on
/// cosets (sorted by minimal element, identity coset first).
struct QuotientGroup {
    GroupPtr source;
    Subgroup N;
    GroupPtr group;
    std::vector<int> projection; // source element -> coset index
    std::vector<int> coset_rep;  // coset index -> minimal source element
};

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);

/// N_G(H)/H together with the data needed to act through representatives.
struct WeylGroup {
    Subgroup normalizer; // N_G(H) as a subgroup of G
    Subgroup subgroup;   // H
    GroupPtr group;      // N_G(H)/H
    std::vector<int> g_to_coset; // |G|-sized; -1 outside the normalizer
    std::vector<int> coset_rep;  // coset -> minimal representative in G
};

/// A subgroup re-indexed as a standalone group (element 0 = identity).
struct LocalGroup {
    GroupPtr group;
    std::vector<int> to_parent;   // local index -> parent index
    std::vector<int> from_parent; // parent index -> local index, -1 outside
};

LocalGroup as_group(const Subgroup& h);

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seed);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

inline constexpr int kDefaultOrderBound = 384;

/// Every subgroup exactly once, sorted by (order, element list). Cyclic
/// subgroups seed a join-closure sweep.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_bound = kDefaultOrderBound);

/// G-conjugacy classes of p-subgroups (trivial subgroup always included).
/// Each class is sorted, with the lexicographically smallest element set
/// first; classes ordered by (order, representative elements).
std::vector<std::vector<Subgroup>> conjugacy_classes_of_p_subgroups(
    const GroupPtr& g, int p, int order_bound = kDefaultOrderBound);
std::vector<std::vector<Subgroup>> conjugacy_classes_of_p_subgroups(
    const GroupPtr& g, int p, const std::vector<Subgroup>& subgroups);

Subgroup conjugate_subgroup(const Subgroup& h, int g); // h^g = g^-1 h g
bool subgroups_conjugate(const Subgroup& a, const Subgroup& b);

Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
Subgroup centralizer(const GroupPtr& g, const Subgroup& h);
Subgroup center(const GroupPtr& g);

WeylGroup weyl_group(const GroupPtr& g, const Subgroup& h);

Subgroup sylow_subgroup(const GroupPtr& g, int p, int order_bound = kDefaultOrderBound);
/// Intersection of all index-p subgroups; requires a p-group.
Subgroup frattini_subgroup(const GroupPtr& g, int order_bound = kDefaultOrderBound);

enum class IsoKind { Trivial, Cyclic, ElementaryAbelian, GeneralizedQuaternion, Dihedral, Other };

/// Structural isomorphism type. For Cyclic on prime-power order p^n, for
/// GeneralizedQuaternion/Dihedral on order 2^n, `n` is that exponent; for
/// ElementaryAbelian it is the rank. Cyclic groups of non-prime-power order
/// report n = 0.
struct IsoType {
    IsoKind kind = IsoKind::Other;
    int n = 0;
    bool operator==(const IsoType& o) const = default;
};

IsoType iso_type(const GroupPtr& g);
std::string describe_group(const GroupPtr& g);

bool has_unique_order_p_subgroup(const GroupPtr& g, int p, int order_bound = kDefaultOrderBound);
bool has_unique_index_p_subgroup(const GroupPtr& g, int p, int order_bound = kDefaultOrderBound);

/// Maximal rank of an elementary abelian p-subgroup.
int p_rank(const GroupPtr& g, int p, int order_bound = kDefaultOrderBound);

/// Brute-force isomorphism test; intended for orders <= 72.
bool is_isomorphic(const GroupPtr& a, const GroupPtr& b);

} // namespace stperm
