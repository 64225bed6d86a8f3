#include "stperm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace stperm {

namespace {

struct VectorHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

} // namespace

void FiniteGroup::finalize_and_validate() {
    const int n = order_;
    if (n <= 0) throw ValidationError("FiniteGroup: empty table");
    auto tbl = [&](int a, int b) { return mul_[static_cast<size_t>(a) * n + b]; };

    for (int a = 0; a < n; ++a)
        if (tbl(0, a) != a || tbl(a, 0) != a)
            throw ValidationError("FiniteGroup: element 0 is not an identity");

    inv_.assign(n, uint16_t(0));
    std::vector<char> has_inv(n, 0);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b)
            if (tbl(a, b) == 0 && tbl(b, a) == 0) {
                found = b;
                break;
            }
        if (found < 0) throw ValidationError("FiniteGroup: element without inverse");
        inv_[a] = static_cast<uint16_t>(found);
        has_inv[a] = 1;
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = tbl(a, b);
            for (int c = 0; c < n; ++c)
                if (tbl(ab, c) != tbl(a, tbl(b, c)))
                    throw ValidationError("FiniteGroup: multiplication is not associative");
        }

    // Greedy deterministic generating set: repeatedly adjoin the smallest
    // element outside the subgroup generated so far.
    std::vector<char> reached(n, 0);
    reached[0] = 1;
    int reached_count = 1;
    gens_.clear();
    auto close_over = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < n; ++a) {
                if (!reached[a]) continue;
                for (int s : gens_) {
                    int t = tbl(a, s);
                    if (!reached[t]) {
                        reached[t] = 1;
                        ++reached_count;
                        grew = true;
                    }
                }
            }
        }
    };
    while (reached_count < n) {
        int g = 0;
        while (reached[g]) ++g;
        gens_.push_back(g);
        close_over();
    }

    // BFS word tree over the chosen generators.
    word_parent_.assign(n, -1);
    word_gen_.assign(n, -1);
    std::vector<int> queue{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        for (size_t k = 0; k < gens_.size(); ++k) {
            int t = tbl(a, gens_[k]);
            if (!seen[t]) {
                seen[t] = 1;
                word_parent_[t] = a;
                word_gen_[t] = static_cast<int>(k);
                queue.push_back(t);
            }
        }
    }
    if (queue.size() != static_cast<size_t>(n))
        throw ValidationError("FiniteGroup: generators do not reach every element");

    if (!labels_.empty() && labels_.size() != static_cast<size_t>(n))
        throw ValidationError("FiniteGroup: label count mismatch");
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    const int n = static_cast<int>(table.size());
    g->order_ = n;
    g->mul_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (table[a].size() != static_cast<size_t>(n))
            throw ValidationError("FiniteGroup: ragged multiplication table");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n) throw ValidationError("FiniteGroup: table entry out of range");
            g->mul_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(v);
        }
    }
    g->labels_ = std::move(labels);
    g->finalize_and_validate();
    return g;
}

GroupPtr FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens,
                                        std::vector<std::string> labels) {
    if (gens.empty()) throw ValidationError("from_permutations: need at least one generator");
    const size_t deg = gens[0].size();
    if (deg == 0) throw ValidationError("from_permutations: empty permutation");
    for (const auto& perm : gens) {
        if (perm.size() != deg)
            throw ValidationError("from_permutations: generators of unequal degree");
        std::vector<char> hit(deg, 0);
        for (int v : perm) {
            if (v < 0 || v >= static_cast<int>(deg) || hit[v])
                throw ValidationError("from_permutations: not a permutation");
            hit[v] = 1;
        }
    }

    std::vector<int> ident(deg);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> elems{ident};
    std::unordered_map<std::vector<int>, int, VectorHash> index;
    index.emplace(ident, 0);
    for (size_t qi = 0; qi < elems.size(); ++qi) {
        std::vector<int> cur = elems[qi]; // copy: elems may reallocate
        for (const auto& s : gens) {
            std::vector<int> prod(deg);
            for (size_t x = 0; x < deg; ++x) prod[x] = cur[s[x]]; // cur after s
            if (index.emplace(prod, static_cast<int>(elems.size())).second)
                elems.push_back(std::move(prod));
            if (elems.size() > 10000)
                throw ResourceError("from_permutations: closure exceeds 10000 elements");
        }
    }

    const int n = static_cast<int>(elems.size());
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->mul_.assign(static_cast<size_t>(n) * n, 0);
    std::vector<int> prod(deg);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (size_t x = 0; x < deg; ++x) prod[x] = elems[a][elems[b][x]];
            auto it = index.find(prod);
            if (it == index.end())
                throw ValidationError("from_permutations: closure not multiplicatively closed");
            g->mul_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(it->second);
        }
    g->labels_ = std::move(labels);
    g->finalize_and_validate();
    return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
    if (n == 1) return from_table({{0}});
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    return from_permutations({cyc});
}

int FiniteGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    const int n = parent_->order();
    mask_.assign(n, 0);
    for (int e : elems_) {
        if (e < 0 || e >= n) throw ValidationError("Subgroup: element out of range");
        mask_[e] = 1;
    }
    if (elems_.empty() || elems_[0] != 0)
        throw ValidationError("Subgroup: must contain the identity");
    for (int a : elems_) {
        if (!mask_[parent_->inv(a)]) throw ValidationError("Subgroup: not closed under inverse");
        for (int b : elems_)
            if (!mask_[parent_->mul(a, b)])
                throw ValidationError("Subgroup: not closed under multiplication");
    }
}

bool Subgroup::contains(const Subgroup& other) const {
    for (int e : other.elems_)
        if (!mask_[e]) return false;
    return true;
}

bool Subgroup::is_normal_in(const Subgroup& h) const {
    for (int g : h.elements())
        for (int a : elems_)
            if (!mask_[parent_->conj(a, g)]) return false;
    return true;
}

bool Subgroup::is_normal() const {
    for (int g = 0; g < parent_->order(); ++g)
        for (int a : elems_)
            if (!mask_[parent_->conj(a, g)]) return false;
    return true;
}

std::string Subgroup::element_list_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

Section::Section(Subgroup h, Subgroup k) : H(std::move(h)), K(std::move(k)) {
    if (H.parent() != K.parent()) throw std::invalid_argument("Section: parent mismatch");
    if (!H.contains(K)) throw ValidationError("Section: K is not contained in H");
    if (!K.is_normal_in(H)) throw ValidationError("Section: K is not normal in H");
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seed) {
    std::vector<char> mem(g->order(), 0);
    std::vector<int> elems{0};
    mem[0] = 1;
    for (int s : seed)
        if (!mem[s]) {
            mem[s] = 1;
            elems.push_back(s);
        }
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            int t = g->mul(elems[i], elems[j]);
            if (!mem[t]) {
                mem[t] = 1;
                elems.push_back(t);
            }
        }
    return Subgroup(g, std::move(elems));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_bound) {
    if (g->order() > order_bound)
        throw ResourceError("all_subgroups: group order " + std::to_string(g->order()) +
                            " exceeds bound " + std::to_string(order_bound));

    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> cyclic_seeds;
    for (int a = 0; a < g->order(); ++a) {
        std::vector<int> elems{0};
        int x = a;
        while (x != 0) {
            elems.push_back(x);
            x = g->mul(x, a);
        }
        std::sort(elems.begin(), elems.end());
        if (known.insert(elems).second) cyclic_seeds.push_back(elems);
    }

    // Join closure: adjoin each cyclic subgroup to each known subgroup.
    std::vector<std::vector<int>> worklist(known.begin(), known.end());
    for (size_t i = 0; i < worklist.size(); ++i) {
        for (const auto& seed : cyclic_seeds) {
            if (std::includes(worklist[i].begin(), worklist[i].end(), seed.begin(), seed.end()))
                continue;
            std::vector<int> join = worklist[i];
            join.insert(join.end(), seed.begin(), seed.end());
            Subgroup s = generated_subgroup(g, join);
            if (known.insert(s.elements()).second) worklist.push_back(s.elements());
        }
    }

    std::vector<Subgroup> result;
    result.reserve(known.size());
    for (const auto& elems : known) result.emplace_back(g, elems);
    std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return result;
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const GroupPtr& p = h.parent();
    std::vector<int> elems;
    elems.reserve(h.order());
    for (int a : h.elements()) elems.push_back(p->conj(a, g));
    return Subgroup(p, std::move(elems));
}

bool subgroups_conjugate(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent() || a.order() != b.order()) return false;
    const GroupPtr& g = a.parent();
    for (int x = 0; x < g->order(); ++x)
        if (conjugate_subgroup(a, x).elements() == b.elements()) return true;
    return false;
}

static bool is_p_power(int n, int p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<std::vector<Subgroup>> conjugacy_classes_of_p_subgroups(
    const GroupPtr& g, int p, const std::vector<Subgroup>& subgroups) {
    if (!PrimeField::is_prime(static_cast<unsigned>(p)))
        throw std::invalid_argument("conjugacy_classes_of_p_subgroups: p must be prime");
    std::vector<const Subgroup*> psubs;
    for (const auto& s : subgroups)
        if (is_p_power(s.order(), p)) psubs.push_back(&s);

    std::vector<char> used(psubs.size(), 0);
    std::map<std::vector<int>, size_t> by_elems;
    for (size_t i = 0; i < psubs.size(); ++i) by_elems[psubs[i]->elements()] = i;

    std::vector<std::vector<Subgroup>> classes;
    for (size_t i = 0; i < psubs.size(); ++i) {
        if (used[i]) continue;
        std::set<std::vector<int>> orbit;
        for (int x = 0; x < g->order(); ++x) orbit.insert(conjugate_subgroup(*psubs[i], x).elements());
        std::vector<Subgroup> cls;
        for (const auto& e : orbit) {
            auto it = by_elems.find(e);
            if (it == by_elems.end())
                throw ValidationError("conjugacy classes: conjugate missing from subgroup list");
            used[it->second] = 1;
            cls.emplace_back(g, e);
        }
        classes.push_back(std::move(cls)); // already sorted: std::set is lexicographic
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a[0].order() != b[0].order()) return a[0].order() < b[0].order();
        return a[0].elements() < b[0].elements();
    });
    return classes;
}

std::vector<std::vector<Subgroup>> conjugacy_classes_of_p_subgroups(const GroupPtr& g, int p,
                                                                    int order_bound) {
    return conjugacy_classes_of_p_subgroups(g, p, all_subgroups(g, order_bound));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
    std::vector<int> elems;
    for (int x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (int a : h.elements())
            if (!h.contains(g->conj(a, x))) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(x);
    }
    return Subgroup(g, std::move(elems));
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& h) {
    std::vector<int> elems;
    for (int x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (int a : h.elements())
            if (g->mul(x, a) != g->mul(a, x)) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(x);
    }
    return Subgroup(g, std::move(elems));
}

Subgroup center(const GroupPtr& g) { return centralizer(g, full_subgroup(g)); }

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
    if (!n.is_normal()) throw ValidationError("quotient_group: subgroup is not normal");
    const int ord = g->order();
    std::vector<int> coset_of(ord, -1);
    std::vector<int> reps;
    for (int x = 0; x < ord; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x); // minimal element: x is the first unassigned index
        for (int a : n.elements()) coset_of[g->mul(x, a)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i][j] = coset_of[g->mul(reps[i], reps[j])];
    QuotientGroup result{g, n, FiniteGroup::from_table(std::move(table)), std::move(coset_of),
                         std::move(reps)};
    return result;
}

LocalGroup as_group(const Subgroup& h) {
    const GroupPtr& g = h.parent();
    const auto& elems = h.elements();
    const int m = static_cast<int>(elems.size());
    std::vector<int> from_parent(g->order(), -1);
    for (int i = 0; i < m; ++i) from_parent[elems[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = from_parent[g->mul(elems[i], elems[j])];
    return LocalGroup{FiniteGroup::from_table(std::move(table)), elems, std::move(from_parent)};
}

WeylGroup weyl_group(const GroupPtr& g, const Subgroup& h) {
    Subgroup n = normalizer(g, h);
    LocalGroup nloc = as_group(n);
    Subgroup h_in_n = [&] {
        std::vector<int> el;
        for (int a : h.elements()) el.push_back(nloc.from_parent[a]);
        return Subgroup(nloc.group, std::move(el));
    }();
    QuotientGroup q = quotient_group(nloc.group, h_in_n);

    std::vector<int> g_to_coset(g->order(), -1);
    for (int x = 0; x < g->order(); ++x)
        if (nloc.from_parent[x] >= 0) g_to_coset[x] = q.projection[nloc.from_parent[x]];
    std::vector<int> coset_rep(q.group->order());
    for (size_t c = 0; c < coset_rep.size(); ++c) coset_rep[c] = nloc.to_parent[q.coset_rep[c]];
    return WeylGroup{std::move(n), h, q.group, std::move(g_to_coset), std::move(coset_rep)};
}

Subgroup sylow_subgroup(const GroupPtr& g, int p, int order_bound) {
    if (!PrimeField::is_prime(static_cast<unsigned>(p)))
        throw std::invalid_argument("sylow_subgroup: p must be prime");
    int pk = 1;
    while (g->order() % (pk * p) == 0) pk *= p;
    for (const auto& s : all_subgroups(g, order_bound))
        if (s.order() == pk) return s;
    throw ValidationError("sylow_subgroup: no subgroup of full p-power order found");
}

Subgroup frattini_subgroup(const GroupPtr& g, int order_bound) {
    int p = 0;
    int n = g->order();
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (n == 1) return trivial_subgroup(g);
    if (!is_p_power(n, p)) throw std::invalid_argument("frattini_subgroup: not a p-group");
    std::vector<char> mem(n, 1);
    bool found = false;
    for (const auto& s : all_subgroups(g, order_bound)) {
        if (s.order() * p != n) continue;
        found = true;
        for (int x = 0; x < n; ++x)
            if (!s.contains(x)) mem[x] = 0;
    }
    if (!found) return trivial_subgroup(g); // order p: no proper maximal subgroup besides 1
    std::vector<int> elems;
    for (int x = 0; x < n; ++x)
        if (mem[x]) elems.push_back(x);
    return Subgroup(g, std::move(elems));
}

IsoType iso_type(const GroupPtr& g) {
    const int n = g->order();
    if (n == 1) return {IsoKind::Trivial, 0};

    auto prime_power_exponent = [](int m) -> std::pair<int, int> {
        int p = 0;
        for (int d = 2; d <= m; ++d)
            if (m % d == 0) {
                p = d;
                break;
            }
        int e = 0, r = m;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        return {r == 1 ? p : 0, e};
    };
    auto [pp, exp] = prime_power_exponent(n);

    for (int a = 0; a < n; ++a)
        if (g->element_order(a) == n) return {IsoKind::Cyclic, pp > 0 ? exp : 0};

    if (pp > 0 && g->is_abelian()) {
        bool exponent_p = true;
        for (int a = 1; a < n && exponent_p; ++a)
            if (g->element_order(a) != pp) exponent_p = false;
        if (exponent_p) return {IsoKind::ElementaryAbelian, exp};
    }

    if (pp == 2 && exp >= 3) {
        // Quaternion: x of order 2^(n-1), y outside <x> with y^2 = x^(2^(n-2)),
        // y x y^-1 = x^-1. Dihedral: same x, y an involution inverting x.
        const int half = n / 2;
        for (int x = 0; x < n; ++x) {
            if (g->element_order(x) != half) continue;
            std::vector<char> in_x(n, 0);
            int t = 0;
            do {
                in_x[t] = 1;
                t = g->mul(t, x);
            } while (t != 0);
            int x_pow = 0;
            for (int i = 0; i < half / 2; ++i) x_pow = g->mul(x_pow, x); // x^(2^(n-2))
            for (int y = 0; y < n; ++y) {
                if (in_x[y]) continue;
                if (g->mul(g->mul(y, x), g->inv(y)) != g->inv(x)) continue;
                int y2 = g->mul(y, y);
                if (y2 == x_pow) return {IsoKind::GeneralizedQuaternion, exp};
                if (y2 == 0) return {IsoKind::Dihedral, exp};
            }
            break; // relations are independent of which maximal-order x we picked
        }
    }

    return {IsoKind::Other, 0};
}

std::string describe_group(const GroupPtr& g) {
    IsoType t = iso_type(g);
    switch (t.kind) {
        case IsoKind::Trivial: return "1";
        case IsoKind::Cyclic: return "C" + std::to_string(g->order());
        case IsoKind::ElementaryAbelian: {
            if (g->order() == 4) return "V4";
            int p = 2;
            while (g->order() % p != 0) ++p;
            return "C" + std::to_string(p) + "^" + std::to_string(t.n);
        }
        case IsoKind::GeneralizedQuaternion: return "Q" + std::to_string(g->order());
        case IsoKind::Dihedral: return "D" + std::to_string(g->order());
        case IsoKind::Other: return "G[" + std::to_string(g->order()) + "]";
    }
    return "?";
}

bool has_unique_order_p_subgroup(const GroupPtr& g, int p, int order_bound) {
    int count = 0;
    for (const auto& s : all_subgroups(g, order_bound))
        if (s.order() == p) ++count;
    return count == 1;
}

bool has_unique_index_p_subgroup(const GroupPtr& g, int p, int order_bound) {
    int count = 0;
    for (const auto& s : all_subgroups(g, order_bound))
        if (s.order() * p == g->order()) ++count;
    return count == 1;
}

int p_rank(const GroupPtr& g, int p, int order_bound) {
    int best = 0;
    for (const auto& s : all_subgroups(g, order_bound)) {
        if (!is_p_power(s.order(), p) || s.order() == 1) continue;
        bool elem_ab = true;
        for (int a : s.elements()) {
            if (a == 0) continue;
            if (g->element_order(a) != p) {
                elem_ab = false;
                break;
            }
        }
        if (!elem_ab) continue;
        bool abelian = true;
        for (int a : s.elements()) {
            for (int b : s.elements())
                if (g->mul(a, b) != g->mul(b, a)) {
                    abelian = false;
                    break;
                }
            if (!abelian) break;
        }
        if (!abelian) continue;
        int r = 0, m = s.order();
        while (m > 1) {
            m /= p;
            ++r;
        }
        best = std::max(best, r);
    }
    return best;
}

namespace {

// Backtracking isomorphism search mapping a generating sequence of a into b.
bool extend_iso(const GroupPtr& a, const GroupPtr& b, const std::vector<int>& gens_a, size_t k,
                std::vector<int>& image) {
    const int n = a->order();
    if (k == gens_a.size()) return true;
    int ga = gens_a[k];
    for (int gb = 0; gb < n; ++gb) {
        if (a->element_order(ga) != b->element_order(gb)) continue;
        // Rebuild the partial map from generator images; fail on conflicts.
        std::vector<int> map(n, -1);
        map[0] = 0;
        std::vector<int> done{0};
        bool ok = true;
        std::vector<int> imgs(image.begin(), image.begin() + k);
        imgs.push_back(gb);
        std::vector<int> gens(gens_a.begin(), gens_a.begin() + k + 1);
        for (size_t qi = 0; qi < done.size() && ok; ++qi) {
            int x = done[qi];
            for (size_t i = 0; i < gens.size() && ok; ++i) {
                int xa = a->mul(x, gens[i]);
                int xb = b->mul(map[x], imgs[i]);
                if (map[xa] == -1) {
                    map[xa] = xb;
                    done.push_back(xa);
                } else if (map[xa] != xb) {
                    ok = false;
                }
            }
        }
        if (!ok) continue;
        // Injectivity on the reached set.
        std::vector<char> hit(n, 0);
        for (int x : done) {
            if (hit[map[x]]) {
                ok = false;
                break;
            }
            hit[map[x]] = 1;
        }
        if (!ok) continue;
        // Homomorphism check on the reached subgroup.
        for (size_t i = 0; i < done.size() && ok; ++i)
            for (size_t j = 0; j < done.size() && ok; ++j) {
                int x = done[i], y = done[j];
                if (map[a->mul(x, y)] != b->mul(map[x], map[y])) ok = false;
            }
        if (!ok) continue;
        image[k] = gb;
        if (extend_iso(a, b, gens_a, k + 1, image)) return true;
    }
    return false;
}

} // namespace

bool is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
    if (a->order() != b->order()) return false;
    const int n = a->order();
    std::map<int, int> ord_a, ord_b;
    for (int x = 0; x < n; ++x) {
        ord_a[a->element_order(x)]++;
        ord_b[b->element_order(x)]++;
    }
    if (ord_a != ord_b) return false;
    if (a->is_abelian() != b->is_abelian()) return false;
    if (a->is_abelian()) return true; // equal order statistics classify finite abelian groups

    std::vector<int> gens = a->generators();
    std::vector<int> image(gens.size(), -1);
    return extend_iso(a, b, gens, 0, image);
}

} // namespace stperm
