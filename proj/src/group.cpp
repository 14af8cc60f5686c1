#include "unitforge/group.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "unitforge/todd_coxeter.hpp"

namespace unitforge {

using nlohmann::json;

namespace {

constexpr int kMaxOrder = 64;

ClassPartition partition_from_assignment(ClassKind kind, const std::vector<int>& root_of,
                                         int n) {
    // Blocks keyed and ordered by minimal member.
    std::map<int, std::vector<int>> by_root;
    for (int g = 0; g < n; ++g) by_root[root_of[g]].push_back(g);
    ClassPartition part;
    part.kind = kind;
    part.block_of.assign(n, -1);
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        for (int g : members) part.block_of[g] = static_cast<int>(part.blocks.size());
        part.blocks.push_back(std::move(members));
    }
    return part;
}

// Union-find over class indices used when coarsening partitions.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

ClassPartition coarsen(ClassKind kind, const ClassPartition& fine, UnionFind& uf, int n) {
    std::vector<int> root_of(n);
    for (int g = 0; g < n; ++g) {
        int block = uf.find(fine.block_of[g]);
        root_of[g] = fine.blocks[block].front();
    }
    return partition_from_assignment(kind, root_of, n);
}

}  // namespace

int FiniteGroup::power(int g, long e) const {
    long n = element_order(g);
    long r = ((e % n) + n) % n;
    int acc = 0;
    int base = g;
    while (r > 0) {
        if (r & 1) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int ord = 1;
    int x = g;
    while (x != 0) {
        x = mul(x, g);
        ++ord;
    }
    return ord;
}

int FiniteGroup::generator(const std::string& name) const {
    for (size_t i = 0; i < generator_names_.size(); ++i)
        if (generator_names_[i] == name) return generator_elements_[i];
    throw std::invalid_argument("group " + name_ + " has no generator named \"" + name + "\"");
}

void FiniteGroup::finish_construction() {
    const int n = order_;
    if (n <= 0) throw std::invalid_argument("group order must be positive");
    if (n > kMaxOrder) throw std::invalid_argument("group order above 64 is unsupported");
    if (static_cast<int>(table_.size()) != n)
        throw std::invalid_argument("Cayley table has wrong number of rows");

    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table_[i].size()) != n)
            throw std::invalid_argument("Cayley table row has wrong length");
        for (int j = 0; j < n; ++j)
            if (table_[i][j] < 0 || table_[i][j] >= n)
                throw std::invalid_argument("Cayley table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        if (table_[0][i] != i || table_[i][0] != i)
            throw std::invalid_argument("index 0 is not an identity");
    // Latin square: rows and columns are permutations.
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (int j = 0; j < n; ++j) {
            if (row_seen[table_[i][j]]) throw std::invalid_argument("row is not a permutation");
            row_seen[table_[i][j]] = true;
            if (col_seen[table_[j][i]])
                throw std::invalid_argument("column is not a permutation");
            col_seen[table_[j][i]] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("multiplication is not associative");

    inverses_.assign(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (table_[g][h] == 0) {
                inverses_[g] = h;
                break;
            }
    for (int g = 0; g < n; ++g)
        if (inverses_[g] < 0 || table_[inverses_[g]][g] != 0)
            throw std::invalid_argument("inverses are inconsistent");

    if (element_words_.empty()) {
        element_words_.resize(n);
        element_words_[0] = "1";
        for (int g = 1; g < n; ++g) element_words_[g] = "g" + std::to_string(g);
    }

    // Conjugacy classes: orbits of the conjugation action, seeded in index order.
    std::vector<int> root_of(n, -1);
    for (int g = 0; g < n; ++g) {
        if (root_of[g] >= 0) continue;
        std::vector<int> orbit{g};
        root_of[g] = g;
        for (size_t i = 0; i < orbit.size(); ++i)
            for (int y = 0; y < n; ++y) {
                int c = conjugate(orbit[i], y);
                if (root_of[c] < 0) {
                    root_of[c] = g;
                    orbit.push_back(c);
                }
            }
    }
    conjugacy_ = partition_from_assignment(ClassKind::Conjugacy, root_of, n);

    // Real classes merge g^G with (g^-1)^G; rational classes merge (g^i)^G
    // over all i coprime to |g|.
    UnionFind real_uf(conjugacy_.size());
    for (int g = 0; g < n; ++g)
        real_uf.unite(conjugacy_.block_of[g], conjugacy_.block_of[inv(g)]);
    real_ = coarsen(ClassKind::Real, conjugacy_, real_uf, n);

    UnionFind rat_uf(conjugacy_.size());
    for (int g = 0; g < n; ++g) {
        int ord = element_order(g);
        for (int i = 1; i < ord; ++i)
            if (std::gcd(i, ord) == 1)
                rat_uf.unite(conjugacy_.block_of[g], conjugacy_.block_of[power(g, i)]);
        if (ord == 1) rat_uf.unite(conjugacy_.block_of[g], conjugacy_.block_of[0]);
    }
    rational_ = coarsen(ClassKind::Rational, conjugacy_, rat_uf, n);
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = static_cast<int>(table.size());
    g.table_ = std::move(table);
    g.finish_construction();
    return g;
}

FiniteGroup FiniteGroup::from_presentation(std::string name, const Presentation& pres,
                                           int expected_order) {
    EnumeratedGroup en = enumerate_presentation(pres);
    if (expected_order >= 0 && en.order != expected_order)
        throw std::invalid_argument("presentation for " + name + " enumerated to order " +
                                    std::to_string(en.order) + ", expected " +
                                    std::to_string(expected_order));
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = en.order;
    g.table_ = std::move(en.multiplication);
    g.generator_names_ = pres.generators;
    g.generator_elements_.resize(pres.generators.size());
    for (size_t i = 0; i < pres.generators.size(); ++i)
        g.generator_elements_[i] = en.generator_action[0][i];
    g.element_words_.resize(en.order);
    Presentation scope;
    scope.generators = pres.generators;
    for (int e = 0; e < en.order; ++e)
        g.element_words_[e] = scope.word_to_string(en.element_words[e]);
    g.finish_construction();
    return g;
}

std::string FiniteGroup::to_json_text() const {
    json j;
    j["name"] = name_;
    j["order"] = order_;
    j["table"] = table_;
    if (!generator_names_.empty()) {
        json gens = json::object();
        for (size_t i = 0; i < generator_names_.size(); ++i)
            gens[generator_names_[i]] = generator_elements_[i];
        j["generators"] = gens;
    }
    return j.dump(2);
}

FiniteGroup FiniteGroup::from_json_text(const std::string& text) {
    json j = json::parse(text);
    FiniteGroup g = from_table(j.value("name", "anonymous"),
                               j.at("table").get<std::vector<std::vector<int>>>());
    if (j.contains("order") && j.at("order").get<int>() != g.order())
        throw std::invalid_argument("declared order does not match the table");
    if (j.contains("generators")) {
        for (auto& [name, idx] : j.at("generators").items()) {
            int e = idx.get<int>();
            if (e < 0 || e >= g.order())
                throw std::invalid_argument("generator index out of range");
            g.generator_names_.push_back(name);
            g.generator_elements_.push_back(e);
        }
    }
    return g;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<int> queue{0};
    in[0] = true;
    for (int x : gens)
        if (!in[x]) {
            in[x] = true;
            queue.push_back(x);
        }
    for (size_t i = 0; i < queue.size(); ++i)
        for (size_t j = 0; j < queue.size(); ++j) {
            int p = g.mul(queue[i], queue[j]);
            if (!in[p]) {
                in[p] = true;
                queue.push_back(p);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x) {
    return subgroup_closure(g, {x});
}

std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> seen;
    for (int x = 0; x < g.order(); ++x) seen.insert(cyclic_subgroup(g, x));
    return {seen.begin(), seen.end()};
}

std::vector<int> derived_subgroup(const FiniteGroup& g) {
    std::vector<int> comms;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            comms.push_back(g.mul(g.inv(g.mul(y, x)), g.mul(x, y)));
    return subgroup_closure(g, comms);
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            if (g.mul(x, y) != g.mul(y, x)) central = false;
        if (central) z.push_back(x);
    }
    return z;
}

int exponent(const FiniteGroup& g) {
    long e = 1;
    for (int x = 0; x < g.order(); ++x) e = std::lcm(e, static_cast<long>(g.element_order(x)));
    return static_cast<int>(e);
}

namespace {

// Invariant factors of a finite abelian group given by a multiplication
// table, recovered from the element-order statistics prime by prime.
AbelianGroupType abelian_invariants(const FiniteGroup& q) {
    const int n = q.order();
    if (n == 1) return AbelianGroupType(0, {});

    std::vector<int> orders(n);
    for (int x = 0; x < n; ++x) orders[x] = q.element_order(x);

    std::vector<long> primes;
    for (long p = 2, m = n; m > 1; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }

    // For each prime, the partition lambda_1 >= lambda_2 >= ... of the p-part.
    std::vector<std::vector<int>> partitions;
    for (long p : primes) {
        std::vector<long> f{0};  // f[k] = log_p #{x : x^(p^k) = 1}
        for (long pk = p;; pk *= p) {
            long count = 0;
            for (int x = 0; x < n; ++x) {
                // order divides p^k iff it is a power of p not exceeding p^k
                long o = orders[x];
                while (o % p == 0) o /= p;
                if (o == 1 && orders[x] <= pk) ++count;
            }
            long e = 0;
            for (long c = count; c > 1; c /= p) {
                if (c % p != 0) throw std::logic_error("non p-power order count");
                ++e;
            }
            f.push_back(e);
            if (f.back() == f[f.size() - 2]) break;  // p-part exhausted
        }
        std::vector<int> lambda;
        for (size_t k = 1; k + 1 < f.size(); ++k) {
            long parts_ge_k = f[k] - f[k - 1];
            long parts_ge_k1 = f[k + 1] - f[k];
            for (long c = 0; c < parts_ge_k - parts_ge_k1; ++c)
                lambda.push_back(static_cast<int>(k));
        }
        std::sort(lambda.rbegin(), lambda.rend());
        partitions.push_back(std::move(lambda));
    }

    size_t nfactors = 0;
    for (const auto& l : partitions) nfactors = std::max(nfactors, l.size());
    std::vector<Int> factors(nfactors, 1);
    for (size_t pi = 0; pi < primes.size(); ++pi)
        for (size_t i = 0; i < partitions[pi].size(); ++i) {
            Int pe = 1;
            for (int k = 0; k < partitions[pi][i]; ++k) pe *= primes[pi];
            // largest parts land on the largest invariant factor
            factors[nfactors - 1 - i] *= pe;
        }
    Int check = 1;
    for (const Int& d : factors) check *= d;
    if (check != n) throw std::logic_error("invariant factors do not multiply to the order");
    return AbelianGroupType(0, factors);
}

}  // namespace

AbelianGroupType abelian_quotient(const FiniteGroup& g) {
    std::vector<int> d = derived_subgroup(g);
    std::vector<bool> in_d(g.order(), false);
    for (int x : d) in_d[x] = true;

    // Quotient by the derived subgroup: name cosets by their minimal member.
    std::vector<int> coset_min(g.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_min[x] >= 0) continue;
        std::vector<int> coset;
        for (int h : d) coset.push_back(g.mul(x, h));
        int mn = *std::min_element(coset.begin(), coset.end());
        for (int y : coset) coset_min[y] = mn;
    }
    std::map<int, int> index_of;
    for (int x = 0; x < g.order(); ++x)
        if (coset_min[x] == x) {
            int idx = static_cast<int>(index_of.size());
            index_of[x] = idx;
        }
    // coset 0 contains the identity and 0 is its minimal member
    const int m = static_cast<int>(index_of.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<int> rep_of(m);
    for (auto& [mn, idx] : index_of) rep_of[idx] = mn;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[i][j] = index_of.at(coset_min[g.mul(rep_of[i], rep_of[j])]);
    FiniteGroup quotient = FiniteGroup::from_table(g.name() + "/derived", std::move(table));
    return abelian_invariants(quotient);
}

}  // namespace unitforge
