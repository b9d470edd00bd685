#include "contspec/cayley.hpp"

#include <algorithm>
#include <numeric>

namespace contspec {

std::string CayleyTable::name_of(int id) const {
    if (id >= 0 && static_cast<std::size_t>(id) < names.size())
        return names[static_cast<std::size_t>(id)];
    return std::to_string(id);
}

std::optional<int> CayleyTable::id_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name)
            return static_cast<int>(i);
    }
    return std::nullopt;
}

TableValidation validate(const CayleyTable& table) {
    const int n = table.size;
    if (n < 1)
        return {TableKind::Invalid, "size must be >= 1"};
    if (table.identity < 0 || table.identity >= n)
        return {TableKind::Invalid, "identity id out of range"};
    if (static_cast<int>(table.op.size()) != n)
        return {TableKind::Invalid, "operation table must have `size` rows"};
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table.op[a].size()) != n)
            return {TableKind::Invalid, "row " + std::to_string(a) + " has wrong length"};
        for (int b = 0; b < n; ++b) {
            const int v = table.at(a, b);
            if (v < 0 || v >= n)
                return {TableKind::Invalid,
                        "entry op(" + std::to_string(a) + "," + std::to_string(b) + ") out of range"};
        }
    }
    const int e = table.identity;
    for (int a = 0; a < n; ++a) {
        if (table.at(e, a) != a || table.at(a, e) != a)
            return {TableKind::Invalid, "identity law fails at element " + std::to_string(a)};
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (table.at(table.at(a, b), c) != table.at(a, table.at(b, c)))
                    return {TableKind::Invalid, "associativity fails at (" + std::to_string(a) + "," +
                                                    std::to_string(b) + "," + std::to_string(c) + ")"};
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        if (!inverse_of(table, a))
            return {TableKind::Monoid, "element " + std::to_string(a) + " has no two-sided inverse"};
    }
    return {TableKind::Group, ""};
}

std::optional<int> inverse_of(const CayleyTable& table, int element) {
    for (int b = 0; b < table.size; ++b) {
        if (table.at(element, b) == table.identity && table.at(b, element) == table.identity)
            return b;
    }
    return std::nullopt;
}

std::vector<int> subset_ids(const ElementSubset& s) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i])
            ids.push_back(static_cast<int>(i));
    }
    return ids;
}

ElementSubset subset_from_ids(int size, const std::vector<int>& ids) {
    ElementSubset s(static_cast<std::size_t>(size), false);
    for (int id : ids) {
        if (id < 0 || id >= size)
            throw input_error("subset id out of range: " + std::to_string(id));
        s[static_cast<std::size_t>(id)] = true;
    }
    return s;
}

bool is_submonoid(const CayleyTable& table, const ElementSubset& s) {
    if (static_cast<int>(s.size()) != table.size)
        return false;
    if (!s[static_cast<std::size_t>(table.identity)])
        return false;
    for (int a : subset_ids(s)) {
        for (int b : subset_ids(s)) {
            if (!s[static_cast<std::size_t>(table.at(a, b))])
                return false;
        }
    }
    return true;
}

bool is_subgroup(const CayleyTable& table, const ElementSubset& s) {
    if (!is_submonoid(table, s))
        return false;
    for (int a : subset_ids(s)) {
        const auto inv = inverse_of(table, a);
        if (!inv || !s[static_cast<std::size_t>(*inv)])
            return false;
    }
    return true;
}

std::vector<ElementSubset> all_submonoids(const CayleyTable& table) {
    if (table.size > 16)
        throw input_error("subset search capped at 16 elements");
    std::vector<ElementSubset> out;
    const std::uint32_t total = 1u << table.size;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        ElementSubset s(static_cast<std::size_t>(table.size), false);
        for (int i = 0; i < table.size; ++i)
            s[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        if (is_submonoid(table, s))
            out.push_back(std::move(s));
    }
    return out;
}

bool pairs_isomorphic(const CayleyTable& g, const ElementSubset& s, const CayleyTable& h,
                      const ElementSubset& t) {
    if (g.size != h.size)
        return false;
    if (subset_ids(s).size() != subset_ids(t).size())
        return false;
    std::vector<int> map(static_cast<std::size_t>(g.size));
    std::iota(map.begin(), map.end(), 0);
    do {
        if (map[static_cast<std::size_t>(g.identity)] != h.identity)
            continue;
        bool ok = true;
        for (int a = 0; a < g.size && ok; ++a) {
            if (s[static_cast<std::size_t>(a)] != t[static_cast<std::size_t>(map[a])])
                ok = false;
            for (int b = 0; b < g.size && ok; ++b) {
                if (map[static_cast<std::size_t>(g.at(a, b))] != h.at(map[a], map[b]))
                    ok = false;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(map.begin(), map.end()));
    return false;
}

CayleyTable cyclic_table(int n) {
    if (n < 1)
        throw input_error("cyclic table requires n >= 1");
    CayleyTable t;
    t.size = n;
    t.identity = 0;
    t.op.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            t.op[a][b] = (a + b) % n;
        t.names.push_back(std::to_string(a));
    }
    return t;
}

namespace {

using Perm = std::vector<int>;

Perm compose_perm(const Perm& first, const Perm& then) {
    Perm out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = then[static_cast<std::size_t>(first[i])];
    return out;
}

CayleyTable table_from_perms(const std::vector<Perm>& elements, std::vector<std::string> names) {
    CayleyTable t;
    t.size = static_cast<int>(elements.size());
    t.identity = 0;
    t.names = std::move(names);
    t.op.assign(elements.size(), std::vector<int>(elements.size(), -1));
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b < elements.size(); ++b) {
            const Perm prod = compose_perm(elements[a], elements[b]);
            const auto it = std::find(elements.begin(), elements.end(), prod);
            t.op[a][b] = static_cast<int>(it - elements.begin());
        }
    }
    return t;
}

} // namespace

CayleyTable symmetric3_table() {
    const std::vector<Perm> elements = {
        {0, 1, 2}, // e
        {1, 2, 0}, // r1
        {2, 0, 1}, // r2
        {0, 2, 1}, // t1
        {2, 1, 0}, // t2
        {1, 0, 2}, // t3
    };
    return table_from_perms(elements, {"e", "r1", "r2", "t1", "t2", "t3"});
}

CayleyTable dihedral8_table() {
    std::vector<Perm> elements;
    std::vector<std::string> names;
    for (int k = 0; k < 4; ++k) { // rotations of the square
        Perm p(4);
        for (int i = 0; i < 4; ++i)
            p[i] = (i + k) % 4;
        elements.push_back(p);
        names.push_back(k == 0 ? "e" : "r" + std::to_string(k));
    }
    for (int k = 0; k < 4; ++k) { // reflections
        Perm p(4);
        for (int i = 0; i < 4; ++i)
            p[i] = ((k - i) % 4 + 4) % 4;
        elements.push_back(p);
        names.push_back("m" + std::to_string(k));
    }
    return table_from_perms(elements, std::move(names));
}

std::optional<CayleyTable> builtin_table(std::string_view name) {
    if (name == "s3")
        return symmetric3_table();
    if (name == "d4")
        return dihedral8_table();
    if (name.size() == 2 && name[0] == 'z' && name[1] >= '1' && name[1] <= '8')
        return cyclic_table(name[1] - '0');
    return std::nullopt;
}

} // namespace contspec
