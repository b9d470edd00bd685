#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contspec/errors.hpp"

namespace contspec {

// A finite monoid or group presented by its multiplication table.
struct CayleyTable {
    int size = 0;
    int identity = 0;
    std::vector<std::vector<int>> op; // op[a][b]
    std::vector<std::string> names;   // optional; defaults to decimal ids

    int at(int a, int b) const { return op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    std::string name_of(int id) const;
    std::optional<int> id_of(std::string_view name) const;
};

enum class TableKind { Group, Monoid, Invalid };

struct TableValidation {
    TableKind kind = TableKind::Invalid;
    std::string detail; // first violated law with a witness
};

// Exhaustive law checks: shape, identity, associativity, two-sided inverses.
TableValidation validate(const CayleyTable& table);

std::optional<int> inverse_of(const CayleyTable& table, int element);

// Member flags over element ids.
using ElementSubset = std::vector<bool>;

std::vector<int> subset_ids(const ElementSubset& s);
ElementSubset subset_from_ids(int size, const std::vector<int>& ids);

// contains the identity and closed under the operation
bool is_submonoid(const CayleyTable& table, const ElementSubset& s);
// additionally closed under inverses (groups only)
bool is_subgroup(const CayleyTable& table, const ElementSubset& s);

// Exhaustive subset search; table.size <= 16.
std::vector<ElementSubset> all_submonoids(const CayleyTable& table);

// Is there an isomorphism h with h(S) = T?  Explicit bijection search,
// intended for size <= 8.
bool pairs_isomorphic(const CayleyTable& g, const ElementSubset& s, const CayleyTable& h,
                      const ElementSubset& t);

CayleyTable cyclic_table(int n);
CayleyTable symmetric3_table();
CayleyTable dihedral8_table();

// "z1".."z8", "s3", "d4"
std::optional<CayleyTable> builtin_table(std::string_view name);

} // namespace contspec
