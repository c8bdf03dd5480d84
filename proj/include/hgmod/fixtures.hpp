#pragma once

#include "hgmod/extension.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hgmod {

/* Q(zeta_n) on the power basis 1, z, ..., z^(phi(n)-1). Group element k is
 * the k-th unit mod n in increasing order, acting by z -> z^unit.
 * n in {3, 4, 5, 7, 9}; throws UnsupportedN otherwise. */
GaloisExtension build_cyclotomic(int n);

/* Q(zeta_3, a) with a^3 = m, on the basis z^i a^j (index j + 3i, i < 2).
 * Group element i + 3j of D3 acts as sigma^i tau^j with sigma(a) = z a,
 * sigma(z) = z, tau(a) = a, tau(z) = z^-1. Throws BadM unless m is a prime
 * congruent to 2 mod 3. */
GaloisExtension build_kummer_cubic(long m = 5);

/* Group and basis indices of the Kummer fixture. */
namespace kummer {
inline constexpr int sigma = 1;
inline constexpr int sigma2 = 2;
inline constexpr int tau = 3;
inline constexpr int sigma_tau = 4;
inline constexpr int sigma2_tau = 5;
inline int basis_index(int zeta_power, int a_power) { return a_power + 3 * zeta_power; }
} // namespace kummer

struct Fixture {
    std::string name;
    std::string description;
    FiniteGroup group;
    std::optional<GaloisExtension> extension;
};

std::vector<std::string> builtin_fixture_names();
Fixture builtin_fixture(const std::string& name);    // throws UnknownFixture

std::string fixture_to_json(const Fixture& fixture);
Fixture fixture_from_json(std::string_view text);    // throws SchemaError / ParseError
/* A builtin name, or a path to a JSON fixture file. */
Fixture load_fixture(const std::string& reference);

} // namespace hgmod
