#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sweil {

// Generators of S'(2,alpha): L = Lalpha, h = 𝔥^alpha, p = 𝔭, x = 𝔵, y = 𝔶^alpha.
// The N=2 subalgebra uses L, H, h, p.
enum class Sym : std::uint8_t { L, E, H, F, h, p, x, y };

constexpr Sym kAllSyms[] = {Sym::L, Sym::E, Sym::H, Sym::F, Sym::h, Sym::p, Sym::x, Sym::y};
constexpr Sym kN2Syms[] = {Sym::L, Sym::H, Sym::h, Sym::p};

constexpr int parity(Sym s) { return (s == Sym::h || s == Sym::p || s == Sym::x || s == Sym::y) ? 1 : 0; }

// stable report names; n2 selects "L" over "Lalpha"
std::string_view sym_name(Sym s, bool n2 = false);
std::optional<Sym> parse_sym(std::string_view name);

// exterior derivations
enum class Der : std::uint8_t { E, H, F };
std::string_view der_name(Der d);

}  // namespace sweil
