#include "sweil/symbols.hpp"

namespace sweil {

std::string_view sym_name(Sym s, bool n2) {
    switch (s) {
    case Sym::L: return n2 ? "L" : "Lalpha";
    case Sym::E: return "E";
    case Sym::H: return "H";
    case Sym::F: return "F";
    case Sym::h: return "h";
    case Sym::p: return "p";
    case Sym::x: return "x";
    case Sym::y: return "y";
    }
    return "?";
}

std::optional<Sym> parse_sym(std::string_view name) {
    if (name == "L" || name == "Lalpha") return Sym::L;
    for (Sym s : kAllSyms)
        if (s != Sym::L && sym_name(s) == name) return s;
    return std::nullopt;
}

std::string_view der_name(Der d) {
    switch (d) {
    case Der::E: return "EE";
    case Der::H: return "HH";
    case Der::F: return "FF";
    }
    return "?";
}

}  // namespace sweil
