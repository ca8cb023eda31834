#include "sweil/backend.hpp"

#include <sstream>

namespace sweil::algebra {

int GradedBackend::dim() const {
    switch (kind) {
    case BackendKind::loop: return lie.dim;
    case BackendKind::loop_module: return mod_dim;
    case BackendKind::witt:
    case BackendKind::fmu: return 1;
    }
    return 0;
}

GradedBackend loop_backend(LieAlgebraSpec spec, std::string label) {
    GradedBackend b;
    b.kind = BackendKind::loop;
    b.lie = std::move(spec);
    b.label = std::move(label);
    return b;
}

GradedBackend loop_module_backend(LieAlgebraSpec spec, int mod_dim, std::vector<Scalar> action) {
    if (mod_dim <= 0 || action.size() != static_cast<std::size_t>(spec.dim) * mod_dim * mod_dim)
        throw std::invalid_argument("module action has wrong size");
    GradedBackend b;
    b.kind = BackendKind::loop_module;
    b.lie = std::move(spec);
    b.mod_dim = mod_dim;
    b.action = std::move(action);
    b.label = "loop_module";
    return b;
}

GradedBackend witt_backend() {
    GradedBackend b;
    b.kind = BackendKind::witt;
    b.label = "witt";
    return b;
}

GradedBackend fmu_backend(Scalar lambda, Scalar mu) {
    if (!lambda.is_real() || !mu.is_real()) throw std::invalid_argument("lambda and mu must be rational");
    GradedBackend b;
    b.kind = BackendKind::fmu;
    b.lambda = std::move(lambda);
    b.mu = std::move(mu);
    b.label = "fmu:" + b.lambda.str() + ":" + b.mu.str();
    return b;
}

GradedBackend parse_backend(const std::string& d) {
    std::vector<std::string> parts;
    std::stringstream ss(d);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.empty()) throw std::invalid_argument("empty backend descriptor");
    if (parts[0] == "witt" && parts.size() == 1) return witt_backend();
    if (parts[0] == "fmu" && parts.size() == 3)
        return fmu_backend(Scalar(parse_rational(parts[1])), Scalar(parse_rational(parts[2])));
    if (parts[0] == "loop" && parts.size() == 2 && parts[1] == "sl2")
        return loop_backend(builtin_sl2_orthonormal(), "loop:sl2");
    if (parts[0] == "loop" && parts.size() == 3 && parts[1] == "abelian") {
        int dim = 0;
        try {
            dim = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad abelian dimension in '" + d + "'");
        }
        if (dim <= 0 || dim > 16) throw std::invalid_argument("abelian dimension out of range in '" + d + "'");
        return loop_backend(abelian_algebra(dim), d);
    }
    throw std::invalid_argument("unknown backend '" + d + "'");
}

ComponentVector backend_bracket(const GradedBackend& b, int i, int m, int j, int n) {
    ComponentVector out;
    switch (b.kind) {
    case BackendKind::loop:
        for (int k = 0; k < b.lie.dim; ++k)
            if (!b.lie.c(i, j, k).is_zero()) out.emplace_back(k, b.lie.c(i, j, k));
        break;
    case BackendKind::loop_module:
        for (int k = 0; k < b.mod_dim; ++k) {
            const Scalar& v = b.action[(static_cast<std::size_t>(i) * b.mod_dim + j) * b.mod_dim + k];
            if (!v.is_zero()) out.emplace_back(k, v);
        }
        break;
    case BackendKind::witt:
        if (m != n) out.emplace_back(0, Scalar(m - n));
        break;
    case BackendKind::fmu: {
        // phi(L_m) u_n = (-n + mu - (m-1) lambda) u_{m+n}
        Scalar v = Scalar(-n) + b.mu - Scalar(m - 1) * b.lambda;
        if (!v.is_zero()) out.emplace_back(0, v);
        break;
    }
    }
    return out;
}

}  // namespace sweil::algebra
