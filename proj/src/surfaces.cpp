#include "superfs/surfaces.hpp"

#include "superfs/error.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace superfs {

Surface Surface::orientable(int genus) {
    if (genus < 0) throw SurfaceError("genus must be non-negative");
    return Surface(true, genus);
}

Surface Surface::nonorientable(int crosscaps) {
    if (crosscaps < 1) throw SurfaceError("a nonorientable surface needs at least one crosscap");
    return Surface(false, crosscaps);
}

Surface Surface::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw SurfaceError("surface must be orientable:<g> or nonorientable:<k>");
    const auto kind = text.substr(0, colon);
    const auto num = text.substr(colon + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
        throw SurfaceError("malformed surface count '" + std::string(num) + "'");
    if (kind == "orientable") return orientable(v);
    if (kind == "nonorientable") return nonorientable(v);
    throw SurfaceError("unknown surface kind '" + std::string(kind) + "'");
}

std::string Surface::str() const {
    return (orientable_ ? "orientable:" : "nonorientable:") + std::to_string(n_);
}

Presentation presentation(const Surface& surface) {
    Presentation p;
    if (surface.is_orientable()) {
        for (int i = 1; i <= surface.genus(); ++i) {
            const int a = static_cast<int>(p.generators.size());
            p.generators.push_back("a" + std::to_string(i));
            p.generators.push_back("b" + std::to_string(i));
            p.relator.insert(p.relator.end(), {{a, 1}, {a + 1, 1}, {a, -1}, {a + 1, -1}});
        }
    } else {
        for (int i = 1; i <= surface.crosscaps(); ++i) {
            const int c = static_cast<int>(p.generators.size());
            p.generators.push_back("c" + std::to_string(i));
            p.relator.insert(p.relator.end(), {{c, 1}, {c, 1}});
        }
    }
    return p;
}

std::vector<std::vector<int>> cup_matrix(const Surface& surface) {
    const int b = surface.b1();
    std::vector<std::vector<int>> m(b, std::vector<int>(b, 0));
    if (surface.is_orientable()) {
        for (int i = 0; i < b; i += 2) m[i][i + 1] = m[i + 1][i] = 1;
    } else {
        for (int i = 0; i < b; ++i) m[i][i] = 1;
    }
    return m;
}

std::string QuadraticRefinement::str() const {
    std::string s = ring == RefinementRing::Z2 ? "spin:" : "pin:";
    for (std::size_t i = 0; i < basis_values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(basis_values[i]);
    }
    return s;
}

QuadraticRefinement make_refinement(const Surface& surface, RefinementRing ring, std::vector<int> values) {
    QuadraticRefinement q{ring, std::move(values), cup_matrix(surface)};
    if (q.basis_values.size() != static_cast<std::size_t>(surface.b1()))
        throw SurfaceError("structure has " + std::to_string(q.basis_values.size()) + " values, surface needs " +
                           std::to_string(surface.b1()));
    const int mod = ring == RefinementRing::Z2 ? 2 : 4;
    for (std::size_t i = 0; i < q.basis_values.size(); ++i) {
        const int v = q.basis_values[i];
        if (v < 0 || v >= mod) throw SurfaceError("structure value " + std::to_string(v) + " out of range");
        if (ring == RefinementRing::Z4 && (v % 2) != q.cup[i][i])
            throw SurfaceError("Z4 value at basis vector " + std::to_string(i) + " has the wrong parity");
    }
    return q;
}

int quadratic_eval(const QuadraticRefinement& form, const std::vector<int>& x) {
    const int b = form.b1();
    if (static_cast<int>(x.size()) != b || static_cast<int>(form.basis_values.size()) != b)
        throw SurfaceError("dimension mismatch in quadratic_eval");
    const bool z4 = form.ring == RefinementRing::Z4;
    int v = 0;
    for (int i = 0; i < b; ++i) {
        if (!(x[i] & 1)) continue;
        if (z4 && (form.basis_values[i] % 2) != form.cup[i][i])
            throw SurfaceError("Z4 value at basis vector " + std::to_string(i) + " has the wrong parity");
        v += form.basis_values[i];
        for (int j = i + 1; j < b; ++j)
            if ((x[j] & 1) && form.cup[i][j]) v += z4 ? 2 : 1;
    }
    return v % (z4 ? 4 : 2);
}

std::complex<double> gauss_sum(const QuadraticRefinement& form) {
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int b = form.b1();
    if (b > 24) throw SurfaceError("Gauss sum over more than 2^24 classes");
    std::complex<double> s = 0;
    std::vector<int> x(b);
    for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
        for (int i = 0; i < b; ++i) x[i] = (mask >> i) & 1u;
        const int q = quadratic_eval(form, x);
        s += form.ring == RefinementRing::Z2 ? std::complex<double>(q ? -1.0 : 1.0, 0.0) : ipow[q];
    }
    return s;
}

int arf(const QuadraticRefinement& form) {
    if (form.ring != RefinementRing::Z2) throw SurfaceError("Arf invariant needs a Z2 refinement");
    const int b = form.b1();
    if (b % 2) throw SurfaceError("Arf invariant needs a symplectic cup matrix");
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            const int expect = ((i ^ 1) == j) ? 1 : 0;
            if (form.cup[i][j] != expect) throw SurfaceError("Arf invariant needs a symplectic cup matrix");
        }
    int a = 0;
    for (int i = 0; i < b; i += 2) a ^= (form.basis_values[i] & form.basis_values[i + 1] & 1);

    const auto g = gauss_sum(form);
    const double expected = std::pow(2.0, b / 2.0);
    if (std::abs(std::abs(g) - expected) > 1e-9 * expected || std::abs(g - std::complex<double>(a ? -expected : expected, 0)) > 1e-9 * expected)
        throw SurfaceError("Gauss sum disagrees with the Arf invariant; input is not a refinement");
    return a;
}

AbkResult abk(const QuadraticRefinement& form) {
    if (form.ring != RefinementRing::Z4) throw SurfaceError("ABK invariant needs a Z4 refinement");
    AbkResult r;
    r.raw = gauss_sum(form) / std::pow(std::numbers::sqrt2, form.b1());
    if (std::abs(std::abs(r.raw) - 1.0) > 1e-9) throw SurfaceError("normalized Gauss sum is not a unit; input is not a refinement");
    const double eighths = std::arg(r.raw) / (2.0 * std::numbers::pi) * 8.0;
    const long k = std::lround(eighths);
    if (std::abs(eighths - static_cast<double>(k)) > 1e-6) throw SurfaceError("Gauss sum phase is not a multiple of 2 pi / 8");
    r.value = static_cast<int>(((k % 8) + 8) % 8);
    return r;
}

std::vector<QuadraticRefinement> enumerate_structures(const Surface& surface, StructureKind kind) {
    const int b = surface.b1();
    std::vector<QuadraticRefinement> out;
    if (kind == StructureKind::Spin) {
        if (!surface.is_orientable()) throw SurfaceError("spin structures need an orientable surface");
        for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
            std::vector<int> v(b);
            for (int i = 0; i < b; ++i) v[i] = (mask >> i) & 1u;
            out.push_back(make_refinement(surface, RefinementRing::Z2, std::move(v)));
        }
        return out;
    }
    const auto cup = cup_matrix(surface);
    for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
        std::vector<int> v(b);
        // Parity is fixed by the cup diagonal; the free bit picks v or v + 2.
        for (int i = 0; i < b; ++i) v[i] = cup[i][i] + 2 * static_cast<int>((mask >> i) & 1u);
        out.push_back(make_refinement(surface, RefinementRing::Z4, std::move(v)));
    }
    return out;
}

Phase integrate_cocycle(const Group& group, const Twist& twist, const Presentation& pres, const std::vector<int>& assignment) {
    if (assignment.size() != pres.generators.size()) throw SurfaceError("assignment length does not match the presentation");
    int elem = 0;
    Phase lambda;
    for (const auto& l : pres.relator) {
        const int g = assignment[l.generator];
        if (l.power > 0) {
            lambda += twist.a(elem, g);
            elem = group.mul(elem, g);
        } else {
            // e_g^-1 = omega(g, g^-1)^-1 e_{g^-1}
            const int gi = group.inv(g);
            lambda -= twist.a(g, gi);
            lambda += twist.a(elem, gi);
            elem = group.mul(elem, gi);
        }
    }
    if (elem != 0) throw SurfaceError("assignment does not satisfy the relator");
    return lambda;
}

} // namespace superfs
