// Singularity analysis: the kappa/lambda polynomials of a declared-inverse
// pair (Psi o Phi = kappa * Id), their factorization into linear forms by
// exact trial division against a candidate set, and singular-orbit tracing
// with confinement detection.
#ifndef CREMONA_SINGULAR_HPP
#define CREMONA_SINGULAR_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/homog_poly.hpp"
#include "cremona/linear_form.hpp"
#include "cremona/proj_map.hpp"
#include "cremona/proj_point.hpp"

namespace cremona {

// kappa and lambda of a map with declared inverse: Psi o Phi = kappa * Id and
// Phi o Psi = lambda * Id as exact polynomial identities.
inline std::pair<HomogPoly, HomogPoly> kappa_lambda(const ProjMap& phi)
{
    const ProjMap& psi = phi.inverse();
    auto extract = [](const ProjMap& outer, const ProjMap& inner) {
        std::array<HomogPoly, 4> raw = compose_unreduced(outer, inner);
        HomogPoly quotient;
        for (int i = 0; i < 4; ++i) {
            HomogPoly q;
            try {
                q = raw[static_cast<std::size_t>(i)].divide_exact(HomogPoly::variable(i));
            } catch (const error& e) {
                if (e.code() == errc::not_divisible)
                    fail(errc::not_proportional_to_identity, "component " + std::to_string(i + 1) + " not divisible by its coordinate");
                throw;
            }
            if (i == 0) quotient = q;
            else if (quotient != q)
                fail(errc::not_proportional_to_identity, "component quotients disagree; wrong declared inverse?");
        }
        return quotient;
    };
    return {extract(psi, phi), extract(phi, psi)};
}

struct KappaFactorization {
    std::vector<std::pair<LinearForm, int>> factors; // (form, multiplicity)
    int total_degree = 0;
    HomogPoly residual; // constant on success
    bool complete() const { return residual.is_constant(); }
};

// Repeated exact trial division of kappa by the coordinate forms and then by
// each candidate form. The non-throwing variant leaves any unfactored part in
// `residual`.
inline KappaFactorization factor_linear_forms_partial(const HomogPoly& kappa, const std::vector<LinearForm>& candidates)
{
    KappaFactorization out;
    out.total_degree = std::max(kappa.degree(), 0);
    HomogPoly rest = kappa;
    auto strip = [&](const LinearForm& form) {
        HomogPoly f = form.to_poly();
        int mult = 0;
        while (!rest.is_constant() && rest.is_divisible_by(f)) {
            rest = rest.divide_exact(f);
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(form, mult);
    };
    for (int i = 0; i < 4; ++i) strip(LinearForm::coordinate(i));
    for (const auto& cand : candidates) {
        if (rest.is_constant()) break;
        bool seen = false;
        for (const auto& [f, m] : out.factors) seen = seen || f == cand;
        if (!seen) strip(cand);
    }
    out.residual = rest;
    return out;
}

inline KappaFactorization factor_linear_forms(const HomogPoly& kappa, const std::vector<LinearForm>& candidates)
{
    KappaFactorization out = factor_linear_forms_partial(kappa, candidates);
    if (!out.complete())
        fail(errc::incomplete_factorization, "non-constant residual of degree " + std::to_string(out.residual.degree()));
    return out;
}

enum class OrbitOutcome { confined_into_base_locus, periodic, open_after_cap, not_contracted_to_point };

inline const char* to_string(OrbitOutcome o)
{
    switch (o) {
        case OrbitOutcome::confined_into_base_locus: return "confined";
        case OrbitOutcome::periodic: return "periodic";
        case OrbitOutcome::open_after_cap: return "open";
        case OrbitOutcome::not_contracted_to_point: return "not_contracted_to_point";
    }
    return "?";
}

struct SingularOrbit {
    LinearForm source_plane;
    std::vector<ProjPoint> chain; // contraction point, then successive images
    OrbitOutcome outcome;
    int length() const { return static_cast<int>(chain.size()); }
};

// Deterministic rational probe points on the plane: two free coordinates run
// through small positive values (shifted by `seed`), the pivot coordinate is
// solved from the form. Probes in the base locus are skipped.
inline std::vector<ProjPoint> plane_probes(const LinearForm& plane, const ProjMap& map, int how_many = 3, int seed = 0)
{
    const auto& c = plane.coefficients();
    int pivot = -1;
    for (int i = 0; i < 4; ++i)
        if (c[static_cast<std::size_t>(i)] != 0) {
            pivot = i;
            break;
        }
    std::vector<ProjPoint> probes;
    for (long u = 1; u <= 40 && static_cast<int>(probes.size()) < how_many; ++u) {
        long a = 1 + (u + seed) % 5, b = 1 + (u * u + 2 * seed) % 7, d = 1 + (u * u * u + seed) % 3;
        std::array<Rat, 4> x;
        int free_slot = 0;
        long vals[3] = {a, b, d};
        for (int i = 0; i < 4; ++i)
            if (i != pivot) x[static_cast<std::size_t>(i)] = Rat(vals[free_slot++]);
        Rat acc = 0;
        for (int i = 0; i < 4; ++i)
            if (i != pivot) acc += Rat(c[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
        x[static_cast<std::size_t>(pivot)] = -acc / Rat(c[static_cast<std::size_t>(pivot)]);
        ProjPoint p = ProjPoint::from_rationals(x);
        if (plane.evaluate(p) != 0) continue;
        if (map.in_base_locus(p)) continue;
        bool dup = false;
        for (const auto& q : probes) dup = dup || q == p;
        if (!dup) probes.push_back(p);
    }
    if (static_cast<int>(probes.size()) < how_many)
        fail(errc::probe_in_base_locus, "could not find enough probe points off the base locus");
    return probes;
}

// Traces the image of a contracted plane: if the probe images coincide the
// plane contracts to a point, which is then iterated until it enters the base
// locus (confined), revisits a point (periodic), or runs past max_steps.
inline SingularOrbit trace_singular_orbit(const ProjMap& map, const LinearForm& plane,
                                          const std::vector<ProjPoint>& probes, int max_steps = 24)
{
    if (probes.size() != 3) fail(errc::precondition, "exactly three probe points expected");
    for (const auto& p : probes) {
        if (plane.evaluate(p) != 0) fail(errc::precondition, "probe point not on the plane");
        if (map.in_base_locus(p)) fail(errc::probe_in_base_locus, "probe point " + p.to_string());
    }
    std::array<ProjPoint, 3> img{map.apply(probes[0]), map.apply(probes[1]), map.apply(probes[2])};
    SingularOrbit orbit{plane, {}, OrbitOutcome::not_contracted_to_point};
    if (!(img[0] == img[1] && img[1] == img[2])) return orbit;
    orbit.chain.push_back(img[0]);
    for (int step = 0; step < max_steps; ++step) {
        const ProjPoint& last = orbit.chain.back();
        if (map.in_base_locus(last)) {
            orbit.outcome = OrbitOutcome::confined_into_base_locus;
            return orbit;
        }
        ProjPoint next = map.apply(last);
        for (const auto& seen : orbit.chain)
            if (seen == next) {
                orbit.outcome = OrbitOutcome::periodic;
                orbit.chain.push_back(next);
                return orbit;
            }
        orbit.chain.push_back(next);
    }
    orbit.outcome = OrbitOutcome::open_after_cap;
    return orbit;
}

inline SingularOrbit trace_singular_orbit(const ProjMap& map, const LinearForm& plane, int max_steps = 24, int seed = 0)
{
    return trace_singular_orbit(map, plane, plane_probes(plane, map, 3, seed), max_steps);
}

} // namespace cremona

#endif
