#include "skein/sweeps.hpp"

#include "skein/families.hpp"
#include "skein/lens_4k.hpp"
#include "skein/s2xs1.hpp"

#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace skein {

bool SweepReport::ok() const {
    for (const auto& l : lines)
        if (!l.ok()) return false;
    return true;
}

SweepLine& SweepReport::line(const std::string& name) {
    for (auto& l : lines)
        if (l.name == name) return l;
    lines.push_back({name, 0, 0});
    return lines.back();
}

void SweepReport::record(const std::string& name, bool pass) {
    SweepLine& l = line(name);
    ++l.total;
    if (pass) ++l.passed;
}

void SweepReport::append(const SweepReport& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

int default_range(const std::string& suite) {
    if (suite == "families") return 20;
    if (suite == "sigma" || suite == "star") return 5;
    if (suite == "starstar") return 4;
    if (suite == "torsion") return 8;
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

Laurent random_laurent(std::mt19937_64& rng, int max_exp, int max_coeff, int max_terms) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> ex(-max_exp, max_exp);
    std::uniform_int_distribution<int> co(-max_coeff, max_coeff);
    Laurent r;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) r += Laurent::monomial(ex(rng), co(rng));
    return r;
}

SkeinVector random_skein_vector(std::mt19937_64& rng, const RandomWordSpec& spec) {
    std::uniform_int_distribution<int> terms(1, spec.max_terms);
    std::uniform_int_distribution<int> xcount(0, spec.max_x);
    std::uniform_int_distribution<int> idx(-spec.max_index, spec.max_index);
    std::uniform_int_distribution<int> lam(0, spec.max_lambda);
    SkeinVector v;
    const int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        const int r = xcount(rng);
        std::vector<int> lams(r + 1), xs(r);
        for (auto& n : lams) n = lam(rng);
        for (auto& m : xs) m = idx(rng);
        Laurent c = random_laurent(rng, 4, 5, 2);
        if (c.is_zero()) c = 1;
        v.add(Word(std::move(lams), std::move(xs)), c);
    }
    return v;
}

SkeinVector sigma_as_words(const SigmaVector& s, const Nu1Context& ctx) {
    return expand_polynomial_at(Word(), s.part0, Word()) +
           expand_polynomial_at(Word::x(ctx.nu1), s.part1, Word());
}

std::vector<std::pair<int, int>> two_fiber_sweep_set() {
    return {{-2, -2}, {-1, -2}, {0, -2}, {0, 0}, {1, 0}, {1, 1}, {-1, 1}};
}

namespace {

int beta_of(int nu) { return 2 * nu + 1; }

}  // namespace

SweepReport sweep_families(int range) {
    SweepReport rep;
    for (int m = -range; m <= range; ++m) {
        rep.record("P via Q (P_m = -A^{m+2}Q_{m+1} + A^{m-2}Q_{m-1})",
                   poly_P(m) == -Apow(m + 2) * poly_Q(m + 1) + Apow(m - 2) * poly_Q(m - 1));
        rep.record("P via F (P_m = -A^-2 F_{-m} + A^-1 F_{-m-1})",
                   poly_P(m) == -Apow(-2) * poly_F(-m) + Apow(-1) * poly_F(-m - 1));
        const LambdaPoly& f = poly_F(m);
        rep.record("F degree and leading coefficient",
                   f.degree() == std::max(m, -m - 1) &&
                       f.leading() == (m >= 0 ? Apow(-m) : -Apow(2 - m)));
        const LambdaPoly& r = poly_R(m);
        rep.record("R degree and leading coefficient",
                   r.degree() == std::max(m, 1 - m) &&
                       r.leading() == (m >= 1 ? Apow(m) : -Apow(m - 4)));
        if (m >= 0) {
            rep.record("phi and psi-core monic of degree m",
                       poly_phi(m).degree() == m && poly_phi(m).leading() == Laurent(1) &&
                           poly_psi_core(m).degree() == m &&
                           poly_psi_core(m).leading() == Laurent(1));
        }
    }
    return rep;
}

SweepReport sweep_sigma(int range, int samples_per_nu1, std::uint64_t seed) {
    SweepReport rep;
    std::mt19937_64 rng(seed);
    RandomWordSpec spec;
    spec.max_index = range;
    std::uniform_int_distribution<int> kdist(-range, range);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int nu1 = -2; nu1 <= 2; ++nu1) {
        const Nu1Context ctx = Nu1Context::from_nu1(nu1);
        for (int i = 0; i < samples_per_nu1; ++i) {
            const SkeinVector v = random_skein_vector(rng, spec);
            const SigmaVector base = reduce_to_sigma(v, ctx, Strategy::AbsorbLeftward);
            const bool agree = base == reduce_to_sigma(v, ctx, Strategy::AbsorbRightward) &&
                               base == reduce_to_sigma(v, ctx, Strategy::Lazy);
            rep.record("strategy independence", agree);

            // replace one x-generator by its shifted re-expression
            const auto& [w, c] = *std::next(v.terms().begin(),
                                            std::uniform_int_distribution<size_t>(0, v.terms().size() - 1)(rng));
            if (w.x_count() > 0) {
                const size_t pos = std::uniform_int_distribution<size_t>(0, w.x_count() - 1)(rng);
                const ShiftSide side = coin(rng) ? ShiftSide::Right : ShiftSide::Left;
                const SkeinVector shifted = shift_x_expression(kdist(rng), w.xs()[pos], side);
                const SkeinVector v2 = v - SkeinVector(w, c) +
                                       c * (SkeinVector(w.before_x(pos)) * shifted * SkeinVector(w.after_x(pos)));
                rep.record("x-shift substitution invariance", reduce_to_sigma(v2, ctx) == base);
            }

            rep.record("idempotence", reduce_to_sigma(sigma_as_words(base, ctx), ctx) == base);

            const SkeinVector u = random_skein_vector(rng, spec);
            const Laurent a = random_laurent(rng, 3, 4, 2), b = random_laurent(rng, 3, 4, 2);
            rep.record("linearity", reduce_to_sigma(a * u + b * v, ctx) ==
                                        a * reduce_to_sigma(u, ctx) + b * base);
        }
    }
    return rep;
}

SweepReport sweep_star(int range) {
    SweepReport rep;
    for (int beta = -21; beta <= 21; beta += 2) {
        const LensBasis b = basis_p2(beta);
        rep.record("rank floor(|p|/2)+1", b.rank == std::abs(beta) / 2 + 1);
        if (std::abs(beta) > 11) continue;
        for (int n = 0; n < b.rank; ++n) {
            const LambdaBasisVector v = kbsm_class_p2(SkeinVector(Word::lambda(n)), beta);
            bool unit = v.coords.size() == static_cast<size_t>(b.rank);
            for (int i = 0; unit && i < b.rank; ++i) unit = v.coords[i] == Laurent(i == n ? 1 : 0);
            rep.record("retraction on basis words", unit);
        }
    }
    for (int beta : {1, -1, 3, -3, 5, -5})
        for (int eps = 0; eps <= 1; ++eps)
            for (int n1 = 0; n1 <= 3; ++n1)
                for (int n2 = 0; n2 <= 3; ++n2)
                    for (int m = -range; m <= range; ++m)
                        rep.record("omega-infinity kernel", verify_omega_infinity(beta, eps, n1, m, n2));
    return rep;
}

SweepReport sweep_starstar(int range) {
    SweepReport rep;
    for (const auto& [nu1, nu2] : two_fiber_sweep_set()) {
        const int b1 = beta_of(nu1), b2 = beta_of(nu2);
        const TwoFiberParams p = TwoFiberParams::from_betas(b1, b2);
        const auto [l0, l1] = sigma_pp_shape(p);
        rep.record("rank |beta1+beta2|+1", l0 + l1 == std::abs(b1 + b2) + 1 &&
                                               l0 + l1 == 2 * std::abs(p.k) + 1);
        for (int n = 0; n < l0 + l1; ++n) {
            const bool x = n >= l0;
            const int d = x ? n - l0 : n;
            const SkeinVector w = x ? SkeinVector(Word::x(nu1) * Word::lambda(d))
                                    : SkeinVector(Word::lambda(d));
            const SigmaPPVector v = kbsm_class_4k(w, b1, b2);
            bool unit = true;
            for (int i = 0; i < l0; ++i) unit = unit && v.coords0[i] == Laurent(!x && i == d ? 1 : 0);
            for (int i = 0; i < l1; ++i) unit = unit && v.coords1[i] == Laurent(x && i == d ? 1 : 0);
            rep.record("retraction on basis words", unit);
        }
        for (RelationForm form : {RelationForm::T, RelationForm::X})
            for (int eps = 0; eps <= 1; ++eps)
                for (int m = -range; m <= range; ++m)
                    for (int n1 = 0; n1 <= 2; ++n1)
                        for (int n2 = 0; n2 <= 2; ++n2)
                            rep.record(form == RelationForm::T ? "S_beta2 kernel (t-form)"
                                                               : "S_beta2 kernel (x-form)",
                                       verify_sbeta2(p, form, eps, m, n1, n2));
        for (int m = -2 * range; m <= 2 * range; ++m) {
            rep.record("bridge F x = x F", verify_bridge(p, Bridge::FxEqualsXF, m, 0, 0));
            rep.record("bridge x F x = R", verify_bridge(p, Bridge::XFxEqualsR, m, 0, 0));
        }
        for (int eps = 0; eps <= 1; ++eps)
            for (int n = 0; n <= 4; ++n)
                rep.record("bridge outer x shift", verify_bridge(p, Bridge::OuterShift, 0, eps, n));
        const Nu1Context ctx = p.fiber1();
        for (int m = -range; m <= range; ++m)
            for (int n = -range; n <= range; ++n)
                for (int k = 0; k <= 4; ++k) {
                    rep.record("omega5 raise", verify_omega5_identity(ctx, m, n, k, Omega5Direction::Raise));
                    rep.record("omega5 lower", verify_omega5_identity(ctx, m, n, k, Omega5Direction::Lower));
                }
    }
    return rep;
}

SweepReport sweep_torsion(int range) {
    SweepReport rep;
    for (int beta : {1, -1, 3, -3})
        for (int m = -range; m <= range; ++m) {
            rep.record("phi relation", verify_phi_relation(m, beta));
            rep.record("psi relation", verify_psi_relation(m, beta));
        }

    const std::function<LambdaPoly(int)> b_phi = [](int m) { return poly_Q(m + 1) - poly_Q(m); };
    const std::function<LambdaPoly(int)> b_psi = [](int m) { return poly_Q(m); };
    const Laurent z = z_value();
    for (UKind kind : {UKind::QEven, UKind::QOdd})
        for (const auto* fam : {&b_phi, &b_psi})
            for (int m = -range; m <= range; ++m) {
                const auto& B = *fam;
                const LambdaPoly lhs = u_value(kind, m + 1) * B(m) + u_value(kind, m - 1) * B(m - 1);
                const LambdaPoly rhs = telescope_S(kind, B, m) + z * telescope_S(kind, B, m - 1) +
                                       telescope_S(kind, B, m - 2);
                rep.record("telescoping identity", lhs == rhs);
            }
    for (int m = -range; m <= range; ++m) {
        rep.record("telescoped sums match Phi and Psi",
                   telescope_S(UKind::QEven, b_phi, m) == torsion_Phi(m) &&
                       telescope_S(UKind::QOdd, b_psi, m) == torsion_Psi_core(m));
    }

    for (int beta : {1, -1, 3})
        for (RelationForm form : {RelationForm::T, RelationForm::X})
            for (int eps = 0; eps <= 1; ++eps)
                for (int m = -3; m <= 3; ++m)
                    for (int n1 = 0; n1 <= 2; ++n1)
                        for (int n2 = 0; n2 <= 2; ++n2)
                            rep.record("kernel membership", verify_kernel_membership(form, eps, m, n1, n2, beta));

    const int census_n = 10;
    std::multiset<int> got, want;
    for (const auto& f : cyclic_census(census_n))
        if (f.modulus > 0) got.insert(f.modulus);
    for (int j = 1; j <= 2 * census_n; ++j) want.insert(2 * j + 4);
    rep.record("torsion census", got == want);

    std::mt19937_64 rng(7);
    for (int i = 1; i <= 6; ++i) {
        std::vector<Laurent> samples{Laurent(1), -Apow(3), q_value(2 * i + 2), q_value(2 * i + 1),
                                     Laurent(1) - Apow(phi_modulus(i)), Laurent(1) - Apow(psi_modulus(i))};
        for (int s = 0; s < 6; ++s) samples.push_back(random_laurent(rng, 12, 3, 4));
        for (int s = 0; s < 3; ++s)
            samples.push_back(random_laurent(rng, 6, 3, 3) * (Laurent(1) - Apow(phi_modulus(i))));
        for (const Laurent& c : samples) {
            const SkeinVector phi_vec = c * SkeinVector::from_poly(poly_phi(i));
            rep.record("annihilator sharpness (phi)",
                       is_zero_class(phi_vec, 1) == divisible_by_cyclic(c, phi_modulus(i)));
            const SkeinVector psi_vec =
                c * expand_polynomial_at(Word::x(0), poly_psi_core(i - 1), Word());
            rep.record("annihilator sharpness (psi)",
                       is_zero_class(psi_vec, 1) == divisible_by_cyclic(c, psi_modulus(i)));
        }
    }
    return rep;
}

}  // namespace skein
