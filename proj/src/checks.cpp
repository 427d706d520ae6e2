#include "chopf/checks.hpp"

#include <stdexcept>

namespace chopf {

namespace {

nlohmann::ordered_json colour_context(
    std::initializer_list<std::pair<const char*, const ColourTag*>> items) {
    nlohmann::ordered_json ctx;
    for (const auto& [key, tag] : items) ctx[key] = tag->str();
    return ctx;
}

RingMatrix cybe_residual(const ModelSpec& model, const RingMatrix& r_lm, const ColourTag& lambda,
                         const ColourTag& mu, const ColourTag& nu) {
    const RingMatrix r12 = embed_leg(r_lm, LegPair::L12);
    const RingMatrix r13 = embed_leg(coloured_r_matrix(model, lambda, nu), LegPair::L13);
    const RingMatrix r23 = embed_leg(coloured_r_matrix(model, mu, nu), LegPair::L23);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

// Formal alphabet for iterating structure maps on coproduct legs. The
// coproducts of the generators only ever produce legs from this set, so the
// coloured Hopf-axiom identities close over it.
enum class FGen { One, E, F, K, Kinv };

FGen to_fgen(Generator g) {
    switch (g) {
        case Generator::E: return FGen::E;
        case Generator::F: return FGen::F;
        case Generator::K: return FGen::K;
        case Generator::Kinv: return FGen::Kinv;
    }
    throw std::invalid_argument("unknown generator");
}

LaurentPoly fg_scale(FGen g, const ColourTag& nu) {
    switch (g) {
        case FGen::E: return nu.poly();
        case FGen::F: return nu.inverse().poly();
        default: return LaurentPoly::constant(nu.poly().registry(), 1);
    }
}

RingMatrix fg_rep(const ModelSpec& model, FGen g) {
    switch (g) {
        case FGen::One: return RingMatrix::identity(model.registry(), 2);
        case FGen::E: return model.rep(Generator::E);
        case FGen::F: return model.rep(Generator::F);
        case FGen::K: return model.rep(Generator::K);
        case FGen::Kinv: return model.rep(Generator::Kinv);
    }
    throw std::invalid_argument("unknown formal generator");
}

LaurentPoly fg_counit(const ModelSpec& model, FGen g) {
    switch (g) {
        case FGen::One: return LaurentPoly::constant(model.registry(), 1);
        case FGen::E: return model.counit(Generator::E);
        case FGen::F: return model.counit(Generator::F);
        case FGen::K: return model.counit(Generator::K);
        case FGen::Kinv: return model.counit(Generator::Kinv);
    }
    throw std::invalid_argument("unknown formal generator");
}

RingMatrix fg_antipode(const ModelSpec& model, FGen g) {
    switch (g) {
        case FGen::One: return RingMatrix::identity(model.registry(), 2);
        case FGen::E: return model.antipode_image(Generator::E);
        case FGen::F: return model.antipode_image(Generator::F);
        case FGen::K: return model.antipode_image(Generator::K);
        case FGen::Kinv: return model.antipode_image(Generator::Kinv);
    }
    throw std::invalid_argument("unknown formal generator");
}

// Delta on the formal alphabet; all structure coefficients are 1.
std::vector<std::pair<FGen, FGen>> fg_delta(FGen g) {
    switch (g) {
        case FGen::One: return {{FGen::One, FGen::One}};
        case FGen::E: return {{FGen::E, FGen::K}, {FGen::One, FGen::E}};
        case FGen::F: return {{FGen::F, FGen::One}, {FGen::Kinv, FGen::F}};
        case FGen::K: return {{FGen::K, FGen::K}};
        case FGen::Kinv: return {{FGen::Kinv, FGen::Kinv}};
    }
    throw std::invalid_argument("unknown formal generator");
}

struct ColouredLeg {
    LaurentPoly coeff;
    FGen g1, g2;
};

// Delta^{lambda,mu}_{q,nu}(g) as a formal sum; the sigma legs are folded
// into the scalar coefficient, the legs stay plain generators.
std::vector<ColouredLeg> coloured_delta_formal(FGen g, const ColourTag& lambda,
                                               const ColourTag& mu, const ColourTag& nu) {
    std::vector<ColouredLeg> out;
    const LaurentPoly pre = fg_scale(g, nu.inverse());
    for (const auto& [g1, g2] : fg_delta(g))
        out.push_back({pre * fg_scale(g1, lambda) * fg_scale(g2, mu), g1, g2});
    return out;
}

CheckReport coassoc_report(const ModelSpec& model, const ColourTag& alpha, const ColourTag& beta,
                           const ColourTag& lambda, const ColourTag& lambda_left,
                           const ColourTag& mu, const ColourTag& kappa, const ColourTag& nu,
                           const std::string& name, nlohmann::ordered_json ctx) {
    std::vector<NamedResidual> residuals;
    for (Generator gen : all_generators) {
        const FGen g = to_fgen(gen);
        RingMatrix lhs(model.registry(), 8, 8), rhs(model.registry(), 8, 8);
        for (const auto& t : coloured_delta_formal(g, lambda, mu, nu))
            for (const auto& u : coloured_delta_formal(t.g1, alpha, beta, lambda_left))
                lhs += kron(kron(fg_rep(model, u.g1), fg_rep(model, u.g2)), fg_rep(model, t.g2))
                           .scaled(t.coeff * u.coeff);
        for (const auto& t : coloured_delta_formal(g, alpha, kappa, nu))
            for (const auto& u : coloured_delta_formal(t.g2, beta, mu, kappa))
                rhs += kron(fg_rep(model, t.g1), kron(fg_rep(model, u.g1), fg_rep(model, u.g2)))
                           .scaled(t.coeff * u.coeff);
        residuals.push_back({generator_name(gen), lhs - rhs});
    }
    return make_report(name, std::move(ctx), std::move(residuals));
}

}  // namespace

CheckReport check_cybe(const ModelSpec& model, const ColourTag& lambda, const ColourTag& mu,
                       const ColourTag& nu) {
    RingMatrix res = cybe_residual(model, coloured_r_matrix(model, lambda, mu), lambda, mu, nu);
    return make_report("ybe", colour_context({{"lambda", &lambda}, {"mu", &mu}, {"nu", &nu}}),
                       {{"ybe", std::move(res)}});
}

CheckReport check_cybe_negative_control(const ModelSpec& model, const ColourTag& lambda,
                                        const ColourTag& mu, const ColourTag& nu) {
    RingMatrix r_lm = coloured_r_matrix(model, lambda, mu);
    r_lm.at(1, 2) *= lambda.poly() * lambda.poly() * mu.inverse().poly();
    RingMatrix res = cybe_residual(model, r_lm, lambda, mu, nu);
    auto ctx = colour_context({{"lambda", &lambda}, {"mu", &mu}, {"nu", &nu}});
    ctx["control"] = "coloured entry multiplied by lambda^2/mu";
    return make_report("ybe-negative-control", std::move(ctx), {{"ybe", std::move(res)}});
}

CheckReport check_coassoc_coloured(const ModelSpec& model, const ColourTag& alpha,
                                   const ColourTag& beta, const ColourTag& lambda,
                                   const ColourTag& mu, const ColourTag& kappa,
                                   const ColourTag& nu) {
    return coassoc_report(model, alpha, beta, lambda, lambda, mu, kappa, nu, "coassoc",
                          colour_context({{"alpha", &alpha},
                                          {"beta", &beta},
                                          {"lambda", &lambda},
                                          {"mu", &mu},
                                          {"kappa", &kappa},
                                          {"nu", &nu}}));
}

CheckReport check_coassoc_mismatch_control(const ModelSpec& model, const ColourTag& alpha,
                                           const ColourTag& beta, const ColourTag& lambda,
                                           const ColourTag& mu, const ColourTag& kappa,
                                           const ColourTag& nu) {
    const ColourTag two(LaurentPoly::constant(model.registry(), 2));
    auto ctx = colour_context({{"alpha", &alpha},
                               {"beta", &beta},
                               {"lambda", &lambda},
                               {"mu", &mu},
                               {"kappa", &kappa},
                               {"nu", &nu}});
    ctx["control"] = "left composition uses middle colour 2*lambda";
    return coassoc_report(model, alpha, beta, lambda, two * lambda, mu, kappa, nu,
                          "coassoc-negative-control", std::move(ctx));
}

CheckReport check_counit_coloured(const ModelSpec& model, const ColourTag& lambda,
                                  const ColourTag& mu, const ColourTag& nu) {
    std::vector<NamedResidual> residuals;
    for (Generator gen : all_generators) {
        const FGen g = to_fgen(gen);
        RingMatrix lhs(model.registry(), 2, 2);
        for (const auto& t : coloured_delta_formal(g, lambda, mu, nu)) {
            const LaurentPoly eps = fg_counit(model, t.g1) * fg_scale(t.g1, lambda.inverse());
            if (!eps.is_zero()) lhs += fg_rep(model, t.g2).scaled(t.coeff * eps);
        }
        RingMatrix rhs = model.rep(gen).scaled(sigma_scale(gen, nu.inverse()) * sigma_scale(gen, mu));
        residuals.push_back({generator_name(gen), lhs - rhs});
    }
    return make_report("counit", colour_context({{"lambda", &lambda}, {"mu", &mu}, {"nu", &nu}}),
                       std::move(residuals));
}

CheckReport check_counit_wrong_target_control(const ModelSpec& model, const ColourTag& lambda,
                                              const ColourTag& mu, const ColourTag& nu) {
    const ColourTag two(LaurentPoly::constant(model.registry(), 2));
    std::vector<NamedResidual> residuals;
    for (Generator gen : all_generators) {
        const FGen g = to_fgen(gen);
        RingMatrix lhs(model.registry(), 2, 2);
        for (const auto& t : coloured_delta_formal(g, lambda, mu, nu)) {
            const LaurentPoly eps = fg_counit(model, t.g1) * fg_scale(t.g1, lambda.inverse());
            if (!eps.is_zero()) lhs += fg_rep(model, t.g2).scaled(t.coeff * eps);
        }
        RingMatrix rhs = model.rep(gen).scaled(sigma_scale(gen, nu.inverse()) *
                                               sigma_scale(gen, two * mu));
        residuals.push_back({generator_name(gen), lhs - rhs});
    }
    auto ctx = colour_context({{"lambda", &lambda}, {"mu", &mu}, {"nu", &nu}});
    ctx["control"] = "comparison target uses sigma^{2*mu}";
    return make_report("counit-negative-control", std::move(ctx), std::move(residuals));
}

namespace {

CheckReport antipode_report(const ModelSpec& model, const ColourTag& s_lower,
                            const ColourTag& lambda, const ColourTag& mu, const ColourTag& nu,
                            const std::string& name, nlohmann::ordered_json ctx) {
    std::vector<NamedResidual> residuals;
    for (Generator gen : all_generators) {
        const FGen g = to_fgen(gen);
        RingMatrix lhs(model.registry(), 2, 2);
        for (const auto& t : coloured_delta_formal(g, lambda, mu, nu)) {
            RingMatrix s_leg = sigma_conjugate(mu, fg_antipode(model, t.g1))
                                   .scaled(fg_scale(t.g1, s_lower.inverse()));
            lhs += (s_leg * fg_rep(model, t.g2)).scaled(t.coeff);
        }
        RingMatrix rhs = RingMatrix::identity(model.registry(), 2)
                             .scaled(coloured_counit(model, gen, nu));
        residuals.push_back({generator_name(gen), lhs - rhs});
    }
    return make_report(name, std::move(ctx), std::move(residuals));
}

}  // namespace

CheckReport check_antipode_coloured(const ModelSpec& model, const ColourTag& lambda,
                                    const ColourTag& mu, const ColourTag& nu) {
    return antipode_report(model, lambda, lambda, mu, nu, "antipode",
                           colour_context({{"lambda", &lambda}, {"mu", &mu}, {"nu", &nu}}));
}

CheckReport check_antipode_wrong_colour_control(const ModelSpec& model, const ColourTag& lambda,
                                                const ColourTag& mu, const ColourTag& nu) {
    const ColourTag two(LaurentPoly::constant(model.registry(), 2));
    auto ctx = colour_context({{"lambda", &lambda}, {"mu", &mu}, {"nu", &nu}});
    ctx["control"] = "S leg uses lower colour 2*lambda";
    return antipode_report(model, two * lambda, lambda, mu, nu, "antipode-negative-control",
                           std::move(ctx));
}

std::pair<FreeElemMatrix, FreeElemMatrix> t_matrix_legs(const RegistryPtr& reg,
                                                        const ColourTag& lambda,
                                                        const ColourTag& mu) {
    FreeElemMatrix t1(reg, 4, 4), t2(reg, 4, 4);
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k)
            for (int j = 1; j <= 2; ++j)
                for (int l = 1; l <= 2; ++l) {
                    const std::size_t r = (i - 1) * 2 + (k - 1);
                    const std::size_t c = (j - 1) * 2 + (l - 1);
                    if (k == l) t1.at(r, c) = FreeElem::letter(reg, i, j, lambda);
                    if (i == j) t2.at(r, c) = FreeElem::letter(reg, k, l, mu);
                }
    return {std::move(t1), std::move(t2)};
}

const FreeElem& RelationSet::at(int i, int k, int j, int l) const {
    for (const auto& rel : relations)
        if (rel.i == i && rel.k == k && rel.j == j && rel.l == l) return rel.element;
    throw std::out_of_range("relation slot out of range");
}

RelationSet derive_rtt_relations(const ModelSpec& model, const ColourTag& lambda,
                                 const ColourTag& mu, const ColourTag& nu) {
    const RegistryPtr& reg = model.registry();
    const RingMatrix r = coloured_r_matrix(model, lambda, mu);
    auto idx = [](int x, int y) { return static_cast<std::size_t>((x - 1) * 2 + (y - 1)); };
    RelationSet out{lambda, mu, nu, {}};
    out.relations.reserve(16);
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k)
            for (int j = 1; j <= 2; ++j)
                for (int l = 1; l <= 2; ++l) {
                    FreeElem acc = FreeElem::zero(reg);
                    for (int a = 1; a <= 2; ++a)
                        for (int b = 1; b <= 2; ++b) {
                            // R^{lm}(T1 ∘n T2): (T1 ∘n T2)[(ab),(jl)] = t_{aj}(l) ∘n t_{bl}(m)
                            const LaurentPoly& r1 = r.at(idx(i, k), idx(a, b));
                            if (!r1.is_zero())
                                acc += coloured_product(FreeElem::letter(reg, a, j, lambda),
                                                        FreeElem::letter(reg, b, l, mu), nu)
                                           .scaled(r1);
                            // (T2 ∘n T1)R^{lm}: (T2 ∘n T1)[(ik),(ab)] = t_{kb}(m) ∘n t_{ia}(l)
                            const LaurentPoly& r2 = r.at(idx(a, b), idx(j, l));
                            if (!r2.is_zero())
                                acc -= coloured_product(FreeElem::letter(reg, k, b, mu),
                                                        FreeElem::letter(reg, i, a, lambda), nu)
                                           .scaled(r2);
                        }
                    acc.set_result_colour(nu);
                    out.relations.push_back({i, k, j, l, std::move(acc)});
                }
    return out;
}

CheckReport check_rtt_consistency(const ModelSpec& model, const RelationSet& rel) {
    const RegistryPtr& reg = model.registry();
    const ColourTag &lambda = rel.lambda, &mu = rel.mu, &nu = rel.nu;
    const RingMatrix rf = flip_conjugate(coloured_r_matrix(model, lambda, mu));
    auto idx = [](int x, int y) { return static_cast<std::size_t>((x - 1) * 2 + (y - 1)); };

    // Legs-(2,1) residual, written from the opposite side:
    //   Set21 = (S2 ∘n S1)·Rf − Rf·(S1 ∘n S2)
    // with S1[(ik),(jl)] = delta_{ij} t_{kl}(lambda) (first colour on leg 2),
    //      S2[(ik),(jl)] = delta_{kl} t_{ij}(mu), Rf = flip(R^{lm}).
    FreeElemMatrix set21(reg, 4, 4);
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k)
            for (int j = 1; j <= 2; ++j)
                for (int l = 1; l <= 2; ++l) {
                    FreeElem acc = FreeElem::zero(reg);
                    for (int a = 1; a <= 2; ++a)
                        for (int b = 1; b <= 2; ++b) {
                            // (S2 ∘n S1)[(ik),(ab)] = t_{ia}(m) ∘n t_{kb}(l)
                            const LaurentPoly& r1 = rf.at(idx(a, b), idx(j, l));
                            if (!r1.is_zero())
                                acc += coloured_product(FreeElem::letter(reg, i, a, mu),
                                                        FreeElem::letter(reg, k, b, lambda), nu)
                                           .scaled(r1);
                            // (S1 ∘n S2)[(ab),(jl)] = t_{bl}(l) ∘n t_{aj}(m)
                            const LaurentPoly& r2 = rf.at(idx(i, k), idx(a, b));
                            if (!r2.is_zero())
                                acc -= coloured_product(FreeElem::letter(reg, b, l, lambda),
                                                        FreeElem::letter(reg, a, j, mu), nu)
                                           .scaled(r2);
                        }
                    set21.at(idx(i, k), idx(j, l)) = std::move(acc);
                }

    // flip(Set21) must equal the negation of the input relation set.
    std::vector<NamedResidual> residuals;
    for (const auto& slot : rel.relations) {
        FreeElem mirrored = set21.at(idx(slot.k, slot.i), idx(slot.l, slot.j));
        FreeElem residual = mirrored + slot.element;
        residuals.push_back({"slot(" + std::to_string(slot.i) + std::to_string(slot.k) + "|" +
                                 std::to_string(slot.j) + std::to_string(slot.l) + ")",
                             std::move(residual)});
    }
    return make_report("rtt-consistency",
                       colour_context({{"lambda", &lambda}, {"mu", &mu}, {"nu", &nu}}),
                       std::move(residuals));
}

}  // namespace chopf
