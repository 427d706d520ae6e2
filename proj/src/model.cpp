#include "chopf/model.hpp"

#include <stdexcept>

namespace chopf {

namespace {

std::size_t gen_index(Generator g) { return static_cast<std::size_t>(g); }

RingMatrix matrix_unit(const RegistryPtr& reg, std::size_t i, std::size_t j) {
    RingMatrix m(reg, 2, 2);
    m.at(i, j) = LaurentPoly::constant(reg, 1);
    return m;
}

}  // namespace

std::string generator_name(Generator g) {
    switch (g) {
        case Generator::E: return "E";
        case Generator::F: return "F";
        case Generator::K: return "K";
        case Generator::Kinv: return "Kinv";
    }
    throw std::invalid_argument("unknown generator");
}

ModelSpec ModelSpec::slq2_colour(RegistryPtr registry, bool corrupt_r) {
    if (!registry->index_of("q"))
        throw std::invalid_argument("model registry must contain the variable q");
    ModelSpec m;
    m.name_ = "slq2-colour";
    m.reg_ = std::move(registry);
    const RegistryPtr& reg = m.reg_;
    const LaurentPoly q = LaurentPoly::variable(reg, "q");
    const LaurentPoly qi = LaurentPoly::variable(reg, "q", -1);
    const LaurentPoly one = LaurentPoly::constant(reg, 1);
    const LaurentPoly zero = LaurentPoly::zero(reg);

    RingMatrix de = matrix_unit(reg, 0, 1);
    RingMatrix df = matrix_unit(reg, 1, 0);
    RingMatrix dk(reg, 2, 2), dki(reg, 2, 2);
    dk.at(0, 0) = q;
    dk.at(1, 1) = qi;
    dki.at(0, 0) = qi;
    dki.at(1, 1) = q;
    m.rep_[gen_index(Generator::E)] = de;
    m.rep_[gen_index(Generator::F)] = df;
    m.rep_[gen_index(Generator::K)] = dk;
    m.rep_[gen_index(Generator::Kinv)] = dki;

    const RingMatrix i2 = RingMatrix::identity(reg, 2);
    m.coproduct_[gen_index(Generator::E)] = kron(de, dk) + kron(i2, de);
    m.coproduct_[gen_index(Generator::F)] = kron(df, i2) + kron(dki, df);
    m.coproduct_[gen_index(Generator::K)] = kron(dk, dk);
    m.coproduct_[gen_index(Generator::Kinv)] = kron(dki, dki);

    m.antipode_[gen_index(Generator::E)] = -(de * dki);
    m.antipode_[gen_index(Generator::F)] = -(dk * df);
    m.antipode_[gen_index(Generator::K)] = dki;
    m.antipode_[gen_index(Generator::Kinv)] = dk;

    m.counit_[gen_index(Generator::E)] = zero;
    m.counit_[gen_index(Generator::F)] = zero;
    m.counit_[gen_index(Generator::K)] = one;
    m.counit_[gen_index(Generator::Kinv)] = one;

    RingMatrix r(reg, 4, 4);
    r.at(0, 0) = q;
    r.at(1, 1) = one;
    r.at(1, 2) = q - qi;
    r.at(2, 2) = one;
    r.at(3, 3) = q;
    if (corrupt_r) r.at(1, 2) *= q;  // debug knob: breaks the YBE
    m.r_ = std::move(r);
    return m;
}

const RingMatrix& ModelSpec::rep(Generator g) const { return rep_[gen_index(g)]; }
const RingMatrix& ModelSpec::coproduct_image(Generator g) const { return coproduct_[gen_index(g)]; }
const RingMatrix& ModelSpec::antipode_image(Generator g) const { return antipode_[gen_index(g)]; }
const LaurentPoly& ModelSpec::counit(Generator g) const { return counit_[gen_index(g)]; }

LaurentPoly ModelSpec::q() const { return LaurentPoly::variable(reg_, "q"); }

LaurentPoly sigma_scale(Generator g, const ColourTag& nu) {
    switch (g) {
        case Generator::E: return nu.poly();
        case Generator::F: return nu.inverse().poly();
        case Generator::K:
        case Generator::Kinv: return LaurentPoly::constant(nu.poly().registry(), 1);
    }
    throw std::invalid_argument("unknown generator");
}

RingMatrix sigma_conjugate(const ColourTag& nu, const RingMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("sigma_conjugate expects a 2x2 matrix");
    const LaurentPoly& c1 = nu.poly();
    const LaurentPoly c1i = nu.inverse().poly();
    RingMatrix out = m;
    out.at(0, 1) *= c1;
    out.at(1, 0) *= c1i;
    return out;
}

RingMatrix colour_conjugate_pair(const ColourTag& lambda, const ColourTag& mu,
                                 const RingMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("colour_conjugate_pair expects a 4x4 matrix");
    // Diagonal conjugator d_{(i,k)} = lambda_i * mu_k with (x_1, x_2) = (x, 1).
    std::array<LaurentPoly, 4> d;
    const LaurentPoly one = LaurentPoly::constant(m.registry(), 1);
    d[0] = lambda.poly() * mu.poly();
    d[1] = lambda.poly();
    d[2] = mu.poly();
    d[3] = one;
    RingMatrix out = m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (!out.at(r, c).is_zero())
                out.at(r, c) = d[r] * out.at(r, c) * d[c].inverse_monomial();
    return out;
}

RingMatrix coloured_r_matrix(const ModelSpec& model, const ColourTag& lambda,
                             const ColourTag& mu) {
    return colour_conjugate_pair(lambda, mu, model.r_matrix());
}

RingMatrix coloured_coproduct(const ModelSpec& model, Generator g, const ColourTag& lambda,
                              const ColourTag& mu, const ColourTag& nu) {
    RingMatrix img = colour_conjugate_pair(lambda, mu, model.coproduct_image(g));
    return img.scaled(sigma_scale(g, nu.inverse()));
}

LaurentPoly coloured_counit(const ModelSpec& model, Generator g, const ColourTag& nu) {
    return model.counit(g) * sigma_scale(g, nu.inverse());
}

RingMatrix coloured_antipode(const ModelSpec& model, Generator g, const ColourTag& mu,
                             const ColourTag& nu) {
    RingMatrix img = sigma_conjugate(mu, model.antipode_image(g));
    return img.scaled(sigma_scale(g, nu.inverse()));
}

}  // namespace chopf
