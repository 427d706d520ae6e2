#pragma once

// The concrete coloured Hopf instance: U_q(sl2) in its 2-dimensional defining
// representation, a multiplicative colour group of rescaling automorphisms
// sigma^nu (E -> nu E, F -> nu^{-1} F, K -> K), and the induced coloured
// structure maps and coloured R-matrix.
//
// Conventions (all powers of q integral):
//   D(E) = e12, D(F) = e21, D(K) = diag(q, q^{-1})
//   Delta(E) = E⊗K + 1⊗E,  Delta(F) = F⊗1 + K^{-1}⊗F,  Delta(K) = K⊗K
//   S(E) = -E K^{-1},  S(F) = -K F,  S(K) = K^{-1}
//   eps(E) = eps(F) = 0,  eps(K) = 1
//   R = q(e11⊗e11 + e22⊗e22) + e11⊗e22 + e22⊗e11 + (q - q^{-1}) e12⊗e21
// This (Delta, R) pair satisfies R·Delta(x) = flip(Delta(x))·R exactly; the
// intertwining check in the test suite is the arbiter for the pairing.

#include <array>
#include <string>

#include "chopf/freealg.hpp"
#include "chopf/tensor.hpp"

namespace chopf {

enum class Generator { E, F, K, Kinv };

constexpr std::array<Generator, 4> all_generators{Generator::E, Generator::F,
                                                  Generator::K, Generator::Kinv};

std::string generator_name(Generator g);

class ModelSpec {
public:
    // `registry` must contain the deformation variable "q"; colour variables
    // used by coloured operations must be present as well.
    static ModelSpec slq2_colour(RegistryPtr registry, bool corrupt_r = false);

    const std::string& name() const { return name_; }
    const RegistryPtr& registry() const { return reg_; }

    // D(g), 2x2.
    const RingMatrix& rep(Generator g) const;
    // (D⊗D)(Delta(g)), 4x4.
    const RingMatrix& coproduct_image(Generator g) const;
    // D(S(g)), 2x2.
    const RingMatrix& antipode_image(Generator g) const;
    // eps(g).
    const LaurentPoly& counit(Generator g) const;
    // Uncoloured R in the defining representation, 4x4.
    const RingMatrix& r_matrix() const { return r_; }

    LaurentPoly q() const;

private:
    ModelSpec() = default;
    std::string name_;
    RegistryPtr reg_;
    std::array<RingMatrix, 4> rep_, coproduct_, antipode_;
    std::array<LaurentPoly, 4> counit_;
    RingMatrix r_;
};

// Scalar s with sigma^nu(g) = s * g; E -> nu, F -> nu^{-1}, K^{±1} -> 1.
LaurentPoly sigma_scale(Generator g, const ColourTag& nu);

// C_nu · m · C_nu^{-1} with C_nu = diag(nu, 1), entrywise.
RingMatrix sigma_conjugate(const ColourTag& nu, const RingMatrix& m);

// Conjugation of a 4x4 matrix by C_lambda ⊗ C_mu, entrywise.
RingMatrix colour_conjugate_pair(const ColourTag& lambda, const ColourTag& mu,
                                 const RingMatrix& m);

// R^{lambda,mu} = (sigma^lambda ⊗ sigma^mu)(R); only the ratio lambda/mu
// enters. For the model this is
//   [[q,0,0,0],[0,1,(q-q^{-1})·lambda/mu,0],[0,0,1,0],[0,0,0,q]].
RingMatrix coloured_r_matrix(const ModelSpec& model, const ColourTag& lambda,
                             const ColourTag& mu);

// (D⊗D) image of Delta^{lambda,mu}_{q,nu}(g) = (sigma^l ⊗ sigma^m)(Delta(sigma_nu g)).
RingMatrix coloured_coproduct(const ModelSpec& model, Generator g, const ColourTag& lambda,
                              const ColourTag& mu, const ColourTag& nu);

// eps_{q,nu}(g) = eps(sigma_nu(g)).
LaurentPoly coloured_counit(const ModelSpec& model, Generator g, const ColourTag& nu);

// Representation image of S^{mu}_{q,nu}(g) = sigma^mu(S(sigma_nu(g))).
RingMatrix coloured_antipode(const ModelSpec& model, Generator g, const ColourTag& mu,
                             const ColourTag& nu);

// Colour group element; the group law is multiplicative on tags.
struct ColourGroupElement {
    ColourTag nu;
    ColourGroupElement compose(const ColourGroupElement& rhs) const { return {nu * rhs.nu}; }
    ColourGroupElement inverse() const { return {nu.inverse()}; }
    bool operator==(const ColourGroupElement& rhs) const { return nu == rhs.nu; }
};

}  // namespace chopf
