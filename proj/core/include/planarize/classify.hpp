#ifndef PLANARIZE_CLASSIFY_HPP
#define PLANARIZE_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "planarize/linalg.hpp"
#include "planarize/ratmap.hpp"

namespace planarize {

/// Phi(x) = mu . Phi'(eta x) up to one scalar.
struct EquivalenceWitness {
    Matrix<QuadExt> eta;  // 3 x 3
    Matrix<QuadExt> mu;   // 4 x 4
};

EquivalenceWitness identity_witness();

/// Components of mu . phi_prime(eta x), coefficients in Q(sqrt(D)).
std::array<QPoly, 4> apply_witness(const RationalMap& phi_prime, const EquivalenceWitness& w);

/// Throws InvalidWitness for singular or misshapen matrices.
bool verify_equivalence(const RationalMap& phi, const RationalMap& phi_prime, const EquivalenceWitness& w);

enum class FieldMode { Rational, Complex };

/// Phi1 only appears in complex mode, where Phi1a and Phi1b merge.
enum class QuadricClass { Phi1, Phi1a, Phi1b, Phi2, Phi3 };

std::string to_string(QuadricClass c);

/// Normal form of a class; Phi1 uses the Phi1a components, Phi3 is Q10.
RationalMap quadric_normal_form(QuadricClass c);

struct QuadricClassification {
    QuadricClass label = QuadricClass::Phi3;
    /// Relates the input to quadric_normal_form(label); absent when the
    /// construction leaves a single quadratic field.
    std::optional<EquivalenceWitness> witness;
    /// Rank of the symmetric matrix of the image quadric (4 smooth, 3 cone).
    int quadric_rank = 0;
};

/// Quadratic maps whose image is a quadric surface that is not a plane.
/// Throws NotAQuadricImageMap otherwise.
QuadricClassification classify_quadric_image(const RationalMap& map, FieldMode mode = FieldMode::Rational,
                                             std::uint64_t seed = 0);

}  // namespace planarize

#endif
