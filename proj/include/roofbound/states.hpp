#pragma once

#include "roofbound/peeling.hpp"

#include <string>

namespace roofbound {

/// Named three-qubit benchmark states:
///   ghz_plus, ghz_minus   (|000> +- |111>)/sqrt(2)
///   w                     (|001>+|010>+|100>)/sqrt(3)
///   w_phase(k)            (|001> + w^k |010> + w^{2k} |100>)/sqrt(3), w = e^{2 pi i/3}
///   phi                   six equal middle amplitudes 1/sqrt(6)
///   basis(bits)           computational ket from a bit string
PureState make_pure(const std::string& name);

enum class WLikeBasis { product, ghz };
enum class GhzWernerBasis { product, w_phase };

/// rho = p |phi><phi| + (1-p)/2 (|000><000| + |111><111|), in either the
/// product eigenbasis or the GHZ-recombined one. Same density matrix.
Ensemble w_like_ensemble(double p, WLikeBasis basis);

/// rho = p |GHZ><GHZ| + (1-p)/8 * identity. The product variant keeps the
/// six middle computational kets; the w_phase variant rotates both
/// excitation sectors onto cube-root-phased W states.
Ensemble ghz_werner_ensemble(double p, GhzWernerBasis basis);

} // namespace roofbound
