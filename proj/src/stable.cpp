#include "alpharoot/stable.hpp"

namespace alpharoot {

double sample_stable_increment(RngStream& rng, double alpha, double dt) {
    if (!(dt > 0.0)) throw validation_error("sample_stable_increment: dt must be > 0");
    return StableScheme(alpha).draw_increment(rng, dt);
}

}  // namespace alpharoot
