#include <ptre/system.hpp>

#include <cmath>

#include <ptre/error.hpp>

namespace ptre {

void SystemParams::validate() const
{
    if (!std::isfinite(epsilon1) || !std::isfinite(epsilon2))
        throw DomainError("SystemParams: site energies must be finite");
    if (!(J >= 0.0) || !std::isfinite(J))
        throw DomainError("SystemParams: J must be finite and >= 0");
}

} // namespace ptre
