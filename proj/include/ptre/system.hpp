#ifndef PTRE_SYSTEM_HPP
#define PTRE_SYSTEM_HPP

namespace ptre {

/// Site energies of the two excited states and their coupling J; the
/// ground state sits at zero energy.
struct SystemParams
{
    double epsilon1 = 5.0;
    double epsilon2 = 4.5;
    double J = 1.0;

    double epsilon() const { return epsilon1 - epsilon2; }

    void validate() const;
};

} // namespace ptre

#endif
