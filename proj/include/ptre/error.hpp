#ifndef PTRE_ERROR_HPP
#define PTRE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptre {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// The polaron frame or the generator is degenerate.
class SingularError : public Error
{
public:
    using Error::Error;
};

/// A computed quantity violated an internal consistency check.
class ConsistencyError : public Error
{
public:
    using Error::Error;
};

/// Malformed configuration input.
class ConfigError : public Error
{
public:
    using Error::Error;
};

/// Semi-infinite quadrature failed to converge before the horizon cap.
class QuadratureError : public Error
{
public:
    QuadratureError(const std::string& what, double estimate,
                    double error_bound, double horizon, std::size_t component = 0)
        : Error(what), m_estimate(estimate), m_error_bound(error_bound),
          m_horizon(horizon), m_component(component)
    {
    }

    double estimate() const { return m_estimate; }
    double error_bound() const { return m_error_bound; }
    double horizon() const { return m_horizon; }
    /// Index of the integrand component with the largest error bound.
    std::size_t component() const { return m_component; }

private:
    double m_estimate;
    double m_error_bound;
    double m_horizon;
    std::size_t m_component;
};

} // namespace ptre

#endif
