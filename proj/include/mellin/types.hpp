#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mw {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegenerateError : Error { using Error::Error; };
struct SupportEscapeError : Error { using Error::Error; };
struct QuadratureError : Error { using Error::Error; };
struct BoundaryZeroError : Error { using Error::Error; };
struct NonIntegerWindingError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct UncertifiedError : Error { using Error::Error; };

// e^{i pi x}
inline cplx expipi(double x) { return std::polar(1.0, kPi * x); }

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace mw
