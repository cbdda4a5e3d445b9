#pragma once

#include "qchan/numerics.hpp"

#include <string>
#include <variant>

namespace qchan {

inline constexpr double density_tol = 1e-10;

/// Validated two-qubit state in the basis |00>, |01>, |10>, |11> (first factor
/// is Alice's qubit). Only validate_density and the constructors below can
/// produce one.
class DensityMatrix {
public:
    const ComplexMatrix& mat() const noexcept { return mat_; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return mat_(r, c); }

private:
    explicit DensityMatrix(const ComplexMatrix& m) : mat_(m) {}
    friend DensityMatrix validate_density(const ComplexMatrix& raw);

    ComplexMatrix mat_;
};

/// Validated three-qubit state, basis |000> ... |111>.
class ThreeQubitState {
public:
    const ComplexMatrix& mat() const noexcept { return mat_; }

private:
    explicit ThreeQubitState(const ComplexMatrix& m) : mat_(m) {}
    friend ThreeQubitState validate_three_qubit(const ComplexMatrix& raw);

    ComplexMatrix mat_;
};

/// Checks Hermiticity, unit trace and positivity (in that order) within
/// density_tol. Throws Error with kind NotHermitian, TraceNotOne or NotPSD and
/// the measured residual.
DensityMatrix validate_density(const ComplexMatrix& raw);
ThreeQubitState validate_three_qubit(const ComplexMatrix& raw);

// Family parameters.
struct Werner {
    double fw; // singlet fraction, [0, 1]
};
struct Mems {
    double c; // concurrence, [0, 1]
};
struct WernerDerivative {
    double fw; // (1/2, 1]
    double a;  // [1/2, 1]
};
struct NmemsNew {
    double p; // GHZ-trace weight, [0, 1]
};

using FamilySpec = std::variant<Werner, Mems, WernerDerivative, NmemsNew>;

/// Short tag used on the command line and in JSON: werner | mems | wd | new.
std::string family_tag(const FamilySpec& spec);

/// Throws Error(ParamOutOfRange) naming the parameter and its admissible interval.
void check_family(const FamilySpec& spec);

/// Family density matrix from its explicit entrywise form.
DensityMatrix make_state(const FamilySpec& spec);

/// MEMS diagonal weight h(C).
double mems_h(double c);

ThreeQubitState ghz3();
ThreeQubitState w3();

/// (rho_12)_{ij,kl} = sum_m s_{ijm,klm}
DensityMatrix partial_trace_third(const ThreeQubitState& s);

/// p A + (1 - p) B.
DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b);

} // namespace qchan
