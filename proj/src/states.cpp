#include "qchan/states.hpp"

#include "qchan/error.hpp"
#include "qchan/overloaded.hpp"

#include <cmath>
#include <charconv>

namespace qchan {

namespace {

// Shortest text that round-trips.
std::string fmt(double x) {
    char buf[32];
    return std::string(buf, std::to_chars(buf, buf + sizeof buf, x).ptr);
}

void require_in(const char* name, double x, double lo, double hi, bool lo_open = false) {
    const bool ok = (lo_open ? x > lo : x >= lo) && x <= hi;
    if (!ok)
        throw Error(ErrorKind::ParamOutOfRange, std::string(name) + " = " + fmt(x) + " outside " +
                                                    (lo_open ? "(" : "[") + fmt(lo) + ", " + fmt(hi) + "]");
}

void check_state(const ComplexMatrix& raw) {
    const double herm = raw.hermiticity_residual();
    if (herm > density_tol)
        throw Error(ErrorKind::NotHermitian, "max |rho_ij - conj(rho_ji)| = " + fmt(herm), herm);
    const cplx tr = raw.trace();
    const double tr_res = std::abs(tr - 1.0);
    if (tr_res > density_tol) throw Error(ErrorKind::TraceNotOne, "|Tr(rho) - 1| = " + fmt(tr_res), tr_res);
    const double lmin = herm_eigenvalues(raw, density_tol).front();
    if (lmin < -density_tol) throw Error(ErrorKind::NotPSD, "smallest eigenvalue = " + fmt(lmin), lmin);
}

} // namespace

DensityMatrix validate_density(const ComplexMatrix& raw) {
    if (raw.dim() != 4)
        throw Error(ErrorKind::BadDimension, "two-qubit state needs dim 4, got " + std::to_string(raw.dim()));
    check_state(raw);
    return DensityMatrix(raw);
}

ThreeQubitState validate_three_qubit(const ComplexMatrix& raw) {
    if (raw.dim() != 8)
        throw Error(ErrorKind::BadDimension, "three-qubit state needs dim 8, got " + std::to_string(raw.dim()));
    check_state(raw);
    return ThreeQubitState(raw);
}

std::string family_tag(const FamilySpec& spec) {
    return std::visit(overloaded{[](const Werner&) { return std::string("werner"); },
                                 [](const Mems&) { return std::string("mems"); },
                                 [](const WernerDerivative&) { return std::string("wd"); },
                                 [](const NmemsNew&) { return std::string("new"); }},
                      spec);
}

void check_family(const FamilySpec& spec) {
    std::visit(overloaded{[](const Werner& w) { require_in("F_w", w.fw, 0.0, 1.0); },
                          [](const Mems& m) { require_in("C", m.c, 0.0, 1.0); },
                          [](const WernerDerivative& d) {
                              require_in("F_w", d.fw, 0.5, 1.0, true);
                              require_in("a", d.a, 0.5, 1.0);
                          },
                          [](const NmemsNew& n) { require_in("p", n.p, 0.0, 1.0); }},
               spec);
}

double mems_h(double c) { return c >= 2.0 / 3.0 ? c / 2.0 : 1.0 / 3.0; }

DensityMatrix make_state(const FamilySpec& spec) {
    check_family(spec);
    ComplexMatrix m(4);
    std::visit(overloaded{[&](const Werner& w) {
                              const double f = w.fw;
                              m(0, 0) = m(3, 3) = (1.0 - f) / 3.0;
                              m(1, 1) = m(2, 2) = (1.0 + 2.0 * f) / 6.0;
                              m(1, 2) = m(2, 1) = (1.0 - 4.0 * f) / 6.0;
                          },
                          [&](const Mems& s) {
                              const double h = mems_h(s.c);
                              m(0, 0) = m(3, 3) = h;
                              m(1, 1) = 1.0 - 2.0 * h;
                              m(0, 3) = m(3, 0) = s.c / 2.0;
                          },
                          [&](const WernerDerivative& d) {
                              const double mixed = (1.0 - d.fw) / 3.0;
                              const double pure = (4.0 * d.fw - 1.0) / 3.0;
                              m(0, 0) = mixed + pure * d.a;
                              m(1, 1) = m(2, 2) = mixed;
                              m(3, 3) = mixed + pure * (1.0 - d.a);
                              m(0, 3) = m(3, 0) = pure * std::sqrt(d.a * (1.0 - d.a));
                          },
                          [&](const NmemsNew& n) {
                              const double p = n.p;
                              m(0, 0) = (p + 2.0) / 6.0;
                              m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = (1.0 - p) / 3.0;
                              m(3, 3) = p / 2.0;
                          }},
               spec);
    return validate_density(m);
}

ThreeQubitState ghz3() {
    std::vector<cplx> ket(8, 0.0);
    ket[0] = ket[7] = 1.0 / std::sqrt(2.0);
    return validate_three_qubit(ComplexMatrix::outer(ket));
}

ThreeQubitState w3() {
    std::vector<cplx> ket(8, 0.0);
    ket[1] = ket[2] = ket[4] = 1.0 / std::sqrt(3.0);
    return validate_three_qubit(ComplexMatrix::outer(ket));
}

DensityMatrix partial_trace_third(const ThreeQubitState& s) {
    ComplexMatrix r(4);
    for (std::size_t row = 0; row < 4; ++row)
        for (std::size_t col = 0; col < 4; ++col)
            for (std::size_t m = 0; m < 2; ++m) r(row, col) += s.mat()(2 * row + m, 2 * col + m);
    return validate_density(r);
}

DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b) {
    require_in("p", p, 0.0, 1.0);
    return validate_density(a.mat() * p + b.mat() * (1.0 - p));
}

} // namespace qchan
