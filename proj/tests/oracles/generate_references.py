#!/usr/bin/env python3
"""Offline high-precision reference generator for the s3gas test suites.

Run once to regenerate the frozen constants embedded in the C++ tests:

    python3 tests/oracles/generate_references.py

Everything is evaluated with mpmath at 50 significant digits, independently
of the C++ implementation: integrals by tanh-sinh quadrature, mode sums by
direct summation, peak locations by root finding on the log-derivative.
Emitted values are printed as C++ constant definitions at double precision.
"""

import mpmath as mp

mp.mp.dps = 50

PI = mp.pi
ZETA2 = mp.zeta(2)
ZETA3 = mp.zeta(3)
ZETA4 = mp.zeta(4)
ZETA5 = mp.zeta(5)
ZETA6 = mp.zeta(6)
VOL = 2 * PI**2  # volume of unit S^3


def bose(x):
    return 1 / mp.expm1(x)


def log_one_minus_exp(x):
    return mp.log(-mp.expm1(-x))


# Dimensionless semi-infinite integrals; a = 1/(RT).
def integral_number(a):
    return mp.quad(lambda x: x * mp.sqrt(x * x + a * a) * bose(x), [0, 1, 10, mp.inf])


def integral_energy(a):
    return mp.quad(lambda x: x * x * mp.sqrt(x * x + a * a) * bose(x), [0, 1, 10, mp.inf])


def integral_free_energy(a):
    return mp.quad(lambda x: x * mp.sqrt(x * x + a * a) * log_one_minus_exp(x), [0, 1, 10, mp.inf])


def continuum_report(R, T):
    a = 1 / (R * T)
    N = 2 * R**3 * T**3 * integral_number(a)
    U = 2 * R**3 * T**4 * integral_energy(a)
    F = 2 * R**3 * T**4 * integral_free_energy(a)
    S = (U - F) / T
    V = VOL * R**3
    return {"N": N, "U": U, "F": F, "S": S, "P": -F / V, "rho_E": U / V}


# Discrete Bose-Einstein sums over the S^3 level spectrum (zero mode excluded).
def exact_report(R, T, nmax=None):
    if nmax is None:
        # terms die like n^2 exp(-n/(RT)); go far past that
        nmax = int(80 * R * T + 400)
    N = mp.mpf(0)
    U = mp.mpf(0)
    F = mp.mpf(0)
    for n in range(2, nmax + 1):
        eps = mp.sqrt(mp.mpf(n) ** 2 - 1) / R
        g = 2 * n * n
        occ = bose(eps / T)
        N += g * occ
        U += g * eps * occ
        F += g * log_one_minus_exp(eps / T)
    F *= T
    S = (U - F) / T
    V = VOL * R**3
    return {"N": N, "U": U, "F": F, "S": S, "P": -F / V, "rho_E": U / V}


def wien_peak(a):
    # stationary point of x^2 sqrt(x^2+a^2)/(e^x-1):
    #   2/x + x/(x^2+a^2) = 1/(1-exp(-x))
    f = lambda x: 2 / x + x / (x * x + a * a) - 1 / (-mp.expm1(-x))
    return mp.findroot(f, mp.mpf("2.5"))


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 17)};")


def main():
    print("// ---- zeta constants ----")
    emit("kZeta2", ZETA2)
    emit("kZeta3", ZETA3)
    emit("kZeta4", ZETA4)
    emit("kZeta5", ZETA5)
    emit("kZeta6", ZETA6)

    print("// ---- Bose integrals Gamma(s+1) zeta(s+1), s = 1..5 ----")
    for s in range(1, 6):
        emit(f"kBoseIntegral{s}", mp.gamma(s + 1) * mp.zeta(s + 1))

    print("// ---- dimensionless integrals at a = 1 ----")
    emit("kIntegralNumberA1", integral_number(1))
    emit("kIntegralEnergyA1", integral_energy(1))
    emit("kIntegralFreeEnergyA1", integral_free_energy(1))

    print("// ---- continuum report at R = 1, T = 1 ----")
    rep = continuum_report(1, 1)
    for key, val in rep.items():
        emit(f"kQuad11{key}", val)

    print("// ---- exact mode-sum report at R = 1, T = 1 ----")
    erep = exact_report(1, 1)
    for key, val in erep.items():
        emit(f"kExact11{key}", val)

    print("// ---- spectral density point values ----")
    emit("kSpectralX1A1", mp.sqrt(2) / (mp.e - 1))
    emit("kSpectralX1A0", 1 / (mp.e - 1))

    print("// ---- mode occupancy: R=1, T=1, n=2 ----")
    emit("kOccupancyN2", 8 / mp.expm1(mp.sqrt(3)))

    print("// ---- Wien peaks of the modified distribution ----")
    for a_str in ["0", "0.5", "1", "2"]:
        a = mp.mpf(a_str)
        tag = a_str.replace(".", "p")
        emit(f"kWienPeakA{tag}", wien_peak(a))

    print("// ---- equation-of-state correction coefficient zeta2/(pi sqrt(2 zeta4)) ----")
    emit("kEosCoefficient", ZETA2 / (PI * mp.sqrt(2 * ZETA4)))
    emit("kEosDensityAtP1R1", 3 - ZETA2 / (PI * mp.sqrt(2 * ZETA4)))

    print("// ---- closed-form asymptotics at R = 1, T = 1 ----")
    emit("kAsym11U", 12 * ZETA4 + ZETA2)
    emit("kAsym11F", -(4 * ZETA4 + ZETA2))
    emit("kAsym11P", (4 * ZETA4 + ZETA2) / VOL)
    emit("kAsym11S", 16 * ZETA4 + 2 * ZETA2)
    emit("kAsym11rho", (12 * ZETA4 + ZETA2) / VOL)

    print("// ---- cross-method diagnostics (documentation, not asserted directly) ----")
    for rt in [5, 10, 20]:
        q = continuum_report(1, mp.mpf(rt))
        e = exact_report(1, mp.mpf(rt))
        dev = abs(e["U"] - q["U"]) / q["U"]
        print(f"//   RT={rt}: |U_exact - U_quad|/U_quad = {mp.nstr(dev, 6)}")
    for rt in [5, 10, 20, 50, 100]:
        q = continuum_report(1, mp.mpf(rt))
        ua = 12 * ZETA4 * mp.mpf(rt) ** 4 + ZETA2 * mp.mpf(rt) ** 2
        dev = abs(ua - q["U"]) / q["U"]
        print(f"//   RT={rt}: |U_asym - U_quad|/U_quad = {mp.nstr(dev, 6)}")
    q100 = continuum_report(1, 100)
    ratio_u = (q100["U"] - 12 * ZETA4 * mp.mpf(100) ** 4) / (ZETA2 * mp.mpf(100) ** 2)
    ratio_s = (q100["S"] - 16 * ZETA4 * mp.mpf(100) ** 3) / (2 * ZETA2 * mp.mpf(100))
    print(f"//   RT=100: subleading-coefficient ratio U = {mp.nstr(ratio_u, 12)}")
    print(f"//   RT=100: subleading-coefficient ratio S = {mp.nstr(ratio_s, 12)}")


if __name__ == "__main__":
    main()
