"""High-precision reference values frozen into the C++ test suites.

Run with `python3 oracles.py`; every value printed here is pasted verbatim
into the corresponding test. Nothing in the library depends on this script.
"""
import mpmath as mp

mp.mp.dps = 40


def show(label, z):
    z = mp.mpc(z)
    print(f"{label}: {mp.nstr(z.real, 20)} {mp.nstr(z.imag, 20)}")


# Gamma on a grid (series/product oracle inside mpmath).
for z in [mp.mpf(1) / 3, mp.mpf(2) / 3, mp.mpc(0.3, 2), mp.mpc(-2.5, 0.7),
          mp.mpc(5.5, -3.2), mp.mpc(0.5, 9), mp.mpf(-3.7), mp.mpc(12.3, 0.1),
          mp.mpc(-7.25, -1.5), mp.mpc(2.0, -8.0), mp.mpf("0.001")]:
    show(f"gamma({mp.nstr(z, 6)})", mp.gamma(z))

# Residue of Gamma at -3 by numeric limit.
h = mp.mpf("1e-20")
show("(z+3)Gamma(z) at -3+h", h * mp.gamma(-3 + h))


def closed(p, q, s):
    return mp.exp(s * 1j * mp.pi * q / (2 * p)) * mp.gamma(q / p) / p


show("closed(3,1,+)", closed(3, 1, 1))
show("closed(0.5,0.25,+)", closed(mp.mpf(0.5), mp.mpf(0.25), 1))
show("closed(2,1+1i,+)", closed(2, mp.mpc(1, 1), 1))
show("closed(7.5,6.75,-)", closed(mp.mpf(7.5), mp.mpf(6.75), -1))


def full_coef(m, k, s):
    a = s * 1j * mp.pi * (k + 1) / (2 * m)
    return (mp.exp(a) + (-1) ** k * mp.exp((-1) ** m * a)) * mp.gamma(mp.mpf(k + 1) / m) / m


show("full_coef(3,0,+)", full_coef(3, 0, 1))
show("full_coef(3,1,+)", full_coef(3, 1, 1))
show("full_coef(2,0,+)", full_coef(2, 0, 1))


# Half-line e^{i s lam x^m} e^{-x^2/2} x^{q-1} by rotating onto the steepest
# descent ray x = t e^{i s pi/(2m)}, where the integrand is non-oscillatory.
def half_line(m, q, lam, s, poly=(1,)):
    w = mp.exp(s * 1j * mp.pi / (2 * m))

    def f(t):
        x = t * w
        P = sum(c * x ** k for k, c in enumerate(poly))
        return mp.exp(-lam * t ** m) * mp.exp(-x * x / 2) * x ** (q - 1) * P * w

    return mp.quad(f, [0, mp.mpf(1) / 4, 1, 4, mp.inf])


for lam in [100, 1000, 10000]:
    v = half_line(3, 1, lam, 1) + half_line(3, 1, lam, -1)
    show(f"full_line m=3 gaussian lam={lam}", v)
for lam in [1000]:
    show(f"half_line p=3 gaussian lam={lam}", half_line(3, 1, lam, 1))
for lam in [10, 100]:
    c = mp.mpf(1) / 2 - 1j * lam
    show(f"half_line p=2 q=3 gaussian lam={lam}", mp.sqrt(mp.pi) / (4 * c ** 1.5))
    show(f"  rotated check", half_line(2, 3, lam, 1))
show("half_line p=2 q=1 lam=10", mp.sqrt(mp.pi / (mp.mpf(1) / 2 - 10j)) / 2)
show("half_line p=2.5 q=1.5 lam=50 (poly 1,0,-0.5)", half_line(mp.mpf(2.5), mp.mpf(1.5), 50, 1, (1, 0, -0.5)))
show("airy 3^(-1/6) Gamma(1/3)", mp.mpf(3) ** (-mp.mpf(1) / 6) * mp.gamma(mp.mpf(1) / 3))

# Quadratic phase with A = diag(1,1): product of 1-D Gaussian integrals.
for lam in [100, 1000]:
    c = mp.mpf(1) / 2 - 1j * lam / 2
    show(f"quad2 A=I gaussian lam={lam}", mp.pi / c)
# A = [[2,1],[1,2]] with e^{-|x|^2/2}: eigenvalues 1, 3.
for lam in [100]:
    v = mp.sqrt(mp.pi / (mp.mpf(1) / 2 - 1j * lam / 2)) * mp.sqrt(mp.pi / (mp.mpf(1) / 2 - 3j * lam / 2))
    show(f"quad2 A=[[2,1],[1,2]] gaussian lam={lam}", v)
