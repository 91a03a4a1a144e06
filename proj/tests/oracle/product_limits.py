"""High-precision reference limits for the product families used by the
acceptance suite. Each family is evaluated per idempotent component with
mpmath and, where a closed form exists, cross-checked against it.

    python3 tests/oracle/product_limits.py
"""
import mpmath as mp

mp.mp.dps = 40

# c = 0.3 + 0.4*i2  ->  P1(c) = 0.3 - 0.4*i1, P2(c) = 0.3 + 0.4*i1
C_COMPONENTS = (mp.mpc(0.3, -0.4), mp.mpc(0.3, 0.4))


def reassemble(p1, p2):
    z1 = (p1 + p2) / 2
    z2 = 1j * (p1 - p2) / 2
    return (z1.real, z1.imag, z2.real, z2.imag)


def inv_square(a):
    # prod (1 + a/n^2) = sinh(pi sqrt a) / (pi sqrt a)
    s = mp.sqrt(a)
    closed = mp.sinh(mp.pi * s) / (mp.pi * s)
    numeric = mp.nprod(lambda n: 1 + a / n**2, [1, mp.inf])
    assert abs(closed - numeric) < mp.mpf(10) ** -20
    return closed


def inv_cube(a):
    # 1 + a/n^3 = prod_k (1 - r_k/n) with r_k^3 = -a and sum r_k = 0,
    # so the product is prod_k 1/Gamma(1 - r_k).
    roots = mp.polyroots([1, 0, 0, a])
    closed = mp.mpf(1)
    for r in roots:
        closed /= mp.gamma(1 - r)
    numeric = mp.nprod(lambda n: 1 + a / n**3, [1, mp.inf])
    assert abs(closed - numeric) < mp.mpf(10) ** -20
    return closed


def geometric(a):
    return mp.nprod(lambda n: 1 + a / mp.mpf(2) ** n, [1, mp.inf])


def inv_square_alternating_exp():
    # prod exp(i2/2^n) = exp(i2): components exp(-i1), exp(i1)
    return (mp.exp(-1j), mp.exp(1j))


if __name__ == "__main__":
    for name, fn in (("inv_square", inv_square), ("inv_cube", inv_cube), ("geometric", geometric)):
        p1, p2 = (fn(a) for a in C_COMPONENTS)
        vals = reassemble(p1, p2)
        print(name, ", ".join(mp.nstr(v, 20) for v in vals))
