"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Pure Python (fractions + mpmath); shares no code with the library.
"""
from fractions import Fraction as F
from itertools import combinations, product
import mpmath as mp

mp.mp.dps = 40

P1 = ((F(1), F(0)), (F(1), F(1)))
P1T = ((F(1), F(1)), (F(0), F(1)))


def mul(x, y):
    return ((x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
            (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]))


def prod(pair, w):
    m = ((F(1), F(0)), (F(0), F(1)))
    for ch in w:
        m = mul(m, pair[int(ch)])
    return m


def tr(m):
    return m[0][0] + m[1][1]


def det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def rho(m):
    t, d = mp.mpf(tr(m).numerator) / tr(m).denominator, mp.mpf(det(m).numerator) / det(m).denominator
    disc = t * t - 4 * d
    if disc >= 0:
        return (abs(t) + mp.sqrt(disc)) / 2
    return mp.sqrt(d)


def mech(p, q, n):
    return "".join(str((k * p) // q - ((k - 1) * p) // q) for k in range(1, n + 1))


def chi(pair, p, q):
    return mp.log(rho(prod(pair, mech(p, q, q)))) / q


def balanced(w):
    n = len(w)
    for L in range(1, n + 1):
        c = [w[i:i + L].count("1") for i in range(n - L + 1)]
        if max(c) - min(c) > 1:
            return False
    return True


def cyc_bal(x):
    return balanced((x * 4)[: 3 * len(x)])


pair = (P1, P1T)
print("prod 01", prod(pair, "01"), "prod 0011", prod(pair, "0011"))
print("chi 1/2", mp.nstr(chi(pair, 1, 2), 20))
print("chi 1/3", mp.nstr(chi(pair, 1, 3), 20))
print("chi 2/5", mp.nstr(chi(pair, 2, 5), 20))
print("chord 1/3,1/2", mp.nstr(F(3, 5) * 0 + mp.mpf(3) / 5 * chi(pair, 1, 3) + mp.mpf(2) / 5 * chi(pair, 1, 2), 20))
for w in ["011001", "101010", "010101"]:
    print("tr", w, tr(prod(pair, w)))
for l, n in [(2, 4), (2, 5)]:
    words = ["".join("1" if i in s else "0" for i in range(n)) for s in combinations(range(n), l)]
    trs = {w: tr(prod(pair, w)) for w in words}
    mx = max(trs.values())
    print((l, n), sorted(w for w in words if trs[w] == mx), mx, trs)
# xi-hat for (0011)^inf over all z with |z| <= 6
w0, w1, w2 = "011001", "101010", "010101"
best = None
for L in range(0, 7):
    for z in product("01", repeat=L):
        z = "".join(z)
        r = max(tr(prod(pair, w1 + z)), tr(prod(pair, w2 + z))) / tr(prod(pair, w0 + z))
        best = r if best is None else min(best, r)
print("xi_hat", best, float(best))


def dev(w, a):
    best = F(0)
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            best = max(best, abs(w[i:j].count("1") - (j - i) * a))
    return best


print("dev", dev("0101", F(1, 2)), dev("00101", F(2, 5)), dev("11", F(0)))
# JSR for (P1,P1T), depth 8, exhaustive
best = (0, None)
for L in range(1, 9):
    for w in product("01", repeat=L):
        w = "".join(w)
        v = rho(prod(pair, w)) ** (mp.mpf(1) / L)
        if v > best[0] + mp.mpf(10) ** -30:
            best = (v, w)
print("jsr lower", mp.nstr(best[0], 20), best[1])
up = 0
for w in product("01", repeat=8):
    m = prod(pair, "".join(w))
    up = max(up, mp.sqrt(sum(mp.mpf(int(x)) ** 2 for r in m for x in r)) ** (mp.mpf(1) / 8))
print("jsr upper hs", mp.nstr(up, 20), "2207^(1/16)", mp.nstr(mp.mpf(2207) ** (mp.mpf(1) / 16), 20))
print("scalar upper", mp.nstr(3 * mp.mpf(2) ** (mp.mpf(1) / 6), 20))

# Amplification for (0011)^inf: w0 at offset 1, stride 8 (two periods, since |w0| > 4).
s = "0011" * 64
off, stride = 1, 8
X, Xt = prod(pair, "01"), prod(pair, "10")
for n in range(1, 6):
    xs = [s[off + k * stride + 6: off + (k + 1) * stride] for k in range(n)]
    t = "".join(w0 + x for x in xs) + w0
    assert t == s[off: off + n * stride + 6]
    chosen = []
    for k in range(n):
        u = "".join(c + x for c, x in zip(chosen, xs[:k]))
        v = "".join(x + w0 for x in xs[k:])[len(xs[k]):] if False else "".join(xs[j] + w0 for j in range(k, n))
        z = v + u
        Z = prod(pair, z)
        chosen.append(w1 if tr(mul(Xt, Z)) >= tr(mul(X, Z)) else w2)
    tp = "".join(c + x for c, x in zip(chosen, xs)) + w0
    r = tr(prod(pair, tp)) / tr(prod(pair, t))
    print("amplify", n, tp, r, float(r), float(r) >= 1.2 ** n, float(r) ** (1 / n))
