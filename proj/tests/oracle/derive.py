"""Independent reference computations used to freeze expected values in the
C++ tests. Pure Python, written directly from the defining formulas, sharing no
code with the library. Run: python3 tests/oracle/derive.py"""

from fractions import Fraction
from itertools import product


class Ex52:
    """Two vertices v, w; e: v <- {v,w}, f: w <- {v,w}; Z2 swaps v/w and e/f."""
    V = ("v", "w")
    E = ("e", "f")
    rng = {"e": "v", "f": "w"}
    src = {"e": frozenset("vw"), "f": frozenset("vw")}
    full = frozenset("vw")

    def act_v(self, g, x):
        return x if g == 0 else {"v": "w", "w": "v"}[x]

    def act_e(self, g, x):
        return x if g == 0 else {"e": "f", "f": "e"}[x]

    def act_set(self, g, a):
        return frozenset(self.act_v(g, x) for x in a)

    def act_path(self, g, p):
        return tuple(self.act_e(g, x) for x in p)

    def phi(self, g, p):
        return g  # trivial cocycle

    def mul_g(self, a, b):
        return (a + b) % 2

    def inv_g(self, a):
        return a

    def s_of(self, p):
        return self.src[p[-1]] if p else self.full

    def r_of(self, p):
        return frozenset([self.rng[p[0]]]) if p else self.full


class Ex53:
    """v0, v1, w; e0 -> v0, e1 -> v1, f -> w, all sources {v0,v1}; Z acts by
    the swap with phi(1,e0)=t0, phi(1,e1)=t1, phi(1,f)=1."""
    full = frozenset(["v0", "v1", "w"])
    rng = {"e0": "v0", "e1": "v1", "f": "w"}
    src = {k: frozenset(["v0", "v1"]) for k in ("e0", "e1", "f")}

    def __init__(self, t0, t1):
        self.t = {"e0": t0, "e1": t1, "f": 1}

    def act_v(self, g, x):
        if x == "w" or g % 2 == 0:
            return x
        return {"v0": "v1", "v1": "v0"}[x]

    def act_e(self, g, x):
        if x == "f" or g % 2 == 0:
            return x
        return {"e0": "e1", "e1": "e0"}[x]

    def phi_edge(self, g, e):
        # phi(n+1, e) = phi(1, n.e) + phi(n, e); phi(-n, e) from phi(0,e)=0
        total = 0
        if g >= 0:
            for k in range(g):
                total += self.t[self.act_e(k, e)]
        else:
            for k in range(g, 0):
                total -= self.t[self.act_e(k, e)]
        return total

    def act_set(self, g, a):
        return frozenset(self.act_v(g, x) for x in a)

    def act_path(self, g, p):
        out = []
        for x in p:
            out.append(self.act_e(g, x))
            g = self.phi_edge(g, x)
        return tuple(out)

    def phi(self, g, p):
        for x in p:
            g = self.phi_edge(g, x)
        return g

    def mul_g(self, a, b):
        return a + b

    def inv_g(self, a):
        return -a

    def s_of(self, p):
        return self.src[p[-1]] if p else self.full

    def r_of(self, p):
        return frozenset([self.rng[p[0]]]) if p else self.full


def normalize(S, alpha, a, g, beta):
    a = a & S.s_of(alpha) & S.act_set(g, S.s_of(beta))
    return (alpha, a, g, beta) if a else None


def mul(S, x, y):
    if x is None or y is None:
        return None
    alpha, A, g, beta = x
    gamma, B, h, delta = y
    if len(gamma) > len(beta) and gamma[: len(beta)] == beta:
        eps = gamma[len(beta):]
        if S.act_set(g, S.r_of(eps)) <= A:
            k = S.phi(g, eps)
            return normalize(S, alpha + S.act_path(g, eps), S.act_set(g, S.s_of(eps)) & S.act_set(k, B),
                             S.mul_g(k, h), delta)
        return None
    if len(beta) > len(gamma) and beta[: len(gamma)] == gamma:
        eps = beta[len(gamma):]
        if S.r_of(eps) <= B:
            hi = S.inv_g(h)
            k = S.mul_g(g, S.inv_g(S.phi(hi, eps)))
            return normalize(S, alpha, A & S.act_set(S.mul_g(k, hi), S.s_of(beta)), k,
                             delta + S.act_path(hi, eps))
        return None
    if beta == gamma:
        return normalize(S, alpha, A & S.act_set(g, B), S.mul_g(g, h), delta)
    return None


def paths_52(max_len):
    out = [()]
    for n in range(1, max_len + 1):
        out += list(product("ef", repeat=n))
    return out


def fmt(S, x):
    if x is None:
        return "0"
    alpha, a, g, beta = x
    p = lambda q: ".".join(q) if q else "w"
    return "(%s; {%s}; %d; %s)" % (p(alpha), ",".join(sorted(a)), g, p(beta))


def main():
    S = Ex52()
    elems = []
    for alpha in paths_52(2):
        for beta in paths_52(2):
            for g in (0, 1):
                room = S.s_of(alpha) & S.act_set(g, S.s_of(beta))
                for a in (frozenset("v"), frozenset("w"), frozenset("vw")):
                    if a <= room:
                        elems.append((alpha, a, g, beta))
    print("ex52 elements |alpha|,|beta|<=2:", len(elems))

    sample = [
        ((("e",), frozenset("w"), 1, ("f",)), (("f",), frozenset("v"), 0, ())),
        (((), frozenset("vw"), 1, ()), (("e",), frozenset("vw"), 0, ())),
        ((("e",), frozenset("v"), 0, ("e", "f")), (("e",), frozenset("vw"), 1, ("f",))),
        (((), frozenset("w"), 0, ("e",)), (("e",), frozenset("vw"), 0, ())),
        (((), frozenset("vw"), 0, ("e",)), (("f",), frozenset("vw"), 0, ())),
        ((("f",), frozenset("v"), 1, ("e",)), (("e", "e"), frozenset("w"), 1, ("f",))),
        ((("e", "f"), frozenset("w"), 1, ("e",)), ((), frozenset("v"), 0, ())),
    ]
    for x, y in sample:
        print("ex52", fmt(S, x), "*", fmt(S, y), "=", fmt(S, mul(S, x, y)))

    for t0, t1 in ((1, 1), (3, -3), (2, 1)):
        T = Ex53(t0, t1)
        x = (("e0",), frozenset(["v0", "v1"]), 1, ("e1",))
        y = (("e1", "e0"), frozenset(["v1"]), 2, ("e0",))
        print("ex53(%d,%d)" % (t0, t1), fmt(T, x), "*", fmt(T, y), "=", fmt(T, mul(T, x, y)))
        print("ex53(%d,%d)" % (t0, t1), fmt(T, y), "*", fmt(T, x), "=", fmt(T, mul(T, y, x)))

    # G-cycles of Ex 5.2 (g in Z2, |gamma| <= L) in ball order then lex
    for L in (1, 2):
        cyc = [(g, p) for g in (0, 1) for p in paths_52(L)[1:] if S.act_set(g, S.r_of(p)) <= S.s_of(p)]
        cyc.sort(key=lambda c: (c[0], c[1]))
        print("ex52 cycles L=%d:" % L, len(cyc), [(g, ".".join(p)) for g, p in cyc][:8])

    # closed form: phi(n, alpha) against n t^|alpha|
    for t0, t1 in ((1, 1), (3, -3), (2, 2)):
        T = Ex53(t0, t1)
        t = Fraction(t0 + t1, 2)
        bad = 0
        count = 0
        for n in (-6, -4, -2, 2, 4, 6):
            for L in range(1, 7):
                for p in product(("e0", "e1"), repeat=L):
                    for start in ("v0", "v1"):
                        if T.rng[p[0]] != start:
                            continue
                        count += 1
                        if T.phi(n, p) != n * t ** L:
                            bad += 1
        print("phi closed form (%d,%d): cases=%d mismatches=%d sample phi(2,e0 e1 e0)=%d phi(-4,e1 e1)=%d" %
              (t0, t1, count, bad, T.phi(2, ("e0", "e1", "e0")), T.phi(-4, ("e1", "e1"))))

    # canonical lassos of total length <= 3 in Ex 5.2
    def primitive(c):
        n = len(c)
        return not any(n % d == 0 and c == c[:d] * (n // d) for d in range(1, n))

    lassos = set()
    for total in range(1, 4):
        for word in product("ef", repeat=total):
            for k in range(total):
                pre, cyc = word[:k], word[k:]
                if not primitive(cyc):
                    continue
                if pre and pre[-1] == cyc[-1]:
                    continue  # prefix could be shortened by rotating
                lassos.add((pre, cyc))
    print("ex52 canonical lassos total<=3:", len(lassos))

    # eq (4.2) path for Ex 5.3 (2,1) cocycle, G-cycle (1, e0)
    T = Ex53(2, 1)
    g, gam, out = 1, ("e0",), []
    for _ in range(6):
        out += gam
        gam, g = T.act_path(g, gam), T.phi(g, gam)
    print("ex53(2,1) cycle path (1,e0) first letters:", ".".join(out), "g after 6 =", g)


if __name__ == "__main__":
    main()
