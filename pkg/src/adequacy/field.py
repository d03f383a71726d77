"""Exact arithmetic in GF(p) and GF(p^k), plus univariate polynomial factorization.

Extension fields are presented by a monic irreducible modulus over GF(p);
elements are coefficient vectors in the polynomial basis.  Everything is
deterministic: the modulus of ``make_field`` is the least monic irreducible
in a fixed scan order, and the equal-degree factorization stage draws from a
seeded pseudorandom sequence.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Iterator, Sequence

from .errors import (
    FieldCapExceeded,
    IncompatibleDegrees,
    NotPrime,
    ZeroPolynomial,
)

DEFAULT_FIELD_CAP = 1 << 20

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Trial division plus Miller-Rabin with fixed bases (exact below 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; only used on desk-scale integers."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FieldCtx:
    """A concrete finite field GF(p^k), presented by a monic irreducible modulus.

    Instances are immutable; two contexts are interoperable only when equal
    (same prime, degree and modulus).
    """

    __slots__ = ("p", "k", "modulus", "q", "reduction_rows", "_hash")

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        modulus = tuple(int(c) % p for c in modulus[:-1]) + (1,)
        if len(modulus) != k + 1:
            raise ValueError("modulus degree must equal the extension degree")
        self.p = int(p)
        self.k = int(k)
        self.modulus = modulus
        self.q = p**k
        # reduction_rows[j] = coefficient vector of x^(k+j) mod modulus, j = 0..k-2
        rows = []
        if k > 1:
            cur = [(-c) % p for c in modulus[:-1]]  # x^k mod modulus
            rows.append(tuple(cur))
            for _ in range(k - 2):
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(c - top * m) % p for c, m in zip(cur, modulus[:-1])]
                rows.append(tuple(cur))
        self.reduction_rows = tuple(rows)
        self._hash = hash((self.p, self.k, self.modulus))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    # -- element constructors ------------------------------------------------

    def zero(self) -> "Fq":
        return Fq(self, (0,) * self.k)

    def one(self) -> "Fq":
        return Fq(self, (1,) + (0,) * (self.k - 1))

    def elem(self, value: "int | Sequence[int] | Fq") -> "Fq":
        """Coerce an integer (a prime-subfield constant) or coefficient vector."""
        if isinstance(value, Fq):
            if value.ctx != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return Fq(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return Fq(self, coeffs)

    def generator(self) -> "Fq":
        """The class of x, i.e. the polynomial-basis generator (k >= 2)."""
        if self.k == 1:
            raise ValueError("prime field has no polynomial-basis generator")
        return Fq(self, (0, 1) + (0,) * (self.k - 2))

    def elements(self) -> Iterator["Fq"]:
        """All field elements in ascending base-p order of coefficient vectors."""
        for idx in range(self.q):
            coeffs = []
            v = idx
            for _ in range(self.k):
                coeffs.append(v % self.p)
                v //= self.p
            yield Fq(self, tuple(coeffs))

    def _reduce(self, conv: list[int]) -> tuple[int, ...]:
        """Reduce a raw convolution (length <= 2k-1) to canonical coefficients."""
        p, k = self.p, self.k
        out = list(conv[:k]) + [0] * (k - len(conv))
        for j in range(len(conv) - 1, k - 1, -1):
            c = conv[j]
            if c:
                row = self.reduction_rows[j - k]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(c % p for c in out)

    def descriptor(self) -> dict:
        return {"prime": self.p, "degree": self.k, "modulus": list(self.modulus)}


class Fq:
    """An element of a fixed FieldCtx, stored as k residues in the polynomial basis."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def __repr__(self) -> str:
        if self.ctx.k == 1:
            return str(self.coeffs[0])
        return f"Fq{list(self.coeffs)}"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Fq)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "Fq") -> "Fq":
        p = self.ctx.p
        return Fq(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Fq") -> "Fq":
        p = self.ctx.p
        return Fq(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Fq":
        p = self.ctx.p
        return Fq(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "Fq") -> "Fq":
        ctx = self.ctx
        k = ctx.k
        if k == 1:
            return Fq(ctx, ((self.coeffs[0] * other.coeffs[0]) % ctx.p,))
        conv = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    conv[i + j] += a * b
        return Fq(ctx, ctx._reduce(conv))

    def inverse(self) -> "Fq":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        ctx = self.ctx
        if ctx.k == 1:
            return Fq(ctx, (pow(self.coeffs[0], -1, ctx.p),))
        return self ** (ctx.q - 2)

    def __truediv__(self, other: "Fq") -> "Fq":
        return self * other.inverse()

    def __pow__(self, e: int) -> "Fq":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def multiplicative_order(self) -> int:
        """Order in the unit group, by factored descent of q - 1."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.ctx.q - 1
        for prime in factorize(n):
            while n % prime == 0 and (self ** (n // prime)) == self.ctx.one():
                n //= prime
        return n


class FqPoly:
    """Dense univariate polynomial over a FieldCtx, low-to-high coefficients.

    Canonical form: no trailing zeros; the zero polynomial has no coefficients.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Sequence[Fq]):
        n = len(coeffs)
        while n > 0 and coeffs[n - 1].is_zero():
            n -= 1
        self.ctx = ctx
        self.coeffs = tuple(coeffs[:n])

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints: Iterable[int]) -> "FqPoly":
        return cls(ctx, [ctx.elem(c) for c in ints])

    @classmethod
    def constant(cls, value: Fq) -> "FqPoly":
        return cls(value.ctx, [value])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "FqPoly":
        return cls(ctx, [ctx.zero(), ctx.one()])

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "FqPoly":
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx: FieldCtx) -> "FqPoly":
        return cls(ctx, [ctx.one()])

    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.ctx.one()

    def leading(self) -> Fq:
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading() == self.ctx.one()

    def monic(self) -> "FqPoly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lc = self.leading()
        if lc == self.ctx.one():
            return self
        inv = lc.inverse()
        return FqPoly(self.ctx, [c * inv for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FqPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __add__(self, other: "FqPoly") -> "FqPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return FqPoly(self.ctx, out)

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        out = list(self.coeffs) + [self.ctx.zero()] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return FqPoly(self.ctx, out)

    def __neg__(self) -> "FqPoly":
        return FqPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        if self.is_zero() or other.is_zero():
            return FqPoly.zero(self.ctx)
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return FqPoly(self.ctx, out)

    def scale(self, s: Fq) -> "FqPoly":
        return FqPoly(self.ctx, [c * s for c in self.coeffs])

    def shift(self, n: int) -> "FqPoly":
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return FqPoly(self.ctx, [self.ctx.zero()] * n + list(self.coeffs))

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        if other.is_zero():
            raise ZeroPolynomial("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return FqPoly.zero(self.ctx), self
        inv_lc = other.leading().inverse()
        quot = [self.ctx.zero()] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree()] * inv_lc
            quot[i] = c
            if not c.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return FqPoly(self.ctx, quot), FqPoly(self.ctx, rem)

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def gcd(self, other: "FqPoly") -> "FqPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def ext_gcd(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly", "FqPoly"]:
        """Return (g, u, v) with g monic, u*self + v*other = g."""
        ctx = self.ctx
        r0, r1 = self, other
        s0, s1 = FqPoly.one(ctx), FqPoly.zero(ctx)
        t0, t1 = FqPoly.zero(ctx), FqPoly.one(ctx)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = r0.leading().inverse()
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def pow_mod(self, e: int, mod: "FqPoly") -> "FqPoly":
        result = FqPoly.one(self.ctx) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def derivative(self) -> "FqPoly":
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * ctx.elem(i))
        return FqPoly(ctx, out)

    def eval(self, x: Fq) -> Fq:
        acc = self.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = repr(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*x" if cs != "1" else "x")
            else:
                terms.append(f"{cs}*x^{i}" if cs != "1" else f"x^{i}")
        return " + ".join(reversed(terms))


# -- field construction -------------------------------------------------------


def _is_irreducible(f: FqPoly) -> bool:
    """Irreducibility over the coefficient field, by gcds with x^(q^i) - x."""
    n = f.degree()
    if n <= 0:
        return False
    if n == 1:
        return True
    q = f.ctx.q
    x = FqPoly.x(f.ctx)
    if not x.pow_mod(q**n, f) == x % f:
        return False
    for r in factorize(n):
        h = x.pow_mod(q ** (n // r), f) - (x % f)
        if not f.gcd(h).is_one():
            return False
    return True


def make_field(p: int, k: int, cap: int = DEFAULT_FIELD_CAP) -> FieldCtx:
    """GF(p^k) with the deterministic least monic irreducible modulus.

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are scanned in ascending order
    of the base-p value sum(c_i p^i) of the coefficient vector.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > cap:
        raise FieldCapExceeded(f"{p}^{k} exceeds the field cap {cap}")
    if k == 1:
        return FieldCtx(p, 1, (0, 1))
    prime_ctx = FieldCtx(p, 1, (0, 1))
    one = prime_ctx.one()
    for idx in range(p**k):
        coeffs = []
        v = idx
        for _ in range(k):
            coeffs.append(v % p)
            v //= p
        cand = FqPoly(prime_ctx, [prime_ctx.elem(c) for c in coeffs] + [one])
        if _is_irreducible(cand):
            return FieldCtx(p, k, tuple(coeffs) + (1,))
    raise AssertionError("no irreducible polynomial found (unreachable)")


_embedding_cache: dict[tuple, tuple[tuple[int, ...], ...]] = {}


def _embedding_matrix(source: FieldCtx, target: FieldCtx) -> tuple[tuple[int, ...], ...]:
    """Rows i < k give the target coefficients of (image of source generator)^i."""
    key = (source.p, source.k, source.modulus, target.k, target.modulus)
    cached = _embedding_cache.get(key)
    if cached is not None:
        return cached
    # image of the source generator = least root of the source modulus in target
    mod_t = FqPoly.from_ints(target, source.modulus)
    roots = sorted(r.coeffs for r in _roots_of_split_poly(mod_t))
    root = Fq(target, roots[0])
    rows = []
    acc = target.one()
    for _ in range(source.k):
        rows.append(acc.coeffs)
        acc = acc * root
    result = tuple(rows)
    _embedding_cache[key] = result
    return result


def embed(x: Fq, target: FieldCtx) -> Fq:
    """The deterministic field embedding GF(p^k) -> GF(p^m), k | m, fixing GF(p)."""
    source = x.ctx
    if source == target:
        return x
    if source.p != target.p:
        raise IncompatibleDegrees("fields have different characteristics")
    if target.k % source.k != 0:
        raise IncompatibleDegrees(
            f"GF({source.p}^{source.k}) does not embed into GF({target.p}^{target.k})"
        )
    if source.k == 1:
        return target.elem(x.coeffs[0])
    rows = _embedding_matrix(source, target)
    p = target.p
    out = [0] * target.k
    for c, row in zip(x.coeffs, rows):
        if c:
            for i, r in enumerate(row):
                out[i] = (out[i] + c * r) % p
    return Fq(target, tuple(out))


def embed_poly(f: FqPoly, target: FieldCtx) -> FqPoly:
    return FqPoly(target, [embed(c, target) for c in f.coeffs])


# -- factorization ------------------------------------------------------------


def _pth_root(f: FqPoly) -> FqPoly:
    """For f(x) = g(x^p), return the poly v with v^p = f (coefficient-wise inverse Frobenius)."""
    ctx = f.ctx
    p = ctx.p
    inv_frob_exp = p ** (ctx.k - 1)
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(f.coeffs[i] ** inv_frob_exp)
    return FqPoly(ctx, out)


def _squarefree_decomposition(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """f monic -> [(g, m)] with f = prod g^m and each g monic squarefree."""
    ctx = f.ctx
    p = ctx.p
    acc: dict[FqPoly, int] = {}

    def rec(g: FqPoly, mult: int) -> None:
        if g.degree() <= 0:
            return
        dg = g.derivative()
        if dg.is_zero():
            rec(_pth_root(g), mult * p)
            return
        c = g.gcd(dg)
        w = g // c
        i = 1
        while w.degree() > 0:
            y = w.gcd(c)
            z = w // y
            if z.degree() > 0:
                acc[z] = acc.get(z, 0) + i * mult
            w = y
            c = c // y
            i += 1
        if c.degree() > 0:
            rec(_pth_root(c), mult * p)

    rec(f.monic(), 1)
    return list(acc.items())


def _distinct_degree(g: FqPoly) -> list[tuple[FqPoly, int]]:
    """g monic squarefree -> [(product of irreducible factors of degree d, d)]."""
    ctx = g.ctx
    q = ctx.q
    out = []
    x = FqPoly.x(ctx)
    h = x % g
    d = 0
    while g.degree() > 0 and g.degree() > 2 * d:
        d += 1
        h = h.pow_mod(q, g)
        gd = g.gcd(h - (x % g))
        if gd.degree() > 0:
            out.append((gd, d))
            g = g // gd
            h = h % g
    if g.degree() > 0:
        out.append((g, g.degree()))
    return out


def _equal_degree_split(u: FqPoly, d: int, rng: random.Random) -> list[FqPoly]:
    """Split a monic product of distinct degree-d irreducibles into its factors."""
    ctx = u.ctx
    if u.degree() == d:
        return [u]
    q = ctx.q
    while True:
        a = FqPoly(ctx, [ctx.elem([rng.randrange(ctx.p) for _ in range(ctx.k)])
                         for _ in range(u.degree())])
        if a.degree() < 1:
            continue
        g = u.gcd(a)
        if 0 < g.degree() < u.degree():
            break
        if ctx.p == 2:
            # additive trace to GF(2): a + a^2 + a^4 + ... with d*k squarings
            t = a % u
            acc = a % u
            for _ in range(d * ctx.k - 1):
                acc = acc.pow_mod(2, u)
                t = t + acc
            g = u.gcd(t)
        else:
            b = a.pow_mod((q**d - 1) // 2, u)
            g = u.gcd(b - FqPoly.one(ctx))
        if 0 < g.degree() < u.degree():
            break
    return _equal_degree_split(g, d, rng) + _equal_degree_split(u // g, d, rng)


def factor_poly(f: FqPoly, seed: int = 0) -> list[tuple[FqPoly, int]]:
    """Full factorization into monic irreducibles with multiplicities.

    The result is sorted by (degree, coefficient vectors) so runs are
    reproducible; the product of factor^multiplicity equals f up to the
    leading unit.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree() == 0:
        return []
    rng = random.Random(seed)
    out: dict[FqPoly, int] = {}
    for sf, mult in _squarefree_decomposition(f.monic()):
        for prod, d in _distinct_degree(sf):
            for irr in _equal_degree_split(prod, d, rng):
                out[irr] = out.get(irr, 0) + mult
    return sorted(out.items(), key=lambda fm: (fm[0].degree(), [c.coeffs for c in fm[0].coeffs]))


def _roots_of_split_poly(f: FqPoly, seed: int = 0) -> list[Fq]:
    """Roots of a squarefree poly known to split over its field; unordered."""
    roots = []
    for g, _ in factor_poly(f, seed=seed):
        if g.degree() != 1:
            raise ValueError("polynomial does not split over its field")
        roots.append(-g.coeffs[0])
    return roots


def splitting_field_roots(
    f: FqPoly, cap: int = DEFAULT_FIELD_CAP, seed: int = 0
) -> tuple[FieldCtx, list[tuple[Fq, int]]]:
    """Smallest extension containing all roots of f, with the roots.

    Returns (target field, [(root, multiplicity)]); the sum of multiplicities
    is deg f and the roots are sorted by coefficient vector.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no splitting field")
    ctx = f.ctx
    factors = factor_poly(f, seed=seed)
    if not factors:
        return ctx, []
    ext = math.lcm(*[g.degree() for g, _ in factors])
    if ext == 1:
        target = ctx
    else:
        m = ctx.k * ext
        if ctx.p**m > cap:
            raise FieldCapExceeded(
                f"splitting field GF({ctx.p}^{m}) exceeds the cap {cap}"
            )
        target = make_field(ctx.p, m, cap=cap)
    out = []
    for g, mult in factors:
        gt = embed_poly(g, target)
        for root in _roots_of_split_poly(gt, seed=seed):
            out.append((root, mult))
    out.sort(key=lambda rm: rm[0].coeffs)
    if sum(m for _, m in out) != f.degree():
        raise AssertionError("root multiplicities do not sum to the degree")
    return target, out


def parse_field_descriptor(desc: dict, cap: int = DEFAULT_FIELD_CAP) -> FieldCtx:
    """Build a FieldCtx from {"prime": p, "degree": k, "modulus": [...]}.

    The modulus may be omitted, in which case the deterministic choice of
    make_field applies.
    """
    p = int(desc["prime"])
    k = int(desc.get("degree", 1))
    if "modulus" not in desc or desc["modulus"] is None:
        return make_field(p, k, cap=cap)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p**k > cap:
        raise FieldCapExceeded(f"{p}^{k} exceeds the field cap {cap}")
    modulus = [int(c) for c in desc["modulus"]]
    if len(modulus) != k + 1 or modulus[-1] % p != 1:
        raise ValueError("modulus must be monic of degree equal to the extension degree")
    if k > 1:
        prime_ctx = FieldCtx(p, 1, (0, 1))
        if not _is_irreducible(FqPoly.from_ints(prime_ctx, modulus)):
            raise ValueError("modulus is not irreducible over the prime field")
    return FieldCtx(p, k, tuple(modulus))
