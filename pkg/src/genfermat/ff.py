"""Exact arithmetic in finite fields GF(p^m).

A field is described by a FieldSpec holding the characteristic p, the
extension degree m and a monic irreducible modulus of degree m over GF(p),
stored with ascending coefficients (t^2 + t + 1 is ``(1, 1, 1)``).
``make_field`` picks the modulus deterministically: the smallest monic
irreducible polynomial when coefficient sequences are compared leading
term first, constant term last.  For m = 1 the modulus is the placeholder
polynomial t, stored as ``(0, 1)``.

Elements are immutable and carry their owning FieldSpec; internally they
hold the integer code c_0 + c_1*p + ... + c_{m-1}*p^{m-1} of their
power-basis coordinates.  Arithmetic between elements of different fields
raises FieldMismatch; values move into an extension only through the
explicit `embed`.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    BadDegree,
    DivisionByZero,
    FieldMismatch,
    NoSuchRoot,
    NotCoprime,
    NotPrime,
)

# Largest field size for which discrete-log tables are materialised.  All
# desk-scale computations in this package stay far below it.
TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p): tuples of residues, ascending, no trailing zeros
# ---------------------------------------------------------------------------

def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) > df:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - df
            for i in range(df):
                a[shift + i] = (a[shift + i] - lead * f[i]) % p
        a.pop()
    return _ptrim(a)


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppow_frobenius(a, f, p, times):
    """a^(p^times) mod f via repeated p-th powers."""
    for _ in range(times):
        acc = ()
        base = a
        e = p
        acc = (1,)
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        a = acc
    return a


def _pgcd(a, b, p):
    while b:
        # reduce a mod b after making b monic
        inv_lead = pow(b[-1], p - 2, p)
        bm = tuple((c * inv_lead) % p for c in b)
        a, b = b, _pmod(a, bm, p)
    return a


def _is_irreducible(f, p) -> bool:
    """Rabin irreducibility test for a monic f of degree >= 1 over GF(p)."""
    m = len(f) - 1
    if m == 1:
        return True
    x = (0, 1)
    for r in prime_factors(m):
        h = _ppow_frobenius(x, f, p, m // r)
        g = _pgcd(_padd(h, tuple((-c) % p for c in x), p), f, p)
        if len(g) - 1 != 0:
            return False
    h = _ppow_frobenius(x, f, p, m)
    return _pmod(_padd(h, tuple((-c) % p for c in x), p), f, p) == ()


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    # s ascending enumerates the sequences (a_{m-1}, ..., a_1, a_0) in
    # lexicographic order when s is read base p with a_{m-1} most significant
    for s in range(p ** m):
        a = []
        v = s
        for _ in range(m):
            a.append(v % p)
            v //= p
        asc = tuple(a) + (1,)  # v%p peels a_0 first, so `a` is already ascending
        if _is_irreducible(asc, p):
            return asc
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------
# field specification with an integer-coded arithmetic kernel
# ---------------------------------------------------------------------------

class FieldSpec:
    """GF(p^m) with a fixed monic irreducible modulus.

    Do not instantiate directly; use `make_field` so equal parameters share
    one cached spec.  Elements are coded as integers in [0, p^m); all kernel
    methods (`add_codes`, `mul_codes`, ...) operate on codes and back the
    public FieldElement API.
    """

    __slots__ = ("p", "m", "modulus", "q", "_pp", "_exp", "_log", "_gen")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.q = p ** m
        self._pp = tuple(p ** i for i in range(m + 1))
        self._exp = None
        self._log = None
        self._gen = None

    # -- identity ----------------------------------------------------------
    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # -- code <-> coefficient vector ---------------------------------------
    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def encode(self, coeffs) -> int:
        if len(coeffs) > self.m:
            raise ValueError(f"at most {self.m} coefficients expected")
        code = 0
        for i, c in enumerate(coeffs):
            code += (c % self.p) * self._pp[i]
        return code

    # -- coded kernel --------------------------------------------------------
    def add_codes(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for pi in self._pp[: self.m]:
            out += ((a // pi % p) + (b // pi % p)) % p * pi
        return out

    def neg_code(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        for pi in self._pp[: self.m]:
            out += (-(a // pi % p)) % p * pi
        return out

    def sub_codes(self, a: int, b: int) -> int:
        return self.add_codes(a, self.neg_code(b))

    def _mul_raw(self, a: int, b: int) -> int:
        # table-free product; used to bootstrap the tables themselves
        if self.m == 1:
            return (a * b) % self.p
        return self.encode(_pmulmod(self.decode(a), self.decode(b),
                                    self.modulus, self.p))

    def mul_codes(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is None and self.q <= TABLE_LIMIT:
            self.ensure_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_raw(a, b)

    def pow_code(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1  # empty product
            raise DivisionByZero("0 has no inverse")
        if self._exp is None and self.q <= TABLE_LIMIT and self.m > 1:
            self.ensure_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        if self.m == 1:
            return pow(a, e % (self.q - 1) if e else 0, self.p) if e else 1
        e %= self.q - 1
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._mul_raw(acc, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return acc

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self.pow_code(a, self.q - 2)

    # -- multiplicative structure -------------------------------------------
    def generator_code(self) -> int:
        """Smallest code of maximal multiplicative order q-1."""
        if self._gen is None:
            n = self.q - 1
            checks = [n // r for r in prime_factors(n)] if n > 1 else []
            for c in range(1, self.q):
                if all(self._pow_raw(c, e) != 1 for e in checks):
                    self._gen = c
                    break
        return self._gen

    def _pow_raw(self, a, e):
        if self.m == 1:
            return pow(a, e, self.p)
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._mul_raw(acc, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return acc

    def ensure_tables(self):
        """Materialise exp/log tables for the unit group."""
        if self._exp is not None:
            return
        if self.q > TABLE_LIMIT:
            raise RuntimeError(f"{self!r} too large for discrete-log tables")
        g = self.generator_code()
        n = self.q - 1
        exp = [1] * n
        log = [-1] * self.q
        acc = 1
        log[1] = 0
        for i in range(1, n):
            acc = self._mul_raw(acc, g)
            exp[i] = acc
            log[acc] = i
        self._exp = exp
        self._log = log

    def dlog(self, code: int) -> int:
        """Discrete log base the canonical generator; code must be nonzero."""
        if code == 0:
            raise DivisionByZero("0 has no discrete logarithm")
        self.ensure_tables()
        return self._log[code]

    def exp_code(self, e: int) -> int:
        self.ensure_tables()
        return self._exp[e % (self.q - 1)]

    # -- element construction -------------------------------------------------
    def from_code(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def element(self, value) -> "FieldElement":
        """Build an element from an integer (image of Z -> GF(p^m)) or a
        coefficient sequence in the power basis."""
        if isinstance(value, FieldElement):
            if value.owner != self:
                raise FieldMismatch(f"{value!r} belongs to {value.owner!r}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.encode(tuple(value)))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        for code in range(self.q):
            yield FieldElement(self, code)

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(self, rng.randrange(self.q))

    def random_nonzero(self, rng) -> "FieldElement":
        return FieldElement(self, rng.randrange(1, self.q))

    # -- serialisation ---------------------------------------------------------
    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_dict(data: dict) -> "FieldSpec":
        p, m = int(data["p"]), int(data["m"])
        modulus = tuple(int(c) for c in data["modulus"])
        return _field_for(p, m, modulus)


_SPEC_CACHE: dict[tuple, FieldSpec] = {}


def _field_for(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise BadDegree(f"extension degree must be >= 1, got {m}")
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ValueError("modulus must be monic of degree m")
    if m > 1 and not _is_irreducible(modulus, p):
        raise ValueError("modulus is reducible")
    key = (p, m, modulus)
    spec = _SPEC_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, m, modulus)
        _SPEC_CACHE[key] = spec
    return spec


def make_field(p: int, m: int = 1) -> FieldSpec:
    """GF(p^m) with the deterministic smallest irreducible modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise BadDegree(f"extension degree must be >= 1, got {m}")
    return _field_for(p, m, _smallest_irreducible(p, m))


class FieldElement:
    """Immutable element of a FieldSpec; supports +, -, *, /, ** and hashing."""

    __slots__ = ("owner", "code")

    def __init__(self, owner: FieldSpec, code: int):
        self.owner = owner
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.owner.decode(self.code)

    def _check(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.owner != self.owner:
            raise FieldMismatch(f"{self.owner!r} vs {other.owner!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.owner, self.owner.add_codes(self.code, other.code))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.owner, self.owner.sub_codes(self.code, other.code))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.owner, self.owner.mul_codes(self.code, other.code))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.owner,
                            self.owner.mul_codes(self.code, self.owner.inv_code(other.code)))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg_code(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.owner, self.owner.pow_code(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.owner, self.owner.inv_code(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.owner == other.owner and self.code == other.code

    def __hash__(self):
        return hash((self.owner._key(), self.code))

    def __repr__(self):
        if self.owner.m == 1:
            return str(self.code)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(terms) if terms else "0"

    def to_coeffs(self) -> list[int]:
        return list(self.coeffs)


# ---------------------------------------------------------------------------
# roots of unity and k-th roots
# ---------------------------------------------------------------------------

def multiplicative_order_mod(a: int, n: int) -> int:
    """Order of a in (Z/n)^*; a must be coprime to n."""
    a %= n
    e, x = 1, a
    while x != 1 % n:
        x = (x * a) % n
        e += 1
    return e


def field_with_kth_roots(p: int, k: int) -> FieldSpec:
    """Smallest GF(p^m) whose unit group contains mu_k."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if gcd(k, p) != 1:
        raise NotCoprime(f"gcd({k}, {p}) != 1")
    m = 1 if k == 1 else multiplicative_order_mod(p, k)
    return make_field(p, m)


def primitive_kth_root(field: FieldSpec, k: int) -> FieldElement:
    """Element of exact multiplicative order k; deterministic."""
    if k < 1 or (field.q - 1) % k != 0:
        raise NoSuchRoot(f"{k} does not divide {field.q - 1}")
    g = field.generator_code()
    return FieldElement(field, field._pow_raw(g, (field.q - 1) // k))


def multiplicative_order(x: FieldElement) -> int:
    if x.code == 0:
        raise DivisionByZero("0 has no multiplicative order")
    if x.code == 1:
        return 1
    n = x.owner.q - 1
    return n // gcd(x.owner.dlog(x.code), n)


def kth_roots_of(a: FieldElement, k: int) -> set[FieldElement]:
    """All x in the owner field with x^k = a; possibly empty."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    field = a.owner
    if a.code == 0:
        return {field.zero()}
    if field.q <= TABLE_LIMIT:
        field.ensure_tables()
        n = field.q - 1
        e = field._log[a.code]
        g = gcd(k, n)
        if e % g != 0:
            return set()
        # k/g is invertible mod n/g
        step = n // g
        base = (e // g) * pow(k // g, -1, step) % step
        return {FieldElement(field, field._exp[(base + t * step) % n])
                for t in range(g)}
    # large-field fallback: direct scan
    return {FieldElement(field, c) for c in range(field.q)
            if field.pow_code(c, k) == a.code}


# ---------------------------------------------------------------------------
# subfield embeddings
# ---------------------------------------------------------------------------

_EMBED_CACHE: dict[tuple, tuple[int, ...]] = {}


def _embedding_powers(src: FieldSpec, dst: FieldSpec) -> tuple[int, ...]:
    key = (src._key(), dst._key())
    powers = _EMBED_CACHE.get(key)
    if powers is None:
        # smallest root of the source modulus inside dst
        root = None
        consts = [dst.element(c).code for c in range(src.p)]
        for cand in range(dst.q):
            acc = 0
            for c in reversed(src.modulus):
                acc = dst.add_codes(dst.mul_codes(acc, cand), consts[c])
            if acc == 0:
                root = cand
                break
        if root is None:
            raise FieldMismatch(f"{src!r} does not embed in {dst!r}")
        pw, acc = [], 1
        for _ in range(src.m):
            pw.append(acc)
            acc = dst.mul_codes(acc, root)
        powers = tuple(pw)
        _EMBED_CACHE[key] = powers
    return powers


def embed(x: FieldElement, target: FieldSpec) -> FieldElement:
    """Image of x under the canonical embedding of its field into target."""
    src = x.owner
    if src == target:
        return x
    if src.p != target.p or target.m % src.m != 0:
        raise FieldMismatch(f"{src!r} does not embed in {target!r}")
    powers = _embedding_powers(src, target)
    consts = [target.element(c).code for c in range(src.p)]
    acc = 0
    for c, pw in zip(src.decode(x.code), powers):
        if c:
            acc = target.add_codes(acc, target.mul_codes(consts[c], pw))
    return FieldElement(target, acc)


def subfield_degree(x: FieldElement) -> int:
    """Degree over GF(p) of the smallest subfield containing x."""
    p, m = x.owner.p, x.owner.m
    for t in range(1, m + 1):
        if m % t == 0 and x.owner.pow_code(x.code, p ** t) == x.code:
            return t
    return m
