"""Sparse multivariate polynomials over the integers, plus the symmetric
polynomial constructions used by the character oracles: complete homogeneous,
Schur (bialternant and tableau routes), skew Schur, hook Schur, Vandermonde.

Coefficients are Python ints throughout, so all arithmetic is exact at any
size.  Terms live in a dict keyed by exponent tuples; no operation depends on
iteration order.
"""

from functools import cache
from itertools import permutations

from .errors import ArityMismatch, NotContained, TooManyRows
from .partitions import conjugate, partition


def _grlex(expv):
    return (sum(expv), expv)


class SparsePoly:
    """Polynomial as a map from exponent tuples to nonzero integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, expv, coeff=1):
        return cls(len(expv), {tuple(expv): coeff})

    @classmethod
    def variable(cls, index, nvars):
        expv = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {expv: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, expv) -> int:
        """Stored coefficient, or 0 (in particular for any negative exponent)."""
        expv = tuple(expv)
        if any(e < 0 for e in expv):
            return 0
        return self.terms.get(expv, 0)

    def _check_arity(self, other):
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} variables vs {other.nvars}")

    def __add__(self, other):
        self._check_arity(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nvars, out)

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check_arity(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        return (
            isinstance(other, SparsePoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {len(self.terms)} terms)"

    def dump(self) -> str:
        """One term per line, "coeff * x1^e1 ... xn^en", graded-lex descending."""
        lines = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            factors = " ".join(f"x{i + 1}^{p}" for i, p in enumerate(e))
            lines.append(f"{self.terms[e]} * {factors}")
        return "\n".join(lines)


def divide_exact(num: SparsePoly, den: SparsePoly) -> SparsePoly:
    """Exact quotient by iterated leading-term elimination under graded-lex order.

    Raises ArithmeticError when the division leaves a remainder; the callers
    here divide alternants by the Vandermonde determinant, which is always
    exact.
    """
    num._check_arity(den)
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    dlead = max(den.terms, key=_grlex)
    dcoef = den.terms[dlead]
    rem = dict(num.terms)
    quot = {}
    while rem:
        lead = max(rem, key=_grlex)
        qexp = tuple(a - b for a, b in zip(lead, dlead))
        if any(e < 0 for e in qexp) or rem[lead] % dcoef:
            raise ArithmeticError("polynomial division is not exact")
        qcoef = rem[lead] // dcoef
        quot[qexp] = quot.get(qexp, 0) + qcoef
        for de, dc in den.terms.items():
            e = tuple(a + b for a, b in zip(qexp, de))
            val = rem.get(e, 0) - qcoef * dc
            if val:
                rem[e] = val
            else:
                rem.pop(e, None)
    return SparsePoly(num.nvars, quot)


def complete_homogeneous(degree: int, nvars: int) -> SparsePoly:
    """Sum of every monomial of the given total degree: the one-row character."""
    if degree < 0:
        raise ValueError("negative degree")
    terms = {}

    def rec(prefix, remaining, slots):
        if slots == 1:
            terms[prefix + (remaining,)] = 1
            return
        for first in range(remaining + 1):
            rec(prefix + (first,), remaining - first, slots - 1)

    if nvars == 0:
        return SparsePoly.one(0) if degree == 0 else SparsePoly.zero(0)
    rec((), degree, nvars)
    return SparsePoly(nvars, terms)


def vandermonde(nvars: int) -> SparsePoly:
    """Product of (x_i - x_j) over i < j, expanded as the signed permutation sum."""
    terms = {}
    staircase = tuple(range(nvars - 1, -1, -1))
    for perm in permutations(range(nvars)):
        expv = [0] * nvars
        for pos, i in enumerate(perm):
            expv[i] = staircase[pos]
        terms[tuple(expv)] = _perm_sign(perm)
    return SparsePoly(nvars, terms)


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _alternant(lam, nvars) -> SparsePoly:
    exps = tuple(lam[i] if i < len(lam) else 0 for i in range(nvars))
    shifted = tuple(exps[i] + nvars - 1 - i for i in range(nvars))
    terms = {}
    for perm in permutations(range(nvars)):
        expv = [0] * nvars
        for pos, i in enumerate(perm):
            expv[i] = shifted[pos]
        terms[tuple(expv)] = _perm_sign(perm)
    return SparsePoly(nvars, terms)


def schur(lam, nvars: int) -> SparsePoly:
    """Schur polynomial via the bialternant ratio, divided exactly."""
    lam = partition(lam)
    if len(lam) > nvars:
        raise TooManyRows(f"{lam} needs more than {nvars} variables")
    if not lam:
        return SparsePoly.one(nvars)
    return divide_exact(_alternant(lam, nvars), vandermonde(nvars))


def _ssyt_contents(outer, inner, nvars):
    """Yield the content vector of every semistandard filling of outer/inner.

    Rows weakly increase, columns strictly increase, entries in 1..nvars.
    """
    outer = tuple(outer)
    inner = tuple(inner[i] if i < len(inner) else 0 for i in range(len(outer)))
    cells = [
        (i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])
    ]
    if not cells:
        yield (0,) * nvars
        return
    grid = {}
    content = [0] * nvars

    def rec(pos):
        if pos == len(cells):
            yield tuple(content)
            return
        i, j = cells[pos]
        low = 1
        if j > inner[i]:
            low = grid[(i, j - 1)]
        if i > 0 and inner[i - 1] <= j < outer[i - 1]:
            low = max(low, grid[(i - 1, j)] + 1)
        for val in range(low, nvars + 1):
            grid[(i, j)] = val
            content[val - 1] += 1
            yield from rec(pos + 1)
            content[val - 1] -= 1
        grid.pop((i, j), None)

    yield from rec(0)


def schur_tableaux(lam, nvars: int) -> SparsePoly:
    """Schur polynomial as the monomial sum over semistandard tableaux."""
    lam = partition(lam)
    if len(lam) > nvars:
        raise TooManyRows(f"{lam} needs more than {nvars} variables")
    terms = {}
    for content in _ssyt_contents(lam, (), nvars):
        terms[content] = terms.get(content, 0) + 1
    return SparsePoly(nvars, terms)


def contains(outer, inner) -> bool:
    outer, inner = partition(outer), partition(inner)
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def skew_schur(lam, tau, nvars: int) -> SparsePoly:
    """Skew Schur polynomial: monomial sum over semistandard fillings of lam/tau."""
    lam, tau = partition(lam), partition(tau)
    if not contains(lam, tau):
        raise NotContained(f"{tau} is not contained in {lam}")
    terms = {}
    for content in _ssyt_contents(lam, tau, nvars):
        terms[content] = terms.get(content, 0) + 1
    return SparsePoly(nvars, terms)


def _subpartitions(lam, max_part):
    """All partitions contained in lam with parts at most max_part."""

    def rec(row, cap):
        if row == len(lam):
            yield ()
            return
        top = min(cap, lam[row])
        for first in range(top, -1, -1):
            if first == 0:
                yield ()
                return
            for rest in rec(row + 1, first):
                yield (first,) + rest

    yield from rec(0, max_part)


def _embed(poly: SparsePoly, nvars: int, offset: int) -> SparsePoly:
    pad_left = (0,) * offset
    pad_right = (0,) * (nvars - offset - poly.nvars)
    return SparsePoly(
        nvars, {pad_left + e + pad_right: c for e, c in poly.terms.items()}
    )


def hook_schur(lam, shape: tuple[int, int]) -> SparsePoly:
    """Hook Schur polynomial of a hook diagram in m + n variables.

    Sum over subdiagrams tau with at most n columns of the skew piece in the
    first m variables times the conjugate piece in the last n variables.
    Diagrams outside the (m, n)-hook come out as zero.
    """
    return _hook_schur_cached(partition(lam), (shape[0], shape[1]))


@cache
def _hook_schur_cached(lam, shape):
    m, n = shape
    nvars = m + n
    total = SparsePoly.zero(nvars)
    for tau in _subpartitions(lam, n):
        skew_part = skew_schur(lam, tau, m)
        if skew_part.is_zero():
            continue
        y_part = schur(conjugate(tau), n)
        if y_part.is_zero():
            continue
        total = total + _embed(skew_part, nvars, 0) * _embed(y_part, nvars, m)
    return total
