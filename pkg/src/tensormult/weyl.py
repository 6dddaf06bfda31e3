"""Root data for type-A algebras and their hook-variable analogues, subalgebra
closure, and the signed expansions of (generalized) Weyl denominators that
drive the shift operators.

Roots are stored as index pairs (i, j) with i < j over the standard labels;
the pair maps to the monomial t_i ... t_{j-1} in the simple-root variables.
Ordinary denominators expand to exact polynomials; denominators with odd
roots expand as alternating series truncated to a per-variable bound (shifts
beyond the bound annihilate the zero-extended counts, so a bound equal to the
queried weight vector loses nothing).
"""

from dataclasses import dataclass, field
from functools import cache
from itertools import combinations

from .errors import InvalidTruncation, NotClosed
from .sympoly import SparsePoly


@dataclass(frozen=True)
class SignedExpansion:
    """Finite list of (coefficient, shift vector) pairs in rank variables."""

    rank: int
    terms: tuple[tuple[int, tuple[int, ...]], ...]
    bound: tuple[int, ...] | None = None

    def __len__(self):
        return len(self.terms)

    def as_poly(self) -> SparsePoly:
        return SparsePoly(self.rank, {shift: coeff for coeff, shift in self.terms})


def _collect(terms: dict, rank: int, bound=None) -> SignedExpansion:
    cleaned = tuple(
        (c, e) for e, c in sorted(terms.items()) if c
    )
    return SignedExpansion(rank, cleaned, bound)


def _expand(factors, rank: int, bound=None) -> SignedExpansion:
    acc = {(0,) * rank: 1}
    for factor in factors:
        nxt = {}
        for e1, c1 in acc.items():
            for c2, e2 in factor:
                e = tuple(a + b for a, b in zip(e1, e2))
                if bound is not None and any(x > b for x, b in zip(e, bound)):
                    continue
                nxt[e] = nxt.get(e, 0) + c1 * c2
        acc = {e: c for e, c in nxt.items() if c}
    return _collect(acc, rank, bound)


def root_shift(root: tuple[int, int], rank: int) -> tuple[int, ...]:
    """Exponent vector of the simple-root monomial for the root L_i - L_j."""
    i, j = root
    if not (1 <= i < j <= rank + 1):
        raise ValueError(f"invalid root pair {root} for rank {rank}")
    return tuple(1 if i <= k < j else 0 for k in range(1, rank + 1))


def positive_roots(rank: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, rank + 1) for j in range(i + 1, rank + 2))


@cache
def weyl_denominator_ar(rank: int) -> SignedExpansion:
    """Exact expansion of the product of (1 - t^root) over all positive roots.

    Collects to (rank + 1)! signed unit terms, one per permutation.
    """
    zero = (0,) * rank
    factors = [
        ((1, zero), (-1, root_shift(root, rank))) for root in positive_roots(rank)
    ]
    return _expand(factors, rank)


@dataclass(frozen=True)
class SubalgebraSpec:
    """Connected label groups (each an A-type factor) plus leftover torus labels."""

    rank: int
    components: tuple[tuple[int, ...], ...]
    abelian: tuple[int, ...] = field(default=())

    @property
    def is_full(self) -> bool:
        return len(self.components) == 1 and len(self.components[0]) == self.rank + 1


def close_root_subset(roots, rank: int) -> SubalgebraSpec:
    """Minimal enhancement of a root subset to a direct sum of A-type factors.

    Pairs are edges on the labels 1..rank+1; each connected component with at
    least two labels becomes one factor, carrying every root between its
    labels; remaining labels stay abelian.
    """
    parent = list(range(rank + 2))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in roots:
        if not (1 <= i < j <= rank + 1):
            raise ValueError(f"invalid root pair {(i, j)} for rank {rank}")
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for label in range(1, rank + 2):
        groups.setdefault(find(label), []).append(label)
    components = tuple(
        tuple(sorted(g)) for g in sorted(groups.values()) if len(g) >= 2
    )
    abelian = tuple(sorted(g[0] for g in groups.values() if len(g) == 1))
    return SubalgebraSpec(rank, components, abelian)


def full_subalgebra(rank: int) -> SubalgebraSpec:
    return SubalgebraSpec(rank, (tuple(range(1, rank + 2)),), ())


def torus_subalgebra(rank: int) -> SubalgebraSpec:
    return SubalgebraSpec(rank, (), tuple(range(1, rank + 2)))


def subalgebra_positive_roots(spec: SubalgebraSpec) -> tuple[tuple[int, int], ...]:
    roots = []
    for comp in spec.components:
        roots.extend(combinations(comp, 2))
    return tuple(roots)


@cache
def weyl_denominator_subalgebra(spec: SubalgebraSpec) -> SignedExpansion:
    """Product of the factor denominators, written in the ambient variables."""
    zero = (0,) * spec.rank
    factors = [
        ((1, zero), (-1, root_shift(root, spec.rank)))
        for root in subalgebra_positive_roots(spec)
    ]
    return _expand(factors, spec.rank)


def super_positive_roots(shape: tuple[int, int]):
    """(even, odd) positive root pairs of the (m, n) hook algebra."""
    m, n = shape
    even = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    even += [(k, l) for k in range(m + 1, m + n + 1) for l in range(k + 1, m + n + 1)]
    odd = [(i, k) for i in range(1, m + 1) for k in range(m + 1, m + n + 1)]
    return tuple(even), tuple(odd)


def _check_bound(bound, rank):
    bound = tuple(int(b) for b in bound)
    if len(bound) != rank or any(b < 0 for b in bound):
        raise InvalidTruncation(f"bound {bound} invalid for rank {rank}")
    return bound


def _alternating_factor(shift, bound):
    """Truncated expansion of 1/(1 + t^shift) within the bound box."""
    kmax = min(b // s for s, b in zip(shift, bound) if s)
    return tuple(
        ((-1) ** k, tuple(k * s for s in shift)) for k in range(kmax + 1)
    )


def weyl_denominator_super(shape: tuple[int, int], bound) -> SignedExpansion:
    """Expansion of prod_even(1 - t^a) / prod_odd(1 + t^a), truncated to bound."""
    m, n = shape
    rank = m + n - 1
    bound = _check_bound(bound, rank)
    even, odd = super_positive_roots(shape)
    zero = (0,) * rank
    factors = [((1, zero), (-1, root_shift(r, rank))) for r in even]
    factors += [_alternating_factor(root_shift(r, rank), bound) for r in odd]
    return _expand(factors, rank, bound if odd else None)


@dataclass(frozen=True)
class SuperRootSubset:
    """Subset of positive roots of the (m, n) hook algebra, split by parity on demand."""

    shape: tuple[int, int]
    roots: tuple[tuple[int, int], ...]

    def __post_init__(self):
        m, n = self.shape
        for i, j in self.roots:
            if not (1 <= i < j <= m + n):
                raise ValueError(f"invalid root pair {(i, j)} for shape {self.shape}")
        object.__setattr__(self, "roots", tuple(sorted(set(self.roots))))

    def parity_split(self):
        m, _ = self.shape
        even = tuple(r for r in self.roots if not (r[0] <= m < r[1]))
        odd = tuple(r for r in self.roots if r[0] <= m < r[1])
        return even, odd

    def is_closed(self) -> bool:
        """Every pair of labels joined through the subset must be joined directly."""
        m, n = self.shape
        parent = list(range(m + n + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i, j in self.roots:
            parent[find(i)] = find(j)
        groups: dict[int, set[int]] = {}
        for label in range(1, m + n + 1):
            groups.setdefault(find(label), set()).add(label)
        present = set(self.roots)
        for group in groups.values():
            if any(pair not in present for pair in combinations(sorted(group), 2)):
                return False
        return True


def weyl_denominator_super_subalgebra(sub: SuperRootSubset, bound) -> SignedExpansion:
    """Denominator expansion restricted to a closed subset of positive roots."""
    if not sub.is_closed():
        raise NotClosed(
            f"root subset {sub.roots} is not bracket-closed; add the missing "
            f"roots between connected labels"
        )
    m, n = sub.shape
    rank = m + n - 1
    bound = _check_bound(bound, rank)
    even, odd = sub.parity_split()
    zero = (0,) * rank
    factors = [((1, zero), (-1, root_shift(r, rank))) for r in even]
    factors += [_alternating_factor(root_shift(r, rank), bound) for r in odd]
    return _expand(factors, rank, bound if odd else None)


def parse_root(token: str, shape: tuple[int, int] | None = None) -> tuple[int, int]:
    """One root from CLI syntax: "L1-L3", simple-root sums "a1+a2", or with a
    shape also "L2-K1" and "K1-K2".  Rejects non-positive roots."""
    token = token.strip()
    offset = shape[0] if shape else 0

    def label(part):
        part = part.strip()
        if part[:1] in ("L", "l"):
            return int(part[1:])
        if part[:1] in ("K", "k"):
            if shape is None:
                raise ValueError(f"odd label {part!r} needs a hook shape")
            k = int(part[1:])
            if not 1 <= k <= shape[1]:
                raise ValueError(f"label {part!r} out of range for shape {shape}")
            return offset + k
        raise ValueError(f"cannot parse label {part!r}")

    if "-" in token:
        left, right = token.split("-", 1)
        i, j = label(left), label(right)
        if i >= j:
            raise ValueError(f"{token!r} is not a positive root")
        return (i, j)
    if token[:1] in ("a", "A"):
        indices = sorted(int(t.strip()[1:]) for t in token.split("+"))
        if indices != list(range(indices[0], indices[-1] + 1)):
            raise ValueError(f"{token!r} is not a sum of consecutive simple roots")
        return (indices[0], indices[-1] + 1)
    raise ValueError(f"cannot parse root {token!r}")


def parse_roots(text: str, shape: tuple[int, int] | None = None):
    return tuple(parse_root(tok, shape) for tok in text.split(",") if tok.strip())
