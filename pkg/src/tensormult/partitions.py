"""Young diagrams, hook diagrams, and the dictionaries between diagrams and
occupancy weight vectors.

Partitions are plain tuples of nonnegative integers in canonical form
(weakly decreasing, no trailing zeros).  Weight vectors ("M vectors") are
tuples (M_1, ..., M_r); the boundary entries M_0 = total degree and
M_{r+1} = 0 are implicit and supplied by context.
"""

from itertools import accumulate

from .errors import NonStandardWeight, SizeMismatch, TooManyRows


def partition(parts) -> tuple[int, ...]:
    """Canonical partition from any iterable: validated and stripped of trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing, got {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def is_partition(parts) -> bool:
    """True when the sequence is weakly decreasing and nonnegative."""
    p = tuple(parts)
    return all(x >= 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def size(lam) -> int:
    return sum(lam)


def conjugate(lam) -> tuple[int, ...]:
    """Transpose of the diagram (column lengths); an involution."""
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def hook_lengths(lam) -> tuple[tuple[int, ...], ...]:
    """Per-cell hook lengths h(i,j) = arm + leg + 1, row by row."""
    lam = partition(lam)
    conj = conjugate(lam)
    return tuple(
        tuple(lam[i] - (j + 1) + conj[j] - (i + 1) + 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


def reduce_redundant(lam, rank: int) -> tuple[int, ...]:
    """Strip full columns from a redundant (rank+1)-row diagram.

    Subtracts the last part from every part when the diagram has exactly
    rank+1 nonzero rows; diagrams with fewer rows are returned unchanged.
    """
    lam = partition(lam)
    if len(lam) > rank + 1:
        raise TooManyRows(f"{lam} has more than {rank + 1} rows")
    if len(lam) < rank + 1:
        return lam
    return partition(p - lam[-1] for p in lam)


def is_standard_m(m_vec, two_sl: int) -> bool:
    """True when two_sl >= M_1 >= ... >= M_r >= 0."""
    chain = (two_sl,) + tuple(m_vec) + (0,)
    return all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))


def lambda_from_m(m_vec, two_sl: int) -> tuple[int, ...]:
    """Diagram with rows M_{i-1} - M_i; fails when the rows do not weakly decrease.

    No reflection of non-standard weights is attempted: callers are expected
    to stay in the region where the difference sequence is a partition.
    """
    diffs = _row_differences(m_vec, two_sl)
    if any(d < 0 for d in diffs) or any(
        diffs[i] < diffs[i + 1] for i in range(len(diffs) - 1)
    ):
        raise NonStandardWeight(f"M={tuple(m_vec)} gives non-partition rows {diffs}")
    return partition(diffs)


def _row_differences(m_vec, two_sl):
    chain = (two_sl,) + tuple(m_vec) + (0,)
    return tuple(chain[i] - chain[i + 1] for i in range(len(chain) - 1))


def m_from_lambda(lam, rank: int, two_sl: int) -> tuple[int, ...]:
    """Weight vector M_j = two_sl - (lam_1 + ... + lam_j); inverse of lambda_from_m."""
    lam = partition(lam)
    if len(lam) > rank + 1:
        raise TooManyRows(f"{lam} has more than {rank + 1} rows")
    if sum(lam) != two_sl:
        raise SizeMismatch(f"|{lam}| = {sum(lam)} != {two_sl}")
    padded = lam + (0,) * (rank + 1 - len(lam))
    return tuple(two_sl - s for s in accumulate(padded[:rank]))


def fits_hook(lam, shape: tuple[int, int]) -> bool:
    """True when the diagram lies in the (m, n)-hook: row m+1 has at most n cells."""
    m, n = shape
    lam = partition(lam)
    return len(lam) <= m or lam[m] <= n


def super_m_from_hook(lam, two_sl: int, shape: tuple[int, int]) -> tuple[int, ...]:
    """Weight vector of a hook diagram: first m rows, then conjugated columns below row m."""
    m, n = shape
    lam = partition(lam)
    if not fits_hook(lam, shape):
        raise TooManyRows(f"{lam} does not fit the {shape}-hook")
    if sum(lam) != two_sl:
        raise SizeMismatch(f"|{lam}| = {sum(lam)} != {two_sl}")
    head = lam[:m] + (0,) * (m - len(lam[:m]))
    tail_cols = conjugate(lam[m:])
    rows = head + tail_cols + (0,) * (n - len(tail_cols))
    return tuple(two_sl - s for s in accumulate(rows[: m + n - 1]))


def hook_from_super_m(m_vec, two_sl: int, shape: tuple[int, int]) -> tuple[int, ...]:
    """Hook diagram of a weight vector; fails when the data do not assemble to one."""
    m, n = shape
    m_vec = tuple(m_vec)
    if len(m_vec) != m + n - 1:
        raise NonStandardWeight(f"expected {m + n - 1} entries for shape {shape}")
    diffs = _row_differences(m_vec, two_sl)
    head, cols = diffs[:m], diffs[m:]
    if any(d < 0 for d in diffs) or not is_partition(head) or not is_partition(cols):
        raise NonStandardWeight(f"M={m_vec} gives non-partition data {diffs}")
    assembled = head + conjugate(cols)
    if not is_partition(assembled):
        raise NonStandardWeight(f"M={m_vec} assembles to non-partition {assembled}")
    return partition(assembled)


def partitions_of(total: int, max_rows: int | None = None, max_part: int | None = None):
    """Yield all partitions of `total`, largest part first, optionally bounded."""
    cap = total if max_part is None else min(max_part, total)
    rows = total if max_rows is None else max_rows

    def rec(remaining, largest, depth):
        if remaining == 0:
            yield ()
            return
        if depth == 0:
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in rec(remaining - first, first, depth - 1):
                yield (first,) + rest

    if total == 0:
        yield ()
        return
    yield from rec(total, cap, rows)


def hook_partitions_of(total: int, shape: tuple[int, int]):
    """Yield all partitions of `total` inside the (m, n)-hook."""
    for lam in partitions_of(total):
        if fits_hook(lam, shape):
            yield lam


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated row list such as "3,2,1"; "0" and "" mean the empty diagram."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    return partition(int(tok) for tok in text.split(","))


def format_partition(lam) -> str:
    lam = partition(lam)
    return ",".join(str(p) for p in lam) if lam else "0"
