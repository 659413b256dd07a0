"""
Center selection strategies

Each strategy picks the blowup center for an unfinished chart. Centers are
sorted tuples of 0-based variable indices with at least two members.
"""

from typing import List, Sequence, Tuple

from monoforge.core.binomial import BinomialState, support

Center = Tuple[int, ...]


def _first_argmax(vector: Sequence[int]) -> int:
    best = max(vector)
    return vector.index(best)


def _last_unit(vector: Sequence[int], skip: int) -> int:
    """Largest index other than ``skip`` whose exponent is exactly 1."""
    return max(j for j, exponent in enumerate(vector) if exponent == 1 and j != skip)


def _cover(smaller_total: int, larger: Sequence[int]) -> List[int]:
    """
    Indices of the larger side whose exponents sum to at least ``smaller_total``.

    Walks the support in ascending order until the sum is reached, then drops
    every index (again ascending) that the running remainder can spare.
    """
    chosen: List[int] = []
    running = 0
    for j in support(larger):
        chosen.append(j)
        running += larger[j]
        if running >= smaller_total:
            break

    kept: List[int] = []
    remaining = running
    for j in chosen:
        if remaining - larger[j] >= smaller_total:
            remaining -= larger[j]
        else:
            kept.append(j)
    return kept


def center_maxord(state: BinomialState) -> Center:
    """Maximal-order center: covers the smaller monomial with part of the larger one."""
    a, b = state.a, state.b
    sa, sb = state.degree_a, state.degree_b
    if sa == sb:
        return tuple(sorted(support(a) + support(b)))
    if sa < sb:
        return tuple(sorted(support(a) + tuple(_cover(sa, b))))
    return tuple(sorted(support(b) + tuple(_cover(sb, a))))


def center_codim2(state: BinomialState) -> Center:
    """Codimension-two center through the first maximal exponent on each side."""
    return tuple(sorted((_first_argmax(state.a), _first_argmax(state.b))))


def center_mincodim(state: BinomialState) -> Center:
    """Smallest center that still lowers the termination measure."""
    a, b = state.a, state.b
    i1, i2 = _first_argmax(a), _first_argmax(b)
    alpha, beta = a[i1], b[i2]
    center = [i1, i2]

    if min(alpha, beta) >= 2 or min(state.degree_a, state.degree_b) == 1:
        return tuple(sorted(center))

    # partner: last unit exponent on the same side
    if alpha == 1:
        center.append(_last_unit(a, i1))
    if beta == 1:
        center.append(_last_unit(b, i2))
    return tuple(sorted(center))


def center_exceptional(state: BinomialState) -> Center:
    """Codimension two whenever one of the two variables is exceptional, else minimal codimension."""
    a, b = state.a, state.b
    i1, i2 = _first_argmax(a), _first_argmax(b)
    if min(a[i1], b[i2]) >= 2 or min(state.degree_a, state.degree_b) == 1:
        return tuple(sorted((i1, i2)))
    if state.e[i1] + state.e[i2] > 0:
        return tuple(sorted((i1, i2)))
    return center_mincodim(state)
