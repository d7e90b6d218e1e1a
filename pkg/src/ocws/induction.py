"""Induced errors: the Z-type image of a Pauli error on a graph state.

Multiplying an error E into the graph-state generators shows E acts on the
code space exactly like a Z-type operator whose bit-vector is

    ind(E) = z(E) XOR (XOR of adjacency rows at the X-support of E).

Reducing that vector modulo the Z-type gauge generators (clearing the last
r bits) yields the effective classical error the words must discriminate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .code import OcwsCode
from .pauli import PauliOperator, identity

__all__ = [
    "InducedError",
    "induce",
    "gauge_reduce",
    "paulis_of_weight",
    "enumerate_paulis",
    "induced_error_set",
]


@dataclass(frozen=True)
class InducedError:
    """A reduced induced-error class and every swept Pauli mapping to it."""

    bits: int
    sources: tuple[PauliOperator, ...]


def induce(code: OcwsCode, e: PauliOperator) -> int:
    """Raw induced Z bit-vector of e (before gauge reduction)."""
    if e.n != code.n:
        raise ValueError(f"operator length {e.n} does not match code n={code.n}")
    bits = e.z
    x = e.x
    rows = code.graph.rows
    while x:
        low = x & -x
        bits ^= rows[low.bit_length() - 1]
        x ^= low
    return bits


def gauge_reduce(code: OcwsCode, bits: int) -> int:
    """Clear the gauge-qubit bits (positions s+1..n)."""
    return bits & ((1 << code.s) - 1)


def paulis_of_weight(n: int, w: int):
    """Yield the Paulis of weight exactly w in canonical order.

    Supports run in lexicographic order of ascending qubit index; within a
    support, letters run through X, Y, Z per qubit in product order.
    """
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} out of range for n={n}")
    if w == 0:
        yield identity(n)
        return
    for support in itertools.combinations(range(n), w):
        for letters in itertools.product("XYZ", repeat=w):
            x = z = 0
            for qubit, letter in zip(support, letters):
                if letter != "Z":
                    x |= 1 << qubit
                if letter != "X":
                    z |= 1 << qubit
            yield PauliOperator(n, x=x, z=z)


def enumerate_paulis(
    n: int, max_weight: int, include_identity: bool = False
) -> list[PauliOperator]:
    """All Paulis of weight <= max_weight, ordered by weight then support."""
    if not 0 <= max_weight <= n:
        raise ValueError(f"max_weight {max_weight} out of range for n={n}")
    out: list[PauliOperator] = []
    if include_identity:
        out.append(identity(n))
    for w in range(1, max_weight + 1):
        out.extend(paulis_of_weight(n, w))
    return out


def induced_error_set(code: OcwsCode, max_weight: int) -> list[InducedError]:
    """Distinct reduced induced-error classes over all Paulis of weight <= max_weight.

    Classes appear in order of first appearance during the enumeration;
    each class lists its source Paulis in enumeration order.  The zero
    class is included when some swept Pauli reduces to it.
    """
    if max_weight < 1:
        raise ValueError(f"max_weight {max_weight} must be >= 1")
    classes: dict[int, list[PauliOperator]] = {}
    for e in enumerate_paulis(code.n, max_weight):
        bits = gauge_reduce(code, induce(code, e))
        classes.setdefault(bits, []).append(e)
    return [InducedError(bits, tuple(sources)) for bits, sources in classes.items()]
