"""Detection and correction checks for operator codeword-stabilized codes.

An error E is detectable when no pair of distinct word operators can be
confused by it: w_i E w_j stays outside the gauge group for every i != j.
Correcting all weight <= t errors additionally requires the degenerate
weight <= t errors (those acting as a gauge element on the code space) to
act identically on every codeword sector, which holds exactly when they
commute with every word operator.

Two independent routes are provided.  The operator route works through
gauge-group membership of w_i E w_j products.  The classical route reduces
every error to its induced Z bit-vector and compares translated word sets.
They must agree on every code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .code import OcwsCode, gauge_decomposition, gauge_generators
from .induction import (
    enumerate_paulis,
    gauge_reduce,
    induce,
    induced_error_set,
    paulis_of_weight,
)
from .pauli import PauliOperator, commutes, multiply, weight

__all__ = [
    "DetectionFailure",
    "DetectionReport",
    "detects",
    "detects_set",
    "corrects_weight",
    "certify_distance",
    "classical_route_corrects",
]


@dataclass(frozen=True)
class DetectionFailure:
    """An undetectable error with its first confusable word pair (1-based)."""

    error: PauliOperator
    word_i: int
    word_j: int
    decomposition: str


@dataclass(frozen=True)
class DetectionReport:
    checked: int
    failures: tuple[DetectionFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def _pair_table(code: OcwsCode) -> dict[int, tuple[int, int]]:
    """Canonical residue of each word-pair difference, keyed to its first pair.

    w_i E w_j lies in the gauge group exactly when the symplectic vector of
    E and the pure-Z vector c_i xor c_j share a canonical residue, so one
    residue lookup per error replaces the per-pair membership tests.
    """
    basis = gauge_generators(code).basis
    table: dict[int, tuple[int, int]] = {}
    for (i, ci), (j, cj) in itertools.combinations(enumerate(code.words, start=1), 2):
        residue = basis.canonical(ci ^ cj)
        table.setdefault(residue, (i, j))
    return table


def _first_failure(
    code: OcwsCode, e: PauliOperator, table: dict[int, tuple[int, int]]
) -> DetectionFailure | None:
    if e.n != code.n:
        raise ValueError(f"operator length {e.n} does not match code n={code.n}")
    basis = gauge_generators(code).basis
    residue = basis.canonical((e.x << code.n) | e.z)
    hit = table.get(residue)
    if hit is None:
        return None
    i, j = hit
    product = multiply(multiply(code.word_operator(i - 1), e), code.word_operator(j - 1))
    decomposition = gauge_decomposition(code, product)
    assert decomposition is not None
    return DetectionFailure(e, i, j, decomposition)


def detects(code: OcwsCode, e: PauliOperator) -> bool:
    """True iff w_i e w_j is outside the gauge group for every pair i != j."""
    return _first_failure(code, e, _pair_table(code)) is None


def detects_set(code: OcwsCode, errors) -> DetectionReport:
    """Check every error; the report lists each failure with one witness pair."""
    errors = list(errors)
    table = _pair_table(code)
    failures = []
    for e in errors:
        failure = _first_failure(code, e, table)
        if failure is not None:
            failures.append(failure)
    return DetectionReport(len(errors), tuple(failures))


def _uniform_degenerate_action(code: OcwsCode, e: PauliOperator) -> bool:
    return all(commutes(e, code.word_operator(l)) for l in range(code.K))


def corrects_weight(code: OcwsCode, t: int) -> bool:
    """True iff every Pauli error of weight <= t is correctable.

    Requires detection of every nonidentity product of two such errors
    (weight <= 2t) and uniform action of the degenerate weight <= t errors
    across all codeword sectors.
    """
    if t < 0:
        raise ValueError(f"weight bound t={t} must be >= 0")
    if t == 0:
        return True
    table = _pair_table(code)
    for e in enumerate_paulis(code.n, min(2 * t, code.n)):
        if _first_failure(code, e, table) is not None:
            return False
        if weight(e) <= t and gauge_reduce(code, induce(code, e)) == 0:
            if not _uniform_degenerate_action(code, e):
                return False
    return True


def certify_distance(code: OcwsCode) -> int:
    """Smallest weight of an undetectable nonidentity error, or n + 1.

    A return of d certifies every error of weight < d is detectable.  When
    every nonidentity Pauli is detectable (as with a single word, where no
    word pair exists) the sweep is vacuous beyond weight n and the value is
    capped at n + 1.
    """
    table = _pair_table(code)
    if not table:
        return code.n + 1
    for w in range(1, code.n + 1):
        for e in paulis_of_weight(code.n, w):
            if _first_failure(code, e, table) is not None:
                return w
    return code.n + 1


def classical_route_corrects(code: OcwsCode, t: int) -> bool:
    """Correction test for weight <= t errors in classical bit form.

    Translates each word by every reduced induced-error class of weight
    <= t (plus the zero class) and demands the translated words never
    collide across distinct word indices; degenerate classes must also act
    uniformly, checked through X-support parity against each word.
    """
    if t < 0:
        raise ValueError(f"weight bound t={t} must be >= 0")
    if t == 0:
        return True
    classes = induced_error_set(code, t)
    class_bits = {c.bits for c in classes} | {0}
    for ea in class_bits:
        for eb in class_bits:
            for i, ci in enumerate(code.words):
                for j, cj in enumerate(code.words):
                    if i != j and ci ^ ea == cj ^ eb:
                        return False
    for cls in classes:
        if cls.bits != 0:
            continue
        for e in cls.sources:
            for word in code.words:
                if (e.x & word).bit_count() % 2:
                    return False
    return True
