"""Operator codeword-stabilized codes: construction, gauge group, file I/O.

A code is a graph (its state is the common +1 eigenstate of the generators
S_i = X_i Z^{row_i}), a count r of gauge qubits occupying the last r
positions, and K distinct word bit-vectors supported on the first
s = n - r qubits.  Word l encodes the Z-type word operator Z^{word_l}.
The gauge group is generated by S_1..S_n together with g_j = Z_{s+j}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graph import Graph, adjacency_lines, from_adjacency, ring_graph, stabilizer_generator
from .pauli import (
    PauliOperator,
    format_bits,
    parse_bits,
    parse_zstring,
)

__all__ = [
    "OcwsCode",
    "GaugeGroup",
    "CodeFileError",
    "new_code",
    "gauge_generators",
    "in_gauge_group",
    "gauge_decomposition",
    "parse_code_file",
    "write_code_file",
]


class CodeFileError(ValueError):
    """Raised for malformed code files."""


class _GF2Basis:
    """Row-echelon basis over GF(2) with generator-combination tracking.

    Vectors are plain integers.  Each stored row remembers which original
    generators combine to it, so membership tests can also produce a
    decomposition witness.
    """

    def __init__(self) -> None:
        self._rows: dict[int, tuple[int, int]] = {}  # pivot bit -> (vector, combo)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vector: int, combo: int) -> bool:
        """Insert a vector; returns False if it was already in the span."""
        residue, combo = self._reduce(vector, combo)
        if residue == 0:
            return False
        self._rows[residue.bit_length() - 1] = (residue, combo)
        return True

    def decompose(self, vector: int) -> int | None:
        """Combination mask expressing the vector, or None if outside the span."""
        residue, combo = self._reduce(vector, 0)
        return combo if residue == 0 else None

    def canonical(self, vector: int) -> int:
        """Unique coset representative with zeros at every pivot position.

        The map is GF(2)-linear, so two vectors differ by a span element
        exactly when their canonical forms are equal.
        """
        return self._reduce(vector, 0)[0]

    def _reduce(self, vector: int, combo: int) -> tuple[int, int]:
        residue = 0
        while vector:
            top = vector.bit_length() - 1
            row = self._rows.get(top)
            if row is None:
                residue |= 1 << top
                vector ^= 1 << top
            else:
                vector ^= row[0]
                combo ^= row[1]
        return residue, combo


@dataclass(frozen=True)
class GaugeGroup:
    """Generators S_1..S_n, g_1..g_r and their symplectic GF(2) basis."""

    generators: tuple[PauliOperator, ...]
    labels: tuple[str, ...]
    basis: _GF2Basis = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.basis.rank


@dataclass(frozen=True)
class OcwsCode:
    """A code instance; use new_code() or parse_code_file() to build one."""

    graph: Graph
    r: int
    words: tuple[int, ...]
    claimed_distance: int | None = None

    def __post_init__(self) -> None:
        n = self.graph.n
        if not 0 <= self.r < n:
            raise ValueError(f"gauge count r={self.r} out of range for n={n}")
        if not self.words:
            raise ValueError("a code needs at least one word")
        if self.claimed_distance is not None and self.claimed_distance < 1:
            raise ValueError(f"claimed distance {self.claimed_distance} must be >= 1")
        word_mask = (1 << self.s) - 1
        seen: dict[int, int] = {}
        for pos, word in enumerate(self.words, start=1):
            if not 0 <= word < (1 << n):
                raise ValueError(f"word {pos} out of range for n={n}")
            if word & ~word_mask:
                qubit = (word & ~word_mask).bit_length()
                raise ValueError(
                    f"word {format_bits(word, n)} is supported on gauge qubit {qubit}"
                )
            if word in seen:
                raise ValueError(
                    f"duplicate word {format_bits(word, n)} at positions "
                    f"{seen[word]} and {pos}"
                )
            seen[word] = pos

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def s(self) -> int:
        """Number of non-gauge qubits; words live on qubits 1..s."""
        return self.graph.n - self.r

    @property
    def K(self) -> int:
        return len(self.words)

    def word_operator(self, index: int) -> PauliOperator:
        """Z-type word operator for 0-based word index."""
        return PauliOperator(self.n, z=self.words[index])

    @cached_property
    def _gauge_group(self) -> GaugeGroup:
        n = self.graph.n
        generators = [stabilizer_generator(self.graph, i) for i in range(1, n + 1)]
        labels = [f"S{i}" for i in range(1, n + 1)]
        for j in range(1, self.r + 1):
            generators.append(PauliOperator(n, z=1 << (self.s + j - 1)))
            labels.append(f"g{j}")
        basis = _GF2Basis()
        for k, gen in enumerate(generators):
            basis.add(_symplectic_vector(gen), 1 << k)
        if basis.rank != n + self.r:
            raise ValueError("gauge generators are not independent")
        return GaugeGroup(tuple(generators), tuple(labels), basis)


def _symplectic_vector(p: PauliOperator) -> int:
    return (p.x << p.n) | p.z


def new_code(
    graph: Graph,
    r: int,
    words: tuple[int, ...] | list[int],
    claimed_distance: int | None = None,
) -> OcwsCode:
    """Validate and build a code; errors name the offending word or position."""
    return OcwsCode(graph, r, tuple(words), claimed_distance)


def gauge_generators(code: OcwsCode) -> GaugeGroup:
    """The n + r gauge generators with their cached symplectic basis."""
    return code._gauge_group


def in_gauge_group(code: OcwsCode, p: PauliOperator) -> bool:
    """True iff p lies in the gauge group up to phase (GF(2) rank test)."""
    if p.n != code.n:
        raise ValueError(f"operator length {p.n} does not match code n={code.n}")
    return code._gauge_group.basis.decompose(_symplectic_vector(p)) is not None


def gauge_decomposition(code: OcwsCode, p: PauliOperator) -> str | None:
    """Generator product equal to p up to phase (e.g. ``"S7*g1"``), or None."""
    if p.n != code.n:
        raise ValueError(f"operator length {p.n} does not match code n={code.n}")
    group = code._gauge_group
    combo = group.basis.decompose(_symplectic_vector(p))
    if combo is None:
        return None
    parts = [group.labels[k] for k in range(len(group.labels)) if combo >> k & 1]
    return "*".join(parts) if parts else "identity"


def parse_code_file(text: str) -> OcwsCode:
    """Parse the line-oriented code file format.

    Grammar: ``key = value`` lines with keys ``n``, ``r``, ``graph``,
    ``distance`` (optional) and ``word`` (repeatable); ``#`` starts a
    comment; blank lines are ignored.  ``graph`` is either ``ring`` or
    ``adjacency:`` followed by n rows of 0/1 text (``n`` and ``r`` must
    precede the adjacency block).  Words are 0/1 strings or I/Z strings of
    length n.  Round-trips exactly with write_code_file().
    """
    n: int | None = None
    r: int | None = None
    graph: Graph | None = None
    distance: int | None = None
    words: list[int] = []
    pending_rows: list[str] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if pending_rows is not None:
            pending_rows.append(line)
            if len(pending_rows) == n:
                try:
                    graph = from_adjacency(pending_rows)
                except ValueError as exc:
                    raise CodeFileError(f"bad adjacency block: {exc}") from exc
                pending_rows = None
            continue
        if "=" not in line:
            raise CodeFileError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "n":
            if n is not None:
                raise CodeFileError(f"line {lineno}: duplicate key 'n'")
            n = _parse_int(value, lineno, "n")
        elif key == "r":
            if r is not None:
                raise CodeFileError(f"line {lineno}: duplicate key 'r'")
            r = _parse_int(value, lineno, "r")
        elif key == "distance":
            if distance is not None:
                raise CodeFileError(f"line {lineno}: duplicate key 'distance'")
            distance = _parse_int(value, lineno, "distance")
        elif key == "graph":
            if graph is not None or pending_rows is not None:
                raise CodeFileError(f"line {lineno}: duplicate key 'graph'")
            if value == "ring":
                if n is None:
                    raise CodeFileError(f"line {lineno}: 'n' must precede 'graph'")
                try:
                    graph = ring_graph(n)
                except ValueError as exc:
                    raise CodeFileError(str(exc)) from exc
            elif value == "adjacency:":
                if n is None:
                    raise CodeFileError(f"line {lineno}: 'n' must precede 'graph'")
                pending_rows = []
            else:
                raise CodeFileError(
                    f"line {lineno}: graph must be 'ring' or 'adjacency:', got {value!r}"
                )
        elif key == "word":
            if n is None:
                raise CodeFileError(f"line {lineno}: 'n' must precede 'word'")
            words.append(_parse_word(value, n, lineno))
        else:
            raise CodeFileError(f"line {lineno}: unknown key {key!r}")

    if pending_rows is not None:
        raise CodeFileError(
            f"adjacency block ended after {len(pending_rows)} of {n} rows"
        )
    if n is None:
        raise CodeFileError("missing required key 'n'")
    if r is None:
        raise CodeFileError("missing required key 'r'")
    if graph is None:
        raise CodeFileError("missing required key 'graph'")
    if not words:
        raise CodeFileError("missing required key 'word'")
    try:
        return new_code(graph, r, tuple(words), distance)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from exc


def _parse_int(value: str, lineno: int, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise CodeFileError(f"line {lineno}: {key} must be an integer, got {value!r}") from None


def _parse_word(value: str, n: int, lineno: int) -> int:
    chars = set(value)
    try:
        if chars <= {"0", "1"}:
            length, bits = parse_bits(value)
        elif chars <= {"I", "Z"}:
            length, bits = parse_zstring(value)
        else:
            raise ValueError(f"word {value!r} is neither a bit string nor an I/Z string")
        if length != n:
            raise ValueError(f"word {value!r} has length {length}, expected {n}")
    except ValueError as exc:
        raise CodeFileError(f"line {lineno}: {exc}") from None
    return bits


def write_code_file(code: OcwsCode) -> str:
    """Canonical text form; parse_code_file(write_code_file(c)) == c."""
    lines = [f"n = {code.n}", f"r = {code.r}"]
    if code.n >= 3 and code.graph == ring_graph(code.n):
        lines.append("graph = ring")
    else:
        lines.append("graph = adjacency:")
        lines.extend(adjacency_lines(code.graph))
    if code.claimed_distance is not None:
        lines.append(f"distance = {code.claimed_distance}")
    for word in code.words:
        lines.append(f"word = {format_bits(word, code.n)}")
    return "\n".join(lines) + "\n"
