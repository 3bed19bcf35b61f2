"""Stabilizer tableaux and the Clifford witness state for a vertex set.

The tableau follows the Aaronson-Gottesman layout: rows ``0..n-1`` are
destabilizers and rows ``n..2n-1`` stabilizers.  A row ``(x, z, r)`` stands for
``(-1)^r * prod_j P(x_j, z_j)`` with ``P(1, 1) = Y``.  Pauli strings print with
qubit 0 leftmost, e.g. ``+XIZ``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from ._limits import check_size
from .errors import InternalCheckError
from .graphs import as_vertex_set, spanning_forest
from .ising import IsingInstance, cost

_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTERS.items()}


@dataclass(frozen=True)
class PauliOperator:
    """Hermitian Pauli operator ``sign * P_0 (x) P_1 (x) ...``."""

    x: tuple[int, ...]
    z: tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        if len(self.x) != len(self.z):
            raise ValueError("x and z bit vectors differ in length")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def n_qubits(self) -> int:
        return len(self.x)

    @classmethod
    def from_string(cls, s: str) -> "PauliOperator":
        sign = 1
        if s and s[0] in "+-":
            sign = -1 if s[0] == "-" else 1
            s = s[1:]
        try:
            bits = [_BITS[c] for c in s.upper()]
        except KeyError:
            raise ValueError(f"bad Pauli string {s!r}") from None
        return cls(tuple(b[0] for b in bits), tuple(b[1] for b in bits), sign)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliOperator":
        chars = ["I"] * n
        chars[qubit] = letter
        return cls.from_string("".join(chars))

    @classmethod
    def zz(cls, n: int, i: int, j: int) -> "PauliOperator":
        chars = ["I"] * n
        chars[i] = chars[j] = "Z"
        return cls.from_string("".join(chars))

    def to_string(self) -> str:
        body = "".join(_LETTERS[(a, b)] for a, b in zip(self.x, self.z))
        return ("+" if self.sign == 1 else "-") + body

    def __str__(self):
        return self.to_string()

    def commutes_with(self, other: "PauliOperator") -> bool:
        sym = sum(a & d ^ b & c for a, b, c, d in zip(self.x, self.z, other.x, other.z))
        return sym % 2 == 0

    def apply(self, psi: np.ndarray) -> np.ndarray:
        """Act on a statevector (qubit 0 = least significant bit)."""
        n = self.n_qubits
        idx = np.arange(1 << n)
        xmask = sum(1 << q for q in range(n) if self.x[q])
        zmask = sum(1 << q for q in range(n) if self.z[q])
        n_y = sum(a & b for a, b in zip(self.x, self.z))
        parity = np.zeros(1 << n, dtype=np.int64)
        for q in range(n):
            if zmask >> q & 1:
                parity ^= (idx >> q) & 1
        # Y = i X Z on each qubit, so P = i^{#Y} X^x Z^z
        zpsi = psi * (1 - 2 * parity)
        out = zpsi[idx ^ xmask]
        return self.sign * (1j ** n_y) * out


def _g(x1, z1, x2, z2):
    """Exponent of i picked up when multiplying single-qubit Paulis, vectorised."""
    x1 = x1.astype(np.int64)
    z1 = z1.astype(np.int64)
    x2 = x2.astype(np.int64)
    z2 = z2.astype(np.int64)
    return np.where(
        (x1 == 1) & (z1 == 1),
        z2 - x2,
        np.where(x1 == 1, z2 * (2 * x2 - 1), np.where(z1 == 1, x2 * (1 - 2 * z2), 0)),
    )


def _multiply(xa, za, ra, xb, zb, rb):
    """Product of two rows (a times b); the result must be Hermitian."""
    phase = 2 * ra + 2 * rb + int(_g(xb, zb, xa, za).sum())
    phase %= 4
    if phase % 2:
        raise InternalCheckError("product of commuting Hermitian Paulis picked up an imaginary phase")
    return xa ^ xb, za ^ zb, phase // 2


class StabilizerTableau:
    """n-qubit stabilizer state, initialised to ``|0...0>``."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"need at least one qubit, got {n}")
        self.n = n
        self.x = np.zeros((2 * n, n), dtype=np.uint8)
        self.z = np.zeros((2 * n, n), dtype=np.uint8)
        self.r = np.zeros(2 * n, dtype=np.uint8)
        for i in range(n):
            self.x[i, i] = 1
            self.z[n + i, i] = 1
        self._frozen = False

    def freeze(self) -> "StabilizerTableau":
        self._frozen = True
        for arr in (self.x, self.z, self.r):
            arr.flags.writeable = False
        return self

    def _check_mutable(self, q):
        if self._frozen:
            raise RuntimeError("tableau is frozen")
        if not 0 <= q < self.n:
            raise ValueError(f"qubit {q} out of range")

    # gate conjugation rules, phase first
    def h(self, q: int) -> "StabilizerTableau":
        self._check_mutable(q)
        self.r ^= self.x[:, q] & self.z[:, q]
        self.x[:, q], self.z[:, q] = self.z[:, q].copy(), self.x[:, q].copy()
        return self

    def s(self, q: int) -> "StabilizerTableau":
        self._check_mutable(q)
        self.r ^= self.x[:, q] & self.z[:, q]
        self.z[:, q] ^= self.x[:, q]
        return self

    def x_gate(self, q: int) -> "StabilizerTableau":
        self._check_mutable(q)
        self.r ^= self.z[:, q]
        return self

    def z_gate(self, q: int) -> "StabilizerTableau":
        self._check_mutable(q)
        self.r ^= self.x[:, q]
        return self

    def ry_half_pi(self, q: int) -> "StabilizerTableau":
        """R_Y(pi/2) up to global phase: Z then H, mapping Z -> X and X -> -Z."""
        return self.z_gate(q).h(q)

    def _row(self, k) -> PauliOperator:
        return PauliOperator(
            tuple(int(b) for b in self.x[k]), tuple(int(b) for b in self.z[k]), -1 if self.r[k] else 1
        )

    def stabilizers(self) -> list[PauliOperator]:
        return [self._row(self.n + k) for k in range(self.n)]

    def destabilizers(self) -> list[PauliOperator]:
        return [self._row(k) for k in range(self.n)]

    def generators_commute(self) -> bool:
        x = self.x[self.n :].astype(np.int64)
        z = self.z[self.n :].astype(np.int64)
        sym = (x @ z.T + z @ x.T) % 2
        return not sym.any()

    def generators_independent(self) -> bool:
        return _gf2_rank(np.hstack([self.x[self.n :], self.z[self.n :]])) == self.n

    def expectation(self, p: PauliOperator) -> int:
        """``<psi|P|psi>`` for Hermitian ``P``: one of -1, 0, +1."""
        if p.n_qubits != self.n:
            raise ValueError(f"Pauli acts on {p.n_qubits} qubits, tableau has {self.n}")
        px = np.asarray(p.x, dtype=np.uint8)
        pz = np.asarray(p.z, dtype=np.uint8)
        n = self.n
        # anticommutation with each row
        anti = ((self.x.astype(np.int64) @ pz + self.z.astype(np.int64) @ px) % 2).astype(bool)
        if anti[n:].any():
            return 0
        # P commutes with the whole stabilizer group, so P = +/- prod of the
        # stabilizers whose destabilizer partner anticommutes with P
        acc_x = np.zeros(n, dtype=np.uint8)
        acc_z = np.zeros(n, dtype=np.uint8)
        acc_r = 0
        for k in np.nonzero(anti[:n])[0]:
            acc_x, acc_z, acc_r = _multiply(acc_x, acc_z, acc_r, self.x[n + k], self.z[n + k], int(self.r[n + k]))
        if not (np.array_equal(acc_x, px) and np.array_equal(acc_z, pz)):
            raise InternalCheckError("commuting Pauli is not in the stabilizer group")
        own = 0 if p.sign == 1 else 1
        return 1 if acc_r == own else -1


def _gf2_rank(m: np.ndarray) -> int:
    m = m.copy().astype(np.uint8)
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r, c]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(rows):
            if r != rank and m[r, c]:
                m[r] ^= m[rank]
        rank += 1
    return rank


def pauli_expectation(t: StabilizerTableau, p: PauliOperator) -> int:
    return t.expectation(p)


def hamiltonian_terms(inst: IsingInstance) -> list[tuple[str, tuple[int, ...], Fraction, PauliOperator]]:
    """``(label, qubits, coefficient, operator)`` for every term of H.

    H = sum of ``-coefficient * operator``; labels look like ``Z0Z1`` and ``X2``.
    """
    n = inst.n
    terms = []
    for (i, j), w in zip(inst.graph.edges, inst.edge_weight_list):
        terms.append((f"Z{i}Z{j}", (i, j), w, PauliOperator.zz(n, i, j)))
    for i, w in enumerate(inst.vertex_weight_list):
        terms.append((f"X{i}", (i,), w, PauliOperator.single(n, i, "X")))
    return terms


@dataclass
class CliffordWitness:
    tableau: StabilizerTableau
    vertex_set: frozenset[int]
    term_expectations: dict[str, int]
    energy: Fraction
    forest: frozenset = field(default_factory=frozenset)

    def required_operators(self) -> list[PauliOperator]:
        """Spanning-forest ZZ terms plus X on every unselected qubit."""
        n = self.tableau.n
        ops = [PauliOperator.zz(n, i, j) for i, j in sorted(self.forest)]
        ops += [PauliOperator.single(n, q, "X") for q in range(n) if q not in self.vertex_set]
        return ops

    def to_dict(self) -> dict:
        return {
            "vertex_set": sorted(self.vertex_set),
            "generators": [p.to_string() for p in self.tableau.stabilizers()],
            "term_expectations": dict(self.term_expectations),
            "energy": float(self.energy),
            "energy_exact": str(self.energy),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def build_witness(inst: IsingInstance, v: Iterable[int]) -> CliffordWitness:
    """Stabilizer state whose energy equals ``cost(inst, v)``.

    Start from ``|0...0>`` and rotate every qubit outside ``v`` by R_Y(pi/2).
    """
    v = as_vertex_set(v, inst.n)
    t = StabilizerTableau(inst.n)
    for q in range(inst.n):
        if q not in v:
            t.ry_half_pi(q)
    t.freeze()
    expectations = {}
    energy = Fraction(0)
    for label, _, w, op in hamiltonian_terms(inst):
        e = t.expectation(op)
        expectations[label] = e
        energy -= w * e
    witness = CliffordWitness(t, v, expectations, energy, spanning_forest(inst.graph, v))
    if energy != cost(inst, v):
        raise InternalCheckError(f"witness energy {energy} differs from cost {cost(inst, v)}")
    for op in witness.required_operators():
        if t.expectation(op) != 1:
            raise InternalCheckError(f"{op} is not in the stabilizer group of the witness")
    return witness


@dataclass
class ExclusionReport:
    zx_pairs_ok: bool
    sametime_ok: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.zx_pairs_ok and self.sametime_ok


def verify_exclusions(t: StabilizerTableau, inst: IsingInstance) -> ExclusionReport:
    """Check the ZZ/X exclusion rules on a tableau.

    ``zx_pairs_ok``: no edge term Z_iZ_j and X_k with k in {i, j} are both +/-1.
    ``sametime_ok``: a stabilized X_j forces every incident ZZ to 0, and a
    stabilized Z_iZ_j forces X_i and X_j to 0.
    """
    n = inst.n
    xs = [t.expectation(PauliOperator.single(n, q, "X")) for q in range(n)]
    zzs = {e: t.expectation(PauliOperator.zz(n, *e)) for e in inst.graph.edges}
    violations = []
    pairs_ok = True
    for (i, j), zz in zzs.items():
        for k in (i, j):
            if zz != 0 and xs[k] != 0:
                pairs_ok = False
                violations.append(f"Z{i}Z{j} and X{k} are both +/-1")
    sametime_ok = True
    adj = inst.graph.neighbors()
    for q in range(n):
        if xs[q] != 0:
            bad = [w for w in adj[q] if zzs[(min(q, w), max(q, w))] != 0]
            if bad:
                sametime_ok = False
                violations.append(f"X{q} stabilized but ZZ on {q}-{bad} nonzero")
    for (i, j), zz in zzs.items():
        if zz != 0 and (xs[i] != 0 or xs[j] != 0):
            sametime_ok = False
            violations.append(f"Z{i}Z{j} stabilized but X{i} or X{j} nonzero")
    return ExclusionReport(pairs_ok, sametime_ok, violations)


def statevector_oracle(t: StabilizerTableau, seed: int = 0) -> np.ndarray:
    """Dense statevector fixed by every stabilizer generator.

    Projects a seeded random vector with ``prod_k (I + S_k) / 2``.  The result
    is defined up to global phase; it is normalised and rotated so that its
    largest amplitude is real and positive.
    """
    check_size(t.n, 12, "statevector_oracle")
    rng = np.random.default_rng(seed)
    dim = 1 << t.n
    for _ in range(8):
        psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        for p in t.stabilizers():
            psi = 0.5 * (psi + p.apply(psi))
        norm = np.linalg.norm(psi)
        if norm > 1e-6:
            psi = psi / norm
            k = int(np.argmax(np.abs(psi)))
            return psi * (abs(psi[k]) / psi[k])
    raise InternalCheckError("projection onto the stabilizer space vanished")


def statevector_expectation(psi: np.ndarray, p: PauliOperator) -> complex:
    return complex(np.vdot(psi, p.apply(psi)))
