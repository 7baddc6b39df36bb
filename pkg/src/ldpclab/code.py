"""QC-LDPC code construction: rate selection, lifting, systematic encoding.

A concrete code takes the top-left region of a base graph, after
collapsing shortened systematic columns.  For the 5G table the number
of systematic base columns actually carrying bits is ``K/Z``; any
remaining systematic columns hold always-zero filler bits, contribute
nothing to the parity checks, and are removed from the lifted matrix
(the 5G rate-matching view of the same code).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .basegraph import BaseGraph

__all__ = [
    "CodeConfig",
    "CodeConfigError",
    "ParityCheckMatrix",
    "Code",
    "select_code",
    "used_base_entries",
    "lift",
    "build_code",
    "syndrome",
]


class CodeConfigError(ValueError):
    """Requested code parameters violate the base-graph dimensions."""


@dataclass(frozen=True)
class CodeConfig:
    """A lifted code instance: lifting size plus the base region used."""

    z: int
    k: int
    n: int
    n_base_cols_used: int
    n_base_rows_used: int
    punctured: int

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def n_vn(self) -> int:
        """Variable nodes including punctured (non-transmitted) ones."""
        return self.n_base_cols_used * self.z

    @property
    def n_cn(self) -> int:
        return self.n_base_rows_used * self.z

    @property
    def code_id(self) -> str:
        return f"K{self.k}-N{self.n}-Z{self.z}"


@dataclass(frozen=True)
class ParityCheckMatrix:
    """Sparse binary parity-check matrix stored as per-row column lists."""

    m: int
    n: int
    rows: tuple[np.ndarray, ...]

    @property
    def n_ones(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_degrees(self) -> np.ndarray:
        return np.array([len(r) for r in self.rows])

    def to_csr(self) -> sp.csr_matrix:
        indptr = np.cumsum([0] + [len(r) for r in self.rows])
        indices = np.concatenate(self.rows) if self.rows else np.array([], dtype=np.int64)
        data = np.ones(len(indices), dtype=np.uint8)
        return sp.csr_matrix((data, indices, indptr), shape=(self.m, self.n))


def select_code(bg: BaseGraph, k: int, n: int, z: int) -> CodeConfig:
    """Pick the base-graph region realizing a (n, k) code at lifting size z."""
    if z <= 0:
        raise CodeConfigError(f"lifting size must be positive, got {z}")
    if k % z != 0:
        raise CodeConfigError(f"K={k} is not a multiple of Z={z}")
    if (n + 2 * z) % z != 0:
        raise CodeConfigError(f"N={n} plus 2Z must be a multiple of Z={z}")
    k_b_eff = k // z
    if k_b_eff > bg.k_b:
        raise CodeConfigError(f"K={k} needs {k_b_eff} systematic base columns, graph has {bg.k_b}")
    n_cols = (n + 2 * z) // z
    n_rows = n_cols - k_b_eff
    if n_rows <= 0:
        raise CodeConfigError(f"N={n} leaves no parity rows (cols={n_cols}, kb={k_b_eff})")
    n_cols_avail = bg.n_cols - (bg.k_b - k_b_eff)
    if n_cols > n_cols_avail:
        raise CodeConfigError(f"need {n_cols} base columns, graph provides {n_cols_avail}")
    if n_rows > bg.n_rows:
        raise CodeConfigError(f"need {n_rows} base rows, graph has {bg.n_rows}")
    return CodeConfig(
        z=z,
        k=k,
        n=n,
        n_base_cols_used=n_cols,
        n_base_rows_used=n_rows,
        punctured=2 * z,
    )


def used_base_entries(bg: BaseGraph, cfg: CodeConfig) -> list[tuple[int, int, int]]:
    """Base entries of the used region, with filler columns collapsed.

    Returns (row, col, shift) with column indices renumbered after
    dropping the shortened systematic columns, sorted by (row, col).
    """
    k_b_eff = cfg.k // cfg.z
    drop = bg.k_b - k_b_eff
    out = []
    for r, c, s in bg.entries:
        if k_b_eff <= c < bg.k_b:
            continue
        c_eff = c if c < k_b_eff else c - drop
        if r < cfg.n_base_rows_used and c_eff < cfg.n_base_cols_used:
            out.append((r, c_eff, s))
    out.sort()
    return out


def lift(bg: BaseGraph, cfg: CodeConfig) -> ParityCheckMatrix:
    """Expand each used base entry into a Z x Z cyclically shifted identity."""
    z = cfg.z
    cols_per_row: list[list[int]] = [[] for _ in range(cfg.n_cn)]
    for r, c, s in used_base_entries(bg, cfg):
        s = s % z
        for i in range(z):
            cols_per_row[r * z + i].append(c * z + (i + s) % z)
    rows = tuple(np.array(sorted(cols), dtype=np.int64) for cols in cols_per_row)
    return ParityCheckMatrix(m=cfg.n_cn, n=cfg.n_vn, rows=rows)


def _gf2_inverse(mat: np.ndarray) -> np.ndarray:
    """Invert a dense binary matrix over GF(2); raises if singular."""
    m = mat.shape[0]
    a = mat.astype(np.uint8).copy()
    inv = np.eye(m, dtype=np.uint8)
    for col in range(m):
        pivots = np.nonzero(a[col:, col])[0]
        if len(pivots) == 0:
            raise CodeConfigError("parity part of H is singular over GF(2)")
        piv = col + pivots[0]
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            inv[[col, piv]] = inv[[piv, col]]
        others = np.nonzero(a[:, col])[0]
        others = others[others != col]
        a[others] ^= a[col]
        inv[others] ^= inv[col]
    return inv


class Code:
    """Immutable lifted code with a precomputed systematic encoder.

    The parity solve is a generic GF(2) elimination done once at
    construction; encoding is then two sparse/dense mat-vecs.  Shared
    freely across workers.
    """

    def __init__(self, bg: BaseGraph, cfg: CodeConfig):
        self.bg = bg
        self.cfg = cfg
        self.pcm = lift(bg, cfg)
        h = self.pcm.to_csr()
        self._h = h
        self._a = h[:, : cfg.k].tocsr()
        b = np.asarray(h[:, cfg.k :].todense(), dtype=np.uint8)
        self._b_inv = _gf2_inverse(b)
        self._b_inv_f = self._b_inv.astype(np.float32)

    @property
    def code_id(self) -> str:
        return self.cfg.code_id

    def encode(self, u: np.ndarray) -> np.ndarray:
        """Systematically encode; returns the full codeword(s).

        ``u`` is (k,) or (frames, k); output has the punctured
        positions included (length ``cfg.n_vn``).
        """
        u = np.asarray(u, dtype=np.uint8)
        single = u.ndim == 1
        if single:
            u = u[None, :]
        if u.shape[1] != self.cfg.k:
            raise CodeConfigError(f"information word length {u.shape[1]} != K={self.cfg.k}")
        s = self._a.dot(u.T.astype(np.float32)) % 2
        p = (self._b_inv_f @ s) % 2
        c = np.concatenate([u, p.T.astype(np.uint8)], axis=1)
        return c[0] if single else c

    def syndrome(self, c: np.ndarray) -> bool | np.ndarray:
        """True where H @ c = 0 over GF(2); vectorized over leading axes."""
        c = np.asarray(c, dtype=np.uint8)
        single = c.ndim == 1
        if single:
            c = c[None, :]
        if c.shape[1] != self.cfg.n_vn:
            raise CodeConfigError(f"word length {c.shape[1]} != {self.cfg.n_vn}")
        checks = self._h.dot(c.T.astype(np.float32)) % 2
        ok = ~np.any(checks, axis=0)
        return bool(ok[0]) if single else ok

    def transmit_view(self, c_full: np.ndarray) -> np.ndarray:
        """Drop the leading punctured positions of full codeword(s)."""
        c_full = np.asarray(c_full)
        if c_full.shape[-1] != self.cfg.n_vn:
            raise CodeConfigError(f"word length {c_full.shape[-1]} != {self.cfg.n_vn}")
        return c_full[..., self.cfg.punctured :]


def build_code(bg: BaseGraph, k: int, n: int, z: int) -> Code:
    return Code(bg, select_code(bg, k, n, z))


def syndrome(c: np.ndarray, pcm: ParityCheckMatrix) -> bool:
    """Standalone syndrome check against a parity-check matrix."""
    c = np.asarray(c, dtype=np.uint8)
    if c.shape != (pcm.n,):
        raise CodeConfigError(f"word length {c.shape} != ({pcm.n},)")
    return all(int(c[cols].sum()) % 2 == 0 for cols in pcm.rows)
