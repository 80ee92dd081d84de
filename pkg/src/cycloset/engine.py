"""Truncated-series Frobenius engine.

Morphisms P_x -> P_y are R f_xy with R = k[[t]] and composition
(s f_yz)(r f_xy) = sr t^{c(x,y,z)} f_xz.  Objects are matrix factorizations
of t twisted by the automorphism: E(x,y) = (P_x + P_y, d) with d^2 = t and
d factoring through the twist maps f_{x,phi x}.  Everything is computed mod
t^K over GF(p), so a morphism is a quadruple of coefficient vectors and the
commutation constraint F d = d' F is a square linear system.

Solving the constraint directly mod t^K admits top-degree ghost solutions
that do not lift to genuine series morphisms (a coefficient whose every
occurrence in the system is shifted past t^K is unconstrained).  The engine
therefore solves at truncation 2K and truncates the basis back to K, which
kills the ghosts: their support sits in degrees >= 2K - max_shift > K.
Stable dimensions are then the genuine solution dimension minus the rank of
the span of composites through the injective envelope
E(phi^-1 x, x) + E(phi^-1 y, y).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gf
from .poset import CyclicPoset

__all__ = [
    "DegenerateObject",
    "ObjectNotInCategory",
    "StabilizationFailure",
    "ClusterObject",
    "MorphismSpace",
    "HomEngine",
]


class DegenerateObject(ValueError):
    """c(x,y,x) = 0 with x != y: no factorization theory for these."""


class ObjectNotInCategory(ValueError):
    pass


class StabilizationFailure(RuntimeError):
    """Stable dimension changed between truncation K and K+2."""


@dataclass(frozen=True)
class ClusterObject:
    x: object
    y: object
    status: str  # "nonzero" | "zero" | "nonexistent"
    ord_a: int | None = None
    ord_b: int | None = None

    @property
    def points(self) -> tuple:
        return (self.x, self.y)

    def __repr__(self) -> str:
        return f"E({self.x},{self.y})[{self.status}]"


@dataclass
class MorphismSpace:
    source: ClusterObject
    target: ClusterObject
    K: int
    prime: int
    k_dim: int
    generators: list  # R-module generators, each a (4,K) coefficient array
    stable_dim: int | None = None

    def to_dict(self) -> dict:
        mats = []
        for g in self.generators:
            p, q, r, s = (list(int(v) for v in row) for row in g)
            mats.append([[p, q], [r, s]])
        return {
            "k_dim": self.k_dim,
            "stable_dim": self.stable_dim,
            "truncation": self.K,
            "prime": self.prime,
            "generators": mats,
        }


class HomEngine:
    """Hom/Ext calculator for one poset at one truncation and characteristic."""

    def __init__(self, poset: CyclicPoset, K: int = 6, prime: int = 2,
                 check_stability: bool = True):
        if K < 4:
            raise ValueError("truncation K must be at least 4")
        self.poset = poset
        self.K = K
        self.K2 = 2 * K
        self.p = prime
        self.check_stability = check_stability
        self._sibling: HomEngine | None = None
        self._objects: dict = {}
        self._solutions: dict = {}
        self._genuine: dict = {}
        self._proj_rank: dict = {}
        self._stable: dict = {}

    # -- objects -------------------------------------------------------------

    def _norm_pair(self, x, y) -> tuple:
        carrier = self.poset.carrier
        if carrier.finite:
            return (x, y) if carrier.index(x) <= carrier.index(y) else (y, x)
        a = (x.limit, x.pos)
        b = (y.limit, y.pos)
        return (x, y) if a <= b else (y, x)

    def object(self, x, y) -> ClusterObject:
        key = self._norm_pair(x, y)
        cached = self._objects.get(key)
        if cached is not None:
            return cached
        x, y = key
        c = self.poset.c
        phi = self.poset.phi
        cxyx = c(x, y, x)
        if cxyx == 0 and x != y:
            raise DegenerateObject(f"c({x},{y},{x}) = 0: degenerate pair")
        twist = c(x, phi(x), y) + c(y, phi(y), x)
        if twist + cxyx > 1:
            obj = ClusterObject(x, y, "nonexistent")
        else:
            ord_a = c(x, phi(x), y)
            ord_b = 1 - cxyx - ord_a
            if y in (x, phi(x)) or x == phi(y):
                status = "zero"
            else:
                status = "nonzero"
            obj = ClusterObject(x, y, status, ord_a, ord_b)
        self._objects[key] = obj
        return obj

    def shift(self, A: ClusterObject) -> ClusterObject:
        """Sigma E(x,y) = E(phi^-1 y, phi^-1 x)."""
        inv = self.poset.phi_inv
        return self.object(inv(A.y), inv(A.x))

    def envelope(self, A: ClusterObject) -> tuple[ClusterObject, ClusterObject]:
        inv = self.poset.phi_inv
        return (self.object(inv(A.x), A.x), self.object(inv(A.y), A.y))

    # -- series helpers -------------------------------------------------------

    def _mul(self, f: np.ndarray, g: np.ndarray, K: int) -> np.ndarray:
        return np.convolve(f, g)[:K] % self.p

    def _tshift(self, f: np.ndarray, m: int, K: int) -> np.ndarray:
        if m == 0:
            return f[:K] % self.p
        out = np.zeros(K, dtype=np.int64)
        if m < K:
            out[m:] = f[: K - m]
        return out % self.p

    # -- hom spaces -----------------------------------------------------------

    def _require(self, A: ClusterObject):
        if A.status == "nonexistent":
            raise ObjectNotInCategory(f"{A} has no matrix factorization here")

    def _solution_basis(self, A: ClusterObject, B: ClusterObject) -> np.ndarray:
        """k-basis (echelon rows) of commuting quadruples (p,q,r,s) mod t^2K.

        The doubled truncation is working headroom only; consumers truncate
        to K through _genuine_basis.
        """
        key = (A.points, B.points)
        cached = self._solutions.get(key)
        if cached is not None:
            return cached
        self._require(A)
        self._require(B)
        K = self.K2
        c = self.poset.c
        x, y = A.points
        u, v = B.points
        # unknown layout: [p | q | r | s], p at column block 0, etc.
        # F d = d' F gives one series equation per matrix entry:
        #   q shifted by ord_a(A)+c(x,y,u)  =  r shifted by ord_b(B)+c(x,v,u)
        #   p shifted by ord_b(A)+c(y,x,u)  =  s shifted by ord_b(B)+c(y,v,u)
        #   s shifted by ord_a(A)+c(x,y,v)  =  p shifted by ord_a(B)+c(x,u,v)
        #   r shifted by ord_b(A)+c(y,x,v)  =  q shifted by ord_a(B)+c(y,u,v)
        eqs = [
            (1, A.ord_a + c(x, y, u), 2, B.ord_b + c(x, v, u)),
            (0, A.ord_b + c(y, x, u), 3, B.ord_b + c(y, v, u)),
            (3, A.ord_a + c(x, y, v), 0, B.ord_a + c(x, u, v)),
            (2, A.ord_b + c(y, x, v), 1, B.ord_a + c(y, u, v)),
        ]
        rows = np.zeros((4 * K, 4 * K), dtype=np.int64)
        for e, (blk1, s1, blk2, s2) in enumerate(eqs):
            for d in range(K):
                row = rows[e * K + d]
                if d - s1 >= 0:
                    row[blk1 * K + d - s1] += 1
                if d - s2 >= 0:
                    row[blk2 * K + d - s2] -= 1
        basis = gf.nullspace(rows, self.p)
        self._solutions[key] = basis
        return basis

    def _genuine_basis(self, A: ClusterObject, B: ClusterObject) -> np.ndarray:
        """Echelon k-basis of the morphism space mod t^K (ghosts projected out)."""
        key = (A.points, B.points)
        cached = self._genuine.get(key)
        if cached is not None:
            return cached
        wide = self._solution_basis(A, B)
        basis = gf.row_space(self._truncate(wide), self.p)
        self._genuine[key] = basis
        return basis

    def _truncate(self, rows: np.ndarray) -> np.ndarray:
        """(n, 4*K2) solution rows -> (n, 4*K) by dropping degrees >= K per block."""
        if rows.size == 0:
            return np.zeros((0, 4 * self.K), dtype=np.int64)
        return rows.reshape(len(rows), 4, self.K2)[:, :, : self.K].reshape(len(rows), -1)

    def _module_generators(self, basis: np.ndarray) -> list[np.ndarray]:
        """Reduce a k-basis (mod t^K) to R-module generators (t acts by shifting)."""
        K = self.K
        if basis.size == 0:
            return []

        def valuation(vec) -> tuple:
            m = vec.reshape(4, K)
            degs = [int(np.argmax(row != 0)) if row.any() else K for row in m]
            return (min(degs), [int(w) for w in vec])

        cands = sorted((v for v in basis), key=valuation)
        span = np.zeros((0, 4 * K), dtype=np.int64)
        gens: list[np.ndarray] = []
        for v in cands:
            if span.size and gf.in_span(v, span, self.p):
                continue
            gens.append(v.reshape(4, K))
            shifts = []
            m = v.reshape(4, K)
            for j in range(K):
                sh = np.stack([self._tshift(row, j, K) for row in m]).reshape(-1)
                if sh.any():
                    shifts.append(sh)
            span = gf.row_space(np.vstack([span, np.array(shifts)]), self.p)
        return gens

    def hom_space(self, A: ClusterObject, B: ClusterObject) -> MorphismSpace:
        basis = self._genuine_basis(A, B)
        gens = self._module_generators(basis)
        return MorphismSpace(
            source=A,
            target=B,
            K=self.K,
            prime=self.p,
            k_dim=len(basis),
            generators=gens,
            stable_dim=self.stable_hom_dim(A, B),
        )

    def compose(self, F: np.ndarray, A, B, G: np.ndarray, C, K: int | None = None) -> np.ndarray:
        """G after F for F: A -> B and G: B -> C, as (4,K) coefficient arrays."""
        if K is None:
            K = self.K
        c = self.poset.c
        x, y = A.points
        u, v = B.points
        w1, w2 = C.points
        fp, fq, fr, fs = F
        gp, gq, gr, gs = G
        out = np.zeros((4, K), dtype=np.int64)
        out[0] = (self._tshift(self._mul(gp, fp, K), c(x, u, w1), K)
                  + self._tshift(self._mul(gq, fr, K), c(x, v, w1), K)) % self.p
        out[1] = (self._tshift(self._mul(gp, fq, K), c(y, u, w1), K)
                  + self._tshift(self._mul(gq, fs, K), c(y, v, w1), K)) % self.p
        out[2] = (self._tshift(self._mul(gr, fp, K), c(x, u, w2), K)
                  + self._tshift(self._mul(gs, fr, K), c(x, v, w2), K)) % self.p
        out[3] = (self._tshift(self._mul(gr, fq, K), c(y, u, w2), K)
                  + self._tshift(self._mul(gs, fs, K), c(y, v, w2), K)) % self.p
        return out

    def _toeplitz_stack(self, rows: np.ndarray, shift: int) -> np.ndarray:
        """(n, K2) series -> (n, K2, K2) operators of 'multiply then t-shift'."""
        K2 = self.K2
        idx = np.arange(K2)[:, None] - np.arange(K2)[None, :] - shift
        valid = (idx >= 0) & (idx < K2)
        return np.where(valid, rows[:, np.clip(idx, 0, K2 - 1)], 0)

    def _batch_compose(self, Fs: np.ndarray, A, B, Gs: np.ndarray, C) -> np.ndarray:
        """All pairwise composites G_j o F_i at truncation 2K, as (n*m, 4*K2)."""
        K2 = self.K2
        c = self.poset.c
        srcs = A.points
        mids = B.points
        dsts = C.points
        out = np.zeros((len(Gs), len(Fs), 4, K2), dtype=np.int64)
        for k in range(4):
            dst, src = divmod(k, 2)
            for mid in (0, 1):
                tw = c(srcs[src], mids[mid], dsts[dst])
                T = self._toeplitz_stack(Gs[:, 2 * dst + mid], tw)
                out[:, :, k, :] += np.einsum("nde,me->nmd", T, Fs[:, 2 * mid + src])
        return (out % self.p).reshape(len(Gs) * len(Fs), 4 * K2)

    def _projective_span_rank(self, A: ClusterObject, B: ClusterObject) -> int:
        """Rank of {h o g : g: A -> Q, h: Q -> B, Q an envelope summand} mod t^K.

        Composition happens at truncation 2K so that ghost components of the
        wide bases fall off the end before the final truncation to K.
        """
        key = (A.points, B.points)
        cached = self._proj_rank.get(key)
        if cached is not None:
            return cached
        K2 = self.K2
        blocks = []
        for Q in set(self.envelope(A)):
            into = self._solution_basis(A, Q)
            outof = self._solution_basis(Q, B)
            if len(into) and len(outof):
                blocks.append(
                    self._batch_compose(
                        into.reshape(-1, 4, K2), A, Q, outof.reshape(-1, 4, K2), B
                    )
                )
        if blocks:
            rank = gf.rank(self._truncate(np.vstack(blocks)), self.p)
        else:
            rank = 0
        self._proj_rank[key] = rank
        return rank

    def _stable_dim_raw(self, A: ClusterObject, B: ClusterObject) -> int:
        key = (A.points, B.points)
        cached = self._stable.get(key)
        if cached is not None:
            return cached
        dim = len(self._genuine_basis(A, B)) - self._projective_span_rank(A, B)
        self._stable[key] = dim
        return dim

    def stable_hom_dim(self, A: ClusterObject, B: ClusterObject) -> int:
        dim = self._stable_dim_raw(A, B)
        if self.check_stability:
            if self._sibling is None:
                self._sibling = HomEngine(
                    self.poset, self.K + 2, self.p, check_stability=False
                )
            sib = self._sibling
            redo = sib._stable_dim_raw(sib.object(*A.points), sib.object(*B.points))
            if redo != dim:
                raise StabilizationFailure(
                    f"stable dim {A}->{B}: {dim} at K={self.K}, {redo} at K={self.K + 2}"
                )
        return dim

    def ext1_dim(self, A: ClusterObject, B: ClusterObject) -> int:
        return self.stable_hom_dim(A, self.shift(B))

    # -- conveniences ----------------------------------------------------------

    def object_status(self, x, y) -> str:
        return self.object(x, y).status

    def hom_dims(self, x, y, u, v) -> dict:
        A = self.object(x, y)
        B = self.object(u, v)
        space = self.hom_space(A, B)
        return {
            "k_dim": space.k_dim,
            "stable_dim": space.stable_dim,
            "ext1_dim": self.ext1_dim(A, B),
        }
