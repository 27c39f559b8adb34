"""Free modules with twists, matrices of ring elements, chain complexes.

Everything downstream (Koszul complexes, cones, the resolution) is built out
of these pieces.  Homology is computed strand by strand: a generator with
twist a contributes the standard monomials of (Q/I)_{d-a} to the internal
degree d strand, and each matrix of ring elements becomes an honest field
matrix there.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from .linalg import rank
from .polyring import GradedQuotientRing, Polynomial


def thread_count() -> int:
    env = os.environ.get("KOSZULATOR_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


class ComplexError(ValueError):
    pass


class FreeModule:
    """Finitely generated free module with labelled, internally graded gens."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: GradedQuotientRing, gens):
        self.ring = ring
        self.gens = list(gens)  # list of (label, twist)

    @property
    def rank(self) -> int:
        return len(self.gens)

    def twists(self):
        return [t for _, t in self.gens]

    def labels(self):
        return [lab for lab, _ in self.gens]

    def strand_dim(self, d: int) -> int:
        return sum(self.ring.dim_quotient(d - t) for _, t in self.gens if d - t >= 0)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.gens == other.gens

    def __repr__(self):
        return f"FreeModule(rank={self.rank})"

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def direct_sum(self, other: "FreeModule") -> "FreeModule":
        return FreeModule(self.ring, self.gens + other.gens)


class GradedMap:
    """Matrix of homogeneous ring elements between two free modules.

    entries[(i, j)] is the coefficient of target gen i in the image of
    source gen j; absent keys are zero.  Entry degrees must match the twist
    difference so the map is degree zero on the graded modules.
    """

    __slots__ = ("source", "target", "entries")

    def __init__(self, source: FreeModule, target: FreeModule, entries=None):
        self.source = source
        self.target = target
        self.entries = {}
        ring = source.ring
        if entries:
            for (i, j), p in entries.items():
                p = ring.normal_form(p)
                if p.is_zero():
                    continue
                want = source.gens[j][1] - target.gens[i][1]
                if not p.is_homogeneous(want):
                    raise ComplexError(
                        f"entry ({i},{j}) has degree {p.degree()}, expected {want}"
                    )
                self.entries[(i, j)] = p

    @classmethod
    def zero(cls, source, target):
        return cls(source, target)

    @classmethod
    def from_rows(cls, source, target, rows):
        """rows[i][j] are ring elements (target-indexed rows)."""
        entries = {}
        for i, row in enumerate(rows):
            for j, p in enumerate(row):
                if not p.is_zero():
                    entries[(i, j)] = p
        return cls(source, target, entries)

    @classmethod
    def identity(cls, module):
        one = module.ring.one()
        return cls(module, module, {(i, i): one for i in range(module.rank)})

    def entry(self, i, j) -> Polynomial:
        return self.entries.get((i, j), self.source.ring.zero())

    def column(self, j):
        """Image of source gen j as {target index: polynomial}."""
        return {i: p for (i, jj), p in self.entries.items() if jj == j}

    def is_zero(self) -> bool:
        return not self.entries

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other (self.source must be other.target)."""
        if other.target.gens != self.source.gens:
            raise ComplexError("composition shape mismatch")
        ring = self.source.ring
        acc = {}
        cols = {}
        for (i, j), p in self.entries.items():
            cols.setdefault(j, []).append((i, p))
        for (k, j), q in other.entries.items():
            for i, p in cols.get(k, ()):
                prod = p * q
                if (i, j) in acc:
                    acc[(i, j)] = acc[(i, j)] + prod
                else:
                    acc[(i, j)] = prod
        entries = {}
        for key, p in acc.items():
            p = ring.normal_form(p)
            if not p.is_zero():
                entries[key] = p
        out = GradedMap(other.source, self.target)
        out.entries = entries
        return out

    def __add__(self, other):
        if self.source.gens != other.source.gens or self.target.gens != other.target.gens:
            raise ComplexError("sum shape mismatch")
        entries = dict(self.entries)
        ring = self.source.ring
        for key, p in other.entries.items():
            s = ring.normal_form(entries.get(key, ring.zero()) + p)
            if s.is_zero():
                entries.pop(key, None)
            else:
                entries[key] = s
        out = GradedMap(self.source, self.target)
        out.entries = entries
        return out

    def __neg__(self):
        out = GradedMap(self.source, self.target)
        out.entries = {k: -p for k, p in self.entries.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, GradedMap)
            and self.source.gens == other.source.gens
            and self.target.gens == other.target.gens
            and self.entries == other.entries
        )

    def is_minimal(self) -> bool:
        """No unit entries: every entry has positive degree."""
        return all(p.degree() >= 1 for p in self.entries.values())

    # -- strand matrices -------------------------------------------------------
    def strand_matrix(self, d: int):
        """Field matrix of this map on internal degree d, rows = target strand
        basis, cols = source strand basis (gen order, then standard monomials)."""
        ring = self.source.ring
        f = ring.field
        src_blocks = []  # (gen index, twist, monomial list)
        for j, (_, t) in enumerate(self.source.gens):
            if d - t >= 0:
                src_blocks.append((j, t, ring.degree_piece_basis(d - t)))
        tgt_offsets = {}
        tgt_sizes = {}
        off = 0
        for i, (_, t) in enumerate(self.target.gens):
            if d - t >= 0:
                size = ring.dim_quotient(d - t)
                tgt_offsets[i] = off
                tgt_sizes[i] = d - t
                off += size
        nrows = off
        ncols = sum(len(b[2]) for b in src_blocks)
        cols = []
        for j, t, monos in src_blocks:
            col_entries = self.column(j)
            for m in monos:
                col = [f.zero()] * nrows
                for i, p in col_entries.items():
                    if i not in tgt_offsets:
                        continue
                    shifted = p.mul_monomial(m)
                    vec = ring.nf_coeff_vector(shifted, tgt_sizes[i])
                    o = tgt_offsets[i]
                    for r, c in enumerate(vec):
                        if not f.is_zero(c):
                            col[o + r] = f.add(col[o + r], c)
                cols.append(col)
        # transpose columns into rows
        rows = [[cols[j][i] for j in range(ncols)] for i in range(nrows)]
        return rows, nrows, ncols


class ChainComplex:
    """Non-negatively indexed complex of free modules; modules[i], and
    differentials[i] : modules[i] -> modules[i-1]."""

    def __init__(self, ring, modules, differentials, check: bool = True):
        self.ring = ring
        self.modules = dict(modules)
        self.differentials = dict(differentials)
        if check:
            for i, dmap in self.differentials.items():
                prev = self.differentials.get(i - 1)
                if prev is not None and not prev.compose(dmap).is_zero():
                    raise ComplexError(f"differential does not square to zero at {i}")

    def module(self, i) -> FreeModule:
        m = self.modules.get(i)
        return m if m is not None else FreeModule.zero(self.ring)

    def differential(self, i) -> GradedMap:
        d = self.differentials.get(i)
        if d is not None:
            return d
        return GradedMap.zero(self.module(i), self.module(i - 1))

    @property
    def top(self) -> int:
        return max(self.modules) if self.modules else 0

    def shift(self, s: int = 1) -> "ChainComplex":
        """Suspension: (Σ^s C)_i = C_{i-s} with differential times (-1)^s."""
        modules = {i + s: m for i, m in self.modules.items()}
        sign = -1 if s % 2 else 1
        diffs = {}
        for i, dmap in self.differentials.items():
            nd = dmap if sign == 1 else -dmap
            diffs[i + s] = nd
        return ChainComplex(self.ring, modules, diffs, check=False)

    def direct_sum_power(self, copies: int, label_fn) -> "ChainComplex":
        """C^{⊕copies}; label_fn(copy, label) relabels each summand's gens."""
        modules = {}
        for i, m in self.modules.items():
            gens = []
            for copy in range(copies):
                gens.extend((label_fn(copy, lab), t) for lab, t in m.gens)
            modules[i] = FreeModule(self.ring, gens)
        diffs = {}
        for i, dmap in self.differentials.items():
            src, tgt = modules[i], modules.get(i - 1) or FreeModule.zero(self.ring)
            sr, tr = dmap.source.rank, dmap.target.rank
            entries = {}
            for copy in range(copies):
                for (r, c), p in dmap.entries.items():
                    entries[(copy * tr + r, copy * sr + c)] = p
            nd = GradedMap(src, tgt)
            nd.entries = entries
            diffs[i] = nd
        return ChainComplex(self.ring, modules, diffs, check=False)

    # -- homology ---------------------------------------------------------------
    def strand_homology_dim(self, i: int, d: int) -> int:
        dim = self.module(i).strand_dim(d)
        if dim == 0:
            return 0
        r_in = _strand_rank(self.differential(i + 1), d)
        r_out = _strand_rank(self.differential(i), d)
        return dim - r_in - r_out

    def homology_table(self, max_i: int, max_d: int):
        """{(i, d): dim H_i(C)_d} over 0..max_i, 0..max_d, computed in parallel."""
        keys = [(i, d) for i in range(max_i + 1) for d in range(max_d + 1)]
        with ThreadPoolExecutor(max_workers=thread_count()) as pool:
            dims = pool.map(lambda k: self.strand_homology_dim(*k), keys)
        return dict(zip(keys, dims))


def _strand_rank(dmap: GradedMap, d: int) -> int:
    rows, nrows, ncols = dmap.strand_matrix(d)
    if nrows == 0 or ncols == 0:
        return 0
    return rank(rows, dmap.source.ring.field)


class ChainMap:
    """Degree-zero map of complexes f : C -> D given by components[i]."""

    def __init__(self, source: ChainComplex, target: ChainComplex, components, check: bool = True):
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            errs = self.chain_defect()
            if errs:
                i = errs[0]
                raise ComplexError(f"not a chain map at homological degree {i}")

    def component(self, i) -> GradedMap:
        c = self.components.get(i)
        if c is not None:
            return c
        return GradedMap.zero(self.source.module(i), self.target.module(i))

    def chain_defect(self):
        """Homological degrees where d_D f != f d_C."""
        bad = []
        degrees = set(self.source.differentials) | set(self.components)
        for i in sorted(degrees):
            lhs = self.target.differential(i).compose(self.component(i))
            rhs = self.component(i - 1).compose(self.source.differential(i))
            if lhs != rhs:
                bad.append(i)
        return bad


def compose_check(f: ChainMap, g: ChainMap) -> bool:
    """True when the composite f∘g vanishes in every homological degree."""
    if g.target is not f.source and g.target.modules != f.source.modules:
        raise ComplexError("compose_check shape mismatch")
    degs = set(f.components) | set(g.components)
    for i in degs:
        if not f.component(i).compose(g.component(i)).is_zero():
            return False
    return True


def mapping_cone(f: ChainMap) -> ChainComplex:
    """Cone of f : C -> D, cone_i = C_{i-1} ⊕ D_i with
    ∂(c, d) = (-∂_C c, f(c) + ∂_D d).  f is re-verified first."""
    if f.chain_defect():
        raise ComplexError("mapping cone of a non-chain map")
    C, D = f.source, f.target
    ring = C.ring
    top = max(C.top + 1, D.top)
    modules = {}
    for i in range(top + 1):
        m = FreeModule(ring, C.module(i - 1).gens + D.module(i).gens)
        if m.rank:
            modules[i] = m
    diffs = {}
    for i in range(1, top + 1):
        src = modules.get(i)
        if src is None:
            continue
        tgt = modules.get(i - 1) or FreeModule.zero(ring)
        cs = C.module(i - 1).rank
        ct = C.module(i - 2).rank
        entries = {}
        dC = C.differential(i - 1)
        for (r, c), p in dC.entries.items():
            entries[(r, c)] = -p
        fi = f.component(i - 1)
        for (r, c), p in fi.entries.items():
            entries[(ct + r, c)] = p
        dD = D.differential(i)
        for (r, c), p in dD.entries.items():
            key = (ct + r, cs + c)
            if key in entries:
                entries[key] = entries[key] + p
            else:
                entries[key] = p
        nd = GradedMap(src, tgt)
        nd.entries = {k: p for k, p in entries.items() if not p.is_zero()}
        diffs[i] = nd
    return ChainComplex(ring, modules, diffs, check=False)
