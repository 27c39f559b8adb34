"""Koszul complex on the variables over R = Q/I, its homology algebra,
and cycle representatives generating degree-one homology.

Generators of K_i are e_S for strictly increasing subsets S of {1..n},
labelled ((), S) so that downstream constructions can replace the empty
tuple with a multi-index.  Elements of K are dicts {S: Polynomial}.
"""

from __future__ import annotations

import itertools
import math

from .complexes import ChainComplex, FreeModule, GradedMap
from .linalg import nullspace, rank, reduce_against, rref
from .polyring import GradedQuotientRing, Polynomial


class CycleError(ValueError):
    pass


def subsets(n: int, i: int):
    """Strictly increasing i-subsets of {1..n} in lex order."""
    return [tuple(s) for s in itertools.combinations(range(1, n + 1), i)]


def wedge_sign(i: int, S):
    """Sign of e_i ∧ e_S -> e_{sorted({i}∪S)}, or (0, None) when i ∈ S."""
    if i in S:
        return 0, None
    below = sum(1 for s in S if s < i)
    merged = tuple(sorted(S + (i,)))
    return (-1) ** below, merged


def merge_wedge(S, T):
    """Sign and result of e_S ∧ e_T; (0, None) on a repeated index."""
    sign = 1
    out = S
    for t in T:
        if t in out:
            return 0, None
        # appending e_t on the right moves it left past larger indices
        sign *= (-1) ** sum(1 for s in out if s > t)
        out = tuple(sorted(out + (t,)))
    return sign, out


class KoszulComplex:
    """K on x_1..x_n over R, with ∂(e_S) = Σ_t (−1)^{t+1} x_{s_t} e_{S∖s_t}."""

    def __init__(self, ring: GradedQuotientRing):
        self.ring = ring
        self.n = ring.nvars
        modules = {}
        for i in range(self.n + 1):
            modules[i] = FreeModule(ring, [(((), S), i) for S in subsets(self.n, i)])
        diffs = {}
        for i in range(1, self.n + 1):
            src, tgt = modules[i], modules[i - 1]
            tgt_index = {S: r for r, ((_, S), _) in enumerate(tgt.gens)}
            entries = {}
            for col, ((_, S), _) in enumerate(src.gens):
                for t, s in enumerate(S):
                    rest = S[:t] + S[t + 1:]
                    coeff = ring.variable(s - 1)
                    if t % 2:
                        coeff = -coeff
                    entries[(tgt_index[rest], col)] = coeff
            diffs[i] = GradedMap(src, tgt, entries)
        self.complex = ChainComplex(ring, modules, diffs)

    def differential_rows(self, i: int):
        """Dense matrix of ∂_i as nested lists of polynomials."""
        d = self.complex.differential(i)
        return [
            [d.entry(r, c) for c in range(d.source.rank)]
            for r in range(d.target.rank)
        ]

    # -- elements -------------------------------------------------------------
    def wedge(self, a: dict, b: dict) -> dict:
        """Wedge product of elements given as {subset: Polynomial}."""
        ring = self.ring
        out = {}
        for S, p in a.items():
            for T, q in b.items():
                sign, merged = merge_wedge(S, T)
                if sign == 0:
                    continue
                term = p * q if sign == 1 else -(p * q)
                if merged in out:
                    out[merged] = out[merged] + term
                else:
                    out[merged] = term
        return {S: q for S, q in ((S, ring.normal_form(p)) for S, p in out.items()) if not q.is_zero()}

    def apply_differential(self, elem: dict) -> dict:
        ring = self.ring
        out = {}
        for S, p in elem.items():
            for t, s in enumerate(S):
                rest = S[:t] + S[t + 1:]
                term = p * ring.variable(s - 1)
                if t % 2:
                    term = -term
                if rest in out:
                    out[rest] = out[rest] + term
                else:
                    out[rest] = term
        return {S: q for S, q in ((S, ring.normal_form(p)) for S, p in out.items()) if not q.is_zero()}


class CycleBasis:
    """Homogeneous 1-cycles z_1..z_c whose classes form a basis of H_1(K)."""

    def __init__(self, K: KoszulComplex, cycles, degrees):
        self.K = K
        self.cycles = list(cycles)  # each a list of n Polynomials
        self.degrees = list(degrees)

    def element(self, j: int) -> dict:
        """z_j as a Koszul element {(i,): Polynomial}."""
        return {
            (i + 1,): p
            for i, p in enumerate(self.cycles[j])
            if not p.is_zero()
        }


def cycles_from_generators(K: KoszulComplex) -> CycleBasis:
    """Cycle z_t for each ideal generator g_t, writing each monomial of g_t
    through its last dividing variable: m = (m / x_i)·x_i with i maximal."""
    ring = K.ring
    n = K.n
    cycles = []
    degrees = []
    for g in ring.generators:
        z = [ring.zero() for _ in range(n)]
        for m, c in g.terms.items():
            i = max(idx for idx, e in enumerate(m) if e > 0)
            reduced = list(m)
            reduced[i] -= 1
            z[i] = z[i] + Polynomial(n, ring.field, {tuple(reduced): c})
        z = [ring.normal_form(p) for p in z]
        cycles.append(z)
        degrees.append(g.degree())
    basis = CycleBasis(K, cycles, degrees)
    validate_cycles(basis)
    return basis


def _strand_coordinates(K: KoszulComplex, elem: dict, i: int, d: int):
    """Coordinate vector of a homogeneous degree-d element of K_i."""
    ring = K.ring
    f = ring.field
    module = K.complex.module(i)
    vec = []
    for (_, S), twist in module.gens:
        piece = d - twist
        if piece < 0:
            if S in elem and not elem[S].is_zero():
                raise CycleError("element has negative-degree component")
            continue
        p = elem.get(S, ring.zero())
        vec.extend(ring.nf_coeff_vector(p, piece))
    return vec


def _element_from_coordinates(K: KoszulComplex, vec, i: int, d: int) -> dict:
    ring = K.ring
    f = ring.field
    out = {}
    pos = 0
    for (_, S), twist in K.complex.module(i).gens:
        piece = d - twist
        if piece < 0:
            continue
        basis = ring.degree_piece_basis(piece)
        terms = {}
        for m in basis:
            c = vec[pos]
            pos += 1
            if not f.is_zero(c):
                terms[m] = c
        if terms:
            out[S] = Polynomial(ring.nvars, f, terms)
    return out


def validate_cycles(Z: CycleBasis):
    """Check ∂₁z_j = 0 in R, entries in m, and independence of the classes."""
    K = Z.K
    ring = K.ring
    f = ring.field
    if len(Z.cycles) != ring.codepth:
        raise CycleError(f"expected {ring.codepth} cycles, got {len(Z.cycles)}")
    for j, (z, d) in enumerate(zip(Z.cycles, Z.degrees), 1):
        for p in z:
            if p.is_zero():
                continue
            if not p.is_homogeneous(d - 1):
                raise CycleError(f"z_{j} is not homogeneous of degree {d - 1}")
            if not f.is_zero(p.constant_term()):
                raise CycleError(f"z_{j} has a unit entry")
        bdry = K.apply_differential(Z.element(j - 1))
        if bdry:
            raise CycleError(f"z_{j} is not a cycle: ∂₁z_{j} = {bdry}")
    # classes independent modulo boundaries, degree by degree
    by_degree = {}
    for j, d in enumerate(Z.degrees):
        by_degree.setdefault(d, []).append(j)
    for d, idxs in by_degree.items():
        d2 = K.complex.differential(2)
        rows, nr, nc = d2.strand_matrix(d)
        boundary_vecs = [[rows[r][c] for r in range(nr)] for c in range(nc)]
        base = rank(boundary_vecs, f) if boundary_vecs else 0
        stack = list(boundary_vecs)
        for j in idxs:
            stack.append(_strand_coordinates(K, Z.element(j), 1, d))
        if rank(stack, f) != base + len(idxs):
            raise CycleError(
                f"cycle classes of degree {d} are dependent modulo boundaries"
            )
    return True


def cycles_by_echelon(K: KoszulComplex) -> CycleBasis:
    """Deterministic extraction from scratch: ascending internal degree,
    reduced-echelon kernel basis modulo boundaries, ordered by pivot."""
    ring = K.ring
    f = ring.field
    c = ring.codepth
    found = []
    degrees = []
    d = 1
    while len(found) < c:
        if d > ring.truncation:
            raise CycleError("ran out of degrees while extracting cycles")
        d1 = K.complex.differential(1)
        rows, nr, nc = d1.strand_matrix(d)
        if nc:
            kernel = nullspace(rows, f, nc)
        else:
            kernel = []
        if kernel:
            d2 = K.complex.differential(2)
            brows, bnr, bnc = d2.strand_matrix(d)
            boundary_vecs = [[brows[r][cc] for r in range(bnr)] for cc in range(bnc)]
            red, piv = rref(boundary_vecs, f)
            fresh = []
            for v in kernel:
                v = reduce_against(v, red, piv, f)
                if any(not f.is_zero(x) for x in v):
                    fresh.append(v)
            reps, _ = rref(fresh, f)
            for v in reps:
                if len(found) >= c:
                    break
                elem = _element_from_coordinates(K, v, 1, d)
                found.append([elem.get((i + 1,), ring.zero()) for i in range(ring.nvars)])
                degrees.append(d)
        d += 1
    basis = CycleBasis(K, found, degrees)
    validate_cycles(basis)
    return basis


def cycles_from_user(K: KoszulComplex, coefficient_lists, degrees=None) -> CycleBasis:
    """User-supplied cycles (lists of n polynomials); validated before use."""
    ring = K.ring
    cycles = [[ring.normal_form(p) for p in z] for z in coefficient_lists]
    if degrees is None:
        degrees = []
        for j, z in enumerate(cycles, 1):
            degs = {p.degree() + 1 for p in z if not p.is_zero()}
            if len(degs) != 1:
                raise CycleError(f"cannot infer a degree for cycle {j}")
            degrees.append(degs.pop())
    basis = CycleBasis(K, cycles, degrees)
    validate_cycles(basis)
    return basis


def homology_dims(K: KoszulComplex, max_d: int):
    """Total dim H_i(K) for i = 0..n, summing strands up to max_d."""
    table = K.complex.homology_table(K.n, max_d)
    return [
        sum(v for (i, _), v in table.items() if i == hom)
        for hom in range(K.n + 1)
    ]


def certify_complete_intersection(K: KoszulComplex, Z: CycleBasis = None) -> dict:
    """Check that H(K) is the exterior algebra on c degree-one classes."""
    ring = K.ring
    f = ring.field
    c = ring.codepth
    checks = []
    bound = sum(g.degree() for g in ring.generators) + max(
        g.degree() for g in ring.generators
    )
    bound = min(bound, ring.truncation)
    dims = homology_dims(K, bound)
    for i in range(K.n + 1):
        expected = math.comb(c, i)
        checks.append(
            {
                "check": f"dim H_{i}(K) == C({c},{i})",
                "expected": expected,
                "actual": dims[i],
                "pass": dims[i] == expected,
            }
        )
    hilb = ring.hilbert_coefficients(bound)
    pred = ring.ci_hilbert_coefficients(bound)
    checks.append(
        {
            "check": "Hilbert series matches complete intersection prediction",
            "expected": pred,
            "actual": hilb,
            "pass": hilb == pred,
        }
    )
    if Z is not None:
        ok = _wedge_classes_independent(K, Z)
        checks.append(
            {
                "check": "wedge products of cycle classes span each H_i",
                "expected": True,
                "actual": ok,
                "pass": ok,
            }
        )
    return {"certified": all(ch["pass"] for ch in checks), "checks": checks}


def _wedge_classes_independent(K: KoszulComplex, Z: CycleBasis) -> bool:
    """Wedges z_{s_1}∧..∧z_{s_u} give independent classes in H_u for u ≤ c."""
    ring = K.ring
    f = ring.field
    c = ring.codepth
    for u in range(1, min(c, K.n) + 1):
        by_degree = {}
        for S in itertools.combinations(range(c), u):
            elem = Z.element(S[0])
            for j in S[1:]:
                elem = K.wedge(elem, Z.element(j))
            d = sum(Z.degrees[j] for j in S)
            by_degree.setdefault(d, []).append(elem)
        for d, elems in by_degree.items():
            du1 = K.complex.differential(u + 1)
            rows, nr, nc = du1.strand_matrix(d)
            boundary_vecs = [[rows[r][cc] for r in range(nr)] for cc in range(nc)]
            base = rank(boundary_vecs, f) if boundary_vecs else 0
            stack = list(boundary_vecs)
            for e in elems:
                stack.append(_strand_coordinates(K, e, u, d))
            if rank(stack, f) != base + len(elems):
                return False
    return True


def build_koszul(ring: GradedQuotientRing) -> KoszulComplex:
    return KoszulComplex(ring)
