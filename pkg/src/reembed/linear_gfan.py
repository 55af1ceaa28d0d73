"""Groebner fans of linear ideals.

For an ideal generated by independent linear forms with coefficient matrix A,
the marked reduced Groebner bases correspond one-to-one with the non-vanishing
maximal minors of A, i.e. with the bases of the linear matroid on the columns.
Two enumeration backends sit behind one interface: exhaustive minors for small
arity, and a basis-exchange search whose cost scales with the number of bases.
"""

from __future__ import annotations

import warnings
from itertools import combinations

from . import linalg
from .field import QQ
from .poly import Poly, linear_part_of_ideal
from .ring import tvar

# columns above which gfan enumeration switches to basis-exchange search
EXHAUSTIVE_COLUMN_LIMIT = 20


class CoeffMatrix:
    """Coefficient matrix of a tuple of linear forms (rows = forms)."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        self.ring = ring
        self.rows = [[ring.field.of(x) for x in row] for row in rows]
        for row in self.rows:
            if len(row) != ring.n:
                raise ValueError("row width does not match the ring arity")

    @classmethod
    def from_forms(cls, forms, ring=None):
        forms = list(forms)
        if ring is None:
            if not forms:
                raise ValueError("cannot infer the ring from an empty tuple")
            ring = forms[0].ring
        rows = []
        for f in forms:
            if f.ring != ring:
                raise ValueError("forms from different rings")
            if not f.is_linear_form():
                raise ValueError(f"not a linear form: {f}")
            rows.append([f.coefficient(tvar(ring.n, i)) for i in range(ring.n)])
        return cls(ring, rows)

    @property
    def nrows(self):
        return len(self.rows)

    def form(self, i):
        return Poly(self.ring, {tvar(self.ring.n, j): c
                                for j, c in enumerate(self.rows[i]) if c})

    def column_submatrix(self, idx):
        return [[row[j] for j in idx] for row in self.rows]

    def row_rank(self):
        return linalg.rank(self.rows, self.ring.field)


class MarkedReducedGB:
    """A marked reduced Groebner basis of a linear ideal.

    Pairs (marker index, linear form), sorted by marker; each form has
    coefficient 1 at its marker and the submatrix at the marker columns of
    the whole system is the identity.
    """

    __slots__ = ("ring", "pairs")

    def __init__(self, ring, pairs):
        pairs = tuple(sorted(pairs, key=lambda mp: mp[0]))
        markers = [m for m, _ in pairs]
        if len(set(markers)) != len(markers):
            raise ValueError("duplicate markers")
        self.ring = ring
        self.pairs = pairs

    @property
    def markers(self):
        return tuple(m for m, _ in self.pairs)

    @property
    def marker_set(self):
        return frozenset(m for m, _ in self.pairs)

    @property
    def forms(self):
        return [f for _, f in self.pairs]

    def pair_strings(self):
        """Render each pair with its marker leading, mirroring the usual
        marked-basis notation."""
        from .ordering import elimination_for

        out = []
        for m, f in self.pairs:
            o = elimination_for(self.ring, [m])
            out.append((self.ring.labels[m], f.to_string(o)))
        return out

    def __eq__(self, other):
        return (isinstance(other, MarkedReducedGB)
                and self.ring == other.ring and self.pairs == other.pairs)

    def __hash__(self):
        return hash((self.ring, tuple((m, tuple(sorted(f.coeffs.items())))
                                      for m, f in self.pairs)))

    def __str__(self):
        inner = ", ".join(f"({m}, {s})" for m, s in self.pair_strings())
        return "{" + inner + "}"

    def __repr__(self):
        return f"MarkedReducedGB({self})"


def column_submatrix_rank_ok(A, idx):
    """True iff the selected columns of A are linearly independent."""
    idx = tuple(idx)
    if any(not 0 <= j < A.ring.n for j in idx):
        raise ValueError("column index out of range")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError("column indices must be strictly increasing")
    if len(idx) > A.nrows:
        return False
    sub = A.column_submatrix(idx)
    return linalg.rank(sub, A.ring.field) == len(idx)


def reduced_gb_for_basis(A, idx):
    """The marked reduced GB whose markers are the columns idx.

    Requires #idx == #rows and the idx-submatrix invertible; the result is
    (A_idx)^(-1) A read off as marked linear forms.
    """
    idx = tuple(idx)
    if len(idx) != A.nrows:
        raise ValueError("need exactly one column per row")
    sub = A.column_submatrix(idx)
    reduced = linalg.solve_left_inverse_times(sub, A.rows, A.ring.field)
    ring = A.ring
    pairs = []
    for r, row in enumerate(reduced):
        form = Poly(ring, {tvar(ring.n, j): c for j, c in enumerate(row) if c})
        pairs.append((idx[r], form))
    return MarkedReducedGB(ring, pairs)


def _seed_basis(A):
    reduced, pivots = linalg.rref(A.rows, A.ring.field)
    if len(reduced) != A.nrows:
        raise ValueError("matrix rows are linearly dependent")
    return pivots


def matroid_bases(A, method="auto", exhaustive_limit=EXHAUSTIVE_COLUMN_LIMIT):
    """All column index tuples carrying a non-vanishing maximal minor.

    method "exhaustive" scans all C(n, s) minors; "exchange" walks the
    basis-exchange graph from one seed basis, so its cost scales with the
    number of bases.  "auto" picks by column count.
    """
    n = A.ring.n
    s = A.nrows
    if s == 0:
        return [()]
    if method == "auto":
        method = "exhaustive" if n <= exhaustive_limit else "exchange"
    is_basis = _basis_tester(A)
    if method == "exhaustive":
        out = [idx for idx in combinations(range(n), s) if is_basis(idx)]
        if not out:
            raise ValueError("matrix rows are linearly dependent")
        return out
    if method != "exchange":
        raise ValueError(f"unknown enumeration method {method!r}")

    seed = _seed_basis(A)
    seen = {seed}
    rejected = set()
    queue = [seed]
    while queue:
        basis = queue.pop()
        inside = set(basis)
        for i in basis:
            for j in range(n):
                if j in inside:
                    continue
                cand = tuple(sorted((inside - {i}) | {j}))
                if cand in seen or cand in rejected:
                    continue
                if is_basis(cand):
                    seen.add(cand)
                    queue.append(cand)
                else:
                    rejected.add(cand)
    return sorted(seen)


def _basis_tester(A):
    """Column-tuple predicate; rows pre-scaled to ints over the rationals."""
    if A.ring.field == QQ:
        ints = linalg.int_scaled_rows(A.rows)

        def test(idx):
            sub = [[row[j] for j in idx] for row in ints]
            return linalg.bareiss_det_int(sub) != 0
    else:
        def test(idx):
            sub = A.column_submatrix(idx)
            return bool(linalg.det(sub, A.ring.field))
    return test


def _is_basis(A, idx):
    return _basis_tester(A)(idx)


def _prepare_matrix(forms, ring=None):
    """Coefficient matrix of an independent basis of the span of the forms."""
    forms = [f for f in forms if not f.is_zero()]
    if ring is None and forms:
        ring = forms[0].ring
    if ring is None:
        raise ValueError("cannot infer the ring from an empty tuple")
    if not forms:
        return CoeffMatrix(ring, [])
    A = CoeffMatrix.from_forms(forms, ring)
    if linalg.rank(A.rows, ring.field) != A.nrows:
        warnings.warn("linear forms are dependent; auto-reducing to a basis",
                      stacklevel=3)
        basis = linear_part_of_ideal(forms)
        A = CoeffMatrix.from_forms(basis, ring)
    return A


def gfan_linear(forms, ring=None, method="auto"):
    """The Groebner fan of the linear ideal spanned by the forms.

    One marked reduced GB per non-vanishing maximal minor, listed in
    lexicographic order of the marker index tuples.  The zero ideal has the
    one-element fan containing the empty basis.
    """
    A = _prepare_matrix(forms, ring)
    if A.nrows == 0:
        return [MarkedReducedGB(A.ring, [])]
    return [reduced_gb_for_basis(A, idx)
            for idx in matroid_bases(A, method=method)]


def ltgfan_linear(forms, ring=None, method="auto"):
    """Leading-term fan: the marker sets of gfan_linear, same order."""
    A = _prepare_matrix(forms, ring)
    if A.nrows == 0:
        return [frozenset()]
    return [frozenset(idx) for idx in matroid_bases(A, method=method)]
