"""Catalecticant matrices, the graded annihilator of a form, its Hilbert
function and length, minimal generators, and graded ideal bookkeeping.

The degree-k piece of the annihilator is the kernel of the k-th
catalecticant; its rank is the Hilbert function value h_k, and the sum of
the h_k is the length of the Artinian Gorenstein quotient algebra. With
the contraction action these statements hold in every characteristic.
"""

from dataclasses import dataclass

from .errors import (
    DegreeOutOfRangeError,
    EmptyIdealError,
    NonHomogeneousError,
    ZeroFormError,
)
from .linalg import Matrix, RowSpan
from .poly import RING_S, Form, contract, monomial_basis


def _require_homogeneous_nonzero(F: Form) -> int:
    if F.is_zero:
        raise ZeroFormError("the zero form is not a valid input")
    if not F.is_homogeneous:
        raise NonHomogeneousError("a homogeneous form is required")
    return F.degree


@dataclass(frozen=True)
class Catalecticant:
    """The matrix of the degree-k contraction pairing against one form.

    Rows are indexed by the degree e-k monomials of T, columns by the
    degree k monomials of S; the (b, a) entry is the coefficient of
    x^(a+b) in F. The kernel, read in S_k coordinates, is the degree-k
    piece of the annihilator.
    """

    k: int
    matrix: Matrix
    row_monomials: tuple
    col_monomials: tuple


def catalecticant(F: Form, k: int) -> Catalecticant:
    e = _require_homogeneous_nonzero(F)
    if not 0 <= k <= e:
        raise DegreeOutOfRangeError(f"k={k} outside [0, {e}]")
    f = F.field
    row_monomials = monomial_basis(F.nvars, e - k)
    col_monomials = monomial_basis(F.nvars, k)
    rows = []
    for b in row_monomials:
        rows.append(
            [F.terms.get(tuple(ai + bi for ai, bi in zip(a, b)), f.zero) for a in col_monomials]
        )
    return Catalecticant(k, Matrix(f, rows, ncols=len(col_monomials)), row_monomials, col_monomials)


def annihilator_graded(F: Form, k: int):
    """A basis of the degree-k piece of the annihilator, as dual forms."""
    cat = catalecticant(F, k)
    out = []
    for v in cat.matrix.kernel_basis():
        terms = {exps: c for exps, c in zip(cat.col_monomials, v)}
        out.append(Form(F.nvars, F.field, terms, RING_S))
    return out


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function of the quotient algebra and its length."""

    degree: int
    values: tuple
    length: int


def hilbert_function(F: Form) -> HilbertData:
    e = _require_homogeneous_nonzero(F)
    values = tuple(catalecticant(F, k).matrix.rank() for k in range(e + 1))
    return HilbertData(e, values, sum(values))


def _shift_row(row: dict, i: int) -> dict:
    """Multiply a sparse exponent-keyed row by the i-th variable."""
    return {
        exps[:i] + (exps[i] + 1,) + exps[i + 1 :]: c for exps, c in row.items()
    }


class GradedIdeal:
    """A homogeneous ideal given by dual-form generators, with cached
    per-degree spans of its graded pieces."""

    def __init__(self, nvars, field, generators):
        generators = list(generators)
        for g in generators:
            if g.is_zero:
                raise ZeroFormError("ideal generators must be nonzero")
            if not g.is_homogeneous:
                raise NonHomogeneousError("ideal generators must be homogeneous")
            if g.nvars != nvars or g.field != field:
                raise ValueError("generator does not match the ideal's ring")
        self.nvars = nvars
        self.field = field
        self.generators = tuple(sorted(generators, key=lambda g: g.degree))
        self._spans = []  # degree k -> RowSpan of the ideal's degree-k piece

    def degrees(self):
        return [g.degree for g in self.generators]

    def span(self, k: int) -> RowSpan:
        if k < 0:
            raise DegreeOutOfRangeError("degree must be nonnegative")
        while len(self._spans) <= k:
            j = len(self._spans)
            sp = RowSpan(self.field)
            if j > 0:
                for row in self._spans[j - 1].rows():
                    for i in range(self.nvars):
                        sp.add(_shift_row(row, i))
            for g in self.generators:
                if g.degree == j:
                    sp.add(dict(g.terms))
            self._spans.append(sp)
        return self._spans[k]

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"GradedIdeal({gens})"


def ideal_graded_dimension(I: GradedIdeal, k: int) -> int:
    """Dimension of the degree-k piece of the quotient ring S/I."""
    n_plus_1 = I.nvars
    total = len(monomial_basis(n_plus_1, k))
    return total - I.span(k).rank


def scheme_degree(I: GradedIdeal, k_max: int):
    """Degree of the scheme cut out by I, read off as the quotient's
    Hilbert-function value when it is constant over the three consecutive
    degrees ending at k_max; None when not stabilized."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if k_max < 2:
        return None
    dims = [ideal_graded_dimension(I, k) for k in (k_max - 2, k_max - 1, k_max)]
    if dims[0] == dims[1] == dims[2]:
        return dims[0]
    return None


def minimal_generators(F: Form) -> GradedIdeal:
    """Minimal generators of the annihilator, by per-degree linear algebra.

    In degree k the products of the variables with the degree k-1 piece
    span the "old" part; kernel vectors of the k-th catalecticant outside
    that span are the new minimal generators. Degrees above e+1 never
    contribute because the whole of S_{e+1} already lies in the ideal.
    """
    e = _require_homogeneous_nonzero(F)
    nvars = F.nvars
    generators = []
    prev_rows = []  # echelon rows of the annihilator's degree k-1 piece
    for k in range(1, e + 2):
        sp = RowSpan(F.field)
        for row in prev_rows:
            for i in range(nvars):
                sp.add(_shift_row(row, i))
        if k <= e:
            graded_piece = annihilator_graded(F, k)
        else:
            graded_piece = [
                Form.monomial(nvars, F.field, exps, ring=RING_S)
                for exps in monomial_basis(nvars, k)
            ]
        for g in graded_piece:
            if sp.add(dict(g.terms)):
                generators.append(g)
        prev_rows = sp.rows()
    return GradedIdeal(nvars, F.field, generators)


def max_generator_degree(I: GradedIdeal) -> int:
    if not I.generators:
        raise EmptyIdealError("the ideal has no generators")
    return max(I.degrees())


def is_in_annihilator(g: Form, F: Form) -> bool:
    """True iff the dual form contracts F to zero."""
    return contract(g, F).is_zero


def verify_apolar_ideal(I: GradedIdeal, F: Form) -> bool:
    """True iff every generator annihilates F, i.e. I is contained in the
    annihilator; the empty ideal is contained in anything."""
    return all(is_in_annihilator(g, F) for g in I.generators)
