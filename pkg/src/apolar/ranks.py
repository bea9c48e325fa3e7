"""Rank theory: the generator-degree lower bound on cactus rank, the
closed-form monomial ranks, explicit apolar point schemes from roots of
unity, exact power-sum fitting, and combined machine-checked certificates.

The lower bound divides the length of the quotient algebra by the maximum
minimal generator degree. For a monomial x^(d_0..d_n) with sorted
exponents the bound is tight and equals the product of (d_i + 1) over all
but the largest exponent; when all exponents equal d, the honest rank is
(d+1)^n, certified here by an explicit decomposition over a (d+1)-th
roots-of-unity grid.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional

from .annihilator import (
    GradedIdeal,
    hilbert_function,
    max_generator_degree,
    minimal_generators,
)
from .errors import (
    AllZeroExponentsError,
    CertificateFailedError,
    DuplicatePointsError,
    NotMonomialPowersError,
    TooFewVariablesError,
    ZeroFormError,
)
from .fields import Field, primitive_root_of_unity
from .linalg import Matrix
from .poly import (
    RING_S,
    RING_T,
    Form,
    ProjectivePoint,
    coefficient_vector,
    dual_power,
    linear_power,
    monomial_basis,
)


@dataclass(frozen=True)
class RankReport:
    """Lower-bound report: length / max generator degree, exactly."""

    length: int
    max_gen_degree: int
    bound_exact: Fraction
    bound_ceiling: int
    notes: tuple = ()


def generator_degree_bound(F: Form) -> RankReport:
    """Cactus-rank lower bound from the annihilator's generator degrees."""
    hilbert = hilbert_function(F)
    d = max_generator_degree(minimal_generators(F))
    bound = Fraction(hilbert.length, d)
    return RankReport(
        length=hilbert.length,
        max_gen_degree=d,
        bound_exact=bound,
        bound_ceiling=ceil(bound),
    )


def _normalize_exponents(exponents):
    exps = sorted(d for d in exponents if d > 0)
    if not exps:
        raise AllZeroExponentsError("at least one exponent must be positive")
    if any(d < 0 for d in exponents):
        raise ValueError("exponents must be nonnegative")
    return exps


@dataclass(frozen=True)
class MonomialRankData:
    """Closed-form ranks of a monomial with sorted positive exponents."""

    exponents: tuple
    cactus_rank: int
    smoothable_rank: int
    waring_rank: Optional[int]


def monomial_rank(exponents) -> MonomialRankData:
    exps = _normalize_exponents(exponents)
    rank = 1
    for d in exps[:-1]:
        rank *= d + 1
    waring = None
    if len(set(exps)) == 1:
        waring = (exps[0] + 1) ** (len(exps) - 1)
    return MonomialRankData(tuple(exps), rank, rank, waring)


def monomial_form(exponents, field: Field) -> Form:
    """The monomial x^(d_0..d_n) with the given (positive, sorted) exponents."""
    exps = _normalize_exponents(exponents)
    return Form.monomial(len(exps), field, tuple(exps), ring=RING_T)


def monomial_apolar_ci(exponents, field: Field) -> GradedIdeal:
    """The apolar complete intersection for a monomial: the pure powers
    y_i^(d_i+1) for all exponents but the largest (sorted ascending)."""
    exps = _normalize_exponents(exponents)
    nvars = len(exps)
    if nvars < 2:
        raise TooFewVariablesError("need at least two variables with positive exponent")
    generators = []
    for i, d in enumerate(exps[:-1]):
        exp_vec = [0] * nvars
        exp_vec[i] = d + 1
        generators.append(Form.monomial(nvars, field, exp_vec, ring=RING_S))
    return GradedIdeal(nvars, field, generators)


@dataclass(frozen=True)
class CompleteIntersectionDegree:
    """Bezout degree of a pure-power complete intersection, with a flag for
    how the generator count compares to the ambient dimension:
    `finite` (n generators in P^n), `positive-dimensional` (fewer), or
    `artinian` (n+1 generators, empty in P^n)."""

    degree: int
    flag: str


def ci_degree(I: GradedIdeal) -> CompleteIntersectionDegree:
    seen_variables = set()
    degree = 1
    for g in I.generators:
        if len(g.terms) != 1:
            raise NotMonomialPowersError(f"{g} is not a pure variable power")
        exps = next(iter(g.terms))
        support = [i for i, a in enumerate(exps) if a > 0]
        if len(support) != 1:
            raise NotMonomialPowersError(f"{g} is not a pure variable power")
        if support[0] in seen_variables:
            raise NotMonomialPowersError("repeated variable among the generators")
        seen_variables.add(support[0])
        degree *= g.degree
    count = len(I.generators)
    n = I.nvars - 1
    if count == n:
        flag = "finite"
    elif count == I.nvars:
        flag = "artinian"
    else:
        flag = "positive-dimensional"
    return CompleteIntersectionDegree(degree, flag)


def smooth_apolar_points(n: int, d: int, field: Field):
    """The (d+1)^n grid points (1 : z^a1 : ... : z^an) for a primitive
    (d+1)-th root of unity z; pairwise distinct by construction. Their
    apolarity to (x0...xn)^d is certified via fitting, never assumed."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    zeta = primitive_root_of_unity(field, d + 1)
    powers = [field.pow(zeta, a) for a in range(d + 1)]
    points = []
    for assignment in itertools.product(range(d + 1), repeat=n):
        coords = [field.one] + [powers[a] for a in assignment]
        points.append(ProjectivePoint(field, coords))
    return points


@dataclass(frozen=True)
class WaringDecomposition:
    """An exact decomposition of a form over a point configuration.

    kind `power` means F = sum of coeff * (linear form)^e; kind `divided`
    uses the contraction-dual point forms instead, which certifies the
    points' apolarity to F in small characteristic where honest e-th
    powers degenerate.
    """

    points: tuple
    coefficients: tuple
    degree: int
    kind: str = "power"

    def expand(self) -> Form:
        """Re-expand the decomposition; must reproduce F exactly."""
        build = linear_power if self.kind == "power" else dual_power
        field = self.points[0].field
        nvars = self.points[0].nvars
        total = Form.zero(nvars, field, RING_T)
        for point, coeff in zip(self.points, self.coefficients):
            total = total + build(point, self.degree).scale(coeff)
        return total


def _fit(F: Form, points, build, kind: str) -> Optional[WaringDecomposition]:
    if F.is_zero:
        raise ZeroFormError("cannot fit the zero form")
    e = F.degree
    if e < 1:
        raise ValueError("degree must be at least 1")
    if len(set(points)) != len(points):
        raise DuplicatePointsError("points must be pairwise distinct")
    f = F.field
    basis = monomial_basis(F.nvars, e)
    columns = [coefficient_vector(build(p, e), basis) for p in points]
    matrix = Matrix(
        f,
        [[col[r] for col in columns] for r in range(len(basis))],
        ncols=len(points),
    )
    solution = matrix.solve(coefficient_vector(F, basis))
    if solution is None:
        return None
    return WaringDecomposition(tuple(points), tuple(solution), e, kind)


def waring_fit(F: Form, points) -> Optional[WaringDecomposition]:
    """Express F exactly as a combination of e-th powers of the points'
    linear forms, or return None when no such combination exists."""
    return _fit(F, points, linear_power, "power")


def divided_power_fit(F: Form, points) -> Optional[WaringDecomposition]:
    """Express F exactly in the contraction-dual point forms; success
    certifies that the reduced point scheme is apolar to F, in any
    characteristic."""
    return _fit(F, points, dual_power, "divided")


@dataclass(frozen=True)
class MonomialCertificate:
    """A machine-verified rank certificate for (x0*...*xn)^d."""

    n: int
    d: int
    form: Form
    rank: int
    lower_bound: RankReport
    decomposition: WaringDecomposition
    notes: tuple = ()


def monomial_rank_certificate(n: int, d: int, field: Field) -> MonomialCertificate:
    """Certify that (x0*...*xn)^d has rank exactly (d+1)^n.

    The lower bound comes from the generator-degree bound; the upper bound
    from an explicit decomposition over the roots-of-unity grid. Both
    halves are recomputed here; the certificate fails rather than assert
    an unverified value.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    target = (d + 1) ** n
    e = d * (n + 1)
    F = monomial_form([d] * (n + 1), field)

    report = generator_degree_bound(F)
    if report.bound_exact != target:
        raise CertificateFailedError(
            f"lower bound {report.bound_exact} does not equal {target}"
        )
    if report.length != (d + 1) ** (n + 1) or report.max_gen_degree != d + 1:
        raise CertificateFailedError("annihilator invariants failed for the monomial")

    points = smooth_apolar_points(n, d, field)
    if len(points) != target or len(set(points)) != target:
        raise CertificateFailedError("point grid is not reduced of the right degree")

    notes = []
    if field.characteristic == 0 or field.characteristic > e:
        decomposition = waring_fit(F, points)
        if decomposition is None:
            raise CertificateFailedError("power-sum fit over the grid is infeasible")
    else:
        # In characteristic p <= e honest e-th powers collapse under
        # Frobenius and cannot span F; the contraction-dual fit still
        # certifies apolarity of the reduced grid, which bounds the rank.
        decomposition = divided_power_fit(F, points)
        if decomposition is None:
            raise CertificateFailedError("dual-form fit over the grid is infeasible")
        notes.append(
            f"characteristic {field.characteristic} <= degree {e}: apolarity "
            "certified via contraction-dual point forms"
        )

    if decomposition.expand() != F:
        raise CertificateFailedError("re-expansion of the decomposition does not match F")

    return MonomialCertificate(
        n=n,
        d=d,
        form=F,
        rank=target,
        lower_bound=report,
        decomposition=decomposition,
        notes=tuple(notes),
    )
