"""Integrality certification over Z and the divisibility verdicts.

An element of a finite-dimensional Q(zeta_n)-algebra is integral over Z
exactly when its monic minimal polynomial over Q has integer coefficients
(Gauss).  The minimal polynomial is computed by Krylov iteration on the
unit vector after restricting scalars to Q; the Q-structure matrix is
never materialized.
"""

from __future__ import annotations

from .linalg import Poly
from .scalars import QQ, Rat, is_integer_rat, rat_str


class InapplicableHypothesis(Exception):
    pass


class EquivalenceViolation(Exception):
    """The two sides of a certified equivalence disagree; indicates a bug."""


class NotASymmetricHomomorphism(Exception):
    pass


class ScalarCarrier:
    """The base field viewed as a one-dimensional algebra over itself."""

    def __init__(self, field):
        self.field = field
        self.dim = 1
        self.unit = [field.one]

    def mult(self, a, b):
        return [a[0] * b[0]]


class IntegralityCertificate:
    """Minimal polynomial over Q plus the integrality verdict.

    ``witness`` is (index, coefficient) for some non-integer coefficient
    when the verdict is negative.
    """

    def __init__(self, description, min_poly, integral, witness):
        self.description = description
        self.min_poly = min_poly          # ascending Rat coefficients, monic
        self.integral = integral
        self.witness = witness

    def __repr__(self):
        tag = "integral" if self.integral else "not integral"
        return f"IntegralityCertificate({self.description}: {tag})"

    def poly_strings(self):
        return [rat_str(c) for c in self.min_poly]


def _flatten(field, vec):
    out = []
    for c in vec:
        out.extend(field.to_qvec(c))
    return out


def _unflatten(field, qvec, dim):
    phi = field.phi
    return [field.from_qvec(qvec[i * phi:(i + 1) * phi]) for i in range(dim)]


def minimal_polynomial_over_Q(carrier, a):
    """Monic minimal polynomial over Q of an element, given as ascending
    Rat coefficients.  ``carrier`` needs field, dim, unit and mult."""
    field = carrier.field
    zero, one = QQ.zero, QQ.one
    # Krylov iteration seeded at the unit; rows are Q-flattened powers
    reduced = []  # (pivot, row, combination)
    vec = list(carrier.unit)
    comb = [one]
    while True:
        row = _flatten(field, vec)
        cmb = list(comb)
        for pidx, prow, pcmb in reduced:
            c = row[pidx]
            if c != zero:
                row = [x - c * y for x, y in zip(row, prow)]
                width = max(len(cmb), len(pcmb))
                cmb = [(cmb[i] if i < len(cmb) else zero)
                       - c * (pcmb[i] if i < len(pcmb) else zero)
                       for i in range(width)]
        pidx = next((i for i, x in enumerate(row) if x != zero), None)
        if pidx is None:
            lead = cmb[-1] if cmb else one
            return [c / lead for c in cmb]
        inv = one / row[pidx]
        reduced.append((pidx, [inv * x for x in row], [inv * x for x in cmb]))
        vec = carrier.mult(a, vec)
        comb = [zero] + comb


def evaluate_in_carrier(carrier, coeffs, a):
    field = carrier.field
    acc = [field.zero] * carrier.dim
    for c in reversed(coeffs):
        acc = carrier.mult(acc, a) if any(bool(x) for x in acc) else acc
        if c != QQ.zero:
            cc = field.from_rat(c)
            acc = [x + cc * u for x, u in zip(acc, carrier.unit)]
    return acc


def is_integral_over_Z(carrier, a, description="element"):
    poly = minimal_polynomial_over_Q(carrier, a)
    witness = None
    for i, c in enumerate(poly):
        if not is_integer_rat(c):
            witness = (i, c)
            break
    return IntegralityCertificate(description, poly, witness is None, witness)


def scalar_certificate(field, x, description="scalar"):
    return is_integral_over_Z(ScalarCarrier(field), [x], description)


# ---------------------------------------------------------------------------
# divisibility verdicts
# ---------------------------------------------------------------------------


class DivisibilityVerdict:
    def __init__(self, holds, gamma_one, degrees, direct, casimir_cert):
        self.holds = holds
        self.gamma_one = gamma_one        # the integer u with Gamma(1) = u 1
        self.degrees = degrees
        self.direct = direct              # list of bool, d(S) | u
        self.casimir_cert = casimir_cert

    def __repr__(self):
        return (f"DivisibilityVerdict(holds={self.holds}, "
                f"Gamma(1)={self.gamma_one}, degrees={self.degrees})")


def _gamma_one_integer(algebra, frobenius):
    field = algebra.field
    g1 = frobenius.gamma_one()
    scal = None
    for c, u in zip(g1, algebra.unit):
        if bool(u):
            scal = c / u
            break
    if scal is None or g1 != [scal * u for u in algebra.unit]:
        raise InapplicableHypothesis("Gamma(1) is not a scalar multiple "
                                     "of the unit")
    if not field.is_rational(scal):
        raise InapplicableHypothesis("Gamma(1) is not rational")
    q = field.as_rat(scal)
    if not is_integer_rat(q):
        raise InapplicableHypothesis(f"Gamma(1) = {rat_str(q)} is not a "
                                     "rational integer")
    return int(q)


def frobenius_divisibility_verdict(algebra, frobenius, data):
    """Divides-verdict with both routes computed independently: direct
    division tests d(S) | Gamma(1), and integrality of the Casimir element
    in A (x) A.  The routes must agree."""
    from .algebra import TensorSquareAlgebra
    if not all(data.split_certified):
        raise InapplicableHypothesis("non-split component present")
    u = _gamma_one_integer(algebra, frobenius)
    direct = [u % d == 0 for d in data.degrees]
    cert = is_integral_over_Z(TensorSquareAlgebra(algebra),
                              frobenius.casimir, "casimir element")
    if all(direct) != cert.integral:
        raise EquivalenceViolation(
            f"direct division {direct} vs casimir integrality "
            f"{cert.integral}")
    return DivisibilityVerdict(cert.integral, u, list(data.degrees),
                               direct, cert)


# ---------------------------------------------------------------------------
# relative divisibility along a symmetric homomorphism
# ---------------------------------------------------------------------------


class RelativeReport:
    def __init__(self, induced_dims, scalars, certificates, ratio_checks):
        self.induced_dims = induced_dims
        self.scalars = scalars
        self.certificates = certificates
        self.ratio_checks = ratio_checks

    @property
    def all_integral(self):
        return all(c.integral for c in self.certificates)


def verify_symmetric_homomorphism(A, lam, B, mu, phi):
    """phi: columns are images in B of the basis of A; must be an algebra
    map with unit to unit and mu(phi(a)b') compatible: mu o phi = lam."""
    field = A.field
    if phi.apply(A.unit) != B.unit:
        raise NotASymmetricHomomorphism("unit not preserved")
    for i in range(A.dim):
        xi = phi.column(i)
        for j in range(A.dim):
            lhs = phi.apply(A.multiply(A.basis_vec(i), A.basis_vec(j)))
            rhs = B.multiply(xi, phi.column(j))
            if lhs != rhs:
                raise NotASymmetricHomomorphism(
                    f"multiplicativity fails at basis pair ({i},{j})")
    for i in range(A.dim):
        pulled = B.apply_form(mu, phi.column(i))
        if pulled != lam[i]:
            raise NotASymmetricHomomorphism(
                f"mu o phi != lambda at basis index {i}")


def relative_divisibility(A, frob_A, data_A, B, frob_B, phi):
    """Per-block report for a homomorphism of symmetric algebras
    (A, lambda) -> (B, mu): induced dimensions, the scalars
    Gamma^mu(1)/dim Ind, their integrality certificates, and the exact
    equality Gamma^mu(1)/dim Ind = Gamma^lambda(1)_S / d(S)."""
    from .wedderburn import gamma_one_eigenvalue
    field = A.field
    verify_symmetric_homomorphism(A, frob_A.lam, B, frob_B.lam, phi)
    cas_cert = is_integral_over_Z(_tensor_square(A), frob_A.casimir,
                                  "casimir element of the source")
    if not cas_cert.integral:
        raise InapplicableHypothesis("source Casimir element is not "
                                     "integral over Z")
    g1_B = frob_B.gamma_one()
    mu_scalar = None
    for c, u in zip(g1_B, B.unit):
        if bool(u):
            mu_scalar = c / u
            break
    if g1_B != [mu_scalar * u for u in B.unit]:
        raise InapplicableHypothesis("Gamma^mu(1) is not scalar")

    induced_dims, scalars, certs, ratio_checks = [], [], [], []
    for s, e in enumerate(data_A.idempotents):
        img = phi.apply(e)
        rank = B.regular_rep(img, side="right").rank()
        d = data_A.degrees[s]
        if rank == 0 or rank % d != 0:
            raise InapplicableHypothesis(
                f"induced module of block {s} is degenerate (rank {rank})")
        dim_ind = rank // d
        scal = mu_scalar / field.from_rat(Rat(dim_ind))
        induced_dims.append(dim_ind)
        scalars.append(scal)
        certs.append(scalar_certificate(field, scal,
                                        f"Gamma^mu(1)/dim Ind block {s}"))
        gam_s = gamma_one_eigenvalue(frob_A, data_A, s)
        ratio_checks.append(
            scal == gam_s / field.from_rat(Rat(d)))
    return RelativeReport(induced_dims, scalars, certs, ratio_checks)


def _tensor_square(A):
    from .algebra import TensorSquareAlgebra
    return TensorSquareAlgebra(A)
