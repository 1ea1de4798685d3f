"""Hopf-algebra layer: axioms, integrals, the Hopf Casimir element, duals,
constructors (group algebra, dual, Drinfeld double), representation ring,
and the theorem checkers (divisibility, Zhu, class equation, factorizable).

Comultiplication is stored sparsely: ``delta[j]`` is a dict mapping the
flat index i*dim + k of e_i (x) e_k to the coefficient of that term in
Delta(x_j).
"""

from __future__ import annotations

from .algebra import (StructureConstantAlgebra, TensorSquareAlgebra,
                      VerificationReport, frobenius_structure,
                      regular_character_form)
from .groups import FiniteGroup
from .integrality import (InapplicableHypothesis, relative_divisibility,
                          scalar_certificate)
from .linalg import Matrix
from .modular import EchelonSubspace
from .scalars import CyclotomicField, QQ, Rat
from .wedderburn import (WedderburnData, central_primitive_idempotents,
                         gamma_one_eigenvalue)


class HopfError(Exception):
    pass


class NotUnimodular(HopfError):
    pass


class NormalizationImpossible(HopfError):
    pass


class NonIntegralFusion(HopfError):
    pass


class HopfAlgebraData:
    def __init__(self, algebra: StructureConstantAlgebra, delta, counit,
                 antipode: Matrix, name=""):
        self.algebra = algebra
        self.delta = [dict(d) for d in delta]
        self.counit = list(counit)
        self.antipode = antipode
        self.name = name or algebra.name

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    def delta_of(self, vec):
        """Delta applied to a coefficient vector, as a sparse flat dict."""
        out = {}
        for j, c in enumerate(vec):
            if not bool(c):
                continue
            for idx, d in self.delta[j].items():
                cur = out.get(idx)
                val = c * d
                out[idx] = val if cur is None else cur + val
        return _clean(out)

    def counit_of(self, vec):
        val = self.field.zero
        for c, e in zip(vec, self.counit):
            val = val + c * e
        return val

    def antipode_of(self, vec):
        return self.antipode.apply(vec)

    def __repr__(self):
        return f"HopfAlgebraData({self.name or 'H'}, dim={self.dim})"


def _clean(d):
    return {k: v for k, v in d.items() if bool(v)}


def _add_into(out, idx, val):
    cur = out.get(idx)
    out[idx] = val if cur is None else cur + val


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------


def verify_hopf(H: HopfAlgebraData) -> VerificationReport:
    """All bialgebra and Hopf axioms, plus the involutory condition."""
    report = H.algebra.verify()
    A = H.algebra
    field = H.field
    n = H.dim
    T = TensorSquareAlgebra(A)

    # coassociativity and counit axioms, per basis element
    for j in range(n):
        dj = H.delta[j]
        left = {}
        right = {}
        for idx, c in dj.items():
            i, k = divmod(idx, n)
            for idx2, d in H.delta[i].items():
                a, b = divmod(idx2, n)
                _add_into(left, (a, b, k), c * d)
            for idx2, d in H.delta[k].items():
                b, cc = divmod(idx2, n)
                _add_into(right, (i, b, cc), c * d)
        report.record(_clean(left) == _clean(right), ("coassociativity", j))

        eps_id = [field.zero] * n
        id_eps = [field.zero] * n
        for idx, c in dj.items():
            i, k = divmod(idx, n)
            eps_id[k] = eps_id[k] + H.counit[i] * c
            id_eps[i] = id_eps[i] + H.counit[k] * c
        basis = A.basis_vec(j)
        report.record(eps_id == basis, ("counit-left", j))
        report.record(id_eps == basis, ("counit-right", j))

    # Delta and counit are algebra maps
    report.record(_clean(H.delta_of(A.unit))
                  == _clean(T.to_dict(T.unit)), ("delta-unit",))
    report.record(H.counit_of(A.unit) == field.one, ("counit-unit",))
    for i in range(n):
        di = H.delta[i]
        for j in range(n):
            prod = A.multiply(A.basis_vec(i), A.basis_vec(j))
            lhs = H.delta_of(prod)
            rhs = T.to_dict(T.mult(di, H.delta[j]))
            report.record(lhs == rhs, ("delta-multiplicative", i, j))
            eps_prod = H.counit_of(prod)
            report.record(eps_prod == H.counit[i] * H.counit[j],
                          ("counit-multiplicative", i, j))

    # antipode axiom, both sides
    for j in range(n):
        left = A.zero_vec()
        right = A.zero_vec()
        for idx, c in H.delta[j].items():
            i, k = divmod(idx, n)
            t = A.multiply(H.antipode.column(i), A.basis_vec(k))
            left = [x + c * y for x, y in zip(left, t)]
            t = A.multiply(A.basis_vec(i), H.antipode.column(k))
            right = [x + c * y for x, y in zip(right, t)]
        target = [H.counit[j] * u for u in A.unit]
        report.record(left == target, ("antipode-left", j))
        report.record(right == target, ("antipode-right", j))

    s2 = H.antipode * H.antipode
    report.record(s2 == Matrix.identity(field, n), ("involutory",))
    return report


# ---------------------------------------------------------------------------
# integrals
# ---------------------------------------------------------------------------


class IntegralData:
    """Two-sided integral Lambda with <eps, Lambda> = dim H, the form
    lambda = chi_reg / dim, and Lambda0 = Lambda / dim."""

    def __init__(self, Lambda, lam, Lambda0):
        self.Lambda = Lambda
        self.lam = lam
        self.Lambda0 = Lambda0


def integrals(H: HopfAlgebraData) -> IntegralData:
    A = H.algebra
    field = H.field
    n = H.dim
    space = [[field.one if i == j else field.zero for j in range(n)]
             for i in range(n)]
    for h in range(n):
        op = A.left_mult(A.basis_vec(h)) - Matrix.identity(field, n).scale(
            H.counit[h])
        images = Matrix.from_columns(field, [op.apply(v) for v in space])
        ker = images.kernel()
        new_space = []
        for coeffs in ker:
            v = [field.zero] * n
            for c, w in zip(coeffs, space):
                if bool(c):
                    v = [a + c * b for a, b in zip(v, w)]
            new_space.append(v)
        space = new_space
        if not space:
            raise NormalizationImpossible("no nonzero left integral")
    if len(space) != 1:
        raise HopfError(f"left integral space has dimension {len(space)}")
    raw = space[0]
    for h in range(n):
        want = [H.counit[h] * x for x in raw]
        if A.multiply(raw, A.basis_vec(h)) != want:
            raise NotUnimodular(f"left integral is not right at basis {h}")
    s = H.counit_of(raw)
    if not bool(s):
        raise NormalizationImpossible("<eps, Lambda> = 0")
    scale = field.from_rat(Rat(n)) / s
    Lambda = [scale * x for x in raw]

    inv_dim = field.from_rat(Rat(1, n))
    lam = [inv_dim * c for c in A.regular_character()]
    if A.apply_form(lam, Lambda) != field.one:
        raise HopfError("<lambda, Lambda> != 1")
    if A.apply_form(lam, A.unit) != field.one:
        raise HopfError("<lambda, 1> != 1")
    # lambda is a two-sided integral of H*
    for i0 in range(n):
        left = [field.zero] * n
        right = [field.zero] * n
        for k in range(n):
            for idx, c in H.delta[k].items():
                i, j = divmod(idx, n)
                if i == i0:
                    left[k] = left[k] + c * lam[j]
                if j == i0:
                    right[k] = right[k] + c * lam[i]
        want = [A.unit[i0] * x for x in lam]
        if left != want or right != want:
            raise HopfError("lambda is not a two-sided integral of the dual")
    Lambda0 = [inv_dim * x for x in Lambda]
    return IntegralData(Lambda, lam, Lambda0)


# ---------------------------------------------------------------------------
# Hopf Casimir element
# ---------------------------------------------------------------------------


def hopf_casimir(H: HopfAlgebraData, I: IntegralData):
    """The Casimir element of (H, lambda) from the integral, in all four
    antipode placements, cross-checked against the dual-basis construction;
    also asserts Gamma^lambda(1) = dim 1 and Gamma^Lambda(eps) = eps."""
    A = H.algebra
    field = H.field
    n = H.dim
    dL = H.delta_of(I.Lambda)
    S = H.antipode

    def build(first_antipode, swap):
        out = [field.zero] * (n * n)
        for idx, c in dL.items():
            i, j = divmod(idx, n)
            if first_antipode:
                col = S.column(i)
                for r in range(n):
                    if bool(col[r]):
                        pos = (j * n + r) if swap else (r * n + j)
                        out[pos] = out[pos] + c * col[r]
            else:
                col = S.column(j)
                for r in range(n):
                    if bool(col[r]):
                        pos = (r * n + i) if swap else (i * n + r)
                        out[pos] = out[pos] + c * col[r]
        return out

    c1 = build(True, False)    # S(Lambda_1) (x) Lambda_2
    c2 = build(True, True)     # Lambda_2 (x) S(Lambda_1)
    c3 = build(False, True)    # S(Lambda_2) (x) Lambda_1
    c4 = build(False, False)   # Lambda_1 (x) S(Lambda_2)
    if not (c1 == c2 == c3 == c4):
        raise HopfError("four Casimir expressions disagree")

    frob = frobenius_structure(A, I.lam)
    if frob.casimir != c1:
        raise HopfError("integral Casimir differs from the dual-basis one")
    dim_scalar = field.from_rat(Rat(n))
    if frob.gamma_one() != [dim_scalar * u for u in A.unit]:
        raise HopfError("Gamma^lambda(1) != dim H")

    dual = dual_algebra(H)
    dual_frob = frobenius_structure(dual, I.Lambda)
    if dual_frob.gamma_one() != dual.unit:
        raise HopfError("Gamma^Lambda(eps) != 1")
    return c1


# ---------------------------------------------------------------------------
# duals and constructors
# ---------------------------------------------------------------------------


def dual_algebra(H: HopfAlgebraData) -> StructureConstantAlgebra:
    """H* with the convolution product, on the dual basis."""
    n = H.dim
    table = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for idx, c in H.delta[k].items():
            i, j = divmod(idx, n)
            table[i][j][k] = c
    return StructureConstantAlgebra(H.field, n, table, list(H.counit),
                                    name=(H.name + "*") if H.name else "dual")


def dual_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    A = H.algebra
    n = H.dim
    dual = dual_algebra(H)
    delta = [dict() for _ in range(n)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in A.table[i][j].items():
                _add_into(delta[k], i * n + j, c)
    counit = list(A.unit)
    return HopfAlgebraData(dual, [_clean(d) for d in delta], counit,
                           H.antipode.transpose(),
                           name=(H.name + "*") if H.name else "dual")


def group_algebra(G: FiniteGroup, field=None, conductor=None):
    """kG with the group-like Hopf structure."""
    if field is None:
        field = (CyclotomicField(conductor) if conductor and conductor > 1
                 else QQ)
    n = G.order
    table = [[{G.table[i][j]: field.one} for j in range(n)]
             for i in range(n)]
    unit = [field.one if i == G.identity else field.zero for i in range(n)]
    A = StructureConstantAlgebra(field, n, table, unit, name=f"k[{G.name}]")
    delta = [{j * n + j: field.one} for j in range(n)]
    counit = [field.one] * n
    S = Matrix.from_columns(field, [
        [field.one if i == G.inverse[j] else field.zero for i in range(n)]
        for j in range(n)])
    return HopfAlgebraData(A, delta, counit, S, name=f"k[{G.name}]")


def drinfeld_double(G: FiniteGroup, field=None, conductor=None,
                    verify=True):
    """D(G) on the basis delta_x (x) g (flat index x*|G| + g), with its
    canonical R-matrix.  Returns (HopfAlgebraData, QuasitriangularData)."""
    if field is None:
        field = (CyclotomicField(conductor or G.exponent)
                 if (conductor or G.exponent) > 1 else QQ)
    m = G.order
    n = m * m
    one, zero = field.one, field.zero
    inv = G.inverse
    tbl = G.table

    def idx(x, g):
        return x * m + g

    table = [[{} for _ in range(n)] for _ in range(n)]
    for x in range(m):
        for g in range(m):
            a = idx(x, g)
            for y in range(m):
                if tbl[tbl[g][y]][inv[g]] != x:
                    continue
                for h in range(m):
                    table[a][idx(y, h)][idx(x, tbl[g][h])] = one
    e = G.identity
    unit = [zero] * n
    # 1 = sum_x delta_x (x) e
    for x in range(m):
        unit[idx(x, e)] = one
    A = StructureConstantAlgebra(field, n, table, unit, name=f"D({G.name})")

    delta = [dict() for _ in range(n)]
    counit = [zero] * n
    scols = []
    for x in range(m):
        for g in range(m):
            a = idx(x, g)
            for u in range(m):
                v = tbl[inv[u]][x]
                delta[a][idx(u, g) * n + idx(v, g)] = one
            counit[a] = one if x == e else zero
    for j in range(n):
        x, g = divmod(j, m)
        col = [zero] * n
        col[idx(tbl[tbl[inv[g]][inv[x]]][g], inv[g])] = one
        scols.append(col)
    S = Matrix.from_columns(field, scols)
    H = HopfAlgebraData(A, delta, counit, S, name=f"D({G.name})")

    R = [zero] * (n * n)
    for g in range(m):
        for y in range(m):
            R[idx(g, e) * n + idx(y, g)] = one
    Q = quasitriangular_verify(H, R) if verify else None
    return H, Q


def double_projection(G: FiniteGroup, double: HopfAlgebraData,
                      target: HopfAlgebraData) -> Matrix:
    """The surjection D(G) ->> kG, delta_x (x) g -> [x = e] g, verified to
    be a map of Hopf algebras."""
    m = G.order
    field = double.field
    cols = []
    for x in range(m):
        for g in range(m):
            col = [field.zero] * m
            if x == G.identity:
                col[g] = field.one
            cols.append(col)
    phi = Matrix.from_columns(field, cols)
    _verify_hopf_map(double, target, phi)
    return phi


def _verify_hopf_map(H1, H2, phi: Matrix):
    A1, A2 = H1.algebra, H2.algebra
    if phi.apply(A1.unit) != A2.unit:
        raise HopfError("map does not preserve the unit")
    n1, n2 = A1.dim, A2.dim
    for i in range(n1):
        for j in range(n1):
            lhs = phi.apply(A1.multiply(A1.basis_vec(i), A1.basis_vec(j)))
            rhs = A2.multiply(phi.column(i), phi.column(j))
            if lhs != rhs:
                raise HopfError(f"map not multiplicative at ({i},{j})")
    for j in range(n1):
        if H1.counit[j] != H2.counit_of(phi.column(j)):
            raise HopfError(f"map does not preserve the counit at {j}")
        lhs = {}
        for idx, c in H1.delta[j].items():
            a, b = divmod(idx, n1)
            pa, pb = phi.column(a), phi.column(b)
            for r in range(n2):
                if bool(pa[r]):
                    for s in range(n2):
                        if bool(pb[s]):
                            _add_into(lhs, r * n2 + s, c * pa[r] * pb[s])
        if _clean(lhs) != H2.delta_of(phi.column(j)):
            raise HopfError(f"map does not preserve comultiplication at {j}")
        if phi.apply(H1.antipode.column(j)) != H2.antipode_of(phi.column(j)):
            raise HopfError(f"map does not preserve the antipode at {j}")


# ---------------------------------------------------------------------------
# representation ring and character map
# ---------------------------------------------------------------------------


class RepresentationRing:
    """R_k(H) on the basis of irreducible characters inside H*.

    ``ring`` is the StructureConstantAlgebra with the fusion constants,
    ``delta_form`` is the form [V] -> dim V^H, ``chi_matrix`` embeds the
    ring into H* (columns are character vectors), ``dual_index[s]`` is the
    index of S* with chi_{S*} = chi_S o antipode.
    """

    def __init__(self, ring, fusion, delta_form, chi_matrix, dual_index):
        self.ring = ring
        self.fusion = fusion
        self.delta_form = delta_form
        self.chi_matrix = chi_matrix
        self.dual_index = dual_index


def representation_ring(H: HopfAlgebraData, W: WedderburnData,
                        I: IntegralData) -> RepresentationRing:
    field = H.field
    n = H.dim
    r = W.num_blocks
    chars = W.characters

    basis_rows = Matrix(field, [list(chi) for chi in chars])

    def convolve(f, g):
        out = [field.zero] * n
        for k in range(n):
            for idx, c in H.delta[k].items():
                i, j = divmod(idx, n)
                if bool(f[i]) and bool(g[j]):
                    out[k] = out[k] + c * f[i] * g[j]
        return out

    fusion = [[None] * r for _ in range(r)]
    table = [[{} for _ in range(r)] for _ in range(r)]
    mat = basis_rows.transpose()
    for s in range(r):
        for t in range(r):
            prod = convolve(chars[s], chars[t])
            coeffs = mat.solve(prod)
            if coeffs is None:
                raise NonIntegralFusion("character product leaves the "
                                        "character span")
            ints = []
            for c in coeffs:
                if not field.is_rational(c):
                    raise NonIntegralFusion("non-rational fusion constant")
                q = field.as_rat(c)
                if q.denominator != 1 or q < 0:
                    raise NonIntegralFusion(f"fusion constant {q} at "
                                            f"({s},{t})")
                ints.append(int(q))
            fusion[s][t] = ints
            table[s][t] = {u: field.from_rat(Rat(c))
                           for u, c in enumerate(ints) if c}

    # unit of the ring: the trivial character (fusion row acts as identity)
    unit = None
    for s in range(r):
        if all(fusion[s][t] == [1 if u == t else 0 for u in range(r)]
               for t in range(r)):
            unit = [field.one if u == s else field.zero for u in range(r)]
            break
    if unit is None:
        raise NonIntegralFusion("no unit among the characters")
    ring = StructureConstantAlgebra(field, r, table, unit,
                                    name=f"R({H.name})" if H.name else "R")

    delta_form = []
    for s in range(r):
        val = field.zero
        for c, l0 in zip(chars[s], I.Lambda0):
            val = val + c * l0
        if not field.is_rational(val):
            raise NonIntegralFusion("delta form value not rational")
        q = field.as_rat(val)
        if q.denominator != 1 or q < 0:
            raise NonIntegralFusion(f"delta([S_{s}]) = {q} not a "
                                    "nonnegative integer")
        delta_form.append(field.from_rat(q))
    if [bool(v) for v in delta_form] != [bool(u) for u in unit]:
        raise NonIntegralFusion("delta form does not pick out the trivial "
                                "character")

    chi_matrix = Matrix.from_columns(field, [list(chi) for chi in chars])

    dual_index = []
    for s in range(r):
        twisted = H.antipode.transpose().apply(chars[s])
        match = [t for t in range(r) if list(chars[t]) == twisted]
        if len(match) != 1:
            raise HopfError(f"chi_{s} o S is not an irreducible character")
        dual_index.append(match[0])
    return RepresentationRing(ring, fusion, delta_form, chi_matrix,
                              dual_index)


# ---------------------------------------------------------------------------
# theorem checkers
# ---------------------------------------------------------------------------


class HopfDivisibilityReport:
    def __init__(self, data, integral_data, verdict):
        self.data = data
        self.integral_data = integral_data
        self.verdict = verdict


def frobenius_divisibility_hopf(H: HopfAlgebraData, data=None, I=None,
                                prime=None, seed=0):
    """Full pipeline: integrals, Hopf Casimir (with all cross-checks),
    Wedderburn data, then the divisibility verdict for lambda."""
    from .integrality import frobenius_divisibility_verdict
    report = verify_hopf(H)
    if not report.passed:
        raise HopfError(f"Hopf axioms fail: {report.failures[:3]}")
    if I is None:
        I = integrals(H)
    hopf_casimir(H, I)
    frob = frobenius_structure(H.algebra, I.lam)
    if data is None:
        data = central_primitive_idempotents(H.algebra, frob, prime=prime,
                                             seed=seed)
    verdict = frobenius_divisibility_verdict(H.algebra, frob, data)
    return HopfDivisibilityReport(data, I, verdict)


class ZhuEntry:
    def __init__(self, index, degree, central, identity_ok, integral,
                 divides):
        self.index = index
        self.degree = degree
        self.central = central
        self.identity_ok = identity_ok
        self.integral = integral
        self.divides = divides


def zhu_check(H: HopfAlgebraData, W: WedderburnData, I: IntegralData,
              RR: RepresentationRing | None = None):
    """Per-irreducible check: when chi_S is central in H*, the element
    Lambda <- chi_{S*} equals e(S) dim H / d(S), has integral coefficients,
    and d(S) | dim H follows."""
    A = H.algebra
    field = H.field
    n = H.dim
    dual = dual_algebra(H)
    dL = H.delta_of(I.Lambda)
    st = H.antipode.transpose()
    out = []
    for s in range(W.num_blocks):
        chi = list(W.characters[s])
        central = dual.is_central(chi)
        if not central:
            out.append(ZhuEntry(s, W.degrees[s], False, None, None, None))
            continue
        chi_dual = st.apply(chi)
        hit = [field.zero] * n
        for idx, c in dL.items():
            i, j = divmod(idx, n)
            if bool(chi_dual[i]):
                hit[j] = hit[j] + c * chi_dual[i]
        d = W.degrees[s]
        scale = field.from_rat(Rat(n, d))
        identity_ok = hit == [scale * x for x in W.idempotents[s]]
        integral = all(scalar_certificate(field, c).integral for c in hit)
        divides = n % d == 0
        if integral and not divides:
            raise HopfError("integral hit but degree does not divide dim; "
                            "internal inconsistency")
        out.append(ZhuEntry(s, d, True, identity_ok, integral, divides))
    return out


class ClassEquationReport:
    def __init__(self, induced_dims, scalars_integral, dim):
        self.induced_dims = induced_dims
        self.scalars_integral = scalars_integral
        self.dim = dim

    @property
    def holds(self):
        return all(self.scalars_integral) and all(
            self.dim % m == 0 for m in self.induced_dims)


def class_equation_check(H: HopfAlgebraData, W: WedderburnData,
                         I: IntegralData,
                         RR: RepresentationRing | None = None,
                         prime=None, seed=0):
    """dim Ind from R_k(H) to H* divides dim H, for every irreducible of
    the representation ring; cross-checked through relative_divisibility
    along the character map, with Frobenius forms delta and Lambda0."""
    if RR is None:
        RR = representation_ring(H, W, I)
    field = H.field
    ring = RR.ring
    frob_R = frobenius_structure(ring, RR.delta_form)
    data_R = central_primitive_idempotents(ring, frob_R, prime=prime,
                                           seed=seed)
    dual = dual_algebra(H)
    frob_dual = frobenius_structure(dual, I.Lambda0)
    rep = relative_divisibility(ring, frob_R, data_R, dual, frob_dual,
                                RR.chi_matrix)
    integral = [c.integral for c in rep.certificates]
    if not all(rep.ratio_checks):
        raise HopfError("relative-divisibility ratio check failed")
    return ClassEquationReport(rep.induced_dims, integral, H.dim)


# ---------------------------------------------------------------------------
# quasitriangular structures
# ---------------------------------------------------------------------------


class QuasitriangularData:
    def __init__(self, H, R, b, phi_matrix, report):
        self.H = H
        self.R = R
        self.b = b
        self.phi_matrix = phi_matrix
        self.report = report


def quasitriangular_verify(H: HopfAlgebraData, R) -> QuasitriangularData:
    """The three quasitriangular axioms plus invertibility of R; builds
    b = tau(R) R and the matrix of Phi(f) = b1 <f, b2>."""
    A = H.algebra
    field = H.field
    n = H.dim
    T = TensorSquareAlgebra(A)
    report = VerificationReport(True)
    Rd = T.to_dict(R if not isinstance(R, dict) else T.from_dict(R))

    # invertibility: (S (x) Id)(R) is the inverse when the axioms hold;
    # verified directly as a product
    Rinv = {}
    for idx, c in Rd.items():
        i, j = divmod(idx, n)
        col = H.antipode.column(i)
        for r in range(n):
            if bool(col[r]):
                _add_into(Rinv, r * n + j, c * col[r])
    Rinv = _clean(Rinv)
    prod = T.to_dict(T.mult(Rd, Rinv))
    unit_d = T.to_dict(T.unit)
    report.record(prod == unit_d, ("R-invertible-right",))
    prod = T.to_dict(T.mult(Rinv, Rd))
    report.record(prod == unit_d, ("R-invertible-left",))

    # (eps (x) Id)(R) = 1 = (Id (x) eps)(R)
    left = A.zero_vec()
    right = A.zero_vec()
    for idx, c in Rd.items():
        i, j = divmod(idx, n)
        left = [x + c * H.counit[i] * y
                for x, y in zip(left, A.basis_vec(j))]
        right = [x + c * H.counit[j] * y
                 for x, y in zip(right, A.basis_vec(i))]
    report.record(left == A.unit, ("counit-R-left",))
    report.record(right == A.unit, ("counit-R-right",))

    # (Delta (x) Id)(R) = R13 R23 and (Id (x) Delta)(R) = R13 R12
    dR = {}
    for idx, c in Rd.items():
        i, j = divmod(idx, n)
        for idx2, d in H.delta[i].items():
            a, b2 = divmod(idx2, n)
            _add_into(dR, (a, b2, j), c * d)
    r13 = {}
    r23 = {}
    r12 = {}
    for idx, c in Rd.items():
        i, j = divmod(idx, n)
        for u, cu in enumerate(A.unit):
            if bool(cu):
                _add_into(r13, (i, u, j), c * cu)
                _add_into(r23, (u, i, j), c * cu)
                _add_into(r12, (i, j, u), c * cu)
    report.record(_clean(dR) == _mult3(A, r13, r23),
                  ("quasitriangular-delta-left",))
    idR = {}
    for idx, c in Rd.items():
        i, j = divmod(idx, n)
        for idx2, d in H.delta[j].items():
            a, b2 = divmod(idx2, n)
            _add_into(idR, (i, a, b2), c * d)
    report.record(_clean(idR) == _mult3(A, r13, r12),
                  ("quasitriangular-delta-right",))

    # tau(Delta h) R = R Delta h for every basis h
    for j in range(n):
        tau_d = {}
        for idx, c in H.delta[j].items():
            a, b2 = divmod(idx, n)
            _add_into(tau_d, b2 * n + a, c)
        lhs = T.to_dict(T.mult(_clean(tau_d), Rd))
        rhs = T.to_dict(T.mult(Rd, H.delta[j]))
        report.record(lhs == rhs, ("intertwining", j))

    b = T.mult(T.switch(T.from_dict(Rd)), T.from_dict(Rd))
    phi_cols = []
    for j in range(n):
        # Phi(delta^j) = sum_i b_{ij} x_i
        phi_cols.append([b[i * n + j] for i in range(n)])
    phi_matrix = Matrix.from_columns(field, phi_cols)
    return QuasitriangularData(H, T.from_dict(Rd), b, phi_matrix, report)


def _mult3(A, u, v):
    """Product of sparse triple tensors keyed by (i, j, k)."""
    out = {}
    table = A.table
    for (i1, j1, k1), a in u.items():
        for (i2, j2, k2), c in v.items():
            ac = a * c
            for r, c1 in table[i1][i2].items():
                for s, c2 in table[j1][j2].items():
                    f = ac * c1 * c2
                    for t, c3 in table[k1][k2].items():
                        _add_into(out, (r, s, t), f * c3)
    return _clean(out)


class FactorizableVerdict:
    def __init__(self, factorizable, rank, dim, proof_identities):
        self.factorizable = factorizable
        self.rank = rank
        self.dim = dim
        self.proof_identities = proof_identities


def factorizable_check(Q: QuasitriangularData) -> FactorizableVerdict:
    """Phi bijective <=> factorizable; also the proof identities
    <eps, b1> b2 = 1 and <eps, Phi(f)> = <f, 1>."""
    H = Q.H
    A = H.algebra
    field = H.field
    n = H.dim
    if not Q.report.passed:
        raise HopfError(f"quasitriangular axioms fail: "
                        f"{Q.report.failures[:3]}")
    rank = Q.phi_matrix.rank()
    contracted = A.zero_vec()
    for idx in range(n * n):
        c = Q.b[idx]
        if bool(c):
            i, j = divmod(idx, n)
            contracted[j] = contracted[j] + c * H.counit[i]
    ident1 = contracted == A.unit
    ident2 = all(H.counit_of(Q.phi_matrix.column(j)) == A.unit[j]
                 for j in range(n))
    return FactorizableVerdict(rank == n, rank, n, (ident1, ident2))


class SchneiderReport:
    def __init__(self, psi_checks, induced_dims, squares, scalars_integral,
                 dim):
        self.psi_checks = psi_checks      # dict of named boolean checks
        self.induced_dims = induced_dims
        self.squares = squares            # d(S)^2 in block order of Irr R
        self.scalars_integral = scalars_integral
        self.dim = dim

    @property
    def holds(self):
        return (all(self.psi_checks.values())
                and self.induced_dims == self.squares
                and all(self.scalars_integral))


def schneider_check(H: HopfAlgebraData, Q: QuasitriangularData,
                    W: WedderburnData, RR: RepresentationRing,
                    I: IntegralData, prime=None, seed=0):
    """For a factorizable H: Psi = Phi o chi embeds R_k(H) into Z(H),
    Phi(lambda) = Lambda0, and dim Ind of each irreducible of R equals
    d(S)^2, whence (dim S)^2 | dim H."""
    A = H.algebra
    field = H.field
    n = H.dim
    verdict = factorizable_check(Q)
    if not verdict.factorizable:
        raise InapplicableHypothesis("Hopf algebra is not factorizable")
    psi = Q.phi_matrix * RR.chi_matrix
    r = RR.ring.dim

    checks = {}
    checks["psi-unit"] = psi.apply(RR.ring.unit) == A.unit
    ok = True
    for s in range(r):
        for t in range(r):
            lhs = psi.apply(RR.ring.multiply(RR.ring.basis_vec(s),
                                             RR.ring.basis_vec(t)))
            rhs = A.multiply(psi.column(s), psi.column(t))
            if lhs != rhs:
                ok = False
    checks["psi-multiplicative"] = ok
    lam = I.lam
    checks["lambda-psi-is-delta"] = all(
        A.apply_form(lam, psi.column(s)) == RR.delta_form[s]
        for s in range(r))
    center = A.center_basis()
    im = EchelonSubspace(field, [psi.column(s) for s in range(r)])
    zc = EchelonSubspace(field, [list(v) for v in center])
    checks["image-is-center"] = (im.dim == zc.dim
                                 and all(zc.contains(b) for b in im.basis))
    checks["phi-lambda-is-Lambda0"] = (Q.phi_matrix.apply(lam)
                                       == list(I.Lambda0))

    frob_R = frobenius_structure(RR.ring, RR.delta_form)
    data_R = central_primitive_idempotents(RR.ring, frob_R, prime=prime,
                                           seed=seed)
    frob_H = frobenius_structure(A, lam)
    rep = relative_divisibility(RR.ring, frob_R, data_R, A, frob_H, psi)
    if not all(rep.ratio_checks):
        raise HopfError("relative-divisibility ratio check failed")
    squares = sorted(d * d for d in W.degrees)
    return SchneiderReport(checks, sorted(rep.induced_dims), squares,
                           [c.integral for c in rep.certificates], n)
