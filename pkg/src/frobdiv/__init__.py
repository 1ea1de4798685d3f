"""Exact toolkit for symmetric Frobenius algebras, Casimir elements,
Wedderburn data via modular lifting, integrality certification over Z,
and the semisimple Hopf-algebra divisibility theorems."""

from .algebra import (AlgebraError, DegenerateForm, FrobeniusStructure,
                      NotATraceForm, StructureConstantAlgebra,
                      TensorSquareAlgebra, VerificationReport,
                      frobenius_structure, regular_character_form)
from .groups import FiniteGroup, InvalidGroupTable, group_from_table, named_group
from .hopf import (HopfAlgebraData, HopfError, IntegralData,
                   NonIntegralFusion, NotUnimodular, QuasitriangularData,
                   RepresentationRing, class_equation_check,
                   double_projection, drinfeld_double, dual_algebra,
                   dual_hopf, factorizable_check, frobenius_divisibility_hopf,
                   group_algebra, hopf_casimir, integrals,
                   quasitriangular_verify, representation_ring,
                   schneider_check, verify_hopf, zhu_check)
from .integrality import (EquivalenceViolation, InapplicableHypothesis,
                          IntegralityCertificate, NotASymmetricHomomorphism,
                          frobenius_divisibility_verdict, is_integral_over_Z,
                          minimal_polynomial_over_Q, relative_divisibility,
                          scalar_certificate)
from .linalg import Matrix, Poly, kronecker_product, rref_and_kernel
from .modular import BadPrime, PrecisionExceeded, hensel_lift_idempotent
from .scalars import (CyclotomicField, PrimeField, QQ, Rat,
                      cyclotomic_polynomial, rational_reconstruct)
from .wedderburn import (SplitUncertified, WedderburnData,
                         casimir_square_components,
                         central_primitive_idempotents, field_roots,
                         irreducible_characters, verify_cprid_formula)

__version__ = "0.1.0"
