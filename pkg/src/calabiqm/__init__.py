"""Exact quantum-homology Frobenius algebras and Calabi quasimorphism
evaluation on measured Reeb trees of scalar fields on the 2-sphere."""

from .laurent import (
    NEG_INF,
    DivisionByZeroError,
    FieldElement,
    GaussianRational,
    gr,
)
from .frobenius import (
    AlgebraElement,
    BasisClass,
    FrobeniusAlgebra,
    SemisimplicityVerdict,
    builtin_algebra,
)

__version__ = "0.1.0"
