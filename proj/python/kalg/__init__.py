"""Exact computer algebra for the stabilizer subalgebra K of the Virasoro
algebra at the point at infinity.

Exact scalars cross the boundary as strings in the ``a/b+c/di`` textual form;
Lie elements use the ``K[n]``/``L[n]``/``C`` grammar, e.g.
``"3*K[1] - 2*K[2] + (0+1/2i)*C"``.
"""

from kalg._core import (
    bracket,
    star,
    phi,
    mbasis,
    embed_in_vir,
    project_to_k,
    vanishing_order,
    ideal_closure,
    classify_ideal,
    cocycle_reduce,
    verify_morphism,
    classify_morphism,
    l0_extend,
    gram,
    shapovalov,
    kac_det,
    ff_phi,
    reducible,
    singular_vector,
    jet_compose,
    jet_inverse,
    jet_bracket,
    jet_exp,
    chi_lambda,
    jet_of_field,
)

__all__ = [
    "bracket",
    "star",
    "phi",
    "mbasis",
    "embed_in_vir",
    "project_to_k",
    "vanishing_order",
    "ideal_closure",
    "classify_ideal",
    "cocycle_reduce",
    "verify_morphism",
    "classify_morphism",
    "l0_extend",
    "gram",
    "shapovalov",
    "kac_det",
    "ff_phi",
    "reducible",
    "singular_vector",
    "jet_compose",
    "jet_inverse",
    "jet_bracket",
    "jet_exp",
    "chi_lambda",
    "jet_of_field",
]

__version__ = "0.1.0"
