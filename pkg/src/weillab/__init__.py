"""weillab: Weil quartics of abelian surfaces over finite fields.

Classifies the isogeny classes carrying no curves of genus up to 2,
decides whether a class contains a surface with a degree-4 polarisation
(equivalently an irreducible curve of arithmetic genus 3), computes the
2-adic field data driving that decision, and evaluates point-count
intervals.  All computation is exact integer arithmetic.
"""

from .bounds import (
    BoundFamily,
    PointBounds,
    genus_bounds_on_surface,
    non_pp_bounds,
    serre_weil_interval,
    weil_restriction_bounds,
)
from .classify import (
    ClassKind,
    Family,
    PRankClass,
    WrongKind,
    classify,
    enumerate_classes,
    galois_metadata,
    p_rank_class,
)
from .core import (
    Factorisation2,
    InternalInvariantError,
    Label,
    MalformedLabel,
    NotPrimePower,
    NotWeil,
    WeilQuartic,
    base_change_quadratic,
    factor_mod_2,
    floor_2sqrt,
    is_irreducible_over_Q,
    isqrt_floor,
    make_weil_quartic,
    parse_label,
    render_label,
    squarefree_part,
)
from .records import ClassRecord, build_record, records_for_q
from .two_adic import (
    ConjugationTag,
    DegenerateDiscriminant,
    Shape2,
    Split2,
    TwoAdicData,
    fplus_discriminant,
    is_K_over_Kplus_ramified,
    shape_2_in_K,
    splitting_2_in_Kplus,
    two_adic_data,
)
from .verdict import (
    CurveConstraints,
    Genus3Verdict,
    NoSmallGenusCertificate,
    SPECIAL_Q3_WITNESS,
    curve_shape_constraints,
    degree4_polarisation_exists,
    genus3_verdict,
    no_small_genus_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BoundFamily",
    "ClassKind",
    "ClassRecord",
    "ConjugationTag",
    "CurveConstraints",
    "DegenerateDiscriminant",
    "Factorisation2",
    "Family",
    "Genus3Verdict",
    "InternalInvariantError",
    "Label",
    "MalformedLabel",
    "NoSmallGenusCertificate",
    "NotPrimePower",
    "NotWeil",
    "PRankClass",
    "PointBounds",
    "SPECIAL_Q3_WITNESS",
    "Shape2",
    "Split2",
    "TwoAdicData",
    "WeilQuartic",
    "WrongKind",
    "base_change_quadratic",
    "build_record",
    "classify",
    "curve_shape_constraints",
    "degree4_polarisation_exists",
    "enumerate_classes",
    "factor_mod_2",
    "floor_2sqrt",
    "fplus_discriminant",
    "galois_metadata",
    "genus3_verdict",
    "genus_bounds_on_surface",
    "is_K_over_Kplus_ramified",
    "is_irreducible_over_Q",
    "isqrt_floor",
    "make_weil_quartic",
    "no_small_genus_certificate",
    "non_pp_bounds",
    "p_rank_class",
    "parse_label",
    "records_for_q",
    "render_label",
    "serre_weil_interval",
    "shape_2_in_K",
    "splitting_2_in_Kplus",
    "squarefree_part",
    "two_adic_data",
    "weil_restriction_bounds",
]
