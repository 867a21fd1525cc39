"""Inversion, stereographic compactification and bi-Lipschitz distortion estimates."""

import json as _json

from ._bilipkit import (  # noqa: F401
    BilipkitError,
    DegenerateMap,
    DomainError,
    EmptyRestriction,
    HypothesisError,
    InsufficientPoints,
    OriginError,
    ParseError,
    PoleError,
    SampledMap,
    angular_hausdorff,
    asymptotic_directions,
    beta,
    claim_lip1_bounds,
    compactify_map,
    e_E_residual,
    estimate_bilip,
    invert,
    invert_map,
    inversion_derivative_norm,
    law_of_cosines_residual,
    radial_comparability,
    registry_constant,
    registry_names,
    restrict_map,
    sample_registry_map,
    sphere_defect,
    stereo_embed,
    stereo_project,
    verify_cone_exchange,
)
from ._bilipkit import verify_json as _verify_json

__version__ = "0.1.0"


def verify(suite: str, seed: int = 0) -> dict:
    """Run a built-in verification suite and return its JSON summary as a dict."""
    return _json.loads(_verify_json(suite, seed))
