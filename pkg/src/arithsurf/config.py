"""Run configuration shared by the law verifiers, the CLI and the tests."""

import os
from dataclasses import dataclass

ENV_PREC_BITS = "ARITHSURF_PREC_BITS"


@dataclass(frozen=True)
class RunConfig:
    prec_bits: int = 128  # mpmath working precision for numeric sums
    start_precision: int = 20  # initial p-adic digit count for the ladder
    tolerance: float = 1e-6  # pass threshold for numeric law sums
    seed: int = 0  # seeds mod-p factorization tie-breaking and sampling
    window: int = 24  # default lattice window size for pairings


def default_config(**overrides):
    """RunConfig with prec_bits optionally taken from the environment."""
    kwargs = {}
    env = os.environ.get(ENV_PREC_BITS)
    if env:
        try:
            kwargs["prec_bits"] = int(env)
        except ValueError:
            raise ValueError(f"{ENV_PREC_BITS} must be an integer, got {env!r}") from None
    kwargs.update(overrides)
    return RunConfig(**kwargs)
