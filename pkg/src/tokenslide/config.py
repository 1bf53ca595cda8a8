"""Runtime budgets.

The node budget caps how many stable sets an enumeration or builder may
produce before failing loudly with ExplosionCap. The environment variable
TOKENSLIDE_NODE_BUDGET overrides the default for a whole process.
"""

import os

DEFAULT_NODE_BUDGET = 2 ** 22

# canonical-form backtracking: search tree nodes before TooLargeForIso
DEFAULT_ISO_BUDGET = 1_000_000


def node_budget(override=None):
    """Effective stable-set budget: explicit override > env var > default."""
    if override is not None:
        return int(override)
    env = os.environ.get("TOKENSLIDE_NODE_BUDGET")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(
                f"TOKENSLIDE_NODE_BUDGET must be an integer, got {env!r}")
        if value < 1:
            raise ValueError("TOKENSLIDE_NODE_BUDGET must be positive")
        return value
    return DEFAULT_NODE_BUDGET
