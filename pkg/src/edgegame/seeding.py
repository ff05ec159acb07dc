"""Named seed derivation.

Every source of randomness in a run flows from one root seed through
`derive_seed(root, *names)`, so a single integer reproduces a whole
pipeline and each consumer can be identified by name.
"""

from __future__ import annotations

import hashlib

_MASK = (1 << 63) - 1


def derive_seed(root: int, *names: object) -> int:
    """Derive a child seed from `root` and a path of names.

    Stable across platforms and Python versions (sha256-based, not `hash`).
    """
    text = str(int(root)) + "".join("/" + str(n) for n in names)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") & _MASK
