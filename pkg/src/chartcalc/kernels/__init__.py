"""Kernel selection: compiled extension when available, pure Python otherwise.

Both implementations expose ``face_orbits``, ``component_ids`` and
``min_encoding`` with identical semantics; see ``pykernel`` for the
reference documentation.  Set the environment variable
``CHARTCALC_FORCE_PYKERNEL=1`` to skip the compiled module.
"""

from __future__ import annotations

import os

if os.environ.get("CHARTCALC_FORCE_PYKERNEL"):
    from chartcalc.kernels.pykernel import (  # noqa: F401
        IMPLEMENTATION,
        component_ids,
        face_orbits,
        min_encoding,
    )
else:
    try:
        from chartcalc.kernels._fastkernel import (  # type: ignore[no-redef]  # noqa: F401
            IMPLEMENTATION,
            component_ids,
            face_orbits,
            min_encoding,
        )
    except ImportError:
        from chartcalc.kernels.pykernel import (  # noqa: F401
            IMPLEMENTATION,
            component_ids,
            face_orbits,
            min_encoding,
        )
