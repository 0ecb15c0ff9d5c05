from __future__ import annotations

import logging
from collections.abc import Mapping

from dbetto import AttrsDict

log = logging.getLogger(__name__)


def merge_configs(base: Mapping, extra: Mapping | None) -> AttrsDict:
    """Merge two configuration dictionaries into a new one.

    The returned configuration contains all entries from ``base`` with values from
    ``extra`` (if given) taking precedence. Nested dictionaries are merged key by
    key. The input dictionaries are not mutated.
    """
    merged = {k: (merge_configs(v, None) if isinstance(v, Mapping) else v) for k, v in base.items()}

    if extra is None:
        return AttrsDict(merged)

    for key, value in extra.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), Mapping):
            merged[key] = merge_configs(merged[key], value)
        elif isinstance(value, Mapping):
            merged[key] = merge_configs(value, None)
        else:
            log.debug("config: %s overridden", key)
            merged[key] = value

    return AttrsDict(merged)
