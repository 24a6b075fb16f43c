# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Engine package: groups, Cayley graphs, search, lifting lemmas and certificates.

Usage:
    from hamcayley_cli.engine import resolve_group
    G = resolve_group("48.S4xZ2")
"""

import json
from collections.abc import Mapping

from ..exceptions import UnknownGroupError
from .assemble import assemble_group
from .catalog import build
from .group import GroupTable


def resolve_group(text: str, params: Mapping[str, int] | None = None) -> GroupTable:
    """A catalog key, or an inline group spec given as a JSON object.

    This is the ONLY place the CLI turns a ``--group`` argument into a table.
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            spec = json.loads(text)
        except json.JSONDecodeError as e:
            raise UnknownGroupError(f"inline group spec is not valid JSON: {e.msg}")
        return assemble_group(spec, params)
    return build(text)
