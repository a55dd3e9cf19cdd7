from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError

from pitypical.config import DefaultConfig
from pitypical.errors import FieldSpecError
from pitypical.models import FieldSpecModel
from pitypical.services.field import LocalFieldSpec, make_field_spec

logger = logging.getLogger(__name__)

# Coefficient lists are low-degree first; E carries its leading coefficient.
BUILTIN_PRESETS: Dict[str, dict] = {
    "q2": {"p": 2, "g": [0, 1], "E": [[-2], [1]], "M": 12},
    "q3": {"p": 3, "g": [0, 1], "E": [[-3], [1]], "M": 12},
    "q2-ramified": {"p": 2, "g": [0, 1], "E": [[-2], [0], [1]], "M": 12},
    "q4-unramified": {"p": 2, "g": [1, 1, 1], "E": [[-2, 0], [1, 0]], "M": 12},
}


def preset_documents(preset_dir: Optional[str] = None) -> Dict[str, dict]:
    """Built-in presets, extended or overridden by ``<name>.json`` files in the preset directory."""
    documents = {name: dict(doc) for name, doc in BUILTIN_PRESETS.items()}
    directory = preset_dir if preset_dir is not None else DefaultConfig.PRESET_DIR
    if not directory:
        return documents

    path = Path(directory)
    if not path.is_dir():
        logger.warning("Preset directory %s does not exist; using built-ins only", directory)
        return documents

    for candidate in sorted(path.glob("*.json")):
        try:
            data = json.loads(candidate.read_text(encoding="utf-8"))
            documents[candidate.stem] = FieldSpecModel.model_validate(data).model_dump()
        except (json.JSONDecodeError, ValidationError) as exc:
            logger.warning("Skipping preset %s: %s", candidate.name, exc)
    return documents


def preset_names(preset_dir: Optional[str] = None) -> List[str]:
    return sorted(preset_documents(preset_dir))


def load_preset(name: str, M: Optional[int] = None, preset_dir: Optional[str] = None) -> LocalFieldSpec:
    documents = preset_documents(preset_dir)
    if name not in documents:
        raise FieldSpecError(f"unknown preset {name!r}; available: {', '.join(sorted(documents))}")
    model = FieldSpecModel.model_validate(documents[name])
    return make_field_spec(model.p, model.g, model.E, M if M is not None else model.M)
