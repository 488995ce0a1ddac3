# ============================================================
# thrackles/models/base.py
# Base común para todos los modelos (valores inmutables)
# ============================================================

from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Base declarativa: todos los modelos del dominio son valores inmutables."""

    model_config = ConfigDict(frozen=True, extra="forbid")
