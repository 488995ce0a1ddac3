# ============================================================
# thrackles/services/__init__.py
# Servicios de dominio: importar cada módulo por su nombre
# ============================================================

__all__ = [
    "embedding_service",
    "thrackle_service",
    "lattice_service",
    "groebner_service",
    "triangulation_service",
    "matroid_service",
]
