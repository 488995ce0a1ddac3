# ============================================================
# thrackles/__init__.py
# Paquete thrackles (LIVIANO, sin efectos secundarios)
# ============================================================

"""
Triangulación por thrackles de los conos tangentes del politopo de bases
de la matroide uniforme U^{r,n}.

- Para modelos: usa `from thrackles.models.graph import Edge, EmbeddedBipartite`
- Para lógica: usa `from thrackles.services import thrackle_service`
"""

__version__ = "1.0.0"

__all__ = ["__version__"]
