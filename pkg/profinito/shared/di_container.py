# profinito/shared/di_container.py
"""
Contenedor de Inyección de Dependencias.

Centraliza la creación de los adaptadores concretos que implementan los puertos del
dominio. Los comandos de la CLI piden aquí sus colaboradores y los pasan a los handlers,
de modo que ningún otro módulo importa adaptadores de infraestructura directamente.
"""

from profinito.shared.config import Settings, load_settings

# --- Puertos del dominio ---
from profinito.subgroups.domain.executors import BranchExecutor

# --- Adaptadores de infraestructura ---
from profinito.subgroups.infrastructure.parallel.executors import (
    ProcessBranchExecutor,
    SequentialBranchExecutor,
)


# --- Fábricas de Dependencias ---
def create_settings(**_) -> Settings:
    return load_settings()


def create_branch_executor(threads: int = 1, **_) -> BranchExecutor:
    """
    Fábrica del ejecutor de ramas.
    Con un solo hilo se evita el coste de arrancar procesos.
    """
    if threads <= 1:
        return SequentialBranchExecutor()
    return ProcessBranchExecutor(threads)


# --- Registro del Contenedor ---
_DEPENDENCY_REGISTRY = {
    "settings": create_settings,
    "branch_executor": create_branch_executor,
}


def get_dependency(dependency_name: str, **kwargs):
    """
    Obtiene una dependencia por su nombre lógico.
    Raises: ValueError si el nombre no está registrado.
    """
    factory = _DEPENDENCY_REGISTRY.get(dependency_name)
    if not factory:
        raise ValueError(f"Dependency '{dependency_name}' is not registered in the DI container.")
    return factory(**kwargs)


# --- Alias tipados ---
def get_settings() -> Settings:
    return get_dependency("settings")


def get_branch_executor(threads: int) -> BranchExecutor:
    """ Ejecutor de ramas para la búsqueda de subgrupos de índice bajo. """
    return get_dependency("branch_executor", threads=threads)


# --- Notas sobre la implementación ---
# 1. Testing: se puede reemplazar _DEPENDENCY_REGISTRY para inyectar dobles de prueba.
# 2. Añadir un adaptador nuevo solo toca este archivo.
