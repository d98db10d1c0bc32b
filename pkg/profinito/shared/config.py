# profinito/shared/config.py
"""
Configuración de la aplicación.

Centraliza los límites de cómputo (capacidades de enumeración, órdenes máximos) y los
parámetros de ejecución (hilos, nivel de log). Los valores se leen de variables de entorno
con prefijo PROFINITO_ y, si existe, de un archivo `.env` en el directorio de trabajo.
"""

import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseSettings, Field, validator

from profinito.cosets.domain.enumeration import DEFAULT_MAX_COSETS
from profinito.finite_groups.domain.models import ISOMORPHISM_ORDER_CAP
from profinito.fingerprints.domain.models import DEFAULT_MAX_ORDER, HARD_MAX_ORDER
from profinito.subgroups.domain.models import DEFAULT_MAX_INDEX, HARD_MAX_INDEX


def available_parallelism() -> int:
    """ Número de CPUs utilizables por este proceso. """
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return max(1, os.cpu_count() or 1)


class Settings(BaseSettings):
    """ Parámetros de ejecución. Cada campo puede sobreescribirse con PROFINITO_<CAMPO>. """

    threads: int = Field(default_factory=available_parallelism, ge=1)
    log_level: str = Field("WARNING")

    max_cosets: int = Field(DEFAULT_MAX_COSETS, ge=1)
    max_index: int = Field(DEFAULT_MAX_INDEX, ge=1, le=HARD_MAX_INDEX)
    max_order: int = Field(DEFAULT_MAX_ORDER, ge=1, le=HARD_MAX_ORDER)
    isomorphism_order_cap: int = Field(ISOMORPHISM_ORDER_CAP, ge=1)
    # 0 = enteros exactos sin límite; > 0 = aritmética de ancho fijo verificada
    snf_max_bits: int = Field(0, ge=0)

    @validator("log_level")
    def _normalize_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level '{value}'.")
        return level

    class Config:
        env_prefix = "PROFINITO_"
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache(maxsize=1)
def load_settings(env_file: Optional[str] = ".env") -> Settings:
    """ Carga (una vez) la configuración desde el entorno y el `.env` opcional. """
    return Settings(_env_file=env_file)
