"""Experiment configuration: the field, the variety, the size grid and the seed."""

import hashlib
import logging
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ffdistlab.errors import ContractViolation, with_hint
from ffdistlab.field import FieldSpec, f_neg
from ffdistlab.geometry import AmbientSpec, Variety, hyperplane, load_variety, sphere
from ffdistlab.types import Rational

logger = logging.getLogger(__name__)

_SEED_LIMIT = 1 << 64


class VarietyChoice(BaseModel):
    """
    Parsed ``--variety`` value.

    Accepted forms: ``sphere:<j>``, ``poly:<file>`` and ``hyperplane``.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["sphere", "poly", "hyperplane"]
    radius: int = 1
    path: str | None = None

    @classmethod
    def parse(cls, text: str) -> "VarietyChoice":
        head, _, tail = text.strip().partition(":")
        if head == "sphere":
            try:
                return cls(kind="sphere", radius=int(tail or 1))
            except ValueError as exc:
                raise ContractViolation(f"sphere radius must be an integer, got {tail!r}.") from exc
        if head == "poly" and tail:
            return cls(kind="poly", path=tail)
        if head == "hyperplane" and not tail:
            return cls(kind="hyperplane")
        raise ContractViolation(
            with_hint(
                f"cannot read variety {text!r}.",
                "Use sphere:<j>, poly:<file> or hyperplane.",
            )
        )

    def __str__(self) -> str:
        if self.kind == "sphere":
            return f"sphere:{self.radius}"
        if self.kind == "poly":
            return f"poly:{self.path}"
        return "hyperplane"


def parse_sizes(spec: str | list[int], max_size: int) -> list[int]:
    """
    Resolve a size grid against |V|.

    `spec` is a list of sizes or a comma separated string whose items are
    integers or ``geom:<start>:<stop|max>[:<ratio>]``. Geometric items always
    include their stop value. The result is sorted and duplicate free.
    """
    if isinstance(spec, list):
        return sorted(set(spec))
    sizes: set[int] = set()
    for item in (part.strip() for part in spec.split(",")):
        if not item:
            continue
        if item.startswith("geom:"):
            fields = item.split(":")[1:]
            if len(fields) not in (2, 3):
                raise ContractViolation(
                    with_hint(f"bad geometric grid {item!r}.", "Write geom:<start>:<stop|max>[:<ratio>].")
                )
            start = int(fields[0])
            stop = max_size if fields[1] == "max" else int(fields[1])
            ratio = float(fields[2]) if len(fields) == 3 else 2.0
            if start < 1 or ratio <= 1.0:
                raise ContractViolation(f"geometric grid {item!r} needs start >= 1 and ratio > 1.")
            value = float(start)
            while round(value) < stop:
                sizes.add(round(value))
                value *= ratio
            sizes.add(stop)
        else:
            sizes.add(int(item))
    return sorted(sizes)


class ExperimentConfig(BaseModel):
    """
    Everything a scan or an audit needs; a fixed seed makes the run deterministic.

    Attributes:
        q: Field order, an odd prime power.
        ext_modulus: Modulus of F_q over F_p, lowest coefficient first.
        d: Ambient dimension.
        variety: ``sphere:<j>``, ``poly:<file>`` or ``hyperplane``.
        k: Number of summands in Delta_k.
        sample_count: Replicates per size when sampling.
        sizes: Size grid, see `parse_sizes`.
        seed: 64-bit seed.
        ggq_fraction: |Delta_k(A)| >= ggq_fraction * q counts as ">> q".
        c, beta: Constants of the energy dichotomy (beta defaults to 4^-n).
        size_constant: Constant C in the predicted threshold C * q^theta.
        dim_cap: Largest flat dimension searched when t_V is needed.
    """

    model_config = ConfigDict(frozen=True)

    q: int = Field(ge=3)
    ext_modulus: tuple[int, ...] | None = None
    d: int = Field(ge=1)
    variety: str = "sphere:1"
    declared_dim: int | None = None
    declared_deg: int | None = None
    k: int = Field(default=3, ge=1)
    sample_count: int = Field(default=20, ge=1)
    sizes: str | list[int] = "geom:2:max"
    seed: int = Field(default=0, ge=0, lt=_SEED_LIMIT)
    ggq_fraction: Rational = Fraction(1, 4)
    c: Rational = Fraction(1)
    beta: Rational | None = None
    size_constant: Rational = Fraction(1)
    dim_cap: int = Field(default=2, ge=0, le=2)

    @field_validator("ggq_fraction")
    @classmethod
    def _check_fraction(cls, value: Fraction) -> Fraction:
        if not 0 < value <= 1:
            raise ValueError(f"ggq_fraction must lie in (0, 1], got {value}.")
        return value

    @field_validator("variety")
    @classmethod
    def _check_variety(cls, value: str) -> str:
        VarietyChoice.parse(value)
        return value

    @cached_property
    def variety_choice(self) -> VarietyChoice:
        return VarietyChoice.parse(self.variety)

    @cached_property
    def ambient(self) -> AmbientSpec:
        return AmbientSpec(field=FieldSpec.from_order(self.q, self.ext_modulus), d=self.d)

    def sphere_radius(self) -> int:
        """
        Field element index of the ``sphere:<j>`` radius.

        Indices in [0, q) are taken as they are; -j for 0 < j < q is the
        field negative of the index j, which differs from q - j when q is not prime.
        """
        j = self.variety_choice.radius
        if not -self.q < j < self.q:
            raise ContractViolation(
                with_hint(
                    f"sphere radius {j} is not an element index of F_{self.q}.",
                    f"Pick j in [0, {self.q}), or -j for the negative of the element j.",
                )
            )
        return f_neg(self.ambient.field, -j) if j < 0 else j

    def build_variety(self) -> Variety:
        choice = self.variety_choice
        if choice.kind == "sphere":
            return sphere(self.ambient, self.sphere_radius())
        if choice.kind == "hyperplane":
            return hyperplane(self.ambient)
        assert choice.path is not None
        return load_variety(Path(choice.path), self.ambient, self.declared_dim, self.declared_deg)

    def resolve_sizes(self, max_size: int) -> list[int]:
        sizes = parse_sizes(self.sizes, max_size)
        too_big = [s for s in sizes if s > max_size]
        if too_big or any(s < 0 for s in sizes):
            raise ContractViolation(
                with_hint(
                    f"sizes {too_big or sizes} are outside [0, |V|] = [0, {max_size}].",
                    "Use 'max' as the stop of a geometric grid to end at |V|.",
                )
            )
        return sizes

    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON form."""
        return hashlib.sha256(self.model_dump_json().encode("utf-8")).hexdigest()
