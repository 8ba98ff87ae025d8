"""
Algebra homomorphisms between presentations.

A morphism is given by the images of the source generators as
noncommutative polynomials in the target generators. It is verified by
pushing every defining relation of the source through the substitution
and checking that the image lies in the target ideal.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..errors import DegreeOverflow, UnknownPresentation
from ..logs import get_logger
from ..report import Report, ReportBuilder
from ..scalars import ParamContext, Scalar
from .audit import DEFAULT_SLACK, require_member
from .freealg import FreeAlgElem, FreeMatrix
from .identities import x_circ
from .presentations import Presentation, build_presentation

log = get_logger(__name__)

MORPHISM_NAMES = ("PhiEll", "Psi1Z")


@dataclass
class Morphism:
    name: str
    source: Presentation
    target: Presentation
    images: Dict[str, FreeAlgElem]

    def image(self, elem: FreeAlgElem) -> FreeAlgElem:
        return elem.substitute(self.images)

    def image_degree(self) -> int:
        return max((self.image(rel).degree() for rel in self.source.relations), default=0)


def parse_morphism_name(name: str) -> Tuple[str, Optional[int]]:
    """"PhiEll", "PhiEll(3)" or "Psi1Z"."""
    base, ell = name, None
    if "(" in name and name.endswith(")"):
        base = name[: name.index("(")]
        try:
            ell = int(name[name.index("(") + 1 : -1])
        except ValueError as exc:
            raise UnknownPresentation(f"bad parameter in {name!r}") from exc
    if base not in MORPHISM_NAMES:
        raise UnknownPresentation(f"unknown morphism {name!r}", {"known": MORPHISM_NAMES})
    return base, ell


def _matrix_images(source: FreeMatrix, image: FreeMatrix) -> Dict[str, FreeAlgElem]:
    out = {}
    for (r, s), entry in source.flat():
        (word,) = entry.terms
        out[word[0]] = image[r, s]
    return out


def phi_ell(n: int, field_, ell: int = 2) -> Morphism:
    """D0IV -> Dl: A to X1...Xl, the inverse of B to I + X1 D1."""
    source = build_presentation("D0IV", n, field_)
    target = build_presentation("Dl", n, field_, ell=ell)
    eye = FreeMatrix.identity(field_, n)
    images = _matrix_images(source.matrices["A"], x_circ(target))
    images.update(_matrix_images(source.matrices["B"], eye + target.matrices["X1"] * target.matrices["D1"]))
    return Morphism(f"PhiEll({ell})", source, target, images)


def psi_one(n: int, field_, z: Optional[Scalar] = None) -> Morphism:
    """D1 -> D0loc: X to A, D to A^-1 (Z^-1 B^-1 - I)."""
    source = build_presentation("D1", n, field_)
    target = build_presentation("D0loc", n, field_)
    z = field_.one if z is None else z
    eye = FreeMatrix.identity(field_, n)
    B = target.matrices["B"].scale(field_.inv(z))
    images = _matrix_images(source.matrices["X"], target.matrices["A"])
    images.update(_matrix_images(source.matrices["D"], target.matrices["Abar"] * (B - eye)))
    return Morphism("Psi1Z", source, target, images)


def build_morphism(name: str, n: int, ctx: Optional[ParamContext] = None, z: Optional[Scalar] = None) -> Morphism:
    base, ell = parse_morphism_name(name)
    ctx = ctx or ParamContext(mode="modp-random", seed=1, ell=1)
    field_ = ctx.make_field()
    if base == "PhiEll":
        return phi_ell(n, field_, ell or 2)
    if z is None and field_.ell >= 1:
        z = field_.z(1)
    return psi_one(n, field_, z)


def check_morphism(
    name: str,
    n: int,
    d: int = 6,
    ctx: Optional[ParamContext] = None,
    z: Optional[Scalar] = None,
    slack: int = DEFAULT_SLACK,
    labels: Optional[Tuple[str, ...]] = None,
) -> Report:
    """Every relation image must lie in the target ideal at degree d.

    labels restricts the run to relations whose label starts with one of
    the given prefixes.
    """
    morphism = build_morphism(name, n, ctx, z)
    top = morphism.image_degree()
    if top > d:
        raise DegreeOverflow(f"{morphism.name} has relation images of degree {top}", {"d": d})
    builder = ReportBuilder(
        "morphisms",
        {
            "morphism": morphism.name,
            "source": morphism.source.title,
            "target": morphism.target.title,
            "n": n,
            "degree": d,
        },
    )
    log.info("morphism.start", morphism=morphism.name, relations=len(morphism.source.relations), degree=d)
    target = morphism.target
    for label, rel in zip(morphism.source.labels, morphism.source.relations):
        if labels and not label.startswith(labels):
            continue
        image = morphism.image(rel)
        check = f"image:{label}"
        builder.run(check, lambda image=image, check=check: require_member(target, image, d, check, slack))
    return builder.build()
