"""Knot records: presentations, peripheral words, pinned polynomials, surfaces.

Records are JSON files.  Polynomials in (x, y) are stored as sparse term
lists ``[[e_x, e_y, num, den], ...]``.  Each record carries:

    name, generators, relator_lhs, relator_rhs, meridian, longitude,
    torsion_curve ("meridian" | "longitude"), model ("plane" | "line"),
    P (terms | null), tau_mu ({terms, orientation} | null),
    Y_mu (terms | null), surfaces ([{chi, ideal_points}, ...])

The shipped records cover the trefoil, the figure-eight knot, and the
two-bridge knots 5_2 and 6_1.
"""

import json
from fractions import Fraction
from importlib import resources

from ..algebra.multipoly import MultiPoly, squarefree_part
from ..algebra.numberfield import QQ
from ..errors import SingularInputError
from .presentation import GroupPresentation
from .words import Word

XY = ("x", "y")
KNOWN_KNOTS = ("trefoil", "figure_eight", "5_2", "6_1")


def poly_from_terms(term_list):
    terms = {}
    for ex, ey, num, den in term_list:
        terms[(int(ex), int(ey))] = Fraction(int(num), int(den))
    return MultiPoly(QQ, XY, terms)


def poly_to_terms(p):
    out = []
    for (ex, ey), c in sorted(p.terms.items(), reverse=True):
        out.append([ex, ey, c.numerator, c.denominator])
    return out


class Surface:
    """Incompressible-surface data: Euler characteristic and the labels of
    the ideal points it is assigned to."""

    def __init__(self, chi, ideal_points):
        self.chi = int(chi)
        self.ideal_points = list(ideal_points)
        if self.chi > 0:
            raise SingularInputError("surface Euler characteristic must be <= 0")

    @property
    def annular(self):
        """chi >= 0 surfaces (annuli) fall outside the bound's hypotheses."""
        return self.chi >= 0

    def to_json(self):
        return {"chi": self.chi, "ideal_points": self.ideal_points}


class KnotRecord:
    def __init__(self, data):
        self.name = data["name"]
        self.presentation = GroupPresentation(
            data["generators"], Word(data["relator_lhs"]), Word(data["relator_rhs"]))
        self.meridian = Word(data["meridian"])
        self.longitude = Word(data["longitude"])
        self.torsion_curve = data.get("torsion_curve", "longitude")
        self.model = data.get("model", "plane")
        self.P = poly_from_terms(data["P"]) if data.get("P") else None
        tau = data.get("tau_mu")
        if tau:
            self.tau_poly = poly_from_terms(tau["terms"])
            self.tau_orientation = tau.get("orientation", "denominator")
        else:
            self.tau_poly = None
            self.tau_orientation = None
        self.Y_mu = poly_from_terms(data["Y_mu"]) if data.get("Y_mu") else None
        self.surfaces = [Surface(s["chi"], s["ideal_points"])
                         for s in data.get("surfaces", [])]
        self.notes = data.get("notes", "")
        self._validate()

    def _validate(self):
        pres = self.presentation
        if pres.phi_of(self.meridian) != 1:
            raise SingularInputError(
                f"{self.name}: meridian must have abelianization 1")
        if pres.phi_of(self.longitude) != 0:
            raise SingularInputError(
                f"{self.name}: longitude must be null-homologous")
        if self.P is not None:
            if not squarefree_part(self.P) == self.P:
                # squarefree_part normalizes; compare up to unit
                norm, _ = squarefree_part(self.P).primitive_normalized()
                mine, _ = self.P.primitive_normalized()
                if norm != mine and norm != mine.scale(-1):
                    raise SingularInputError(f"{self.name}: pinned P is not squarefree")
        for s in self.surfaces:
            if s.chi > 0:
                raise SingularInputError(f"{self.name}: bad surface chi")

    @property
    def torsion_word(self):
        return self.meridian if self.torsion_curve == "meridian" else self.longitude

    def to_json(self):
        data = {
            "name": self.name,
            "generators": list(self.presentation.generators),
            "relator_lhs": self.presentation.lhs.letters,
            "relator_rhs": self.presentation.rhs.letters,
            "meridian": self.meridian.letters,
            "longitude": self.longitude.letters,
            "torsion_curve": self.torsion_curve,
            "model": self.model,
            "P": poly_to_terms(self.P) if self.P is not None else None,
            "tau_mu": ({"terms": poly_to_terms(self.tau_poly),
                        "orientation": self.tau_orientation}
                       if self.tau_poly is not None else None),
            "Y_mu": poly_to_terms(self.Y_mu) if self.Y_mu is not None else None,
            "surfaces": [s.to_json() for s in self.surfaces],
            "notes": self.notes,
        }
        return data


def _data_dir():
    return resources.files("torvar.knots") / "data"


def available_knots(data_dir=None):
    if data_dir is not None:
        import pathlib
        return sorted(p.stem for p in pathlib.Path(data_dir).glob("*.json"))
    return sorted(p.name[:-5] for p in _data_dir().iterdir()
                  if p.name.endswith(".json"))


def load_knot(name, data_dir=None):
    """Load a record by name (or an explicit path to a JSON file)."""
    import pathlib
    candidates = []
    p = pathlib.Path(str(name))
    if p.suffix == ".json":
        candidates.append(p)
    if data_dir is not None:
        candidates.append(pathlib.Path(data_dir) / f"{name}.json")
    text = None
    for c in candidates:
        if c.exists():
            text = c.read_text()
            break
    if text is None:
        # normalize common aliases: 5.2 -> 5_2
        key = str(name).replace(".", "_").replace("-", "_")
        traversable = _data_dir() / f"{key}.json"
        try:
            text = traversable.read_text()
        except (FileNotFoundError, OSError):
            raise SingularInputError(f"record not found: {name}")
    return KnotRecord(json.loads(text))
