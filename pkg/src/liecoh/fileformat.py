"""JSON on-disk formats for algebras and modules.

Both formats carry ``"schema": 1`` and serialize every rational as a
string ("5" or "-5/3"), never as a float, so parsing is exact and
emit -> parse is the identity.

Algebra files store only bracket pairs with left < right and nonzero
coefficients; antisymmetric partners are implied.  Module files store one
dense action matrix per algebra basis element.
"""

import json
from fractions import Fraction

from .errors import LiecohError
from .lie import LieAlgebra
from .rep import LieModule

SCHEMA = 1

__all__ = [
    "SCHEMA",
    "FileFormatError",
    "algebra_to_dict",
    "algebra_from_dict",
    "module_to_dict",
    "module_from_dict",
    "load_algebra",
    "load_module",
]


class FileFormatError(LiecohError):
    """Malformed input file."""


def algebra_to_dict(L: LieAlgebra) -> dict:
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            result = [[str(c), k] for k, c in enumerate(L.c[i][j]) if c]
            if result:
                brackets.append({"left": i, "right": j, "result": result})
    return {"schema": SCHEMA, "dim": L.dim, "basis": list(L.labels),
            "brackets": brackets}


def _parse_coeff(s, where: str) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(f"bad coefficient {s!r} in {where}: {exc}") from None


def algebra_from_dict(d: dict) -> LieAlgebra:
    if not isinstance(d, dict):
        raise FileFormatError("algebra file must be a JSON object")
    try:
        dim = int(d["dim"])
        basis = list(d["basis"])
        brackets = d.get("brackets", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"algebra file is missing or mistypes a field: {exc}") from None
    if len(basis) != dim:
        raise FileFormatError(f"dim is {dim} but {len(basis)} basis names are given")
    table = {}
    for pos, entry in enumerate(brackets):
        where = f"brackets[{pos}]"
        try:
            i = int(entry["left"])
            j = int(entry["right"])
            result = entry["result"]
        except (KeyError, TypeError, ValueError) as exc:
            raise FileFormatError(f"{where}: {exc}") from None
        if not 0 <= i < dim or not 0 <= j < dim:
            raise FileFormatError(f"{where}: indices ({i}, {j}) out of range")
        if i >= j:
            raise FileFormatError(
                f"{where}: pairs must satisfy left < right; "
                "antisymmetric partners are implied")
        terms = []
        for item in result:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise FileFormatError(f"{where}: result entries are [coefficient, index] pairs")
            coeff = _parse_coeff(item[0], where)
            k = int(item[1])
            if not 0 <= k < dim:
                raise FileFormatError(f"{where}: result index {k} out of range")
            terms.append((coeff, k))
        table[(i, j)] = terms
    return LieAlgebra.from_brackets(basis, table)


def module_to_dict(M: LieModule) -> dict:
    return {
        "schema": SCHEMA,
        "dim": M.dim,
        "action": [[[str(a) for a in row] for row in mat.data] for mat in M.rho],
    }


def module_from_dict(d: dict, L: LieAlgebra) -> LieModule:
    if not isinstance(d, dict):
        raise FileFormatError("module file must be a JSON object")
    try:
        dim = int(d["dim"])
        action = d["action"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"module file is missing or mistypes a field: {exc}") from None
    if len(action) != L.dim:
        raise FileFormatError(
            f"module file has {len(action)} action matrices for an algebra of dim {L.dim}")
    mats = []
    for i, mat in enumerate(action):
        if len(mat) != dim or any(len(row) != dim for row in mat):
            raise FileFormatError(f"action[{i}] is not a {dim}x{dim} matrix")
        mats.append([[_parse_coeff(a, f"action[{i}]") for a in row] for row in mat])
    return LieModule(L, mats, dim=dim)


def load_algebra(path: str) -> LieAlgebra:
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: not valid JSON ({exc})") from None
    return algebra_from_dict(payload)


def load_module(path: str, L: LieAlgebra) -> LieModule:
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: not valid JSON ({exc})") from None
    return module_from_dict(payload, L)
