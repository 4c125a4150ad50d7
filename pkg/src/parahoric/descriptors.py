"""Descriptor library: concrete based root data with descent, and TOML I/O.

A descriptor is a named, fully explicit GaloisDescentDatum.  The shipped
families are the general linear groups GL_n, their simply connected and
adjoint quotients SL_n and PGL_n (n = 2, 3, 4), Weil restrictions of GL_2
along tame quadratic and cubic extensions, and restricted one-dimensional
tori along ramified extensions.  Each family also exists as a TOML file
under descriptors/ so external tools can round-trip the exact matrices.

Lattice conventions per family:
  * GL_n: X^* = X_* = Z^n in the standard (dual) bases.
  * SL_n: X_* in the simple coroot basis, X^* in the fundamental weight
    basis, so the pairing stays the identity and roots are Cartan columns.
  * PGL_n: X_* = Z^n/Z(1,...,1) with basis the classes of e_1,...,e_{n-1};
    X^* is the root lattice in the dual coordinates.
"""

from __future__ import annotations

import io
from typing import Callable, Dict, List

try:
    import tomllib
except ImportError:  # Python 3.10
    import tomli as tomllib

from importlib import resources

from .rootdata import (
    BasedRootDatum,
    GaloisDescentDatum,
    ValidationError,
    split_descent,
    weil_restrict,
)

# ---------------------------------------------------------------------------
# root datum families
# ---------------------------------------------------------------------------


def gl_datum(n: int) -> BasedRootDatum:
    """GL_n: character and cocharacter lattices Z^n, roots e_i - e_j."""
    if n < 2:
        raise ValidationError("gl_datum needs n >= 2")
    roots = []
    coroots = []
    simples = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v = [0] * n
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
            coroots.append(tuple(v))
            if j == i + 1:
                simples.append(len(roots) - 1)
    return BasedRootDatum(n, roots, coroots, simples)


def _cartan_a(n: int) -> List[List[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = -1
            c[i + 1][i] = -1
    return c


def sl_datum(n: int) -> BasedRootDatum:
    """SL_n: X_* in the coroot basis, X^* in the fundamental weight basis."""
    if n < 2:
        raise ValidationError("sl_datum needs n >= 2")
    r = n - 1
    cartan = _cartan_a(r)
    roots = []
    coroots = []
    simples = []
    for i in range(r):
        for j in range(i, r):
            c = [1 if i <= k <= j else 0 for k in range(r)]
            root = tuple(sum(cartan[a][b] * c[b] for b in range(r)) for a in range(r))
            roots.append(root)
            coroots.append(tuple(c))
            roots.append(tuple(-x for x in root))
            coroots.append(tuple(-x for x in c))
            if i == j:
                simples.append(len(roots) - 2)
    return BasedRootDatum(r, roots, coroots, simples)


def pgl_datum(n: int) -> BasedRootDatum:
    """PGL_n: cocharacters Z^n/Z(1,..,1) in the basis [e_1], ..., [e_(n-1)]."""
    if n < 2:
        raise ValidationError("pgl_datum needs n >= 2")
    r = n - 1

    def root_vec(i: int, j: int) -> tuple:
        v = [0] * r
        if i < r:
            v[i] += 1
        if j < r:
            v[j] -= 1
        return tuple(v)

    def coroot_vec(i: int, j: int) -> tuple:
        # [e_i - e_j] with [e_n] = -([e_1] + ... + [e_(n-1)])
        v = [0] * r
        if i < r:
            v[i] += 1
        else:
            v = [x - 1 for x in v]
        if j < r:
            v[j] -= 1
        else:
            v = [x + 1 for x in v]
        return tuple(v)

    roots = []
    coroots = []
    simples = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            roots.append(root_vec(i, j))
            coroots.append(coroot_vec(i, j))
            if j == i + 1:
                simples.append(len(roots) - 1)
    return BasedRootDatum(r, roots, coroots, simples)


def torus_datum(rank: int) -> BasedRootDatum:
    return BasedRootDatum(rank, [], [], [])


def gl_to_pgl_matrix(n: int) -> tuple:
    """Cocharacter map Z^n -> Z^n/Z(1,..,1): e_i -> [e_i], e_n -> -sum [e_i]."""
    r = n - 1
    cols = []
    for i in range(n):
        if i < r:
            cols.append(tuple(1 if k == i else 0 for k in range(r)))
        else:
            cols.append((-1,) * r)
    return tuple(zip(*cols))


# ---------------------------------------------------------------------------
# descriptor registry
# ---------------------------------------------------------------------------


def _split(datum_fn: Callable[[], BasedRootDatum], q: int
           ) -> Callable[[], GaloisDescentDatum]:
    return lambda: split_descent(datum_fn(), q)


def _res_gl2(q: int, e: int, f: int) -> GaloisDescentDatum:
    inner = split_descent(gl_datum(2), q**f)
    return weil_restrict(inner, q, e, f)


def _res_gm(q: int, e: int, f: int) -> GaloisDescentDatum:
    inner = split_descent(torus_datum(1), q**f)
    return weil_restrict(inner, q, e, f)


BUILDERS: Dict[str, Callable[[], GaloisDescentDatum]] = {
    "gl2": _split(lambda: gl_datum(2), 3),
    "gl3": _split(lambda: gl_datum(3), 3),
    "gl4": _split(lambda: gl_datum(4), 3),
    "sl2": _split(lambda: sl_datum(2), 3),
    "sl3": _split(lambda: sl_datum(3), 3),
    "sl4": _split(lambda: sl_datum(4), 3),
    "pgl2": _split(lambda: pgl_datum(2), 3),
    "pgl3": _split(lambda: pgl_datum(3), 3),
    "pgl4": _split(lambda: pgl_datum(4), 3),
    "res_gl2_ram2": lambda: _res_gl2(3, 2, 1),
    "res_gl2_unram2": lambda: _res_gl2(3, 1, 2),
    "res_gl2_ram3": lambda: _res_gl2(7, 3, 1),
    "res_gl2_unram3": lambda: _res_gl2(3, 1, 3),
    "res_gm_ram2": lambda: _res_gm(3, 2, 1),
    "res_gm_ram3": lambda: _res_gm(7, 3, 1),
    "res_gm_unram2": lambda: _res_gm(3, 1, 2),
    "res_gm_mixed22": lambda: _res_gm(3, 2, 2),
}


def descriptor_names() -> List[str]:
    return sorted(BUILDERS)


def build_descriptor(name: str) -> GaloisDescentDatum:
    if name not in BUILDERS:
        raise ValidationError(
            f"unknown descriptor {name!r}; known: {', '.join(descriptor_names())}"
        )
    return BUILDERS[name]()


# ---------------------------------------------------------------------------
# TOML serialization
# ---------------------------------------------------------------------------


def descent_to_toml(descent: GaloisDescentDatum, name: str = "") -> str:
    datum = descent.datum

    def arr(rows) -> str:
        inner = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in rows)
        return "[" + inner + "]"

    buf = io.StringIO()
    if name:
        buf.write(f'name = "{name}"\n')
    buf.write("\n[datum]\n")
    buf.write(f"rank = {datum.rank}\n")
    buf.write(f"roots = {arr(datum.roots)}\n")
    buf.write(f"coroots = {arr(datum.coroots)}\n")
    buf.write(
        "simple_indices = ["
        + ", ".join(str(i) for i in datum.simple_indices)
        + "]\n"
    )
    buf.write(f"pairing = {arr(datum.pairing)}\n")
    buf.write("\n[descent]\n")
    buf.write(f"q = {descent.q}\n")
    buf.write(f"e = {descent.e}\n")
    buf.write(f"f = {descent.f}\n")
    buf.write(
        "inertia = ["
        + ", ".join(arr(g) for g in descent.inertia_gens)
        + "]\n"
    )
    buf.write(f"frobenius = {arr(descent.frobenius)}\n")
    return buf.getvalue()


def descent_from_toml(text: str) -> GaloisDescentDatum:
    data = tomllib.loads(text)
    try:
        dat = data["datum"]
        des = data["descent"]
        datum = BasedRootDatum(
            dat["rank"],
            [tuple(r) for r in dat["roots"]],
            [tuple(r) for r in dat["coroots"]],
            dat["simple_indices"],
            [tuple(r) for r in dat["pairing"]] if "pairing" in dat else None,
        )
        return GaloisDescentDatum(
            datum,
            [tuple(tuple(r) for r in g) for g in des.get("inertia", [])],
            tuple(tuple(r) for r in des["frobenius"]),
            des["q"],
            des.get("e", 1),
            des.get("f", 1),
        )
    except KeyError as exc:
        raise ValidationError(f"descriptor TOML missing field {exc}") from exc


def load_descriptor(source: str) -> GaloisDescentDatum:
    """Load a descriptor by registry name, packaged TOML, or file path."""
    if source in BUILDERS:
        return build_descriptor(source)
    pkg_files = resources.files("parahoric") / "descriptors" / f"{source}.toml"
    try:
        if pkg_files.is_file():
            return descent_from_toml(pkg_files.read_text())
    except (FileNotFoundError, ModuleNotFoundError):
        pass
    try:
        with open(source, "r") as fh:
            return descent_from_toml(fh.read())
    except FileNotFoundError:
        raise ValidationError(f"no descriptor named or at {source!r}") from None
