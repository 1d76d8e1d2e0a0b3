"""
JSON documents for every structure the kernel reads or writes.

Each document is an object with a "kind" field. Tables keyed by tuples are
stored as lists of rows [key..., value], sorted, so equal structures give
byte-identical files. Morphisms and cubes refer to their chiral structures by
name through a "structures" map, which may hold inline documents or fixture
references ({"kind": "fixture", "name": "fix4"}).
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import fixtures
from .chiralcalc import ChiralMC, PMorphism, PQCube, TransversalCategory
from .core2cat import FiniteTwoCategory, OneCell, StrictTwoFunctor, TwoCell, TwoFunctorSequence
from .logging_config import get_logger
from .models import ArgumentError, BoundaryError, StructuralError, ValidationReport
from .multicat import MultiIndex, TruncatedMultipleCategory
from .psalg import CatGraph, PseudoAlgebra, WeakDoubleCategory, Word, weak_double_category

logger = get_logger("documents")

KINDS = (
    "two_category",
    "multiple_category",
    "two_functor_sequence",
    "chiral_mc",
    "p_morphism",
    "pq_cube",
    "cat_graph",
    "weak_double_category",
    "pseudo_algebra",
    "fixture",
)

Structure = Union[
    FiniteTwoCategory, TruncatedMultipleCategory, TwoFunctorSequence, ChiralMC,
    PMorphism, PQCube, CatGraph, WeakDoubleCategory, PseudoAlgebra,
]


class DocumentError(ValueError):
    """A document does not parse; path locates the offending value, e.g. $.tv.1.maps[2]."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


# -- reading helpers

def _field(d: Any, key: str, path: str) -> Any:
    if not isinstance(d, dict):
        raise DocumentError("expected an object", path)
    if key not in d:
        raise DocumentError(f"missing field {key!r}", path)
    return d[key]


def _str(v: Any, path: str) -> str:
    if not isinstance(v, str):
        raise DocumentError(f"expected a string, got {type(v).__name__}", path)
    return v


def _int(v: Any, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"expected an integer, got {type(v).__name__}", path)
    return v


def _list(v: Any, path: str) -> List[Any]:
    if not isinstance(v, list):
        raise DocumentError(f"expected a list, got {type(v).__name__}", path)
    return v


def _strs(v: Any, path: str) -> Tuple[str, ...]:
    return tuple(_str(x, f"{path}[{k}]") for k, x in enumerate(_list(v, path)))


def _mapping(v: Any, path: str) -> Dict[str, str]:
    if not isinstance(v, dict):
        raise DocumentError("expected an object", path)
    return {_str(k, path): _str(x, f"{path}.{k}") for k, x in v.items()}


def _rows(v: Any, path: str, shape: str) -> List[Tuple[Any, ...]]:
    """Rows of a table; shape spells the column types, 's' for ids and 'i' for directions."""
    out: List[Tuple[Any, ...]] = []
    for k, row in enumerate(_list(v, path)):
        here = f"{path}[{k}]"
        row = _list(row, here)
        if len(row) != len(shape):
            raise DocumentError(f"expected {len(shape)} entries, got {len(row)}", here)
        out.append(tuple(
            _int(x, f"{here}[{c}]") if t == "i" else _str(x, f"{here}[{c}]")
            for c, (t, x) in enumerate(zip(shape, row))
        ))
    return out


def _table(rows: Sequence[Tuple[Any, ...]]) -> Dict[Any, str]:
    """Split rows into key -> last column; single-column keys are unwrapped."""
    return {(r[0] if len(r) == 2 else r[:-1]): r[-1] for r in rows}


# -- writing helpers

def _sorted_rows(rows: List[Any]) -> List[Any]:
    return sorted(rows, key=lambda r: json.dumps(r, sort_keys=True))


def _rows_of(table: Mapping[Any, str]) -> List[List[Any]]:
    return _sorted_rows([[*k, v] if isinstance(k, tuple) else [k, v] for k, v in table.items()])


def _word_doc(w: Word) -> Any:
    return list(w.items) if w.items else {"base": w.base}


def _word(v: Any, path: str) -> Word:
    if isinstance(v, dict):
        return Word(base=_str(_field(v, "base", path), f"{path}.base"))
    items = _strs(v, path)
    if not items:
        raise DocumentError("an empty word must be written {\"base\": ...}", path)
    return Word(items)


# -- 2-categories and sequences

def _encode_two_category(C: FiniteTwoCategory) -> Dict[str, Any]:
    return {
        "kind": "two_category",
        "name": C.name,
        "objects": list(C.objects),
        "one_cells": _sorted_rows([[f.id, f.src, f.tgt] for f in C.one_cells.values()]),
        "two_cells": _sorted_rows([[a.id, a.src, a.tgt] for a in C.two_cells.values()]),
        "comp1": _rows_of(C.comp1),
        "vcomp": _rows_of(C.vcomp),
        "whisker_l": _rows_of(C.whisker_l),
        "whisker_r": _rows_of(C.whisker_r),
        "id1": _rows_of(C.id1),
        "id2": _rows_of(C.id2),
    }


def _decode_two_category(d: Any, path: str) -> FiniteTwoCategory:
    def rows(key: str, shape: str) -> List[Tuple[Any, ...]]:
        return _rows(_field(d, key, path), f"{path}.{key}", shape)

    return FiniteTwoCategory(
        name=_str(_field(d, "name", path), f"{path}.name"),
        objects=_strs(_field(d, "objects", path), f"{path}.objects"),
        one_cells={i: OneCell(i, s, t) for i, s, t in rows("one_cells", "sss")},
        two_cells={i: TwoCell(i, s, t) for i, s, t in rows("two_cells", "sss")},
        comp1=_table(rows("comp1", "sss")),
        vcomp=_table(rows("vcomp", "sss")),
        whisker_l=_table(rows("whisker_l", "sss")),
        whisker_r=_table(rows("whisker_r", "sss")),
        id1=_table(rows("id1", "ss")),
        id2=_table(rows("id2", "ss")),
    )


def _encode_sequence(seq: TwoFunctorSequence) -> Dict[str, Any]:
    return {
        "kind": "two_functor_sequence",
        "name": seq.name,
        "shape": seq.shape,
        "levels": [_encode_two_category(C) for C in seq.levels],
        "links": [
            {
                "name": U.name,
                "object_map": dict(U.object_map),
                "one_cell_map": dict(U.one_cell_map),
                "two_cell_map": dict(U.two_cell_map),
            }
            for U in seq.links
        ],
    }


def _decode_sequence(d: Any, path: str) -> TwoFunctorSequence:
    shape = _str(_field(d, "shape", path), f"{path}.shape")
    levels = [
        _decode_nested(x, f"{path}.levels[{k}]", FiniteTwoCategory)
        for k, x in enumerate(_list(_field(d, "levels", path), f"{path}.levels"))
    ]
    links: List[StrictTwoFunctor] = []
    for k, x in enumerate(_list(_field(d, "links", path), f"{path}.links")):
        here = f"{path}.links[{k}]"
        if k + 1 >= len(levels):
            raise DocumentError("more links than level pairs", here)
        lo, hi = levels[k], levels[k + 1]
        src, tgt = (hi, lo) if shape == "forgetful" else (lo, hi)
        links.append(StrictTwoFunctor(
            name=_str(_field(x, "name", here), f"{here}.name"),
            source=src,
            target=tgt,
            object_map=_mapping(_field(x, "object_map", here), f"{here}.object_map"),
            one_cell_map=_mapping(_field(x, "one_cell_map", here), f"{here}.one_cell_map"),
            two_cell_map=_mapping(_field(x, "two_cell_map", here), f"{here}.two_cell_map"),
        ))
    return TwoFunctorSequence(_str(_field(d, "name", path), f"{path}.name"), shape, levels, links)


# -- truncated multiple categories

def _encode_multiple(M: TruncatedMultipleCategory) -> Dict[str, Any]:
    return {
        "kind": "multiple_category",
        "name": M.name,
        "dim_bound": M.dim_bound,
        "directions": list(M.directions),
        "strict_directions": list(M.strict_directions) if M.strict_directions is not None else None,
        "cells": {idx.label: list(cs) for idx, cs in M.cells.items()},
        "faces": _rows_of(M.faces),
        "degeneracies": _rows_of(M.degeneracies),
        "comps": _rows_of(M.comps),
    }


def _index(label: str, path: str) -> MultiIndex:
    try:
        return MultiIndex.parse(label)
    except (ArgumentError, ValueError) as e:
        raise DocumentError(f"bad multi-index {label!r}: {e}", path) from e


def _decode_multiple(d: Any, path: str) -> TruncatedMultipleCategory:
    cells_doc = _field(d, "cells", path)
    if not isinstance(cells_doc, dict):
        raise DocumentError("expected an object", f"{path}.cells")
    strict = d.get("strict_directions")
    return TruncatedMultipleCategory(
        name=_str(_field(d, "name", path), f"{path}.name"),
        dim_bound=_int(_field(d, "dim_bound", path), f"{path}.dim_bound"),
        directions=tuple(
            _int(x, f"{path}.directions[{k}]")
            for k, x in enumerate(_list(_field(d, "directions", path), f"{path}.directions"))
        ),
        cells={
            _index(label, f"{path}.cells"): _strs(cs, f"{path}.cells.{label}")
            for label, cs in sorted(cells_doc.items())
        },
        faces=_table(_rows(_field(d, "faces", path), f"{path}.faces", "siss")),
        degeneracies=_table(_rows(_field(d, "degeneracies", path), f"{path}.degeneracies", "sis")),
        comps=_table(_rows(_field(d, "comps", path), f"{path}.comps", "isss")),
        strict_directions=None if strict is None else tuple(
            _int(x, f"{path}.strict_directions[{k}]")
            for k, x in enumerate(_list(strict, f"{path}.strict_directions"))
        ),
    )


# -- transversal categories and chiral structures

def _encode_transversal(T: TransversalCategory) -> Dict[str, Any]:
    return {
        "name": T.name,
        "cubes": list(T.cubes),
        "maps": _sorted_rows([[f, s, t] for f, (s, t) in T.maps.items()]),
        "comp": _rows_of(T.comp),
        "ids": _rows_of(T.ids),
    }


def _decode_transversal(d: Any, path: str) -> TransversalCategory:
    return TransversalCategory(
        name=_str(_field(d, "name", path), f"{path}.name"),
        cubes=_strs(_field(d, "cubes", path), f"{path}.cubes"),
        maps={f: (s, t) for f, s, t in _rows(_field(d, "maps", path), f"{path}.maps", "sss")},
        comp=_table(_rows(_field(d, "comp", path), f"{path}.comp", "sss")),
        ids=_table(_rows(_field(d, "ids", path), f"{path}.ids", "ss")),
    )


def _encode_chiral(A: ChiralMC) -> Dict[str, Any]:
    return {
        "kind": "chiral_mc",
        "name": A.name,
        "degree": A.degree,
        "tv": {idx.label: _encode_transversal(T) for idx, T in A.tv.items()},
        "faces": _rows_of(A.faces),
        "degeneracies": _rows_of(A.degeneracies),
        "comps": _rows_of(A.comps),
        "lam": _rows_of(A.lam),
        "rho": _rows_of(A.rho),
        "kappa": _rows_of(A.kappa),
        "chi": _rows_of(A.chi),
        "chi_invertible": A.chi_invertible,
    }


def _decode_chiral(d: Any, path: str) -> ChiralMC:
    tv_doc = _field(d, "tv", path)
    if not isinstance(tv_doc, dict):
        raise DocumentError("expected an object", f"{path}.tv")

    def rows(key: str, shape: str) -> Dict[Any, str]:
        return _table(_rows(_field(d, key, path), f"{path}.{key}", shape))

    invertible = d.get("chi_invertible", True)
    if not isinstance(invertible, bool):
        raise DocumentError("expected a boolean", f"{path}.chi_invertible")
    return ChiralMC(
        name=_str(_field(d, "name", path), f"{path}.name"),
        degree=_int(_field(d, "degree", path), f"{path}.degree"),
        tv={
            _index(label, f"{path}.tv"): _decode_transversal(T, f"{path}.tv.{label}")
            for label, T in sorted(tv_doc.items())
        },
        faces=rows("faces", "siss"),
        degeneracies=rows("degeneracies", "sis"),
        comps=rows("comps", "isss"),
        lam=rows("lam", "sis"),
        rho=rows("rho", "sis"),
        kappa=rows("kappa", "issss"),
        chi=rows("chi", "iisssss"),
        chi_invertible=invertible,
    )


class _Structures:
    """Names the chiral structures a morphism document refers to, once per object."""

    def __init__(self) -> None:
        self.docs: Dict[str, Dict[str, Any]] = {}
        self._names: Dict[int, str] = {}

    def add(self, A: ChiralMC) -> str:
        name = self._names.get(id(A))
        if name is not None:
            return name
        name, n = A.name, 1
        while name in self.docs:
            n += 1
            name = f"{A.name}#{n}"
        self._names[id(A)] = name
        self.docs[name] = _encode_chiral(A)
        return name


def _encode_morphism_body(R: PMorphism, structures: _Structures) -> Dict[str, Any]:
    return {
        "name": R.name,
        "p": R.p,
        "source": structures.add(R.source),
        "target": structures.add(R.target),
        "cell_map": dict(R.cell_map),
        "unit": _rows_of(R.unit),
        "comp": _rows_of(R.comp),
    }


def _decode_structures(d: Any, path: str) -> Dict[str, ChiralMC]:
    doc = _field(d, "structures", path)
    if not isinstance(doc, dict):
        raise DocumentError("expected an object", f"{path}.structures")
    return {
        name: _decode_nested(x, f"{path}.structures.{name}", ChiralMC)
        for name, x in sorted(doc.items())
    }


def _decode_morphism_body(d: Any, path: str, structures: Dict[str, ChiralMC]) -> PMorphism:
    def ref(key: str) -> ChiralMC:
        name = _str(_field(d, key, path), f"{path}.{key}")
        if name not in structures:
            raise DocumentError(f"unknown structure {name!r}", f"{path}.{key}")
        return structures[name]

    return PMorphism(
        name=_str(_field(d, "name", path), f"{path}.name"),
        source=ref("source"),
        target=ref("target"),
        p=_int(_field(d, "p", path), f"{path}.p"),
        cell_map=_mapping(_field(d, "cell_map", path), f"{path}.cell_map"),
        unit=_table(_rows(_field(d, "unit", path), f"{path}.unit", "sis")),
        comp=_table(_rows(_field(d, "comp", path), f"{path}.comp", "isss")),
    )


def _encode_pmorphism(R: PMorphism) -> Dict[str, Any]:
    structures = _Structures()
    body = _encode_morphism_body(R, structures)
    return {"kind": "p_morphism", "structures": structures.docs, **body}


def _decode_pmorphism(d: Any, path: str) -> PMorphism:
    return _decode_morphism_body(d, path, _decode_structures(d, path))


def _encode_pqcube(phi: PQCube) -> Dict[str, Any]:
    structures = _Structures()
    morphisms = {k: _encode_morphism_body(getattr(phi, k), structures) for k in ("R", "S", "U", "V")}
    return {
        "kind": "pq_cube",
        "name": phi.name,
        "structures": structures.docs,
        "morphisms": morphisms,
        "components": dict(phi.components),
    }


def _decode_pqcube(d: Any, path: str) -> PQCube:
    structures = _decode_structures(d, path)
    ms = _field(d, "morphisms", path)
    R, S, U, V = (
        _decode_morphism_body(_field(ms, k, f"{path}.morphisms"), f"{path}.morphisms.{k}", structures)
        for k in ("R", "S", "U", "V")
    )
    return PQCube(
        _str(_field(d, "name", path), f"{path}.name"), R, S, U, V,
        _mapping(_field(d, "components", path), f"{path}.components"),
    )


# -- graphs of categories, weak double categories and pseudo algebras

def _encode_graph(G: CatGraph) -> Dict[str, Any]:
    return {
        "kind": "cat_graph",
        "name": G.name,
        "A0": _encode_transversal(G.A0),
        "A1": _encode_transversal(G.A1),
        "faces": _rows_of(G.faces),
    }


def _decode_graph(d: Any, path: str) -> CatGraph:
    faces = _rows(_field(d, "faces", path), f"{path}.faces", "sss")
    for k, (_, alpha, _) in enumerate(faces):
        if alpha not in ("-", "+"):
            raise DocumentError(f"face sign must be '-' or '+', got {alpha!r}", f"{path}.faces[{k}][1]")
    return CatGraph(
        _str(_field(d, "name", path), f"{path}.name"),
        _decode_transversal(_field(d, "A0", path), f"{path}.A0"),
        _decode_transversal(_field(d, "A1", path), f"{path}.A1"),
        _table(faces),
    )


def _encode_double(D: WeakDoubleCategory) -> Dict[str, Any]:
    A = D.core
    return {
        "kind": "weak_double_category",
        "name": D.name,
        "graph": _encode_graph(D.graph),
        "vcomp": _rows_of({(a, b): c for (_, a, b), c in A.comps.items()}),
        "vid": _rows_of({c: e for (c, _), e in A.degeneracies.items()}),
        "assoc": _rows_of({k[1:]: f for k, f in A.kappa.items()}),
        "lunit": _rows_of({u: f for (u, _), f in A.lam.items()}),
        "runit": _rows_of({u: f for (u, _), f in A.rho.items()}),
    }


def _decode_double(d: Any, path: str) -> WeakDoubleCategory:
    def rows(key: str, shape: str) -> Dict[Any, str]:
        return _table(_rows(_field(d, key, path), f"{path}.{key}", shape))

    return weak_double_category(
        _str(_field(d, "name", path), f"{path}.name"),
        _decode_nested(_field(d, "graph", path), f"{path}.graph", CatGraph),
        vcomp=rows("vcomp", "sss"),
        vid=rows("vid", "ss"),
        assoc=rows("assoc", "ssss"),
        lunit=rows("lunit", "ss"),
        runit=rows("runit", "ss"),
    )


def _encode_algebra(P: PseudoAlgebra) -> Dict[str, Any]:
    return {
        "kind": "pseudo_algebra",
        "name": P.name,
        "bound": P.bound,
        "carrier": _encode_graph(P.carrier),
        "structure": _sorted_rows([[_word_doc(w), c] for w, c in P.structure.items()]),
        "omega": dict(P.omega),
        "kappa": _sorted_rows([[[_word_doc(w) for w in n], c] for n, c in P.kappa.items()]),
    }


def _decode_algebra(d: Any, path: str) -> PseudoAlgebra:
    structure: Dict[Word, str] = {}
    for k, row in enumerate(_list(_field(d, "structure", path), f"{path}.structure")):
        here = f"{path}.structure[{k}]"
        row = _list(row, here)
        if len(row) != 2:
            raise DocumentError("expected [word, cell]", here)
        structure[_word(row[0], f"{here}[0]")] = _str(row[1], f"{here}[1]")
    kappa: Dict[Tuple[Word, ...], str] = {}
    for k, row in enumerate(_list(_field(d, "kappa", path), f"{path}.kappa")):
        here = f"{path}.kappa[{k}]"
        row = _list(row, here)
        if len(row) != 2:
            raise DocumentError("expected [nest, cell]", here)
        nest = tuple(_word(w, f"{here}[0][{m}]") for m, w in enumerate(_list(row[0], f"{here}[0]")))
        kappa[nest] = _str(row[1], f"{here}[1]")
    return PseudoAlgebra(
        name=_str(_field(d, "name", path), f"{path}.name"),
        carrier=_decode_nested(_field(d, "carrier", path), f"{path}.carrier", CatGraph),
        bound=_int(_field(d, "bound", path), f"{path}.bound"),
        structure=structure,
        omega=_mapping(_field(d, "omega", path), f"{path}.omega"),
        kappa=kappa,
    )


# -- fixtures

FIXTURE_REGISTRIES: Tuple[Mapping[str, Callable[[], Any]], ...] = (
    fixtures.TWO_CATEGORIES,
    fixtures.CHIRAL,
    fixtures.DOUBLE,
    fixtures.GRAPHS,
)


def fixture_names() -> List[str]:
    return sorted(name for reg in FIXTURE_REGISTRIES for name in reg)


def _decode_fixture(d: Any, path: str) -> Any:
    name = _str(_field(d, "name", path), f"{path}.name")
    for reg in FIXTURE_REGISTRIES:
        if name in reg:
            return reg[name]()
    raise DocumentError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}", f"{path}.name")


_DECODERS: Dict[str, Callable[[Any, str], Any]] = {
    "two_category": _decode_two_category,
    "multiple_category": _decode_multiple,
    "two_functor_sequence": _decode_sequence,
    "chiral_mc": _decode_chiral,
    "p_morphism": _decode_pmorphism,
    "pq_cube": _decode_pqcube,
    "cat_graph": _decode_graph,
    "weak_double_category": _decode_double,
    "pseudo_algebra": _decode_algebra,
    "fixture": _decode_fixture,
}

_ENCODERS: Tuple[Tuple[type, Callable[[Any], Dict[str, Any]]], ...] = (
    (FiniteTwoCategory, _encode_two_category),
    (TruncatedMultipleCategory, _encode_multiple),
    (TwoFunctorSequence, _encode_sequence),
    (ChiralMC, _encode_chiral),
    (PMorphism, _encode_pmorphism),
    (PQCube, _encode_pqcube),
    (CatGraph, _encode_graph),
    (WeakDoubleCategory, _encode_double),
    (PseudoAlgebra, _encode_algebra),
)


def _decode_nested(d: Any, path: str, expected: type) -> Any:
    obj = decode(d, path)
    if not isinstance(obj, expected):
        raise DocumentError(f"expected a {expected.__name__}, got {type(obj).__name__}", path)
    return obj


def decode(doc: Any, path: str = "$") -> Structure:
    """Build the structure a document describes. Malformed tables raise DocumentError at their path."""
    kind = _str(_field(doc, "kind", path), f"{path}.kind")
    decoder = _DECODERS.get(kind)
    if decoder is None:
        raise DocumentError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", f"{path}.kind")
    try:
        return decoder(doc, path)
    except DocumentError:
        raise
    except (StructuralError, BoundaryError, ArgumentError) as e:
        raise DocumentError(str(e), path) from e


def encode(obj: Structure) -> Dict[str, Any]:
    for cls, encoder in _ENCODERS:
        if isinstance(obj, cls):
            return encoder(obj)
    raise ArgumentError(f"no document kind for {type(obj).__name__}")


def kind_of(obj: Structure) -> str:
    return encode(obj)["kind"]


def dumps(obj: Union[Structure, Dict[str, Any]]) -> str:
    """Deterministic JSON text for a structure or an already encoded document."""
    doc = obj if isinstance(obj, dict) else encode(obj)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Structure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", f"$ (line {e.lineno}, column {e.colno})") from e
    return decode(doc)


def load_path(path: Union[str, Path]) -> Structure:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {p}: {e.strerror or e}") from e
    obj = loads(text)
    logger.debug(f"Loaded {type(obj).__name__} from {p}")
    return obj


def save_path(obj: Union[Structure, Dict[str, Any]], path: Union[str, Path]) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(dumps(obj), encoding="utf-8")


def report_json(report: ValidationReport, extra: Optional[Dict[str, Any]] = None) -> str:
    """A report as sorted JSON; extra fields (constructed documents, coskeletal results) sit beside it."""
    doc: Dict[str, Any] = dict(report.to_dict())
    if extra:
        doc.update(extra)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
