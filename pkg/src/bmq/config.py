"""Shipped data, the frozen path semantics and data vector loading."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .biquandle import Biquandle, BiquandleMap, enumerate_endomorphisms, is_homomorphism
from .bqmodule import BiquandleModule
from .errors import DataError

DATA_DIR = Path(__file__).resolve().parent / "data"
CORPUS_DIR = DATA_DIR / "corpus"
SEMANTICS_FILE = DATA_DIR / "semantics.json"


def default_semantics():
    """The calibrated semantics committed in ``data/semantics.json``."""
    from .paths import PathSemantics

    return PathSemantics(**_semantics_json())


@lru_cache(maxsize=1)
def _semantics_json() -> dict:
    return json.loads(SEMANTICS_FILE.read_text(encoding="utf-8"))


def _read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON ({exc.msg}, line {exc.lineno})") from exc


def load_biquandle(path) -> Biquandle:
    return Biquandle.from_json(_read_json(path))


def load_module(path, X: Biquandle) -> BiquandleModule:
    return BiquandleModule.from_json(X, _read_json(path))


def load_endomorphisms(path, X: Biquandle) -> list[BiquandleMap]:
    data = _read_json(path)
    images = data["images"] if isinstance(data, dict) else data
    maps = []
    for i, image in enumerate(images):
        image = tuple(image)
        if len(image) != X.n or not is_homomorphism(X, X, image):
            raise DataError(f"{path}: map {i + 1} {list(image)} is not an endomorphism")
        maps.append(BiquandleMap(X, X, image))
    return maps


@dataclass(frozen=True)
class DataVector:
    """A biquandle, a module over it and the endomorphism set S."""

    name: str
    X: Biquandle
    M: BiquandleModule
    S: tuple[BiquandleMap, ...]
    all_endos: bool

    def digest(self) -> str:
        """Hash of the tables and maps; independent of file names."""
        payload = json.dumps({
            "X": self.X.to_json(), "M": self.M.to_json(), "S": [list(f.image) for f in self.S],
        }, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()


def vector_path(name_or_path) -> Path:
    """A shipped vector by name, or any vector file by path."""
    path = Path(name_or_path)
    if path.suffix != ".json" and not path.exists():
        path = DATA_DIR / "vectors" / f"{name_or_path}.json"
    if not path.exists():
        raise DataError(f"no data vector {name_or_path!r}")
    return path


def load_vector(name_or_path) -> DataVector:
    path = vector_path(name_or_path)
    spec = _read_json(path)
    base = path.parent
    X = load_biquandle(base / spec["biquandle"])
    M = load_module(base / spec["module"], X)
    endos = spec.get("endomorphisms", "all")
    if endos == "all":
        S = enumerate_endomorphisms(X)
    else:
        S = load_endomorphisms(base / endos, X)
    return DataVector(path.stem, X, M, tuple(S), endos == "all")


def build_vector(X: Biquandle, M: BiquandleModule, S=None, name="custom") -> DataVector:
    if M.X != X:
        raise DataError("module is defined over a different biquandle")
    if S is None:
        return DataVector(name, X, M, tuple(enumerate_endomorphisms(X)), True)
    return DataVector(name, X, M, tuple(S), False)


def corpus_files(family: str) -> list[Path]:
    """Diagram files of a shipped corpus family, in table order."""
    folder = CORPUS_DIR / family
    index = folder / "index.json"
    if index.exists():
        return [folder / f"{name}.pdk" for name in _read_json(index)["order"]]
    return sorted(folder.glob("*.pdk"))
