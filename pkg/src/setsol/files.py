"""JSON reading and writing for the file formats."""

import json
from pathlib import Path

from .constructions import MatchedSystem, SolutionQuadruple
from .enumeration import SearchSpec
from .errors import BadParams
from .semigroup import FiniteSemigroup
from .solution import PairMap


class InputError(BadParams):
    """A file could not be read or does not have the expected shape."""

    def __init__(self, path, message):
        self.path = str(path)
        super().__init__(f"{path}: {message}")


def read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(path, exc.strerror or str(exc)) from None
    except json.JSONDecodeError as exc:
        raise InputError(path, f"invalid JSON ({exc.msg}, line {exc.lineno})") from None


def _load(path, parse):
    data = read_json(path)
    try:
        return parse(data)
    except InputError:
        raise
    except (BadParams, ValueError, TypeError, KeyError) as exc:
        raise InputError(path, str(exc)) from None


def load_semigroup(path):
    return _load(path, FiniteSemigroup.from_dict)


def load_solution(path):
    """A PairMap, plus the semigroup cross-reference when present."""

    def parse(data):
        s = PairMap.from_dict(data)
        sg = data.get("semigroup")
        return s, None if sg is None else FiniteSemigroup.from_dict(sg)

    return _load(path, parse)


def load_system(path):
    return _load(path, MatchedSystem.from_dict)


def load_quadruple(path):
    return _load(path, SolutionQuadruple.from_dict)


SPEC_FIELDS = {"target", "shape", "order", "semigroup", "mode", "limit", "workers", "force"}


def search_spec_from_dict(data):
    if not isinstance(data, dict):
        raise BadParams("search spec must be an object")
    extra = set(data) - SPEC_FIELDS
    if extra:
        raise BadParams(f"unknown search spec fields {sorted(extra)}")
    kwargs = dict(data)
    if kwargs.get("semigroup") is not None:
        kwargs["semigroup"] = FiniteSemigroup.from_dict(kwargs["semigroup"])
    return SearchSpec(**kwargs)


def load_search_spec(path):
    return _load(path, search_spec_from_dict)


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def write_json(path, obj):
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")
