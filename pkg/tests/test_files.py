import json

import pytest

from setsol import PairMap, SearchSpec, standard_semigroup
from setsol.corpus import corpus_objects
from setsol.files import (
    InputError,
    load_quadruple,
    load_search_spec,
    load_semigroup,
    load_solution,
    load_system,
    write_json,
)


def test_round_trips(tmp_path):
    sg = standard_semigroup("rectangular_band", rows=2, cols=2)
    write_json(tmp_path / "sg.json", sg.to_dict())
    assert load_semigroup(tmp_path / "sg.json") == sg

    s = PairMap.identity(4)
    write_json(tmp_path / "s.json", s.to_dict(sg.to_dict()))
    got, carrier = load_solution(tmp_path / "s.json")
    assert got == s and carrier == sg

    quad = corpus_objects("matched_quadruples")[0]
    write_json(tmp_path / "q.json", quad.to_dict())
    write_json(tmp_path / "sys.json", quad.system.to_dict())
    assert load_quadruple(tmp_path / "q.json").to_dict() == quad.to_dict()
    assert load_system(tmp_path / "sys.json").to_dict() == quad.system.to_dict()

    spec = SearchSpec("both", "product_form_theta", sg, mode="collect")
    write_json(tmp_path / "spec.json", spec.to_dict())
    assert load_search_spec(tmp_path / "spec.json") == spec


@pytest.mark.parametrize("content,loader", [
    ("{not json", load_semigroup),
    (json.dumps({"order": 2, "table": [[0, 1], [1, 1], [0, 0]]}), load_semigroup),
    (json.dumps({"order": 2, "table": [[1, 0], [0, 0]]}), load_semigroup),
    (json.dumps({"order": 1, "first": [[0]]}), load_solution),
    (json.dumps({"target": "pentagon", "colour": "red"}), load_search_spec),
    (json.dumps([1, 2]), load_search_spec),
    (json.dumps({"S": {"order": 1, "table": [[0]]}}), load_system),
])
def test_malformed_inputs_name_the_file(tmp_path, content, loader):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(InputError) as err:
        loader(path)
    assert err.value.path == str(path) and str(path) in str(err.value)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        load_semigroup(tmp_path / "absent.json")
