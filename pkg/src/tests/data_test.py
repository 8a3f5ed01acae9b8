import os

import numpy as np
import pytest

from src.config import settings
from src.data.data_manager import DataManager
from src.data.entities import InputDocument
from src.data.generators import (block_triangular_set, jordan_block, paper_examples, random_connected_set,
                                 random_matrix_set, scaled_pair)
from src.data.scripts import write_examples
from src.graph import build_graph, scc


def test_document_round_trip(tmp_path):
    manager = DataManager(data_path=str(tmp_path))
    s = scaled_pair(4)

    path = manager.save_document("examples", "scaled_pair", InputDocument.from_matrix_set(s))
    assert path == f"{tmp_path}/examples/scaled_pair.json"
    assert InputDocument.load(path).to_matrix_set() == s


def test_save_document_overwrites(tmp_path):
    manager = DataManager(data_path=str(tmp_path))

    manager.save_document("examples", "set", InputDocument.from_matrix_set(scaled_pair(4)))
    path = manager.save_document("examples", "set", InputDocument.from_matrix_set(jordan_block()))
    assert InputDocument.load(path).to_matrix_set() == jordan_block()


def test_create_dataframe_from_models():
    df = DataManager.create_dataframe(InputDocument.from_matrix_set(scaled_pair()))

    assert list(df.columns) == ["dimension", "matrices", "encoding"]
    assert df["dimension"][0] == 2


def test_write_examples(tmp_path, monkeypatch):
    monkeypatch.setattr(settings, "data_path", str(tmp_path))
    write_examples.main()

    written = sorted(os.listdir(tmp_path / "examples"))
    assert written == sorted(f"{name}.json" for name in paper_examples())


def test_paper_examples():
    examples = paper_examples()

    assert examples["scaled_pair"].matrices[0].entries[0][1] * 10 == 1
    assert examples["zero"].all_zero
    assert not examples["jordan_block"].all_zero


@pytest.mark.parametrize("seed", range(10))
def test_random_sets(seed):
    rng = np.random.default_rng(seed)
    s = random_matrix_set(rng, 3, 2, density=0.1)
    connected = random_connected_set(rng, 3, 2)

    assert not s.all_zero
    assert all(0 <= v <= 3 for m in s.matrices for row in m.entries for v in row)
    assert all(v.denominator <= 4 for m in s.matrices for row in m.entries for v in row)
    assert scc(build_graph(connected)).is_strongly_connected


def test_random_sets_are_reproducible():
    first = random_matrix_set(np.random.default_rng(7), 3, 2)
    second = random_matrix_set(np.random.default_rng(7), 3, 2)

    assert first == second


def test_block_triangular_set():
    s = block_triangular_set((2, 1), [(0, 1)])

    assert s.matrices[0].entries == ((2, 1), (0, 1))
    with pytest.raises(ValueError):
        block_triangular_set((2, 1), [(1, 0)])
