import pytest

from moyclock.generate import LATTICE_BUDGET, _lattice_bound, generate
from moyclock.plane_graph import digon


def test_determinism():
    a = generate(42, 10).to_json()
    b = generate(42, 10).to_json()
    assert a == b


def test_size_one_is_digon():
    for seed in (1, 2, 17):
        assert generate(seed, 1).to_json() == digon().to_json()
        assert generate(seed, 2).to_json() == digon().to_json()


def test_bad_size():
    with pytest.raises(ValueError):
        generate(1, 0)


def test_all_valid_and_within_budget():
    for seed in range(1, 60):
        g = generate(seed, 2 + seed % 11)
        assert g.validate().ok, f"seed {seed}"
        assert _lattice_bound(g.reduce_to_trivial()) <= LATTICE_BUDGET


def test_corpus_has_colored_graphs():
    colored = sum(
        0 if generate(seed, 2 + seed % 11).is_trivially_colored() else 1
        for seed in range(1, 60)
    )
    assert colored > 10


def test_seeds_differ():
    outputs = {generate(seed, 8).to_json() for seed in range(1, 20)}
    assert len(outputs) > 10
