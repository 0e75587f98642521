import pytest

import otguard


E1 = [(0, 3), (0, 2), (2, 2), (2, 0), (5, 0), (5, 1), (7, 1), (7, 4)]


def test_terrain_roundtrip():
    t = otguard.Terrain(E1)
    assert len(t) == 8
    assert t.classes() == ["RR", "LC", "RR", "LC", "RC", "LR", "RC", "LR"]
    text = otguard.serialize_terrain(t)
    assert otguard.serialize_terrain(otguard.parse_terrain(text)) == text


def test_validation_errors():
    with pytest.raises(ValueError):
        otguard.Terrain([(0, 0), (1, 1)])


def test_visibility():
    t = otguard.Terrain(E1)
    assert otguard.sees(t, 1, 7)
    assert not otguard.sees(t, 1, 5)
    m = otguard.visibility_matrix(t)
    assert m[1][7] and m[7][1]
    assert all(m[2][v] for v in range(8))


def test_left_sweep_and_union():
    t = otguard.Terrain(E1)
    left = otguard.run_left_sweep(t)
    assert left["guards"] == [7]
    assert left["lists"] == [[3, 1]]

    sol = otguard.approx_guard_set(t)
    assert sol["guards"] == [2, 7]
    assert sol["provenance"] == ["right", "left"]
    covered, uncovered = otguard.verify_solution(t, sol["guards"])
    assert covered and uncovered == []


def test_exact_and_ratio():
    t = otguard.Terrain(E1)
    opt = otguard.minimum_guard_set(t)
    assert opt == [2]
    sol = otguard.approx_guard_set(t)
    assert len(opt) <= len(sol["guards"]) <= 2 * len(opt)


def test_flat_ends_extend_internally():
    t = otguard.Terrain([(0, 1), (2, 1), (2, 0), (4, 0), (4, 2), (6, 2)])
    sol = otguard.approx_guard_set(t)
    assert sol["extended"]
    covered, _ = otguard.verify_solution(t, sol["guards"])
    assert covered


def test_generator_smoke():
    t = otguard.random_terrain(seed=42, steps=12, ends="vertical")
    assert t.starts_vertical() and t.ends_vertical()
    sol = otguard.approx_guard_set(t)
    covered, _ = otguard.verify_solution(t, sol["guards"])
    assert covered


def test_fixture_t3_exists():
    f = otguard.fixtures()
    assert {"E1", "E2", "E1_mirror", "T3"} <= set(f.keys())


def test_render_svg():
    t = otguard.Terrain(E1)
    sol = otguard.approx_guard_set(t)
    svg = otguard.render_svg(t, sol["guards"], sol["lists"])
    assert svg.count("<circle") == 2
    assert "<polyline" in svg
