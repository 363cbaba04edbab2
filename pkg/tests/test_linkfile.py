import pytest

from gausslink import builtin_links, lk_link
from gausslink.linkfile import LinkFileError, link_from_dict, link_to_dict, read_link, write_link


@pytest.mark.parametrize("name", ["hopf_square", "hopf_triangle", "solomon", "whitehead"])


def test_round_trip_is_bit_exact(tmp_path, name):
    link = builtin_links()[name]
    path = tmp_path / f"{name}.json"
    write_link(link, path)
    back = read_link(path)
    assert back.name == name
    assert lk_link(back).lk_total == lk_link(link).lk_total


def test_awkward_floats_survive(tmp_path):
    doc = {"components": [
        {"vertices": [[0.1, 1e-300, -2.5e17], [1 / 3, 0, 0]], "closed": False},
        {"vertices": [[0, 0, 1], [0, 1, 1]], "closed": False},
    ]}
    link = link_from_dict(doc)
    write_link(link, tmp_path / "x.json")
    assert link_to_dict(read_link(tmp_path / "x.json")) == doc


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"components": "no"},
        {"components": [{"vertices": [[0, 0, 0], [1, 0, 0]]}]},
        {"components": [{"vertices": [[0, 0, 0]]}, {"vertices": [[0, 0, 0], [1, 0, 0]]}]},
        {"components": [{"vertices": [[0, 0], [1, 0, 0]]}, {"vertices": [[0, 0, 0], [1, 0, 0]]}]},
        {"components": [{"vertices": [[0, 0, "x"], [1, 0, 0]]}, {"vertices": [[0, 0, 0], [1, 0, 0]]}]},
        {"components": [{"vertices": [[0, 0, True], [1, 0, 0]]}, {"vertices": [[0, 0, 0], [1, 0, 0]]}]},
        {"components": [{"vertices": [[0, 0, 0], [1, 0, 0]], "closed": 1},
                        {"vertices": [[0, 0, 0], [1, 0, 0]]}]},
    ],
)


def test_rejects_malformed(doc):
    with pytest.raises(LinkFileError):
        link_from_dict(doc)


def test_nonfinite_rejected(tmp_path):
    p = tmp_path / "nan.json"
    p.write_text('{"components": [{"vertices": [[NaN, 0, 0], [1, 0, 0]]},'
                 ' {"vertices": [[0, 0, 0], [1, 0, 0]]}]}')
    with pytest.raises(LinkFileError):
        read_link(p)


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    with pytest.raises(LinkFileError):
        read_link(p)
