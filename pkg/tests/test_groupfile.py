"""Group-file parsing, serialization, and positioned errors."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusquot.cyclo import Cyclotomic
from torusquot.errors import GroupFileError
from torusquot.fixtures import FIXTURES, G1280_FILE, G216_FILE, S4_FILE
from torusquot.groupfile import (
    GeneratorSpec,
    GroupFile,
    parse_form_file,
    parse_group,
    parse_group_text,
    parse_lattice_token,
    serialize_group,
    parse_wedge_pairs,
)
from torusquot.groups import Monomial


def _same_content(a: GroupFile, b: GroupFile) -> bool:
    return (a.conductor == b.conductor
            and a.degree == b.degree
            and [g.element for g in a.generators] == [g.element for g in b.generators]
            and a.form == b.form
            and a.lattice_token == b.lattice_token)


@pytest.mark.parametrize("text", [S4_FILE, G216_FILE, G1280_FILE])
def test_fixture_files_round_trip(text):
    gf = parse_group_text(text)
    again = parse_group_text(serialize_group(gf))
    assert _same_content(gf, again)


def test_monomial_block_semantics():
    gf = parse_group_text(
        "conductor 4\ndegree 2\ngenerator monomial\nmap 2 1\nscalars z^1; -1\n")
    el = gf.generators[0].element
    # row 1 reads i times coordinate 2, row 2 reads -1 times coordinate 1
    rows = el.to_dense().rows
    assert rows[0][1] == Cyclotomic.zeta(4, 1)
    assert rows[1][0] == -1
    assert rows[0][0].is_zero() and rows[1][1].is_zero()


def test_dense_block_and_form_dense():
    text = (
        "conductor 1\ndegree 2\n"
        "generator dense\nrow 0; 1\nrow 1; 0\n"
        "form dense\nrow 0; 1\nrow -1; 0\n")
    gf = parse_group_text(text)
    assert gf.form is not None and gf.form.is_nondegenerate()
    again = parse_group_text(serialize_group(gf))
    assert _same_content(gf, again)


def test_perm_block():
    gf = parse_group_text("conductor 1\ndegree 3\ngenerator perm\nmap 2 3 1\n")
    el = gf.generators[0].element
    assert el.to_dense().rows[0][1] == 1


def test_comments_and_blank_lines_ignored():
    gf = parse_group_text(
        "# heading\n\nconductor 1 # trailing\ndegree 1\n\n"
        "generator perm # style\nmap 1\n")
    assert gf.degree == 1


def test_header_order_free():
    gf = parse_group_text("degree 1\nconductor 3\ngenerator perm\nmap 1\n")
    assert gf.conductor == 3


def test_lattice_tokens():
    gf = parse_group_text(
        "conductor 4\ndegree 1\ngenerator perm\nmap 1\nlattice z^1\n")
    assert gf.lattice is not None
    assert gf.lattice.omega == Cyclotomic.zeta(4, 1)
    spec, token = parse_lattice_token("1", 4)
    assert token == "1" and spec.contains(Cyclotomic.from_value(5))


def test_wedge_pair_parsing():
    assert parse_wedge_pairs("1:2 3:4", 4) == [(0, 1), (2, 3)]
    with pytest.raises(GroupFileError):
        parse_wedge_pairs("1:1", 2)
    with pytest.raises(GroupFileError):
        parse_wedge_pairs("1:2 2:3", 4)  # reused coordinate
    with pytest.raises(GroupFileError):
        parse_wedge_pairs("1-2", 2)
    with pytest.raises(GroupFileError):
        parse_wedge_pairs("", 2)


def _expect_error(text, fragment, line=None):
    with pytest.raises(GroupFileError) as exc:
        parse_group_text(text)
    assert fragment in str(exc.value)
    if line is not None:
        assert exc.value.line == line
    return exc.value


def test_malformed_entry_is_positioned():
    err = _expect_error(
        "conductor 4\ndegree 1\ngenerator monomial\nmap 1\nscalars z^\n",
        "scalar entry", line=5)
    assert err.column is not None


def test_missing_headers():
    _expect_error("degree 2\ngenerator perm\nmap 1 2\n", "missing conductor")
    _expect_error("conductor 1\ngenerator perm\nmap 1\n", "missing degree")


def test_duplicate_headers_rejected():
    _expect_error("conductor 1\nconductor 2\ndegree 1\ngenerator perm\nmap 1\n",
                  "duplicate conductor")


def test_header_after_block_rejected():
    _expect_error("conductor 1\ndegree 1\ngenerator perm\nmap 1\ndegree 2\n",
                  "before all blocks", line=5)


def test_map_must_be_permutation():
    _expect_error("conductor 1\ndegree 2\ngenerator perm\nmap 1 1\n",
                  "permutation", line=4)


def test_map_length_checked():
    _expect_error("conductor 1\ndegree 3\ngenerator perm\nmap 1 2\n",
                  "lists 2 coordinates", line=4)


def test_map_index_range_checked():
    _expect_error("conductor 1\ndegree 2\ngenerator perm\nmap 1 5\n",
                  "outside 1..2", line=4)


def test_monomial_needs_both_lines():
    _expect_error("conductor 1\ndegree 1\ngenerator monomial\nmap 1\n",
                  "missing its scalars")
    _expect_error("conductor 1\ndegree 1\ngenerator monomial\nscalars 1\n",
                  "missing its map")


def test_dense_row_count_checked():
    _expect_error("conductor 1\ndegree 2\ngenerator dense\nrow 1; 0\n",
                  "has 1 rows")
    _expect_error("conductor 1\ndegree 2\ngenerator dense\nrow 1; 0; 0\nrow 0; 1\n",
                  "row has 3 entries", line=4)


def test_unknown_directive():
    _expect_error("conductor 1\ndegree 1\ngenerator perm\nmap 1\nwhatever x\n",
                  "unknown directive", line=5)


def test_no_generators():
    _expect_error("conductor 1\ndegree 1\n", "no generator blocks")


def test_duplicate_form_and_lattice():
    base = "conductor 1\ndegree 2\ngenerator perm\nmap 1 2\n"
    _expect_error(base + "form wedge 1:2\nform wedge 1:2\n", "duplicate form")
    _expect_error(base + "lattice 1\nlattice 1\n", "duplicate lattice")


def test_bad_lattice_tokens():
    base = "conductor 4\ndegree 1\ngenerator perm\nmap 1\n"
    _expect_error(base + "lattice q\n", "must be z^k or 1")
    # z^2 at conductor 4 is -1, which spans no lattice
    _expect_error(base + "lattice z^2\n", "-1")


def test_zero_scalar_rejected():
    _expect_error("conductor 1\ndegree 1\ngenerator monomial\nmap 1\nscalars 0\n",
                  "nonzero")


def test_form_must_be_antisymmetric():
    _expect_error(
        "conductor 1\ndegree 2\ngenerator perm\nmap 1 2\n"
        "form dense\nrow 1; 0\nrow 0; 1\n",
        "antisymmetric")


def test_parse_group_reads_files(tmp_path):
    path = tmp_path / "a.group"
    path.write_text(S4_FILE)
    gf = parse_group(path)
    assert gf.degree == 3
    assert len(gf.generators) == 2
    with pytest.raises(GroupFileError):
        parse_group(tmp_path / "missing.group")


def test_parse_form_file(tmp_path):
    path = tmp_path / "omega.form"
    path.write_text("form wedge 1:2 3:4\n")
    form = parse_form_file(path, conductor=4, degree=4)
    assert form.is_nondegenerate()
    path.write_text("conductor 1\nform dense\nrow 0; 2\nrow -2; 0\n")
    form = parse_form_file(path, conductor=4, degree=2)
    assert form.matrix[0][1] == 2
    path.write_text("form wedge 1:2\nlattice 1\n")
    with pytest.raises(GroupFileError):
        parse_form_file(path, conductor=1, degree=2)


# -- randomized round trips for monomial blocks


@st.composite
def _monomials(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    perm = draw(st.permutations(range(n)))
    conductor = draw(st.sampled_from((1, 3, 4, 8, 12)))
    scalars = [Cyclotomic.zeta(conductor, draw(st.integers(0, conductor - 1)))
               for _ in range(n)]
    return conductor, Monomial(perm, scalars)


@settings(deadline=None, max_examples=60)
@given(data=_monomials())
def test_random_monomial_round_trip(data):
    conductor, el = data
    gf = GroupFile(conductor=conductor, degree=el.degree,
                   generators=[GeneratorSpec("monomial", el)])
    again = parse_group_text(serialize_group(gf))
    assert again.generators[0].element == el
